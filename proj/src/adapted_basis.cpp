#include "majorana/adapted_basis.hpp"

#include "majorana/husimi.hpp"
#include "majorana/stellar.hpp"

namespace majorana {

namespace {

std::vector<Direction> basis_directions(const Direction& c0, const Constellation& stars) {
  std::vector<Direction> out{c0};
  for (const auto& d : stars.directions()) out.push_back(d);
  return out;
}

}  // namespace

AdaptedBasis adapted_basis(const SpinState& state, const Tolerances& tol) {
  if (!state.is_normalized(tol.normalization)) throw Error(ErrorCode::InvalidArgument, "state is not normalized");
  const Constellation stars = constellation(state, tol);
  if (stars.degenerate()) throw Error(ErrorCode::DegenerateConstellation, "the adapted basis needs N distinct stars");
  // Time reversal maps the constellation to its antipodes.
  const ClosestSC closest = closest_sc(time_reversal(state), tol);
  AdaptedBasis out{SCBasis(basis_directions(closest.direction, stars), tol), {}, closest.ties, closest.warnings};
  out.coefficients = expand_in_sc_basis(state, out.basis, tol);
  out.warnings.insert(out.warnings.end(), out.coefficients.warnings.begin(), out.coefficients.warnings.end());
  return out;
}

}  // namespace majorana

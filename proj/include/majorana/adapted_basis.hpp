#pragma once

#include <string>
#include <vector>

#include "majorana/sc_basis.hpp"

namespace majorana {

/// SC basis built from the state itself: c_1..c_N are its stars and c_0 is
/// the coherent state closest to the antipodal constellation.
struct AdaptedBasis {
  SCBasis basis;
  ExpansionCoefficients coefficients;
  /// Every candidate for c_0 when the closest coherent state is not unique.
  std::vector<Direction> ties;
  std::vector<std::string> warnings;
};

/// Throws DegenerateConstellation when two stars coincide.
AdaptedBasis adapted_basis(const SpinState& state, const Tolerances& tol = {});

}  // namespace majorana

#pragma once

#include <vector>

#include "majorana/constellation.hpp"
#include "majorana/polynomial.hpp"
#include "majorana/spin_state.hpp"

namespace majorana {

/// Spin-1/2 state (cos(theta/2), e^{i phi} sin(theta/2)).
Eigen::Vector2cd spinor(const Direction& n);

/// Stars of a state: roots of its Majorana polynomial.
Constellation constellation(const SpinState& state, const Tolerances& tol = {});

/// Symmetric projection of n_1 (x) ... (x) n_N, not normalized. Its norm is
/// 1 / A for the normalization factor A of the constellation.
SpinState symmetric_product(const std::vector<Direction>& stars);

/// Normalized state with the given stars, first nonzero coefficient real
/// and positive.
SpinState state_from_constellation(const Constellation& c);

/// D(R)|psi>; the stars of the result are the stars of psi rotated by R.
SpinState rotate_state(const SpinState& state, const Rotation& r);

/// Permanent: permutation sum for n <= 8, Ryser's formula beyond.
Complex permanent(const CMatrix& m);
Complex permanent_by_permutations(const CMatrix& m);
Complex permanent_ryser(const CMatrix& m);

/// A with A^2 = N! / perm(G), G_ij = <n_i|n_j> for spin-1/2 states.
double symmetrized_norm(const Constellation& c);

/// <n|psi> for the coherent state |n> of the state's spin, evaluated from
/// the Majorana polynomial in homogeneous form.
Complex coherent_overlap(const SpinState& state, const Direction& n);
/// Same quantity computed as <z| D(R_n)^dagger |psi> times the phase that
/// relates D(R_n)|z> to |n>.
Complex coherent_overlap_by_rotation(const SpinState& state, const Direction& n);

}  // namespace majorana

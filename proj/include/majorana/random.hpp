#pragma once

#include <random>

#include "majorana/sphere.hpp"
#include "majorana/spin_state.hpp"

namespace majorana {

using Rng = std::mt19937_64;

/// Haar-random normalized state (i.i.d. complex Gaussian coefficients).
SpinState random_state(int two_spin, Rng& rng);
/// Uniform direction on the sphere.
Direction random_direction(Rng& rng);
/// Haar-random rotation (uniform unit quaternion).
Rotation random_rotation(Rng& rng);
Complex random_complex(Rng& rng);
double uniform(Rng& rng, double lo, double hi);

}  // namespace majorana

#pragma once

/// @file sampling.hpp
/// Seeded random inputs for configurations and verification sweeps.

#include <random>
#include <vector>

#include "cpvortex/geom.hpp"
#include "cpvortex/su3flag.hpp"
#include "cpvortex/vortex_system.hpp"

namespace cpv::cli {

using Rng = std::mt19937_64;

/// Uniform on CP^n (normalized complex Gaussian).
ProjectivePoint sample_point(int n, Rng& rng);

/// Uniform in the closed disk of the given radius.
Complex sample_disk(double radius, Rng& rng);

/// Each coordinate uniform in the disk of the given radius.
FlagCoords sample_flag(double radius, Rng& rng);

/// Haar-random unitary of size m.
ComplexMatrix sample_unitary(int m, Rng& rng);

/// Rejection sampling of `count` vortices with pairwise distance >= min_separation
/// and strengths uniform in [strength_min, strength_max]. Planar positions are
/// drawn from the disk of radius `radius`.
VortexSystem sample_system(const Manifold& manifold, int count, double min_separation,
                           double strength_min, double strength_max, double radius, Rng& rng);

}  // namespace cpv::cli

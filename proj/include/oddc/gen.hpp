#pragma once

#include <cstdint>

#include "oddc/embedding.hpp"

namespace oddc {

// C_m x C_n with the natural torus rotation (N, E, S, W) at every
// vertex; vertex (i,j) gets id i*n + j. Quadrangulation of the torus.
// Requires m, n >= 3; with triangle_free also m, n >= 4 (a 3-cycle
// factor has girth 3).
RotationSystem gen_torus_grid(int m, int n, bool triangle_free = false);

// Subdivides floor(num/den * |E|) edges once each, chosen by seeded
// draws from the sorted edge list; the new 2-vertex takes the edge's
// slot in both rotations, so girth never decreases and the Euler
// characteristic is unchanged. Selected edges are subdivided in sorted
// order, so output is a pure function of (embedding, fraction, seed).
RotationSystem gen_subdivided(const RotationSystem& rs, std::int64_t num,
                              std::int64_t den, std::uint64_t seed);

}  // namespace oddc

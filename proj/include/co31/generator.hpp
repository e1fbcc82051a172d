#pragma once

#include <cstdint>
#include <optional>

#include "co31/embedding.hpp"

namespace co31 {

/// Cycle c1..ck plus apexes N and S joined to every cycle vertex. Vertex ids
/// are 0..k-1 for the cycle, k for N and k+1 for S; the outer face is
/// (c1, c2, N). Throws Error(precondition) for k < 4.
Embedding double_wheel(int cycle_len);

struct RandomOptions {
    int max_attempts = 64;
    int mixing_flips_per_vertex = 8;
};

/// A triangulation on n vertices without separating triangles: stacked
/// growth, random flips, then flips that remove separating triangles, retried
/// with fresh randomness up to `max_attempts` times. Deterministic in
/// (n, seed). The outer face is the lexicographically smallest facial
/// triangle. Throws Error(precondition) for n < 6 and Error(internal) when
/// all attempts fail.
Embedding random_4ct(int n, std::uint64_t seed, const RandomOptions& options = {});

/// Facial triangle with the smallest sorted vertex triple, listed
/// counterclockwise starting from its smallest vertex.
std::vector<Vertex> smallest_facial_triangle(const Embedding& e);

/// Rewrites `e.outer` to the given face; throws unless it is one.
Embedding with_outer_face(Embedding e, std::vector<Vertex> outer);

}  // namespace co31

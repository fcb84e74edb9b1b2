#pragma once

#include <cstdint>
#include <string>

#include "tessera/plane_graph.hpp"

namespace tessera {

// Request for a finite patch of tessellation. Degree bounds are inclusive;
// a collapsed range (min == max) pins the degree exactly.
struct PatchSpec {
    int p_min = 3;
    int p_max = 3;
    int q_min = 3;
    int q_max = 3;
    int height = 0;
    std::uint64_t seed = 0;
    std::string kind = "regular";  // regular | perturbed | platonic
};

// One of the five closed solids with vertex degree p and face degree q
// (requires 1/p + 1/q > 1/2). Hard-coded rotation tables.
PlaneGraph platonic_solid(int p, int q);

// Patch of the (p,q) tessellation: the quasi-ball of the given height
// around a central face, grown layer by layer. Spherical parameters yield
// the full solid regardless of height. Vertex labels follow creation
// order, which is deterministic, so repeated calls are identical.
PlaneGraph regular_patch(int p, int q, int height);

// Patch with vertex degrees sampled from [p_min,p_max] and face degrees
// from [q_min,q_max], deterministic in the seed. Collapsed ranges take
// the same code path as regular_patch and produce identical output.
PlaneGraph perturbed_patch(const PatchSpec& spec);

}  // namespace tessera

#pragma once

#include <optional>
#include <vector>

#include "tessera/rational.hpp"
#include "tessera/subgraph.hpp"
#include "tessera/walks.hpp"

namespace tessera {

// Sharp constant Phi(p,q) = (p-2) sqrt(1 - 4/((p-2)(q-2))), stored as its
// exact square so "ratio >= Phi" can be decided without floating point.
struct PhiValue {
    int p = 0, q = 0;
    Rational square;  // (p-2)((p-2)(q-2) - 4)/(q-2)
    double approx = 0.0;
};

// Throws DegreeTooSmall (p or q < 3) or SphericalParameters (1/p + 1/q > 1/2).
PhiValue phi(int p, int q);

// Exact comparison r >= Phi for a non-negative rational ratio r.
bool at_least_phi(const Rational& r, const PhiValue& b);
// Exact comparison r >= Phi / divisor for divisor >= 1.
bool at_least_phi_over(const Rational& r, const PhiValue& b, int divisor);

// The four isoperimetric ratios plus the two vertex ratios of a single
// subgraph, all exact. The face-based pair is absent when the subgraph has no
// faces.
struct IsoRatios {
    Rational i_edge;        // |boundary edges| / |V|
    Rational i_edge_sigma;  // |boundary edges| / sum of vertex degrees
    Rational j0;            // |inner vertex boundary| / |V|
    Rational j1;            // |outer vertex boundary| / |V|
    std::optional<Rational> i_face;        // |boundary walk| / |F|
    std::optional<Rational> i_face_sigma;  // |boundary walk| / sum of face degrees
};

// Requires s nonempty and safe.
IsoRatios subgraph_ratios(const Subgraph& s);

enum class RatioKind { edge_vertex, face_boundary, edge_sigma, face_sigma, j0, j1 };

struct MinRatioResult {
    Rational minimum;
    Subgraph witness;
    long long family_size = 0;  // candidates evaluated
};

// Certified minimum of the chosen ratio over every connected induced subgraph
// whose face closure stays inside the complete region and whose vertex count
// is at most max_vertices. For the two face ratios the candidates are taken
// with holes filled and must carry at least one face. The result is
// deterministic regardless of thread schedule: ties break toward the
// lexicographically smallest vertex set. Thread count comes from
// TESSERA_THREADS (default: hardware concurrency). Throws RegionTooSmall when
// the family is empty.
MinRatioResult brute_force_min_ratio(const PlaneGraph& g, int max_vertices, RatioKind kind);

struct BoundCheck {
    RatioKind kind = RatioKind::edge_vertex;
    Rational observed;   // certified brute-force minimum
    double bound = 0.0;  // float view of the bound compared against
    bool ok = false;     // exact squared comparison
};

struct UpperWitnessRow {
    int height = 0;
    long long vertices = 0;
    long long boundary = 0;  // boundary walk length
    long long face_degree_sum = 0;
    Rational i_face_sigma;
};

struct BoundsReport {
    std::vector<BoundCheck> lower;       // i_edge, i_edge_sigma, i_face, i_face_sigma
    std::vector<UpperWitnessRow> upper;  // quasi-ball witness sequence
    double upper_bound = 0.0;            // float view of the upper-side constant
    double upper_gap = 0.0;              // last witness ratio minus upper_bound
    bool lower_ok = false;
    bool upper_decreasing = false;
    bool ok = false;
};

// Audits the complete region against vertex degrees in [p1, p2] and face
// degrees in [q1, q2], then certifies the four lower bounds by brute force up
// to subgraph size `budget` and builds the quasi-ball witness sequence (face
// closures of the central face, up to `budget` steps or the edge of the safe
// region) whose face-sigma ratio should decrease toward the upper constant.
BoundsReport verify_bounds(const PlaneGraph& g, int p1, int q1, int p2, int q2, int budget);

struct GrowthEstimate {
    std::vector<long long> ball_sizes;  // |V(B_n)|, n = 0..n_max
    std::vector<double> log_ratios;     // ln(|V(B_n)| / |V(B_{n-1})|)
    double mu_hat = 0.0;                // max-window slope of ln|V(B_n)|
    Rational j1_floor;                  // min over n of ring(n+1) / |V(B_n)|
    bool lower_ok = false;              // |V(B_n)| >= (1 + j1_floor)^n held
};

// Growth data of the balls centered at v0. Throws UnsafeSubgraph when
// B_{n_max}(v0) leaves the complete region.
GrowthEstimate growth_rate(const PlaneGraph& g, int v0, int n_max);

}  // namespace tessera

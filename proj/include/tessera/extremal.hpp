#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tessera/rational.hpp"
#include "tessera/subgraph.hpp"
#include "tessera/walks.hpp"

namespace tessera {

// Growth root of the layer recurrence a_n = (trace) a_{n-1} - a_{n-2}:
// alpha = (trace + sqrt(disc))/2 with trace = (p-2)(q-2) - 2 and
// disc = trace^2 - 4. alpha > 1 exactly when (p-2)(q-2) > 4.
struct AlphaValue {
    long long trace = 0;
    long long disc = 0;
    double approx = 1.0;
};

// Throws ParabolicParameters unless (p-2)(q-2) > 4.
AlphaValue layer_growth_root(int p, int q);

// Layer data shared by the recurrence solver and the puffed-ball sequence.
// solve_recurrence fills t0/terms/observed and the two inequality verdicts;
// delta_sequence fills observed (boundary lengths) and deltas.
struct RecurrenceSeq {
    int p = 0, q = 0;
    int P = 0, Q = 0;  // p - 2, q - 2
    AlphaValue alpha;
    Rational t0;
    std::vector<Rational> terms;      // a_0..a_N
    std::vector<long long> observed;  // s_0..s_N, or |b P_1|..|b P_{n+1}|
    std::vector<int> deltas;          // delta_1..delta_n
    bool domination_ok = true;  // prefix sums of observed <= prefix sums of terms
    bool telescoped_ok = true;  // a_0+..+a_{N-1} <= a_N/(alpha-1), exact
    bool window_ok = true;      // every length-(p+1) delta window contains a 1
    int max_zero_run = 0;       // longest run of zero deltas past delta_1
};

// Largest vertex count compatible with n boundary vertices in a tiling with
// deg v >= 2q/(q-2) and deg f >= q; exact integer arithmetic, q in {3,4,6}.
long long weil_bound(int q, long long n);

struct WeilReport {
    int q = 0;
    long long n = 0;         // |V(bS)|
    long long bound = 0;     // weil_bound(q, n)
    long long observed = 0;  // |V(S)|
    bool within = false;     // observed <= bound
    bool equality = false;   // observed == bound
};

// Audits the host degrees for the q-type bound, measures s, and compares.
WeilReport weil_verify(const PlaneGraph& g, const Subgraph& s);

// n-fold face closure of the core; every layer, including the last, must stay
// inside the safe region.
Subgraph quasi_ball(const PlaneGraph& g, const Subgraph& core, int n);

// A subgraph bundled with the patch it lives in, for constructions that build
// their own host graph.
struct HostedSubgraph {
    std::shared_ptr<const PlaneGraph> host;
    Subgraph sub;
};

// The n-vertex prefix of the canonical layer filling of the p-regular
// triangulation: the center, its neighbors in rotation order, then each ring
// counterclockwise starting at a two-parent vertex whose predecessor has one
// parent. Induced, |V| = n; the host patch is auto-sized.
HostedSubgraph puffed_ball(int p, int n);

// Boundary-length increments delta_n = |b P_{n+1}| - |b P_n| for
// n = 1..n_max. Checks delta_1 = 2 and delta_n in {0,1} exactly; the window
// verdict (a 1 in every p+1 consecutive deltas) is recorded, not enforced,
// since flat triangulations have sqrt-growth boundaries and therefore
// arbitrarily long zero runs.
RecurrenceSeq delta_sequence(int p, int n_max);

// Subgraph of the regular tiling with |V(bS)| = n attaining weil_bound(q, n),
// when one exists: a quasi-ball around a core picked by n mod 2q. When the
// congruence class admits no extremal subgraph, possible is false and reason
// says why.
struct EqualityWitness {
    bool possible = false;
    std::string reason;
    HostedSubgraph witness;
    WeilReport report;
};
EqualityWitness equality_subgraph(int q, long long n);

// Exact boundary-growth identity |V(bS+)| = |bS| - 2q sum kappa + 2q, valid
// under four hypotheses which are checked and reported individually.
struct PropositionReport {
    bool closure_interior_ok = false;  // (S+)- equals S
    bool boundary_simple_ok = false;   // S an edge, or bS one simple cycle >= 3
    bool closure_boundary_ok = false;  // bS+ = b_i S+, one simple cycle
    bool new_faces_uniform = false;    // faces of S+ minus S share one degree
    int q = 0;                         // that common degree
    long long boundary_before = 0;     // |bS|
    long long boundary_after = 0;      // |V(bS+)|
    Rational curvature;                // sum of kappa over V(S)
    Rational predicted;                // |bS| - 2q curvature + 2q
    bool applicable = false;           // all four hypotheses hold
    bool equality = false;             // boundary_after == predicted
};
PropositionReport proposition_check(const PlaneGraph& g, const Subgraph& s);

// Lower bound |V(b_i S)| >= (pq-2p-2q)|V(S-)| + |V(bS-)| + 2q for hosts with
// deg v >= p, deg f >= q; the last term weakens to 2q-1 when S- is a single
// vertex. Hypothesis failures throw HypothesisViolation naming the culprit.
struct LemmaReport {
    int p = 0, q = 0;
    long long inner_boundary = 0;      // |V(b_i S)|
    long long interior_vertices = 0;   // |V(S-)|
    long long interior_boundary = 0;   // |V(bS-)|
    long long bound = 0;
    bool single_vertex_interior = false;
    bool ok = false;
};
LemmaReport lemma_check(const PlaneGraph& g, const Subgraph& s, int p, int q);

// Shell sizes s_0..s_N of the interior tower of s: s_N = |V(bS)|,
// s_{N-1} = |V(bS-)|, and so on down to the depth-zero core.
std::vector<long long> layer_profile(const Subgraph& s);

// Fits the comparison sequence a_0..a_N to an observed layer profile:
// a_0 = t0, a_1 = a_0 + (pq-2p-2q) a_0 + (2q-1), and for n >= 2
// a_n = a_{n-1} + (pq-2p-2q)(a_0+..+a_{n-1}) + 2q, with t0 solved exactly so
// that a_N matches the last observed entry. Verifies the prefix-sum
// domination and the telescoped bound against alpha exactly.
RecurrenceSeq solve_recurrence(int p, int q, const std::vector<long long>& s_observed);

// volume: witness with |V(S)| = |V(T)| and |bS| <= |V(bT)|.
// boundary: witness with |bS| = |bT| and |V(S)| >= |V(T)|.
enum class TransferMode { volume, boundary };

struct TransferReport {
    TransferMode mode = TransferMode::volume;
    long long t_vertices = 0;
    long long t_boundary_vertices = 0;  // |V(bT)|
    long long t_boundary_edges = 0;     // |bT|
    HostedSubgraph witness;             // a puffed-ball in the p-regular patch
    long long w_vertices = 0;
    long long w_boundary = 0;           // |b P|
    bool ok = false;
};

// Transfers a finite triangulation with internal degrees >= p >= 6 into the
// p-regular triangulation and asserts the advertised inequalities.
TransferReport transfer_triangulation(const PlaneGraph& t, int p, TransferMode mode);

// Outer vertex-isoperimetry of vertex balls in a triangulation with
// deg v >= p: every ratio |d1 B_k|/|V(B_k)| up to the requested height is
// compared exactly against ((p-6) + sqrt((p-2)(p-6)))/2, and the ball growth
// against the average-degree bound. Regular hosts switch to exact integer
// ring recurrences (validated against the materialized patch) so the height
// may exceed what any patch could hold.
struct J1Report {
    int p = 0, height = 0;
    long long bound_u = 0, bound_d = 0;  // bound = (bound_u + sqrt(bound_d))/2
    double bound_approx = 0.0;
    bool analytic = false;      // sizes from the ring recurrence
    int validated_height = 0;   // recurrence prefix checked against the patch
    std::vector<long long> rings;       // |S_1|..|S_{height+1}|
    std::vector<long long> ball_sizes;  // |V(B_0)|..|V(B_height)|
    bool all_at_least = false;  // every ratio >= bound, exact surd comparison
    double final_ratio = 0.0;   // ratio at the requested height
    double final_gap = 0.0;     // relative excess over the bound
    double c_avg = 0.0;         // average degree over the largest ball
    double mu_bound = 0.0;      // ln((c-4 + sqrt((c-2)(c-6)))/2), 0 for c <= 6
    double mu_hat = 0.0;
    bool growth_ok = false;
    bool ok = false;
};
J1Report triangulation_j1_bounds(const PlaneGraph& g, int p, int height);

}  // namespace tessera

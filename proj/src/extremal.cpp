#include "tessera/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <string>
#include <utility>

#include "tessera/curvature.hpp"
#include "tessera/errors.hpp"
#include "tessera/generators.hpp"
#include "tessera/plane_graph.hpp"

namespace tessera {

namespace {

constexpr int kNoDegreeCap = 1 << 28;

// Keeps ring sizes small enough that squared comparisons below stay inside
// __int128.
constexpr long long kRingCap = 3'000'000'000'000'000LL;

bool simple_single_cycle(const BoundaryWalk& w) {
    if (w.cycle_count() != 1) return false;
    std::vector<int> cyc = w.cycle_vertices(w.cycles[0]);
    if (cyc.size() < 3) return false;
    std::vector<int> u = cyc;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u.size() == cyc.size();
}

// Canonical layer filling of the p-regular triangulation, hosted in a patch
// just tall enough for n_total vertices: the center, its neighbors in
// rotation order, then ring after ring counterclockwise, each ring started at
// a vertex with two parents whose cyclic predecessor has one parent.
struct PuffedOrder {
    std::shared_ptr<const PlaneGraph> host;
    std::vector<int> order;
};

PuffedOrder build_puffed_order(int p, int n_total) {
    if (p < 6) throw SphericalParameters("puffed ball: vertex degree must be at least 6");
    if (n_total < 1) throw RegionTooSmall("puffed ball: need at least one vertex");

    std::vector<long long> ring{0, p};
    int h = 0;
    long long covered = 1;
    while (covered < n_total) {
        ++h;
        if (static_cast<int>(ring.size()) <= h)
            ring.push_back((long long)(p - 4) * ring[h - 1] - ring[h - 2]);
        covered += ring[h];
    }
    if (h < 1) h = 1;

    PuffedOrder po;
    po.host = std::make_shared<const PlaneGraph>(regular_patch(p, 3, h + 1));
    const PlaneGraph& g = *po.host;

    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> frontier{0};
    dist[0] = 0;
    for (int d = 0; d <= h && !frontier.empty(); ++d) {
        std::vector<int> next;
        for (int v : frontier)
            for (int u : g.neighbors(v))
                if (dist[u] < 0) {
                    dist[u] = d + 1;
                    next.push_back(u);
                }
        frontier = std::move(next);
    }

    auto parent_count = [&](int v, int k) {
        int c = 0;
        for (int u : g.neighbors(v))
            if (dist[u] == k - 1) ++c;
        return c;
    };

    po.order.reserve(n_total);
    po.order.push_back(0);
    for (int k = 1; k <= h && static_cast<int>(po.order.size()) < n_total; ++k) {
        std::vector<int> ring_order;
        if (k == 1) {
            ring_order = g.neighbors(0);
        } else {
            BoundaryWalk walk = boundary_walk(combinatorial_ball(g, 0, k));
            if (walk.cycle_count() != 1)
                throw HypothesisViolation("puffed ball: ball boundary is not a single cycle");
            ring_order = walk.cycle_vertices(walk.cycles[0]);
            int m = static_cast<int>(ring_order.size());
            int start = -1;
            for (int i = 0; i < m; ++i) {
                int prev = ring_order[(i + m - 1) % m];
                if (parent_count(ring_order[i], k) == 2 && parent_count(prev, k) == 1) {
                    start = i;
                    break;
                }
            }
            if (start < 0) throw HypothesisViolation("puffed ball: no canonical ring start");
            std::rotate(ring_order.begin(), ring_order.begin() + start, ring_order.end());
        }
        for (int v : ring_order) {
            if (static_cast<int>(po.order.size()) >= n_total) break;
            po.order.push_back(v);
        }
    }
    if (static_cast<int>(po.order.size()) != n_total)
        throw HypothesisViolation("puffed ball: host patch ran out of rings");
    return po;
}

// blen[m] = |b P_m| for the prefixes of the filling order, via the
// triangulation identity |b| = 2E - 3F. The prefixes are simply connected,
// every bounded face a triangle, so the identity is exact; the delta checks
// downstream would catch any breakage immediately.
std::vector<long long> boundary_lengths(const PuffedOrder& po) {
    const PlaneGraph& g = *po.host;
    int n_total = static_cast<int>(po.order.size());
    std::vector<long long> blen(n_total + 1, 0);
    std::vector<char> placed(g.vertex_count(), 0);
    placed[po.order[0]] = 1;
    long long e = 0, f = 0;
    for (int i = 1; i < n_total; ++i) {
        int w = po.order[i];
        std::vector<int> nb = g.neighbors(w);
        int m = static_cast<int>(nb.size());
        for (int j = 0; j < m; ++j) {
            if (!placed[nb[j]]) continue;
            ++e;
            if (placed[nb[(j + 1) % m]]) ++f;
        }
        placed[w] = 1;
        blen[i + 1] = 2 * e - 3 * f;
    }
    return blen;
}

HostedSubgraph prefix_subgraph(const PuffedOrder& po, int m) {
    HostedSubgraph out;
    out.host = po.host;
    out.sub = Subgraph::induced(*po.host,
                                std::vector<int>(po.order.begin(), po.order.begin() + m));
    return out;
}

}  // namespace

AlphaValue layer_growth_root(int p, int q) {
    long long pq = (long long)(p - 2) * (q - 2);
    if (pq <= 4)
        throw ParabolicParameters("layer growth: (p-2)(q-2) must exceed 4, got " +
                                  std::to_string(pq));
    AlphaValue a;
    a.trace = pq - 2;
    a.disc = a.trace * a.trace - 4;
    a.approx = (static_cast<double>(a.trace) + std::sqrt(static_cast<double>(a.disc))) / 2.0;
    return a;
}

long long weil_bound(int q, long long n) {
    if (n < 1) throw RegionTooSmall("weil bound: need at least one boundary vertex");
    switch (q) {
        case 3:
        case 4:
            return (n * n + 2 * q * n) / (4 * q) + 1;
        case 6:
            return (n + 6) * (n + 6) / 24;
        default:
            throw UnsupportedQ("weil bound: face degree must be 3, 4, or 6");
    }
}

WeilReport weil_verify(const PlaneGraph& g, const Subgraph& s) {
    if (s.host != &g) throw WalkHostMismatch("weil verify: subgraph lives in a different graph");
    if (s.empty()) throw RegionTooSmall("weil verify: empty subgraph");
    s.require_safe("weil verify");
    int q = g.meta.q;
    if (q != 3 && q != 4 && q != 6)
        throw UnsupportedQ("weil verify: host face degree must be 3, 4, or 6");
    g.audit_degrees(2 * q / (q - 2), kNoDegreeCap, q, kNoDegreeCap);

    WeilReport rep;
    rep.q = q;
    rep.n = static_cast<long long>(boundary_walk(s).vertex_set().size());
    rep.bound = weil_bound(q, rep.n);
    rep.observed = s.vertex_count();
    rep.within = rep.observed <= rep.bound;
    rep.equality = rep.observed == rep.bound;
    return rep;
}

Subgraph quasi_ball(const PlaneGraph& g, const Subgraph& core, int n) {
    if (core.host != &g) throw WalkHostMismatch("quasi ball: core lives in a different graph");
    if (n < 0) throw RegionTooSmall("quasi ball: negative radius");
    Subgraph s = core;
    s.require_safe("quasi ball");
    for (int i = 0; i < n; ++i) {
        s = face_closure(s);
        s.require_safe("quasi ball");
    }
    return s;
}

HostedSubgraph puffed_ball(int p, int n) {
    PuffedOrder po = build_puffed_order(p, n);
    return prefix_subgraph(po, n);
}

RecurrenceSeq delta_sequence(int p, int n_max) {
    if (n_max < 1) throw RegionTooSmall("delta sequence: need n_max >= 1");
    PuffedOrder po = build_puffed_order(p, n_max + 1);
    std::vector<long long> blen = boundary_lengths(po);

    RecurrenceSeq seq;
    seq.p = p;
    seq.q = 3;
    seq.P = p - 2;
    seq.Q = 1;
    seq.alpha.trace = (long long)seq.P * seq.Q - 2;
    seq.alpha.disc = seq.alpha.trace * seq.alpha.trace - 4;
    seq.alpha.approx =
        (static_cast<double>(seq.alpha.trace) +
         std::sqrt(static_cast<double>(std::max(seq.alpha.disc, 0LL)))) / 2.0;
    seq.observed.assign(blen.begin() + 1, blen.end());
    seq.deltas.resize(n_max);
    int run = 0;
    for (int n = 1; n <= n_max; ++n) {
        long long d = blen[n + 1] - blen[n];
        seq.deltas[n - 1] = static_cast<int>(d);
        if (n == 1) {
            if (d != 2)
                throw HypothesisViolation("delta sequence: first increment is not 2");
        } else if (d != 0 && d != 1) {
            throw HypothesisViolation("delta sequence: increment outside {0,1} at step " +
                                      std::to_string(n));
        } else if (d == 0) {
            ++run;
            seq.max_zero_run = std::max(seq.max_zero_run, run);
        } else {
            run = 0;
        }
    }
    seq.window_ok = seq.max_zero_run <= p;
    return seq;
}

EqualityWitness equality_subgraph(int q, long long n) {
    if (q != 3 && q != 4 && q != 6)
        throw UnsupportedQ("equality witness: face degree must be 3, 4, or 6");
    EqualityWitness out;
    if (n < 1) {
        out.reason = "the boundary must contain at least one vertex";
        return out;
    }
    if (q == 4 && n > 1 && n % 2 == 1) {
        out.reason = "square faces force an even boundary once it has more than one vertex";
        return out;
    }
    if (q == 6) {
        if (n == 1) {
            out.reason = "one boundary vertex forces a single vertex, which sits below the bound";
            return out;
        }
        if (n % 2 == 1) {
            out.reason = "hexagonal faces force an even boundary";
            return out;
        }
        long long t12 = n % 12;
        if (t12 == 4 || t12 == 8) {
            out.reason = "no depth-zero core has a boundary of 4 or 8 mod 12 hexagonal steps";
            return out;
        }
    }

    int p_host = (q == 3) ? 6 : (q == 4 ? 4 : 3);
    long long t = n % (2 * q);
    long long N = n / (2 * q);
    int height = (q == 3) ? static_cast<int>(N) + 3
               : (q == 4) ? 2 * static_cast<int>(N) + 4
                          : 3 * static_cast<int>(N) + 5;
    auto host = std::make_shared<const PlaneGraph>(regular_patch(p_host, q, height));
    const PlaneGraph& g = *host;
    int central = g.face_left(g.dart_from_to(0, 1));
    auto across = [&](int u, int v) {
        int f = g.face_right(g.dart_from_to(u, v));
        if (!g.face_bounded(f))
            throw HypothesisViolation("equality witness: host patch too small");
        return f;
    };

    Subgraph s;
    if (n == 1) {
        s = Subgraph::single_vertex(g, 0);
    } else if (t == 1) {
        // only reachable for q = 3: a ball around a vertex plus one extra
        // triangle across its boundary, then grown by closures
        Subgraph s1 = quasi_ball(g, Subgraph::single_vertex(g, 0), 1);
        BoundaryWalk w = boundary_walk(s1);
        int extra = g.face_right(w.cycles[0].darts[0]);
        if (!g.face_bounded(extra))
            throw HypothesisViolation("equality witness: host patch too small");
        std::vector<int> fs = s1.fset;
        fs.push_back(extra);
        s = quasi_ball(g, Subgraph::from_faces(g, fs), static_cast<int>(N) - 1);
    } else if (t == 0) {
        s = quasi_ball(g, Subgraph::single_vertex(g, 0), static_cast<int>(N));
    } else {
        Subgraph core;
        if (t == 2) {
            core = Subgraph::single_edge(g, 0, 1);
        } else if (q == 3 && t == 3) {
            core = Subgraph::from_faces(g, {central});
        } else if (q == 3 && t == 4) {
            core = Subgraph::from_faces(g, {central, across(0, 1)});
        } else if (q == 3 && t == 5) {
            core = Subgraph::from_faces(g, {central, across(0, 1), across(1, 2)});
        } else if ((q == 4 && t == 4) || (q == 6 && t == 6)) {
            core = Subgraph::from_faces(g, {central});
        } else if ((q == 4 && t == 6) || (q == 6 && t == 10)) {
            core = Subgraph::from_faces(g, {central, across(0, 1)});
        } else {
            throw HypothesisViolation("equality witness: unhandled boundary residue");
        }
        s = quasi_ball(g, core, static_cast<int>(N));
    }

    out.possible = true;
    out.witness.host = host;
    out.witness.sub = s;
    out.report = weil_verify(g, s);
    if (out.report.n != n)
        throw HypothesisViolation("equality witness: constructed boundary has " +
                                  std::to_string(out.report.n) + " vertices, wanted " +
                                  std::to_string(n));
    return out;
}

PropositionReport proposition_check(const PlaneGraph& g, const Subgraph& s) {
    if (s.host != &g)
        throw WalkHostMismatch("proposition: subgraph lives in a different graph");
    if (s.empty()) throw RegionTooSmall("proposition: empty subgraph");
    s.require_safe("proposition");

    PropositionReport rep;
    Subgraph splus = face_closure(s);
    splus.require_safe("proposition");
    rep.closure_interior_ok = interior(splus) == s;

    BoundaryWalk ws = boundary_walk(s);
    rep.boundary_before = ws.length();
    bool is_edge = s.vertex_count() == 2 && s.edge_count() == 1 && s.face_count() == 0;
    rep.boundary_simple_ok = is_edge || simple_single_cycle(ws);

    BoundaryWalk wo = boundary_walk(splus);
    BoundaryWalk wi = inner_boundary_walk(splus);
    rep.closure_boundary_ok = simple_single_cycle(wo) && simple_single_cycle(wi) &&
                              wo.length() == wi.length() && wo.vertex_set() == wi.vertex_set();
    rep.boundary_after = static_cast<long long>(wo.vertex_set().size());

    std::vector<int> fresh;
    std::set_difference(splus.fset.begin(), splus.fset.end(), s.fset.begin(), s.fset.end(),
                        std::back_inserter(fresh));
    if (fresh.empty()) {
        rep.new_faces_uniform = false;
        rep.q = g.meta.q > 0 ? g.meta.q : 0;
    } else {
        rep.q = g.face_degree(fresh[0]);
        rep.new_faces_uniform = std::all_of(fresh.begin(), fresh.end(), [&](int f) {
            return g.face_degree(f) == rep.q;
        });
    }

    rep.curvature = kappa_sum(g, s.vset);
    Rational twoq(2 * rep.q);
    rep.predicted = Rational(rep.boundary_before) - twoq * rep.curvature + twoq;
    rep.applicable = rep.closure_interior_ok && rep.boundary_simple_ok &&
                     rep.closure_boundary_ok && rep.new_faces_uniform;
    rep.equality = Rational(rep.boundary_after) == rep.predicted;
    return rep;
}

LemmaReport lemma_check(const PlaneGraph& g, const Subgraph& s, int p, int q) {
    if (s.host != &g) throw WalkHostMismatch("lemma: subgraph lives in a different graph");
    if ((long long)(p - 2) * (q - 2) < 4)
        throw HypothesisViolation("lemma: need 1/p + 1/q at most 1/2");
    try {
        g.audit_degrees(p, kNoDegreeCap, q, kNoDegreeCap);
    } catch (const DegreeAuditFailed& err) {
        throw HypothesisViolation(std::string("lemma: ") + err.what());
    }
    if (s.empty()) throw HypothesisViolation("lemma: empty subgraph");
    s.require_safe("lemma");
    if (!(fill_holes(s) == s))
        throw HypothesisViolation("lemma: the complement of the region must be connected");
    Subgraph sminus = interior(s);
    if (sminus.empty())
        throw HypothesisViolation("lemma: the interior must be nonempty");

    LemmaReport rep;
    rep.p = p;
    rep.q = q;
    rep.interior_vertices = sminus.vertex_count();
    rep.single_vertex_interior = rep.interior_vertices == 1;
    rep.interior_boundary = rep.interior_vertices - interior(sminus).vertex_count();
    rep.inner_boundary = s.vertex_count() - rep.interior_vertices;
    long long d = (long long)p * q - 2 * p - 2 * q;
    rep.bound = d * rep.interior_vertices + rep.interior_boundary +
                (rep.single_vertex_interior ? 2 * q - 1 : 2 * q);
    rep.ok = rep.inner_boundary >= rep.bound;
    return rep;
}

std::vector<long long> layer_profile(const Subgraph& s) {
    if (s.empty()) throw RegionTooSmall("layer profile: empty subgraph");
    s.require_safe("layer profile");
    std::vector<long long> sizes{static_cast<long long>(s.vertex_count())};
    Subgraph cur = s;
    while (true) {
        Subgraph nxt = interior(cur);
        if (nxt.empty()) break;
        sizes.push_back(nxt.vertex_count());
        cur = std::move(nxt);
    }
    int n = static_cast<int>(sizes.size()) - 1;
    std::vector<long long> profile(sizes.size());
    profile[0] = sizes[n];
    for (int i = 0; i < n; ++i) profile[n - i] = sizes[i] - sizes[i + 1];
    return profile;
}

RecurrenceSeq solve_recurrence(int p, int q, const std::vector<long long>& s_observed) {
    RecurrenceSeq seq;
    seq.p = p;
    seq.q = q;
    seq.P = p - 2;
    seq.Q = q - 2;
    seq.alpha = layer_growth_root(p, q);
    if (s_observed.size() < 2)
        throw RegionTooSmall("recurrence: need at least two layers");
    int n_top = static_cast<int>(s_observed.size()) - 1;
    Rational growth((long long)seq.P * seq.Q - 4);
    Rational twoq(2 * q);

    // a_k is affine in the free base term: a_k = u[k] + w[k] t0, with the
    // first step using 2q - 1 and later steps 2q plus the growth term over
    // the running sum
    std::vector<Rational> u(n_top + 1), w(n_top + 1);
    u[0] = Rational(0);
    w[0] = Rational(1);
    Rational usum = u[0], wsum = w[0];
    for (int k = 1; k <= n_top; ++k) {
        Rational add = (k == 1) ? twoq - Rational(1) : twoq;
        u[k] = u[k - 1] + usum * growth + add;
        w[k] = w[k - 1] + wsum * growth;
        usum = usum + u[k];
        wsum = wsum + w[k];
    }
    seq.t0 = (Rational(s_observed[n_top]) - u[n_top]) / w[n_top];
    seq.terms.resize(n_top + 1);
    for (int k = 0; k <= n_top; ++k) seq.terms[k] = u[k] + w[k] * seq.t0;
    seq.observed = s_observed;

    Rational acc_a(0);
    long long acc_s = 0;
    for (int j = 0; j < n_top; ++j) {
        acc_a = acc_a + seq.terms[j];
        acc_s += s_observed[j];
        if (Rational(acc_s) > acc_a) seq.domination_ok = false;
    }
    // sum_{k<N} a_k <= a_N / (alpha - 1)  <=>  sum * alpha <= a_N + sum
    Rational lhs = acc_a * Rational(seq.alpha.trace, 2) - seq.terms[n_top] - acc_a;
    QuadraticSurd diff(lhs, acc_a / Rational(2), seq.alpha.disc);
    seq.telescoped_ok = diff.sign() <= 0;
    return seq;
}

TransferReport transfer_triangulation(const PlaneGraph& t, int p, TransferMode mode) {
    if (p < 6) throw SphericalParameters("transfer: vertex degree must be at least 6");
    if (t.is_closed())
        throw HypothesisViolation("transfer: the input must be a patch with an outer face");
    for (int f = 0; f < t.face_count(); ++f)
        if (t.face_bounded(f) && t.face_degree(f) != 3)
            throw NotTriangulation("transfer: every bounded face must be a triangle");

    std::vector<char> on_outer(t.vertex_count(), 0);
    for (int d : t.face(t.outer_face()).darts) on_outer[t.origin(d)] = 1;
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (on_outer[v]) continue;
        if (!t.complete(v) || t.degree(v) < p)
            throw DegreeAuditFailed("transfer: internal vertex " + std::to_string(v) +
                                    " has degree " + std::to_string(t.degree(v)) +
                                    ", need at least " + std::to_string(p));
    }

    TransferReport rep;
    rep.mode = mode;
    rep.t_vertices = t.vertex_count();
    rep.t_boundary_vertices =
        static_cast<long long>(std::count(on_outer.begin(), on_outer.end(), 1));
    rep.t_boundary_edges = t.face_degree(t.outer_face());

    if (mode == TransferMode::volume) {
        int m = static_cast<int>(rep.t_vertices);
        PuffedOrder po = build_puffed_order(p, m);
        std::vector<long long> blen = boundary_lengths(po);
        rep.witness = prefix_subgraph(po, m);
        rep.w_vertices = rep.witness.sub.vertex_count();
        rep.w_boundary = blen[m];
        if (boundary_walk(rep.witness.sub).length() != rep.w_boundary)
            throw HypothesisViolation("transfer: boundary bookkeeping mismatch");
        rep.ok = rep.w_vertices == rep.t_vertices && rep.w_boundary <= rep.t_boundary_vertices;
        return rep;
    }

    // boundary mode: the prefix boundary grows by 0 or 1 past its first two
    // steps, so it attains every length >= 2; take the largest prefix with
    // the target boundary
    long long target = rep.t_boundary_edges;
    long long cap = std::max<long long>(rep.t_vertices,
                                        target * target / 6 + 2 * target + p + 8);
    for (;;) {
        if (cap > 5'000'000)
            throw RegionTooSmall("transfer: boundary target too large to host");
        int n_total = static_cast<int>(cap) + 2;
        PuffedOrder po = build_puffed_order(p, n_total);
        std::vector<long long> blen = boundary_lengths(po);
        int best = -1;
        bool passed = false;
        for (int m = 1; m <= n_total; ++m) {
            if (blen[m] == target) best = m;
            if (blen[m] > target) {
                passed = true;
                break;
            }
        }
        if (passed) {
            if (best < 0)
                throw HypothesisViolation("transfer: boundary length skipped the target");
            rep.witness = prefix_subgraph(po, best);
            rep.w_vertices = best;
            rep.w_boundary = blen[best];
            if (boundary_walk(rep.witness.sub).length() != rep.w_boundary)
                throw HypothesisViolation("transfer: boundary bookkeeping mismatch");
            rep.ok = rep.w_boundary == rep.t_boundary_edges && rep.w_vertices >= rep.t_vertices;
            return rep;
        }
        cap *= 2;
    }
}

J1Report triangulation_j1_bounds(const PlaneGraph& g, int p, int height) {
    if (p < 6) throw SphericalParameters("vertex isoperimetry: need degree at least 6");
    if (height < 0) throw RegionTooSmall("vertex isoperimetry: negative height");
    g.audit_degrees(p, kNoDegreeCap, 3, 3);

    J1Report rep;
    rep.p = p;
    rep.height = height;
    rep.bound_u = p - 6;
    rep.bound_d = (long long)(p - 2) * (p - 6);
    rep.bound_approx =
        (static_cast<double>(rep.bound_u) + std::sqrt(static_cast<double>(rep.bound_d))) / 2.0;
    rep.analytic = g.meta.kind == "regular" && g.meta.p == p && g.meta.q == 3;

    // rings[k] = |d1 B_k|, balls[k] = |V(B_k)|, measured up to cap; every
    // expanded vertex must be complete or the true ring sizes are unknowable
    double degree_total = 0.0;
    auto measure = [&](int cap, std::vector<long long>& rings, std::vector<long long>& balls) {
        rings.clear();
        balls.assign(1, 1);
        std::vector<int> dist(g.vertex_count(), -1);
        std::vector<int> frontier{0};
        dist[0] = 0;
        degree_total = g.degree(0);
        for (int k = 0; k <= cap; ++k) {
            std::vector<int> next;
            for (int v : frontier) {
                if (!g.complete(v))
                    throw UnsafeSubgraph("vertex isoperimetry: ball of height " +
                                         std::to_string(k) + " leaves the safe region");
                for (int u : g.neighbors(v))
                    if (dist[u] < 0) {
                        dist[u] = k + 1;
                        next.push_back(u);
                    }
            }
            rings.push_back(static_cast<long long>(next.size()));
            if (k < cap) {
                balls.push_back(balls.back() + static_cast<long long>(next.size()));
                for (int u : next) degree_total += g.degree(u);
            }
            frontier = std::move(next);
        }
    };

    if (rep.analytic) {
        std::vector<long long> r(height + 2, 0);
        if (height + 1 >= 1) r[1] = p;
        for (int k = 2; k <= height + 1; ++k) {
            __int128 val = (__int128)(p - 4) * r[k - 1] - r[k - 2];
            if (val > kRingCap)
                throw RationalOverflow("vertex isoperimetry: ring sizes exceed the exact range");
            r[k] = static_cast<long long>(val);
        }
        rep.rings.assign(r.begin() + 1, r.end());
        rep.ball_sizes.assign(1, 1);
        for (int k = 1; k <= height; ++k)
            rep.ball_sizes.push_back(rep.ball_sizes.back() + r[k]);

        rep.validated_height = std::min(height, g.compute_safe_height(0));
        std::vector<long long> mrings, mballs;
        measure(rep.validated_height, mrings, mballs);
        for (int k = 0; k <= rep.validated_height; ++k) {
            if (mrings[k] != rep.rings[k] || mballs[k] != rep.ball_sizes[k])
                throw HypothesisViolation(
                    "vertex isoperimetry: recurrence disagrees with the patch at height " +
                    std::to_string(k));
        }
        rep.c_avg = p;
    } else {
        rep.validated_height = height;
        measure(height, rep.rings, rep.ball_sizes);
        rep.c_avg = degree_total / static_cast<double>(rep.ball_sizes.back());
    }

    // r/v >= (u + sqrt(d))/2  <=>  2r - uv >= 0 and (2r - uv)^2 >= d v^2
    auto at_least_bound = [&](long long rsz, long long vsz) {
        __int128 lhs = (__int128)2 * rsz - (__int128)rep.bound_u * vsz;
        if (lhs < 0) return false;
        return lhs * lhs >= (__int128)rep.bound_d * vsz * vsz;
    };
    rep.all_at_least = true;
    for (int k = 0; k <= height; ++k)
        if (!at_least_bound(rep.rings[k], rep.ball_sizes[k])) rep.all_at_least = false;

    rep.final_ratio = static_cast<double>(rep.rings[height]) /
                      static_cast<double>(rep.ball_sizes[height]);
    rep.final_gap = rep.bound_approx > 0.0 ? rep.final_ratio / rep.bound_approx - 1.0
                                           : rep.final_ratio;
    double c = rep.c_avg;
    rep.mu_bound = c > 6.0
        ? std::log((c - 4.0 + std::sqrt((c - 2.0) * (c - 6.0))) / 2.0)
        : 0.0;
    rep.mu_hat = height > 0
        ? std::log(static_cast<double>(rep.ball_sizes[height])) / height
        : 0.0;
    rep.growth_ok = rep.mu_hat >= rep.mu_bound - 1e-12;
    rep.ok = rep.all_at_least && rep.growth_ok;
    return rep;
}

}  // namespace tessera

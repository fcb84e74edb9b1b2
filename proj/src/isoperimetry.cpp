#include "tessera/isoperimetry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace tessera {

PhiValue phi(int p, int q) {
    if (p < 3 || q < 3)
        throw DegreeTooSmall("phi: degrees below 3 (p=" + std::to_string(p) +
                             ", q=" + std::to_string(q) + ")");
    if (2 * (p + q) > p * q)
        throw SphericalParameters("phi: 1/p + 1/q > 1/2 for (p=" + std::to_string(p) +
                                  ", q=" + std::to_string(q) + ")");
    PhiValue out;
    out.p = p;
    out.q = q;
    const long long pm = p - 2, qm = q - 2;
    out.square = Rational(pm * (pm * qm - 4), qm);
    out.approx = std::sqrt(out.square.to_double());
    return out;
}

bool at_least_phi(const Rational& r, const PhiValue& b) {
    if (r.sign() < 0) return false;
    return r * r >= b.square;
}

bool at_least_phi_over(const Rational& r, const PhiValue& b, int divisor) {
    if (r.sign() < 0) return false;
    const Rational scaled = r * Rational(divisor);
    return scaled * scaled >= b.square;
}

IsoRatios subgraph_ratios(const Subgraph& s) {
    if (s.empty()) throw UnsafeSubgraph("subgraph_ratios: empty subgraph");
    s.require_safe("subgraph_ratios");
    const Boundaries b = edge_and_vertex_boundaries(s);
    const long long nv = s.vertex_count();
    const long long cut = static_cast<long long>(b.boundary_edges.size());
    IsoRatios out;
    out.i_edge = Rational(cut, nv);
    out.i_edge_sigma = Rational(cut, s.vertex_degree_sum());
    out.j0 = Rational(static_cast<long long>(b.d0.size()), nv);
    out.j1 = Rational(static_cast<long long>(b.d1.size()), nv);
    if (!s.fset.empty()) {
        const long long walk = boundary_walk(s).length();
        out.i_face = Rational(walk, static_cast<long long>(s.fset.size()));
        out.i_face_sigma = Rational(walk, s.face_degree_sum());
    }
    return out;
}

namespace {

int env_thread_count() {
    if (const char* env = std::getenv("TESSERA_THREADS")) {
        const int t = std::atoi(env);
        if (t >= 1) return t;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Read-only data shared by all enumeration threads.
struct EnumShared {
    const PlaneGraph* g = nullptr;
    RatioKind kind = RatioKind::edge_vertex;
    int max_vertices = 0;
    bool face_kind = false;
    std::vector<char> adm;                 // vertex admissible: face closure stays complete
    std::vector<std::vector<int>> nbrs;    // adjacency lists
    std::vector<std::vector<int>> vfaces;  // distinct bounded faces at each vertex
    std::vector<int> fsize;                // face degree per face id
    std::vector<int> roots;                // admissible vertices, ascending
};

struct BestEntry {
    bool set = false;
    long long num = 0, den = 1;
    std::vector<int> vset;  // sorted; the family member itself (holes filled)
    long long family = 0;
};

// <0, 0, >0 comparison of a/b vs c/d for non-negative fractions.
int frac_cmp(long long a, long long b, long long c, long long d) {
    const __int128 lhs = static_cast<__int128>(a) * d;
    const __int128 rhs = static_cast<__int128>(c) * b;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

// Connected-set enumerator with O(deg) incremental boundary bookkeeping. Each
// connected set of admissible vertices is produced exactly once, rooted at its
// smallest member, by the skip-list scheme: extension candidates are consumed
// left to right and a skipped candidate stays excluded for the rest of that
// branch.
struct Enumerator {
    const EnumShared* sh;
    BestEntry best;

    std::vector<char> in_set, listed;
    std::vector<int> cnt;     // per vertex: neighbors currently in S
    std::vector<int> fcount;  // per face: corners currently in S
    std::vector<int> S;       // insertion order
    std::vector<int> pool;    // arena of extension candidates
    long long edges = 0, deg_sum = 0, faces = 0, fdeg_sum = 0;
    long long d1 = 0, interior = 0;
    int root = 0;
    std::vector<int> scratch;

    explicit Enumerator(const EnumShared& shared) : sh(&shared) {
        const int n = sh->g->vertex_count();
        in_set.assign(n, 0);
        listed.assign(n, 0);
        cnt.assign(n, 0);
        fcount.assign(sh->g->face_count(), 0);
        S.reserve(sh->max_vertices);
    }

    void add(int v) {
        const PlaneGraph& g = *sh->g;
        deg_sum += g.degree(v);
        if (cnt[v] > 0) --d1;
        in_set[v] = 1;
        S.push_back(v);
        for (int w : sh->nbrs[v]) {
            if (in_set[w]) {
                ++edges;
                ++cnt[w];
                if (cnt[w] == g.degree(w)) ++interior;
            } else {
                ++cnt[w];
                if (cnt[w] == 1) ++d1;
            }
        }
        if (cnt[v] == g.degree(v)) ++interior;
        for (int f : sh->vfaces[v]) {
            ++fcount[f];
            if (fcount[f] == sh->fsize[f]) {
                ++faces;
                fdeg_sum += sh->fsize[f];
            }
        }
    }

    void remove(int v) {
        const PlaneGraph& g = *sh->g;
        for (int f : sh->vfaces[v]) {
            if (fcount[f] == sh->fsize[f]) {
                --faces;
                fdeg_sum -= sh->fsize[f];
            }
            --fcount[f];
        }
        if (cnt[v] == g.degree(v)) --interior;
        for (int w : sh->nbrs[v]) {
            if (in_set[w]) {
                if (cnt[w] == g.degree(w)) --interior;
                --cnt[w];
                --edges;
            } else {
                if (cnt[w] == 1) --d1;
                --cnt[w];
            }
        }
        in_set[v] = 0;
        S.pop_back();
        if (cnt[v] > 0) ++d1;
        deg_sum -= g.degree(v);
    }

    void offer(long long num, long long den, const std::vector<int>& vs) {
        if (best.set) {
            const int c = frac_cmp(num, den, best.num, best.den);
            if (c > 0) return;
            if (c == 0 && !(vs < best.vset)) return;
        }
        best.set = true;
        best.num = num;
        best.den = den;
        best.vset = vs;
    }

    void sorted_current(std::vector<int>& out) const {
        out = S;
        std::sort(out.begin(), out.end());
    }

    void visit() {
        ++best.family;
        const long long nv = static_cast<long long>(S.size());
        long long num = 0, den = 1;
        switch (sh->kind) {
            case RatioKind::edge_vertex:
                num = deg_sum - 2 * edges;
                den = nv;
                break;
            case RatioKind::edge_sigma:
                num = deg_sum - 2 * edges;
                den = deg_sum;
                break;
            case RatioKind::j0:
                num = nv - interior;
                den = nv;
                break;
            case RatioKind::j1:
                num = d1;
                den = nv;
                break;
            case RatioKind::face_boundary:
            case RatioKind::face_sigma: {
                // chi = V - E + F is 1 for a connected hole-free set; each
                // missing unit is an enclosed hole that must be filled first.
                const long long holes = 1 - (nv - edges + faces);
                if (holes == 0) {
                    if (faces == 0) return;
                    num = 2 * edges - fdeg_sum;
                    den = sh->kind == RatioKind::face_boundary ? faces : fdeg_sum;
                    break;
                }
                sorted_current(scratch);
                Subgraph filled = fill_holes(Subgraph::induced(*sh->g, scratch));
                if (filled.fset.empty()) return;
                const long long walk = boundary_walk(filled).length();
                num = walk;
                den = sh->kind == RatioKind::face_boundary
                          ? static_cast<long long>(filled.fset.size())
                          : filled.face_degree_sum();
                if (!best.set || frac_cmp(num, den, best.num, best.den) <= 0)
                    offer(num, den, filled.vset);
                return;
            }
        }
        if (!best.set || frac_cmp(num, den, best.num, best.den) <= 0) {
            sorted_current(scratch);
            offer(num, den, scratch);
        }
    }

    void rec(size_t lo, size_t hi) {
        if (static_cast<int>(S.size()) == sh->max_vertices) return;
        for (size_t i = lo; i < hi; ++i) {
            const int v = pool[i];
            add(v);
            const size_t child_lo = pool.size();
            for (size_t k = i + 1; k < hi; ++k) pool.push_back(pool[k]);
            const size_t fresh = pool.size();
            for (int w : sh->nbrs[v])
                if (w > root && sh->adm[w] && !listed[w]) {
                    listed[w] = 1;
                    pool.push_back(w);
                }
            std::sort(pool.begin() + fresh, pool.end());
            visit();
            rec(child_lo, pool.size());
            for (size_t k = fresh; k < pool.size(); ++k) listed[pool[k]] = 0;
            pool.resize(child_lo);
            remove(v);
        }
    }

    void run_root(int r) {
        root = r;
        add(r);
        listed[r] = 1;
        const size_t lo = pool.size();
        for (int w : sh->nbrs[r])
            if (w > r && sh->adm[w]) {
                listed[w] = 1;
                pool.push_back(w);
            }
        std::sort(pool.begin() + lo, pool.end());
        visit();
        rec(lo, pool.size());
        for (size_t k = lo; k < pool.size(); ++k) listed[pool[k]] = 0;
        pool.resize(lo);
        listed[r] = 0;
        remove(r);
    }
};

EnumShared build_shared(const PlaneGraph& g, int max_vertices, RatioKind kind) {
    EnumShared sh;
    sh.g = &g;
    sh.kind = kind;
    sh.max_vertices = max_vertices;
    sh.face_kind = kind == RatioKind::face_boundary || kind == RatioKind::face_sigma;
    const int n = g.vertex_count();
    std::vector<char> face_ok(g.face_count(), 0);
    for (int f = 0; f < g.face_count(); ++f) {
        if (!g.face_bounded(f)) continue;
        bool ok = true;
        for (int v : g.face_vertex_cycle(f))
            if (!g.complete(v)) {
                ok = false;
                break;
            }
        face_ok[f] = ok;
    }
    sh.adm.assign(n, 0);
    sh.nbrs.resize(n);
    sh.vfaces.resize(n);
    sh.fsize.resize(g.face_count());
    for (int f = 0; f < g.face_count(); ++f) sh.fsize[f] = g.face_degree(f);
    for (int v = 0; v < n; ++v) {
        sh.nbrs[v] = g.neighbors(v);
        if (!g.complete(v)) continue;
        bool ok = true;
        std::vector<int> fs = g.faces_at(v);
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
        for (int f : fs)
            if (!g.face_bounded(f) || !face_ok[f]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        sh.adm[v] = 1;
        sh.vfaces[v] = std::move(fs);
    }
    for (int v = 0; v < n; ++v)
        if (sh.adm[v]) sh.roots.push_back(v);
    return sh;
}

}  // namespace

MinRatioResult brute_force_min_ratio(const PlaneGraph& g, int max_vertices, RatioKind kind) {
    if (max_vertices < 1)
        throw RegionTooSmall("brute_force_min_ratio: max_vertices must be at least 1");
    const EnumShared sh = build_shared(g, max_vertices, kind);
    if (sh.roots.empty())
        throw RegionTooSmall("brute_force_min_ratio: no vertex has a fully complete face closure");

    const int threads =
        std::max(1, std::min(env_thread_count(), static_cast<int>(sh.roots.size())));
    std::vector<BestEntry> results(threads);
    auto work = [&](int t) {
        Enumerator e(sh);
        for (size_t i = t; i < sh.roots.size(); i += threads) e.run_root(sh.roots[i]);
        results[t] = std::move(e.best);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    BestEntry best;
    for (auto& r : results) {
        best.family += r.family;
        if (!r.set) continue;
        if (!best.set) {
            best.set = true;
            best.num = r.num;
            best.den = r.den;
            best.vset = std::move(r.vset);
            continue;
        }
        const int c = frac_cmp(r.num, r.den, best.num, best.den);
        if (c < 0 || (c == 0 && r.vset < best.vset)) {
            best.num = r.num;
            best.den = r.den;
            best.vset = std::move(r.vset);
        }
    }
    if (!best.set)
        throw RegionTooSmall("brute_force_min_ratio: no candidate subgraph carries a face");

    MinRatioResult out;
    out.minimum = Rational(best.num, best.den);
    Subgraph w = Subgraph::induced(g, best.vset);
    out.witness = sh.face_kind ? fill_holes(w) : std::move(w);
    out.family_size = best.family;
    return out;
}

namespace {

int central_bounded_face(const PlaneGraph& g) {
    if (g.vertex_count() == 0 || g.degree(0) == 0)
        throw RegionTooSmall("verify_bounds: graph has no usable central face");
    for (int f : g.faces_at(0))
        if (g.face_bounded(f)) return f;
    throw RegionTooSmall("verify_bounds: no bounded face at the central vertex");
}

}  // namespace

BoundsReport verify_bounds(const PlaneGraph& g, int p1, int q1, int p2, int q2, int budget) {
    g.audit_degrees(p1, p2, q1, q2);
    const PhiValue lower_vertex = phi(p1, q1);
    const PhiValue lower_face = phi(q1, p1);
    const PhiValue upper_face = phi(q2, p2);

    BoundsReport rep;
    auto check = [&](RatioKind kind, const PhiValue& b, int divisor) {
        const MinRatioResult m = brute_force_min_ratio(g, budget, kind);
        BoundCheck c;
        c.kind = kind;
        c.observed = m.minimum;
        c.bound = b.approx / divisor;
        c.ok = at_least_phi_over(m.minimum, b, divisor);
        rep.lower.push_back(c);
    };
    check(RatioKind::edge_vertex, lower_vertex, 1);
    check(RatioKind::edge_sigma, lower_vertex, p1);
    check(RatioKind::face_boundary, lower_face, 1);
    check(RatioKind::face_sigma, lower_face, q1);
    rep.lower_ok = true;
    for (const auto& c : rep.lower) rep.lower_ok = rep.lower_ok && c.ok;

    Subgraph a = Subgraph::from_faces(g, {central_bounded_face(g)});
    for (int n = 0; n <= budget; ++n) {
        if (!a.safe()) break;
        const IsoRatios r = subgraph_ratios(a);
        UpperWitnessRow row;
        row.height = n;
        row.vertices = a.vertex_count();
        row.boundary = boundary_walk(a).length();
        row.face_degree_sum = a.face_degree_sum();
        row.i_face_sigma = *r.i_face_sigma;
        rep.upper.push_back(row);
        if (n == budget) break;
        Subgraph next = face_closure(a);
        if (!next.safe() || next.vertex_count() == a.vertex_count()) break;
        a = std::move(next);
    }
    rep.upper_decreasing = rep.upper.size() >= 2;
    for (size_t i = 1; i < rep.upper.size(); ++i)
        if (!(rep.upper[i].i_face_sigma < rep.upper[i - 1].i_face_sigma))
            rep.upper_decreasing = false;
    rep.upper_bound = upper_face.approx / q2;
    if (!rep.upper.empty())
        rep.upper_gap = rep.upper.back().i_face_sigma.to_double() - rep.upper_bound;
    rep.ok = rep.lower_ok && rep.upper_decreasing;
    return rep;
}

GrowthEstimate growth_rate(const PlaneGraph& g, int v0, int n_max) {
    if (v0 < 0 || v0 >= g.vertex_count())
        throw UnsafeVertex("growth_rate: center " + std::to_string(v0) + " out of range");
    if (n_max < 0) throw UnsafeSubgraph("growth_rate: negative radius");

    // Single BFS; every vertex inside the ball must be complete, matching
    // combinatorial_ball's safety rule.
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> frontier{v0}, next;
    dist[v0] = 0;
    GrowthEstimate out;
    out.ball_sizes.assign(n_max + 1, 0);
    long long count = 0;
    for (int d = 0; d <= n_max; ++d) {
        for (int v : frontier) {
            if (!g.complete(v))
                throw UnsafeSubgraph("growth_rate: ball of radius " + std::to_string(n_max) +
                                     " leaves the complete region at distance " +
                                     std::to_string(d));
            ++count;
        }
        out.ball_sizes[d] = count;
        if (d == n_max) break;
        next.clear();
        for (int v : frontier)
            for (int w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = d + 1;
                    next.push_back(w);
                }
        frontier.swap(next);
    }

    for (int d = 1; d <= n_max; ++d)
        out.log_ratios.push_back(std::log(static_cast<double>(out.ball_sizes[d]) /
                                          static_cast<double>(out.ball_sizes[d - 1])));
    if (n_max >= 1) {
        const int k_max = std::max(1, (n_max + 7) / 8);
        double mu = 0.0;
        for (int k = 1; k <= k_max && k <= n_max; ++k) {
            const double slope = (std::log(static_cast<double>(out.ball_sizes[n_max])) -
                                  std::log(static_cast<double>(out.ball_sizes[n_max - k]))) /
                                 k;
            mu = std::max(mu, slope);
        }
        out.mu_hat = mu;

        Rational floor_ratio(out.ball_sizes[1] - out.ball_sizes[0], out.ball_sizes[0]);
        for (int d = 1; d < n_max; ++d) {
            const Rational r(out.ball_sizes[d + 1] - out.ball_sizes[d], out.ball_sizes[d]);
            if (r < floor_ratio) floor_ratio = r;
        }
        out.j1_floor = floor_ratio;
        const long double base = std::log1p(static_cast<long double>(out.j1_floor.to_double()));
        out.lower_ok = true;
        for (int d = 0; d <= n_max; ++d) {
            const long double lhs = std::log(static_cast<long double>(out.ball_sizes[d]));
            if (lhs + 1e-9L < d * base) out.lower_ok = false;
        }
    } else {
        out.lower_ok = true;
    }
    return out;
}

}  // namespace tessera

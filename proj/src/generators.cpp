#include "tessera/generators.hpp"

#include <algorithm>
#include <deque>
#include <vector>

#include "tessera/errors.hpp"
#include "tessera/rng.hpp"

namespace tessera {

namespace {

// Layered disk growth. Each vertex carries the counterclockwise arc of
// neighbors discovered so far as a deque; the gap between back and front is
// the unexplored side. Walking the rim with the interior on the left moves
// to the head of the front edge, so faces added at a vertex always attach
// in the sector counterclockwise-after its back edge.
struct Grower {
    int p_lo, p_hi, q_lo, q_hi;
    SplitMix64 rng;
    std::vector<std::deque<int>> arc;
    std::vector<int> target;
    std::vector<char> done;

    Grower(int pl, int ph, int ql, int qh, std::uint64_t seed)
        : p_lo(pl), p_hi(ph), q_lo(ql), q_hi(qh), rng(seed) {}

    // Collapsed ranges draw nothing, so a fixed-degree run is identical no
    // matter the seed.
    int sample(int lo, int hi) {
        if (lo == hi) return lo;
        return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    int new_vertex() {
        arc.emplace_back();
        target.push_back(sample(p_lo, p_hi));
        done.push_back(0);
        return static_cast<int>(arc.size()) - 1;
    }

    // Faces still needed at v. An arc of k neighbors spans k-1 filled
    // sectors; equality of missing==1 with "no room for another edge" is
    // what forces rim closures below.
    int missing(int v) const {
        if (done[v]) return 0;
        return target[v] - (static_cast<int>(arc[v].size()) - 1);
    }

    static bool knows(const std::deque<int>& a, int x) {
        return std::find(a.begin(), a.end(), x) != a.end();
    }

    bool apply_face(const std::vector<int>& verts, const std::vector<char>& fresh);
    bool add_face_at(int v);
    bool run(int height);
    PlaneGraph finish() const;
};

// Validate every corner of the candidate face against the current arcs,
// then commit. The two phases keep a failed attempt from corrupting state,
// which matters for the retry loop of perturbed growth.
bool Grower::apply_face(const std::vector<int>& verts, const std::vector<char>& fresh) {
    const int m = static_cast<int>(verts.size());
    {
        std::vector<int> s(verts);
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    }
    enum class Act { make, push_front, push_back, close };
    std::vector<Act> act(m);
    for (int i = 0; i < m; ++i) {
        const int u = verts[i];
        if (fresh[i]) {
            act[i] = Act::make;
            continue;
        }
        if (done[u]) return false;
        const int prv = verts[(i + m - 1) % m];
        const int nxt = verts[(i + 1) % m];
        const auto& a = arc[u];
        const bool has_prev = knows(a, prv);
        const bool has_next = knows(a, nxt);
        const int sz = static_cast<int>(a.size());
        if (has_prev && has_next) {
            // Both edges already present: this face fills u's last sector.
            if (a.front() != prv || a.back() != nxt || sz != target[u]) return false;
            act[i] = Act::close;
        } else if (has_prev) {
            if (a.front() != prv || sz >= target[u]) return false;
            act[i] = Act::push_front;
        } else if (has_next) {
            if (a.back() != nxt || sz >= target[u]) return false;
            act[i] = Act::push_back;
        } else {
            return false;
        }
    }
    for (int i = 0; i < m; ++i) {
        const int u = verts[i];
        const int prv = verts[(i + m - 1) % m];
        const int nxt = verts[(i + 1) % m];
        switch (act[i]) {
            case Act::make: arc[u] = {nxt, prv}; break;
            case Act::push_front: arc[u].push_front(nxt); break;
            case Act::push_back: arc[u].push_back(prv); break;
            case Act::close: done[u] = 1; break;
        }
    }
    return true;
}

bool Grower::add_face_at(int v) {
    const int qf = sample(q_lo, q_hi);
    // When this face is the last one at v it must land on v's front edge.
    // That pins the final cycle vertex, and the constraint chains backwards
    // through every rim vertex that has no room for a fresh edge (missing
    // face count 1 means the arc already holds all target[u] neighbors).
    std::deque<int> tail;
    if (missing(v) == 1) {
        int z = arc[v].front();
        tail.push_front(z);
        while (missing(z) == 1) {
            z = arc[z].front();
            tail.push_front(z);
            if (static_cast<int>(tail.size()) > qf - 2) return false;
        }
    }
    std::vector<int> verts{v, arc[v].back()};
    std::vector<char> fresh{0, 0};
    const int fwd_len = qf - static_cast<int>(tail.size());
    if (static_cast<int>(verts.size()) > fwd_len) return false;
    while (static_cast<int>(verts.size()) < fwd_len) {
        const int u = verts.back();
        if (missing(u) == 1) {
            // Same forcing in the forward direction: continue along the rim.
            verts.push_back(arc[u].back());
            fresh.push_back(0);
        } else {
            verts.push_back(new_vertex());
            fresh.push_back(1);
        }
    }
    for (int z : tail) {
        verts.push_back(z);
        fresh.push_back(0);
    }
    return apply_face(verts, fresh);
}

bool Grower::run(int height) {
    const int q0 = sample(q_lo, q_hi);
    for (int i = 0; i < q0; ++i) new_vertex();
    for (int i = 0; i < q0; ++i)
        arc[i] = {(i + 1) % q0, (i + q0 - 1) % q0};
    int rim_lo = 0;
    int rim_hi = q0;
    // height+1 sweeps: the extra halo layer is what certifies completeness
    // of every vertex of the height-h quasi-ball, so the safe region holds
    // the full radius-h ball of the seed vertices.
    for (int layer = 0; layer <= height; ++layer) {
        const int next_lo = static_cast<int>(arc.size());
        for (int v = rim_lo; v < rim_hi; ++v)
            while (!done[v])
                if (!add_face_at(v)) return false;
        rim_lo = next_lo;
        rim_hi = static_cast<int>(arc.size());
        if (rim_lo == rim_hi) return false;  // sphere closed up mid-growth
    }
    return true;
}

PlaneGraph Grower::finish() const {
    const int n = static_cast<int>(arc.size());
    std::vector<std::vector<int>> rot(n);
    std::vector<bool> comp(n);
    for (int v = 0; v < n; ++v) {
        rot[v].assign(arc[v].begin(), arc[v].end());
        comp[v] = done[v] != 0;
    }
    return PlaneGraph::build(rot, comp);
}

void require_degrees(int p, int q) {
    if (p < 3) throw DegreeTooSmall("vertex degree must be at least 3");
    if (q < 3) throw DegreeTooSmall("face degree must be at least 3");
}

bool spherical(int p, int q) { return 2 * (p + q) > p * q; }

}  // namespace

PlaneGraph platonic_solid(int p, int q) {
    require_degrees(p, q);
    if (!spherical(p, q))
        throw InfeasibleSpec("platonic solid requires 1/p + 1/q > 1/2");
    std::vector<std::vector<int>> rot;
    if (p == 3 && q == 3) {
        rot = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}};
    } else if (p == 3 && q == 4) {
        rot = {{1, 4, 3}, {2, 5, 0}, {3, 6, 1}, {0, 7, 2},
               {5, 7, 0}, {6, 4, 1}, {2, 7, 5}, {6, 3, 4}};
    } else if (p == 4 && q == 3) {
        rot = {{1, 3, 5, 2}, {2, 4, 3, 0}, {0, 5, 4, 1},
               {4, 5, 0, 1}, {2, 5, 3, 1}, {4, 2, 0, 3}};
    } else if (p == 3 && q == 5) {
        rot.resize(20);
        for (int i = 0; i < 5; ++i) {
            const int j = (i + 1) % 5;
            const int k = (i + 4) % 5;
            rot[i] = {j, 5 + i, k};                     // outer pentagon
            rot[5 + i] = {i, 10 + i, 10 + k};           // outer spokes
            rot[10 + i] = {5 + j, 15 + i, 5 + i};       // decagon ring
            rot[15 + i] = {10 + i, 15 + j, 15 + k};     // inner pentagon
        }
    } else if (p == 5 && q == 3) {
        rot.resize(12);
        rot[0].assign({1, 2, 3, 4, 5});
        for (int k = 0; k < 5; ++k) {
            const int kn = (k + 1) % 5;
            const int kp = (k + 4) % 5;
            rot[1 + k] = {6 + k, 1 + kn, 0, 1 + kp, 6 + kp};   // upper ring
            rot[6 + k] = {11, 6 + kn, 1 + kn, 1 + k, 6 + kp};  // lower ring
        }
        rot[11].assign({10, 9, 8, 7, 6});  // outermost vertex: ring order reversed
    } else {
        throw InfeasibleSpec("no solid with these degrees");
    }
    std::vector<bool> comp(rot.size(), true);
    PlaneGraph g = PlaneGraph::build(rot, comp);
    g.meta.p = p;
    g.meta.q = q;
    g.meta.p_max = p;
    g.meta.q_max = q;
    g.meta.height = 0;
    g.meta.kind = "platonic";
    return g;
}

PlaneGraph regular_patch(int p, int q, int height) {
    require_degrees(p, q);
    if (height < 0) throw InfeasibleSpec("height must be nonnegative");
    if (spherical(p, q)) return platonic_solid(p, q);
    Grower grower(p, p, q, q, 0);
    if (!grower.run(height))
        throw Error("regular growth reached an inconsistent state");
    PlaneGraph g = grower.finish();
    g.meta.p = p;
    g.meta.q = q;
    g.meta.p_max = p;
    g.meta.q_max = q;
    g.meta.height = height;
    g.meta.seed = 0;
    g.meta.kind = "regular";
    return g;
}

PlaneGraph perturbed_patch(const PatchSpec& spec) {
    require_degrees(spec.p_min, spec.q_min);
    if (spec.p_min > spec.p_max || spec.q_min > spec.q_max)
        throw InfeasibleSpec("degree range is empty");
    if (spec.height < 0) throw InfeasibleSpec("height must be nonnegative");
    if (spherical(spec.p_min, spec.q_min))
        throw InfeasibleSpec("degree bounds admit spherical combinations");
    const bool collapsed = spec.p_min == spec.p_max && spec.q_min == spec.q_max;
    for (int attempt = 0; attempt < 64; ++attempt) {
        const std::uint64_t seed =
            spec.seed + static_cast<std::uint64_t>(attempt) * 0x9e3779b97f4a7c15ULL;
        Grower grower(spec.p_min, spec.p_max, spec.q_min, spec.q_max, seed);
        if (!grower.run(spec.height)) continue;
        PlaneGraph g = grower.finish();
        try {
            g.audit_tessellation();
            g.audit_degrees(spec.p_min, spec.p_max, spec.q_min, spec.q_max);
        } catch (const Error&) {
            continue;
        }
        g.meta.p = spec.p_min;
        g.meta.q = spec.q_min;
        g.meta.p_max = spec.p_max;
        g.meta.q_max = spec.q_max;
        g.meta.height = spec.height;
        g.meta.seed = spec.seed;
        g.meta.kind = collapsed ? "regular" : "perturbed";
        return g;
    }
    throw InfeasibleSpec("no consistent patch found within the retry budget");
}

}  // namespace tessera

#include "tessera/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "tessera/errors.hpp"

namespace tessera {

namespace {

using nlohmann::json;

constexpr const char* kFormatTag = "tessera-graph-v1";

bool cyclic_match(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size() || a.empty()) return false;
    const int n = static_cast<int>(a.size());
    for (int s = 0; s < n; ++s) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = a[(s + i) % n] == b[i];
        if (ok) return true;
    }
    return false;
}

int resolve_face_cycle(const PlaneGraph& g, const std::vector<int>& cyc) {
    if (cyc.size() < 3) throw ParseError("face cycle needs at least 3 vertices");
    for (int v : cyc)
        if (v < 0 || v >= g.vertex_count())
            throw ParseError("face cycle references unknown vertex");
    std::vector<int> rev(cyc.rbegin(), cyc.rend());
    const int cands[2] = {g.dart_from_to(cyc[0], cyc[1]), g.dart_from_to(cyc[1], cyc[0])};
    for (int d : cands) {
        if (d < 0) continue;
        const int f = g.face_left(d);
        const std::vector<int> have = g.face_vertex_cycle(f);
        if (cyclic_match(have, cyc) || cyclic_match(have, rev)) return f;
    }
    throw ParseError("face cycle does not match any face of the host");
}

void sort_unique(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

json graph_to_json(const PlaneGraph& g) {
    json verts = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        json row;
        row["id"] = v;
        row["rotation"] = g.neighbors(v);
        row["complete"] = g.complete(v);
        verts.push_back(row);
    }
    json meta;
    meta["p"] = g.meta.p;
    meta["q"] = g.meta.q;
    meta["p_max"] = g.meta.p_max;
    meta["q_max"] = g.meta.q_max;
    meta["height"] = g.meta.height;
    meta["seed"] = g.meta.seed;
    meta["kind"] = g.meta.kind;
    meta["safe_height"] = g.meta.safe_height;
    json out;
    out["format"] = kFormatTag;
    out["vertices"] = verts;
    out["meta"] = meta;
    return out;
}

PlaneGraph graph_from_json(const json& j) {
    try {
        if (!j.is_object() || j.value("format", std::string()) != kFormatTag)
            throw ParseError("missing or unknown format tag");
        const json& verts = j.at("vertices");
        if (!verts.is_array() || verts.empty())
            throw ParseError("vertices must be a nonempty array");
        const int n = static_cast<int>(verts.size());
        std::vector<std::vector<int>> rot(n);
        std::vector<bool> comp(n, false);
        std::vector<char> seen(n, 0);
        for (const json& row : verts) {
            const int id = row.at("id").get<int>();
            if (id < 0 || id >= n || seen[id])
                throw ParseError("vertex ids must be 0..n-1 without repeats");
            seen[id] = 1;
            rot[id] = row.at("rotation").get<std::vector<int>>();
            comp[id] = row.at("complete").get<bool>();
        }
        PlaneGraph g = PlaneGraph::build(rot, comp);
        if (j.contains("meta") && j["meta"].is_object()) {
            const json& m = j["meta"];
            g.meta.p = m.value("p", -1);
            g.meta.q = m.value("q", -1);
            g.meta.p_max = m.value("p_max", -1);
            g.meta.q_max = m.value("q_max", -1);
            g.meta.height = m.value("height", -1);
            g.meta.seed = m.value("seed", std::uint64_t{0});
            g.meta.kind = m.value("kind", std::string());
            const int stored_safe = m.value("safe_height", -2);
            if (stored_safe != -2) g.meta.safe_height = stored_safe;
        }
        return g;
    } catch (const json::exception& e) {
        throw ParseError(std::string("graph json: ") + e.what());
    }
}

std::string graph_to_string(const PlaneGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

PlaneGraph graph_from_string(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid json");
    return graph_from_json(j);
}

void save_graph(const PlaneGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path);
    out << graph_to_string(g);
}

PlaneGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return graph_from_string(buf.str());
}

json subgraph_to_json(const Subgraph& s) {
    const PlaneGraph& g = *s.host;
    json edges = json::array();
    for (int e : s.eset) {
        auto [u, v] = g.edge_endpoints(e);
        if (u > v) std::swap(u, v);
        edges.push_back(json::array({u, v}));
    }
    json faces = json::array();
    for (int f : s.fset) faces.push_back(g.face_vertex_cycle(f));
    json out;
    out["vertices"] = s.vset;
    out["edges"] = edges;
    out["faces"] = faces;
    return out;
}

Subgraph subgraph_from_json(const PlaneGraph& host, const json& j) {
    try {
        Subgraph s;
        s.host = &host;
        s.vset = j.value("vertices", std::vector<int>());
        for (int v : s.vset)
            if (v < 0 || v >= host.vertex_count())
                throw ParseError("subgraph references unknown vertex");
        if (j.contains("edges")) {
            for (const json& pair : j["edges"]) {
                if (!pair.is_array() || pair.size() != 2)
                    throw ParseError("edges must be [u, v] pairs");
                const int e = host.edge_between(pair[0].get<int>(), pair[1].get<int>());
                if (e < 0) throw ParseError("subgraph edge is not a host edge");
                s.eset.push_back(e);
            }
        }
        if (j.contains("faces")) {
            for (const json& entry : j["faces"]) {
                if (entry.is_number_integer()) {
                    const int f = entry.get<int>();
                    if (f < 0 || f >= host.face_count())
                        throw ParseError("subgraph face id out of range");
                    s.fset.push_back(f);
                } else if (entry.is_array()) {
                    s.fset.push_back(resolve_face_cycle(host, entry.get<std::vector<int>>()));
                } else {
                    throw ParseError("faces must be ids or vertex cycles");
                }
            }
        }
        sort_unique(s.vset);
        sort_unique(s.eset);
        sort_unique(s.fset);
        s.validate();
        return s;
    } catch (const json::exception& e) {
        throw ParseError(std::string("subgraph json: ") + e.what());
    }
}

void save_subgraph(const Subgraph& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path);
    out << subgraph_to_json(s).dump(2) << "\n";
}

Subgraph load_subgraph(const PlaneGraph& host, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid json");
    return subgraph_from_json(host, j);
}

json rational_to_json(const Rational& r) {
    json out;
    out["num"] = r.num();
    out["den"] = r.den();
    return out;
}

std::string to_dot(const PlaneGraph& g) {
    std::ostringstream out;
    out << "graph tessera {\n";
    out << "  node [shape=circle, fontsize=10];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (g.complete(v)) out << " [style=filled, fillcolor=lightgray]";
        out << ";\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_endpoints(e);
        if (u > v) std::swap(u, v);
        out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_svg(const PlaneGraph& g) {
    const int n = g.vertex_count();
    std::vector<double> x(n, 0.0), y(n, 0.0);
    std::vector<char> fixed(n, 0);

    // Pin the outer orbit to the unit circle (reversed so the drawing runs
    // counterclockwise), then relax every interior vertex to the average of
    // its neighbors. This is the standard barycentric layout; convergence
    // is fine at these sizes.
    std::vector<int> rim;
    for (int v : g.face_vertex_cycle(g.outer_face()))
        if (!fixed[v]) {
            fixed[v] = 1;
            rim.push_back(v);
        }
    const int m = static_cast<int>(rim.size());
    for (int i = 0; i < m; ++i) {
        const double a = -2.0 * 3.14159265358979323846 * i / m;
        x[rim[i]] = std::cos(a);
        y[rim[i]] = std::sin(a);
    }
    for (int round = 0; round < 2000; ++round) {
        double shift = 0.0;
        for (int v = 0; v < n; ++v) {
            if (fixed[v]) continue;
            double sx = 0.0, sy = 0.0;
            const auto nb = g.neighbors(v);
            for (int u : nb) {
                sx += x[u];
                sy += y[u];
            }
            const double nx = sx / static_cast<double>(nb.size());
            const double ny = sy / static_cast<double>(nb.size());
            shift = std::max(shift, std::abs(nx - x[v]) + std::abs(ny - y[v]));
            x[v] = nx;
            y[v] = ny;
        }
        if (shift < 1e-9) break;
    }

    // Hyperbolic patches crowd exponentially toward the rim; spreading the
    // radius re-exposes the interior. Purely cosmetic.
    const bool hyperbolic =
        g.meta.p >= 3 && g.meta.q >= 3 && 2 * (g.meta.p + g.meta.q) < g.meta.p * g.meta.q;
    if (hyperbolic) {
        for (int v = 0; v < n; ++v) {
            const double r = std::hypot(x[v], y[v]);
            if (r > 1e-12) {
                const double s = std::pow(r, 0.55) / r;
                x[v] *= s;
                y[v] *= s;
            }
        }
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"-1.1 -1.1 2.2 2.2\">\n";
    char buf[160];
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_endpoints(e);
        std::snprintf(buf, sizeof buf,
                      "  <line x1=\"%.5f\" y1=\"%.5f\" x2=\"%.5f\" y2=\"%.5f\" "
                      "stroke=\"#777\" stroke-width=\"0.006\"/>\n",
                      x[u], y[u], x[v], y[v]);
        out << buf;
    }
    for (int v = 0; v < n; ++v) {
        std::snprintf(buf, sizeof buf,
                      "  <circle cx=\"%.5f\" cy=\"%.5f\" r=\"0.014\" fill=\"%s\" "
                      "stroke=\"#222\" stroke-width=\"0.004\"/>\n",
                      x[v], y[v], g.complete(v) ? "#222" : "#fff");
        out << buf;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace tessera

#include "tessera/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <ostream>
#include <string>
#include <typeinfo>
#include <vector>

#include <CLI11.hpp>
#include <cxxabi.h>
#include <json.hpp>

#include "tessera/curvature.hpp"
#include "tessera/errors.hpp"
#include "tessera/extremal.hpp"
#include "tessera/generators.hpp"
#include "tessera/io.hpp"
#include "tessera/isoperimetry.hpp"
#include "tessera/rng.hpp"

namespace tessera {
namespace {

using nlohmann::json;

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open for writing: " + path);
    f << text;
}

// Short class name of a thrown error, for the machine-readable record.
std::string error_type(const std::exception& e) {
    int status = 0;
    char* dem = abi::__cxa_demangle(typeid(e).name(), nullptr, nullptr, &status);
    std::string name = (status == 0 && dem != nullptr) ? dem : typeid(e).name();
    std::free(dem);
    const auto pos = name.rfind("::");
    if (pos != std::string::npos) name = name.substr(pos + 2);
    return name;
}

json rat(const Rational& r) {
    json j = rational_to_json(r);
    j["approx"] = r.to_double();
    return j;
}

json meta_json(const GraphMeta& m) {
    json j;
    j["kind"] = m.kind;
    j["p"] = m.p;
    j["q"] = m.q;
    if (m.p_max >= 0) j["p_max"] = m.p_max;
    if (m.q_max >= 0) j["q_max"] = m.q_max;
    j["height"] = m.height;
    j["seed"] = m.seed;
    return j;
}

json graph_summary(const PlaneGraph& g) {
    json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["bounded_faces"] = g.face_count() - 1;
    if (!g.meta.kind.empty()) j["meta"] = meta_json(g.meta);
    return j;
}

json subgraph_summary(const Subgraph& s) {
    json j;
    j["vertices"] = s.vertex_count();
    j["edges"] = s.edge_count();
    j["faces"] = s.face_count();
    j["euler_characteristic"] = s.euler_characteristic();
    return j;
}

json ratios_json(const IsoRatios& r) {
    json j;
    j["i_edge"] = rat(r.i_edge);
    j["i_edge_sigma"] = rat(r.i_edge_sigma);
    j["j0"] = rat(r.j0);
    j["j1"] = rat(r.j1);
    if (r.i_face) j["i_face"] = rat(*r.i_face);
    if (r.i_face_sigma) j["i_face_sigma"] = rat(*r.i_face_sigma);
    return j;
}

const char* variant_name(GBVariant v) {
    switch (v) {
        case GBVariant::outer_walk: return "outer-walk";
        case GBVariant::inner_walk: return "inner-walk";
        case GBVariant::complement_layer: return "complement-layer";
    }
    return "?";
}

json gb_json(const GaussBonnetReport& r) {
    json j;
    j["variant"] = variant_name(r.variant);
    j["curvature"] = rat(r.curvature);
    j["turn"] = rat(r.turn);
    j["rhs"] = r.rhs;
    j["pass"] = r.pass;
    return j;
}

const char* kind_name(RatioKind k) {
    switch (k) {
        case RatioKind::edge_vertex: return "edge-vertex";
        case RatioKind::face_boundary: return "face-boundary";
        case RatioKind::edge_sigma: return "edge-sigma";
        case RatioKind::face_sigma: return "face-sigma";
        case RatioKind::j0: return "j0";
        case RatioKind::j1: return "j1";
    }
    return "?";
}

RatioKind parse_kind(const std::string& s) {
    if (s == "edge-vertex") return RatioKind::edge_vertex;
    if (s == "face-boundary") return RatioKind::face_boundary;
    if (s == "edge-sigma") return RatioKind::edge_sigma;
    if (s == "face-sigma") return RatioKind::face_sigma;
    if (s == "j0") return RatioKind::j0;
    if (s == "j1") return RatioKind::j1;
    throw ParseError("unknown ratio kind: " + s);
}

// Random connected induced subgraph inside the complete region, grown by
// uniform frontier expansion. Deterministic in the rng state because vertex
// and neighbor orders are fixed by the host.
Subgraph random_safe_region(const PlaneGraph& g, SplitMix64& rng, int max_size) {
    std::vector<int> complete_vs;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.complete(v)) complete_vs.push_back(v);
    if (complete_vs.empty()) throw RegionTooSmall("sampling needs a complete vertex");
    const int start = complete_vs[rng.below(complete_vs.size())];
    const int target = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_size)));
    std::vector<int> picked{start};
    std::vector<int> frontier{start};
    std::vector<char> in(g.vertex_count(), 0);
    in[start] = 1;
    while (static_cast<int>(picked.size()) < target && !frontier.empty()) {
        const std::size_t fi = rng.below(frontier.size());
        const int v = frontier[fi];
        std::vector<int> fresh;
        for (int u : g.neighbors(v))
            if (!in[u] && g.complete(u)) fresh.push_back(u);
        if (fresh.empty()) {
            frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(fi));
            continue;
        }
        const int u = fresh[rng.below(fresh.size())];
        in[u] = 1;
        picked.push_back(u);
        frontier.push_back(u);
    }
    return Subgraph::induced(g, picked);
}

struct Emitted {
    std::ostream& out;
    int code = 0;
};

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact combinatorial geometry on planar tessellations", "tessera"};
    app.require_subcommand(1);
    int code = 0;

    // generate
    struct {
        int p = 0, q = 0, height = 0;
        std::uint64_t seed = 0;
        std::string perturb, out_path;
    } gen;
    CLI::App* g_cmd = app.add_subcommand("generate", "build a tessellation patch and write it as JSON");
    g_cmd->add_option("--p", gen.p, "vertex degree")->required();
    g_cmd->add_option("--q", gen.q, "face degree")->required();
    g_cmd->add_option("--height", gen.height, "growth layers around the central face")->required();
    g_cmd->add_option("--seed", gen.seed, "seed for the perturbed sampler (default 0)");
    g_cmd->add_option("--perturb", gen.perturb, "PMAX,QMAX upper degree bounds; switches to a perturbed patch");
    g_cmd->add_option("--out", gen.out_path, "output file (default stdout)");
    g_cmd->callback([&] {
        PlaneGraph g = [&] {
            if (gen.perturb.empty()) return regular_patch(gen.p, gen.q, gen.height);
            const auto comma = gen.perturb.find(',');
            if (comma == std::string::npos) throw ParseError("--perturb expects PMAX,QMAX");
            PatchSpec spec;
            try {
                spec.p_max = std::stoi(gen.perturb.substr(0, comma));
                spec.q_max = std::stoi(gen.perturb.substr(comma + 1));
            } catch (const std::exception&) {
                throw ParseError("--perturb expects PMAX,QMAX");
            }
            spec.p_min = gen.p;
            spec.q_min = gen.q;
            spec.height = gen.height;
            spec.seed = gen.seed;
            return perturbed_patch(spec);
        }();
        const std::string text = graph_to_string(g);
        if (gen.out_path.empty())
            out << text;
        else
            write_text(gen.out_path, text);
    });

    // analyze
    struct {
        std::string graph, subgraph;
        int root = 0, ball = 1;
    } an;
    CLI::App* a_cmd = app.add_subcommand("analyze", "ratios, curvature and boundary identities of one subgraph");
    a_cmd->add_option("--graph", an.graph, "host graph file")->required();
    CLI::Option* a_sub = a_cmd->add_option("--subgraph", an.subgraph, "subgraph file (default: a ball)");
    a_cmd->add_option("--root", an.root, "ball center (default 0)")->excludes(a_sub);
    a_cmd->add_option("--ball", an.ball, "ball radius (default 1)")->excludes(a_sub);
    a_cmd->callback([&] {
        const PlaneGraph g = load_graph(an.graph);
        const Subgraph s = an.subgraph.empty() ? combinatorial_ball(g, an.root, an.ball)
                                               : load_subgraph(g, an.subgraph);
        json rep;
        rep["config"] = {{"command", "analyze"},
                         {"graph", an.graph},
                         {"subgraph", an.subgraph},
                         {"root", an.root},
                         {"ball", an.ball}};
        rep["graph"] = graph_summary(g);
        rep["subgraph"] = subgraph_summary(s);
        rep["subgraph"]["connected"] = s.connected();
        rep["ratios"] = ratios_json(subgraph_ratios(s));
        rep["curvature"] = rat(kappa_sum(g, s.vset));
        rep["gauss_bonnet"] = json::array();
        for (GBVariant v : {GBVariant::outer_walk, GBVariant::inner_walk})
            rep["gauss_bonnet"].push_back(gb_json(gauss_bonnet_check(g, s, v)));
        emit(out, rep);
    });

    // verify
    CLI::App* v_cmd = app.add_subcommand("verify", "check an identity or bound; exit 1 on a counterexample");
    v_cmd->require_subcommand(1);

    struct {
        std::string graph, witness = "tessera-witness.json";
        int samples = 100, max_size = 12;
        std::uint64_t seed = 0;
    } vgb;
    CLI::App* vgb_cmd = v_cmd->add_subcommand("gauss-bonnet", "curvature + turn = Euler characteristic on sampled regions");
    vgb_cmd->add_option("--graph", vgb.graph, "host graph file")->required();
    vgb_cmd->add_option("--samples", vgb.samples, "number of sampled regions (default 100)");
    vgb_cmd->add_option("--seed", vgb.seed, "sampler seed (default 0)");
    vgb_cmd->add_option("--max-size", vgb.max_size, "largest sampled region (default 12)");
    vgb_cmd->add_option("--witness-out", vgb.witness, "where to write a counterexample");
    vgb_cmd->callback([&] {
        const PlaneGraph g = load_graph(vgb.graph);
        SplitMix64 rng(vgb.seed);
        json rep;
        rep["config"] = {{"command", "verify gauss-bonnet"},
                         {"graph", vgb.graph},
                         {"samples", vgb.samples},
                         {"seed", vgb.seed},
                         {"max_size", vgb.max_size}};
        json violations = json::array();
        long long checked = 0;
        bool witness_written = false;
        for (int i = 0; i < vgb.samples; ++i) {
            const Subgraph s = random_safe_region(g, rng, vgb.max_size);
            for (GBVariant v : {GBVariant::outer_walk, GBVariant::inner_walk}) {
                const GaussBonnetReport r = gauss_bonnet_check(g, s, v);
                ++checked;
                if (r.pass) continue;
                json bad = gb_json(r);
                bad["sample"] = i;
                bad["subgraph"] = subgraph_to_json(s);
                violations.push_back(bad);
                if (!witness_written) {
                    save_subgraph(s, vgb.witness);
                    witness_written = true;
                }
            }
        }
        rep["checked"] = checked;
        rep["violations"] = violations;
        rep["all_pass"] = violations.empty();
        if (!violations.empty()) {
            rep["witness_file"] = vgb.witness;
            code = 1;
        }
        emit(out, rep);
    });

    struct {
        std::string graph, witness = "tessera-witness.json";
        int p = 0, q = 0, radius = 0;
    } vlm;
    CLI::App* vlm_cmd = v_cmd->add_subcommand("lemma", "inner boundary lower bound on balls around vertex 0");
    vlm_cmd->add_option("--graph", vlm.graph, "host graph file")->required();
    vlm_cmd->add_option("--p", vlm.p, "vertex degree floor")->required();
    vlm_cmd->add_option("--q", vlm.q, "face degree floor")->required();
    vlm_cmd->add_option("--radius", vlm.radius, "largest ball radius (default: auto, at most 6)");
    vlm_cmd->add_option("--witness-out", vlm.witness, "where to write a counterexample");
    vlm_cmd->callback([&] {
        const PlaneGraph g = load_graph(vlm.graph);
        json rep;
        rep["config"] = {{"command", "verify lemma"},
                         {"graph", vlm.graph},
                         {"p", vlm.p},
                         {"q", vlm.q},
                         {"radius", vlm.radius}};
        json rows = json::array();
        const int cap = vlm.radius > 0 ? vlm.radius : 6;
        bool all_ok = true;
        for (int r = 1; r <= cap; ++r) {
            Subgraph ball;
            try {
                ball = combinatorial_ball(g, 0, r);
            } catch (const UnsafeSubgraph&) {
                if (vlm.radius > 0) throw;
                break;
            }
            const LemmaReport lr = lemma_check(g, ball, vlm.p, vlm.q);
            json row;
            row["radius"] = r;
            row["inner_boundary"] = lr.inner_boundary;
            row["interior_vertices"] = lr.interior_vertices;
            row["interior_boundary"] = lr.interior_boundary;
            row["bound"] = lr.bound;
            row["ok"] = lr.ok;
            rows.push_back(row);
            if (!lr.ok) {
                all_ok = false;
                if (code == 0) {
                    save_subgraph(ball, vlm.witness);
                    rep["witness_file"] = vlm.witness;
                    code = 1;
                }
            }
        }
        if (rows.empty()) throw RegionTooSmall("no ball of radius 1 fits in the safe region");
        rep["rows"] = rows;
        rep["all_ok"] = all_ok;
        emit(out, rep);
    });

    struct {
        int q = 0;
        long long n_max = 0;
        std::string witness = "tessera-witness.json";
    } vwl;
    CLI::App* vwl_cmd = v_cmd->add_subcommand("weil", "per-n table of extremal subgraphs against the volume bound");
    vwl_cmd->add_option("--q", vwl.q, "face degree (3, 4 or 6)")->required();
    vwl_cmd->add_option("--n-max", vwl.n_max, "largest boundary size")->required();
    vwl_cmd->add_option("--witness-out", vwl.witness, "where to write a counterexample");
    vwl_cmd->callback([&] {
        json rep;
        rep["config"] = {{"command", "verify weil"}, {"q", vwl.q}, {"n_max", vwl.n_max}};
        if (vwl.n_max < 1) throw RegionTooSmall("--n-max must be at least 1");
        json rows = json::array();
        bool all_ok = true;
        for (long long n = 1; n <= vwl.n_max; ++n) {
            const EqualityWitness w = equality_subgraph(vwl.q, n);
            json row;
            row["n"] = n;
            row["bound"] = weil_bound(vwl.q, n);
            row["possible"] = w.possible;
            if (w.possible) {
                row["vertices"] = w.report.observed;
                row["equality"] = w.report.equality;
                if (!w.report.equality) {
                    all_ok = false;
                    if (code == 0) {
                        save_subgraph(w.witness.sub, vwl.witness);
                        rep["witness_file"] = vwl.witness;
                        code = 1;
                    }
                }
            } else {
                row["reason"] = w.reason;
            }
            rows.push_back(row);
        }
        rep["rows"] = rows;
        rep["all_ok"] = all_ok;
        emit(out, rep);
    });

    struct {
        std::string graph, witness = "tessera-witness.json";
        int samples = 50, max_size = 10;
        std::uint64_t seed = 0;
    } vpr;
    CLI::App* vpr_cmd = v_cmd->add_subcommand("proposition", "boundary growth identity on sampled regions");
    vpr_cmd->add_option("--graph", vpr.graph, "host graph file")->required();
    vpr_cmd->add_option("--samples", vpr.samples, "number of sampled regions (default 50)");
    vpr_cmd->add_option("--seed", vpr.seed, "sampler seed (default 0)");
    vpr_cmd->add_option("--max-size", vpr.max_size, "largest sampled region (default 10)");
    vpr_cmd->add_option("--witness-out", vpr.witness, "where to write a counterexample");
    vpr_cmd->callback([&] {
        const PlaneGraph g = load_graph(vpr.graph);
        SplitMix64 rng(vpr.seed);
        json rep;
        rep["config"] = {{"command", "verify proposition"},
                         {"graph", vpr.graph},
                         {"samples", vpr.samples},
                         {"seed", vpr.seed},
                         {"max_size", vpr.max_size}};
        json violations = json::array();
        long long applicable = 0, skipped = 0;
        bool witness_written = false;
        for (int i = 0; i < vpr.samples; ++i) {
            const Subgraph s = random_safe_region(g, rng, vpr.max_size);
            PropositionReport pr;
            try {
                pr = proposition_check(g, s);
            } catch (const UnsafeSubgraph&) {
                // closure left the known region; the hypothesis cannot be
                // evaluated at the patch rim, which is not a counterexample
                ++skipped;
                continue;
            }
            if (!pr.applicable) {
                ++skipped;
                continue;
            }
            ++applicable;
            if (pr.equality) continue;
            json bad;
            bad["sample"] = i;
            bad["boundary_before"] = pr.boundary_before;
            bad["boundary_after"] = pr.boundary_after;
            bad["predicted"] = rat(pr.predicted);
            bad["curvature"] = rat(pr.curvature);
            bad["subgraph"] = subgraph_to_json(s);
            violations.push_back(bad);
            if (!witness_written) {
                save_subgraph(s, vpr.witness);
                witness_written = true;
            }
        }
        rep["applicable"] = applicable;
        rep["skipped"] = skipped;
        rep["violations"] = violations;
        rep["all_pass"] = violations.empty();
        if (!violations.empty()) {
            rep["witness_file"] = vpr.witness;
            code = 1;
        }
        emit(out, rep);
    });

    struct {
        std::string graph, witness = "tessera-witness.json";
        int p1 = 0, q1 = 0, p2 = 0, q2 = 0, budget = 6;
    } vbd;
    CLI::App* vbd_cmd = v_cmd->add_subcommand("bounds", "certified lower bounds and upper witness sequence");
    vbd_cmd->add_option("--graph", vbd.graph, "host graph file")->required();
    vbd_cmd->add_option("--p1", vbd.p1, "vertex degree floor")->required();
    vbd_cmd->add_option("--q1", vbd.q1, "face degree floor")->required();
    vbd_cmd->add_option("--p2", vbd.p2, "vertex degree ceiling")->required();
    vbd_cmd->add_option("--q2", vbd.q2, "face degree ceiling")->required();
    vbd_cmd->add_option("--budget", vbd.budget, "brute-force size cap (default 6)");
    vbd_cmd->add_option("--witness-out", vbd.witness, "where to write the failing report");
    vbd_cmd->callback([&] {
        const PlaneGraph g = load_graph(vbd.graph);
        const BoundsReport br = verify_bounds(g, vbd.p1, vbd.q1, vbd.p2, vbd.q2, vbd.budget);
        json rep;
        rep["config"] = {{"command", "verify bounds"},
                         {"graph", vbd.graph},
                         {"p1", vbd.p1},
                         {"q1", vbd.q1},
                         {"p2", vbd.p2},
                         {"q2", vbd.q2},
                         {"budget", vbd.budget}};
        json lower = json::array();
        for (const BoundCheck& c : br.lower) {
            json row;
            row["kind"] = kind_name(c.kind);
            row["observed"] = rat(c.observed);
            row["bound"] = c.bound;
            row["ok"] = c.ok;
            lower.push_back(row);
        }
        json upper = json::array();
        for (const UpperWitnessRow& w : br.upper) {
            json row;
            row["height"] = w.height;
            row["vertices"] = w.vertices;
            row["boundary"] = w.boundary;
            row["face_degree_sum"] = w.face_degree_sum;
            row["i_face_sigma"] = rat(w.i_face_sigma);
            upper.push_back(row);
        }
        rep["lower"] = lower;
        rep["upper"] = upper;
        rep["upper_bound"] = br.upper_bound;
        rep["upper_gap"] = br.upper_gap;
        rep["lower_ok"] = br.lower_ok;
        rep["upper_decreasing"] = br.upper_decreasing;
        rep["ok"] = br.ok;
        if (!br.ok) {
            write_text(vbd.witness, rep.dump(2) + "\n");
            rep["witness_file"] = vbd.witness;
            code = 1;
        }
        emit(out, rep);
    });

    // search
    CLI::App* s_cmd = app.add_subcommand("search", "exhaustive certified searches");
    s_cmd->require_subcommand(1);
    struct {
        std::string graph, ratio, out_path;
        int max_size = 0;
    } smr;
    CLI::App* smr_cmd = s_cmd->add_subcommand("min-ratio", "certified minimum ratio over connected induced subgraphs");
    smr_cmd->add_option("--graph", smr.graph, "host graph file")->required();
    smr_cmd->add_option("--max-size", smr.max_size, "largest subgraph size")->required();
    smr_cmd->add_option("--ratio", smr.ratio, "edge-vertex | face-boundary | edge-sigma | face-sigma | j0 | j1")
        ->required()
        ->check(CLI::IsMember({"edge-vertex", "face-boundary", "edge-sigma", "face-sigma", "j0", "j1"}));
    smr_cmd->add_option("--out", smr.out_path, "write the witness subgraph to this file");
    smr_cmd->callback([&] {
        const PlaneGraph g = load_graph(smr.graph);
        const RatioKind kind = parse_kind(smr.ratio);
        const MinRatioResult res = brute_force_min_ratio(g, smr.max_size, kind);
        json rep;
        rep["config"] = {{"command", "search min-ratio"},
                         {"graph", smr.graph},
                         {"max_size", smr.max_size},
                         {"ratio", smr.ratio}};
        rep["kind"] = kind_name(kind);
        rep["minimum"] = rat(res.minimum);
        rep["family_size"] = res.family_size;
        rep["witness"] = subgraph_to_json(res.witness);
        if (!smr.out_path.empty()) save_subgraph(res.witness, smr.out_path);
        emit(out, rep);
    });

    // extremal
    CLI::App* x_cmd = app.add_subcommand("extremal", "constructions that meet the sharp bounds");
    x_cmd->require_subcommand(1);

    struct {
        std::string graph, out_path;
        int radius = 0, root = 0;
    } xqb;
    CLI::App* xqb_cmd = x_cmd->add_subcommand("quasi-ball", "iterated face closure around a root vertex");
    xqb_cmd->add_option("--graph", xqb.graph, "host graph file")->required();
    xqb_cmd->add_option("--radius", xqb.radius, "closure iterations")->required();
    xqb_cmd->add_option("--root", xqb.root, "core vertex (default 0)");
    xqb_cmd->add_option("--out", xqb.out_path, "write the subgraph to this file");
    xqb_cmd->callback([&] {
        const PlaneGraph g = load_graph(xqb.graph);
        const Subgraph ball = quasi_ball(g, Subgraph::single_vertex(g, xqb.root), xqb.radius);
        const BoundaryWalk walk = boundary_walk(ball);
        json rep;
        rep["config"] = {{"command", "extremal quasi-ball"},
                         {"graph", xqb.graph},
                         {"radius", xqb.radius},
                         {"root", xqb.root}};
        rep["subgraph"] = subgraph_summary(ball);
        rep["boundary_length"] = walk.length();
        rep["boundary_vertices"] = static_cast<long long>(walk.vertex_set().size());
        rep["ratios"] = ratios_json(subgraph_ratios(ball));
        rep["curvature"] = rat(kappa_sum(g, ball.vset));
        if (!xqb.out_path.empty()) save_subgraph(ball, xqb.out_path);
        emit(out, rep);
    });

    struct {
        int p = 0, deltas = 0;
        long long n = 0;
        std::string out_path, witness = "tessera-witness.json";
    } xpb;
    CLI::App* xpb_cmd = x_cmd->add_subcommand("puffed-ball", "canonical n-vertex prefix of the regular triangulation");
    xpb_cmd->add_option("--p", xpb.p, "vertex degree (at least 6)")->required();
    xpb_cmd->add_option("--n", xpb.n, "vertex count")->required();
    xpb_cmd->add_option("--deltas", xpb.deltas, "also check boundary increments up to this prefix size");
    xpb_cmd->add_option("--out", xpb.out_path, "write the subgraph to this file");
    xpb_cmd->add_option("--witness-out", xpb.witness, "where to write a failing increment report");
    xpb_cmd->callback([&] {
        if (xpb.n > (1LL << 22)) throw RegionTooSmall("--n too large for patch materialization");
        const HostedSubgraph hb = puffed_ball(xpb.p, xpb.n);
        const BoundaryWalk walk = boundary_walk(hb.sub);
        json rep;
        rep["config"] = {{"command", "extremal puffed-ball"},
                         {"p", xpb.p},
                         {"n", xpb.n},
                         {"deltas", xpb.deltas}};
        rep["subgraph"] = subgraph_summary(hb.sub);
        rep["boundary_length"] = walk.length();
        rep["boundary_cycles"] = walk.cycle_count();
        if (xpb.deltas > 0) {
            const RecurrenceSeq seq = delta_sequence(xpb.p, xpb.deltas);
            json d;
            d["deltas"] = seq.deltas;
            d["boundary_lengths"] = seq.observed;
            d["max_zero_run"] = seq.max_zero_run;
            d["window"] = xpb.p + 1;
            d["window_ok"] = seq.window_ok;
            rep["increments"] = d;
            if (!seq.window_ok) {
                write_text(xpb.witness, rep.dump(2) + "\n");
                rep["witness_file"] = xpb.witness;
                code = 1;
            }
        }
        if (!xpb.out_path.empty()) save_subgraph(hb.sub, xpb.out_path);
        emit(out, rep);
    });

    struct {
        int q = 0;
        long long n = 0;
        std::string out_path, witness = "tessera-witness.json";
    } xwl;
    CLI::App* xwl_cmd = x_cmd->add_subcommand("weil", "subgraph attaining the volume bound for one boundary size");
    xwl_cmd->add_option("--q", xwl.q, "face degree (3, 4 or 6)")->required();
    xwl_cmd->add_option("--n", xwl.n, "boundary vertex count")->required();
    xwl_cmd->add_option("--out", xwl.out_path, "write the witness subgraph to this file");
    xwl_cmd->add_option("--witness-out", xwl.witness, "where to write a failing witness");
    xwl_cmd->callback([&] {
        const EqualityWitness w = equality_subgraph(xwl.q, xwl.n);
        json rep;
        rep["config"] = {{"command", "extremal weil"}, {"q", xwl.q}, {"n", xwl.n}};
        rep["possible"] = w.possible;
        if (w.possible) {
            json r;
            r["q"] = w.report.q;
            r["n"] = w.report.n;
            r["bound"] = w.report.bound;
            r["observed"] = w.report.observed;
            r["within"] = w.report.within;
            r["equality"] = w.report.equality;
            rep["report"] = r;
            rep["subgraph"] = subgraph_summary(w.witness.sub);
            if (!xwl.out_path.empty()) save_subgraph(w.witness.sub, xwl.out_path);
            if (!w.report.equality) {
                save_subgraph(w.witness.sub, xwl.witness);
                rep["witness_file"] = xwl.witness;
                code = 1;
            }
        } else {
            rep["reason"] = w.reason;
        }
        emit(out, rep);
    });

    struct {
        std::string graph, mode, witness = "tessera-witness.json", out_path;
        int p = 0;
    } xtr;
    CLI::App* xtr_cmd = x_cmd->add_subcommand("transfer", "compare a triangulation against its regular counterpart");
    xtr_cmd->add_option("--graph", xtr.graph, "finite triangulation file")->required();
    xtr_cmd->add_option("--p", xtr.p, "internal degree floor (at least 6)")->required();
    xtr_cmd->add_option("--mode", xtr.mode, "volume | boundary")
        ->required()
        ->check(CLI::IsMember({"volume", "boundary"}));
    xtr_cmd->add_option("--out", xtr.out_path, "write the matched prefix to this file");
    xtr_cmd->add_option("--witness-out", xtr.witness, "where to write a failing report");
    xtr_cmd->callback([&] {
        const PlaneGraph g = load_graph(xtr.graph);
        const TransferMode mode =
            xtr.mode == "volume" ? TransferMode::volume : TransferMode::boundary;
        const TransferReport tr = transfer_triangulation(g, xtr.p, mode);
        json rep;
        rep["config"] = {{"command", "extremal transfer"},
                         {"graph", xtr.graph},
                         {"p", xtr.p},
                         {"mode", xtr.mode}};
        rep["triangulation"] = {{"vertices", tr.t_vertices},
                                {"boundary_vertices", tr.t_boundary_vertices},
                                {"boundary_edges", tr.t_boundary_edges}};
        rep["witness"] = {{"vertices", tr.w_vertices}, {"boundary", tr.w_boundary}};
        rep["ok"] = tr.ok;
        if (!xtr.out_path.empty()) save_subgraph(tr.witness.sub, xtr.out_path);
        if (!tr.ok) {
            write_text(xtr.witness, rep.dump(2) + "\n");
            rep["witness_file"] = xtr.witness;
            code = 1;
        }
        emit(out, rep);
    });

    // export
    CLI::App* e_cmd = app.add_subcommand("export", "re-emit a graph in another format");
    e_cmd->require_subcommand(1);
    struct {
        std::string graph, out_path;
    } exp[3];
    const char* fmt_names[3] = {"dot", "svg", "json"};
    const char* fmt_help[3] = {"abstract graph in DOT syntax",
                               "embedded drawing (disk layout for negative curvature)",
                               "canonical JSON (round-trips to an identical graph)"};
    for (int i = 0; i < 3; ++i) {
        CLI::App* f_cmd = e_cmd->add_subcommand(fmt_names[i], fmt_help[i]);
        f_cmd->add_option("--graph", exp[i].graph, "host graph file")->required();
        f_cmd->add_option("--out", exp[i].out_path, "output file (default stdout)");
        f_cmd->callback([&, i] {
            const PlaneGraph g = load_graph(exp[i].graph);
            const std::string text = i == 0 ? to_dot(g) : i == 1 ? to_svg(g) : graph_to_string(g);
            if (exp[i].out_path.empty())
                out << text;
            else
                write_text(exp[i].out_path, text);
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        json rec;
        rec["error"] = {{"type", e.get_name()}, {"message", e.what()}};
        emit(err, rec);
        return 2;
    } catch (const Error& e) {
        json rec;
        rec["error"] = {{"type", error_type(e)}, {"message", e.what()}};
        emit(err, rec);
        return 2;
    }
    return code;
}

}  // namespace tessera

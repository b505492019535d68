#include "nzf/cli.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nzf/cdc.hpp"
#include "nzf/constructions.hpp"
#include "nzf/errors.hpp"
#include "nzf/flow.hpp"
#include "nzf/graph.hpp"
#include "nzf/io.hpp"
#include "nzf/optimize.hpp"
#include "nzf/repro.hpp"
#include "nzf/triangulate.hpp"

namespace nzf::cli {

namespace {

using nlohmann::json;

Multigraph load_graph(const std::string& spec, const std::string& format) {
    // Built-in names resolve without files; anything else is a path.
    try {
        return repro::builtin_graph(spec);
    } catch (const DomainError&) {
    }
    std::string text = io::read_file(spec);
    GraphFormat fmt;
    if (format == "graph6") {
        fmt = GraphFormat::Graph6;
    } else if (format == "json") {
        fmt = GraphFormat::EdgeListJson;
    } else {
        bool looks_json = spec.size() >= 5 && spec.substr(spec.size() - 5) == ".json";
        if (!looks_json) {
            for (char c : text) {
                if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
                looks_json = c == '{';
                break;
            }
        }
        fmt = looks_json ? GraphFormat::EdgeListJson : GraphFormat::Graph6;
    }
    return parse_graph(text, fmt);
}

void reject_bridges(const Multigraph& g) {
    std::vector<int> b = bridges(g);
    if (!b.empty())
        throw DomainError("bridge: edge " + std::to_string(b.front()) + " is a bridge");
}

void emit(const std::string& out_path, const std::string& content, std::ostream& out) {
    if (out_path.empty())
        out << content << "\n";
    else
        io::write_file(out_path, content);
}

json with_meta(json j, json config) {
    j["tool_version"] = io::kToolVersion;
    j["config"] = std::move(config);
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"nowhere-zero vector flow toolkit"};
    app.require_subcommand(1);

    std::string graph_spec, format, out_path, flow_path, mode = "attached", method;
    int d = 2, starts = 64, k = 5, n = 0;
    std::uint64_t seed = 0, budget = kDefaultSearchBudget;
    double tolerance = kDefaultTolerance, r_override = 0.0;

    auto add_graph_opts = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--graph", graph_spec, "built-in name or input path");
        if (required) opt->required();
        cmd->add_option("--format", format, "graph6|json (default: sniff)");
    };

    auto* gen_cmd = app.add_subcommand("gen", "generate a named graph");
    std::string gen_kind;
    int gen_param = -1;
    gen_cmd->add_option("kind", gen_kind, "wheel|prism|complete|cycle|flower|k33|petersen|pdelta|cube|k4|j5")->required();
    gen_cmd->add_option("param", gen_param, "size parameter for parametric families");
    gen_cmd->add_option("--out", out_path, "output path");

    auto* verify_cmd = app.add_subcommand("verify", "verify a flow against its graph");
    add_graph_opts(verify_cmd, false);
    verify_cmd->add_option("--flow", flow_path, "flow JSON path")->required();
    verify_cmd->add_option("--tolerance", tolerance, "conservation tolerance");
    verify_cmd->add_option("--out", out_path, "report output path");

    auto* bound_cmd = app.add_subcommand("bound", "certified lower bound");
    add_graph_opts(bound_cmd);
    bound_cmd->add_option("--d", d, "flow dimension");
    bound_cmd->add_option("--out", out_path, "output path");

    auto* construct_cmd = app.add_subcommand("construct", "closed-form flow constructions");
    add_graph_opts(construct_cmd, false);
    construct_cmd->add_option("--method", method, "seymour|bipartite|petersen|ocdc|prism")->required();
    construct_cmd->add_option("--k", k, "cycle count for --method ocdc");
    construct_cmd->add_option("--n", n, "odd n for --method prism");
    construct_cmd->add_option("--flow", flow_path, "wheel flow JSON for --method prism");
    construct_cmd->add_option("--budget", budget, "search budget");
    construct_cmd->add_option("--out", out_path, "output path");

    auto* cdc_cmd = app.add_subcommand("search-cdc", "search for an oriented k-cycle double cover");
    add_graph_opts(cdc_cmd);
    cdc_cmd->add_option("--k", k, "number of cycles")->required();
    cdc_cmd->add_option("--budget", budget, "node-expansion budget");
    cdc_cmd->add_option("--out", out_path, "output path");

    auto* min_cmd = app.add_subcommand("minimize", "multi-start strength minimization");
    add_graph_opts(min_cmd);
    min_cmd->add_option("--d", d, "flow dimension");
    min_cmd->add_option("--starts", starts, "number of random starts");
    min_cmd->add_option("--seed", seed, "random seed");
    min_cmd->add_option("--budget", budget, "warm-start search budget");
    min_cmd->add_option("--tolerance", tolerance, "step-size tolerance");
    min_cmd->add_option("--out", out_path, "report output path");

    auto* tri_cmd = app.add_subcommand("triangulate", "flow triangulation and rendering");
    add_graph_opts(tri_cmd, false);
    tri_cmd->add_option("--flow", flow_path, "flow JSON path")->required();
    tri_cmd->add_option("--mode", mode, "attached|exploded")->check(CLI::IsMember({"attached", "exploded"}));
    tri_cmd->add_option("--r", r_override, "validate against this strength");
    tri_cmd->add_option("--out", out_path, "output path (.svg or .json)");

    auto* repro_cmd = app.add_subcommand("repro", "reproduce a named experiment");
    std::string target;
    repro_cmd->add_option("target", target, "k4|k33|wheels|prisms|petersen|j5|pdelta|tau2-check")->required();
    repro_cmd->add_option("--out", out_path, "bundle output path");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*gen_cmd) {
            std::string name = gen_kind;
            if (gen_param >= 0) name += ":" + std::to_string(gen_param);
            Multigraph g = repro::builtin_graph(name);
            emit(out_path, serialize_graph(g, GraphFormat::EdgeListJson), out);
            return 0;
        }
        if (*verify_cmd) {
            auto [fg, flow] = io::flow_from_json(json::parse(io::read_file(flow_path)));
            Multigraph g = graph_spec.empty() ? fg : load_graph(graph_spec, format);
            if (g.edge_count() != fg.edge_count() || g.vertex_count() != fg.vertex_count())
                throw ShapeError("--graph does not match the flow's embedded graph");
            reject_bridges(g);
            FlowReport rep = verify_flow(g, flow, tolerance);
            json j;
            j["max_conservation_residual"] = rep.max_conservation_residual;
            j["min_norm"] = rep.min_norm;
            j["max_norm"] = rep.max_norm;
            if (rep.strength)
                j["strength"] = *rep.strength;
            else
                j["strength"] = nullptr;
            auto viol = json::array();
            for (const FlowViolation& v : rep.violations)
                viol.push_back({{"kind", v.kind == FlowViolation::Kind::VertexImbalance ? "vertex" : "edge"},
                                {"index", v.index},
                                {"description", v.description}});
            j["violations"] = viol;
            emit(out_path, with_meta(j, {{"tolerance", tolerance}}).dump(2), out);
            if (!rep.valid()) {
                err << "error: invalid-flow: " << rep.violations.size() << " violation(s)\n";
                return 1;
            }
            return 0;
        }
        if (*bound_cmd) {
            Multigraph g = load_graph(graph_spec, format);
            double lb = lower_bound(g, d);
            json j;
            j["lower_bound"] = lb;
            j["d"] = d;
            j["graph"] = io::graph_to_json(g);
            emit(out_path, with_meta(j, {{"d", d}}).dump(2), out);
            return 0;
        }
        if (*construct_cmd) {
            VectorFlow f;
            Multigraph g;
            if (method == "prism") {
                if (n <= 0 || flow_path.empty())
                    throw DomainError("construct --method prism needs --n and --flow");
                auto [wg, wf] = io::flow_from_json(json::parse(io::read_file(flow_path)));
                (void)wg;
                g = gen::prism(n);
                f = prism_flow(n, wf);
            } else if (method == "petersen") {
                g = gen::petersen();
                f = petersen_flow();
            } else {
                g = load_graph(graph_spec, format);
                reject_bridges(g);
                if (method == "seymour") {
                    f = seymour_flow(g, budget);
                } else if (method == "bipartite") {
                    f = bipartite_cubic_flow(g);
                } else if (method == "ocdc") {
                    OcdcSearchResult r = find_ocdc(g, k, budget);
                    if (r.status == SearchStatus::Timeout)
                        throw TimeoutError("cycle double cover search hit its budget");
                    if (r.status == SearchStatus::Exhausted)
                        throw DomainError("no oriented " + std::to_string(k) + "-cycle double cover exists");
                    f = flow_from_ocdc(g, *r.cover, kgon_points(k));
                } else {
                    throw DomainError("unknown construction method '" + method + "'");
                }
            }
            emit(out_path, with_meta(io::flow_to_json(g, f), {{"method", method}}).dump(2), out);
            return 0;
        }
        if (*cdc_cmd) {
            Multigraph g = load_graph(graph_spec, format);
            reject_bridges(g);
            OcdcSearchResult r = find_ocdc(g, k, budget);
            json j;
            j["k"] = k;
            j["nodes_expanded"] = r.nodes_expanded;
            j["found"] = r.status == SearchStatus::Found;
            j["exhausted"] = r.status == SearchStatus::Exhausted;
            if (r.cover) j["cover"] = io::cover_to_json(*r.cover);
            emit(out_path, with_meta(j, {{"k", k}, {"budget", budget}}).dump(2), out);
            if (r.status == SearchStatus::Timeout) {
                err << "error: timeout: search budget exhausted\n";
                return 3;
            }
            return 0;
        }
        if (*min_cmd) {
            Multigraph g = load_graph(graph_spec, format);
            OptimizeConfig cfg;
            cfg.d = d;
            cfg.starts = starts;
            cfg.seed = seed;
            cfg.tolerance = tolerance;
            cfg.warm_budget = budget;
            OptimizeReport rep = minimize(g, cfg);
            json cfgj = {{"d", d}, {"starts", starts}, {"seed", seed}, {"tolerance", tolerance}};
            emit(out_path, with_meta(io::report_to_json(g, rep), cfgj).dump(2), out);
            return 0;
        }
        if (*tri_cmd) {
            auto [fg, flow] = io::flow_from_json(json::parse(io::read_file(flow_path)));
            Multigraph g = graph_spec.empty() ? fg : load_graph(graph_spec, format);
            reject_bridges(g);
            FlowTriangulation t = triangulate(g, flow);
            double r_check = r_override > 0.0 ? r_override : strength(flow, g);
            TriangulationReport tr = validate(g, t, r_check);
            if (!tr.ok) throw InvalidTriangulationError(tr.violations.front().what);
            LayoutMode lm = mode == "exploded" ? LayoutMode::Exploded : LayoutMode::Attached;
            if (!t.attached) lm = LayoutMode::Exploded;
            bool svg = out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".svg";
            if (svg)
                emit(out_path, render_svg(t, lm), out);
            else
                emit(out_path, with_meta(io::triangulation_to_json(t), {{"mode", mode}, {"r", r_check}}).dump(2), out);
            return 0;
        }
        if (*repro_cmd) {
            repro::Result res = repro::run_target(target);
            for (const repro::Check& c : res.checks)
                out << (c.pass ? "[PASS] " : "[FAIL] ") << res.target << "/" << c.name << ": "
                    << c.detail << "\n";
            if (!out_path.empty()) io::write_file(out_path, repro::result_to_json(res).dump(2));
            if (!res.pass) {
                err << "error: criterion-failed: repro target '" << target << "'\n";
                return 1;
            }
            return 0;
        }
    } catch (const TimeoutError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace nzf::cli

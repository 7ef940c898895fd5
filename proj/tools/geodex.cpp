#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geodex/convexity.hpp"
#include "geodex/distance.hpp"
#include "geodex/formulas.hpp"
#include "geodex/io.hpp"
#include "geodex/trees.hpp"
#include "geodex/verify.hpp"

namespace {

using geodex::Graph;
using geodex::SolverKind;
using nlohmann::json;

constexpr int kExitFailure = 1;  // verification mismatch / check failure
constexpr int kExitParse = 2;    // malformed input
constexpr int kExitReject = 3;   // size/connectivity/parameter rejection

geodex::GraphFormat parse_format(const std::string& name) {
    if (name == "edgelist") return geodex::GraphFormat::edge_list;
    if (name == "graph6") return geodex::GraphFormat::graph6;
    throw std::domain_error("unknown format '" + name + "' (expected edgelist or graph6)");
}

SolverKind parse_solver(const std::string& name) {
    if (name == "exhaustive") return SolverKind::exhaustive;
    if (name == "bnb") return SolverKind::bnb;
    if (name == "both") return SolverKind::both;
    throw std::domain_error("unknown solver '" + name + "' (expected exhaustive, bnb or both)");
}

std::uint64_t env_seed() {
    if (const char* s = std::getenv("GEODEX_SEED")) return std::strtoull(s, nullptr, 10);
    return 20260808ULL;
}

std::string join_members(const geodex::VertexSet& s) {
    std::string out;
    for (int v : s.members()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

struct ConOptions {
    std::string file;
    std::string format = "edgelist";
    std::string solver = "exhaustive";
    bool prism = false;
    bool json_out = false;
    bool no_timing = false;
};

int run_con(const ConOptions& opt) {
    Graph g = geodex::read_graph_file(opt.file, parse_format(opt.format));
    if (opt.prism) g = geodex::complementary_prism(g);
    const geodex::DistanceMatrix dm(g);
    const SolverKind kind = parse_solver(opt.solver);

    geodex::ConvexityResult result;
    std::uint64_t nodes = 0;
    double elapsed = 0.0;
    bool agree = true;
    if (kind == SolverKind::exhaustive) {
        result = geodex::convexity_number_exhaustive(dm);
        nodes = result.explored;
        elapsed = result.elapsed_ms;
    } else if (kind == SolverKind::bnb) {
        result = geodex::convexity_number_bnb(dm);
        nodes = result.explored;
        elapsed = result.elapsed_ms;
    } else {
        result = geodex::convexity_number_exhaustive(dm);
        const auto alt = geodex::convexity_number_bnb(dm);
        agree = result.value == alt.value;
        nodes = result.explored + alt.explored;
        elapsed = result.elapsed_ms + alt.elapsed_ms;
    }

    if (opt.json_out) {
        json j{{"con", result.value},
               {"witness", result.witness.members()},
               {"solver", opt.solver},
               {"nodes", nodes}};
        if (kind == SolverKind::both) j["agree"] = agree;
        if (!opt.no_timing) j["elapsed_ms"] = elapsed;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "con=" << result.value << '\n';
        std::cout << "witness=" << join_members(result.witness) << '\n';
        std::cout << "solver=" << opt.solver << '\n';
        std::cout << "nodes=" << nodes << '\n';
        if (kind == SolverKind::both) std::cout << "agree=" << (agree ? 1 : 0) << '\n';
        if (!opt.no_timing) std::cout << "elapsed_ms=" << elapsed << '\n';
    }
    return agree ? 0 : kExitFailure;
}

int run_verify_trees(int max_n, const std::string& solver, int jobs, bool allow_slow,
                     bool json_out, bool no_timing) {
    const int cap = allow_slow ? 11 : 9;
    if (max_n < 3 || max_n > cap)
        throw std::domain_error("verify-trees: max n must be in [3, " + std::to_string(cap) +
                                "]" + (allow_slow ? "" : " (use --allow-slow for up to 11)"));
    const SolverKind kind = parse_solver(solver);

    if (!json_out) {
        std::cout << "#n\tcode\tdiam_class\tmax_deg\tpredicted\texact\tmatch\tnodes";
        if (!no_timing) std::cout << "\telapsed_ms";
        std::cout << '\n';
    }
    const auto summary = geodex::verify_trees(max_n, kind, jobs, [&](const auto& rec) {
        if (json_out) {
            json j{{"n", rec.n},
                   {"code", rec.code},
                   {"diam_class", rec.diam_class},
                   {"max_deg", rec.max_degree},
                   {"predicted", rec.predicted},
                   {"exact", rec.exact},
                   {"match", rec.match},
                   {"nodes", rec.solve_nodes}};
            if (!no_timing) j["elapsed_ms"] = rec.elapsed_ms;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << rec.n << '\t' << rec.code << '\t' << rec.diam_class << '\t'
                      << rec.max_degree << '\t' << rec.predicted << '\t' << rec.exact << '\t'
                      << (rec.match ? 1 : 0) << '\t' << rec.solve_nodes;
            if (!no_timing) std::cout << '\t' << rec.elapsed_ms;
            std::cout << '\n';
        }
    });
    if (json_out) {
        json j{{"trees", summary.total}, {"mismatches", summary.mismatches}};
        if (!no_timing) j["wall_ms"] = summary.wall_ms;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "# trees=" << summary.total << " mismatches=" << summary.mismatches;
        if (!no_timing) std::cout << " wall_ms=" << summary.wall_ms;
        std::cout << '\n';
    }
    return summary.mismatches == 0 ? 0 : kExitFailure;
}

int run_lemmas(int max_n, bool json_out) {
    const auto checks = geodex::lemma_suite(max_n, env_seed());
    std::uint64_t failures = 0;
    if (!json_out) std::cout << "#check\ttrees\ttuples\tfailures\n";
    for (const auto& c : checks) {
        failures += c.failures;
        if (json_out) {
            json j{{"check", c.name},
                   {"trees", c.trees},
                   {"tuples", c.tuples},
                   {"failures", c.failures}};
            std::cout << j.dump() << '\n';
        } else {
            std::cout << c.name << '\t' << c.trees << '\t' << c.tuples << '\t' << c.failures
                      << '\n';
        }
    }
    if (!json_out) std::cout << "# checks=" << checks.size() << " failures=" << failures << '\n';
    return failures == 0 ? 0 : kExitFailure;
}

geodex::TreeSpec make_family(const std::string& kind, const std::vector<int>& params) {
    auto want = [&](std::size_t count, const char* usage) {
        if (params.size() != count)
            throw std::domain_error("gen " + kind + ": expected parameters " + usage);
    };
    if (kind == "path") {
        want(1, "N");
        return geodex::path_tree(params[0]);
    }
    if (kind == "star") {
        want(1, "LEAVES");
        return geodex::star_tree(params[0]);
    }
    if (kind == "double_star") {
        want(2, "A B");
        return geodex::double_star_tree(params[0], params[1]);
    }
    if (kind == "spider") {
        want(2, "ARMS TIPS_PER_ARM");
        return geodex::spider_tree(params[0], params[1]);
    }
    if (kind == "caterpillar") {
        if (params.size() < 1) throw std::domain_error("gen caterpillar: expected SPINE COUNTS...");
        const std::vector<int> counts(params.begin() + 1, params.end());
        return geodex::caterpillar_tree(params[0], counts);
    }
    throw std::domain_error("gen: unknown family '" + kind +
                            "' (path, star, double_star, spider, caterpillar)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geodex: geodesic convexity toolkit for complementary prisms"};
    app.require_subcommand(1);

    ConOptions con;
    auto* cmd_con = app.add_subcommand("con", "exact convexity number of a graph");
    cmd_con->add_option("file", con.file, "input graph file ('-' for stdin)")->required();
    cmd_con->add_flag("--prism", con.prism, "solve on the complementary prism of the input");
    cmd_con->add_option("--format", con.format, "input format: edgelist|graph6");
    cmd_con->add_option("--solver", con.solver, "solver: exhaustive|bnb|both");
    cmd_con->add_flag("--json", con.json_out, "one JSON object per line");
    cmd_con->add_flag("--no-timing", con.no_timing, "omit timing fields");

    std::string prism_file, prism_format = "edgelist";
    auto* cmd_prism = app.add_subcommand("prism", "emit the complementary prism as an edge list");
    cmd_prism->add_option("file", prism_file, "input graph file ('-' for stdin)")->required();
    cmd_prism->add_option("--format", prism_format, "input format: edgelist|graph6");

    std::string gen_kind;
    std::vector<int> gen_params;
    auto* cmd_gen = app.add_subcommand("gen", "emit a named tree family as an edge list");
    cmd_gen->add_option("kind", gen_kind, "path|star|double_star|spider|caterpillar")->required();
    cmd_gen->add_option("params", gen_params, "family parameters");

    int enum_n = 0;
    auto* cmd_enum =
        app.add_subcommand("enum", "enumerate non-isomorphic trees, one code + edge list per line");
    cmd_enum->add_option("n", enum_n, "number of vertices (1..12)")->required();

    int verify_max_n = 9, verify_jobs = 1;
    std::string verify_solver = "exhaustive";
    bool verify_allow_slow = false, verify_json = false, verify_no_timing = false;
    auto* cmd_verify =
        app.add_subcommand("verify-trees", "formula vs exact solver over all trees up to max n");
    cmd_verify->add_option("max_n", verify_max_n, "largest tree order (default 9)");
    cmd_verify->add_option("--jobs", verify_jobs, "worker threads");
    cmd_verify->add_option("--solver", verify_solver, "solver: exhaustive|bnb|both");
    cmd_verify->add_flag("--allow-slow", verify_allow_slow, "raise the max n cap to 11");
    cmd_verify->add_flag("--json", verify_json, "one JSON object per line");
    cmd_verify->add_flag("--no-timing", verify_no_timing, "omit timing fields");

    int lemmas_max_n = 8;
    bool lemmas_json = false;
    auto* cmd_lemmas =
        app.add_subcommand("lemmas", "hull/witness/propagation checks over all trees up to max n");
    cmd_lemmas->add_option("max_n", lemmas_max_n, "largest tree order (3..8, default 8)");
    cmd_lemmas->add_flag("--json", lemmas_json, "one JSON object per line");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(cmd_con)) return run_con(con);
        if (app.got_subcommand(cmd_prism)) {
            const Graph g = geodex::read_graph_file(prism_file, parse_format(prism_format));
            geodex::write_edge_list(std::cout, geodex::complementary_prism(g));
            return 0;
        }
        if (app.got_subcommand(cmd_gen)) {
            geodex::write_edge_list(std::cout, make_family(gen_kind, gen_params).graph);
            return 0;
        }
        if (app.got_subcommand(cmd_enum)) {
            for (const auto& t : geodex::enumerate_free_trees(enum_n)) {
                std::cout << geodex::canonical_code(t.graph) << '\t' << t.graph.vertex_count()
                          << ' ' << t.graph.edge_count();
                for (auto [u, v] : t.graph.edges()) std::cout << ' ' << u << ' ' << v;
                std::cout << '\n';
            }
            return 0;
        }
        if (app.got_subcommand(cmd_verify))
            return run_verify_trees(verify_max_n, verify_solver, verify_jobs, verify_allow_slow,
                                    verify_json, verify_no_timing);
        if (app.got_subcommand(cmd_lemmas)) return run_lemmas(lemmas_max_n, lemmas_json);
    } catch (const geodex::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "rejected: " << e.what() << '\n';
        return kExitReject;
    } catch (const std::invalid_argument& e) {
        std::cerr << "rejected: " << e.what() << '\n';
        return kExitReject;
    }
    return 0;
}

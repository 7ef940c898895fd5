// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run through ctest or directly from the build tree.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "geodex/convexity.hpp"
#include "geodex/distance.hpp"
#include "geodex/formulas.hpp"
#include "geodex/io.hpp"
#include "geodex/trees.hpp"
#include "geodex/verify.hpp"
#include "oracles.hpp"

namespace {

using geodex::DistanceMatrix;
using geodex::Graph;
using geodex::IntervalTable;
using geodex::TreeSpec;
using geodex::VertexSet;

int g_failed = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s: %s\n", pass ? "PASS" : "FAIL", index, name.c_str(), detail.c_str());
    if (!pass) ++g_failed;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<geodex::VerificationRecord> g_records;  // filled by criterion 1

void criterion1_formula_verification() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto seq = geodex::verify_trees(9, geodex::SolverKind::exhaustive, 1,
                                          [](const auto& r) { g_records.push_back(r); });
    const double seq_s = seconds_since(t0);
    const auto t1 = std::chrono::steady_clock::now();
    const auto par = geodex::verify_trees(9, geodex::SolverKind::exhaustive, 8, nullptr);
    const double par_s = seconds_since(t1);
    const bool pass = seq.total == 93 && seq.mismatches == 0 && par.total == 93 &&
                      par.mismatches == 0 && seq_s <= 900.0 && par_s <= 180.0;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "%d trees, %d mismatches (single-threaded %.2fs, jobs=8 %.2fs)", seq.total,
                  seq.mismatches, seq_s, par_s);
    report(1, "formula equals exact solver on all trees with 3<=n<=9", pass, detail);
}

void criterion2_petersen() {
    const Graph pet = complementary_prism(oracle::cycle_graph(5));
    const DistanceMatrix dm(pet);
    bool regular = pet.vertex_count() == 10 && pet.edge_count() == 15;
    for (int v = 0; v < pet.vertex_count(); ++v) regular = regular && pet.degree(v) == 3;
    const Graph reference = Graph::from_edges(
        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    const bool pass = regular && oracle::girth(pet) == 5 && dm.diameter() == 2 &&
                      oracle::is_isomorphic(pet, reference);
    report(2, "prism of the five-cycle reproduces the Petersen graph", pass,
           "10 vertices, 15 edges, 3-regular, girth 5, diameter 2, isomorphic to the reference");
}

void criterion3_disconnected_spots() {
    struct Spot {
        const char* name;
        Graph g;
        int expected;
    };
    const std::vector<Spot> spots = {
        {"2K1", Graph::from_edges(2, {}), 3},
        {"K1+K2", Graph::from_edges(3, {{1, 2}}), 5},
        {"K2+K2", Graph::from_edges(4, {{0, 1}, {2, 3}}), 6},
        {"K1+P3", Graph::from_edges(4, {{1, 2}, {2, 3}}), 7},
        {"3K1", Graph::from_edges(3, {}), 5},
    };
    bool pass = true;
    std::string detail;
    for (const auto& spot : spots) {
        const int predicted = geodex::predict_disconnected_prism(spot.g).predicted;
        const int exact =
            geodex::convexity_number_exhaustive(DistanceMatrix(complementary_prism(spot.g)))
                .value;
        const bool ok = predicted == spot.expected && exact == spot.expected;
        pass = pass && ok;
        if (!detail.empty()) detail += ", ";
        detail += std::string(spot.name) + "=" + std::to_string(exact) + (ok ? "" : "(!)");
    }
    report(3, "disconnected formula 2n-k matches the solver on the spot suite", pass, detail);
}

void criterion4_lower_bound() {
    int checked = 0, violations = 0;
    for (const auto& rec : g_records) {
        if (rec.diam_class == "3") continue;
        ++checked;
        if (rec.exact < rec.n) ++violations;
    }
    report(4, "prism convexity is at least n whenever the tree diameter is not 3",
           checked > 0 && violations == 0,
           std::to_string(checked) + " trees checked, " + std::to_string(violations) +
               " violations");
}

void criterion5_witnesses() {
    std::uint64_t checked = 0, failures = 0;
    for (int n = 3; n <= 8; ++n) {
        for (const TreeSpec& t : geodex::enumerate_free_trees(n)) {
            const IntervalTable table{DistanceMatrix(complementary_prism(t.graph))};
            for (int x = 0; x < n; ++x) {
                if (t.graph.degree(x) != t.max_degree) continue;
                ++checked;
                const VertexSet h = geodex::star_mirror_witness(t, x);
                if (h.size() != 2 * t.max_degree + 1 || !table.convex(h)) ++failures;
            }
            auto leaf_witness_ok = [&](int w) {
                const VertexSet h = geodex::leaf_complement_witness(t, w);
                const int expected =
                    n - t.graph.degree(w) + 2 * t.pendant_count[static_cast<std::size_t>(w)] + 1;
                return h.size() == expected && table.convex(h);
            };
            if (t.diameter == 4) {
                ++checked;
                if (!leaf_witness_ok(*t.even_center)) ++failures;
            } else if (t.diameter <= 3) {
                for (int w = 0; w < n; ++w) {
                    if (t.graph.degree(w) < 2) continue;
                    ++checked;
                    if (!leaf_witness_ok(w)) ++failures;
                }
            }
        }
    }
    report(5, "lower-bound witness sets are convex with their closed-form sizes", failures == 0,
           std::to_string(checked) + " witnesses checked, " + std::to_string(failures) +
               " failures");
}

void criterion6_hull_lemmas() {
    const auto checks = geodex::lemma_suite(8, oracle::test_seed());
    std::uint64_t tuples = 0, failures = 0;
    bool all_present = true;
    for (const char* name :
         {"complement-plus-one", "distance3-pair", "adjacent-pair-mirror-diam6plus",
          "peripheral-pair-mirror-diam5", "middle-triple-mirror-diam5",
          "center-fan-triple-diam4"}) {
        bool found = false;
        for (const auto& c : checks) {
            if (c.name != name) continue;
            found = c.tuples > 0;
            tuples += c.tuples;
            failures += c.failures;
        }
        all_present = all_present && found;
    }
    report(6, "hull containments hold on every eligible tuple up to n=8",
           all_present && failures == 0,
           std::to_string(tuples) + " tuples across six checks, " + std::to_string(failures) +
               " failures");
}

void criterion7_closure_operator() {
    std::mt19937_64 rng(oracle::test_seed() + 100);
    std::uint64_t samples = 0, axiom_failures = 0;
    for (const Graph& g : oracle::connected_corpus(8, 12)) {
        const int n = g.vertex_count();
        const IntervalTable table{DistanceMatrix(g)};
        std::uniform_int_distribution<std::uint32_t> pick(0, (std::uint32_t{1} << n) - 1);
        for (int i = 0; i < 16; ++i) {
            const auto s = VertexSet::from_word(pick(rng));
            const auto t = VertexSet::from_word(s.word() | pick(rng));
            const auto cs = table.closure(s);
            if (!s.subset_of(cs) || !cs.subset_of(table.closure(t)) ||
                table.closure(cs) != cs)
                ++axiom_failures;
            ++samples;
        }
    }

    std::uint64_t hull_checked = 0, hull_failures = 0;
    for (const Graph& g : oracle::connected_corpus(7, 7)) {
        const int n = g.vertex_count();
        if (n > 7) continue;
        const IntervalTable table{DistanceMatrix(g)};
        const std::uint32_t full = (std::uint32_t{1} << n) - 1;
        std::vector<std::uint32_t> convex_sets;
        for (std::uint32_t c = 0; c <= full; ++c)
            if (table.convex(VertexSet::from_word(c))) convex_sets.push_back(c);
        for (std::uint32_t s = 0; s <= full; ++s) {
            std::uint32_t meet = full;
            for (std::uint32_t c : convex_sets)
                if ((s & ~c) == 0) meet &= c;
            ++hull_checked;
            if (table.closure(VertexSet::from_word(s)).word() != meet) ++hull_failures;
        }
    }
    const bool pass = samples >= 1000 && axiom_failures == 0 && hull_failures == 0;
    char detail[200];
    std::snprintf(detail, sizeof detail,
                  "%llu axiom samples with %llu failures; smallest-superset on %llu sets with "
                  "%llu failures",
                  static_cast<unsigned long long>(samples),
                  static_cast<unsigned long long>(axiom_failures),
                  static_cast<unsigned long long>(hull_checked),
                  static_cast<unsigned long long>(hull_failures));
    report(7, "closure is extensive, monotone, idempotent and minimal", pass, detail);
}

void criterion8_solver_cross_validation() {
    std::vector<Graph> prism_bases;
    for (int n = 3; n <= 9; ++n)
        for (const auto& t : geodex::enumerate_free_trees(n)) prism_bases.push_back(t.graph);
    for (int n = 3; n <= 10; ++n) prism_bases.push_back(oracle::cycle_graph(n));
    for (int n = 2; n <= 6; ++n) prism_bases.push_back(oracle::complete_graph(n));
    prism_bases.push_back(Graph::from_edges(2, {}));
    prism_bases.push_back(Graph::from_edges(4, {{0, 1}, {2, 3}}));
    std::mt19937_64 rng(oracle::test_seed() + 200);
    for (int n = 4; n <= 10; ++n)
        for (int i = 0; i < 3; ++i) prism_bases.push_back(oracle::random_connected_graph(n, rng));

    std::vector<Graph> instances;
    for (const Graph& base : prism_bases)
        if (base.vertex_count() <= 10) instances.push_back(complementary_prism(base));
    for (const Graph& g : oracle::connected_corpus(9, 12)) instances.push_back(g);

    std::uint64_t checked = 0, disagreements = 0, invalid = 0;
    for (const Graph& g : instances) {
        const DistanceMatrix dm(g);
        const IntervalTable table(dm);
        const auto a = geodex::convexity_number_exhaustive(dm);
        const auto b = geodex::convexity_number_bnb(dm);
        ++checked;
        if (a.value != b.value) ++disagreements;
        for (const auto& r : {a, b}) {
            const bool valid = r.witness.size() == r.value && r.witness != table.full() &&
                               table.convex(r.witness);
            if (!valid) ++invalid;
        }
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "%llu instances (prisms of base<=10 and plain graphs<=12), %llu disagreements, "
                  "%llu invalid witnesses",
                  static_cast<unsigned long long>(checked),
                  static_cast<unsigned long long>(disagreements),
                  static_cast<unsigned long long>(invalid));
    report(8, "exhaustive and branch-and-bound solvers agree with valid witnesses",
           disagreements == 0 && invalid == 0, detail);
}

void criterion9_cayley() {
    bool pass = true;
    std::string detail;
    for (int n : {4, 5}) {
        std::set<std::vector<std::pair<int, int>>> seen;
        std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
        long long total = 1;
        for (int i = 0; i < n - 2; ++i) total *= n;
        for (long long x = 0; x < total; ++x) {
            long long t = x;
            for (int i = 0; i < n - 2; ++i) {
                code[static_cast<std::size_t>(i)] = static_cast<int>(t % n);
                t /= n;
            }
            seen.insert(geodex::prufer_decode(code).graph.edges());
        }
        pass = pass && static_cast<long long>(seen.size()) == total;
        if (!detail.empty()) detail += ", ";
        detail += "n=" + std::to_string(n) + ": " + std::to_string(seen.size()) + "/" +
                  std::to_string(total);
    }
    report(9, "all codes decode to the full count of distinct labeled trees", pass, detail);
}

}  // namespace

int main() {
    criterion1_formula_verification();
    criterion2_petersen();
    criterion3_disconnected_spots();
    criterion4_lower_bound();
    criterion5_witnesses();
    criterion6_hull_lemmas();
    criterion7_closure_operator();
    criterion8_solver_cross_validation();
    criterion9_cayley();
    std::printf("%d of 9 criteria passed\n", 9 - g_failed);
    return g_failed;
}

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "geodex/formulas.hpp"

namespace geodex {

enum class SolverKind { exhaustive, bnb, both };

struct VerificationRecord {
    int n = 0;
    std::string code;        // canonical tree code
    std::string diam_class;  // "2", "3", "4", ">=5"
    int max_degree = 0;
    int predicted = 0;
    int exact = 0;
    bool match = false;
    std::uint64_t solve_nodes = 0;
    double elapsed_ms = 0.0;
};

struct CampaignSummary {
    int total = 0;
    int mismatches = 0;
    double wall_ms = 0.0;
};

// Formula-vs-solver comparison over every non-isomorphic tree with
// 3 <= n <= max_n. One record per tree, delivered in enumeration order even
// when jobs > 1; no tree is skipped.
CampaignSummary verify_trees(int max_n, SolverKind solver, int jobs,
                             const std::function<void(const VerificationRecord&)>& emit);

struct SuiteCheck {
    std::string name;
    int trees = 0;  // trees where the check applied
    std::uint64_t tuples = 0;
    std::uint64_t failures = 0;
};

// Hull containments, witness soundness and closure path propagation over
// every non-isomorphic tree with 3 <= n <= max_n (max_n <= 8). The seed
// drives the sampled propagation subsets only.
std::vector<SuiteCheck> lemma_suite(int max_n, std::uint64_t seed);

}  // namespace geodex

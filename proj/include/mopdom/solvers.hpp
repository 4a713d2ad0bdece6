#pragma once

#include <optional>
#include <vector>

#include "mopdom/mop.hpp"

namespace mopdom {

struct DisjunctiveSet {
    std::vector<int> vertices;  // sorted, duplicate-free
    std::optional<bool> verified;

    int size() const { return (int)vertices.size(); }
};

/// True iff every vertex outside s has a neighbor in s or at least two
/// members of s at graph distance exactly 2.
bool is_2dd_set(const Mop& m, const std::vector<int>& s);

bool is_dominating_set(const Mop& m, const std::vector<int>& s);

/// Precomputed coverage structures for repeated 2DD checks on one mop.
class CoverageChecker {
public:
    explicit CoverageChecker(const Mop& m);
    bool is_2dd(const std::vector<int>& s) const;
    bool is_dominating(const std::vector<int>& s) const;
    const std::vector<std::vector<int>>& neighbors() const { return adj_; }
    /// Vertices at distance exactly 2 from v.
    const std::vector<std::vector<int>>& ring2() const { return ring2_; }

private:
    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> ring2_;
};

struct ExactResult {
    int value = -1;                   // -1 when the cap was exceeded
    DisjunctiveSet witness;           // lexicographically least minimum witness
    bool exceeded_cap = false;
};

/// Exact minimum disjunctive dominating set by cardinality-ascending search.
/// Intended for n <= 20 (soft limit); requires n <= 64.
ExactResult exact_gamma2d(const Mop& m, int cap);
inline ExactResult exact_gamma2d(const Mop& m) { return exact_gamma2d(m, m.n); }

/// Exact domination number, same search scheme.
int exact_gamma(const Mop& m);

/// Greedy baseline: repeatedly add the vertex newly covering the most
/// uncovered vertices (ties to the smallest index).  Always verified.
DisjunctiveSet greedy_2dd(const Mop& m);

}  // namespace mopdom

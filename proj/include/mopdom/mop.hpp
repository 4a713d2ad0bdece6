#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mopdom {

/// A maximal outerplanar graph, stored as the length of its boundary cycle
/// plus the set of non-crossing diagonals of the triangulation.  Boundary
/// edges {i, i+1 mod n} are implicit.  Vertices are 0..n-1 in counterclockwise
/// order around the outer face.
struct Mop {
    int n = 0;
    /// Each diagonal {a,b} with a < b, b != a+1 (mod n); kept sorted.
    std::vector<std::pair<int, int>> diagonals;

    bool operator==(const Mop&) const = default;
};

/// Sorts and deduplicates the diagonal list in place.
void normalize(Mop& m);

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

/// Checks every structural invariant and reports all violations.
ValidationReport validate(const Mop& m);

bool is_valid(const Mop& m);

/// Adjacency lists (boundary + diagonals), each neighbor list sorted.
std::vector<std::vector<int>> adjacency_lists(const Mop& m);

bool has_edge(const Mop& m, int u, int v);
bool is_outer_edge(const Mop& m, int u, int v);

int degree(const Mop& m, int v);

/// Number of degree-2 vertices, the k in the size bound.
int degree_two_count(const Mop& m);

/// BFS distance between u and v.
int distance(const Mop& m, int u, int v);

/// The inner faces of the triangulation, as sorted vertex triples, in
/// lexicographic order.  Requires a valid mop.
std::vector<std::array<int, 3>> faces(const Mop& m);

/// True iff all three edges of the face t are diagonals.
bool is_internal_triangle(const Mop& m, const std::array<int, 3>& t);

int internal_triangle_count(const Mop& m);

/// floor(2(n+k)/9), the disjunctive domination bound for n >= 7.
inline int disjunctive_bound(int n, int k) { return 2 * (n + k) / 9; }

struct MopMetrics {
    int n = 0;
    int k = 0;
    int internal_triangles = 0;
    std::optional<int> gamma;
    std::optional<int> gamma2d;
    int bound = 0;
};

/// Fills the structural fields (n, k, internal triangles, bound); the solver
/// fields stay empty.
MopMetrics compute_metrics(const Mop& m);

/// A sub-polygon of a mop: a contiguous arc of boundary vertices whose two
/// ends are joined by a diagonal of the parent.
struct Region {
    std::vector<int> vertices;               // cyclic order along the arc
    std::pair<int, int> closing_diagonal;
};

/// Result of contracting an outer edge.  `to_old[i]` maps vertex i of the
/// result back to a vertex of the input; the merged vertex maps to the lower
/// endpoint and `merged_old` records both original endpoints.
struct Contraction {
    Mop result;
    std::vector<int> to_old;
    int merged_new = -1;
    std::pair<int, int> merged_old{-1, -1};
};

/// Contracts the boundary edge e = {i, i+1 mod n}.  The merged vertex takes
/// the position of the lower endpoint; labels are compacted preserving cyclic
/// order.  Throws std::invalid_argument if e is not an outer edge or n == 3.
Contraction contract_outer_edge(const Mop& m, std::pair<int, int> e);

/// Result of deleting a vertex set.  `to_old[i]` maps result vertices back;
/// `from_old[v]` is the new index of surviving vertex v, or -1.
struct Deletion {
    Mop result;
    std::vector<int> to_old;
    std::vector<int> from_old;
};

/// Deletes the given vertices and relabels the remainder by compaction.
/// Returns nothing if the remainder is not a valid mop.
std::optional<Deletion> try_delete_vertices(const Mop& m,
                                            const std::vector<int>& deleted);

/// As try_delete_vertices but throws std::invalid_argument on failure.
Deletion delete_ear_region(const Mop& m, const std::vector<int>& deleted);

/// Finds a diagonal splitting m into two mops such that one side carries
/// exactly 4, 5, or 6 outer edges of m.  Deterministic: diagonals are scanned
/// in lexicographic order, the direct (a..b) side first.  Throws if n < 6.
std::pair<std::pair<int, int>, int> find_partition_diagonal(const Mop& m);

}  // namespace mopdom

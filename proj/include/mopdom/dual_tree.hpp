#pragma once

#include <array>
#include <string>
#include <vector>

#include "mopdom/mop.hpp"

namespace mopdom {

/// Tree over the inner triangles of a mop; two nodes are adjacent when their
/// triangles share an edge (necessarily a diagonal).
struct DualTree {
    std::vector<std::array<int, 3>> tris;    // sorted triples, lexicographic order
    std::vector<std::vector<int>> adj;       // neighbor ids, ascending
    int root = -1;                           // -1 while unrooted
    std::vector<int> parent;                 // filled when rooted
    std::vector<std::vector<int>> children;  // filled when rooted

    int node_count() const { return (int)tris.size(); }
    bool rooted() const { return root >= 0; }
    int tree_degree(int id) const { return (int)adj[id].size(); }
};

DualTree build_dual(const Mop& m);

/// Roots the tree at a leaf lying on a longest path; ties break to the
/// smallest node id.
DualTree root_at_diametrical_leaf(DualTree t);

int tree_diameter(const DualTree& t);

enum class RegionShape {
    None, H1, H2, H5, H6, H7, H8, H9, H10, H11, H12, H13
};

std::string to_string(RegionShape s);

struct LeafContext {
    int leaf = -1;
    int nearest_deg3 = -1;
    int dist = -1;
    std::vector<int> path_nodes;       // leaf .. nearest degree-3 node
    RegionShape region_shape = RegionShape::None;
};

/// Walks from a leaf through degree-2 nodes to the nearest degree-3 node and
/// classifies the region shape for distances 5 and 6.  Throws when the tree
/// is a path (no degree-3 node).
LeafContext leaf_context(const Mop& m, const DualTree& t, int leaf);

struct SubtreeMatch {
    std::string pattern_id;
    int subtree_root = -1;
    std::vector<int> leg_lengths;  // chain lengths below the branch, ascending
};

/// Finds the deepest branch node all of whose descendant subtrees are plain
/// chains, the shape the catalogued reductions key on.  Requires a rooted non-path
/// tree; ties break to the smallest node id.
SubtreeMatch match_maximal_subtree(const DualTree& t);

/// One node per line: `id: (a,b,c) -> [child ids]`.
std::string dump(const DualTree& t);

}  // namespace mopdom

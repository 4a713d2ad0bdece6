#pragma once

#include <array>
#include <vector>

#include "mopdom/dual_tree.hpp"

namespace mopdom {

/// The triangle walk from an ear of the dual tree toward the nearest branch
/// node, with the vertex naming the reduction rules are written in.  F[i] is
/// the i-th triangle (1-based); u[1..] are the region vertex labels: F1 =
/// {u1,u2,u3}, F2 = {u2,u3,u4}, F3 = {u2,u4,u5}, and each later triangle
/// introduces one new vertex u[i+2].
struct LeafWalk {
    std::vector<int> nodes;                 // dual node ids, walk order
    std::vector<std::array<int, 3>> F;      // F[0] unused
    std::vector<int> u;                     // u[0] unused; -1 when undetermined
    int dist = -1;                          // hops to nearest degree-3 node; -1 if none reached
    bool hit_branch = false;                // walk ended at a degree-3 node
    RegionShape shape = RegionShape::None;  // for dist 5 and 6
};

/// Walks up to max_tris triangles (the rules need at most 9).
LeafWalk walk_leaf_triangles(const Mop& m, const DualTree& t, int leaf,
                             int max_tris = 9);

}  // namespace mopdom

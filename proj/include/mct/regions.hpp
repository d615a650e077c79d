#pragma once

// c-vectors, the open cones R(T) of height vectors realizing a tree, and
// mutation across the walls x_p = x_q of those cones.

#include <span>
#include <vector>

#include "mct/matrix.hpp"
#include "mct/roots.hpp"
#include "mct/tree.hpp"

namespace mct {

using CVector = IntVector;
// Column j is the c-vector of edge j.
using CMatrix = IntMatrix;
using RegionPoint = RationalVector;

CVector c_vector(const MixedCobinaryTree& tree, int k);
CMatrix c_matrix(const MixedCobinaryTree& tree);

// Decodes every column into an edge (index = column) and validates the tree.
MixedCobinaryTree tree_from_c_matrix(const CMatrix& c, const SignSequence& epsilon);

// slope_i * (x_q - x_p) > 0 for every edge; >= 0 when strict is false.
bool region_contains(const MixedCobinaryTree& tree, const RegionPoint& x, bool strict = true);

// sigma(i) = position of x_i in increasing order. Throws TiedCoordinates.
Permutation rank_of(const RegionPoint& x);

MixedCobinaryTree locate_tree(const RegionPoint& x, const SignSequence& epsilon);

// Edges other than k whose c-vectors gain c_k under mutation at k: the edge
// from q_k to its leftmost parent and the edge from p_k to its rightmost
// child (for a positive edge k; mirrored for a negative one). Leaves are
// skipped.
std::vector<int> reattached_edges(const MixedCobinaryTree& tree, int k);

MixedCobinaryTree mutate(const MixedCobinaryTree& tree, int k);
MixedCobinaryTree mutation_sequence(const MixedCobinaryTree& tree, std::span<const int> ks);

// Heights with x_{p_k} = x_{q_k} and every other comparability of the tree
// strict: a point in the relative interior of wall k of the closed region.
std::vector<int> wall_heights(const MixedCobinaryTree& tree, int k);

// A permutation of the tree in which p_k and q_k have adjacent heights.
Permutation adjacent_permutation(const MixedCobinaryTree& tree, int k);

}  // namespace mct

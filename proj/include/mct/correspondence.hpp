#pragma once

// The bijection between clusters of Q_epsilon and mixed cobinary trees with
// the same epsilon: a cluster V corresponds to the tree whose closed region is
// F^{-1} of the cone spanned by the rows of V^t E, and then V^t E C(T) = I.

#include <utility>
#include <vector>

#include "mct/matrix.hpp"
#include "mct/quiver.hpp"
#include "mct/regions.hpp"
#include "mct/tree.hpp"

namespace mct {

// Consecutive differences (x_2 - x_1, ..., x_n - x_{n-1}).
RationalVector f_map(const RegionPoint& x);
IntVector f_map(const IntVector& x);

// Prefix sums starting at 0, so that f_map(f_lift(y)) = y.
RegionPoint f_lift(const RationalVector& y);
IntVector f_lift(const IntVector& y);

// Intermediate values of cluster_to_tree, kept for inspection and for the CLI.
struct ClusterTrace {
  IntMatrix euler;                 // E
  IntMatrix euler_inverse;         // E^{-1}
  IntMatrix vte;                   // V^t E
  IntMatrix c_matrix;              // (V^t E)^{-1}
  IntMatrix lifted;                // row i = f_lift(row i of V^t E)
  IntMatrix lifted_display;        // the same rows shifted to minimum 0
  IntVector sum;                   // sum of the lifted rows
  IntVector display_sum;           // sum of the shifted rows
  Permutation ranking;             // ascending index breaks ties
  std::vector<Permutation> tie_break_rankings;  // every way to break the ties
  MixedCobinaryTree tree;          // edge j paired with column j of V
};

// Column order of v is significant: edge j of the result pairs with column j.
ClusterTrace trace_cluster_to_tree(const IntMatrix& v, const SignSequence& epsilon);
MixedCobinaryTree cluster_to_tree(const IntMatrix& v, const SignSequence& epsilon);
MixedCobinaryTree cluster_to_tree(const ClusterMatrix& v, const SignSequence& epsilon);

// Columns in edge order: V = (C^{-1} E^{-1})^t.
IntMatrix paired_cluster_matrix(const MixedCobinaryTree& tree);
ClusterMatrix tree_to_cluster(const MixedCobinaryTree& tree);

// V^t E C(T) is a permutation matrix, the identity once the columns of V
// are put in edge order.
bool verify_corollary2(const MixedCobinaryTree& tree, const ClusterMatrix& v);

// A point in the relative interior of wall k of the closed region, together
// with whether E^{-t} F(x) lies in D(|c_k|).
std::pair<RegionPoint, bool> wall_stability_point(const MixedCobinaryTree& tree, int k);

struct BijectionEntry {
  MixedCobinaryTree tree;
  ClusterMatrix cluster;
  CMatrix c_matrix;
  bool verified = false;
};

// One entry per cluster in enumeration order.
std::vector<BijectionEntry> bijection_report(const SignSequence& epsilon);

}  // namespace mct

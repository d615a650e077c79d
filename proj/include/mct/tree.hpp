#pragma once

// Mixed cobinary trees: n internal nodes at x-coordinates 1..n, each either a
// Lambda-node (one parent, two children separated by a descending wall) or a
// V-node (one child, two parents separated by an ascending wall), joined by
// n-1 internal edges whose slopes fix the bottom-to-top order of the nodes.
//
// Node labels and edge indices are 1-based throughout the public API.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mct {

// The epsilon vector: +1 marks a Lambda-node, -1 a V-node.
class SignSequence {
 public:
  SignSequence() = default;
  explicit SignSequence(std::vector<int> entries);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int at(int i) const;  // 1-based
  const std::vector<int>& entries() const noexcept { return entries_; }

  SignSequence negated() const;
  SignSequence reversed() const;
  // Signs of the given nodes (1-based, ascending), as a shorter sequence.
  SignSequence restricted(const std::vector<int>& nodes) const;

  std::string to_string() const;  // e.g. "-1,1,-1"

  auto operator<=>(const SignSequence&) const = default;

  // All 2^n sequences in lexicographic order (-1 before +1).
  static std::vector<SignSequence> all(int n);

 private:
  std::vector<int> entries_;
};

struct SignedEdge {
  int index = 0;  // stable label 1..n-1
  int p = 0;      // left endpoint
  int q = 0;      // right endpoint, p < q
  int slope = 1;  // +1: p below q, -1: p above q

  int lower() const noexcept { return slope > 0 ? p : q; }
  int upper() const noexcept { return slope > 0 ? q : p; }

  bool operator==(const SignedEdge&) const = default;
};

// Heights: value at(i) is the height rank of node i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  int at(int i) const;  // 1-based
  const std::vector<int>& values() const noexcept { return values_; }
  Permutation inverse() const;
  std::string to_string() const;  // one-line notation, "21543"

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

std::vector<Permutation> all_permutations(int n);

class MixedCobinaryTree;

namespace detail {
// Builds a tree from edges already known to be valid (indices 1..n-1 in order).
MixedCobinaryTree trusted_tree(SignSequence epsilon, std::vector<SignedEdge> edges);
}  // namespace detail

class MixedCobinaryTree {
 public:
  MixedCobinaryTree() = default;  // the empty tree, n = 0

  int n() const noexcept { return epsilon_.size(); }
  const SignSequence& epsilon() const noexcept { return epsilon_; }
  // edges()[i - 1].index == i
  const std::vector<SignedEdge>& edges() const noexcept { return edges_; }
  const SignedEdge& edge(int index) const;
  // Edges ordered by (p, q); the canonical key.
  std::vector<SignedEdge> sorted_edges() const;
  std::vector<int> canonical_key() const;

  // Canonical equality and order ignore edge indices.
  friend bool operator==(const MixedCobinaryTree& a, const MixedCobinaryTree& b);
  friend std::strong_ordering operator<=>(const MixedCobinaryTree& a, const MixedCobinaryTree& b);

 private:
  friend MixedCobinaryTree detail::trusted_tree(SignSequence, std::vector<SignedEdge>);
  MixedCobinaryTree(SignSequence epsilon, std::vector<SignedEdge> edges)
      : epsilon_(std::move(epsilon)), edges_(std::move(edges)) {}

  SignSequence epsilon_;
  std::vector<SignedEdge> edges_;
};

// Equal including the edge index labels.
bool identical(const MixedCobinaryTree& a, const MixedCobinaryTree& b);

// Slot occupancy of one node: the edge index filling each slot, 0 for a leaf.
// For a Lambda-node first = parent, second = left child, third = right child.
// For a V-node first = left parent, second = right parent, third = child.
struct NodeSlots {
  int first = 0;
  int second = 0;
  int third = 0;
};

NodeSlots node_slots(const MixedCobinaryTree& tree, int node);

// Owners of the parent (up) leaves from left to right, separated by the
// ascending walls of the V-nodes; there is one more leaf than V-nodes.
std::vector<int> up_leaf_owners(const MixedCobinaryTree& tree);
// Owners of the child (down) leaves from left to right, separated by the
// descending walls of the Lambda-nodes.
std::vector<int> down_leaf_owners(const MixedCobinaryTree& tree);

// Full binary tree stored in preorder; child index -1 denotes a leaf.
class BinaryTree {
 public:
  struct Node {
    int left = -1;
    int right = -1;
    bool operator==(const Node&) const = default;
    auto operator<=>(const Node&) const = default;
  };

  BinaryTree() = default;
  // Parses the notation produced by to_string(): "x" is a leaf, "(L R)" a node.
  static BinaryTree parse(const std::string& text);

  int internal_nodes() const noexcept { return static_cast<int>(nodes_.size()); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::string to_string() const;

  auto operator<=>(const BinaryTree&) const = default;
  bool operator==(const BinaryTree&) const = default;

 private:
  friend class BinaryTreeBuilder;
  std::vector<Node> nodes_;
};

// All full binary trees with the given number of internal nodes.
std::vector<BinaryTree> all_binary_trees(int internal_nodes);

// C_n exactly; throws Overflow once C_n no longer fits in 64 bits.
std::uint64_t catalan(int n);

MixedCobinaryTree make_tree(const SignSequence& epsilon, std::vector<SignedEdge> edges);

MixedCobinaryTree tree_from_permutation(const Permutation& sigma, const SignSequence& epsilon);

// All linear extensions of the slope order, sorted.
std::vector<Permutation> permutations_of(const MixedCobinaryTree& tree);
// The lexicographically smallest height assignment realizing the tree.
Permutation first_permutation(const MixedCobinaryTree& tree);

// All trees with the given epsilon vector in canonical order.
std::vector<MixedCobinaryTree> enumerate_trees(const SignSequence& epsilon);

// The tree whose permutation set is {identity}: edges (i, i+1, +1).
MixedCobinaryTree initial_tree(const SignSequence& epsilon);

MixedCobinaryTree flip_horizontal(const MixedCobinaryTree& tree);
MixedCobinaryTree reverse_tree(const MixedCobinaryTree& tree);

BinaryTree gravity_map(const MixedCobinaryTree& tree);

}  // namespace mct

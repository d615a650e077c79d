#include "mct/tree.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <tuple>
#include <utility>

#include "mct/error.hpp"

namespace mct {

// ---------------------------------------------------------------------------
// SignSequence / Permutation

SignSequence::SignSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) fail(ErrorKind::InvalidInput, "epsilon must have at least one entry");
  for (int e : entries_)
    if (e != 1 && e != -1) fail(ErrorKind::InvalidInput, "epsilon entries must be +1 or -1");
}

int SignSequence::at(int i) const {
  if (i < 1 || i > size()) fail(ErrorKind::IndexOutOfRange, "epsilon index " + std::to_string(i) + " out of range");
  return entries_[static_cast<std::size_t>(i - 1)];
}

SignSequence SignSequence::negated() const {
  SignSequence s = *this;
  for (int& e : s.entries_) e = -e;
  return s;
}

SignSequence SignSequence::reversed() const {
  SignSequence s = *this;
  std::reverse(s.entries_.begin(), s.entries_.end());
  return s;
}

SignSequence SignSequence::restricted(const std::vector<int>& nodes) const {
  SignSequence s;
  s.entries_.reserve(nodes.size());
  for (int v : nodes) s.entries_.push_back(at(v));
  return s;
}

std::string SignSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::vector<SignSequence> SignSequence::all(int n) {
  std::vector<SignSequence> out;
  if (n < 1) return out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = (mask >> (n - 1 - i)) & 1u ? 1 : -1;
    out.emplace_back(std::move(e));
  }
  return out;
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
      fail(ErrorKind::InvalidInput, "not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

int Permutation::at(int i) const {
  if (i < 1 || i > size()) fail(ErrorKind::IndexOutOfRange, "permutation index out of range");
  return values_[static_cast<std::size_t>(i - 1)];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!compact && i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Raw edge lists shared by construction, enumeration and validation.

namespace {

struct RawEdge {
  int p;
  int q;
  int slope;
  auto operator<=>(const RawEdge&) const = default;
};

using RawEdges = std::vector<RawEdge>;

RawEdge oriented(int lower, int upper) {
  return lower < upper ? RawEdge{lower, upper, 1} : RawEdge{upper, lower, -1};
}

void canonicalize(RawEdges& edges) { std::sort(edges.begin(), edges.end()); }

RawEdges raw_edges(const MixedCobinaryTree& tree) {
  RawEdges out;
  out.reserve(tree.edges().size());
  for (const auto& e : tree.edges()) out.push_back({e.p, e.q, e.slope});
  canonicalize(out);
  return out;
}

// Slot occupancy per node for a raw edge list; values are positions into the
// edge list plus one, 0 for a leaf. Returns false if some slot is claimed twice.
bool raw_slots(int n, const std::vector<int>& eps, const RawEdges& edges, std::vector<NodeSlots>& slots,
               std::string* why = nullptr) {
  slots.assign(static_cast<std::size_t>(n) + 1, NodeSlots{});
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const RawEdge& e = edges[k];
    const int lower = e.slope > 0 ? e.p : e.q;
    const int upper = e.slope > 0 ? e.q : e.p;
    const int tag = static_cast<int>(k) + 1;
    auto claim = [&](int& slot, int node, const char* what) {
      if (slot != 0) {
        if (why) *why = "node " + std::to_string(node) + " has two " + what;
        return false;
      }
      slot = tag;
      return true;
    };
    // lower endpoint gains a parent
    {
      NodeSlots& s = slots[static_cast<std::size_t>(lower)];
      const bool lambda = eps[static_cast<std::size_t>(lower - 1)] > 0;
      if (lambda) {
        if (!claim(s.first, lower, "parents")) return false;
      } else if (upper < lower) {
        if (!claim(s.first, lower, "left parents")) return false;
      } else {
        if (!claim(s.second, lower, "right parents")) return false;
      }
    }
    // upper endpoint gains a child
    {
      NodeSlots& s = slots[static_cast<std::size_t>(upper)];
      const bool lambda = eps[static_cast<std::size_t>(upper - 1)] > 0;
      if (!lambda) {
        if (!claim(s.third, upper, "children")) return false;
      } else if (lower < upper) {
        if (!claim(s.second, upper, "left children")) return false;
      } else {
        if (!claim(s.third, upper, "right children")) return false;
      }
    }
  }
  return true;
}

// Leaf owners in left-to-right order. Parent leaves sit in the gaps between
// the ascending walls of V-nodes; child leaves in the gaps between the
// descending walls of Lambda-nodes. An empty tree owns nothing (owner 0).
std::vector<int> raw_leaf_owners(int n, const std::vector<int>& eps, const RawEdges& edges, bool up) {
  std::vector<NodeSlots> slots;
  if (!raw_slots(n, eps, edges, slots)) fail(ErrorKind::ArityViolation, "slot overflow while locating leaves");
  const int wall_sign = up ? -1 : 1;
  int walls = 0;
  for (int e : eps) walls += e == wall_sign ? 1 : 0;
  std::vector<int> owners(static_cast<std::size_t>(walls) + 1, 0);
  int walls_left = 0;
  for (int m = 1; m <= n; ++m) {
    const NodeSlots& s = slots[static_cast<std::size_t>(m)];
    const bool lambda = eps[static_cast<std::size_t>(m - 1)] > 0;
    auto put = [&](int gap) {
      int& o = owners[static_cast<std::size_t>(gap)];
      if (o != 0) fail(ErrorKind::WallViolation, "two leaves share a gap between walls");
      o = m;
    };
    if (up) {
      if (lambda) {
        if (s.first == 0) put(walls_left);
      } else {
        if (s.first == 0) put(walls_left);
        if (s.second == 0) put(walls_left + 1);
      }
    } else {
      if (lambda) {
        if (s.second == 0) put(walls_left);
        if (s.third == 0) put(walls_left + 1);
      } else {
        if (s.third == 0) put(walls_left);
      }
    }
    if (eps[static_cast<std::size_t>(m - 1)] == wall_sign) ++walls_left;
  }
  return owners;
}

// Kahn's algorithm on lower -> upper, always taking the smallest available
// node. Empty result when the relations contain a directed cycle.
std::vector<int> smallest_linear_extension(int n, const RawEdges& edges) {
  std::vector<std::vector<int>> up(static_cast<std::size_t>(n) + 1);
  std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : edges) {
    const int lower = e.slope > 0 ? e.p : e.q;
    const int upper = e.slope > 0 ? e.q : e.p;
    up[static_cast<std::size_t>(lower)].push_back(upper);
    ++indeg[static_cast<std::size_t>(upper)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 1; v <= n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  std::vector<int> heights(static_cast<std::size_t>(n), 0);
  int next = 1;
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    heights[static_cast<std::size_t>(v - 1)] = next++;
    for (int w : up[static_cast<std::size_t>(v)])
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
  }
  if (next != n + 1) return {};
  return heights;
}

// Recursive insertion from the highest node downwards. The returned up-leaf
// list has one entry per gap between V-node walls of the subtree.
struct Partial {
  RawEdges edges;
  std::vector<int> up_leaves;
};

Partial insert_nodes(const std::vector<int>& nodes, const Permutation& sigma, const SignSequence& eps) {
  if (nodes.empty()) return {{}, {0}};
  const int k = *std::max_element(nodes.begin(), nodes.end(),
                                  [&](int a, int b) { return sigma.at(a) < sigma.at(b); });
  Partial out;
  if (eps.at(k) > 0) {
    std::vector<int> left, right;
    for (int v : nodes) (v < k ? left : right).push_back(v);
    right.erase(std::remove(right.begin(), right.end(), k), right.end());
    Partial lhs = insert_nodes(left, sigma, eps);
    Partial rhs = insert_nodes(right, sigma, eps);
    out.edges = std::move(lhs.edges);
    out.edges.insert(out.edges.end(), rhs.edges.begin(), rhs.edges.end());
    if (const int a = lhs.up_leaves.back(); a != 0) out.edges.push_back(oriented(a, k));
    if (const int b = rhs.up_leaves.front(); b != 0) out.edges.push_back(oriented(b, k));
    out.up_leaves.assign(lhs.up_leaves.begin(), lhs.up_leaves.end() - 1);
    out.up_leaves.push_back(k);
    out.up_leaves.insert(out.up_leaves.end(), rhs.up_leaves.begin() + 1, rhs.up_leaves.end());
  } else {
    std::vector<int> rest;
    for (int v : nodes)
      if (v != k) rest.push_back(v);
    Partial sub = insert_nodes(rest, sigma, eps);
    std::size_t gap = 0;
    for (int v : rest)
      if (v < k && eps.at(v) < 0) ++gap;
    out.edges = std::move(sub.edges);
    if (const int o = sub.up_leaves[gap]; o != 0) out.edges.push_back(oriented(o, k));
    out.up_leaves = std::move(sub.up_leaves);
    out.up_leaves[gap] = k;
    out.up_leaves.insert(out.up_leaves.begin() + static_cast<std::ptrdiff_t>(gap), k);
  }
  return out;
}

MixedCobinaryTree from_raw(const SignSequence& eps, RawEdges edges) {
  canonicalize(edges);
  std::vector<SignedEdge> labelled;
  labelled.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    labelled.push_back({static_cast<int>(i) + 1, edges[i].p, edges[i].q, edges[i].slope});
  return detail::trusted_tree(eps, std::move(labelled));
}

}  // namespace

// ---------------------------------------------------------------------------
// MixedCobinaryTree

MixedCobinaryTree detail::trusted_tree(SignSequence epsilon, std::vector<SignedEdge> edges) {
  return MixedCobinaryTree(std::move(epsilon), std::move(edges));
}

const SignedEdge& MixedCobinaryTree::edge(int index) const {
  if (index < 1 || index > static_cast<int>(edges_.size()))
    fail(ErrorKind::IndexOutOfRange, "edge index " + std::to_string(index) + " out of range");
  return edges_[static_cast<std::size_t>(index - 1)];
}

std::vector<SignedEdge> MixedCobinaryTree::sorted_edges() const {
  std::vector<SignedEdge> out = edges_;
  std::sort(out.begin(), out.end(),
            [](const SignedEdge& a, const SignedEdge& b) { return std::tie(a.p, a.q, a.slope) < std::tie(b.p, b.q, b.slope); });
  return out;
}

std::vector<int> MixedCobinaryTree::canonical_key() const {
  std::vector<int> key;
  key.reserve(edges_.size() * 3);
  for (const auto& e : sorted_edges()) {
    key.push_back(e.p);
    key.push_back(e.q);
    key.push_back(e.slope);
  }
  return key;
}

bool operator==(const MixedCobinaryTree& a, const MixedCobinaryTree& b) {
  return a.epsilon_ == b.epsilon_ && a.canonical_key() == b.canonical_key();
}

std::strong_ordering operator<=>(const MixedCobinaryTree& a, const MixedCobinaryTree& b) {
  if (auto c = a.canonical_key() <=> b.canonical_key(); c != 0) return c;
  return a.epsilon_ <=> b.epsilon_;
}

bool identical(const MixedCobinaryTree& a, const MixedCobinaryTree& b) {
  return a.epsilon() == b.epsilon() && a.edges() == b.edges();
}

NodeSlots node_slots(const MixedCobinaryTree& tree, int node) {
  if (node < 1 || node > tree.n()) fail(ErrorKind::IndexOutOfRange, "node out of range");
  NodeSlots s;
  const bool lambda = tree.epsilon().at(node) > 0;
  for (const auto& e : tree.edges()) {
    if (e.p != node && e.q != node) continue;
    const int other = e.p == node ? e.q : e.p;
    if (e.lower() == node) {
      (lambda ? s.first : (other < node ? s.first : s.second)) = e.index;
    } else {
      (lambda ? (other < node ? s.second : s.third) : s.third) = e.index;
    }
  }
  return s;
}

std::vector<int> up_leaf_owners(const MixedCobinaryTree& tree) {
  return raw_leaf_owners(tree.n(), tree.epsilon().entries(), raw_edges(tree), true);
}

std::vector<int> down_leaf_owners(const MixedCobinaryTree& tree) {
  return raw_leaf_owners(tree.n(), tree.epsilon().entries(), raw_edges(tree), false);
}

// ---------------------------------------------------------------------------
// Catalan numbers

std::uint64_t catalan(int n) {
  if (n < 0) fail(ErrorKind::InvalidInput, "catalan: n must be nonnegative");
  // C_{k+1} = C_k * 2(2k+1) / (k+2); the product is formed in 128 bits.
  unsigned __int128 c = 1;
  for (int k = 0; k < n; ++k) {
    c = c * static_cast<unsigned>(2 * (2 * k + 1)) / static_cast<unsigned>(k + 2);
    if (c > static_cast<unsigned __int128>(UINT64_MAX))
      fail(ErrorKind::Overflow, "catalan(" + std::to_string(n) + ") does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

// ---------------------------------------------------------------------------
// Construction and validation

MixedCobinaryTree tree_from_permutation(const Permutation& sigma, const SignSequence& epsilon) {
  if (sigma.size() != epsilon.size()) fail(ErrorKind::DimensionMismatch, "sigma and epsilon lengths differ");
  std::vector<int> nodes(static_cast<std::size_t>(sigma.size()));
  std::iota(nodes.begin(), nodes.end(), 1);
  return from_raw(epsilon, insert_nodes(nodes, sigma, epsilon).edges);
}

MixedCobinaryTree make_tree(const SignSequence& epsilon, std::vector<SignedEdge> edges) {
  const int n = epsilon.size();
  if (n < 1) fail(ErrorKind::InvalidInput, "a tree needs at least one node");
  if (static_cast<int>(edges.size()) != n - 1)
    fail(ErrorKind::InvalidInput, "expected " + std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& e : edges) {
    if (e.index < 1 || e.index > n - 1 || seen[static_cast<std::size_t>(e.index)])
      fail(ErrorKind::InvalidInput, "edge indices must be distinct values in 1..n-1");
    seen[static_cast<std::size_t>(e.index)] = true;
    if (!(1 <= e.p && e.p < e.q && e.q <= n))
      fail(ErrorKind::InvalidInput, "edge endpoints must satisfy 1 <= p < q <= n");
    if (e.slope != 1 && e.slope != -1) fail(ErrorKind::InvalidInput, "edge slope must be +1 or -1");
  }
  std::sort(edges.begin(), edges.end(), [](const SignedEdge& a, const SignedEdge& b) { return a.index < b.index; });

  RawEdges raw;
  for (const auto& e : edges) raw.push_back({e.p, e.q, e.slope});

  const std::vector<int> heights = smallest_linear_extension(n, raw);
  if (heights.empty()) fail(ErrorKind::CyclicHeights, "edge slopes admit no consistent height order");

  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  for (const auto& e : raw) {
    const int a = find(e.p), b = find(e.q);
    if (a == b) fail(ErrorKind::NotATree, "edges contain a cycle");
    parent[static_cast<std::size_t>(a)] = b;
  }

  std::vector<NodeSlots> slots;
  std::string why;
  if (!raw_slots(n, epsilon.entries(), raw, slots, &why)) fail(ErrorKind::ArityViolation, why);

  canonicalize(raw);
  RawEdges rebuilt = raw_edges(tree_from_permutation(Permutation(heights), epsilon));
  if (rebuilt != raw)
    fail(ErrorKind::WallViolation, "edges violate the wall separation conditions for epsilon " + epsilon.to_string());

  return detail::trusted_tree(epsilon, std::move(edges));
}

MixedCobinaryTree initial_tree(const SignSequence& epsilon) {
  std::vector<SignedEdge> edges;
  for (int i = 1; i < epsilon.size(); ++i) edges.push_back({i, i, i + 1, 1});
  return detail::trusted_tree(epsilon, std::move(edges));
}

// ---------------------------------------------------------------------------
// Linear extensions

Permutation first_permutation(const MixedCobinaryTree& tree) {
  return Permutation(smallest_linear_extension(tree.n(), raw_edges(tree)));
}

std::vector<Permutation> permutations_of(const MixedCobinaryTree& tree) {
  const int n = tree.n();
  std::vector<std::vector<int>> below(static_cast<std::size_t>(n) + 1);
  for (const auto& e : tree.edges()) below[static_cast<std::size_t>(e.upper())].push_back(e.lower());

  std::vector<int> heights(static_cast<std::size_t>(n), 0);
  std::vector<Permutation> out;
  std::function<void(int)> place = [&](int height) {
    if (height > n) {
      out.emplace_back(heights);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (heights[static_cast<std::size_t>(v - 1)] != 0) continue;
      bool ready = true;
      for (int w : below[static_cast<std::size_t>(v)]) ready = ready && heights[static_cast<std::size_t>(w - 1)] != 0;
      if (!ready) continue;
      heights[static_cast<std::size_t>(v - 1)] = height;
      place(height + 1);
      heights[static_cast<std::size_t>(v - 1)] = 0;
    }
  };
  place(1);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration by removal of the rightmost node

namespace {

using Memo = std::map<std::vector<int>, std::vector<RawEdges>>;

const std::vector<RawEdges>& enumerate_raw(const std::vector<int>& eps, Memo& memo) {
  if (auto it = memo.find(eps); it != memo.end()) return it->second;
  const int n = static_cast<int>(eps.size());
  std::vector<RawEdges> result;

  if (n == 0) {
    result.push_back({});
  } else if (eps.back() < 0) {
    // Flip over a horizontal axis: the rightmost node becomes a Lambda-node.
    std::vector<int> neg(eps);
    for (int& e : neg) e = -e;
    result = enumerate_raw(neg, memo);
    for (auto& edges : result)
      for (auto& e : edges) e.slope = -e.slope;
  } else {
    // The rightmost node is a Lambda-node; deleting it leaves an upper tree U
    // (through its parent) and a lower tree D (through its left child).
    // V-nodes join U from the right, then Lambda-nodes from the left.
    std::vector<int> v_nodes, lambda_nodes;
    for (int i = 1; i < n; ++i) (eps[static_cast<std::size_t>(i - 1)] < 0 ? v_nodes : lambda_nodes).push_back(i);
    const int nv = static_cast<int>(v_nodes.size());
    for (int size_u = 0; size_u < n; ++size_u) {
      std::vector<bool> in_u(static_cast<std::size_t>(n), false);
      if (size_u <= nv) {
        for (int j = nv - size_u; j < nv; ++j) in_u[static_cast<std::size_t>(v_nodes[static_cast<std::size_t>(j)])] = true;
      } else {
        for (int v : v_nodes) in_u[static_cast<std::size_t>(v)] = true;
        for (int j = 0; j < size_u - nv; ++j) in_u[static_cast<std::size_t>(lambda_nodes[static_cast<std::size_t>(j)])] = true;
      }
      std::vector<int> upper_nodes, lower_nodes, upper_eps, lower_eps;
      for (int i = 1; i < n; ++i) {
        const bool u = in_u[static_cast<std::size_t>(i)];
        (u ? upper_nodes : lower_nodes).push_back(i);
        (u ? upper_eps : lower_eps).push_back(eps[static_cast<std::size_t>(i - 1)]);
      }
      // Copies: the recursive calls may rehash the memo.
      const std::vector<RawEdges> uppers = enumerate_raw(upper_eps, memo);
      const std::vector<RawEdges> lowers = enumerate_raw(lower_eps, memo);
      for (const auto& u : uppers) {
        int parent = 0;
        if (!upper_nodes.empty()) {
          const int local = raw_leaf_owners(static_cast<int>(upper_nodes.size()), upper_eps, u, false).back();
          parent = upper_nodes[static_cast<std::size_t>(local - 1)];
        }
        for (const auto& d : lowers) {
          RawEdges edges;
          for (const auto& e : u)
            edges.push_back({upper_nodes[static_cast<std::size_t>(e.p - 1)], upper_nodes[static_cast<std::size_t>(e.q - 1)], e.slope});
          for (const auto& e : d)
            edges.push_back({lower_nodes[static_cast<std::size_t>(e.p - 1)], lower_nodes[static_cast<std::size_t>(e.q - 1)], e.slope});
          if (parent != 0) edges.push_back(oriented(n, parent));
          if (!lower_nodes.empty()) {
            const int local = raw_leaf_owners(static_cast<int>(lower_nodes.size()), lower_eps, d, true).back();
            edges.push_back(oriented(lower_nodes[static_cast<std::size_t>(local - 1)], n));
          }
          canonicalize(edges);
          result.push_back(std::move(edges));
        }
      }
    }
  }
  std::sort(result.begin(), result.end(), [](const RawEdges& a, const RawEdges& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return memo.emplace(eps, std::move(result)).first->second;
}

}  // namespace

std::vector<MixedCobinaryTree> enumerate_trees(const SignSequence& epsilon) {
  Memo memo;
  const auto& raw = enumerate_raw(epsilon.entries(), memo);
  std::vector<MixedCobinaryTree> out;
  out.reserve(raw.size());
  for (const auto& edges : raw) out.push_back(from_raw(epsilon, edges));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Symmetries

MixedCobinaryTree flip_horizontal(const MixedCobinaryTree& tree) {
  std::vector<SignedEdge> edges = tree.edges();
  for (auto& e : edges) e.slope = -e.slope;
  return detail::trusted_tree(tree.epsilon().negated(), std::move(edges));
}

MixedCobinaryTree reverse_tree(const MixedCobinaryTree& tree) {
  const int n = tree.n();
  std::vector<SignedEdge> edges = tree.edges();
  for (auto& e : edges) e = {e.index, n + 1 - e.q, n + 1 - e.p, -e.slope};
  return detail::trusted_tree(tree.epsilon().reversed(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Binary trees and the gravity map

class BinaryTreeBuilder {
 public:
  static BinaryTree from_nodes(std::vector<BinaryTree::Node> nodes) {
    BinaryTree t;
    t.nodes_ = std::move(nodes);
    return t;
  }
};

namespace {

// Appends the subtree in preorder and returns its root index (-1 for a leaf).
int append_parsed(const std::string& s, std::size_t& pos, std::vector<BinaryTree::Node>& nodes) {
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos >= s.size()) fail(ErrorKind::InvalidInput, "unexpected end of binary tree text");
  if (s[pos] == 'x') {
    ++pos;
    return -1;
  }
  if (s[pos] != '(') fail(ErrorKind::InvalidInput, "malformed binary tree text");
  ++pos;
  const int me = static_cast<int>(nodes.size());
  nodes.push_back({});
  const int l = append_parsed(s, pos, nodes);
  const int r = append_parsed(s, pos, nodes);
  nodes[static_cast<std::size_t>(me)] = {l, r};
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos >= s.size() || s[pos] != ')') fail(ErrorKind::InvalidInput, "malformed binary tree text");
  ++pos;
  return me;
}

void render(const std::vector<BinaryTree::Node>& nodes, int at, std::string& out) {
  if (at < 0) {
    out += 'x';
    return;
  }
  out += '(';
  render(nodes, nodes[static_cast<std::size_t>(at)].left, out);
  out += ' ';
  render(nodes, nodes[static_cast<std::size_t>(at)].right, out);
  out += ')';
}

}  // namespace

BinaryTree BinaryTree::parse(const std::string& text) {
  std::vector<Node> nodes;
  std::size_t pos = 0;
  append_parsed(text, pos, nodes);
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos != text.size()) fail(ErrorKind::InvalidInput, "trailing characters after binary tree");
  return BinaryTreeBuilder::from_nodes(std::move(nodes));
}

std::string BinaryTree::to_string() const {
  std::string out;
  render(nodes_, nodes_.empty() ? -1 : 0, out);
  return out;
}

std::vector<BinaryTree> all_binary_trees(int internal_nodes) {
  if (internal_nodes < 0) return {};
  std::vector<std::vector<std::string>> by_size(static_cast<std::size_t>(internal_nodes) + 1);
  by_size[0] = {"x"};
  for (int m = 1; m <= internal_nodes; ++m)
    for (int l = 0; l < m; ++l)
      for (const auto& a : by_size[static_cast<std::size_t>(l)])
        for (const auto& b : by_size[static_cast<std::size_t>(m - 1 - l)])
          by_size[static_cast<std::size_t>(m)].push_back("(" + a + " " + b + ")");
  std::vector<BinaryTree> out;
  for (const auto& s : by_size[static_cast<std::size_t>(internal_nodes)]) out.push_back(BinaryTree::parse(s));
  return out;
}

BinaryTree gravity_map(const MixedCobinaryTree& tree) {
  const int n = tree.n();
  // Counter-clockwise slot order around each node:
  // Lambda: parent, left child, right child. V: right parent, left parent, child.
  std::vector<std::array<int, 3>> ring(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) {
    const NodeSlots s = node_slots(tree, m);
    ring[static_cast<std::size_t>(m)] = tree.epsilon().at(m) > 0 ? std::array<int, 3>{s.first, s.second, s.third}
                                                                   : std::array<int, 3>{s.second, s.first, s.third};
  }
  std::vector<BinaryTree::Node> nodes;
  // Hanging from the rightward leaf of node n: the right child of a
  // Lambda-node, the right parent of a V-node.
  std::function<int(int, int)> hang = [&](int node, int arrival) {
    const int me = static_cast<int>(nodes.size());
    nodes.push_back({});
    const auto& r = ring[static_cast<std::size_t>(node)];
    auto descend = [&](int slot) {
      const int e = r[static_cast<std::size_t>(slot)];
      if (e == 0) return -1;
      const SignedEdge& edge = tree.edge(e);
      const int next = edge.p == node ? edge.q : edge.p;
      const auto& rn = ring[static_cast<std::size_t>(next)];
      const int back = static_cast<int>(std::find(rn.begin(), rn.end(), e) - rn.begin());
      return hang(next, back);
    };
    const int left = descend((arrival + 1) % 3);
    const int right = descend((arrival + 2) % 3);
    nodes[static_cast<std::size_t>(me)] = {left, right};
    return me;
  };
  hang(n, tree.epsilon().at(n) > 0 ? 2 : 0);
  return BinaryTreeBuilder::from_nodes(std::move(nodes));
}

}  // namespace mct

#include "mct/regions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "mct/error.hpp"

namespace mct {

CVector c_vector(const MixedCobinaryTree& tree, int k) {
  const SignedEdge& e = tree.edge(k);
  return Root{e.p, e.q, e.slope}.vector(tree.n() - 1);
}

CMatrix c_matrix(const MixedCobinaryTree& tree) {
  std::vector<IntVector> cols;
  for (const auto& e : tree.edges()) cols.push_back(c_vector(tree, e.index));
  if (cols.empty()) return {};
  return IntMatrix::from_columns(cols);
}

MixedCobinaryTree tree_from_c_matrix(const CMatrix& c, const SignSequence& epsilon) {
  const auto m = static_cast<std::size_t>(epsilon.size() - 1);
  if (c.rows() != m || c.cols() != m) fail(ErrorKind::DimensionMismatch, "c-matrix must be (n-1)x(n-1)");
  std::vector<SignedEdge> edges;
  for (std::size_t j = 0; j < m; ++j) {
    const auto root = decode_root(c.column(j));
    if (!root) fail(ErrorKind::NotARoot, "column " + std::to_string(j + 1) + " is not a positive or negative root");
    edges.push_back({static_cast<int>(j) + 1, root->p, root->q, root->sign});
  }
  return make_tree(epsilon, std::move(edges));
}

bool region_contains(const MixedCobinaryTree& tree, const RegionPoint& x, bool strict) {
  if (static_cast<int>(x.size()) != tree.n()) fail(ErrorKind::DimensionMismatch, "point length differs from n");
  for (const auto& e : tree.edges()) {
    const Rational rise = x[static_cast<std::size_t>(e.q - 1)] - x[static_cast<std::size_t>(e.p - 1)];
    const int s = rise.sign() * e.slope;
    if (strict ? s <= 0 : s < 0) return false;
  }
  return true;
}

Permutation rank_of(const RegionPoint& x) {
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return x[static_cast<std::size_t>(a)] < x[static_cast<std::size_t>(b)]; });
  std::vector<int> sigma(x.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && x[static_cast<std::size_t>(order[r])] == x[static_cast<std::size_t>(order[r - 1])])
      fail(ErrorKind::TiedCoordinates, "coordinates " + std::to_string(order[r - 1] + 1) + " and " +
                                           std::to_string(order[r] + 1) + " are equal; the point lies on a wall");
    sigma[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(sigma));
}

MixedCobinaryTree locate_tree(const RegionPoint& x, const SignSequence& epsilon) {
  if (static_cast<int>(x.size()) != epsilon.size()) fail(ErrorKind::DimensionMismatch, "point length differs from n");
  MixedCobinaryTree tree = tree_from_permutation(rank_of(x), epsilon);
  if (!region_contains(tree, x, true)) fail(ErrorKind::VerificationFailed, "located tree does not contain the point");
  return tree;
}

std::vector<int> reattached_edges(const MixedCobinaryTree& tree, int k) {
  const SignedEdge& e = tree.edge(k);
  if (e.slope < 0) return reattached_edges(reverse_tree(tree), k);
  // For both node types the leftmost parent sits in the first slot and the
  // rightmost child in the third (see NodeSlots).
  std::vector<int> out;
  if (const int j = node_slots(tree, e.q).first; j != 0) out.push_back(j);
  if (const int j = node_slots(tree, e.p).third; j != 0) out.push_back(j);
  std::sort(out.begin(), out.end());
  return out;
}

MixedCobinaryTree mutate(const MixedCobinaryTree& tree, int k) {
  const SignedEdge& ek = tree.edge(k);
  if (ek.slope < 0) return reverse_tree(mutate(reverse_tree(tree), k));

  const int p = ek.p;
  const int q = ek.q;
  std::vector<SignedEdge> edges = tree.edges();
  auto reattach = [&](int j, int lower, int upper) {
    SignedEdge& e = edges[static_cast<std::size_t>(j - 1)];
    e = lower < upper ? SignedEdge{j, lower, upper, 1} : SignedEdge{j, upper, lower, -1};
  };
  // The leftmost parent of q moves over to p; the rightmost child of p moves
  // over to q. Leaves move silently.
  if (const int j = node_slots(tree, q).first; j != 0) reattach(j, p, tree.edge(j).upper());
  if (const int j = node_slots(tree, p).third; j != 0) reattach(j, tree.edge(j).lower(), q);
  edges[static_cast<std::size_t>(k - 1)].slope = -1;

  MixedCobinaryTree result = make_tree(tree.epsilon(), std::move(edges));

  // Column form: c*_k = -c_k, c*_j = c_j + c_k for the re-attached edges.
  CMatrix expected = c_matrix(tree);
  const CVector ck = expected.column(static_cast<std::size_t>(k - 1));
  for (int j : reattached_edges(tree, k))
    for (std::size_t r = 0; r < ck.size(); ++r) expected(r, static_cast<std::size_t>(j - 1)) += ck[r];
  for (std::size_t r = 0; r < ck.size(); ++r) expected(r, static_cast<std::size_t>(k - 1)) = -ck[r];
  if (c_matrix(result) != expected)
    fail(ErrorKind::VerificationFailed, "re-attached tree disagrees with the c-vector recipe");
  return result;
}

MixedCobinaryTree mutation_sequence(const MixedCobinaryTree& tree, std::span<const int> ks) {
  MixedCobinaryTree t = tree;
  for (int k : ks) t = mutate(t, k);
  return t;
}

std::vector<int> wall_heights(const MixedCobinaryTree& tree, int k) {
  const SignedEdge& ek = tree.edge(k);
  const int n = tree.n();
  auto rep = [&](int v) { return v == ek.q ? ek.p : v; };
  std::vector<std::vector<int>> up(static_cast<std::size_t>(n) + 1);
  std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : tree.edges()) {
    if (e.index == k) continue;
    const int lo = rep(e.lower()), hi = rep(e.upper());
    up[static_cast<std::size_t>(lo)].push_back(hi);
    ++indeg[static_cast<std::size_t>(hi)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 1; v <= n; ++v)
    if (v != ek.q && indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  std::vector<int> height(static_cast<std::size_t>(n) + 1, 0);
  int next = 1;
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    height[static_cast<std::size_t>(v)] = next++;
    for (int w : up[static_cast<std::size_t>(v)])
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
  }
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) out[static_cast<std::size_t>(v - 1)] = height[static_cast<std::size_t>(rep(v))];
  return out;
}

Permutation adjacent_permutation(const MixedCobinaryTree& tree, int k) {
  const SignedEdge& ek = tree.edge(k);
  const std::vector<int> h = wall_heights(tree, k);
  std::vector<int> order(h.size());
  std::iota(order.begin(), order.end(), 1);
  // Shared height: the lower endpoint of edge k goes first.
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int ha = h[static_cast<std::size_t>(a - 1)], hb = h[static_cast<std::size_t>(b - 1)];
    if (ha != hb) return ha < hb;
    return a != b && a == ek.lower();
  });
  std::vector<int> sigma(h.size());
  for (std::size_t r = 0; r < order.size(); ++r) sigma[static_cast<std::size_t>(order[r] - 1)] = static_cast<int>(r) + 1;
  return Permutation(std::move(sigma));
}

}  // namespace mct

#include "mct/correspondence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

#include "mct/error.hpp"
#include "mct/exchange.hpp"

namespace mct {

RationalVector f_map(const RegionPoint& x) {
  if (x.size() < 2) fail(ErrorKind::InvalidInput, "F needs n >= 2 coordinates");
  RationalVector y(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) y[i] = x[i + 1] - x[i];
  return y;
}

IntVector f_map(const IntVector& x) {
  if (x.size() < 2) fail(ErrorKind::InvalidInput, "F needs n >= 2 coordinates");
  IntVector y(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) y[i] = checked_sub(x[i + 1], x[i]);
  return y;
}

RegionPoint f_lift(const RationalVector& y) {
  RegionPoint x(y.size() + 1, Rational(0));
  for (std::size_t i = 0; i < y.size(); ++i) x[i + 1] = x[i] + y[i];
  return x;
}

IntVector f_lift(const IntVector& y) {
  IntVector x(y.size() + 1, 0);
  for (std::size_t i = 0; i < y.size(); ++i) x[i + 1] = checked_add(x[i], y[i]);
  return x;
}

namespace {

// All orderings of positions by value, with tied positions in every order;
// the first entry breaks ties by ascending index.
std::vector<Permutation> tie_breaks(const IntVector& x) {
  std::map<Int, std::vector<int>> groups;
  for (std::size_t i = 0; i < x.size(); ++i) groups[x[i]].push_back(static_cast<int>(i) + 1);
  std::vector<std::vector<int>> blocks;
  for (auto& [value, members] : groups) blocks.push_back(members);

  std::vector<Permutation> out;
  std::vector<int> sigma(x.size());
  std::function<void(std::size_t, int)> place = [&](std::size_t b, int next_rank) {
    if (b == blocks.size()) {
      out.emplace_back(sigma);
      return;
    }
    std::vector<int> members = blocks[b];
    do {
      for (std::size_t j = 0; j < members.size(); ++j)
        sigma[static_cast<std::size_t>(members[j] - 1)] = next_rank + static_cast<int>(j);
      place(b + 1, next_rank + static_cast<int>(members.size()));
    } while (std::next_permutation(members.begin(), members.end()));
  };
  place(0, 1);
  return out;
}

// Relabels edges so that V^t E C(T) becomes the identity; nullopt when the
// product is not a permutation matrix.
std::optional<MixedCobinaryTree> paired_tree(const MixedCobinaryTree& tree, const IntMatrix& vte) {
  const IntMatrix product = vte * c_matrix(tree);
  if (!is_permutation_matrix(product)) return std::nullopt;
  std::vector<SignedEdge> edges = tree.edges();
  for (auto& e : edges) {
    const auto j = static_cast<std::size_t>(e.index - 1);
    for (std::size_t i = 0; i < product.rows(); ++i)
      if (product(i, j) == 1) e.index = static_cast<int>(i) + 1;
  }
  return make_tree(tree.epsilon(), std::move(edges));
}

}  // namespace

ClusterTrace trace_cluster_to_tree(const IntMatrix& v, const SignSequence& epsilon) {
  const ClusterCheck check = check_cluster_matrix(v, epsilon);
  if (!check.ok) fail(ErrorKind::NotACluster, check.diagnostic);

  ClusterTrace t{};
  t.euler = euler_matrix(epsilon);
  t.euler_inverse = integer_inverse(t.euler);
  t.vte = v.transpose() * t.euler;
  t.c_matrix = integer_inverse(t.vte);

  const std::size_t m = t.vte.rows();
  const std::size_t n = m + 1;
  t.lifted = IntMatrix(m, n);
  t.lifted_display = IntMatrix(m, n);
  t.sum.assign(n, 0);
  t.display_sum.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const IntVector row = f_lift(t.vte.row(i));
    const Int low = *std::min_element(row.begin(), row.end());
    for (std::size_t j = 0; j < n; ++j) {
      t.lifted(i, j) = row[j];
      t.lifted_display(i, j) = checked_sub(row[j], low);
      t.sum[j] = checked_add(t.sum[j], row[j]);
      t.display_sum[j] = checked_add(t.display_sum[j], t.lifted_display(i, j));
    }
  }

  // The shifted sum differs from the plain one by a multiple of (1, ..., 1),
  // so both give the same rankings; the shifted one is what gets reported.
  t.tie_break_rankings = tie_breaks(t.display_sum);
  t.ranking = t.tie_break_rankings.front();
  for (const Permutation& sigma : t.tie_break_rankings) {
    if (auto tree = paired_tree(tree_from_permutation(sigma, epsilon), t.vte)) {
      t.tree = std::move(*tree);
      return t;
    }
  }
  fail(ErrorKind::VerificationFailed, "no ranking of the summed lifts gives a tree with V^t E C = I");
}

MixedCobinaryTree cluster_to_tree(const IntMatrix& v, const SignSequence& epsilon) {
  return trace_cluster_to_tree(v, epsilon).tree;
}

MixedCobinaryTree cluster_to_tree(const ClusterMatrix& v, const SignSequence& epsilon) {
  return cluster_to_tree(v.matrix(), epsilon);
}

IntMatrix paired_cluster_matrix(const MixedCobinaryTree& tree) {
  if (tree.n() < 2) fail(ErrorKind::InvalidInput, "clusters need n >= 2");
  const IntMatrix e = euler_matrix(tree.epsilon());
  // V^t E C = I, so V = (E C)^{-t}.
  return integer_inverse(e * c_matrix(tree)).transpose();
}

ClusterMatrix tree_to_cluster(const MixedCobinaryTree& tree) {
  const IntMatrix v = paired_cluster_matrix(tree);
  ClusterMatrix cluster = ClusterMatrix::from_matrix(v, tree.epsilon());
  if (!identical(cluster_to_tree(v, tree.epsilon()), tree))
    fail(ErrorKind::VerificationFailed, "cluster does not map back to the tree");
  return cluster;
}

bool verify_corollary2(const MixedCobinaryTree& tree, const ClusterMatrix& v) {
  if (tree.n() < 2 || static_cast<int>(v.columns().size()) != tree.n() - 1) return false;
  const IntMatrix product = v.matrix().transpose() * euler_matrix(tree.epsilon()) * c_matrix(tree);
  return is_permutation_matrix(product);
}

std::pair<RegionPoint, bool> wall_stability_point(const MixedCobinaryTree& tree, int k) {
  const SignedEdge& ek = tree.edge(k);
  RegionPoint x;
  for (int h : wall_heights(tree, k)) x.emplace_back(h);
  // y = F(x) pairs with c-vectors directly; as a weight on dimension vectors
  // it becomes E^{-t} y, since (E^{-t} y)^t E beta = y^t beta.
  const IntMatrix e_inv_t = integer_inverse(euler_matrix(tree.epsilon())).transpose();
  const RationalVector z = e_inv_t * f_map(x);
  const bool ok = stability_domain_contains(tree.epsilon(), Root{ek.p, ek.q, 1}, z);
  return {std::move(x), ok};
}

std::vector<BijectionEntry> bijection_report(const SignSequence& epsilon) {
  std::vector<BijectionEntry> out;
  for (ClusterMatrix& cluster : enumerate_clusters(epsilon)) {
    BijectionEntry entry{cluster_to_tree(cluster, epsilon), cluster, {}, false};
    entry.c_matrix = c_matrix(entry.tree);
    entry.verified = verify_corollary2(entry.tree, cluster) && tree_to_cluster(entry.tree) == cluster;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace mct

#pragma once

// Roots of the type A quiver Q_epsilon, the Euler form, clusters of almost
// positive roots and their classical c-matrices, and the stability domains
// D(beta) of virtual semi-invariants.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "mct/matrix.hpp"
#include "mct/roots.hpp"
#include "mct/tree.hpp"

namespace mct {

// pi_i = row i of E^{-1}: dimension vectors of the indecomposable projectives.
std::vector<IntVector> projective_roots(const SignSequence& epsilon);

struct AlmostPositiveRoot {
  enum class Kind { Positive, NegativeProjective };

  Kind kind = Kind::Positive;
  Root root;        // meaningful for Positive
  int vertex = 0;   // meaningful for NegativeProjective: the vector is -pi_vertex
  IntVector vector;
};

// All beta_pq ordered by (p, q), then -pi_1, ..., -pi_{n-1}.
std::vector<AlmostPositiveRoot> almost_positive_roots(const SignSequence& epsilon);

// Classifies a vector as an almost positive root of Q_epsilon.
std::optional<AlmostPositiveRoot> classify_almost_positive(const IntVector& v, const SignSequence& epsilon);

// a^t E b = dim Hom - dim Ext^1 on dimension vectors.
Int euler_form(const SignSequence& epsilon, const IntVector& a, const IntVector& b);
Rational euler_form(const SignSequence& epsilon, const RationalVector& a, const IntVector& b);

// Proper subroots of a positive root beta_pq, sorted by (p, q):
// beta_pr with epsilon_r = +1, beta_rq with epsilon_r = -1, and beta_ab with
// epsilon_a = -1, epsilon_b = +1, for p < r < q and p < a < b < q.
std::vector<Root> subroots(const SignSequence& epsilon, const Root& beta);

struct ClusterCheck {
  bool ok = false;
  std::string diagnostic;
};

// Distinct almost positive roots as columns, with V^t E W >= 0 where W holds
// the positive columns.
ClusterCheck check_cluster_matrix(const IntMatrix& v, const SignSequence& epsilon);
bool is_cluster_matrix(const IntMatrix& v, const SignSequence& epsilon);

// A cluster as an unordered set: columns kept in lexicographic order.
class ClusterMatrix {
 public:
  ClusterMatrix() = default;
  // Throws NotACluster with the diagnostic of check_cluster_matrix.
  static ClusterMatrix from_matrix(const IntMatrix& v, const SignSequence& epsilon);

  const std::vector<IntVector>& columns() const noexcept { return columns_; }
  IntMatrix matrix() const { return IntMatrix::from_columns(columns_); }

  auto operator<=>(const ClusterMatrix&) const = default;

 private:
  std::vector<IntVector> columns_;
};

// (E^t)^{-1}: the projective roots as columns.
IntMatrix initial_cluster_matrix(const SignSequence& epsilon);

// Cliques of size n-1 in the pairwise compatibility graph, sorted.
std::vector<ClusterMatrix> enumerate_clusters(const SignSequence& epsilon);
// Direct filter over all (n-1)-subsets; only sensible for small n.
std::vector<ClusterMatrix> enumerate_clusters_by_subsets(const SignSequence& epsilon);

// C = E^{-1} (V^t)^{-1}, the unique C with V^t E C = I. Column order follows V.
// Throws SingularMatrix, NonIntegralResult, or NotARoot.
IntMatrix classical_c_matrix(const IntMatrix& v, const SignSequence& epsilon);

// v^t E beta = 0 and v^t E beta' <= 0 for every proper subroot beta'.
bool stability_domain_contains(const SignSequence& epsilon, const Root& beta, const RationalVector& v);

// A column order making V^t E V upper unitriangular, if one exists.
std::optional<std::vector<int>> unipotent_order(const IntMatrix& v, const SignSequence& epsilon);

}  // namespace mct

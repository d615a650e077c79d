#include "mct/quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "mct/error.hpp"
#include "mct/exchange.hpp"

namespace mct {

std::vector<IntVector> projective_roots(const SignSequence& epsilon) {
  return integer_inverse(euler_matrix(epsilon)).row_list();
}

std::vector<AlmostPositiveRoot> almost_positive_roots(const SignSequence& epsilon) {
  const int n = epsilon.size();
  if (n < 2) fail(ErrorKind::InvalidInput, "the quiver needs n >= 2");
  std::vector<AlmostPositiveRoot> out;
  for (int p = 1; p < n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      const Root r{p, q, 1};
      out.push_back({AlmostPositiveRoot::Kind::Positive, r, 0, r.vector(n - 1)});
    }
  const auto pis = projective_roots(epsilon);
  for (std::size_t i = 0; i < pis.size(); ++i) {
    IntVector v = pis[i];
    for (Int& x : v) x = -x;
    out.push_back({AlmostPositiveRoot::Kind::NegativeProjective, {}, static_cast<int>(i) + 1, std::move(v)});
  }
  return out;
}

std::optional<AlmostPositiveRoot> classify_almost_positive(const IntVector& v, const SignSequence& epsilon) {
  if (static_cast<int>(v.size()) != epsilon.size() - 1) return std::nullopt;
  for (auto& r : almost_positive_roots(epsilon))
    if (r.vector == v) return r;
  return std::nullopt;
}

Int euler_form(const SignSequence& epsilon, const IntVector& a, const IntVector& b) {
  return dot(a, euler_matrix(epsilon) * b);
}

Rational euler_form(const SignSequence& epsilon, const RationalVector& a, const IntVector& b) {
  return dot(a, euler_matrix(epsilon) * b);
}

std::vector<Root> subroots(const SignSequence& epsilon, const Root& beta) {
  if (beta.sign != 1) fail(ErrorKind::InvalidInput, "subroots are defined for positive roots only");
  const int p = beta.p, q = beta.q;
  if (!(1 <= p && p < q && q <= epsilon.size())) fail(ErrorKind::InvalidInput, "root interval out of range");
  std::set<Root> out;
  for (int r = p + 1; r < q; ++r) {
    if (epsilon.at(r) > 0) out.insert({p, r, 1});
    if (epsilon.at(r) < 0) out.insert({r, q, 1});
  }
  for (int a = p + 1; a < q; ++a)
    for (int b = a + 1; b < q; ++b)
      if (epsilon.at(a) < 0 && epsilon.at(b) > 0) out.insert({a, b, 1});
  return {out.begin(), out.end()};
}

ClusterCheck check_cluster_matrix(const IntMatrix& v, const SignSequence& epsilon) {
  const auto m = static_cast<std::size_t>(epsilon.size() - 1);
  if (epsilon.size() < 2) return {false, "the quiver needs n >= 2"};
  if (v.rows() != m || v.cols() != m) return {false, "cluster matrix must be (n-1)x(n-1)"};
  const auto cols = v.column_list();
  std::vector<bool> positive(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const auto r = classify_almost_positive(cols[i], epsilon);
    if (!r) return {false, "column " + std::to_string(i + 1) + " is not an almost positive root"};
    positive[i] = r->kind == AlmostPositiveRoot::Kind::Positive;
    for (std::size_t j = 0; j < i; ++j)
      if (cols[j] == cols[i]) return {false, "columns " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide"};
  }
  const IntMatrix vte = v.transpose() * euler_matrix(epsilon);
  for (std::size_t j = 0; j < m; ++j) {
    if (!positive[j]) continue;
    const IntVector w = vte * cols[j];
    for (std::size_t i = 0; i < m; ++i)
      if (w[i] < 0)
        return {false, "v_" + std::to_string(i + 1) + "^t E v_" + std::to_string(j + 1) + " = " + std::to_string(w[i]) + " < 0"};
  }
  return {true, ""};
}

bool is_cluster_matrix(const IntMatrix& v, const SignSequence& epsilon) {
  return check_cluster_matrix(v, epsilon).ok;
}

ClusterMatrix ClusterMatrix::from_matrix(const IntMatrix& v, const SignSequence& epsilon) {
  const ClusterCheck check = check_cluster_matrix(v, epsilon);
  if (!check.ok) fail(ErrorKind::NotACluster, check.diagnostic);
  ClusterMatrix c;
  c.columns_ = v.column_list();
  std::sort(c.columns_.begin(), c.columns_.end());
  return c;
}

IntMatrix initial_cluster_matrix(const SignSequence& epsilon) {
  return integer_inverse(euler_matrix(epsilon).transpose());
}

std::vector<ClusterMatrix> enumerate_clusters(const SignSequence& epsilon) {
  const auto roots = almost_positive_roots(epsilon);
  const IntMatrix e = euler_matrix(epsilon);
  const std::size_t count = roots.size();
  const auto target = static_cast<std::size_t>(epsilon.size() - 1);

  auto ext_free = [&](const IntVector& a, const IntVector& b) { return dot(a, e * b) >= 0; };
  std::vector<std::vector<bool>> compatible(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      const auto& u = roots[i];
      const auto& w = roots[j];
      bool ok = true;
      if (u.kind == AlmostPositiveRoot::Kind::Positive) ok = ok && ext_free(w.vector, u.vector) && ext_free(u.vector, u.vector);
      if (w.kind == AlmostPositiveRoot::Kind::Positive) ok = ok && ext_free(u.vector, w.vector) && ext_free(w.vector, w.vector);
      compatible[i][j] = ok;
    }

  std::vector<ClusterMatrix> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (chosen.size() == target) {
      std::vector<IntVector> cols;
      for (std::size_t i : chosen) cols.push_back(roots[i].vector);
      out.push_back(ClusterMatrix::from_matrix(IntMatrix::from_columns(cols), epsilon));
      return;
    }
    for (std::size_t i = from; i < count; ++i) {
      if (count - i < target - chosen.size()) break;
      bool ok = true;
      for (std::size_t j : chosen) ok = ok && compatible[i][j];
      if (!ok) continue;
      chosen.push_back(i);
      extend(i + 1);
      chosen.pop_back();
    }
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClusterMatrix> enumerate_clusters_by_subsets(const SignSequence& epsilon) {
  const auto roots = almost_positive_roots(epsilon);
  const auto target = static_cast<std::size_t>(epsilon.size() - 1);
  std::vector<ClusterMatrix> out;
  std::vector<bool> pick(roots.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(target), true);
  do {
    std::vector<IntVector> cols;
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (pick[i]) cols.push_back(roots[i].vector);
    const IntMatrix v = IntMatrix::from_columns(cols);
    if (is_cluster_matrix(v, epsilon)) out.push_back(ClusterMatrix::from_matrix(v, epsilon));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

IntMatrix classical_c_matrix(const IntMatrix& v, const SignSequence& epsilon) {
  const IntMatrix vte = v.transpose() * euler_matrix(epsilon);
  const IntMatrix c = integer_inverse(vte);
  if (vte * c != IntMatrix::identity(v.cols())) fail(ErrorKind::VerificationFailed, "V^t E C is not the identity");
  for (std::size_t j = 0; j < c.cols(); ++j)
    if (!decode_root(c.column(j)))
      fail(ErrorKind::NotARoot, "classical c-vector " + std::to_string(j + 1) + " is not a root");
  return c;
}

bool stability_domain_contains(const SignSequence& epsilon, const Root& beta, const RationalVector& v) {
  const int dim = epsilon.size() - 1;
  if (static_cast<int>(v.size()) != dim) fail(ErrorKind::DimensionMismatch, "vector length must be n-1");
  if (euler_form(epsilon, v, beta.vector(dim)) != 0) return false;
  for (const Root& sub : subroots(epsilon, beta))
    if (euler_form(epsilon, v, sub.vector(dim)) > 0) return false;
  return true;
}

std::optional<std::vector<int>> unipotent_order(const IntMatrix& v, const SignSequence& epsilon) {
  const IntMatrix gram = v.transpose() * euler_matrix(epsilon) * v;
  const std::size_t m = gram.rows();
  // A nonzero entry at (a, b) forces column a before column b.
  std::vector<int> indeg(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a != b && gram(a, b) != 0) ++indeg[b];
  std::vector<int> order;
  std::vector<bool> done(m, false);
  while (order.size() < m) {
    std::size_t pick = m;
    for (std::size_t c = 0; c < m && pick == m; ++c)
      if (!done[c] && indeg[c] == 0) pick = c;
    if (pick == m) return std::nullopt;
    done[pick] = true;
    order.push_back(static_cast<int>(pick));
    for (std::size_t b = 0; b < m; ++b)
      if (b != pick && gram(pick, b) != 0) --indeg[b];
  }
  for (std::size_t i = 0; i < m; ++i)
    if (gram(static_cast<std::size_t>(order[i]), static_cast<std::size_t>(order[i])) != 1) return std::nullopt;
  return order;
}

}  // namespace mct

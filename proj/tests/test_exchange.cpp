#include <doctest.h>

#include "mct/verify.hpp"
#include "support.hpp"

using namespace mct;
using namespace fixtures;

namespace {

int sign(Int v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

TEST_CASE("Euler matrices") {
  CHECK(euler_matrix(eps({-1, 1, -1, -1, 1})) == rows({{1, 0, 0, 0}, {-1, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}}));
  const IntMatrix e = euler_matrix(cluster_example_epsilon());
  CHECK(e == rows({{1, 0, 0, 0}, {-1, 1, -1, 0}, {0, 0, 1, 0}, {0, 0, -1, 1}}));
  CHECK(integer_inverse(e) == rows({{1, 0, 0, 0}, {1, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 1, 1}}));
  CHECK(euler_matrix(eps({1, -1})) == IntMatrix::identity(1));
  CHECK(euler_matrix(eps({-1, 1})) == IntMatrix::identity(1));
  CHECK(error_kind([] { euler_matrix(eps({1})); }) == ErrorKind::InvalidInput);

  for_each_epsilon(2, 7, [](const SignSequence& s) {
    const IntMatrix m = euler_matrix(s);
    // The end signs play no role.
    std::vector<int> flipped = s.entries();
    flipped.front() = -flipped.front();
    flipped.back() = -flipped.back();
    CHECK(euler_matrix(SignSequence(flipped)) == m);
    CHECK(determinant(m) == 1);
    const IntMatrix inv = integer_inverse(m);
    for (std::size_t i = 0; i < inv.rows(); ++i)
      for (std::size_t j = 0; j < inv.cols(); ++j) CHECK(inv(i, j) >= 0);
  });
}

TEST_CASE("X matrix") {
  const IntMatrix x = x_matrix(eps({-1, 1, -1, -1, 1}));
  CHECK(x(0, 1) == 1);
  CHECK(x(1, 2) == -1);
  CHECK(x(2, 3) == -1);
  CHECK(is_skew_symmetric(x));
  const IntMatrix e = euler_matrix(cluster_example_epsilon());
  CHECK(x_matrix(cluster_example_epsilon()) == e - e.transpose());
  for_each_epsilon(2, 6, [](const SignSequence& s) {
    const IntMatrix m = x_matrix(s);
    CHECK(m + m.transpose() == IntMatrix(m.rows(), m.cols()));
  });
}

TEST_CASE("gamma pairing table") {
  for_each_epsilon(2, 6, [](const SignSequence& s) {
    const int n = s.size();
    const IntMatrix x = x_matrix(s);
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q) {
        const Int value = dot(gamma_vector(p, n), x * gamma_vector(q, n));
        if (p == n || q == n) {
          // gamma_n = 0, so the last row and column of the table vanish.
          CHECK(value == 0);
        } else if (p < q) {
          CHECK(value == s.at(q));
        } else if (p > q) {
          CHECK(value == -s.at(p));
        } else {
          CHECK(value == 0);
        }
      }
  });
}

TEST_CASE("exchange matrices of small trees") {
  for_each_epsilon(2, 6, [](const SignSequence& s) {
    const ExchangeMatrix b = exchange_matrix(initial_tree(s));
    CHECK(b.principal() == x_matrix(s));
    CHECK(b.bottom() == IntMatrix::identity(static_cast<std::size_t>(s.size() - 1)));
  });
  for (const auto& t : enumerate_trees(eps({1, -1}))) {
    const ExchangeMatrix b = exchange_matrix(t);
    CHECK(b.principal() == IntMatrix(1, 1));
    CHECK(std::abs(b.bottom()(0, 0)) == 1);
  }
  CHECK(exchange_matrix(initial_tree(eps({1}))).rank() == 0);
  const ExchangeMatrix fig = exchange_matrix(mutation_example_tree());
  CHECK(fig.bottom() == mutation_example_c());
  const IntMatrix c = mutation_example_c();
  CHECK(fig.principal() == c.transpose() * x_matrix(mutation_example_epsilon()) * c);
}

TEST_CASE("exchange matrix construction validates its blocks") {
  CHECK(error_kind([] { ExchangeMatrix(rows({{0, 1}, {1, 0}}), IntMatrix::identity(2)); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([] { ExchangeMatrix(IntMatrix(2, 2), IntMatrix::identity(3)); }) == ErrorKind::DimensionMismatch);
  const ExchangeMatrix b(x_matrix(eps({1, 1, -1, 1})), IntMatrix::identity(3));
  CHECK(ExchangeMatrix::from_stacked(b.stacked()) == b);
  CHECK(error_kind([&] { fz_mutate(b, 4); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("FZ mutation examples") {
  const SignSequence s = eps({-1, -1, 1});
  const ExchangeMatrix mutated = fz_mutate(exchange_matrix(initial_tree(s)), 1);
  CHECK(mutated.bottom() == IntMatrix::from_columns({{-1, 0}, {0, 1}}));
  CHECK(mutated == exchange_matrix(mutate(initial_tree(s), 1)));

  // Add column 3 to columns 2 and 4, then negate column 3.
  const ExchangeMatrix b = exchange_matrix(mutation_example_tree());
  CHECK(fz_mutate(b, 3).bottom() == mutation_example_c_star());
  IntMatrix ops = mutation_example_c();
  for (std::size_t r = 0; r < 4; ++r) {
    ops(r, 1) += ops(r, 2);
    ops(r, 3) += ops(r, 2);
    ops(r, 2) = -ops(r, 2);
  }
  CHECK(ops == mutation_example_c_star());
  CHECK(b.principal()(2, 1) == 1);
  CHECK(b.principal()(2, 3) == 1);
  CHECK(b.principal()(2, 0) == -1);
}

TEST_CASE("tree mutation matches FZ mutation of the exchange matrix") {
  for_each_tree(2, 5, [](const MixedCobinaryTree& t) {
    const ExchangeMatrix b = exchange_matrix(t);
    for (int k = 1; k < t.n(); ++k) {
      const ExchangeMatrix m = fz_mutate(b, k);
      CHECK(exchange_matrix(mutate(t, k)) == m);
      CHECK(fz_mutate(m, k) == b);
      CHECK(is_skew_symmetric(m.principal()));
    }
  });
  SampleSource rng(11);
  for (int n : {6, 7})
    for (int i = 0; i < 50; ++i) {
      const auto trees = enumerate_trees(rng.epsilon(n));
      const auto& t = trees[rng.below(trees.size())];
      const int k = static_cast<int>(rng.between(1, n - 1));
      CHECK(exchange_matrix(mutate(t, k)) == fz_mutate(exchange_matrix(t), k));
    }
}

TEST_CASE("sign laws for pairs of edges") {
  for_each_tree(2, 5, [](const MixedCobinaryTree& t) {
    const IntMatrix b = exchange_matrix(t).principal();
    for (const auto& ek : t.edges())
      for (const auto& ej : t.edges()) {
        if (ek.index == ej.index) continue;
        const Int bkj = b(static_cast<std::size_t>(ek.index - 1), static_cast<std::size_t>(ej.index - 1));
        CHECK(std::abs(bkj) <= 1);
        const int sk = ek.slope, sj = ej.slope;
        if (ek.p != ej.p && ek.p != ej.q && ek.q != ej.p && ek.q != ej.q) {
          CHECK(bkj == 0);
        } else if (ek.p == ej.p || ek.q == ej.q) {
          CHECK(std::abs(bkj) == 1);
          CHECK(sign(bkj) == sk);
        } else if (ej.p == ek.q) {
          CHECK(bkj == t.epsilon().at(ek.q) * sj * sk);
        } else {
          REQUIRE(ej.q == ek.p);
          CHECK(bkj == -t.epsilon().at(ek.p) * sj * sk);
        }
      }
  });
}

TEST_CASE("the columns gaining c_k are those with b_kj of the sign of c_k") {
  for_each_tree(2, 5, [](const MixedCobinaryTree& t) {
    const IntMatrix b = exchange_matrix(t).principal();
    for (int k = 1; k < t.n(); ++k) {
      std::vector<int> same_sign;
      for (int j = 1; j < t.n(); ++j)
        if (b(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(j - 1)) == t.edge(k).slope) same_sign.push_back(j);
      CHECK(same_sign == reattached_edges(t, k));
    }
  });
}

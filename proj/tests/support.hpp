#pragma once

// Fixtures shared by the unit tests: the worked examples and small sweeps.

#include <doctest.h>

#include <functional>
#include <vector>

#include "mct/correspondence.hpp"
#include "mct/error.hpp"
#include "mct/exchange.hpp"
#include "mct/quiver.hpp"
#include "mct/regions.hpp"
#include "mct/tree.hpp"

namespace fixtures {

using namespace mct;

inline SignSequence eps(std::vector<int> v) { return SignSequence(std::move(v)); }

inline IntMatrix rows(std::vector<IntVector> r) { return IntMatrix::from_rows(r); }

// The tree with R(T) = {x_2 > x_1 > x_3 < x_4}; as drawn, t_1 and the
// rightmost node are Lambda-nodes and t_2, t_3 are V-nodes.
inline MixedCobinaryTree region_example_tree() {
  return make_tree(eps({1, -1, -1, 1}), {{1, 1, 2, 1}, {2, 1, 3, -1}, {3, 3, 4, 1}});
}

// Mutation example, T and T* = mu_3(T).
inline SignSequence mutation_example_epsilon() { return eps({-1, 1, -1, -1, -1}); }
inline IntMatrix mutation_example_c() { return rows({{-1, 0, 0, 0}, {-1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, -1}}); }
inline IntMatrix mutation_example_c_star() { return rows({{-1, 0, 0, 0}, {-1, 1, 0, 0}, {0, 1, -1, 1}, {0, 1, -1, 0}}); }
inline MixedCobinaryTree mutation_example_tree() {
  return tree_from_c_matrix(mutation_example_c(), mutation_example_epsilon());
}

// The worked cluster example with n = 5.
inline SignSequence cluster_example_epsilon() { return eps({-1, 1, -1, 1, 1}); }
inline IntMatrix cluster_example_v() { return rows({{1, 1, 0, 0}, {1, 1, 1, 0}, {1, 0, 1, -1}, {0, 0, 0, -1}}); }
inline IntMatrix cluster_example_c() { return rows({{1, 0, -1, 0}, {1, 0, 0, 0}, {1, -1, 0, 0}, {0, 0, 0, -1}}); }
// Edges as labelled in the drawing: l_1 = t_1 t_4 rising, l_2 = t_3 t_4
// falling, l_3 = t_1 t_2 falling, l_4 = t_4 t_5 falling.
inline MixedCobinaryTree cluster_example_tree() {
  return make_tree(cluster_example_epsilon(), {{1, 1, 4, 1}, {2, 3, 4, -1}, {3, 1, 2, -1}, {4, 4, 5, -1}});
}

inline void for_each_epsilon(int n_min, int n_max, const std::function<void(const SignSequence&)>& f) {
  for (int n = n_min; n <= n_max; ++n)
    for (const auto& e : SignSequence::all(n)) f(e);
}

inline void for_each_tree(int n_min, int n_max, const std::function<void(const MixedCobinaryTree&)>& f) {
  for_each_epsilon(n_min, n_max, [&](const SignSequence& e) {
    for (const auto& t : enumerate_trees(e)) f(t);
  });
}

template <class F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const MctError& e) {
    return e.kind();
  }
  FAIL("expected an MctError");
  return ErrorKind::InvalidInput;
}

}  // namespace fixtures

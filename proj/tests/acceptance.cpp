// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "mct/cli.hpp"
#include "mct/correspondence.hpp"
#include "mct/error.hpp"
#include "mct/exchange.hpp"
#include "mct/json_io.hpp"
#include "mct/quiver.hpp"
#include "mct/regions.hpp"
#include "mct/verify.hpp"

using namespace mct;
using mct::json::Json;

namespace {

// C_1 .. C_8 as printed.
const std::map<int, std::uint64_t> kCatalan = {{1, 1}, {2, 2}, {3, 5}, {4, 14}, {5, 42}, {6, 132}, {7, 429}, {8, 1430}};

std::vector<SignSequence> all_epsilons(int n_min, int n_max) {
  std::vector<SignSequence> out;
  for (int n = n_min; n <= n_max; ++n)
    for (auto& e : SignSequence::all(n)) out.push_back(e);
  return out;
}

IntMatrix rows(std::vector<IntVector> r) { return IntMatrix::from_rows(r); }

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure and keeps the message short.
class Check {
 public:
  void expect(bool condition, const std::string& what) {
    if (!condition && ok_) {
      ok_ = false;
      first_ = what;
    }
  }
  bool ok() const { return ok_; }
  Outcome done(const std::string& detail) const { return {ok_, ok_ ? detail : "first failure: " + first_}; }

 private:
  bool ok_ = true;
  std::string first_;
};

Outcome catalan_counts() {
  Check c;
  std::size_t checked = 0;
  for (const auto& e : all_epsilons(1, 6)) {
    c.expect(enumerate_trees(e).size() == kCatalan.at(e.size()), "epsilon " + e.to_string());
    ++checked;
  }
  SampleSource rng(1);
  for (int n : {7, 8})
    for (int i = 0; i < 20; ++i) {
      const SignSequence e = rng.epsilon(n);
      c.expect(enumerate_trees(e).size() == kCatalan.at(n), "epsilon " + e.to_string());
      ++checked;
    }
  return c.done(std::to_string(checked) + " epsilon vectors, n = 1..8");
}

Outcome permutation_partition() {
  Check c;
  std::size_t perms = 0;
  for (const auto& e : all_epsilons(1, 6)) {
    std::size_t total = 0;
    std::set<Permutation> seen;
    for (const auto& t : enumerate_trees(e))
      for (const auto& s : permutations_of(t)) {
        ++total;
        seen.insert(s);
        c.expect(tree_from_permutation(s, e) == t, "round trip of " + s.to_string());
      }
    const std::size_t factorial = all_permutations(e.size()).size();
    c.expect(total == factorial && seen.size() == factorial, "sum over epsilon " + e.to_string());
    perms += total;
  }
  return c.done(std::to_string(perms) + " permutations round-tripped, n <= 6");
}

Outcome region_permutations() {
  Check c;
  const MixedCobinaryTree t = make_tree(SignSequence({1, -1, -1, 1}), {{1, 1, 2, 1}, {2, 1, 3, -1}, {3, 3, 4, 1}});
  RegionPoint x{Rational(2), Rational(3), Rational(1), Rational(4)};
  c.expect(region_contains(t, x), "x = (2,3,1,4) in R(T)");
  std::set<std::string> got;
  for (const auto& s : permutations_of(t)) got.insert(s.to_string());
  c.expect(got == std::set<std::string>{"2314", "2413", "3412"}, "pi(T)");
  return c.done("pi(T) = {2314, 2413, 3412}");
}

Outcome exchange_mutation() {
  Check c;
  std::size_t count = 0;
  for (const auto& e : all_epsilons(2, 5))
    for (const auto& t : enumerate_trees(e))
      for (int k = 1; k < t.n(); ++k) {
        c.expect(exchange_matrix(mutate(t, k)) == fz_mutate(exchange_matrix(t), k), "epsilon " + e.to_string());
        ++count;
      }
  SampleSource rng(2);
  for (int n : {6, 7})
    for (int i = 0; i < 200; ++i) {
      const SignSequence e = rng.epsilon(n);
      const auto trees = enumerate_trees(e);
      const auto& t = trees[rng.below(trees.size())];
      const int k = static_cast<int>(rng.between(1, n - 1));
      c.expect(exchange_matrix(mutate(t, k)) == fz_mutate(exchange_matrix(t), k), "random pair at n = " + std::to_string(n));
      ++count;
    }
  return c.done(std::to_string(count) + " (tree, k) pairs");
}

Outcome mutation_golden() {
  Check c;
  const SignSequence e({-1, 1, -1, -1, -1});
  const IntMatrix before = rows({{-1, 0, 0, 0}, {-1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, -1}});
  const IntMatrix after = rows({{-1, 0, 0, 0}, {-1, 1, 0, 0}, {0, 1, -1, 1}, {0, 1, -1, 0}});
  const MixedCobinaryTree t = tree_from_c_matrix(before, e);
  c.expect(c_matrix(mutate(t, 3)) == after, "tree mutation");
  const ExchangeMatrix fz = fz_mutate(exchange_matrix(t), 3);
  c.expect(fz.bottom() == after, "FZ bottom block");
  // Add column 3 to columns 2 and 4, then negate column 3.
  IntMatrix ops = before;
  for (std::size_t r = 0; r < 4; ++r) {
    ops(r, 1) += ops(r, 2);
    ops(r, 3) += ops(r, 2);
    ops(r, 2) = -ops(r, 2);
  }
  c.expect(ops == after, "column operations");
  const IntMatrix b = exchange_matrix(t).principal();
  std::vector<int> gaining;
  for (int j = 1; j <= 4; ++j)
    if (j != 3 && b(2, static_cast<std::size_t>(j - 1)) == 1) gaining.push_back(j);
  c.expect(gaining == std::vector<int>{2, 4}, "b_3j with the sign of c_3 exactly at j = 2, 4");
  c.expect(c_matrix(mutate(mutate(t, 3), 3)) == before, "involution");
  return c.done("C(T) -> C(T*) by both routes; columns 2 and 4 gain column 3");
}

Outcome cli_trace() {
  Check c;
  std::ostringstream out, err;
  const int status = cli::run({"bij", "to-tree", "--cluster", "[[1,1,1,0],[1,1,0,0],[0,1,1,0],[0,0,-1,-1]]", "--epsilon",
                               "-1,1,-1,1,1", "--trace"},
                              out, err);
  c.expect(status == 0, "exit status " + std::to_string(status) + " " + err.str());
  if (status != 0) return c.done("");
  const Json j = Json::parse(out.str());
  c.expect(j["E"] == Json::parse("[[1,0,0,0],[-1,1,-1,0],[0,0,1,0],[0,0,-1,1]]"), "E");
  c.expect(j["E_inverse"] == Json::parse("[[1,0,0,0],[1,1,1,0],[0,0,1,0],[0,0,1,1]]"), "E^-1");
  c.expect(j["VtE"] == Json::parse("[[0,1,0,0],[0,1,-1,0],[-1,1,0,0],[0,0,0,-1]]"), "V^t E");
  c.expect(j["C"] == Json::parse("[[1,0,-1,0],[1,0,0,0],[1,-1,0,0],[0,0,0,-1]]"), "C");
  c.expect(j["lifted_rows"] == Json::parse("[[0,0,1,1,1],[0,0,1,0,0],[1,0,1,1,1],[1,1,1,1,0]]"), "lifted rows");
  c.expect(j["sum"] == Json::parse("[2,1,4,3,2]"), "sum");
  c.expect(j["ranking"] == "21543", "ranking");
  c.expect(j["rankings"] == Json::parse(R"(["21543","31542"])"), "alternative rankings");
  const Json edges = Json::parse(R"([{"index":1,"p":1,"q":4,"slope":1},{"index":2,"p":3,"q":4,"slope":-1},
                                     {"index":3,"p":1,"q":2,"slope":-1},{"index":4,"p":4,"q":5,"slope":-1}])");
  c.expect(j["tree"]["edges"] == edges, "tree edges");
  return c.done("E, E^-1, V^t E, C, lifts, sum (2,1,4,3,2), 21543/31542 and the tree via `bij to-tree --trace`");
}

Outcome cluster_counts() {
  Check c;
  std::size_t checked = 0;
  for (const auto& e : all_epsilons(2, 6)) {
    c.expect(enumerate_clusters(e).size() == kCatalan.at(e.size()), "epsilon " + e.to_string());
    ++checked;
  }
  return c.done(std::to_string(checked) + " epsilon vectors, n = 2..6");
}

Outcome bijection() {
  Check c;
  std::size_t pairs = 0;
  for (const auto& e : all_epsilons(2, 6)) {
    const auto trees = enumerate_trees(e);
    const auto clusters = enumerate_clusters(e);
    c.expect(trees.size() == clusters.size(), "sizes for " + e.to_string());
    std::set<MixedCobinaryTree> images;
    for (const auto& v : clusters) {
      const MixedCobinaryTree t = cluster_to_tree(v, e);
      images.insert(t);
      c.expect(tree_to_cluster(t) == v, "inverse at " + e.to_string());
      const IntMatrix paired = paired_cluster_matrix(t);
      c.expect(paired.transpose() * euler_matrix(e) * c_matrix(t) == IntMatrix::identity(paired.rows()), "V^t E C = I");
      c.expect(verify_corollary2(t, v), "pairing");
      ++pairs;
    }
    c.expect(images.size() == trees.size(), "surjectivity at " + e.to_string());
  }
  return c.done(std::to_string(pairs) + " pairs with V^t E C = I, n = 2..6");
}

Outcome region_partition() {
  Check c;
  SampleSource rng(3);
  std::map<SignSequence, std::vector<MixedCobinaryTree>> cache;
  for (int n : {4, 5, 6})
    for (int i = 0; i < 10000; ++i) {
      const SignSequence e = rng.epsilon(n);
      auto& trees = cache[e];
      if (trees.empty()) trees = enumerate_trees(e);
      const RegionPoint x = rng.distinct_point(n);
      int hits = 0;
      const MixedCobinaryTree* owner = nullptr;
      for (const auto& t : trees)
        if (region_contains(t, x)) {
          ++hits;
          owner = &t;
        }
      c.expect(hits == 1, "point in " + std::to_string(hits) + " regions");
      if (owner) c.expect(locate_tree(x, e) == *owner, "locate_tree");
    }
  return c.done("3 x 10^4 rational points, n = 4, 5, 6");
}

Outcome wall_stability() {
  Check c;
  std::size_t walls = 0;
  for (const auto& e : all_epsilons(2, 5))
    for (const auto& t : enumerate_trees(e))
      for (int k = 1; k < t.n(); ++k) {
        c.expect(wall_stability_point(t, k).second, "wall " + std::to_string(k) + " at " + e.to_string());
        ++walls;
      }
  return c.done(std::to_string(walls) + " walls");
}

Outcome line_domain() {
  Check c;
  const SignSequence line({1, -1, -1, 1});  // 1 -> 2 -> 3
  const Root beta{2, 4, 1};
  c.expect(euler_matrix(line) * beta.vector(3) == IntVector{-1, 0, 1}, "E beta");
  auto closed = [](const RationalVector& v) { return v[0] == v[2] && v[1] >= v[2]; };
  auto r = [](Int a, Int b = 1) { return Rational(a) / Rational(b); };
  const std::vector<RationalVector> boundary = {
      {r(0), r(0), r(0)},    {r(1), r(1), r(1)},          {r(-2), r(-2), r(-2)},      {r(3), r(5), r(3)},
      {r(3), r(2), r(3)},    {r(1, 2), r(1, 2), r(1, 2)}, {r(1, 2), r(1, 3), r(1, 2)}, {r(1, 2), r(2, 3), r(1, 2)},
      {r(2), r(1), r(1)},    {r(1), r(1), r(2)}};
  for (const auto& v : boundary) c.expect(stability_domain_contains(line, beta, v) == closed(v), "boundary case");
  SampleSource rng(4);
  for (int i = 0; i < 1000; ++i) {
    RationalVector v{rng.rational(20, 6), rng.rational(20, 6), rng.rational(20, 6)};
    if (i % 2 == 0) v[2] = v[0];  // half the samples on the hyperplane x = z
    c.expect(stability_domain_contains(line, beta, v) == closed(v), "random vector");
  }
  return c.done("10 boundary cases and 10^3 random vectors match {x = z, y >= z}");
}

Outcome property_suites() {
  Check c;
  for (const auto& e : all_epsilons(1, 5)) {
    const auto trees = enumerate_trees(e);
    const int n = e.size();
    std::set<MixedCobinaryTree> reached{initial_tree(e)};
    std::vector<MixedCobinaryTree> queue{initial_tree(e)};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int k = 1; k < n; ++k) {
        MixedCobinaryTree m = mutate(queue[i], k);
        if (reached.insert(m).second) queue.push_back(m);
      }
    c.expect(reached.size() == trees.size(), "mutation graph connected at " + e.to_string());

    for (const auto& t : trees) {
      for (int k = 1; k < n; ++k) c.expect(identical(mutate(mutate(t, k), k), t), "involution");
      if (n < 2) continue;
      const Int det = determinant(c_matrix(t));
      c.expect(det == 1 || det == -1, "det C");
      const IntMatrix b = exchange_matrix(t).principal();
      for (const auto& ek : t.edges())
        for (const auto& ej : t.edges()) {
          if (ek.index == ej.index) continue;
          const Int bkj = b(static_cast<std::size_t>(ek.index - 1), static_cast<std::size_t>(ej.index - 1));
          const Int sk = ek.slope, sj = ej.slope;
          if (ek.p != ej.p && ek.p != ej.q && ek.q != ej.p && ek.q != ej.q)
            c.expect(bkj == 0, "four distinct endpoints");
          else if (ek.p == ej.p || ek.q == ej.q)
            c.expect(bkj == sk, "shared endpoint");
          else if (ej.p == ek.q)
            c.expect(bkj == e.at(ek.q) * sj * sk, "left end of j is right end of k");
          else
            c.expect(bkj == -e.at(ek.p) * sj * sk, "right end of j is left end of k");
        }
    }
    if (n < 2) continue;
    const IntMatrix x = x_matrix(e);
    for (int p = 1; p < n; ++p)
      for (int q = 1; q < n; ++q) {
        const Int v = dot(gamma_vector(p, n), x * gamma_vector(q, n));
        const Int want = p < q ? e.at(q) : (p > q ? -e.at(p) : 0);
        c.expect(v == want, "gamma table at (" + std::to_string(p) + "," + std::to_string(q) + ")");
      }
  }
  return c.done("involution, connectivity, det C = +-1, gamma table (p, q < n; gamma_n = 0 makes index n vanish), "
                "edge-pair sign laws; n <= 5");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"tree counts are Catalan", catalan_counts},
      {"permutations partition S_n and round-trip", permutation_partition},
      {"pi(T) of the region x2 > x1 > x3 < x4", region_permutations},
      {"tree mutation equals FZ mutation of the exchange matrix", exchange_mutation},
      {"mutation at edge 3 of the five-node example", mutation_golden},
      {"cluster-to-tree trace through the CLI", cli_trace},
      {"cluster counts are Catalan", cluster_counts},
      {"clusters and trees in bijection with V^t E C = I", bijection},
      {"random points lie in exactly one open region", region_partition},
      {"wall points satisfy the stability conditions", wall_stability},
      {"stability domain of (0,1,1) on 1 -> 2 -> 3", line_domain},
      {"mutation and exchange-matrix property suites", property_suites},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.ok ? 0 : 1;
    std::printf("%s criterion %2zu: %s -- %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%s: %zu/%zu criteria passed\n", failures == 0 ? "ACCEPTED" : "REJECTED", criteria.size() - static_cast<std::size_t>(failures),
              criteria.size());
  return failures == 0 ? 0 : 1;
}

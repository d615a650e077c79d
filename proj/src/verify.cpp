#include "mct/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mct/correspondence.hpp"
#include "mct/error.hpp"
#include "mct/exchange.hpp"
#include "mct/quiver.hpp"
#include "mct/regions.hpp"

namespace mct {

Rational SampleSource::rational(Int magnitude, Int max_denominator) {
  const Int num = between(-magnitude, magnitude);
  const Int den = between(1, max_denominator);
  return Rational(num) / Rational(den);
}

SignSequence SampleSource::epsilon(int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int& x : s) x = below(2) == 0 ? -1 : 1;
  return SignSequence(std::move(s));
}

RationalVector SampleSource::distinct_point(int n) {
  for (;;) {
    RationalVector x;
    for (int i = 0; i < n; ++i) x.push_back(rational(1000000, 1000));
    std::set<Rational> seen(x.begin(), x.end());
    if (static_cast<int>(seen.size()) == n) return x;
  }
}

bool VerifyReport::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok; });
}

namespace {

std::string ok_word(bool ok) { return ok ? "ok" : "fail"; }

// Failures inside a check count as a failed suite rather than aborting the run.
template <class F>
SuiteResult suite(std::string name, F&& body) {
  SuiteResult r{std::move(name), false, ""};
  try {
    std::ostringstream detail;
    r.ok = body(detail);
    r.detail = detail.str();
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

bool theorem2_holds(const std::vector<MixedCobinaryTree>& trees) {
  for (const auto& t : trees)
    for (int k = 1; k < t.n(); ++k)
      if (exchange_matrix(mutate(t, k)) != fz_mutate(exchange_matrix(t), k)) return false;
  return true;
}

bool bijection_holds(const SignSequence& eps, std::size_t& cluster_count) {
  const auto trees = enumerate_trees(eps);
  const auto clusters = enumerate_clusters(eps);
  cluster_count = clusters.size();
  if (clusters.size() != trees.size()) return false;
  std::set<std::vector<int>> images;
  for (const auto& v : clusters) {
    const MixedCobinaryTree t = cluster_to_tree(v, eps);
    if (!verify_corollary2(t, v) || tree_to_cluster(t) != v) return false;
    images.insert(t.canonical_key());
  }
  return images.size() == trees.size();
}

std::vector<SignSequence> sweep(int n_max) {
  std::vector<SignSequence> out;
  for (int n = 2; n <= n_max; ++n)
    for (auto& e : SignSequence::all(n)) out.push_back(e);
  return out;
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  const SignSequence& eps = options.epsilon;
  const int n = eps.size();
  if (n < 2) fail(ErrorKind::InvalidInput, "verify needs epsilon of length >= 2");
  if (options.n_max < 2 || options.n_max > 7) fail(ErrorKind::InvalidInput, "--n-max must lie in 2..7");
  if (options.samples < 0) fail(ErrorKind::InvalidInput, "--samples must be nonnegative");

  const auto trees = enumerate_trees(eps);
  VerifyReport report;
  std::size_t cluster_count = 0;
  bool bijection_ok = false;
  bool theorem2_ok = false;

  report.suites.push_back(suite("bijection", [&](std::ostream& d) {
    bijection_ok = bijection_holds(eps, cluster_count);
    d << "clusters=" << cluster_count << " trees=" << trees.size();
    return bijection_ok;
  }));
  report.suites.push_back(suite("theorem2", [&](std::ostream& d) {
    theorem2_ok = theorem2_holds(trees);
    d << trees.size() * static_cast<std::size_t>(n - 1) << " mutations";
    return theorem2_ok;
  }));
  report.suites.push_back(suite("catalan", [&](std::ostream& d) {
    d << "C_" << n << "=" << catalan(n);
    return trees.size() == catalan(n);
  }));
  report.suites.push_back(suite("permutations", [&](std::ostream& d) {
    std::size_t total = 0;
    for (const auto& t : trees) {
      const auto perms = permutations_of(t);
      total += perms.size();
      for (const auto& s : perms)
        if (!(tree_from_permutation(s, eps) == t)) return false;
    }
    d << "sum |pi(T)| = " << total;
    return total == all_permutations(n).size();
  }));
  report.suites.push_back(suite("involution", [&](std::ostream&) {
    for (const auto& t : trees)
      for (int k = 1; k < n; ++k)
        if (!identical(mutate(mutate(t, k), k), t)) return false;
    return true;
  }));
  report.suites.push_back(suite("connected", [&](std::ostream& d) {
    std::set<MixedCobinaryTree> seen{initial_tree(eps)};
    std::vector<MixedCobinaryTree> frontier{initial_tree(eps)};
    while (!frontier.empty()) {
      const MixedCobinaryTree t = frontier.back();
      frontier.pop_back();
      for (int k = 1; k < n; ++k) {
        MixedCobinaryTree u = mutate(t, k);
        if (seen.insert(u).second) frontier.push_back(std::move(u));
      }
    }
    d << seen.size() << " reached";
    return seen.size() == trees.size();
  }));
  report.suites.push_back(suite("det-c", [&](std::ostream&) {
    for (const auto& t : trees) {
      const Int det = determinant(c_matrix(t));
      if (det != 1 && det != -1) return false;
    }
    return true;
  }));
  report.suites.push_back(suite("walls", [&](std::ostream&) {
    for (const auto& t : trees)
      for (int k = 1; k < n; ++k)
        if (!wall_stability_point(t, k).second) return false;
    return true;
  }));
  report.suites.push_back(suite("partition", [&](std::ostream& d) {
    SampleSource rng(options.seed);
    for (int s = 0; s < options.samples; ++s) {
      const RationalVector x = rng.distinct_point(n);
      int hits = 0;
      for (const auto& t : trees) hits += region_contains(t, x) ? 1 : 0;
      if (hits != 1 || !region_contains(locate_tree(x, eps), x)) return false;
    }
    d << options.samples << " points, seed " << options.seed;
    return true;
  }));
  report.suites.push_back(suite("sweep", [&](std::ostream& d) {
    const auto all = sweep(options.n_max);
    for (const auto& e : all) {
      std::size_t clusters = 0;
      const auto ts = enumerate_trees(e);
      if (ts.size() != catalan(e.size()) || !theorem2_holds(ts) || !bijection_holds(e, clusters)) {
        d << "failed at epsilon=" << e.to_string();
        return false;
      }
    }
    d << all.size() << " epsilon vectors with n<=" << options.n_max;
    return true;
  }));

  std::sort(report.suites.begin(), report.suites.end(),
            [](const SuiteResult& a, const SuiteResult& b) { return a.name < b.name; });
  std::ostringstream summary;
  summary << "clusters=" << cluster_count << " trees=" << trees.size() << " bijection=" << ok_word(bijection_ok)
          << " theorem2=" << ok_word(theorem2_ok);
  report.summary = summary.str();
  return report;
}

}  // namespace mct

#include "mct/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "mct/correspondence.hpp"
#include "mct/error.hpp"
#include "mct/exchange.hpp"
#include "mct/json_io.hpp"
#include "mct/quiver.hpp"
#include "mct/regions.hpp"
#include "mct/verify.hpp"

namespace mct::cli {

namespace {

using json::Json;

bool flat(const Json& j) {
  if (j.is_array()) return std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); });
  if (j.is_object())
    return j.size() <= 4 && std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); });
  return true;
}

// Indented like dump(2), but arrays and small objects of scalars stay on one line.
void write(std::ostream& out, const Json& j, int depth) {
  if (flat(j)) {
    out << j.dump();
    return;
  }
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const bool object = j.is_object();
  out << (object ? '{' : '[') << '\n';
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    out << pad;
    if (object) out << Json(it.key()).dump() << ": ";
    write(out, it.value(), depth + 1);
    out << (i + 1 < j.size() ? ",\n" : "\n");
  }
  out << std::string(static_cast<std::size_t>(2 * depth), ' ') << (object ? '}' : ']');
}

void emit(std::ostream& out, const Json& j) {
  write(out, j, 0);
  out << '\n';
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  err << j.dump() << '\n';
}

// The quiver only sees epsilon_2 .. epsilon_{n-1}.
Json ignored_positions(const SignSequence& eps) {
  Json out = Json::array();
  if (eps.size() >= 1) out.push_back(1);
  if (eps.size() >= 2) out.push_back(eps.size());
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("COBINARY_SEED")) {
    try {
      std::size_t used = 0;
      const std::string text(env);
      const auto value = std::stoull(text, &used);
      if (used == text.size()) return value;
    } catch (const std::exception&) {
    }
    fail(ErrorKind::InvalidInput, "COBINARY_SEED must be an unsigned integer");
  }
  return 0;
}

struct Options {
  std::string epsilon;
  std::string sigma;
  std::string tree;
  std::string btilde;
  std::string cluster;
  std::string point;
  std::string seq;
  int k = 0;
  bool trace = false;
  int n_max = 5;
  int samples = 1000;
  std::uint64_t seed = 0;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed cobinary trees, clusters of type A quivers, and exchange matrices", "cobinary"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto add_epsilon = [&](CLI::App* cmd) {
    cmd->add_option("--epsilon", o.epsilon, "sign vector, e.g. -1,1,-1")->required()->allow_extra_args(false);
  };
  auto add_tree = [&](CLI::App* cmd) { cmd->add_option("--tree", o.tree, "tree JSON (file or inline)")->required(); };
  auto add_k = [&](CLI::App* cmd) { cmd->add_option("--k", o.k, "edge or column index (1-based)")->required(); };

  auto* trees = app.add_subcommand("trees", "enumerate, build and mutate trees");
  trees->require_subcommand(1);
  {
    auto* c = trees->add_subcommand("enumerate", "all trees for an epsilon vector, canonical order");
    add_epsilon(c);
    c->callback([&] {
      action = [&] {
        Json list = Json::array();
        for (const auto& t : enumerate_trees(json::parse_epsilon(o.epsilon))) list.push_back(json::to_json(t));
        emit(out, list);
        return kSuccess;
      };
    });
  }
  {
    auto* c = trees->add_subcommand("from-perm", "the tree realized by a height permutation");
    c->add_option("--sigma", o.sigma, "heights, e.g. 2,1,5,4,3")->required();
    add_epsilon(c);
    c->callback([&] {
      action = [&] {
        std::vector<int> sigma = json::parse_csv_ints(o.sigma);
        emit(out, json::to_json(tree_from_permutation(Permutation(std::move(sigma)), json::parse_epsilon(o.epsilon))));
        return kSuccess;
      };
    });
  }
  {
    auto* c = trees->add_subcommand("perms", "all permutations realizing a tree");
    add_tree(c);
    c->callback([&] {
      action = [&] {
        Json list = Json::array();
        for (const auto& s : permutations_of(json::tree_from_json(json::load_payload(o.tree)))) list.push_back(json::to_json(s));
        emit(out, list);
        return kSuccess;
      };
    });
  }
  {
    auto* c = trees->add_subcommand("mutate", "mutate at --k, then at each index of --seq");
    add_tree(c);
    add_k(c);
    c->add_option("--seq", o.seq, "further indices, e.g. 2,1,3");
    c->callback([&] {
      action = [&] {
        std::vector<int> ks{o.k};
        if (!o.seq.empty())
          for (int k : json::parse_csv_ints(o.seq)) ks.push_back(k);
        emit(out, json::to_json(mutation_sequence(json::tree_from_json(json::load_payload(o.tree)), ks)));
        return kSuccess;
      };
    });
  }
  {
    auto* c = trees->add_subcommand("locate", "the tree whose open region contains a point");
    c->add_option("--point", o.point, "coordinates, e.g. 2,1,5/2,4,3")->required();
    add_epsilon(c);
    c->callback([&] {
      action = [&] {
        emit(out, json::to_json(locate_tree(json::parse_csv_point(o.point), json::parse_epsilon(o.epsilon))));
        return kSuccess;
      };
    });
  }

  auto* matrix = app.add_subcommand("matrix", "exchange matrices");
  matrix->require_subcommand(1);
  {
    auto* c = matrix->add_subcommand("exchange", "[C^t X C; C] for a tree");
    add_tree(c);
    c->callback([&] {
      action = [&] {
        emit(out, json::to_json(exchange_matrix(json::tree_from_json(json::load_payload(o.tree)))));
        return kSuccess;
      };
    });
  }
  {
    auto* c = matrix->add_subcommand("fz-mutate", "Fomin-Zelevinsky mutation of {\"B\", \"C\"}");
    c->add_option("--btilde", o.btilde, "exchange matrix JSON (file or inline)")->required();
    add_k(c);
    c->callback([&] {
      action = [&] {
        emit(out, json::to_json(fz_mutate(json::exchange_from_json(json::load_payload(o.btilde)), o.k)));
        return kSuccess;
      };
    });
  }

  auto* clusters = app.add_subcommand("clusters", "clusters of almost positive roots");
  clusters->require_subcommand(1);
  {
    auto* c = clusters->add_subcommand("enumerate", "all clusters, columns sorted");
    add_epsilon(c);
    c->callback([&] {
      action = [&] {
        const SignSequence eps = json::parse_epsilon(o.epsilon);
        Json list = Json::array();
        for (const auto& v : enumerate_clusters(eps)) list.push_back(json::to_json(v));
        Json j;
        j["ignored_epsilon"] = ignored_positions(eps);
        j["count"] = list.size();
        j["clusters"] = list;
        emit(out, j);
        return kSuccess;
      };
    });
  }
  {
    auto* c = clusters->add_subcommand("c-matrix", "classical c-matrix (V^t E)^{-1}, columns in the given order");
    c->add_option("--cluster", o.cluster, "cluster as a list of columns (file or inline)")->required();
    add_epsilon(c);
    c->callback([&] {
      action = [&] {
        const SignSequence eps = json::parse_epsilon(o.epsilon);
        const IntMatrix v = json::columns_from_json(json::load_payload(o.cluster));
        ClusterMatrix::from_matrix(v, eps);
        Json j;
        j["ignored_epsilon"] = ignored_positions(eps);
        j["c_matrix"] = json::columns_json(classical_c_matrix(v, eps));
        emit(out, j);
        return kSuccess;
      };
    });
  }

  auto* bij = app.add_subcommand("bij", "the cluster / tree bijection");
  bij->require_subcommand(1);
  {
    auto* c = bij->add_subcommand("to-tree", "tree of a cluster; edge j pairs with column j");
    c->add_option("--cluster", o.cluster, "cluster as a list of columns (file or inline)")->required();
    add_epsilon(c);
    c->add_flag("--trace", o.trace, "also print every intermediate matrix");
    c->callback([&] {
      action = [&] {
        const SignSequence eps = json::parse_epsilon(o.epsilon);
        const ClusterTrace t = trace_cluster_to_tree(json::columns_from_json(json::load_payload(o.cluster)), eps);
        Json j;
        j["ignored_epsilon"] = ignored_positions(eps);
        if (o.trace) {
          j["E"] = json::rows_json(t.euler);
          j["E_inverse"] = json::rows_json(t.euler_inverse);
          j["VtE"] = json::rows_json(t.vte);
          j["C"] = json::rows_json(t.c_matrix);
          j["lifted_rows"] = json::rows_json(t.lifted_display);
          j["lifted_rows_x1_zero"] = json::rows_json(t.lifted);
          j["sum"] = json::vector_json(t.display_sum);
          j["ranking"] = t.ranking.to_string();
          Json alts = Json::array();
          for (const auto& s : t.tie_break_rankings) alts.push_back(s.to_string());
          j["rankings"] = alts;
        }
        j["tree"] = json::to_json(t.tree);
        emit(out, j);
        return kSuccess;
      };
    });
  }
  {
    auto* c = bij->add_subcommand("to-cluster", "cluster of a tree");
    add_tree(c);
    c->callback([&] {
      action = [&] {
        const MixedCobinaryTree t = json::tree_from_json(json::load_payload(o.tree));
        Json j;
        j["ignored_epsilon"] = ignored_positions(t.epsilon());
        j["cluster"] = json::to_json(tree_to_cluster(t));
        j["paired_columns"] = json::columns_json(paired_cluster_matrix(t));
        emit(out, j);
        return kSuccess;
      };
    });
  }
  {
    auto* c = bij->add_subcommand("report", "every cluster with its tree and c-matrix");
    add_epsilon(c);
    c->callback([&] {
      action = [&] {
        Json list = Json::array();
        bool all_ok = true;
        for (const auto& e : bijection_report(json::parse_epsilon(o.epsilon))) {
          Json j;
          j["tree"] = json::to_json(e.tree);
          j["cluster"] = json::to_json(e.cluster);
          j["c_matrix"] = json::columns_json(e.c_matrix);
          j["verified"] = e.verified;
          all_ok = all_ok && e.verified;
          list.push_back(j);
        }
        emit(out, list);
        return all_ok ? kSuccess : kVerificationFailed;
      };
    });
  }

  auto* verify = app.add_subcommand("verify", "self-checks");
  verify->require_subcommand(1);
  {
    auto* c = verify->add_subcommand("all", "run every verification suite");
    add_epsilon(c);
    c->add_option("--n-max", o.n_max, "largest n for the all-epsilon sweep (default 5)");
    c->add_option("--samples", o.samples, "random points for the partition check (default 1000)");
    auto* seed = c->add_option("--seed", o.seed, "sampling seed (default: $COBINARY_SEED, else 0)");
    c->callback([&, seed] {
      action = [&, seed] {
        VerifyOptions vo;
        vo.epsilon = json::parse_epsilon(o.epsilon);
        vo.n_max = o.n_max;
        vo.samples = o.samples;
        vo.seed = seed->count() > 0 ? o.seed : default_seed();
        const VerifyReport report = run_verification(vo);
        out << "epsilon=" << vo.epsilon.to_string() << " ignored=" << ignored_positions(vo.epsilon).dump() << '\n';
        out << report.summary << '\n';
        for (const auto& s : report.suites)
          out << (s.ok ? "PASS " : "FAIL ") << s.name << (s.detail.empty() ? "" : ": " + s.detail) << '\n';
        out << (report.ok() ? "result=ok" : "result=fail") << '\n';
        return report.ok() ? kSuccess : kVerificationFailed;
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "UsageError", e.what());
    return kUsageError;
  }
  if (!action) {
    emit_error(err, "UsageError", "no command given");
    return kUsageError;
  }
  try {
    return action();
  } catch (const MctError& e) {
    emit_error(err, std::string(to_string(e.kind())), e.what());
    return e.kind() == ErrorKind::VerificationFailed ? kVerificationFailed : kUsageError;
  } catch (const std::exception& e) {
    emit_error(err, "InternalError", e.what());
    return kUsageError;
  }
}

}  // namespace mct::cli

#include "mct/json_io.hpp"

#include <fstream>
#include <sstream>

#include "mct/error.hpp"

namespace mct::json {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorKind::InvalidInput, message);
}

Int int_from_json(const Json& j, const char* what) {
  require(j.is_number_integer(), std::string(what) + " must be an integer");
  return j.get<Int>();
}

IntVector int_list(const Json& j, const char* what) {
  require(j.is_array(), std::string(what) + " must be an array of integers");
  IntVector out;
  for (const auto& x : j) out.push_back(int_from_json(x, what));
  return out;
}

}  // namespace

Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (Int x : v) out.push_back(x);
  return out;
}

Json rows_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& r : m.row_list()) out.push_back(vector_json(r));
  return out;
}

Json columns_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& c : m.column_list()) out.push_back(vector_json(c));
  return out;
}

Json to_json(const MixedCobinaryTree& tree) {
  Json edges = Json::array();
  for (const auto& e : tree.edges()) edges.push_back({{"index", e.index}, {"p", e.p}, {"q", e.q}, {"slope", e.slope}});
  Json eps = Json::array();
  for (int s : tree.epsilon().entries()) eps.push_back(s);
  return {{"n", tree.n()}, {"epsilon", eps}, {"edges", edges}};
}

Json to_json(const Permutation& sigma) {
  Json out = Json::array();
  for (int v : sigma.values()) out.push_back(v);
  return out;
}

Json to_json(const ExchangeMatrix& btilde) {
  return {{"B", rows_json(btilde.principal())}, {"C", rows_json(btilde.bottom())}};
}

Json to_json(const ClusterMatrix& cluster) {
  Json out = Json::array();
  for (const auto& c : cluster.columns()) out.push_back(vector_json(c));
  return out;
}

Json to_json(const Rational& r) {
  std::ostringstream s;
  s << numerator(r) << '/' << denominator(r);
  return s.str();
}

Json to_json(const RegionPoint& x) {
  Json out = Json::array();
  for (const auto& r : x) out.push_back(to_json(r));
  return out;
}

MixedCobinaryTree tree_from_json(const Json& j) {
  require(j.is_object(), "a tree must be a JSON object");
  require(j.contains("epsilon") && j.contains("edges"), "a tree needs \"epsilon\" and \"edges\"");
  std::vector<int> eps;
  for (Int s : int_list(j.at("epsilon"), "epsilon")) eps.push_back(static_cast<int>(s));
  SignSequence epsilon(std::move(eps));
  if (j.contains("n")) require(int_from_json(j.at("n"), "n") == epsilon.size(), "\"n\" disagrees with epsilon");
  require(j.at("edges").is_array(), "\"edges\" must be an array");
  std::vector<SignedEdge> edges;
  for (const auto& e : j.at("edges")) {
    require(e.is_object() && e.contains("index") && e.contains("p") && e.contains("q") && e.contains("slope"),
            "each edge needs index, p, q and slope");
    edges.push_back({static_cast<int>(int_from_json(e.at("index"), "index")), static_cast<int>(int_from_json(e.at("p"), "p")),
                     static_cast<int>(int_from_json(e.at("q"), "q")), static_cast<int>(int_from_json(e.at("slope"), "slope"))});
  }
  return make_tree(epsilon, std::move(edges));
}

IntMatrix rows_from_json(const Json& j) {
  require(j.is_array(), "a matrix must be an array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(int_list(r, "matrix entry"));
  for (const auto& r : rows) require(r.size() == rows.front().size(), "matrix rows differ in length");
  return IntMatrix::from_rows(rows);
}

IntMatrix columns_from_json(const Json& j) {
  require(j.is_array(), "a matrix must be an array of columns");
  std::vector<IntVector> cols;
  for (const auto& c : j) cols.push_back(int_list(c, "matrix entry"));
  for (const auto& c : cols) require(c.size() == cols.front().size(), "matrix columns differ in length");
  return IntMatrix::from_columns(cols);
}

ExchangeMatrix exchange_from_json(const Json& j) {
  require(j.is_object() && j.contains("B") && j.contains("C"), "an exchange matrix needs \"B\" and \"C\"");
  return ExchangeMatrix(rows_from_json(j.at("B")), rows_from_json(j.at("C")));
}

namespace {

Rational rational_from_text(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) -> Int {
    require(!s.empty(), "malformed rational \"" + text + "\"");
    std::size_t used = 0;
    Int value = 0;
    try {
      value = std::stoll(s, &used);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidInput, "malformed rational \"" + text + "\"");
    }
    require(used == s.size(), "malformed rational \"" + text + "\"");
    return value;
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  require(den != 0, "zero denominator in \"" + text + "\"");
  return Rational(num) / Rational(den);
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<Int>());
  require(j.is_string(), "a rational must be an integer or a \"num/den\" string");
  return rational_from_text(j.get<std::string>());
}

RegionPoint point_from_json(const Json& j) {
  require(j.is_array(), "a point must be an array");
  RegionPoint x;
  for (const auto& r : j) x.push_back(rational_from_json(r));
  return x;
}

namespace {

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

}  // namespace

std::vector<int> parse_csv_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split_csv(text)) {
    const Rational r = rational_from_text(part);
    require(denominator(r) == 1, "expected an integer, got \"" + part + "\"");
    out.push_back(static_cast<int>(numerator(r)));
  }
  return out;
}

SignSequence parse_epsilon(const std::string& text) {
  return SignSequence(parse_csv_ints(text));
}

RegionPoint parse_csv_point(const std::string& text) {
  RegionPoint x;
  for (const auto& part : split_csv(text)) x.push_back(rational_from_text(part));
  return x;
}

Json load_payload(const std::string& argument) {
  const auto first = argument.find_first_not_of(" \t\r\n");
  std::string text = argument;
  if (first == std::string::npos || (argument[first] != '{' && argument[first] != '[')) {
    std::ifstream in(argument);
    if (!in) fail(ErrorKind::InvalidInput, "cannot read file \"" + argument + "\"");
    std::ostringstream s;
    s << in.rdbuf();
    text = s.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace mct::json

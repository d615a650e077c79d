#pragma once

// JSON encodings shared by the CLI and the tests. Rationals travel as
// "num/den" strings so that nothing is ever rounded.

#include <string>

#include <json.hpp>

#include "mct/correspondence.hpp"
#include "mct/exchange.hpp"
#include "mct/quiver.hpp"
#include "mct/regions.hpp"
#include "mct/tree.hpp"

namespace mct::json {

using Json = nlohmann::ordered_json;

Json to_json(const MixedCobinaryTree& tree);
Json to_json(const Permutation& sigma);
Json to_json(const ExchangeMatrix& btilde);
Json to_json(const ClusterMatrix& cluster);
Json to_json(const RegionPoint& x);
Json to_json(const Rational& r);
Json rows_json(const IntMatrix& m);
Json columns_json(const IntMatrix& m);
Json vector_json(const IntVector& v);

// {"epsilon": ..., "edges": [...]}; "n" is optional and checked when present.
MixedCobinaryTree tree_from_json(const Json& j);
ExchangeMatrix exchange_from_json(const Json& j);
// A list of columns in the given order.
IntMatrix columns_from_json(const Json& j);
IntMatrix rows_from_json(const Json& j);
Rational rational_from_json(const Json& j);
RegionPoint point_from_json(const Json& j);

// Comma separated integers such as "-1,1,-1".
std::vector<int> parse_csv_ints(const std::string& text);
SignSequence parse_epsilon(const std::string& text);
// Comma separated rationals such as "1/2,3,-4/5".
RegionPoint parse_csv_point(const std::string& text);

// An argument that is either inline JSON or the path of a JSON file.
Json load_payload(const std::string& argument);

}  // namespace mct::json

#pragma once

#include "psilab/betti.hpp"
#include "psilab/characters.hpp"
#include "psilab/polynomial.hpp"

#include <json.hpp>

#include <string>

namespace psilab::cli {

using json = nlohmann::json;

// {"n": 5, "terms": [{"coeff": "3", "exps": [2,0,1,0,0]}, ...]}
json to_json(const Polynomial& f);
json to_json(const DualElement& g);
Polynomial polynomial_from_json(const json& j);
DualElement dual_from_json(const json& j);

json to_json(const Partition& p);
Partition partition_from_json(const json& j);
// "[3,2,1]", "(3,2,1)" or "3,2,1"
Partition parse_partition(const std::string& text);

// [{"i":1,"j":3,"beta":33}, ...]
json to_json(const BettiTable& t);
json to_json(const SpechtDecomposition& d);

// Text syntax, or a JSON object when the content starts with '{'.
Polynomial load_polynomial(const std::string& path, std::optional<std::size_t> n = std::nullopt);

}  // namespace psilab::cli

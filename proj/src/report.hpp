#pragma once

#include <nlohmann/json.hpp>

#include "sqham/constructors.hpp"
#include "sqham/counterexamples.hpp"
#include "sqham/decomposition.hpp"
#include "sqham/hamconn.hpp"
#include "sqham/labelling.hpp"
#include "sqham/oracle.hpp"

namespace sqham::report {

using nlohmann::json;

json edges_json(const std::vector<Edge>& edges);
json input_summary(const Graph& g, const BlockDecomposition& d);
json decomposition_json(const Graph& g, const BlockDecomposition& d);
json recipe_json(const SubstitutionRecipe& r);
json ham_verdict_json(const HamVerdict& v);
json hc_verdict_json(const HcVerdict& v);
json witness_json(const Graph& g, const Witness& w);
json search_json(const Graph& g, const SearchResult& r);
json counterexample_json(const Counterexample& c);
std::string to_string(SearchStatus s);

}  // namespace sqham::report

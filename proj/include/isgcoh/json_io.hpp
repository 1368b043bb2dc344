#pragma once

#include "isgcoh/fixtures.hpp"
#include "isgcoh/tmodule.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>

namespace isgcoh {

struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& why) : std::runtime_error(why) {}
};

// {"elements": [names], "table": [[row-major ids]]}
FiniteInverseSemigroup semigroup_from_json(const nlohmann::json& j);
nlohmann::json semigroup_to_json(const FiniteInverseSemigroup& S);

// {"theta": {e: component identity name},
//  "components": {e: {"elements": [...], "table": [[...]]}},
//  "bonding": {"e>f": {a: image}},            (optional; needed only when the
//                                              lower component is nontrivial)
//  "eta": {t: {a: image}}}
// The coefficient semilattice is assembled from the components, keyed by the
// idempotents of T, with cross-component products transported along bonding.
fixtures::ModuleBundle module_from_json(const nlohmann::json& j,
                                        FiniteInverseSemigroup T);
nlohmann::json module_to_json(const TModule& M);

// {"degree": n, "entries": {"s1,s2,..": "a"}}; missing entries default to
// the component identity of the tuple
Cochain cochain_from_json(const nlohmann::json& j, const TModule& M);
nlohmann::json cochain_to_json(const Cochain& f);

nlohmann::json load_json_file(const std::string& path);

}  // namespace isgcoh

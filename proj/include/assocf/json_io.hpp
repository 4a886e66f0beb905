#pragma once

#include "json.hpp"

#include "assocf/magma.hpp"
#include "assocf/plmodel.hpp"
#include "assocf/rewrite.hpp"
#include "assocf/thompson.hpp"

namespace assocf {

using json = nlohmann::json;

json to_json(const BinaryTree& t);
json to_json(const FElement& g);
json to_json(const PLMap& f);
json to_json(const Law& law);
json to_json(const Magma& m);
json to_json(const AbelianImage& a);
json to_json(const EventualResult& r);
json to_json(const AssocStatus& s, const Magma& m);
json to_json(const Derivation& d);
json to_json(const EventualDerivation& r);

/// Inverses of the above; throw ParseError or json::exception on bad input.
BinaryTree tree_from_json(const json& j);
FElement element_from_json(const json& j);
PLMap plmap_from_json(const json& j);
Law law_from_json(const json& j);
Magma magma_from_json(const json& j);
AbelianImage abelian_from_json(const json& j);

}  // namespace assocf

#pragma once

#include <string>

#include <json.hpp>

#include "goldman/bv_hochschild.hpp"
#include "goldman/goldman.hpp"
#include "goldman/surface_group.hpp"

namespace goldman {

// Insertion-ordered JSON so emitted documents keep the documented field order.
using Json = nlohmann::ordered_json;

// Class token: "(p,q)" on the torus, the canonical word otherwise ("" is the
// trivial class). token_to_class accepts the same forms; genus 1 additionally
// accepts plain words in a1/b1, which are abelianized.
std::string class_to_token(const LoopClass& c);
LoopClass token_to_class(const std::string& text, int genus);

// {"genus": g, "terms": [{"coeff": "p/q", "class": token}, ...]},
// terms sorted by class.
Json formal_sum_to_json(const FormalSum& s);
FormalSum formal_sum_from_json(const Json& j);

// {"genus": g, "h0": "p/q", "h1": {"alpha": ["p/q" x 2g], "loops": FormalSum},
//  "h2": FormalSum}. The h1 loop part must carry a zero coefficient on the
// trivial class; anything else is rejected.
Json bv_element_to_json(const BVElement& e);
BVElement bv_element_from_json(const Json& j);

Json axiom_report_to_json(const AxiomReport& r);
Json sign_search_to_json(const SignSearchResult& r);

// "(+,+,-,+)" or the compact "++-+".
SignConfig parse_sign_config(const std::string& text);

}  // namespace goldman

#pragma once

// Group expressions ("Z^2 + Z/4 + Z/6") and the JSON forms of matrices,
// groups, morphisms, extensions and Ext groups.
//
// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.

#include "abext/extcalc.hpp"
#include "abext/extension.hpp"
#include "abext/group.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace abext {

using Json = nlohmann::ordered_json;

// Grammar: term (+ term)*, term = Z^r | Z | Z/n (n >= 2), whitespace ignored.
// "0" denotes the trivial group. Throws ParseError with the offending
// position, or InvalidInput for Z/n with n <= 1.
FgGroup parse_group_expression(std::string_view text);

Json integer_to_json(const Integer &n);
Integer integer_from_json(const Json &j);

Json to_json(const IntMatrix &m);
IntMatrix matrix_from_json(const Json &j);

Json to_json(const FgGroup &g);
// Accepts the object form or a group expression string.
FgGroup group_from_json(const Json &j);

Json to_json(const Morphism &f);
Morphism morphism_from_json(const Json &j);

Json to_json(const Extension &e);
// Checks the stated A, B, C against the maps and validates exactness.
Extension extension_from_json(const Json &j);

Json to_json(const ExtGroup &g);
Json to_json(const ExtTSubgroup &g);
Json to_json(const ExtElement &x);
ExtElement ext_element_from_json(const Json &j);

} // namespace abext

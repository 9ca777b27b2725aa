#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "groupdet/group.hpp"
#include "groupdet/polynomial.hpp"
#include "groupdet/reptheory.hpp"

namespace groupdet::io {

using Json = nlohmann::ordered_json;

// {"order": n, "table": [[...]], "names": [...]}
Json group_to_json(const FiniteGroup& group);
// Throws ParseError on shape problems, MalformedTable / NotAGroup from
// validation.
GroupPtr group_from_json(const Json& j, const GroupLimits& limits = {});
GroupPtr read_group_file(const std::string& path, const GroupLimits& limits = {});

// List of {"exponents", "num", "den"} (rational) or {"exponents", "re", "im"}
// (complex) in graded-lex order.
Json polynomial_to_json(const RationalPolynomial& p);
Json polynomial_to_json(const ComplexPolynomial& p);
RationalPolynomial rational_polynomial_from_json(const Json& j, const GroupPtr& universe);
ComplexPolynomial complex_polynomial_from_json(const Json& j, const GroupPtr& universe);

// {"group", "order", "seed", "irreps": [{"degree", "matrices": [[[[re, im]...]...]...]}]}
// with one row-major matrix per element in index order.
Json irreps_to_json(const IrrepSet& irreps);
IrrepSet irreps_from_json(const Json& j, const GroupPtr& group);

// Generators of a permutation group as cycle strings, e.g. ["(1 2)", "(1 2 3)"].
Json permutations_to_json(const std::vector<Permutation>& generators);
std::vector<Permutation> permutations_from_json(const Json& j, int degree);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace groupdet::io

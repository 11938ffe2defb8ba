#pragma once

#include <istream>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "semihyp/algebra.hpp"
#include "semihyp/classifier.hpp"
#include "semihyp/rees.hpp"
#include "semihyp/semigroup.hpp"

namespace semihyp {

using json = nlohmann::json;

// Cayley table JSON: {"order": n, "names": [...]?, "table": [[...]],
// "zero": i?}; indices 0-based, zero re-verified against the table.
FiniteSemigroup semigroup_from_json(const json& j);
json semigroup_to_json(const FiniteSemigroup& s);

// Plain text: first line n, then n rows of n whitespace-separated indices.
FiniteSemigroup semigroup_from_text(std::istream& in);
std::string semigroup_to_text(const FiniteSemigroup& s);

/// Load from a file path (JSON sniffed by a leading '{') or a
/// "fixtures:<name>" pseudo-path.
FiniteSemigroup load_semigroup(const std::string& spec);

/// fixtures() plus the reference groups, addressable by name.
const std::map<std::string, FiniteSemigroup>& named_fixtures();

json sandwich_to_json(const SandwichMatrix& p);
SandwichMatrix sandwich_from_json(const json& j);

// Algebra dump: dim, labels, sparse triples (i, j, k, num, den) with exact
// integers serialized as decimal strings.
json algebra_to_json(const StructureConstantAlgebra& a);
json radical_to_json(const RadicalInfo& rad);
json verdict_to_json(const Verdict& v);
json block_to_json(const BlockType& b, const FiniteSemigroup& ambient);

}  // namespace semihyp

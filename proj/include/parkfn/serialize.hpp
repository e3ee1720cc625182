#ifndef PARKFN_SERIALIZE_HPP
#define PARKFN_SERIALIZE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "parkfn/core.hpp"

namespace parkfn {

// Display-ordered JSON so object keys keep insertion order
// ({"sigma":...,"k":...}); plain json sorts keys alphabetically.
using ojson = nlohmann::ordered_json;

// JSON encodings. Sequences are integer arrays; HLPair is
// {"sigma":[...],"k":[...]}; AdmissiblePair is {"k":[...],"l":[...]};
// BivariatePolynomial is [{"a":..,"b":..,"c":..}, ...] sorted by (a,b).
ojson to_json(const Permutation& p);
ojson to_json(const ParkingFunction& p);
ojson to_json(const HLPair& p);
ojson to_json(const AdmissiblePair& p);
ojson to_json(const BivariatePolynomial& p);
ojson to_json(const ShapeDescriptor& s);

// Parsers throw ParseError on shape/type mismatch and InvalidInputError when
// the values violate a domain invariant.
std::vector<int> int_sequence_from_json(const ojson& j);
Permutation permutation_from_json(const ojson& j);
ParkingFunction parking_function_from_json(const ojson& j);
HLPair hl_pair_from_json(const ojson& j);
AdmissiblePair admissible_pair_from_json(const ojson& j);
BivariatePolynomial polynomial_from_json(const ojson& j);

// Parses a JSON document from text (syntax errors become ParseError).
ojson parse_json_text(const std::string& text);

// Canonical text form for integer sequences: "[2,0,1]".
std::string render_sequence(const std::vector<int>& values);
std::vector<int> parse_sequence(const std::string& text);

// "c q^a t^b" monomials joined with " + ", graded order (total degree
// ascending, then t-degree ascending); bare coefficient for a=b=0.
// The zero polynomial renders as "0".
std::string polynomial_to_text(const BivariatePolynomial& p);

// Dense coefficient matrix, a-rows by b-columns, "a/b" corner header.
std::string polynomial_to_csv(const BivariatePolynomial& p);

// Canonical byte form used for digests and byte-identity comparisons.
std::string canonical_dump(const ojson& j);

// FNV-1a, 64-bit.
uint64_t fnv1a64(std::string_view bytes);

}  // namespace parkfn

#endif  // PARKFN_SERIALIZE_HPP

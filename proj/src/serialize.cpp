#include "parkfn/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

namespace parkfn {

namespace {

ojson sequence_json(const std::vector<int>& v) { return ojson(v); }

}  // namespace

ojson to_json(const Permutation& p) { return sequence_json(p.values()); }
ojson to_json(const ParkingFunction& p) { return sequence_json(p.values()); }

ojson to_json(const HLPair& p) {
  ojson j;
  j["sigma"] = sequence_json(p.sigma().values());
  j["k"] = sequence_json(p.k());
  return j;
}

ojson to_json(const AdmissiblePair& p) {
  ojson j;
  j["k"] = sequence_json(p.k());
  j["l"] = sequence_json(p.l());
  return j;
}

ojson to_json(const BivariatePolynomial& p) {
  ojson arr = ojson::array();
  for (const auto& [key, coeff] : p.coefficients()) {
    ojson term;
    term["a"] = key.first;
    term["b"] = key.second;
    term["c"] = coeff;
    arr.push_back(std::move(term));
  }
  return arr;
}

ojson to_json(const ShapeDescriptor& s) {
  ojson j;
  j["maj_value"] = s.maj_value;
  j["variant"] = variant_name(s.variant);
  j["params"] = sequence_json(s.params);
  return j;
}

std::vector<int> int_sequence_from_json(const ojson& j) {
  if (!j.is_array()) throw ParseError("expected a JSON array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_number_integer())
      throw ParseError("expected integer array entries");
    out.push_back(item.get<int>());
  }
  return out;
}

Permutation permutation_from_json(const ojson& j) {
  return Permutation(int_sequence_from_json(j));
}

ParkingFunction parking_function_from_json(const ojson& j) {
  return ParkingFunction(int_sequence_from_json(j));
}

namespace {

ojson require_key(const ojson& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

}  // namespace

HLPair hl_pair_from_json(const ojson& j) {
  return HLPair(permutation_from_json(require_key(j, "sigma")),
                int_sequence_from_json(require_key(j, "k")));
}

AdmissiblePair admissible_pair_from_json(const ojson& j) {
  return AdmissiblePair(int_sequence_from_json(require_key(j, "k")),
                        int_sequence_from_json(require_key(j, "l")));
}

BivariatePolynomial polynomial_from_json(const ojson& j) {
  if (!j.is_array()) throw ParseError("expected a JSON array of terms");
  BivariatePolynomial p;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("a") || !term.contains("b") ||
        !term.contains("c"))
      throw ParseError("expected term objects with keys a, b, c");
    if (!term["a"].is_number_integer() || !term["b"].is_number_integer() ||
        !term["c"].is_number_integer())
      throw ParseError("term exponents and coefficient must be integers");
    p.add(term["a"].get<int>(), term["b"].get<int>(),
          term["c"].get<long long>());
  }
  return p;
}

ojson parse_json_text(const std::string& text) {
  ojson j = ojson::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

std::string render_sequence(const std::vector<int>& values) {
  std::string out = "[";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  out += "]";
  return out;
}

std::vector<int> parse_sequence(const std::string& text) {
  ojson j = parse_json_text(text);
  return int_sequence_from_json(j);
}

std::string polynomial_to_text(const BivariatePolynomial& p) {
  if (p.empty()) return "0";
  // Graded order: total degree, then t-degree.
  std::vector<std::pair<std::pair<int, int>, long long>> terms;
  for (const auto& [key, coeff] : p.coefficients())
    terms.push_back({{key.first + key.second, key.second}, coeff});
  std::sort(terms.begin(), terms.end());
  std::string out;
  for (size_t pos = 0; pos < terms.size(); ++pos) {
    int b = terms[pos].first.second;
    int a = terms[pos].first.first - b;
    if (pos) out += " + ";
    out += std::to_string(terms[pos].second);
    if (a > 0) out += " q^" + std::to_string(a);
    if (b > 0) out += " t^" + std::to_string(b);
  }
  return out;
}

std::string polynomial_to_csv(const BivariatePolynomial& p) {
  int max_a = 0, max_b = 0;
  for (const auto& [key, coeff] : p.coefficients()) {
    max_a = std::max(max_a, key.first);
    max_b = std::max(max_b, key.second);
  }
  std::ostringstream out;
  out << "a/b";
  for (int b = 0; b <= max_b; ++b) out << "," << b;
  out << "\n";
  for (int a = 0; a <= max_a; ++a) {
    out << a;
    for (int b = 0; b <= max_b; ++b) out << "," << p.coeff(a, b);
    out << "\n";
  }
  return out.str();
}

std::string canonical_dump(const ojson& j) { return j.dump(); }

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace parkfn

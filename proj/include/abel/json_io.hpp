#pragma once

// JSON encoding of trigonometric polynomials: {"cos": [a0, a1, ...], "sin": [b1, ...]}.
// Exact coefficients are strings "p/q" (or "p"), binary64 coefficients are
// JSON numbers. A polynomial may not mix the two.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "abel/factorization.hpp"
#include "abel/trig_poly.hpp"

namespace abel {

using Json = nlohmann::json;

/// Malformed JSON text or a document that does not have the expected shape.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parses a whole document; the message carries the byte offset on failure.
Json parse_json(std::string_view text);

AnyTrigPoly trig_poly_from_json(const Json& j);

/// Requires exact coefficients; `what` names the field in error messages.
ExactTrigPoly exact_from_json(const Json& j, std::string_view what);

/// The member `key` of an object, or ParseError naming it.
const Json& member(const Json& obj, std::string_view key);

Json to_json(const ExactTrigPoly& p);
Json to_json(const FloatTrigPoly& p);
Json to_json(const AnyTrigPoly& p);
Json to_json(const Rational& q);
Json to_json(const ExactVector& v);
Json to_json(const LinearFactor<double>& f);

}  // namespace abel

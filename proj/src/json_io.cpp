#include "abel/json_io.hpp"

namespace abel {
namespace {

const Json& array_member(const Json& j, const char* key) {
  static const Json empty = Json::array();
  if (!j.contains(key)) return empty;
  const Json& a = j.at(key);
  if (!a.is_array()) throw ParseError(std::string("trigonometric polynomial: \"") + key + "\" must be an array");
  return a;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

const Json& member(const Json& obj, std::string_view key) {
  if (!obj.is_object()) throw ParseError("expected a JSON object");
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) throw ParseError("missing field \"" + std::string(key) + "\"");
  return *it;
}

AnyTrigPoly trig_poly_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("trigonometric polynomial must be an object {\"cos\": [...], \"sin\": [...]}");
  if (!j.contains("cos") && !j.contains("sin")) throw ParseError("trigonometric polynomial needs \"cos\" or \"sin\"");
  const Json& cos = array_member(j, "cos");
  const Json& sin = array_member(j, "sin");

  int strings = 0;
  int numbers = 0;
  for (const Json* arr : {&cos, &sin}) {
    for (const Json& v : *arr) {
      if (v.is_string()) {
        ++strings;
      } else if (v.is_number()) {
        ++numbers;
      } else {
        throw ParseError("coefficient must be a \"p/q\" string or a number, got " + v.dump());
      }
    }
  }
  if (strings > 0 && numbers > 0) throw FieldMismatchError();

  if (numbers > 0) {
    std::vector<double> a;
    std::vector<double> b;
    for (const Json& v : cos) a.push_back(v.get<double>());
    for (const Json& v : sin) b.push_back(v.get<double>());
    return FloatTrigPoly(std::move(a), std::move(b));
  }
  std::vector<Rational> a;
  std::vector<Rational> b;
  for (const Json& v : cos) a.push_back(parse_rational(v.get<std::string>()));
  for (const Json& v : sin) b.push_back(parse_rational(v.get<std::string>()));
  return ExactTrigPoly(std::move(a), std::move(b));
}

ExactTrigPoly exact_from_json(const Json& j, std::string_view what) {
  const AnyTrigPoly p = trig_poly_from_json(j);
  if (!p.is_exact()) {
    throw PreconditionError(std::string(what) + ": exact \"p/q\" string coefficients required, got binary64");
  }
  return p.exact();
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const ExactTrigPoly& p) {
  Json cos = Json::array();
  Json sin = Json::array();
  for (const auto& x : p.cos_coeffs()) cos.push_back(to_string(x));
  for (const auto& x : p.sin_coeffs()) sin.push_back(to_string(x));
  return {{"cos", cos}, {"sin", sin}};
}

Json to_json(const FloatTrigPoly& p) { return {{"cos", p.cos_coeffs()}, {"sin", p.sin_coeffs()}}; }

Json to_json(const AnyTrigPoly& p) { return p.is_exact() ? to_json(p.exact()) : to_json(p.as_float()); }

Json to_json(const ExactVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v[i]));
  return out;
}

Json to_json(const LinearFactor<double>& f) { return {{"a", f.a}, {"b", f.b}, {"c", f.c}}; }

}  // namespace abel

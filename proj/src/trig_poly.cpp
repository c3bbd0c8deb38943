#include "abel/trig_poly.hpp"

#include <string>

namespace abel {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  // Trim surrounding blanks; mpq_class rejects them.
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw PreconditionError("empty rational literal");
  s = s.substr(first, last - first + 1);
  if (s.front() == '+') s.erase(0, 1);

  const auto slash = s.find('/');
  auto valid_int = [](std::string_view d) {
    if (!d.empty() && d.front() == '-') d.remove_prefix(1);
    return !d.empty() && d.find_first_not_of("0123456789") == std::string_view::npos;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
    throw PreconditionError("malformed rational literal '" + std::string(text) + "' (expected \"p/q\")");
  }
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw PreconditionError("rational literal with zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

const ExactTrigPoly& AnyTrigPoly::exact() const {
  if (!is_exact()) throw PreconditionError("exact-rational coefficients required, got binary64");
  return std::get<ExactTrigPoly>(value_);
}

FloatTrigPoly AnyTrigPoly::as_float() const {
  return std::visit([](const auto& p) { return to_float(p); }, value_);
}

std::optional<int> AnyTrigPoly::degree() const {
  return std::visit([](const auto& p) { return p.degree(); }, value_);
}

AnyTrigPoly add(const AnyTrigPoly& p, const AnyTrigPoly& q) {
  if (p.is_exact() != q.is_exact()) throw FieldMismatchError();
  if (p.is_exact()) return AnyTrigPoly(std::get<ExactTrigPoly>(p.value_) + std::get<ExactTrigPoly>(q.value_));
  return AnyTrigPoly(std::get<FloatTrigPoly>(p.value_) + std::get<FloatTrigPoly>(q.value_));
}

AnyTrigPoly mul(const AnyTrigPoly& p, const AnyTrigPoly& q) {
  if (p.is_exact() != q.is_exact()) throw FieldMismatchError();
  if (p.is_exact()) return AnyTrigPoly(std::get<ExactTrigPoly>(p.value_) * std::get<ExactTrigPoly>(q.value_));
  return AnyTrigPoly(std::get<FloatTrigPoly>(p.value_) * std::get<FloatTrigPoly>(q.value_));
}

}  // namespace abel

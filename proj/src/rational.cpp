#include "coulomb/rational.hpp"

#include "coulomb/error.hpp"

namespace coulomb {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    if (!part.empty() && allow_sign && part.front() == '-') part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  std::string_view num = slash == std::string::npos ? std::string_view(s) : std::string_view(s).substr(0, slash);
  std::string_view den = slash == std::string::npos ? std::string_view("1") : std::string_view(s).substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) {
    throw ValidationError("not a rational number: '" + s + "'");
  }
  Integer d(std::string(den), 10);
  if (d == 0) throw ValidationError("zero denominator in '" + s + "'");
  Rational q(Integer(std::string(num), 10), d);
  q.canonicalize();
  return q;
}

}  // namespace coulomb

#include "conjlab/coefficient.hpp"

#include <cmath>

#include "conjlab/errors.hpp"

namespace conjlab {

std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid_integer = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-') {
    throw UsageError("bad rational '" + std::string(text) + "'");
  }
  const mpz_class numerator{std::string(num)};
  const mpz_class denominator{std::string(den)};
  if (sgn(denominator) == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

double Coefficient::modulus() const {
  if (is_real()) return std::abs(re.get_d());
  return std::sqrt(norm_squared().get_d());
}

}  // namespace conjlab

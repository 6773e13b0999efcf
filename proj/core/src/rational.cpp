#include "haantjes/rational.hpp"

#include <cctype>

namespace haantjes {

Rational Rational::from_string(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) throw Error("bad rational literal: '" + s + "'");
  if (i < s.size()) {
    if (s[i] != '/') throw Error("bad rational literal: '" + s + "'");
    ++i;
    std::size_t den_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++den_digits;
    if (den_digits == 0 || i != s.size())
      throw Error("bad rational literal: '" + s + "'");
  }
  mpq_class v(s, 10);
  if (v.get_den() == 0) throw DivisionByZeroError("rational literal with zero denominator");
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::pow(std::uint32_t k) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
  return Rational(mpq_class(num, den));
}

}  // namespace haantjes

#include "ladder/exact.hpp"

namespace ladder {

Integer factorial_int(long n) {
  if (n < 0) throw std::invalid_argument("factorial_int: negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial_int(long n, long k) {
  if (k < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational rat_frac(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rat_frac: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  auto digits_ok = [](const std::string& t, bool sign_ok) {
    if (t.empty()) return false;
    size_t i = 0;
    if (sign_ok && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw std::invalid_argument("rational_from_string: malformed rational '" + s + "'");
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
    throw std::invalid_argument("rational_from_string: malformed rational '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("rational_from_string: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

ExactComplex pow_int(const ExactComplex& x, int k) {
  if (k < 0) throw std::invalid_argument("pow_int: negative exponent");
  ExactComplex acc = ExactComplex::one();
  ExactComplex base = x;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::string exact_to_string(const ExactComplex& z) {
  if (z.im == 0) return rational_to_string(z.re);
  std::string s = rational_to_string(z.re);
  if (z.im > 0) s += "+";
  s += rational_to_string(z.im) + " i";
  return s;
}

}  // namespace ladder

#include "mixvol/rational.hpp"

#include <cctype>

namespace mixvol {

Rat parse_rat(const std::string& text) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("malformed rational: '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);  // mpz_set_str rejects a leading plus
  if (den[0] == '+') den.erase(0, 1);
  const Int num_int(num);
  const Int den_int(den);
  Rat q(num_int, den_int);
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int int_pow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (exp < 0) {
    if (sgn(base) == 0) throw std::invalid_argument("0 to a negative power");
    Rat inv(base.get_den(), base.get_num());
    inv.canonicalize();
    return rat_pow(inv, -exp);
  }
  Rat out(int_pow(base.get_num(), static_cast<unsigned long>(exp)),
          int_pow(base.get_den(), static_cast<unsigned long>(exp)));
  out.canonicalize();
  return out;
}

Int factorial(unsigned n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return Int(0);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rat pow2(long k) {
  Rat out(1);
  if (k >= 0)
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<unsigned long>(k));
  else
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<unsigned long>(-k));
  return out;
}

long exact_log2(const Rat& q) {
  if (sgn(q) <= 0) throw std::invalid_argument("log2 of a non-positive rational");
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  if (den == 1) {
    const auto bits = mpz_sizeinbase(num.get_mpz_t(), 2);
    if (mpz_scan1(num.get_mpz_t(), 0) != bits - 1)
      throw std::invalid_argument("not a power of two: " + rat_to_string(q));
    return static_cast<long>(bits - 1);
  }
  if (num != 1) throw std::invalid_argument("not a power of two: " + rat_to_string(q));
  return -exact_log2(Rat(den));
}

}  // namespace mixvol

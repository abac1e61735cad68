#include "mixvol/polynomial.hpp"

#include <sstream>

namespace mixvol {

SparsePolynomial SparsePolynomial::constant(Rat c) { return monomial(std::move(c), Rat(0)); }

SparsePolynomial SparsePolynomial::monomial(Rat coeff, Rat exponent) {
  SparsePolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

void SparsePolynomial::add_term(const Rat& exponent, const Rat& coeff) {
  if (sgn(exponent) < 0) throw std::invalid_argument("negative exponent");
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
  SparsePolynomial out(*this);
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
  SparsePolynomial out(*this);
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
  SparsePolynomial out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

bool SparsePolynomial::integer_exponents() const {
  for (const auto& [e, c] : terms_)
    if (e.get_den() != 1) return false;
  return true;
}

bool SparsePolynomial::nonneg_coefficients() const {
  if (!integer_exponents())
    throw std::invalid_argument("coefficient signs are only meaningful for integer exponents");
  for (const auto& [e, c] : terms_)
    if (sgn(c) < 0) return false;
  return true;
}

long SparsePolynomial::exponent_denominator_lcm() const {
  Int l(1);
  for (const auto& [e, c] : terms_)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den().get_mpz_t());
  if (!l.fits_slong_p()) throw std::invalid_argument("exponent denominators too large");
  return l.get_si();
}

SparsePolynomial SparsePolynomial::substitute_shift_power(long L) const {
  if (L < 1) throw std::invalid_argument("shift power needs L >= 1");
  SparsePolynomial out;
  for (const auto& [e, c] : terms_) {
    const Rat scaled = e * Rat(L);
    if (scaled.get_den() != 1)
      throw std::invalid_argument("L = " + std::to_string(L) +
                                  " does not clear the exponent " + rat_to_string(e));
    const Int power = scaled.get_num();
    if (!power.fits_ulong_p()) throw std::invalid_argument("exponent too large to expand");
    const unsigned long n = power.get_ui();
    for (unsigned long k = 0; k <= n; ++k) out.add_term(Rat(static_cast<long>(k)), c * Rat(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))));
  }
  return out;
}

Rat SparsePolynomial::eval_at_power(const Rat& base, long L) const {
  if (L < 1) throw std::invalid_argument("evaluation power needs L >= 1");
  Rat out(0);
  for (const auto& [e, c] : terms_) {
    const Rat scaled = e * Rat(L);
    if (scaled.get_den() != 1)
      throw std::invalid_argument("L does not clear the exponent " + rat_to_string(e));
    if (!scaled.get_num().fits_slong_p()) throw std::invalid_argument("exponent too large");
    out += c * rat_pow(base, scaled.get_num().get_si());
  }
  return out;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest exponent first reads like a polynomial.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rat& e = it->first;
    const Rat& c = it->second;
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    Rat abs_c = sgn(c) < 0 ? Rat(-c) : c;
    const bool unit = abs_c == 1 && sgn(e) != 0;
    if (!unit) out << rat_to_string(abs_c);
    if (sgn(e) != 0) {
      if (!unit) out << " ";
      out << "m";
      if (e != 1) out << "^" << rat_to_string(e);
    }
  }
  return out.str();
}

SparsePolynomial eval_objective(const Configuration& log_config, int ell) {
  if (log_config.scale() != Scale::logarithmic)
    throw std::invalid_argument("objectives are read off logarithmic configurations");
  if (log_config.n() != log_config.d())
    throw std::invalid_argument("objectives need configurations of d-tuples");
  if (ell < 1 || ell > log_config.n()) throw std::invalid_argument("prefix length out of range");
  SparsePolynomial out;
  for (const IndexPoint& p : log_config.delta().points()) {
    bool supported = true;
    for (int i = ell; i < p.n(); ++i)
      if (p[i] != 0) supported = false;
    if (!supported) continue;
    out.add_term(log_config.at(p), Rat(multinomial(p)));
  }
  return out;
}

bool certified_ge(const SparsePolynomial& f, const SparsePolynomial& g) {
  const SparsePolynomial h = f - g;
  if (h.is_zero()) return true;
  return h.substitute_shift_power(h.exponent_denominator_lcm()).nonneg_coefficients();
}

OrbitMax orbit_max_objective(const std::vector<Configuration>& members, int ell) {
  std::vector<SparsePolynomial> polys;
  polys.reserve(members.size());
  for (const Configuration& v : members) polys.push_back(eval_objective(v, ell));
  for (std::size_t i = 0; i < polys.size(); ++i) {
    bool wins = true;
    for (std::size_t j = 0; j < polys.size() && wins; ++j)
      if (!certified_ge(polys[i], polys[j])) wins = false;
    if (wins) return {polys[i], static_cast<int>(i)};
  }
  // Report sampled values so a genuinely incomparable orbit is diagnosable.
  std::ostringstream msg;
  msg << "no orbit member dominates the others for the prefix objective " << ell << ";";
  for (const SparsePolynomial& p : polys)
    msg << " value at m=8: " << rat_to_string(p.eval_at_power(Rat(2), 3));
  throw std::logic_error(msg.str());
}

}  // namespace mixvol

#include "mixvol/lp.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace mixvol {

std::string RowProvenance::key() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::family:
      out << "family " << (inequality ? inequality->to_string() : "?");
      break;
    case Kind::corner_nonneg:
      out << "corner_nonneg " << (point ? point->to_string() : "?");
      break;
    case Kind::nonneg:
      out << "nonneg " << (point ? point->to_string() : "?");
      break;
    case Kind::slice_upper:
      out << "slice_upper";
      break;
    case Kind::slice_lower:
      out << "slice_lower";
      break;
    case Kind::custom:
      out << "custom " << label;
      break;
  }
  return out.str();
}

LinearProgram::LinearProgram(int n, int d)
    : delta_(&delta_index(n, d)),
      objective_(static_cast<std::size_t>(delta_->size()), Rat(0)) {}

void LinearProgram::set_objective(const IndexPoint& p, Rat coeff) {
  objective_[static_cast<std::size_t>(delta_->position(p))] = std::move(coeff);
}

int LinearProgram::add_row(LpRow row) {
  rows_.push_back(std::move(row));
  return static_cast<int>(rows_.size()) - 1;
}

int LinearProgram::add_inequality(const LinearInequality& li, RowProvenance prov) {
  LpRow row;
  for (const auto& [p, c] : li.coeffs) row.coeffs.emplace_back(delta_->position(p), c);
  std::sort(row.coeffs.begin(), row.coeffs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  row.bound = li.constant;
  row.provenance = std::move(prov);
  return add_row(std::move(row));
}

void LinearProgram::add_equality_pair(const IndexPoint& p, const Rat& value) {
  const int pos = delta_->position(p);
  LpRow upper{{{pos, Rat(1)}}, value, {RowProvenance::Kind::slice_upper, {}, p, ""}};
  LpRow lower{{{pos, Rat(-1)}}, -value, {RowProvenance::Kind::slice_lower, {}, p, ""}};
  add_row(std::move(upper));
  add_row(std::move(lower));
}

namespace {

// Revised simplex on the row-combination system: find y >= 0 with
// sum_j y_j a_j = c minimizing sum_j y_j b_j. The basis is one column per
// coordinate of c, so its size is the number of index points, not the
// (much larger) number of rows; the optimal simplex multipliers are the
// primal optimum and the basic y values are the certificate.
//
// All state is integral: rows and costs are scaled to integers, and the
// basis is carried as M = det(B) * B^{-1} with integer-preserving
// (Sylvester-identity) pivot updates, so no rational normalization happens
// in the O(n^2) inner loop.
class Engine {
 public:
  explicit Engine(const LinearProgram& lp)
      : n_(lp.n_vars()), m_(static_cast<int>(lp.rows().size())), lp_(lp) {
    flip_.assign(static_cast<std::size_t>(n_), false);
    for (int i = 0; i < n_; ++i)
      if (sgn(lp.objective()[static_cast<std::size_t>(i)]) < 0)
        flip_[static_cast<std::size_t>(i)] = true;

    cols_.resize(static_cast<std::size_t>(m_));
    col_cost_.resize(static_cast<std::size_t>(m_));
    col_scale_.resize(static_cast<std::size_t>(m_));
    for (int j = 0; j < m_; ++j) {
      const LpRow& row = lp.rows()[static_cast<std::size_t>(j)];
      Int lcm(1);
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), row.bound.get_den().get_mpz_t());
      for (const auto& [i, v] : row.coeffs)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
      col_scale_[static_cast<std::size_t>(j)] = lcm;
      for (const auto& [i, v] : row.coeffs) {
        if (sgn(v) == 0) continue;
        Int entry = v.get_num() * (lcm / v.get_den());
        if (flip_[static_cast<std::size_t>(i)]) entry = -entry;
        cols_[static_cast<std::size_t>(j)].emplace_back(i, std::move(entry));
      }
      col_cost_[static_cast<std::size_t>(j)] =
          row.bound.get_num() * (lcm / row.bound.get_den());
    }

    sigma_ = 1;
    for (int i = 0; i < n_; ++i)
      mpz_lcm(sigma_.get_mpz_t(), sigma_.get_mpz_t(),
              lp.objective()[static_cast<std::size_t>(i)].get_den().get_mpz_t());
    rhs_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      const Rat& c = lp.objective()[static_cast<std::size_t>(i)];
      rhs_[static_cast<std::size_t>(i)] = c.get_num() * (sigma_ / c.get_den());
      if (flip_[static_cast<std::size_t>(i)])
        rhs_[static_cast<std::size_t>(i)] = -rhs_[static_cast<std::size_t>(i)];
    }
  }

  enum class DualOutcome { optimal, dual_infeasible, dual_unbounded };

  // Single-phase simplex under the composite objective (artificial mass,
  // real cost) ordered lexicographically: the exact equivalent of a
  // symbolic big-M. Artificials never re-enter, so no pivot is ever forced
  // on a negative element and the lexicographic ratio rule applies from
  // start to finish, which rules out cycling outright.
  DualOutcome run() {
    basis_.resize(static_cast<std::size_t>(n_));
    in_basis_.assign(static_cast<std::size_t>(m_), false);
    M_.assign(static_cast<std::size_t>(n_), std::vector<Int>(static_cast<std::size_t>(n_), Int(0)));
    q_ = 1;
    xhat_ = rhs_;
    for (int i = 0; i < n_; ++i) basis_[static_cast<std::size_t>(i)] = m_ + i;

    // Crash start: a unit singleton column with a feasible basic value
    // replaces the artificial of its row. The starting basis is then
    // diag(v_i) with v_i in {-1, +1}, so q = prod v_i, M = q diag(v_i),
    // and the rows of (xhat | M D) with column signs D = diag(v) are
    // lexicographically positive, as the ratio rule requires.
    std::vector<int> vsign(static_cast<std::size_t>(n_), 1);
    for (int j = 0; j < m_; ++j) {
      const auto& col = cols_[static_cast<std::size_t>(j)];
      if (col.size() != 1) continue;
      const auto& [i, v] = col.front();
      if (basis_[static_cast<std::size_t>(i)] < m_) continue;
      if (v != 1 && v != -1) continue;
      if (sgn(rhs_[static_cast<std::size_t>(i)]) != 0 &&
          sgn(rhs_[static_cast<std::size_t>(i)]) != sgn(v))
        continue;  // infeasible basic value
      basis_[static_cast<std::size_t>(i)] = j;
      in_basis_[static_cast<std::size_t>(j)] = true;
      vsign[static_cast<std::size_t>(i)] = v == 1 ? 1 : -1;
    }
    int qsign = 1;
    for (int i = 0; i < n_; ++i) qsign *= vsign[static_cast<std::size_t>(i)];
    q_ = qsign;
    for (int i = 0; i < n_; ++i) {
      const int scale = qsign * vsign[static_cast<std::size_t>(i)];
      M_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = scale;
      xhat_[static_cast<std::size_t>(i)] = Int(scale) * rhs_[static_cast<std::size_t>(i)];
    }
    lex_sign_ = vsign;

    const DualOutcome out = iterate();
    if (out != DualOutcome::optimal) return out;
    // The composite loop can stop with artificials still basic at zero
    // behind a positive artificial-layer reduced cost; their potentials
    // then mask real-layer infeasibility of the extracted point. Clean up
    // with real-layer pricing and pinned artificial exits.
    return cleanup();
  }

  LpResult extract() {
    LpResult res;
    res.status = LpStatus::optimal;
    res.dual.assign(static_cast<std::size_t>(m_), Rat(0));
    res.value = 0;
    const Rat sigma_rat{sigma_};
    for (int i = 0; i < n_; ++i) {
      const int b = basis_[static_cast<std::size_t>(i)];
      if (b >= m_) continue;
      // Engine multiplier for the scaled column; undo both scalings.
      Rat y_scaled(xhat_[static_cast<std::size_t>(i)], q_);
      y_scaled.canonicalize();
      Rat y = y_scaled * Rat(col_scale_[static_cast<std::size_t>(b)]) / sigma_rat;
      y.canonicalize();
      res.dual[static_cast<std::size_t>(b)] = y;
      res.value += y * lp_.rows()[static_cast<std::size_t>(b)].bound;
    }
    // Simplex multipliers of the real cost layer are the (flipped) primal
    // point; the sigma scale of the objective does not enter because the
    // potentials only certify b_j >= pi . a_j.
    const std::vector<Int> pi = potentials(false);
    res.primal.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      Rat x(pi[static_cast<std::size_t>(i)], q_);
      x.canonicalize();
      res.primal[static_cast<std::size_t>(i)] = flip_[static_cast<std::size_t>(i)] ? Rat(-x) : x;
    }
    return res;
  }

 private:
  // Artificial mass sum over the basis, as an exact rational.
  Rat artificial_mass() const {
    Int total(0);
    for (int i = 0; i < n_; ++i)
      if (basis_[static_cast<std::size_t>(i)] >= m_) total += xhat_[static_cast<std::size_t>(i)];
    Rat out(total, q_);
    out.canonicalize();
    return out;
  }

  // pi_hat = cost_B * M for one cost layer; true potentials are pi_hat / q.
  std::vector<Int> potentials(bool artificial_layer) const {
    std::vector<Int> pi(static_cast<std::size_t>(n_), Int(0));
    static const Int one(1);
    for (int i = 0; i < n_; ++i) {
      const int b = basis_[static_cast<std::size_t>(i)];
      const Int* cb = nullptr;
      if (artificial_layer) {
        if (b >= m_) cb = &one;
      } else {
        if (b < m_ && sgn(col_cost_[static_cast<std::size_t>(b)]) != 0)
          cb = &col_cost_[static_cast<std::size_t>(b)];
      }
      if (cb == nullptr) continue;
      const auto& row = M_[static_cast<std::size_t>(i)];
      for (int k = 0; k < n_; ++k)
        if (sgn(row[static_cast<std::size_t>(k)]) != 0)
          mpz_addmul(pi[static_cast<std::size_t>(k)].get_mpz_t(), cb->get_mpz_t(),
                     row[static_cast<std::size_t>(k)].get_mpz_t());
    }
    return pi;
  }

  std::vector<Int> direction(int column) const {
    std::vector<Int> what(static_cast<std::size_t>(n_), Int(0));
    for (const auto& [i, v] : cols_[static_cast<std::size_t>(column)]) {
      for (int r = 0; r < n_; ++r) {
        const Int& e = M_[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
        if (sgn(e) != 0)
          mpz_addmul(what[static_cast<std::size_t>(r)].get_mpz_t(), e.get_mpz_t(),
                     v.get_mpz_t());
      }
    }
    return what;
  }

  struct RatioResult {
    bool bounded = false;
    int leave = -1;
    Int num, den;  // blocking ratio num/den with den > 0
  };

  // Ratio test on xhat_i / what_i (the q scale cancels). Candidates need
  // w_i > 0, i.e. sgn(what_i) == sgn(q); ties are broken by the
  // lexicographic rule over the sign-adjusted rows of M, which rules out
  // cycling.
  RatioResult ratio_test(const std::vector<Int>& what) const {
    const int qsign = sgn(q_);
    auto scaled_w = [&](int i) {
      const Int& wi = what[static_cast<std::size_t>(i)];
      return qsign > 0 ? wi : Int(-wi);
    };
    auto lex_better = [&](int i, int j) {
      const Int ni = scaled_w(i);
      const Int nj = scaled_w(j);
      for (int k = 0; k < n_; ++k) {
        const Int& a = M_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        const Int& b = M_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        if (sgn(a) == 0 && sgn(b) == 0) continue;
        const int s = lex_sign_[static_cast<std::size_t>(k)] * qsign;
        Int lhs = a * nj;
        Int rhs_cmp = b * ni;
        if (s < 0) {
          lhs = -lhs;
          rhs_cmp = -rhs_cmp;
        }
        if (lhs != rhs_cmp) return lhs < rhs_cmp;
      }
      return false;  // identical rows cannot happen for distinct i, j
    };
    RatioResult res;
    for (int i = 0; i < n_; ++i) {
      const Int& wi = what[static_cast<std::size_t>(i)];
      if (sgn(wi) != qsign || sgn(wi) == 0) continue;
      Int cand_num = qsign > 0 ? xhat_[static_cast<std::size_t>(i)]
                               : Int(-xhat_[static_cast<std::size_t>(i)]);
      Int cand_den = scaled_w(i);
      bool better = false;
      if (!res.bounded) {
        better = true;
      } else {
        const Int lhs = cand_num * res.den;
        const Int rhs_cmp = res.num * cand_den;
        if (lhs < rhs_cmp)
          better = true;
        else if (lhs == rhs_cmp)
          better = lex_better(i, res.leave);
      }
      if (better) {
        res.bounded = true;
        res.leave = i;
        res.num = std::move(cand_num);
        res.den = std::move(cand_den);
      }
    }
    return res;
  }

  DualOutcome iterate() {
    const bool stats = std::getenv("MIXVOL_LP_STATS") != nullptr;
    long iterations = 0;
    constexpr std::size_t kShortlist = 8;
    while (true) {
      ++iterations;
      const std::vector<Int> pi_m = potentials(true);
      const std::vector<Int> pi_c = potentials(false);
      const int qsign = sgn(q_);

      // Pricing over composite reduced-cost pairs (artificial layer
      // first); keep a shortlist of the lexicographically most negative.
      struct Candidate {
        Int rm, rc;
        int column;
        bool operator<(const Candidate& o) const {
          if (rm != o.rm) return rm < o.rm;
          if (rc != o.rc) return rc < o.rc;
          return column < o.column;
        }
      };
      std::vector<Candidate> shortlist;
      for (int j = 0; j < m_; ++j) {
        if (in_basis_[static_cast<std::size_t>(j)]) continue;
        Int rm(0);
        Int rc = q_ * col_cost_[static_cast<std::size_t>(j)];
        for (const auto& [i, v] : cols_[static_cast<std::size_t>(j)]) {
          mpz_submul(rm.get_mpz_t(), pi_m[static_cast<std::size_t>(i)].get_mpz_t(),
                     v.get_mpz_t());
          mpz_submul(rc.get_mpz_t(), pi_c[static_cast<std::size_t>(i)].get_mpz_t(),
                     v.get_mpz_t());
        }
        if (qsign < 0) {
          rm = -rm;
          rc = -rc;
        }
        const int srm = sgn(rm);
        if (srm > 0 || (srm == 0 && sgn(rc) >= 0)) continue;  // pair not negative
        Candidate cand{std::move(rm), std::move(rc), j};
        if (shortlist.size() < kShortlist) {
          shortlist.push_back(std::move(cand));
          std::push_heap(shortlist.begin(), shortlist.end());
        } else if (cand < shortlist.front()) {
          std::pop_heap(shortlist.begin(), shortlist.end());
          shortlist.back() = std::move(cand);
          std::push_heap(shortlist.begin(), shortlist.end());
        }
      }
      if (shortlist.empty()) {
        if (stats)
          std::fprintf(stderr, "lp done after %ld iterations, mass %s\n", iterations,
                       rat_to_string(artificial_mass()).c_str());
        return sgn(artificial_mass()) > 0 ? DualOutcome::dual_infeasible : DualOutcome::optimal;
      }
      std::sort(shortlist.begin(), shortlist.end());
      // No feasibility-improving column left while artificial mass
      // remains: the row system cannot reproduce the objective.
      if (sgn(shortlist.front().rm) == 0 && sgn(artificial_mass()) > 0)
        return DualOutcome::dual_infeasible;

      // Among the shortlisted columns prefer the largest exact decrease
      // of the composite objective, |r| * theta compared layer by layer;
      // a strictly improving pivot escapes degenerate plateaus that the
      // most-negative rule alone would wander through.
      int entering = -1;
      std::vector<Int> what;
      RatioResult ratio;
      Int gm(0), gc(0), gden(1);
      for (Candidate& cand : shortlist) {
        std::vector<Int> wj = direction(cand.column);
        RatioResult rj = ratio_test(wj);
        if (!rj.bounded) {
          // A ray in the artificial layer is impossible: that mass is
          // bounded below by zero.
          if (sgn(cand.rm) != 0)
            throw std::logic_error("unbounded ray in the artificial cost layer");
          if (stats) std::fprintf(stderr, "lp unbounded after %ld iterations\n", iterations);
          return DualOutcome::dual_unbounded;
        }
        const bool first = entering < 0;
        Int cm = -cand.rm * rj.num;
        Int cc = -cand.rc * rj.num;
        bool better = first;
        if (!first && sgn(rj.num) != 0) {
          // compare (cm, cc)/rj.den against (gm, gc)/gden
          const Int lhs_m = cm * gden;
          const Int rhs_m = gm * rj.den;
          if (lhs_m != rhs_m) {
            better = lhs_m > rhs_m;
          } else {
            better = cc * gden > gc * rj.den;
          }
        }
        if (better) {
          entering = cand.column;
          what = std::move(wj);
          ratio = std::move(rj);
          gm = std::move(cm);
          gc = std::move(cc);
          gden = ratio.den;
        }
      }

      pivot(entering, ratio.leave, what);

      if (stats && iterations % 500 == 0) {
        std::size_t max_bits = mpz_sizeinbase(q_.get_mpz_t(), 2);
        for (const auto& row : M_)
          for (const Int& x : row)
            max_bits = std::max(max_bits, mpz_sizeinbase(x.get_mpz_t(), 2));
        std::fprintf(stderr, "lp iter %ld mass %s maxbits %zu\n", iterations,
                     rat_to_string(artificial_mass()).c_str(), max_bits);
      }
    }
  }

  // Final polishing: price the real cost layer alone under Bland's rule,
  // with remaining zero-valued artificials pinned (they block at ratio
  // zero whichever way their coefficient points, and each such exit is
  // permanent). Runs only after the artificial mass reached zero, and only
  // for the handful of iterations degenerate bases need.
  DualOutcome cleanup() {
    while (true) {
      const std::vector<Int> pi_c = potentials(false);
      const int qsign = sgn(q_);
      int entering = -1;
      for (int j = 0; j < m_; ++j) {
        if (in_basis_[static_cast<std::size_t>(j)]) continue;
        Int rc = q_ * col_cost_[static_cast<std::size_t>(j)];
        for (const auto& [i, v] : cols_[static_cast<std::size_t>(j)])
          mpz_submul(rc.get_mpz_t(), pi_c[static_cast<std::size_t>(i)].get_mpz_t(),
                     v.get_mpz_t());
        if (qsign < 0) rc = -rc;
        if (sgn(rc) < 0) {
          entering = j;
          break;  // Bland: least index
        }
      }
      if (entering < 0) return DualOutcome::optimal;

      const std::vector<Int> what = direction(entering);
      int leave = -1;
      bool leave_pinned = false;
      Int num(0), den(1);
      bool have = false;
      for (int i = 0; i < n_; ++i) {
        const Int& wi = what[static_cast<std::size_t>(i)];
        if (sgn(wi) == 0) continue;
        const bool artificial = basis_[static_cast<std::size_t>(i)] >= m_;
        const bool pinned = artificial && sgn(wi) != qsign;
        Int cand_num, cand_den;
        if (sgn(wi) == qsign) {
          cand_num = qsign > 0 ? xhat_[static_cast<std::size_t>(i)]
                               : Int(-xhat_[static_cast<std::size_t>(i)]);
          cand_den = qsign > 0 ? wi : Int(-wi);
        } else if (pinned) {
          if (sgn(xhat_[static_cast<std::size_t>(i)]) != 0)
            throw std::logic_error("pinned artificial has nonzero value");
          cand_num = 0;
          cand_den = 1;
        } else {
          continue;
        }
        bool better = false;
        if (!have) {
          better = true;
        } else {
          const Int lhs = cand_num * den;
          const Int rhs_cmp = num * cand_den;
          if (lhs < rhs_cmp) {
            better = true;
          } else if (lhs == rhs_cmp) {
            if (pinned != leave_pinned)
              better = pinned;
            else
              better = basis_[static_cast<std::size_t>(i)] <
                       basis_[static_cast<std::size_t>(leave)];
          }
        }
        if (better) {
          have = true;
          leave = i;
          leave_pinned = pinned;
          num = std::move(cand_num);
          den = std::move(cand_den);
        }
      }
      if (!have) return DualOutcome::dual_unbounded;
      pivot(entering, leave, what);
    }
  }

  // Sylvester-identity update of M, xhat and the scale q after the basis
  // change; all divisions are exact.
  void pivot(int entering, int leave, const std::vector<Int>& what) {
    const Int qold = q_;
    const Int& wr = what[static_cast<std::size_t>(leave)];
    auto& mr = M_[static_cast<std::size_t>(leave)];
    Int tmp;
    for (int i = 0; i < n_; ++i) {
      if (i == leave) continue;
      const Int& wi = what[static_cast<std::size_t>(i)];
      auto& mi = M_[static_cast<std::size_t>(i)];
      const bool wi_zero = sgn(wi) == 0;
      for (int k = 0; k < n_; ++k) {
        Int& entry = mi[static_cast<std::size_t>(k)];
        const Int& pivot_entry = mr[static_cast<std::size_t>(k)];
        if (wi_zero || sgn(pivot_entry) == 0) {
          if (sgn(entry) == 0) continue;
          mpz_mul(tmp.get_mpz_t(), wr.get_mpz_t(), entry.get_mpz_t());
        } else {
          mpz_mul(tmp.get_mpz_t(), wr.get_mpz_t(), entry.get_mpz_t());
          mpz_submul(tmp.get_mpz_t(), wi.get_mpz_t(), pivot_entry.get_mpz_t());
        }
        mpz_divexact(entry.get_mpz_t(), tmp.get_mpz_t(), qold.get_mpz_t());
      }
      Int& xi = xhat_[static_cast<std::size_t>(i)];
      if (!(sgn(xi) == 0 && (wi_zero || sgn(xhat_[static_cast<std::size_t>(leave)]) == 0))) {
        mpz_mul(tmp.get_mpz_t(), wr.get_mpz_t(), xi.get_mpz_t());
        if (!wi_zero)
          mpz_submul(tmp.get_mpz_t(), wi.get_mpz_t(),
                     xhat_[static_cast<std::size_t>(leave)].get_mpz_t());
        mpz_divexact(xi.get_mpz_t(), tmp.get_mpz_t(), qold.get_mpz_t());
      }
    }
    q_ = wr;
    const int old = basis_[static_cast<std::size_t>(leave)];
    if (old < m_) in_basis_[static_cast<std::size_t>(old)] = false;
    basis_[static_cast<std::size_t>(leave)] = entering;
    in_basis_[static_cast<std::size_t>(entering)] = true;
  }

  int n_, m_;
  const LinearProgram& lp_;
  std::vector<bool> flip_;
  std::vector<std::vector<std::pair<int, Int>>> cols_;  // scaled integer columns
  std::vector<Int> col_cost_;                           // scaled integer costs
  std::vector<Int> col_scale_;                          // per-column scale factors
  std::vector<Int> rhs_;                                // sigma * flipped objective
  Int sigma_;
  std::vector<int> basis_;
  std::vector<bool> in_basis_;
  std::vector<std::vector<Int>> M_;  // det(B) * B^{-1}
  std::vector<Int> xhat_;            // det(B) * basic values
  Int q_;                            // det(B), signed
  std::vector<int> lex_sign_;        // column signs for the lexicographic rule
};

void verify_optimal(const LinearProgram& lp, const LpResult& res) {
  // Multiplier identity sum_j y_j a_j = c, coordinate by coordinate.
  std::vector<Rat> combo(static_cast<std::size_t>(lp.n_vars()), Rat(0));
  Rat bound(0);
  for (std::size_t j = 0; j < lp.rows().size(); ++j) {
    const Rat& y = res.dual[j];
    if (sgn(y) < 0) throw std::logic_error("negative dual multiplier");
    if (sgn(y) == 0) continue;
    for (const auto& [i, v] : lp.rows()[j].coeffs) combo[static_cast<std::size_t>(i)] += y * v;
    bound += y * lp.rows()[j].bound;
  }
  for (int i = 0; i < lp.n_vars(); ++i)
    if (combo[static_cast<std::size_t>(i)] != lp.objective()[static_cast<std::size_t>(i)])
      throw std::logic_error("dual multipliers do not reproduce the objective");
  if (bound != res.value) throw std::logic_error("dual bound does not equal the optimum");
  // Primal feasibility and matching objective value.
  Rat primal_obj(0);
  for (int i = 0; i < lp.n_vars(); ++i)
    primal_obj += lp.objective()[static_cast<std::size_t>(i)] * res.primal[static_cast<std::size_t>(i)];
  if (primal_obj != res.value) throw std::logic_error("primal objective does not equal the optimum");
  for (const LpRow& row : lp.rows()) {
    Rat lhs(0);
    for (const auto& [i, v] : row.coeffs) lhs += v * res.primal[static_cast<std::size_t>(i)];
    if (lhs > row.bound) throw std::logic_error("optimal point violates a row");
  }
}

}  // namespace

LpResult solve(const LinearProgram& lp) {
  Engine engine(lp);
  const auto outcome = engine.run();
  if (outcome == Engine::DualOutcome::optimal) {
    LpResult res = engine.extract();
    verify_optimal(lp, res);
    return res;
  }
  if (outcome == Engine::DualOutcome::dual_unbounded) {
    LpResult res;
    res.status = LpStatus::infeasible;
    return res;
  }
  // Row combinations cannot reproduce the objective: the primal is
  // unbounded if feasible at all. A zero-objective probe separates the
  // two cases exactly.
  LinearProgram probe(lp.delta().n(), lp.delta().d());
  for (const LpRow& row : lp.rows()) probe.add_row(row);
  Engine probe_engine(probe);
  const auto probe_outcome = probe_engine.run();
  LpResult res;
  res.status = probe_outcome == Engine::DualOutcome::dual_unbounded ? LpStatus::infeasible
                                                                    : LpStatus::unbounded;
  return res;
}

bool verify_certificate(const DualCertificate& cert, const std::vector<LpRow>& system,
                        const DeltaIndex& delta) {
  std::map<std::string, const LpRow*> by_key;
  for (const LpRow& row : system) by_key.emplace(row.provenance.key(), &row);
  std::map<int, Rat> combo;
  Rat bound(0);
  for (const auto& [prov, weight] : cert.multipliers) {
    if (sgn(weight) < 0) return false;
    auto it = by_key.find(prov.key());
    if (it == by_key.end())
      throw std::invalid_argument("certificate cites an unknown row: " + prov.key());
    for (const auto& [i, v] : it->second->coeffs) combo[i] += weight * v;
    bound += weight * it->second->bound;
  }
  std::map<IndexPoint, Rat> derived;
  for (const auto& [i, v] : combo)
    if (sgn(v) != 0) derived.emplace(delta.point(i), v);
  return derived == cert.derived.coeffs && bound == cert.derived.constant;
}

namespace {

DualCertificate make_certificate(const LinearProgram& lp, const LpResult& res,
                                 const IndexPoint& target) {
  DualCertificate cert{target, res.value, {}, {}};
  std::map<IndexPoint, Rat> combo;
  for (std::size_t j = 0; j < lp.rows().size(); ++j) {
    if (sgn(res.dual[j]) == 0) continue;
    cert.multipliers.emplace_back(lp.rows()[j].provenance, res.dual[j]);
    for (const auto& [i, v] : lp.rows()[j].coeffs) combo[lp.delta().point(i)] += res.dual[j] * v;
  }
  for (auto it = combo.begin(); it != combo.end();)
    it = sgn(it->second) == 0 ? combo.erase(it) : std::next(it);
  cert.derived.coeffs = std::move(combo);
  cert.derived.constant = res.value;
  return cert;
}

}  // namespace

AfBoundResult max_over_af(int d, const IndexPoint& target) {
  if (target.n() != d || target.degree() != d)
    throw std::invalid_argument("target must lie in Delta_{d,d}");
  LinearProgram lp(d, d);
  lp.set_objective(target, Rat(1));
  const HPolyhedron cone = build_af_cone(d);
  for (int i = 0; i < d; ++i)
    lp.add_inequality(cone.inequalities[static_cast<std::size_t>(i)],
                      {RowProvenance::Kind::corner_nonneg, {}, IndexPoint::corner(d, i), ""});
  const auto af = gen_af(d);
  for (std::size_t k = 0; k < af.size(); ++k)
    lp.add_inequality(cone.inequalities[static_cast<std::size_t>(d) + k],
                      {RowProvenance::Kind::family, af[k].provenance(), {}, ""});
  lp.add_equality_pair(IndexPoint::ones(d), Rat(1));

  LpResult res = solve(lp);
  if (res.status != LpStatus::optimal)
    throw std::logic_error("af bound program must have an optimum");
  Rat expected(1);
  for (int c : target.coords())
    if (c > 0) expected *= c;
  if (res.value != expected)
    throw std::logic_error("af bound optimum " + rat_to_string(res.value) +
                           " does not equal the coordinate product " + rat_to_string(expected));
  AfBoundResult out{res.value, make_certificate(lp, res, target), lp.rows()};
  if (!verify_certificate(out.certificate, out.system, lp.delta()))
    throw std::logic_error("af bound certificate failed its own verification");
  return out;
}

namespace {

Rat row_violation(const LpRow& row, const std::vector<Rat>& x) {
  Rat lhs(0);
  for (const auto& [i, v] : row.coeffs) lhs += v * x[static_cast<std::size_t>(i)];
  return lhs - row.bound;
}

}  // namespace

SquareBoundResult max_with_squares(int d, const IndexPoint& target, const Rat& t,
                                   const std::vector<Family>& families,
                                   const FamilyCaps& caps) {
  if (target.n() != d || target.degree() != d)
    throw std::invalid_argument("target must lie in Delta_{d,d}");
  if (sgn(t) < 0) throw std::invalid_argument("normalization level t must be non-negative");
  const DeltaIndex& delta = delta_index(d, d);

  // Full system, deduplicated across families (the block-size-one weak
  // concavity relations are exactly the pairwise concavity ones).
  std::vector<LpRow> full;
  {
    LinearProgram builder(d, d);
    for (const IndexPoint& p : delta.points()) {
      LinearInequality nonneg;
      nonneg.coeffs[p] = Rat(-1);
      nonneg.constant = Rat(0);
      builder.add_inequality(nonneg, {RowProvenance::Kind::nonneg, {}, p, ""});
    }
    std::set<std::string> seen_rows;
    for (Family f : families)
      for (const MonomialInequality& mi : family_instances(f, d, caps)) {
        if (!seen_rows.insert(mi.canonical_key()).second) continue;
        builder.add_inequality(linearize(mi),
                               {RowProvenance::Kind::family, mi.provenance(), {}, ""});
      }
    builder.add_equality_pair(IndexPoint::ones(d), t);
    full = builder.rows();
  }

  // Delayed row generation: solve over the structural core (bounds and
  // pairwise/weak concavity rows), then pull in only the rows the current
  // optimum violates. The final point satisfies every row of the full
  // system, so its value is the full optimum and the certificate is a
  // non-negative combination of full-system rows.
  auto is_seed = [](const LpRow& row) {
    if (row.provenance.kind != RowProvenance::Kind::family) return true;
    const Family f = row.provenance.inequality->family;
    return f == Family::af || f == Family::weak_concavity;
  };
  std::vector<char> active(full.size(), 0);
  for (std::size_t j = 0; j < full.size(); ++j)
    if (is_seed(full[j])) active[j] = 1;

  SquareBoundResult out;
  out.system = full;
  for (int round = 0;; ++round) {
    LinearProgram lp(d, d);
    lp.set_objective(target, Rat(1));
    for (std::size_t j = 0; j < full.size(); ++j)
      if (active[j]) lp.add_row(full[j]);
    LpResult res = solve(lp);
    if (res.status != LpStatus::optimal) {
      // Without the concavity core the subproblem can be unbounded; the
      // full system decides then.
      if (lp.rows().size() == full.size()) {
        out.status = res.status;
        return out;
      }
      for (std::size_t j = 0; j < full.size(); ++j) active[j] = 1;
      continue;
    }
    // Most violated inactive rows, exact, canonical tie order.
    std::vector<std::pair<Rat, std::size_t>> violated;
    for (std::size_t j = 0; j < full.size(); ++j) {
      if (active[j]) continue;
      Rat v = row_violation(full[j], res.primal);
      if (sgn(v) > 0) violated.emplace_back(std::move(v), j);
    }
    if (violated.empty()) {
      out.status = LpStatus::optimal;
      out.value = res.value;
      out.certificate = make_certificate(lp, res, target);
      if (!verify_certificate(*out.certificate, out.system, delta))
        throw std::logic_error("square bound certificate failed its own verification");
      return out;
    }
    std::stable_sort(violated.begin(), violated.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    const std::size_t batch = std::min<std::size_t>(violated.size(), 256);
    for (std::size_t k = 0; k < batch; ++k) active[violated[k].second] = 1;
  }
}

bool cone_implies(const HPolyhedron& cone, const LinearInequality& li) {
  if (!cone.equalities.empty())
    throw std::invalid_argument("cone_implies expects an unsliced cone");
  if (sgn(li.constant) != 0)
    throw std::invalid_argument("cone_implies expects a homogeneous inequality");
  for (const LinearInequality& row : cone.inequalities)
    if (sgn(row.constant) != 0)
      throw std::invalid_argument("cone_implies expects homogeneous cone rows");
  LinearProgram lp(cone.n, cone.d);
  int id = 0;
  for (const LinearInequality& row : cone.inequalities)
    lp.add_inequality(row, {RowProvenance::Kind::custom, {}, {}, "cone row " + std::to_string(id++)});
  LinearInequality negation;
  for (const auto& [p, c] : li.coeffs) negation.coeffs[p] = -c;
  negation.constant = Rat(-1);
  lp.add_inequality(negation, {RowProvenance::Kind::custom, {}, {}, "negated candidate"});
  return solve(lp).status == LpStatus::infeasible;
}

}  // namespace mixvol

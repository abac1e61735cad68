#pragma once

// First-class inequalities between mixed volumes, in multiplicative form
// (power-of-two constants, integer exponents) and in exact linearized
// log-space form. Every family carries structured provenance so dual
// certificates can cite the generating parameters.

#include "mixvol/index.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mixvol {

enum class Family {
  af,
  simplex_concavity,
  square,
  generalized_square,
  weak_concavity,
  double_square,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Generating parameters of one inequality. Which fields are set depends on
// the family; index sets are 0-based internally and 1-based in JSON.
struct Provenance {
  Family family = Family::af;
  std::optional<IndexPoint> p;
  std::vector<int> I;
  std::vector<int> J;
  std::optional<int> i;
  std::optional<int> j;
  std::optional<int> k;
  std::optional<int> l;
  std::vector<int> shift;        // simplex copies: the translation t
  std::optional<int> level;      // simplex copies: the dilation k

  std::string to_string() const;
};

using ExponentMap = std::vector<std::pair<IndexPoint, long>>;  // sorted, positive exps

// One relation  prod MV(p)^{lhs} <= 2^{log2_const} * prod MV(q)^{rhs}.
// Degree-balanced by construction: sum of lhs exponents equals sum of rhs
// exponents for every family in scope.
class MonomialInequality {
 public:
  MonomialInequality(Family family, std::map<IndexPoint, long> lhs,
                     std::map<IndexPoint, long> rhs, long log2_const,
                     Provenance provenance);

  Family family() const { return family_; }
  const ExponentMap& lhs() const { return lhs_; }
  const ExponentMap& rhs() const { return rhs_; }
  long log2_const() const { return log2_const_; }
  const Provenance& provenance() const { return provenance_; }

  int n() const;  // coordinate count of the index points (= d for d-tuples)
  int degree() const;

  // Exact evaluation of both sides on a strictly positive multiplicative
  // configuration. Satisfied means lhs <= rhs.
  struct Evaluation {
    Rat lhs_value;
    Rat rhs_value;
    bool satisfied;
  };
  Evaluation evaluate(const Configuration& c) const;

  // Dedup key: both exponent maps and the constant divided by their gcd.
  std::string canonical_key() const;

 private:
  Family family_;
  ExponentMap lhs_, rhs_;
  long log2_const_;
  Provenance provenance_;
};

// sum coeffs(p) * x(p) <= constant, variables living in log-space.
struct LinearInequality {
  std::map<IndexPoint, Rat> coeffs;
  Rat constant;

  Rat lhs_value(const Configuration& log_config) const;
  bool satisfied_by(const Configuration& log_config) const;
};

// coeffs(p) = lhs_exp(p) - rhs_exp(p); constant = log2_const.
LinearInequality linearize(const MonomialInequality& mi);

// --- Generators ----------------------------------------------------------

// Log-concavity along e_i - e_j: MV(p+e_i-e_j) MV(p-e_i+e_j) <= MV(p)^2,
// one instance per p in Delta_{d,d} and unordered pair {i,j} with p_i,p_j >= 1.
std::vector<MonomialInequality> gen_af(int d);

// MV(p) MV(p+u1+u2) <= 2 MV(p+u1) MV(p+u2) with u1 = e_{i1}-e_j,
// u2 = e_{i2}-e_j, over all p with p_j >= 2 and {i1,i2} disjoint from j.
std::vector<MonomialInequality> gen_square(int d);

// MV(p) MV(p+u_{I,j}+u_{i,j}) <= 2^{|I|} MV(p+u_{I,j}) MV(p+u_{i,j}) for
// |I| <= max_I and p_j > |I|. At |I| = 1 this reduces to gen_square.
std::vector<MonomialInequality> gen_generalized_square(int d, int max_I);

// Weak concavity along u_{I,j}, integral-exponent form (the (k+l)-th power
// of the fractional statement):
//   MV(p + k u_{I,j})^l MV(p - l u_{I,j})^k <= 2^{(k+l) k l C(|I|,2)} MV(p)^{k+l}.
MonomialInequality gen_weak_concavity(int d, const std::vector<int>& I, int j,
                                      int k, int l, const IndexPoint& p);

// Concavity over a copy S of Delta_{n,k} inside Delta_{d,d} spanned by
// vertices b_j = k e_{indices_j} + shift:
//   MV(b_1)^{c_1} ... MV(b_n)^{c_n} <= MV(p)^k,
// where c is the barycentric weight vector of p, k p = sum c_j b_j.
MonomialInequality gen_simplex_concavity(int d, const std::vector<int>& indices,
                                         const std::vector<int>& shift, int level,
                                         const IndexPoint& p);

// MV(p+u_{I,J}) MV(p-u_{I,J}) <= 2^4 MV(p)^2 over |I| = |J| = 2 disjoint.
std::vector<MonomialInequality> gen_double_square(int d);

// --- Instance enumeration -------------------------------------------------
//
// Weak-concavity and simplex-concavity are parametric families; these
// enumerate all valid parameter tuples in a fixed deterministic order.
// The instance volume explodes with d, so d >= 6 defaults restrict weak
// concavity to k = l = 1 and apply a hard per-family instance cap; the
// capped set still contains every instance the d = 6 bound chain needs.

struct FamilyCaps {
  int weakconc_max_kl_sum;  // keep instances with k + l <= this
  int gensquare_max_I;
  long max_instances;       // per family, in enumeration order

  static FamilyCaps defaults(int d);
  static FamilyCaps unlimited();
};

std::vector<MonomialInequality> weak_concavity_instances(int d, const FamilyCaps& caps);
std::vector<MonomialInequality> simplex_concavity_instances(int d, const FamilyCaps& caps);

// All instances of one family under the given caps (generated families
// disregard caps when d allows full enumeration).
std::vector<MonomialInequality> family_instances(Family f, int d, const FamilyCaps& caps);

// --- Checking -------------------------------------------------------------

struct Violation {
  MonomialInequality inequality;
  Rat lhs_value;
  Rat rhs_value;
};

struct CheckReport {
  long total = 0;
  long satisfied = 0;
  std::vector<Violation> violations;

  bool all_satisfied() const { return violations.empty(); }
};

// Evaluates each inequality exactly; a violation is a strict lhs > rhs.
CheckReport check_config(const Configuration& c,
                         const std::vector<MonomialInequality>& ineqs);

// Log-concavity of the two-body sequence r_i = MV(i, d-i): the necessary
// side of the n = 2 configuration-space description.
bool two_body_sequence_log_concave(const Configuration& c);

// --- Weak concavity of scalar sequences -----------------------------------

// Checks the hypothesis r_{i-1}/2 + r_{i+1}/2 <= r_i + C for 0 < i < n on a
// sequence r_0..r_n and, when it holds, verifies the derived comparisons
// (pair averaging, endpoint mixing at every k, and the symmetric two-sided
// form). The derived comparisons are theorems, so a failure there is
// reported as an internal error rather than a result.
struct WeakConcaveReport {
  bool hypothesis_holds = false;
  std::optional<int> hypothesis_violation_index;
  bool conclusions_hold = false;
  std::vector<std::string> conclusion_failures;  // expected empty
};

WeakConcaveReport verify_weak_concave_sequence(const std::vector<Rat>& r, const Rat& C);

}  // namespace mixvol

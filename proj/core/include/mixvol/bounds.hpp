#pragma once

// Explicit bound chains in log-configuration space: canonical admissible
// paths from (1,...,1) to a target index, per-step affine bounds, their
// telescoped closed forms, the black-box point bounds, and the closed-form
// Minkowski-sum bounds. Everything is an exact affine function of the
// normalized value at (1,...,1); no floats anywhere.

#include "mixvol/index.hpp"

#include <vector>

namespace mixvol {

// The canonical decreasing walk 1 = a_1, ..., a_{max(p)} = p where each
// step adds an admissible vector: +1 on the leading equal block, -1 on a
// trailing zero block of the same size.
struct AdmissiblePath {
  std::vector<IndexPoint> points;   // a_1 .. a_{max(p)}
  std::vector<Direction> steps;     // steps[i] = a_{i+2} - a_{i+1}
};

// Builds the canonical path; p must be sorted non-increasingly.
AdmissiblePath admissible_path(const IndexPoint& p);

// For a set-to-set step v at the point a (with a +/- v inside the simplex):
// the affine bound x(a + v) <= factor * x(a) + additive, where
// factor = (mu+1)/mu, additive = (mu+1) * C(floor(d/2), 2), and mu is the
// smallest entry of a over the incremented positions.
struct StepBound {
  Rat factor;
  Rat additive;
  Rat mu;
};
StepBound step_bound(const IndexPoint& a, const Direction& v);

// A replayable derivation of x(target) <= slope * x(1) + constant.
struct BoundCertificate {
  IndexPoint target;                 // as given by the caller
  std::vector<int> sort_permutation; // sorted[i] = target[sort_permutation[i]]
  Rat slope;
  Rat constant;
  struct ChainEntry {
    IndexPoint from;
    std::vector<int> I;  // 0-based
    std::vector<int> J;
    Rat mu;
  };
  std::vector<ChainEntry> chain;
};

// Composes step bounds along the canonical path of sorted(p). The result
// always telescopes to slope = max(p) and
// constant = max(p) (max(p)-1) C(floor(d/2), 2); a mismatch is a bug.
BoundCertificate certify_sq_bound(const IndexPoint& p);

// Product of the positive coordinates: the slope of the pure
// log-concavity bound x(p) <= (prod p_i) x(1).
Int af_point_bound(const IndexPoint& p);

enum class BoundMethod { af, square };

// Closed forms for the Minkowski-sum volume bound at MV(1,...,1) = m:
//   af:     m^{3^q 2^r} d^d   with d = 3q + 2r, r in {0,1,2}
//   square: 2^{d(d-1) C(floor(d/2),2)} d^d m^d
struct MinkBoundForm {
  Int coefficient;
  long exponent;
};
MinkBoundForm mink_bound_form(int d, BoundMethod method);
Rat mink_bound(int d, const Rat& m, BoundMethod method);

// Decomposition d = 3q + 2r with r in {0,1,2}.
std::pair<int, int> three_two_split(int d);

// The configuration with value 3 at (1,...,1) and 1 elsewhere: satisfies
// every pairwise log-concavity relation yet violates a square relation,
// so it is not realizable by bodies.
Configuration counterexample_config(int d);

}  // namespace mixvol

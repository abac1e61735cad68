#pragma once

// End-to-end verifiers for the exact maxima in dimensions 2 and 3. Each
// pipeline enumerates the normalized concavity polytope, reduces by
// symmetry and dominance, and certifies every remaining polynomial
// comparison by shift-power coefficient checks or an exact LP. The report
// embeds every intermediate object so the derivation can be re-checked by
// hand.

#include "mixvol/json_io.hpp"
#include "mixvol/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace mixvol {

struct ProofStep {
  std::string statement;
  std::string kind;  // "vertex-list match" | "dominance" | "shift-power nonneg" | "LP" | "witness"
  Json data;
};

struct VerifyReport {
  bool ok = false;
  std::vector<ProofStep> steps;
  std::map<int, SparsePolynomial> maxima;  // prefix length -> maximum of the objective

  Json to_json() const;
};

// Maxima of the partial Minkowski-sum volumes for triples: m^3, (m+1)^3,
// (m+2)^3 at prefix lengths 1, 2, 3.
VerifyReport verify_dim3();

// Maxima for pairs: m^2 and (m+1)^2.
VerifyReport verify_dim2();

}  // namespace mixvol

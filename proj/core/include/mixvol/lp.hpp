#pragma once

// Exact rational linear programming over log-configuration space. The
// solver keeps the small side of the problem (one coordinate per index
// point) as the simplex basis, so systems with tens of thousands of
// inequality rows stay tractable. Every optimal solve returns both an
// optimal point and non-negative row multipliers whose weighted sum
// literally reproduces the proved bound.

#include "mixvol/cone.hpp"
#include "mixvol/inequality.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mixvol {

// Where an LP row came from; certificates cite rows through this.
struct RowProvenance {
  enum class Kind { family, corner_nonneg, nonneg, slice_upper, slice_lower, custom };
  Kind kind = Kind::custom;
  std::optional<Provenance> inequality;  // family rows
  std::optional<IndexPoint> point;       // (corner_)nonneg rows
  std::string label;                     // custom rows

  std::string key() const;  // stable identifier used for row lookup
};

struct LpRow {
  std::vector<std::pair<int, Rat>> coeffs;  // sparse over delta positions, a.x <= bound
  Rat bound;
  RowProvenance provenance;
};

// max objective.x subject to rows; variables are free (non-negativity is
// expressed through rows so it can be cited by certificates).
class LinearProgram {
 public:
  LinearProgram(int n, int d);

  const DeltaIndex& delta() const { return *delta_; }
  int n_vars() const { return delta_->size(); }

  void set_objective(const IndexPoint& p, Rat coeff);
  const std::vector<Rat>& objective() const { return objective_; }

  int add_row(LpRow row);
  int add_inequality(const LinearInequality& li, RowProvenance prov);
  void add_equality_pair(const IndexPoint& p, const Rat& value);  // x(p) <= v and -x(p) <= -v
  const std::vector<LpRow>& rows() const { return rows_; }

 private:
  const DeltaIndex* delta_;
  std::vector<Rat> objective_;
  std::vector<LpRow> rows_;
};

enum class LpStatus { optimal, unbounded, infeasible };

struct LpResult {
  LpStatus status = LpStatus::optimal;
  Rat value;
  std::vector<Rat> primal;  // dense over delta positions
  std::vector<Rat> dual;    // one non-negative multiplier per row
};

// Exact two-phase simplex (revised form, dense basis inverse). Dantzig
// pricing with least-index ties, falling back to Bland's rule whenever
// the iteration stalls on degenerate pivots, so runs are deterministic
// and terminate. Every optimal result is re-verified exactly: primal
// feasibility, dual feasibility, and equality of both objective values.
LpResult solve(const LinearProgram& lp);

// A machine-checkable upper-bound derivation: non-negative multipliers on
// cited rows whose weighted sum is literally the derived inequality.
struct DualCertificate {
  IndexPoint target;
  Rat value;
  std::vector<std::pair<RowProvenance, Rat>> multipliers;  // strictly positive weights
  LinearInequality derived;
};

// Recomputes the weighted sum exactly; true iff it coincides with the
// certificate's derived inequality coefficient-by-coefficient. Throws on
// multipliers that cite rows absent from the system.
bool verify_certificate(const DualCertificate& cert, const std::vector<LpRow>& system,
                        const DeltaIndex& delta);

// Maximize x(target) over the af cone sliced at x(1) = 1. The optimum is
// the product of the positive coordinates of the target; the certificate
// combines af rows, corner rows and the slice rows.
struct AfBoundResult {
  Rat value;
  DualCertificate certificate;
  std::vector<LpRow> system;
};
AfBoundResult max_over_af(int d, const IndexPoint& target);

// Maximize x(target) subject to the selected linearized families, x(p) >= 0
// for every p, and x(1) = t.
struct SquareBoundResult {
  LpStatus status = LpStatus::optimal;
  Rat value;
  std::optional<DualCertificate> certificate;
  std::vector<LpRow> system;
};
SquareBoundResult max_with_squares(int d, const IndexPoint& target, const Rat& t,
                                   const std::vector<Family>& families,
                                   const FamilyCaps& caps);

// True iff the linearized inequality is implied by the cone: appending its
// strict negation (violation >= 1, scale-free for cones) makes the system
// infeasible.
bool cone_implies(const HPolyhedron& cone, const LinearInequality& li);

}  // namespace mixvol

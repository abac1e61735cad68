#pragma once

// Combinatorics of the index simplex Delta_{n,d}: the set of non-negative
// integer n-vectors summing to d. Points of Delta_{n,d} index the distinct
// mixed volumes of an n-tuple of bodies in R^d. All enumerations use one
// canonical order (descending lexicographic), which fixes file formats and
// LP column order across the whole workbench.

#include "mixvol/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace mixvol {

// A point of Delta_{n,d}. Construction validates the invariants, so a live
// IndexPoint always has non-negative coordinates summing to its degree.
class IndexPoint {
 public:
  IndexPoint(std::vector<int> coords, int expected_degree = -1);

  int n() const { return static_cast<int>(coords_.size()); }
  int degree() const { return degree_; }
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& coords() const { return coords_; }

  int max_entry() const;
  int support_size() const;  // number of strictly positive coordinates

  // Component-wise shift; throws if the result leaves Delta_{n,d}.
  IndexPoint shifted(const std::vector<int>& delta) const;
  bool can_shift(const std::vector<int>& delta) const;

  // Canonical (descending lexicographic) comparison.
  std::strong_ordering operator<=>(const IndexPoint& o) const;
  bool operator==(const IndexPoint& o) const = default;

  std::string to_string() const;  // "(2,1,0)"

  static IndexPoint ones(int d);                  // (1,...,1) in Delta_{d,d}
  static IndexPoint corner(int d, int i);         // d*e_i in Delta_{d,d}, 0-based i

 private:
  std::vector<int> coords_;
  int degree_;
};

// Descending-lex order on coordinate vectors: (3,0) > (2,1) > (1,2) > (0,3).
struct IndexPointDescLex {
  bool operator()(const IndexPoint& a, const IndexPoint& b) const;
};

// The canonical enumeration of Delta_{n,d} with point -> position lookup.
// Immutable after construction; cheap to share by reference.
class DeltaIndex {
 public:
  DeltaIndex(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  int size() const { return static_cast<int>(points_.size()); }
  const IndexPoint& point(int pos) const { return points_[static_cast<std::size_t>(pos)]; }
  const std::vector<IndexPoint>& points() const { return points_; }
  int position(const IndexPoint& p) const;  // throws if p is not in Delta_{n,d}
  bool contains(const std::vector<int>& coords) const;

 private:
  int n_, d_;
  std::vector<IndexPoint> points_;
  std::map<std::vector<int>, int> positions_;
};

// All points of Delta_{n,d} exactly once, in canonical order.
std::vector<IndexPoint> enumerate_delta(int n, int d);

// d! / (p_1! ... p_n!)
Int multinomial(const IndexPoint& p);

// A bijection of {0,...,n-1}. images()[i] is the image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static std::vector<Permutation> symmetric_group(int n);  // lex order of image vectors

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  Permutation compose(const Permutation& inner) const;  // (*this) after inner
  Permutation inverse() const;

  bool operator==(const Permutation& o) const = default;

 private:
  std::vector<int> images_;
};

// An integer direction in the hyperplane {sum = 0}, tagged by how it was
// built. Elementary e_i - e_j, one-to-one u_{I,j} = sum_{i in I} (e_i - e_j),
// and set-to-set u_{I,J} = sum_{i in I} e_i - sum_{j in J} e_j. Indices are
// 0-based internally.
struct Direction {
  enum class Kind { elementary, one_to_one, set_to_set };

  std::vector<int> coords;
  Kind kind;
  std::vector<int> from;  // I (or {i})
  std::vector<int> to;    // J (or {j})

  static Direction elementary(int n, int i, int j);
  static Direction one_to_one(int n, const std::vector<int>& I, int j);
  static Direction set_to_set(int n, const std::vector<int>& I, const std::vector<int>& J);

  Direction negated() const;
  std::vector<int> scaled(int k) const;
};

enum class Scale { multiplicative, logarithmic };

// A total rational-valued function on Delta_{n,d}, stored densely in
// canonical order. Houses both MV configurations (multiplicative) and
// log-space vectors (logarithmic). Immutable in spirit: operations return
// new configurations.
class Configuration {
 public:
  Configuration(int n, int d, Scale scale);
  Configuration(int n, int d, Scale scale, std::vector<Rat> values);

  int n() const { return n_; }
  int d() const { return d_; }
  Scale scale() const { return scale_; }
  const DeltaIndex& delta() const;

  const Rat& at(const IndexPoint& p) const;
  const Rat& at_pos(int pos) const { return values_[static_cast<std::size_t>(pos)]; }
  void set(const IndexPoint& p, Rat value);
  const std::vector<Rat>& values() const { return values_; }

  bool strictly_positive() const;

  bool operator==(const Configuration& o) const;

  // Canonical comparison: by (n, d, scale, value vector in canonical order).
  std::strong_ordering operator<=>(const Configuration& o) const;

 private:
  int n_, d_;
  Scale scale_;
  std::vector<Rat> values_;
};

// The S_n action: (sigma c)(p_1,...,p_n) = c(p_{sigma(1)},...,p_{sigma(n)}).
Configuration act(const Permutation& sigma, const Configuration& c);

// Component-wise partial order: true iff v(p) <= w(p) for every p.
bool dominates(const Configuration& v, const Configuration& w);

// Shared immutable DeltaIndex instances (keyed by (n,d)); thread-safe.
const DeltaIndex& delta_index(int n, int d);

}  // namespace mixvol

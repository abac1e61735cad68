#include "mixvol/index.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace mixvol {

IndexPoint::IndexPoint(std::vector<int> coords, int expected_degree)
    : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("index point needs n >= 1");
  long sum = 0;
  for (int c : coords_) {
    if (c < 0) throw std::invalid_argument("index point with negative coordinate");
    sum += c;
  }
  if (sum < 1) throw std::invalid_argument("index point needs degree d >= 1");
  degree_ = static_cast<int>(sum);
  if (expected_degree >= 0 && degree_ != expected_degree)
    throw std::invalid_argument("index point degree mismatch: expected " +
                                std::to_string(expected_degree) + ", got " +
                                std::to_string(degree_));
}

int IndexPoint::max_entry() const {
  return *std::max_element(coords_.begin(), coords_.end());
}

int IndexPoint::support_size() const {
  return static_cast<int>(std::count_if(coords_.begin(), coords_.end(),
                                        [](int c) { return c > 0; }));
}

bool IndexPoint::can_shift(const std::vector<int>& delta) const {
  if (delta.size() != coords_.size()) return false;
  long sum = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] + delta[i] < 0) return false;
    sum += delta[i];
  }
  return sum == 0;
}

IndexPoint IndexPoint::shifted(const std::vector<int>& delta) const {
  if (!can_shift(delta))
    throw std::invalid_argument("shift leaves the index simplex at " + to_string());
  std::vector<int> out(coords_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += delta[i];
  return IndexPoint(std::move(out), degree_);
}

std::strong_ordering IndexPoint::operator<=>(const IndexPoint& o) const {
  if (auto c = n() <=> o.n(); c != 0) return c;
  if (auto c = degree_ <=> o.degree_; c != 0) return c;
  // Descending lex: larger coordinate vector comes first.
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (auto c = o.coords_[i] <=> coords_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string IndexPoint::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ',';
    out << coords_[i];
  }
  out << ')';
  return out.str();
}

IndexPoint IndexPoint::ones(int d) {
  return IndexPoint(std::vector<int>(static_cast<std::size_t>(d), 1), d);
}

IndexPoint IndexPoint::corner(int d, int i) {
  std::vector<int> c(static_cast<std::size_t>(d), 0);
  c.at(static_cast<std::size_t>(i)) = d;
  return IndexPoint(std::move(c), d);
}

bool IndexPointDescLex::operator()(const IndexPoint& a, const IndexPoint& b) const {
  return a < b;
}

namespace {

void enumerate_rec(int remaining_slots, int remaining_degree, std::vector<int>& acc,
                   std::vector<IndexPoint>& out) {
  if (remaining_slots == 1) {
    acc.push_back(remaining_degree);
    out.emplace_back(acc);
    acc.pop_back();
    return;
  }
  // Descending lex: largest first coordinate first.
  for (int c = remaining_degree; c >= 0; --c) {
    acc.push_back(c);
    enumerate_rec(remaining_slots - 1, remaining_degree - c, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<IndexPoint> enumerate_delta(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("enumerate_delta needs n, d >= 1");
  std::vector<IndexPoint> out;
  std::vector<int> acc;
  acc.reserve(static_cast<std::size_t>(n));
  enumerate_rec(n, d, acc, out);
  return out;
}

DeltaIndex::DeltaIndex(int n, int d) : n_(n), d_(d), points_(enumerate_delta(n, d)) {
  for (int i = 0; i < size(); ++i) positions_.emplace(points_[static_cast<std::size_t>(i)].coords(), i);
}

int DeltaIndex::position(const IndexPoint& p) const {
  auto it = positions_.find(p.coords());
  if (it == positions_.end())
    throw std::invalid_argument("point " + p.to_string() + " is not in Delta_{" +
                                std::to_string(n_) + "," + std::to_string(d_) + "}");
  return it->second;
}

bool DeltaIndex::contains(const std::vector<int>& coords) const {
  return positions_.count(coords) > 0;
}

Int multinomial(const IndexPoint& p) {
  Int out = factorial(static_cast<unsigned>(p.degree()));
  for (int c : p.coords()) out /= factorial(static_cast<unsigned>(c));
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= n() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

std::vector<Permutation> Permutation::symmetric_group(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (n() != inner.n()) throw std::invalid_argument("composing permutations of different size");
  std::vector<int> im(static_cast<std::size_t>(n()));
  for (int i = 0; i < n(); ++i) im[static_cast<std::size_t>(i)] = (*this)(inner(i));
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(static_cast<std::size_t>(n()));
  for (int i = 0; i < n(); ++i) im[static_cast<std::size_t>((*this)(i))] = i;
  return Permutation(std::move(im));
}

namespace {

std::vector<int> checked_sorted(std::vector<int> v, int n, const char* what) {
  std::sort(v.begin(), v.end());
  if (v.empty()) throw std::invalid_argument(std::string(what) + " must be non-empty");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] >= n) throw std::invalid_argument(std::string(what) + " index out of range");
    if (i > 0 && v[i] == v[i - 1]) throw std::invalid_argument(std::string(what) + " has repeats");
  }
  return v;
}

}  // namespace

Direction Direction::elementary(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("elementary direction needs i != j");
  Direction dir;
  dir.coords.assign(static_cast<std::size_t>(n), 0);
  dir.coords.at(static_cast<std::size_t>(i)) = 1;
  dir.coords.at(static_cast<std::size_t>(j)) = -1;
  dir.kind = Kind::elementary;
  dir.from = {i};
  dir.to = {j};
  return dir;
}

Direction Direction::one_to_one(int n, const std::vector<int>& I, int j) {
  Direction dir;
  dir.from = checked_sorted(I, n, "I");
  if (j < 0 || j >= n) throw std::invalid_argument("j out of range");
  for (int i : dir.from)
    if (i == j) throw std::invalid_argument("u_{I,j} needs j outside I");
  dir.coords.assign(static_cast<std::size_t>(n), 0);
  for (int i : dir.from) dir.coords[static_cast<std::size_t>(i)] = 1;
  dir.coords[static_cast<std::size_t>(j)] = -static_cast<int>(dir.from.size());
  dir.kind = Kind::one_to_one;
  dir.to = {j};
  return dir;
}

Direction Direction::set_to_set(int n, const std::vector<int>& I, const std::vector<int>& J) {
  Direction dir;
  dir.from = checked_sorted(I, n, "I");
  dir.to = checked_sorted(J, n, "J");
  if (dir.from.size() != dir.to.size())
    throw std::invalid_argument("u_{I,J} needs |I| = |J|");
  dir.coords.assign(static_cast<std::size_t>(n), 0);
  for (int i : dir.from) dir.coords[static_cast<std::size_t>(i)] += 1;
  for (int j : dir.to) dir.coords[static_cast<std::size_t>(j)] -= 1;
  for (int i : dir.from)
    for (int j : dir.to)
      if (i == j) throw std::invalid_argument("u_{I,J} needs I and J disjoint");
  dir.kind = Kind::set_to_set;
  return dir;
}

Direction Direction::negated() const {
  Direction out = *this;
  for (int& c : out.coords) c = -c;
  std::swap(out.from, out.to);
  if (kind == Kind::one_to_one) out.kind = Kind::set_to_set;  // shape no longer one-to-one
  return out;
}

std::vector<int> Direction::scaled(int k) const {
  std::vector<int> out(coords);
  for (int& c : out) c *= k;
  return out;
}

Configuration::Configuration(int n, int d, Scale scale)
    : n_(n), d_(d), scale_(scale),
      values_(static_cast<std::size_t>(delta_index(n, d).size()), Rat(0)) {}

Configuration::Configuration(int n, int d, Scale scale, std::vector<Rat> values)
    : n_(n), d_(d), scale_(scale), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != delta_index(n, d).size())
    throw std::invalid_argument("configuration value vector has wrong length");
}

const DeltaIndex& Configuration::delta() const { return delta_index(n_, d_); }

const Rat& Configuration::at(const IndexPoint& p) const {
  return values_[static_cast<std::size_t>(delta().position(p))];
}

void Configuration::set(const IndexPoint& p, Rat value) {
  values_[static_cast<std::size_t>(delta().position(p))] = std::move(value);
}

bool Configuration::strictly_positive() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rat& v) { return sgn(v) > 0; });
}

bool Configuration::operator==(const Configuration& o) const {
  return n_ == o.n_ && d_ == o.d_ && scale_ == o.scale_ && values_ == o.values_;
}

std::strong_ordering Configuration::operator<=>(const Configuration& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  if (auto c = d_ <=> o.d_; c != 0) return c;
  if (auto c = static_cast<int>(scale_) <=> static_cast<int>(o.scale_); c != 0) return c;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const int c = cmp(values_[i], o.values_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Configuration act(const Permutation& sigma, const Configuration& c) {
  if (sigma.n() != c.n()) throw std::invalid_argument("permutation size does not match configuration");
  const DeltaIndex& delta = c.delta();
  Configuration out(c.n(), c.d(), c.scale());
  for (const IndexPoint& p : delta.points()) {
    // (sigma c)(p_1,...,p_n) = c(p_{sigma(1)},...,p_{sigma(n)})
    std::vector<int> moved(static_cast<std::size_t>(c.n()));
    for (int i = 0; i < c.n(); ++i) moved[static_cast<std::size_t>(i)] = p[sigma(i)];
    out.set(p, c.at(IndexPoint(std::move(moved), c.d())));
  }
  return out;
}

bool dominates(const Configuration& v, const Configuration& w) {
  if (v.n() != w.n() || v.d() != w.d() || v.scale() != w.scale())
    throw std::invalid_argument("comparing configurations on different domains");
  for (std::size_t i = 0; i < v.values().size(); ++i)
    if (v.values()[i] > w.values()[i]) return false;
  return true;
}

const DeltaIndex& delta_index(int n, int d) {
  static std::mutex mu;
  static std::unordered_map<long, DeltaIndex> cache;
  std::lock_guard<std::mutex> lock(mu);
  const long key = static_cast<long>(n) * 1000 + d;
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.try_emplace(key, n, d).first;
  return it->second;
}

}  // namespace mixvol

#include "mixvol/inequality.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace mixvol {

std::string family_name(Family f) {
  switch (f) {
    case Family::af: return "af";
    case Family::simplex_concavity: return "simplex_concavity";
    case Family::square: return "square";
    case Family::generalized_square: return "generalized_square";
    case Family::weak_concavity: return "weak_concavity";
    case Family::double_square: return "double_square";
  }
  throw std::logic_error("unreachable family tag");
}

Family family_from_name(const std::string& name) {
  if (name == "af") return Family::af;
  if (name == "simplex_concavity" || name == "simplexconc") return Family::simplex_concavity;
  if (name == "square") return Family::square;
  if (name == "generalized_square" || name == "gensquare") return Family::generalized_square;
  if (name == "weak_concavity" || name == "weakconc") return Family::weak_concavity;
  if (name == "double_square" || name == "doublesquare") return Family::double_square;
  throw std::invalid_argument("unknown inequality family: '" + name + "'");
}

namespace {

std::string join_one_based(const std::vector<int>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i] + 1;
  }
  out << '}';
  return out.str();
}

}  // namespace

std::string Provenance::to_string() const {
  std::ostringstream out;
  out << family_name(family);
  if (p) out << " p=" << p->to_string();
  if (!I.empty()) out << " I=" << join_one_based(I);
  if (!J.empty()) out << " J=" << join_one_based(J);
  if (i) out << " i=" << *i + 1;
  if (j) out << " j=" << *j + 1;
  if (k) out << " k=" << *k;
  if (l) out << " l=" << *l;
  if (level) {
    out << " copy[k=" << *level << " t=(";
    for (std::size_t x = 0; x < shift.size(); ++x) {
      if (x) out << ',';
      out << shift[x];
    }
    out << ")]";
  }
  return out.str();
}

MonomialInequality::MonomialInequality(Family family, std::map<IndexPoint, long> lhs,
                                       std::map<IndexPoint, long> rhs, long log2_const,
                                       Provenance provenance)
    : family_(family), log2_const_(log2_const), provenance_(std::move(provenance)) {
  if (log2_const < 0) throw std::invalid_argument("negative power-of-two constant");
  long lhs_deg = 0, rhs_deg = 0;
  for (auto& [p, e] : lhs) {
    if (e <= 0) throw std::invalid_argument("non-positive exponent on lhs");
    lhs_deg += e;
    lhs_.emplace_back(p, e);
  }
  for (auto& [p, e] : rhs) {
    if (e <= 0) throw std::invalid_argument("non-positive exponent on rhs");
    rhs_deg += e;
    rhs_.emplace_back(p, e);
  }
  if (lhs_.empty() || rhs_.empty()) throw std::invalid_argument("empty inequality side");
  if (lhs_deg != rhs_deg)
    throw std::invalid_argument("inequality is not degree-balanced (" +
                                std::to_string(lhs_deg) + " vs " + std::to_string(rhs_deg) + ")");
  const int nn = lhs_.front().first.n();
  const int dd = lhs_.front().first.degree();
  for (const auto& side : {lhs_, rhs_})
    for (const auto& [p, e] : side)
      if (p.n() != nn || p.degree() != dd)
        throw std::invalid_argument("inequality mixes index domains");
}

int MonomialInequality::n() const { return lhs_.front().first.n(); }
int MonomialInequality::degree() const { return lhs_.front().first.degree(); }

MonomialInequality::Evaluation MonomialInequality::evaluate(const Configuration& c) const {
  if (c.scale() != Scale::multiplicative)
    throw std::invalid_argument("inequalities evaluate on multiplicative configurations");
  Evaluation ev{Rat(1), pow2(log2_const_), false};
  for (const auto& [p, e] : lhs_) ev.lhs_value *= rat_pow(c.at(p), e);
  for (const auto& [p, e] : rhs_) ev.rhs_value *= rat_pow(c.at(p), e);
  ev.satisfied = ev.lhs_value <= ev.rhs_value;
  return ev;
}

std::string MonomialInequality::canonical_key() const {
  long g = log2_const_;
  for (const auto& [p, e] : lhs_) g = std::gcd(g, e);
  for (const auto& [p, e] : rhs_) g = std::gcd(g, e);
  if (g == 0) g = 1;
  std::ostringstream out;
  auto emit = [&](const ExponentMap& side) {
    for (const auto& [p, e] : side) out << p.to_string() << '^' << e / g << ' ';
  };
  emit(lhs_);
  out << "<= 2^" << log2_const_ / g << ' ';
  emit(rhs_);
  return out.str();
}

Rat LinearInequality::lhs_value(const Configuration& log_config) const {
  Rat sum(0);
  for (const auto& [p, c] : coeffs) sum += c * log_config.at(p);
  return sum;
}

bool LinearInequality::satisfied_by(const Configuration& log_config) const {
  return lhs_value(log_config) <= constant;
}

LinearInequality linearize(const MonomialInequality& mi) {
  LinearInequality out;
  out.constant = Rat(mi.log2_const());
  for (const auto& [p, e] : mi.lhs()) out.coeffs[p] += Rat(e);
  for (const auto& [p, e] : mi.rhs()) out.coeffs[p] -= Rat(e);
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
    it = sgn(it->second) == 0 ? out.coeffs.erase(it) : std::next(it);
  return out;
}

namespace {

// Dedup within one family, preserving first-seen enumeration order.
class Collector {
 public:
  void add(MonomialInequality mi) {
    if (seen_.insert(mi.canonical_key()).second) out_.push_back(std::move(mi));
  }
  std::vector<MonomialInequality> take() { return std::move(out_); }
  long size() const { return static_cast<long>(out_.size()); }

 private:
  std::set<std::string> seen_;
  std::vector<MonomialInequality> out_;
};

}  // namespace

std::vector<MonomialInequality> gen_af(int d) {
  if (d < 2) throw std::invalid_argument("gen_af needs d >= 2");
  Collector out;
  for (const IndexPoint& p : delta_index(d, d).points()) {
    for (int i = 0; i < d; ++i) {
      if (p[i] < 1) continue;
      for (int j = i + 1; j < d; ++j) {
        if (p[j] < 1) continue;
        const Direction u = Direction::elementary(d, i, j);
        Provenance prov;
        prov.family = Family::af;
        prov.p = p;
        prov.i = i;
        prov.j = j;
        out.add(MonomialInequality(
            Family::af,
            {{p.shifted(u.coords), 1}, {p.shifted(u.negated().coords), 1}},
            {{p, 2}}, 0, std::move(prov)));
      }
    }
  }
  return out.take();
}

std::vector<MonomialInequality> gen_square(int d) {
  if (d < 3) throw std::invalid_argument("gen_square needs d >= 3");
  Collector out;
  for (const IndexPoint& p : delta_index(d, d).points()) {
    for (int j = 0; j < d; ++j) {
      if (p[j] < 2) continue;
      for (int i1 = 0; i1 < d; ++i1) {
        if (i1 == j) continue;
        for (int i2 = i1 + 1; i2 < d; ++i2) {
          if (i2 == j) continue;
          const auto u1 = Direction::elementary(d, i1, j).coords;
          const auto u2 = Direction::elementary(d, i2, j).coords;
          std::vector<int> u12(u1);
          for (int x = 0; x < d; ++x) u12[static_cast<std::size_t>(x)] += u2[static_cast<std::size_t>(x)];
          Provenance prov;
          prov.family = Family::square;
          prov.p = p;
          prov.I = {i1, i2};
          prov.j = j;
          std::map<IndexPoint, long> lhs{{p, 1}};
          lhs[p.shifted(u12)] += 1;
          out.add(MonomialInequality(Family::square, std::move(lhs),
                                     {{p.shifted(u1), 1}, {p.shifted(u2), 1}}, 1,
                                     std::move(prov)));
        }
      }
    }
  }
  return out.take();
}

std::vector<MonomialInequality> gen_generalized_square(int d, int max_I) {
  if (d < 3) throw std::invalid_argument("gen_generalized_square needs d >= 3");
  if (max_I < 1 || max_I > d - 2)
    throw std::invalid_argument("gen_generalized_square needs 1 <= max_I <= d-2");
  Collector out;
  // Subsets I in size-then-lex order.
  for (int s = 1; s <= max_I; ++s) {
    std::vector<int> I(static_cast<std::size_t>(s));
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == s) {
        for (int i = 0; i < d; ++i) {
          if (std::count(I.begin(), I.end(), i)) continue;
          for (int j = 0; j < d; ++j) {
            if (j == i || std::count(I.begin(), I.end(), j)) continue;
            const Direction uI = Direction::one_to_one(d, I, j);
            const Direction ui = Direction::elementary(d, i, j);
            for (const IndexPoint& p : delta_index(d, d).points()) {
              if (p[j] <= s) continue;
              std::vector<int> both(uI.coords);
              for (int x = 0; x < d; ++x) both[static_cast<std::size_t>(x)] += ui.coords[static_cast<std::size_t>(x)];
              Provenance prov;
              prov.family = Family::generalized_square;
              prov.p = p;
              prov.I = I;
              prov.i = i;
              prov.j = j;
              std::map<IndexPoint, long> lhs{{p, 1}};
              lhs[p.shifted(both)] += 1;
              std::map<IndexPoint, long> rhs;
              rhs[p.shifted(uI.coords)] += 1;
              rhs[p.shifted(ui.coords)] += 1;
              out.add(MonomialInequality(Family::generalized_square, std::move(lhs),
                                         std::move(rhs), s, std::move(prov)));
            }
          }
        }
        return;
      }
      for (int v = start; v < d; ++v) {
        I[static_cast<std::size_t>(depth)] = v;
        rec(v + 1, depth + 1);
      }
    };
    rec(0, 0);
  }
  return out.take();
}

MonomialInequality gen_weak_concavity(int d, const std::vector<int>& I, int j, int k, int l,
                                      const IndexPoint& p) {
  if (k < 1 || l < 1) throw std::invalid_argument("weak concavity needs k, l >= 1");
  if (p.n() != d || p.degree() != d)
    throw std::invalid_argument("weak concavity base point must lie in Delta_{d,d}");
  const Direction u = Direction::one_to_one(d, I, j);
  if (!p.can_shift(u.scaled(k)) || !p.can_shift(u.scaled(-l)))
    throw std::invalid_argument("weak concavity shifts leave Delta_{d,d} at " + p.to_string());
  const long s = static_cast<long>(u.from.size());
  const long log2_const =
      static_cast<long>(k + l) * k * l * (s * (s - 1) / 2);  // (k+l)·k·l·C(|I|,2)
  Provenance prov;
  prov.family = Family::weak_concavity;
  prov.p = p;
  prov.I = u.from;
  prov.j = j;
  prov.k = k;
  prov.l = l;
  return MonomialInequality(Family::weak_concavity,
                            {{p.shifted(u.scaled(k)), l}, {p.shifted(u.scaled(-l)), k}},
                            {{p, static_cast<long>(k) + l}}, log2_const, std::move(prov));
}

MonomialInequality gen_simplex_concavity(int d, const std::vector<int>& indices,
                                         const std::vector<int>& shift, int level,
                                         const IndexPoint& p) {
  if (p.n() != d || p.degree() != d)
    throw std::invalid_argument("simplex concavity point must lie in Delta_{d,d}");
  if (level < 1 || level > d) throw std::invalid_argument("copy level out of range");
  if (static_cast<int>(shift.size()) != d)
    throw std::invalid_argument("copy shift must have d coordinates");
  long shift_sum = 0;
  for (int t : shift) {
    if (t < 0) throw std::invalid_argument("copy shift must be non-negative");
    shift_sum += t;
  }
  if (shift_sum != d - level)
    throw std::invalid_argument("copy shift coordinates must sum to d - k");
  std::vector<int> sorted(indices);
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("copy indices must be distinct");

  // Barycentric weights: c_j = p[i_j] - t[i_j]; off-support coordinates of p
  // must agree with the shift.
  std::vector<long> c(sorted.size());
  std::vector<bool> in_I(static_cast<std::size_t>(d), false);
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    const int idx = sorted[a];
    if (idx < 0 || idx >= d) throw std::invalid_argument("copy index out of range");
    in_I[static_cast<std::size_t>(idx)] = true;
    c[a] = p[idx] - shift[static_cast<std::size_t>(idx)];
    if (c[a] < 0) throw std::invalid_argument("point lies outside the copy: " + p.to_string());
  }
  for (int x = 0; x < d; ++x)
    if (!in_I[static_cast<std::size_t>(x)] && p[x] != shift[static_cast<std::size_t>(x)])
      throw std::invalid_argument("point lies outside the copy: " + p.to_string());
  long csum = std::accumulate(c.begin(), c.end(), 0L);
  if (csum != level) throw std::logic_error("barycentric weights do not sum to the level");
  if (std::count_if(c.begin(), c.end(), [&](long w) { return w == level; }) == 1)
    throw std::invalid_argument("point is a vertex of the copy: " + p.to_string());

  std::map<IndexPoint, long> lhs;
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    if (c[a] == 0) continue;
    std::vector<int> b(shift);
    b[static_cast<std::size_t>(sorted[a])] += level;
    lhs[IndexPoint(std::move(b), d)] += c[a];
  }
  Provenance prov;
  prov.family = Family::simplex_concavity;
  prov.p = p;
  prov.I = sorted;
  prov.shift = shift;
  prov.level = level;
  return MonomialInequality(Family::simplex_concavity, std::move(lhs),
                            {{p, static_cast<long>(level)}}, 0, std::move(prov));
}

std::vector<MonomialInequality> gen_double_square(int d) {
  if (d < 4) throw std::invalid_argument("gen_double_square needs d >= 4");
  Collector out;
  std::vector<std::vector<int>> pairs;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) pairs.push_back({a, b});
  for (std::size_t x = 0; x < pairs.size(); ++x) {
    for (std::size_t y = x + 1; y < pairs.size(); ++y) {
      const auto& I = pairs[x];
      const auto& J = pairs[y];
      if (I[0] == J[0] || I[0] == J[1] || I[1] == J[0] || I[1] == J[1]) continue;
      const Direction u = Direction::set_to_set(d, I, J);
      for (const IndexPoint& p : delta_index(d, d).points()) {
        if (!p.can_shift(u.coords) || !p.can_shift(u.negated().coords)) continue;
        Provenance prov;
        prov.family = Family::double_square;
        prov.p = p;
        prov.I = I;
        prov.J = J;
        out.add(MonomialInequality(Family::double_square,
                                   {{p.shifted(u.coords), 1}, {p.shifted(u.negated().coords), 1}},
                                   {{p, 2}}, 4, std::move(prov)));
      }
    }
  }
  return out.take();
}

FamilyCaps FamilyCaps::defaults(int d) {
  FamilyCaps caps;
  if (d >= 6) {
    caps.weakconc_max_kl_sum = 2;  // k = l = 1 only
    caps.gensquare_max_I = std::min(d - 2, d / 2);
    caps.max_instances = 50000;
  } else {
    caps = unlimited();
    caps.gensquare_max_I = d - 2;
  }
  return caps;
}

FamilyCaps FamilyCaps::unlimited() {
  FamilyCaps caps;
  caps.weakconc_max_kl_sum = 1 << 20;
  caps.gensquare_max_I = 1 << 20;
  caps.max_instances = 1L << 60;
  return caps;
}

std::vector<MonomialInequality> weak_concavity_instances(int d, const FamilyCaps& caps) {
  if (d < 2) throw std::invalid_argument("weak concavity instances need d >= 2");
  Collector out;
  // (k+l) ascending keeps the plain k = l = 1 relations first under caps.
  for (int kl = 2; kl <= caps.weakconc_max_kl_sum && kl <= 2 * d; ++kl) {
    for (int s = 1; s <= d - 1; ++s) {
      std::vector<int> I(static_cast<std::size_t>(s));
      std::function<void(int, int)> rec = [&](int start, int depth) {
        if (out.size() >= caps.max_instances) return;
        if (depth == s) {
          for (int j = 0; j < d; ++j) {
            if (std::count(I.begin(), I.end(), j)) continue;
            const Direction u = Direction::one_to_one(d, I, j);
            for (int k = 1; k < kl; ++k) {
              const int l = kl - k;
              for (const IndexPoint& p : delta_index(d, d).points()) {
                if (out.size() >= caps.max_instances) return;
                if (!p.can_shift(u.scaled(k)) || !p.can_shift(u.scaled(-l))) continue;
                out.add(gen_weak_concavity(d, I, j, k, l, p));
              }
            }
          }
          return;
        }
        for (int v = start; v < d; ++v) {
          I[static_cast<std::size_t>(depth)] = v;
          rec(v + 1, depth + 1);
        }
      };
      rec(0, 0);
    }
  }
  return out.take();
}

namespace {

// All non-negative integer vectors of length len summing to total.
std::vector<std::vector<int>> compositions(int len, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  std::function<void(int, int)> rec = [&](int slots, int rest) {
    if (slots == 1) {
      acc.push_back(rest);
      out.push_back(acc);
      acc.pop_back();
      return;
    }
    for (int c = rest; c >= 0; --c) {
      acc.push_back(c);
      rec(slots - 1, rest - c);
      acc.pop_back();
    }
  };
  rec(len, total);
  return out;
}

}  // namespace

std::vector<MonomialInequality> simplex_concavity_instances(int d, const FamilyCaps& caps) {
  if (d < 2) throw std::invalid_argument("simplex concavity instances need d >= 2");
  Collector out;
  // Copies with level 1 have no non-vertex points, so levels start at 2.
  for (int n = 2; n <= d; ++n) {
    std::vector<int> I(static_cast<std::size_t>(n));
    std::function<void(int, int)> pick = [&](int start, int depth) {
      if (out.size() >= caps.max_instances) return;
      if (depth == n) {
        for (int level = 2; level <= d; ++level) {
          for (const std::vector<int>& t : compositions(d, d - level)) {
            for (const IndexPoint& c : delta_index(n, level).points()) {
              if (out.size() >= caps.max_instances) return;
              if (c.max_entry() == level) continue;  // vertex of the copy
              std::vector<int> pc(t);
              for (int a = 0; a < n; ++a)
                pc[static_cast<std::size_t>(I[static_cast<std::size_t>(a)])] += c[a];
              out.add(gen_simplex_concavity(d, I, t, level, IndexPoint(std::move(pc), d)));
            }
          }
        }
        return;
      }
      for (int v = start; v < d; ++v) {
        I[static_cast<std::size_t>(depth)] = v;
        pick(v + 1, depth + 1);
      }
    };
    pick(0, 0);
  }
  return out.take();
}

std::vector<MonomialInequality> family_instances(Family f, int d, const FamilyCaps& caps) {
  switch (f) {
    case Family::af: return gen_af(d);
    case Family::square: return d >= 3 ? gen_square(d) : std::vector<MonomialInequality>{};
    case Family::generalized_square:
      return d >= 3 ? gen_generalized_square(d, std::min(caps.gensquare_max_I, d - 2))
                    : std::vector<MonomialInequality>{};
    case Family::weak_concavity: return weak_concavity_instances(d, caps);
    case Family::simplex_concavity: return simplex_concavity_instances(d, caps);
    case Family::double_square:
      return d >= 4 ? gen_double_square(d) : std::vector<MonomialInequality>{};
  }
  throw std::logic_error("unreachable family tag");
}

CheckReport check_config(const Configuration& c, const std::vector<MonomialInequality>& ineqs) {
  if (c.scale() != Scale::multiplicative)
    throw std::invalid_argument("check_config needs a multiplicative configuration");
  if (!c.strictly_positive())
    throw std::invalid_argument("check_config needs a strictly positive configuration");
  CheckReport report;
  for (const MonomialInequality& mi : ineqs) {
    if (mi.n() != c.n() || mi.degree() != c.d())
      throw std::invalid_argument("inequality domain does not match the configuration");
    auto ev = mi.evaluate(c);
    ++report.total;
    if (ev.satisfied)
      ++report.satisfied;
    else
      report.violations.push_back({mi, ev.lhs_value, ev.rhs_value});
  }
  return report;
}

bool two_body_sequence_log_concave(const Configuration& c) {
  if (c.n() != 2 || c.scale() != Scale::multiplicative)
    throw std::invalid_argument("two-body check needs a multiplicative pair configuration");
  const int d = c.d();
  auto value = [&](int i) {
    return c.at(IndexPoint({i, d - i}, d));
  };
  for (int i = 1; i <= d - 1; ++i)
    if (value(i) * value(i) < value(i + 1) * value(i - 1)) return false;
  return true;
}

WeakConcaveReport verify_weak_concave_sequence(const std::vector<Rat>& r, const Rat& C) {
  if (r.size() < 2) throw std::invalid_argument("sequence needs length n+1 >= 2");
  if (sgn(C) < 0) throw std::invalid_argument("constant C must be non-negative");
  for (const Rat& v : r)
    if (sgn(v) < 0) throw std::invalid_argument("sequence terms must be non-negative");
  const int n = static_cast<int>(r.size()) - 1;
  WeakConcaveReport report;
  report.hypothesis_holds = true;
  for (int i = 1; i < n; ++i) {
    if (r[i - 1] / 2 + r[i + 1] / 2 > r[i] + C) {
      report.hypothesis_holds = false;
      report.hypothesis_violation_index = i;
      return report;
    }
  }
  auto expect = [&](bool ok, const std::string& label) {
    if (!ok) report.conclusion_failures.push_back(label);
  };
  // Pair averaging across any window [i, j].
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j)
      expect(r[i - 1] / 2 + r[j + 1] / 2 <= r[i] / 2 + r[j] / 2 + Rat(j - i + 1) * C,
             "window (" + std::to_string(i) + "," + std::to_string(j) + ")");
  // Endpoint mixing at the second term.
  expect(Rat(n - 1, n) * r[0] + Rat(1, n) * r[static_cast<std::size_t>(n)] <= r[1] + Rat(n - 1) * C,
         "endpoint mix k=1");
  // Endpoint mixing at every k.
  for (int k = 1; k <= n; ++k)
    expect(Rat(n - k, n) * r[0] + Rat(k, n) * r[static_cast<std::size_t>(n)] <=
               r[static_cast<std::size_t>(k)] + Rat(k) * Rat(n - k) * C,
           "endpoint mix k=" + std::to_string(k));
  // Symmetric two-sided form around every interior position.
  for (int p = 0; p <= n; ++p)
    for (int l = 0; l <= p; ++l)
      for (int k = 0; k <= n - p; ++k) {
        if (k == 0 && l == 0) continue;
        expect(Rat(k, k + l) * r[static_cast<std::size_t>(p - l)] +
                       Rat(l, k + l) * r[static_cast<std::size_t>(p + k)] <=
                   r[static_cast<std::size_t>(p)] + Rat(k) * Rat(l) * C,
               "two-sided p=" + std::to_string(p) + " k=" + std::to_string(k) +
                   " l=" + std::to_string(l));
      }
  report.conclusions_hold = report.conclusion_failures.empty();
  if (!report.conclusions_hold)
    throw std::logic_error("derived weak-concavity comparison failed: " +
                           report.conclusion_failures.front());
  return report;
}

}  // namespace mixvol

#include "mixvol/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mixvol {

namespace {

// --- exact double description over homogeneous coordinates ---------------
//
// State is a lineality basis plus a list of extreme rays, each ray carrying
// the set of already-processed constraints it saturates. Standard method:
// a constraint that cuts the lineality space projects everything along one
// lineality vector; otherwise rays are split by sign and adjacent +/- pairs
// are combined on the new hyperplane.

struct DdRay {
  std::vector<Rat> v;
  std::vector<bool> active;
};

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat out(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) out += a[i] * b[i];
  return out;
}

// Positive scaling to a primitive integer vector.
void make_primitive(std::vector<Rat>& v) {
  Int lcm_den(1);
  for (const Rat& x : v)
    if (sgn(x) != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  Int g(0);
  std::vector<Int> nums(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    nums[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nums[i].get_mpz_t());
  }
  if (sgn(g) == 0) return;  // zero vector
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rat(nums[i] / g);
}

void orient_first_nonzero_positive(std::vector<Rat>& v) {
  for (const Rat& x : v) {
    if (sgn(x) > 0) return;
    if (sgn(x) < 0) {
      for (Rat& y : v) y = -y;
      return;
    }
  }
}

struct DdResult {
  std::vector<std::vector<Rat>> lineality;
  std::vector<DdRay> rays;
};

bool subset_active(const std::vector<bool>& small, const std::vector<bool>& big) {
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] && !big[i]) return false;
  return true;
}

DdResult double_description(int dim, const std::vector<std::pair<std::vector<Rat>, bool>>& rows) {
  DdResult st;
  st.lineality.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    std::vector<Rat> e(static_cast<std::size_t>(dim), Rat(0));
    e[static_cast<std::size_t>(i)] = 1;
    st.lineality.push_back(std::move(e));
  }
  const std::size_t total = rows.size();

  for (std::size_t idx = 0; idx < total; ++idx) {
    const auto& [a, is_equality] = rows[idx];

    // A lineality vector not orthogonal to the constraint?
    std::size_t pivot = st.lineality.size();
    Rat pivot_dot(0);
    for (std::size_t li = 0; li < st.lineality.size(); ++li) {
      Rat s = dot(a, st.lineality[li]);
      if (sgn(s) != 0) {
        pivot = li;
        pivot_dot = s;
        break;
      }
    }

    if (pivot < st.lineality.size()) {
      std::vector<Rat> l0 = st.lineality[pivot];
      if (sgn(pivot_dot) < 0) {
        for (Rat& x : l0) x = -x;
        pivot_dot = -pivot_dot;
      }
      std::vector<std::vector<Rat>> kept;
      for (std::size_t li = 0; li < st.lineality.size(); ++li) {
        if (li == pivot) continue;
        Rat s = dot(a, st.lineality[li]);
        std::vector<Rat> l = st.lineality[li];
        if (sgn(s) != 0) {
          const Rat f = s / pivot_dot;
          for (std::size_t c = 0; c < l.size(); ++c) l[c] -= f * l0[c];
        }
        make_primitive(l);
        orient_first_nonzero_positive(l);
        kept.push_back(std::move(l));
      }
      st.lineality = std::move(kept);
      for (DdRay& r : st.rays) {
        Rat s = dot(a, r.v);
        if (sgn(s) != 0) {
          const Rat f = s / pivot_dot;
          for (std::size_t c = 0; c < r.v.size(); ++c) r.v[c] -= f * l0[c];
          make_primitive(r.v);
        }
        r.active.resize(total, false);
        r.active[idx] = true;
      }
      if (!is_equality) {
        DdRay nr;
        nr.v = std::move(l0);
        make_primitive(nr.v);
        nr.active.assign(total, false);
        for (std::size_t k = 0; k < idx; ++k) nr.active[k] = true;
        st.rays.push_back(std::move(nr));
      }
      continue;
    }

    // Split rays by the sign of a.r.
    std::vector<int> sign(st.rays.size());
    std::vector<Rat> val(st.rays.size());
    for (std::size_t ri = 0; ri < st.rays.size(); ++ri) {
      val[ri] = dot(a, st.rays[ri].v);
      sign[ri] = sgn(val[ri]);
    }

    std::vector<DdRay> next;
    for (std::size_t ri = 0; ri < st.rays.size(); ++ri) {
      const bool keep = sign[ri] == 0 || (!is_equality && sign[ri] > 0);
      if (!keep) continue;
      DdRay r = st.rays[ri];
      r.active.resize(total, false);
      if (sign[ri] == 0) r.active[idx] = true;
      next.push_back(std::move(r));
    }
    for (std::size_t pi = 0; pi < st.rays.size(); ++pi) {
      if (sign[pi] <= 0) continue;
      for (std::size_t ni = 0; ni < st.rays.size(); ++ni) {
        if (sign[ni] >= 0) continue;
        // Combinatorial adjacency: no third ray saturates everything the
        // pair saturates in common.
        std::vector<bool> common(total, false);
        for (std::size_t k = 0; k < idx; ++k)
          common[k] = st.rays[pi].active[k] && st.rays[ni].active[k];
        bool adjacent = true;
        for (std::size_t ti = 0; ti < st.rays.size() && adjacent; ++ti) {
          if (ti == pi || ti == ni) continue;
          if (subset_active(common, st.rays[ti].active)) adjacent = false;
        }
        if (!adjacent) continue;
        DdRay nr;
        nr.v.assign(static_cast<std::size_t>(dim), Rat(0));
        for (int c = 0; c < dim; ++c)
          nr.v[static_cast<std::size_t>(c)] =
              val[pi] * st.rays[ni].v[static_cast<std::size_t>(c)] -
              val[ni] * st.rays[pi].v[static_cast<std::size_t>(c)];
        make_primitive(nr.v);
        bool zero = std::all_of(nr.v.begin(), nr.v.end(), [](const Rat& x) { return sgn(x) == 0; });
        if (zero) continue;
        nr.active = common;
        nr.active[idx] = true;
        next.push_back(std::move(nr));
      }
    }
    st.rays = std::move(next);
  }
  return st;
}

std::vector<Rat> dense_row(const DeltaIndex& delta, const std::map<IndexPoint, Rat>& coeffs,
                           const Rat& first) {
  std::vector<Rat> row(static_cast<std::size_t>(delta.size() + 1), Rat(0));
  row[0] = first;
  for (const auto& [p, c] : coeffs) row[static_cast<std::size_t>(delta.position(p) + 1)] = c;
  return row;
}

bool lex_less(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

HPolyhedron build_af_cone(int d) {
  if (d < 2) throw std::invalid_argument("build_af_cone needs d >= 2");
  HPolyhedron h;
  h.n = d;
  h.d = d;
  for (int i = 0; i < d; ++i) {
    LinearInequality corner;
    corner.coeffs[IndexPoint::corner(d, i)] = Rat(-1);
    corner.constant = Rat(0);
    h.inequalities.push_back(std::move(corner));
  }
  for (const MonomialInequality& mi : gen_af(d)) h.inequalities.push_back(linearize(mi));
  return h;
}

HPolyhedron slice(HPolyhedron cone, const Rat& level) {
  LinearEquation eq;
  eq.coeffs[IndexPoint::ones(cone.d)] = Rat(1);
  eq.rhs = level;
  cone.equalities.push_back(std::move(eq));
  return cone;
}

VertexSet enumerate_vertices(const HPolyhedron& h) {
  const DeltaIndex& delta = delta_index(h.n, h.d);
  const int dim = delta.size() + 1;  // homogenizing coordinate y0 first

  std::vector<std::pair<std::vector<Rat>, bool>> rows;
  {
    std::vector<Rat> y0(static_cast<std::size_t>(dim), Rat(0));
    y0[0] = 1;
    rows.emplace_back(std::move(y0), false);
  }
  for (const LinearEquation& eq : h.equalities) {
    // e.x = f  ->  f*y0 - e.x = 0
    std::map<IndexPoint, Rat> neg;
    for (const auto& [p, c] : eq.coeffs) neg[p] = -c;
    rows.emplace_back(dense_row(delta, neg, eq.rhs), true);
  }
  std::vector<std::vector<Rat>> ineq_rows;
  for (const LinearInequality& li : h.inequalities) {
    // a.x <= b  ->  b*y0 - a.x >= 0
    std::map<IndexPoint, Rat> neg;
    for (const auto& [p, c] : li.coeffs) neg[p] = -c;
    ineq_rows.push_back(dense_row(delta, neg, li.constant));
  }
  std::sort(ineq_rows.begin(), ineq_rows.end(), lex_less);
  for (auto& r : ineq_rows) rows.emplace_back(std::move(r), false);

  DdResult dd = double_description(dim, rows);

  VertexSet out;
  out.pointed = dd.lineality.empty();
  // Feasible iff some generator has a positive homogenizing coordinate
  // (lineality vectors always have y0 = 0 because of the y0 >= 0 row).
  out.feasible = std::any_of(dd.rays.begin(), dd.rays.end(),
                             [](const DdRay& r) { return sgn(r.v[0]) > 0; });
  if (!out.feasible) return out;

  for (const DdRay& r : dd.rays) {
    if (sgn(r.v[0]) > 0) {
      std::vector<Rat> x(static_cast<std::size_t>(delta.size()));
      for (int i = 0; i < delta.size(); ++i) {
        x[static_cast<std::size_t>(i)] = r.v[static_cast<std::size_t>(i + 1)] / r.v[0];
        x[static_cast<std::size_t>(i)].canonicalize();
      }
      out.vertices.emplace_back(h.n, h.d, Scale::logarithmic, std::move(x));
    } else {
      std::vector<Rat> x(r.v.begin() + 1, r.v.end());
      out.rays.emplace_back(h.n, h.d, Scale::logarithmic, std::move(x));
    }
  }
  for (const auto& l : dd.lineality) {
    std::vector<Rat> x(l.begin() + 1, l.end());
    out.lineality.emplace_back(h.n, h.d, Scale::logarithmic, std::move(x));
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  std::sort(out.rays.begin(), out.rays.end());
  std::sort(out.lineality.begin(), out.lineality.end());
  return out;
}

std::vector<Orbit> orbit_decomposition(const VertexSet& vs, int d) {
  for (const Configuration& v : vs.vertices)
    if (v.n() != d)
      throw std::invalid_argument("orbit decomposition needs configurations over Delta_{d,d}");
  const auto perms = Permutation::symmetric_group(d);
  std::set<Configuration> pool(vs.vertices.begin(), vs.vertices.end());
  std::vector<Orbit> out;
  std::set<Configuration> done;
  for (const Configuration& v : vs.vertices) {
    if (done.count(v)) continue;
    std::set<Configuration> members;
    for (const Permutation& sigma : perms) {
      Configuration moved = act(sigma, v);
      if (pool.count(moved)) members.insert(std::move(moved));
    }
    Orbit orbit{*members.begin(), {members.begin(), members.end()}};
    for (const Configuration& mm : orbit.members) done.insert(mm);
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(), [](const Orbit& a, const Orbit& b) {
    return a.representative < b.representative;
  });
  return out;
}

std::vector<Configuration> dominance_maxima(const VertexSet& vs) {
  std::vector<Configuration> out;
  for (std::size_t i = 0; i < vs.vertices.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < vs.vertices.size() && maximal; ++j) {
      if (i == j) continue;
      if (dominates(vs.vertices[i], vs.vertices[j]) && !(vs.vertices[i] == vs.vertices[j]))
        maximal = false;
    }
    if (maximal) out.push_back(vs.vertices[i]);
  }
  return out;
}

const Af3Reference& af3_reference() {
  static const Af3Reference ref = [] {
    Af3Reference r;
    auto config = [](std::vector<std::pair<std::vector<int>, Rat>> support) {
      Configuration c(3, 3, Scale::logarithmic);
      for (auto& [pt, val] : support) c.set(IndexPoint(pt, 3), val);
      return c;
    };
    r.generators = {
        config({{{1, 1, 1}, 1}}),
        config({{{2, 1, 0}, 2}, {{1, 2, 0}, 1}, {{1, 1, 1}, 1}}),
        config({{{2, 1, 0}, 2}, {{1, 2, 0}, 2}, {{1, 1, 1}, 1}}),
        config({{{2, 1, 0}, 2}, {{1, 2, 0}, 1}, {{2, 0, 1}, Rat(1, 2)},
                {{1, 0, 2}, 1}, {{1, 1, 1}, 1}}),
        config({{{2, 1, 0}, 2}, {{1, 2, 0}, 1}, {{2, 0, 1}, 2},
                {{1, 0, 2}, 1}, {{1, 1, 1}, 1}}),
        config({{{2, 1, 0}, 2}, {{1, 2, 0}, 1}, {{2, 0, 1}, 2},
                {{1, 0, 2}, 1}, {{3, 0, 0}, 3}, {{1, 1, 1}, 1}}),
        config({{{2, 1, 0}, Rat(2, 3)}, {{1, 2, 0}, Rat(4, 3)}, {{2, 0, 1}, Rat(4, 3)},
                {{1, 0, 2}, Rat(2, 3)}, {{0, 2, 1}, Rat(2, 3)}, {{0, 1, 2}, Rat(4, 3)},
                {{1, 1, 1}, 1}}),
    };
    r.orbit_sizes = {1, 6, 3, 6, 3, 3, 2};
    return r;
  }();
  return ref;
}

HPolyhedron polytope_hrep(const std::vector<Configuration>& vertices,
                          const std::vector<Configuration>& rays) {
  if (vertices.empty()) throw std::invalid_argument("polytope_hrep needs at least one vertex");
  const int n = vertices.front().n();
  const int d = vertices.front().d();
  const DeltaIndex& delta = delta_index(n, d);
  const int dim = delta.size() + 1;  // z = (c0, c)

  std::vector<std::pair<std::vector<Rat>, bool>> rows;
  for (const Configuration& v : vertices) {
    std::vector<Rat> row(static_cast<std::size_t>(dim), Rat(0));
    row[0] = 1;
    for (int i = 0; i < delta.size(); ++i) row[static_cast<std::size_t>(i + 1)] = -v.at_pos(i);
    rows.emplace_back(std::move(row), false);
  }
  for (const Configuration& r : rays) {
    std::vector<Rat> row(static_cast<std::size_t>(dim), Rat(0));
    for (int i = 0; i < delta.size(); ++i) row[static_cast<std::size_t>(i + 1)] = -r.at_pos(i);
    rows.emplace_back(std::move(row), false);
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });

  DdResult dd = double_description(dim, rows);

  HPolyhedron out;
  out.n = n;
  out.d = d;
  for (const auto& l : dd.lineality) {
    bool flat = true;
    for (int i = 0; i < delta.size(); ++i)
      if (sgn(l[static_cast<std::size_t>(i + 1)]) != 0) flat = false;
    if (flat) continue;
    LinearEquation eq;
    for (int i = 0; i < delta.size(); ++i)
      if (sgn(l[static_cast<std::size_t>(i + 1)]) != 0)
        eq.coeffs[delta.point(i)] = l[static_cast<std::size_t>(i + 1)];
    eq.rhs = l[0];
    out.equalities.push_back(std::move(eq));
  }
  for (const DdRay& r : dd.rays) {
    bool flat = true;
    for (int i = 0; i < delta.size(); ++i)
      if (sgn(r.v[static_cast<std::size_t>(i + 1)]) != 0) flat = false;
    if (flat) continue;  // the trivial 0.x <= c0 generator
    LinearInequality li;
    for (int i = 0; i < delta.size(); ++i)
      if (sgn(r.v[static_cast<std::size_t>(i + 1)]) != 0)
        li.coeffs[delta.point(i)] = r.v[static_cast<std::size_t>(i + 1)];
    li.constant = r.v[0];
    out.inequalities.push_back(std::move(li));
  }
  return out;
}

}  // namespace mixvol

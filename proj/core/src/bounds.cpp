#include "mixvol/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace mixvol {

namespace {

bool non_increasing(const IndexPoint& p) {
  for (int i = 0; i + 1 < p.n(); ++i)
    if (p[i] < p[i + 1]) return false;
  return true;
}

long half_choose_2(int d) {
  const long h = d / 2;
  return h * (h - 1) / 2;
}

}  // namespace

AdmissiblePath admissible_path(const IndexPoint& p) {
  if (!non_increasing(p))
    throw std::invalid_argument("admissible paths are built for sorted targets; got " +
                                p.to_string());
  const int d = p.n();
  if (p.degree() != d) throw std::invalid_argument("target must lie in Delta_{d,d}");

  // Walk down from p to (1,...,1): peel one unit off the maximal leading
  // block and park it as ones after the last positive entry.
  std::vector<IndexPoint> descending{p};
  std::vector<Direction> steps_down;
  IndexPoint cur = p;
  while (cur.max_entry() > 1) {
    int block = 1;
    while (block < d && cur[block] == cur[0]) ++block;
    int last = d - 1;
    while (cur[last] == 0) --last;
    std::vector<int> coords(cur.coords());
    std::vector<int> I, J;
    for (int i = 0; i < block; ++i) {
      coords[static_cast<std::size_t>(i)] -= 1;
      I.push_back(i);
    }
    for (int j = last + 1; j <= last + block; ++j) {
      if (j >= d) throw std::logic_error("admissible step leaves the simplex");
      coords[static_cast<std::size_t>(j)] += 1;
      J.push_back(j);
    }
    IndexPoint prev(coords, d);
    if (!non_increasing(prev)) throw std::logic_error("admissible predecessor is not sorted");
    steps_down.push_back(Direction::set_to_set(d, I, J));
    descending.push_back(prev);
    cur = prev;
  }

  AdmissiblePath path;
  path.points.assign(descending.rbegin(), descending.rend());
  path.steps.assign(steps_down.rbegin(), steps_down.rend());
  for (std::size_t i = 0; i < path.points.size(); ++i)
    if (path.points[i].max_entry() != static_cast<int>(i) + 1)
      throw std::logic_error("path point has wrong maximum");
  return path;
}

StepBound step_bound(const IndexPoint& a, const Direction& v) {
  if (v.kind != Direction::Kind::set_to_set || v.from.size() != v.to.size())
    throw std::invalid_argument("step bounds need set-to-set directions with |I| = |J|");
  if (a.n() != static_cast<int>(v.coords.size()))
    throw std::invalid_argument("direction dimension mismatch");
  if (!a.can_shift(v.coords) || !a.can_shift(v.negated().coords))
    throw std::invalid_argument("step leaves the simplex at " + a.to_string());
  int mu = a[v.from.front()];
  for (int i : v.from) mu = std::min(mu, a[i]);
  if (mu < 1) throw std::invalid_argument("step from a zero entry has no bound");
  StepBound out;
  out.mu = Rat(mu);
  out.factor = Rat(mu + 1, mu);
  out.factor.canonicalize();
  out.additive = Rat(mu + 1) * Rat(half_choose_2(a.n()));
  return out;
}

BoundCertificate certify_sq_bound(const IndexPoint& p) {
  const int d = p.n();
  if (p.degree() != d) throw std::invalid_argument("target must lie in Delta_{d,d}");

  BoundCertificate cert{p, {}, Rat(1), Rat(0), {}};
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return p[a] > p[b]; });
  cert.sort_permutation = perm;
  std::vector<int> sorted_coords;
  sorted_coords.reserve(static_cast<std::size_t>(d));
  for (int i : perm) sorted_coords.push_back(p[i]);
  const IndexPoint sorted(sorted_coords, d);

  const AdmissiblePath path = admissible_path(sorted);
  cert.slope = 1;
  cert.constant = 0;
  for (std::size_t s = 0; s < path.steps.size(); ++s) {
    const StepBound sb = step_bound(path.points[s], path.steps[s]);
    cert.slope *= sb.factor;
    cert.constant = sb.factor * cert.constant + sb.additive;
    cert.chain.push_back({path.points[s], path.steps[s].from, path.steps[s].to, sb.mu});
  }
  const long mx = sorted.max_entry();
  if (cert.slope != Rat(mx) ||
      cert.constant != Rat(mx) * Rat(mx - 1) * Rat(half_choose_2(d)))
    throw std::logic_error("step chain does not telescope to the closed form at " + p.to_string());
  return cert;
}

Int af_point_bound(const IndexPoint& p) {
  Int out(1);
  for (int c : p.coords())
    if (c > 0) out *= c;
  return out;
}

std::pair<int, int> three_two_split(int d) {
  if (d < 2) throw std::invalid_argument("split needs d >= 2");
  for (int r = 0; r <= 2; ++r) {
    const int rest = d - 2 * r;
    if (rest >= 0 && rest % 3 == 0) return {rest / 3, r};
  }
  throw std::logic_error("no 3q + 2r decomposition");
}

MinkBoundForm mink_bound_form(int d, BoundMethod method) {
  if (d < 2) throw std::invalid_argument("bound forms need d >= 2");
  if (d > 64) throw std::invalid_argument("dimension too large for closed-form bounds");
  MinkBoundForm form;
  if (method == BoundMethod::af) {
    const auto [q, r] = three_two_split(d);
    Int exp = int_pow(Int(3), static_cast<unsigned long>(q)) *
              int_pow(Int(2), static_cast<unsigned long>(r));
    if (!exp.fits_slong_p()) throw std::invalid_argument("exponent overflow");
    form.exponent = exp.get_si();
    form.coefficient = int_pow(Int(d), static_cast<unsigned long>(d));
  } else {
    form.exponent = d;
    const long two_exp = static_cast<long>(d) * (d - 1) * half_choose_2(d);
    form.coefficient = int_pow(Int(2), static_cast<unsigned long>(two_exp)) *
                       int_pow(Int(d), static_cast<unsigned long>(d));
  }
  return form;
}

Rat mink_bound(int d, const Rat& m, BoundMethod method) {
  if (m < 1) throw std::invalid_argument("mink bounds are stated for m >= 1");
  const MinkBoundForm form = mink_bound_form(d, method);
  return Rat(form.coefficient) * rat_pow(m, form.exponent);
}

Configuration counterexample_config(int d) {
  if (d < 3) throw std::invalid_argument("the counterexample needs d >= 3");
  Configuration c(d, d, Scale::multiplicative,
                  std::vector<Rat>(static_cast<std::size_t>(delta_index(d, d).size()), Rat(1)));
  c.set(IndexPoint::ones(d), Rat(3));
  return c;
}

}  // namespace mixvol

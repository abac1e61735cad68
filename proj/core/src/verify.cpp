#include "mixvol/verify.hpp"

#include "mixvol/geometry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mixvol {

namespace {

// Expansion of (m + a)^e.
SparsePolynomial shifted_power(long a, unsigned e) {
  SparsePolynomial out;
  for (unsigned k = 0; k <= e; ++k)
    out.add_term(Rat(static_cast<long>(k)),
                 Rat(binomial(e, k)) * rat_pow(Rat(a), static_cast<long>(e - k)));
  return out;
}

const Orbit& orbit_containing(const std::vector<Orbit>& orbits, const Configuration& c) {
  for (const Orbit& orbit : orbits)
    for (const Configuration& member : orbit.members)
      if (member == c) return orbit;
  throw std::logic_error("expected configuration is not a vertex orbit member");
}

}  // namespace

Json VerifyReport::to_json() const {
  Json steps_json = Json::array();
  for (const ProofStep& s : steps)
    steps_json.push_back(Json{{"statement", s.statement}, {"kind", s.kind}, {"data", s.data}});
  Json maxima_json = Json::object();
  for (const auto& [ell, poly] : maxima)
    maxima_json[std::to_string(ell)] = poly.to_string();
  return Json{{"ok", ok}, {"maxima", std::move(maxima_json)}, {"steps", std::move(steps_json)}};
}

VerifyReport verify_dim3() {
  VerifyReport report;
  try {
    // Vertex enumeration and orbit structure of the d = 3 polytope.
    const VertexSet vs = enumerate_vertices(slice(build_af_cone(3), Rat(1)));
    if (!vs.feasible || !vs.pointed || !vs.rays.empty())
      throw std::logic_error("the d=3 polytope must be a nonempty bounded polytope");
    if (vs.vertices.size() != 24)
      throw std::logic_error("expected 24 vertices, found " + std::to_string(vs.vertices.size()));
    const std::vector<Orbit> orbits = orbit_decomposition(vs, 3);
    if (orbits.size() != 7)
      throw std::logic_error("expected 7 orbits, found " + std::to_string(orbits.size()));
    const Af3Reference& ref = af3_reference();
    std::set<const Orbit*> matched;
    Json orbit_data = Json::array();
    for (std::size_t i = 0; i < ref.generators.size(); ++i) {
      const Orbit& orbit = orbit_containing(orbits, ref.generators[i]);
      if (static_cast<int>(orbit.members.size()) != ref.orbit_sizes[i])
        throw std::logic_error("orbit size mismatch for generator " + std::to_string(i + 1));
      if (!matched.insert(&orbit).second)
        throw std::logic_error("two reference generators landed in one orbit");
      orbit_data.push_back(Json{{"generator", json_of(ref.generators[i])},
                                {"orbit_size", orbit.members.size()}});
    }
    report.steps.push_back({"24 vertices split into 7 orbits matching the reference generators",
                            "vertex-list match",
                            Json{{"vertices", json_of_configurations(vs.vertices)},
                                 {"orbits", std::move(orbit_data)}}});

    // Dominance removes all but the orbits of generators 3, 6 and 7.
    const Configuration &v1 = ref.generators[0], &v2 = ref.generators[1],
                        &v3 = ref.generators[2], &v4 = ref.generators[3],
                        &v5 = ref.generators[4], &v6 = ref.generators[5],
                        &v7 = ref.generators[6];
    if (!(dominates(v1, v2) && dominates(v2, v3) && dominates(v4, v5) && dominates(v5, v6)))
      throw std::logic_error("expected dominance chains between orbit generators fail");
    const std::vector<Configuration> maxima = dominance_maxima(vs);
    std::set<Configuration> expected;
    for (const Configuration* g : {&v3, &v6, &v7})
      for (const Configuration& member : orbit_containing(orbits, *g).members)
        expected.insert(member);
    if (std::set<Configuration>(maxima.begin(), maxima.end()) != expected)
      throw std::logic_error("dominance maxima are not the three expected orbits");
    report.steps.push_back(
        {"component-wise maxima are the orbits of generators 3, 6 and 7", "dominance",
         Json{{"maxima", json_of_configurations(maxima)}}});

    // Prefix length 1: exact LP over the normalized polytope.
    const AfBoundResult lp = max_over_af(3, IndexPoint({3, 0, 0}, 3));
    if (lp.value != 3) throw std::logic_error("prefix-1 optimum is not 3");
    report.maxima[1] = SparsePolynomial::monomial(Rat(1), Rat(3));
    report.steps.push_back({"max of the first coordinate volume is m^3", "LP",
                            Json{{"certificate", json_of(lp.certificate)}}});

    // Prefix length 2: orbit maxima and certified comparisons.
    const auto& members3 = orbit_containing(orbits, v3).members;
    const auto& members6 = orbit_containing(orbits, v6).members;
    const auto& members7 = orbit_containing(orbits, v7).members;
    const SparsePolynomial phi3 = orbit_max_objective(members3, 2).poly;
    const SparsePolynomial phi6 = orbit_max_objective(members6, 2).poly;
    const SparsePolynomial phi7 = orbit_max_objective(members7, 2).poly;
    const SparsePolynomial cube_diff = (phi6 - phi3).substitute_shift_power(1);
    if (!(cube_diff == SparsePolynomial::monomial(Rat(1), Rat(3))))
      throw std::logic_error("phi6 - phi3 after m -> 1+x is not x^3; got " +
                             cube_diff.to_string());
    if (!certified_ge(phi3, phi7) || !certified_ge(phi6, phi7))
      throw std::logic_error("phi7 is not certified below phi3 and phi6");
    if (!(phi6 == shifted_power(1, 3)))
      throw std::logic_error("prefix-2 maximum is not (m+1)^3; got " + phi6.to_string());
    report.maxima[2] = phi6;
    report.steps.push_back(
        {"max of the two-body sum volume is (m+1)^3", "shift-power nonneg",
         Json{{"phi3", phi3.to_string()},
              {"phi6", phi6.to_string()},
              {"phi7", phi7.to_string()},
              {"phi6_minus_phi3_shifted", cube_diff.to_string()}}});

    // Prefix length 3: the objective is permutation-invariant, so compare
    // the three representatives directly.
    for (const auto* members : {&members3, &members6, &members7})
      for (const Configuration& member : *members)
        if (!(eval_objective(member, 3) == eval_objective(members->front(), 3)))
          throw std::logic_error("full-sum objective is not orbit-invariant");
    const SparsePolynomial f3 = eval_objective(members3.front(), 3);
    const SparsePolynomial f6 = eval_objective(members6.front(), 3);
    const SparsePolynomial f7 = eval_objective(members7.front(), 3);
    if (!certified_ge(f6, f3) || !certified_ge(f6, f7))
      throw std::logic_error("the generator-6 orbit does not dominate for the full sum");
    if (!(f6 == shifted_power(2, 3)))
      throw std::logic_error("prefix-3 maximum is not (m+2)^3; got " + f6.to_string());
    report.maxima[3] = f6;
    report.steps.push_back(
        {"max of the three-body sum volume is (m+2)^3", "shift-power nonneg",
         Json{{"f3", f3.to_string()},
              {"f6", f6.to_string()},
              {"f7", f7.to_string()},
              {"f6_minus_f7_L", (f6 - f7).exponent_denominator_lcm()}}});

    // Attainment witness at m = 2: the tuple (2S, S, S).
    const BodyTuple witness = extremal_tuple(3, 2, 3);
    if (mixed_volume(witness) != 2)
      throw std::logic_error("witness tuple does not have mixed volume 2");
    Json witness_data{{"mixed_volume", "2"}};
    for (int ell = 1; ell <= 3; ++ell) {
      BodyTuple prefix;
      prefix.bodies.assign(witness.bodies.begin(), witness.bodies.begin() + ell);
      VPolytope sum = prefix.bodies.front();
      for (int i = 1; i < ell; ++i) sum = minkowski_sum(sum, prefix.bodies[static_cast<std::size_t>(i)]);
      const Rat vol = normalized_volume(sum);
      const Rat expected_vol = report.maxima[ell].eval_at_power(Rat(2), 1);
      if (vol != expected_vol)
        throw std::logic_error("witness volume mismatch at prefix " + std::to_string(ell));
      witness_data["prefix_" + std::to_string(ell)] = rat_to_string(vol);
    }
    report.steps.push_back({"the tuple (2S, S, S) attains all three maxima at m = 2", "witness",
                            std::move(witness_data)});

    report.ok = true;
  } catch (const std::exception& e) {
    report.ok = false;
    report.steps.push_back({e.what(), "failure", Json::object()});
  }
  return report;
}

VerifyReport verify_dim2() {
  VerifyReport report;
  try {
    const VertexSet vs = enumerate_vertices(slice(build_af_cone(2), Rat(1)));
    if (!vs.feasible || !vs.pointed || !vs.rays.empty())
      throw std::logic_error("the d=2 polytope must be a nonempty bounded polytope");
    if (vs.vertices.size() != 3)
      throw std::logic_error("expected 3 vertices, found " + std::to_string(vs.vertices.size()));
    auto config2 = [](int a, int b, int c) {
      Configuration v(2, 2, Scale::logarithmic);
      v.set(IndexPoint({2, 0}, 2), Rat(a));
      v.set(IndexPoint({1, 1}, 2), Rat(b));
      v.set(IndexPoint({0, 2}, 2), Rat(c));
      return v;
    };
    const Configuration center = config2(0, 1, 0);
    const Configuration left = config2(2, 1, 0);
    const Configuration right = config2(0, 1, 2);
    const std::set<Configuration> expected{center, left, right};
    if (std::set<Configuration>(vs.vertices.begin(), vs.vertices.end()) != expected)
      throw std::logic_error("unexpected vertex set for d=2");
    const std::vector<Orbit> orbits = orbit_decomposition(vs, 2);
    if (orbits.size() != 2) throw std::logic_error("expected 2 orbits for d=2");
    report.steps.push_back({"3 vertices in 2 orbits", "vertex-list match",
                            Json{{"vertices", json_of_configurations(vs.vertices)}}});

    const std::vector<Configuration> maxima = dominance_maxima(vs);
    if (std::set<Configuration>(maxima.begin(), maxima.end()) !=
        std::set<Configuration>{left, right})
      throw std::logic_error("dominance maxima for d=2 are not the two-point orbit");
    report.steps.push_back({"the centered vertex is dominated", "dominance",
                            Json{{"maxima", json_of_configurations(maxima)}}});

    const AfBoundResult lp = max_over_af(2, IndexPoint({2, 0}, 2));
    if (lp.value != 2) throw std::logic_error("prefix-1 optimum is not 2");
    report.maxima[1] = SparsePolynomial::monomial(Rat(1), Rat(2));
    report.steps.push_back({"max of the first body volume is m^2", "LP",
                            Json{{"certificate", json_of(lp.certificate)}}});

    const OrbitMax om = orbit_max_objective({left, right}, 2);
    if (!(om.poly == shifted_power(1, 2)))
      throw std::logic_error("prefix-2 maximum is not (m+1)^2; got " + om.poly.to_string());
    if (!certified_ge(om.poly, eval_objective(center, 2)))
      throw std::logic_error("(m+1)^2 is not certified above the dominated vertex value");
    report.maxima[2] = om.poly;
    report.steps.push_back({"max of the two-body sum volume is (m+1)^2", "shift-power nonneg",
                            Json{{"phi", om.poly.to_string()}}});

    // Witness: the pair (mS, S) sits on the maximizing vertex ray, checked
    // at the powers of two where base-2 logs stay rational.
    Json witness_data = Json::array();
    for (long k = 1; k <= 3; ++k) {
      const int m = 1 << k;
      const Configuration config = full_configuration(extremal_tuple(2, m, 2));
      Configuration logs(2, 2, Scale::logarithmic);
      for (const IndexPoint& p : logs.delta().points())
        logs.set(p, Rat(exact_log2(config.at(p))));
      Configuration scaled(2, 2, Scale::logarithmic);
      for (const IndexPoint& p : scaled.delta().points())
        scaled.set(p, Rat(k) * left.at(p));
      if (!(logs == scaled))
        throw std::logic_error("extremal pair does not sit on the maximizing ray at m = " +
                               std::to_string(m));
      witness_data.push_back(Json{{"m", m}, {"log_config", json_of(logs)}});
    }
    report.steps.push_back(
        {"the pair (mS, S) attains the maxima along the maximizing vertex ray", "witness",
         std::move(witness_data)});

    report.ok = true;
  } catch (const std::exception& e) {
    report.ok = false;
    report.steps.push_back({e.what(), "failure", Json::object()});
  }
  return report;
}

}  // namespace mixvol

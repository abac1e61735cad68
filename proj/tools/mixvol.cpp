// mixvol: command-line workbench for exact mixed-volume inequalities.
// Every command prints JSON by default (the machine contract) or a terse
// human table with --format table. Exit codes: 0 success, 1 a verification
// or comparison failed, 2 usage or input errors.

#include "mixvol/json_io.hpp"
#include "mixvol/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <functional>
#include <sstream>

namespace {

using namespace mixvol;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string output = "-";
  std::string format = "json";
};

void emit(const GlobalOptions& opts, const Json& payload, const std::string& table) {
  const std::string text = opts.format == "table" ? table : canonical_dump(payload);
  if (opts.output == "-" || opts.output.empty()) {
    std::cout << text;
    if (opts.format == "table" && (text.empty() || text.back() != '\n')) std::cout << '\n';
  } else {
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + opts.output);
    out << text;
    if (opts.format == "table" && (text.empty() || text.back() != '\n')) out << '\n';
  }
}

std::vector<int> parse_point_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty coordinate in '" + text + "'");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::invalid_argument("empty point '" + text + "'");
  return out;
}

std::vector<Family> parse_families(const std::string& text) {
  std::vector<Family> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(family_from_name(item));
  if (out.empty()) throw std::invalid_argument("no families given");
  return out;
}

BodyTuple load_tuple(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open bodies file: " + path);
  Json j;
  in >> j;
  return tuple_of_json(j);
}

std::string families_table(const std::vector<MonomialInequality>& ineqs, bool log_form) {
  std::ostringstream out;
  for (const MonomialInequality& mi : ineqs) {
    if (log_form) {
      const LinearInequality li = linearize(mi);
      bool first = true;
      for (const auto& [p, c] : li.coeffs) {
        out << (first ? "" : " + ") << rat_to_string(c) << "*x" << p.to_string();
        first = false;
      }
      out << " <= " << rat_to_string(li.constant) << "\n";
    } else {
      auto side = [&](const ExponentMap& s) {
        std::ostringstream o;
        for (const auto& [p, e] : s) {
          o << " MV" << p.to_string();
          if (e != 1) o << "^" << e;
        }
        return o.str();
      };
      out << side(mi.lhs()) << " <= 2^" << mi.log2_const() << " *" << side(mi.rhs()) << "\n";
    }
  }
  return out.str();
}

int cmd_delta(const GlobalOptions& opts, int n, int d) {
  const auto points = enumerate_delta(n, d);
  Json arr = Json::array();
  std::ostringstream table;
  for (const IndexPoint& p : points) {
    arr.push_back(json_of(p));
    table << p.to_string() << "\n";
  }
  emit(opts, Json{{"n", n}, {"d", d}, {"count", points.size()}, {"points", arr}}, table.str());
  return 0;
}

int cmd_ineq_gen(const GlobalOptions& opts, const std::string& family, int d, bool log_form,
                 int max_i, long cap) {
  FamilyCaps caps = FamilyCaps::defaults(d);
  if (cap > 0) caps.max_instances = cap;
  const Family f = family_from_name(family);
  std::vector<MonomialInequality> ineqs;
  if (f == Family::generalized_square && max_i > 0)
    ineqs = gen_generalized_square(d, max_i);
  else
    ineqs = family_instances(f, d, caps);
  Json arr = Json::array();
  for (const MonomialInequality& mi : ineqs) {
    Json entry = json_of(mi);
    if (log_form) entry["linearized"] = json_of(linearize(mi));
    arr.push_back(std::move(entry));
  }
  emit(opts, Json{{"family", family_name(f)}, {"d", d}, {"count", ineqs.size()},
                  {"inequalities", arr}},
       families_table(ineqs, log_form));
  return 0;
}

int cmd_cone_vertices(const GlobalOptions& opts, int d, bool orbits, const std::string& golden) {
  const VertexSet vs = enumerate_vertices(slice(build_af_cone(d), Rat(1)));
  Json payload{{"d", d},
               {"feasible", vs.feasible},
               {"pointed", vs.pointed},
               {"vertex_count", vs.vertices.size()},
               {"ray_count", vs.rays.size()},
               {"vertices", json_of_configurations(vs.vertices)}};
  std::ostringstream table;
  table << vs.vertices.size() << " vertices, " << vs.rays.size() << " rays\n";
  if (orbits) {
    const auto decomposition = orbit_decomposition(vs, d);
    Json orbit_arr = Json::array();
    for (const Orbit& orbit : decomposition) {
      orbit_arr.push_back(json_of(orbit));
      table << "orbit of size " << orbit.members.size() << "\n";
    }
    payload["orbit_count"] = decomposition.size();
    payload["orbits"] = std::move(orbit_arr);
  }
  int status = 0;
  if (!golden.empty()) {
    std::ifstream in(golden, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open golden file: " + golden);
    const std::string expected((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    const std::string produced = canonical_dump(json_of_configurations(vs.vertices));
    const bool match = produced == expected;
    payload["golden_match"] = match;
    table << (match ? "golden file matches\n" : "golden file MISMATCH\n");
    if (!match) status = 1;
  }
  emit(opts, payload, table.str());
  return status;
}

int cmd_bound_af(const GlobalOptions& opts, int d, const std::string& point, bool certificate) {
  const IndexPoint target(parse_point_list(point), d);
  const Int closed_form = af_point_bound(target);
  Json payload{{"d", d}, {"target", json_of(target)}, {"slope", closed_form.get_str()},
               {"bound", "MV(target) <= " + closed_form.get_str() + " * MV(1)"}};
  std::ostringstream table;
  table << "slope " << closed_form.get_str() << "\n";
  if (certificate) {
    const AfBoundResult lp = max_over_af(d, target);
    payload["lp_value"] = json_of(lp.value);
    payload["certificate"] = json_of(lp.certificate);
    table << "lp optimum " << rat_to_string(lp.value) << " with "
          << lp.certificate.multipliers.size() << " multipliers\n";
  }
  emit(opts, payload, table.str());
  return 0;
}

int cmd_bound_square(const GlobalOptions& opts, int d, const std::string& point,
                     const std::string& t_text, const std::string& families_text,
                     bool certificate, long cap) {
  const IndexPoint target(parse_point_list(point), d);
  const Rat t = parse_rat(t_text);
  FamilyCaps caps = FamilyCaps::defaults(d);
  if (cap > 0) caps.max_instances = cap;
  const SquareBoundResult r = max_with_squares(d, target, t, parse_families(families_text), caps);
  Json payload{{"d", d}, {"target", json_of(target)}, {"t", json_of(t)}};
  std::ostringstream table;
  if (r.status != LpStatus::optimal) {
    payload["status"] = r.status == LpStatus::unbounded ? "unbounded" : "infeasible";
    emit(opts, payload, std::string("status ") + payload["status"].get<std::string>());
    return 1;
  }
  payload["status"] = "optimal";
  payload["value"] = json_of(r.value);
  table << "optimum " << rat_to_string(r.value) << "\n";
  if (certificate && r.certificate) {
    payload["certificate"] = json_of(*r.certificate);
    table << r.certificate->multipliers.size() << " multipliers\n";
  }
  emit(opts, payload, table.str());
  return 0;
}

int cmd_bound_path(const GlobalOptions& opts, int d, const std::string& point) {
  const IndexPoint target(parse_point_list(point), d);
  const BoundCertificate cert = certify_sq_bound(target);
  std::ostringstream table;
  table << "mv(target) <= " << rat_to_string(cert.slope) << " * mv(1) + "
        << rat_to_string(cert.constant) << "\n";
  emit(opts, json_of(cert), table.str());
  return 0;
}

int cmd_bound_mink(const GlobalOptions& opts, int d, const std::string& m_text,
                   const std::string& method_text) {
  const Rat m = parse_rat(m_text);
  BoundMethod method;
  if (method_text == "af")
    method = BoundMethod::af;
  else if (method_text == "square")
    method = BoundMethod::square;
  else
    throw std::invalid_argument("unknown bound method: " + method_text);
  const MinkBoundForm form = mink_bound_form(d, method);
  const Rat value = mink_bound(d, m, method);
  Json payload{{"d", d},
               {"m", json_of(m)},
               {"method", method_text},
               {"coefficient", form.coefficient.get_str()},
               {"exponent", form.exponent},
               {"value", json_of(value)}};
  std::ostringstream table;
  table << form.coefficient.get_str() << " * m^" << form.exponent << " = "
        << rat_to_string(value) << "\n";
  emit(opts, payload, table.str());
  return 0;
}

int cmd_mv_compute(const GlobalOptions& opts, const std::string& bodies, bool config, int n) {
  const BodyTuple t = load_tuple(bodies);
  if (config) {
    if (n > 0 && n != t.size())
      throw std::invalid_argument("--n does not match the number of bodies in the file");
    const Configuration c = full_configuration(t);
    std::ostringstream table;
    for (const IndexPoint& p : c.delta().points())
      table << p.to_string() << " = " << rat_to_string(c.at(p)) << "\n";
    emit(opts, json_of(c), table.str());
    return 0;
  }
  const Rat mv = mixed_volume(t);
  emit(opts, Json{{"mixed_volume", json_of(mv)}}, rat_to_string(mv));
  return 0;
}

int cmd_verify_config(const GlobalOptions& opts, const std::string& bodies,
                      const std::string& families_text, long cap) {
  const BodyTuple t = load_tuple(bodies);
  const int d = t.dim();
  if (t.size() != d)
    throw std::invalid_argument("verify config needs a d-tuple of d-dimensional bodies");
  FamilyCaps caps = FamilyCaps::defaults(d);
  if (cap > 0) caps.max_instances = cap;
  const Configuration c = full_configuration(t);
  Json reports = Json::object();
  std::ostringstream table;
  bool all_ok = true;
  for (Family f : parse_families(families_text)) {
    const CheckReport report = check_config(c, family_instances(f, d, caps));
    reports[family_name(f)] = json_of(report);
    table << family_name(f) << ": " << report.satisfied << "/" << report.total << " satisfied\n";
    if (!report.all_satisfied()) all_ok = false;
  }
  emit(opts, Json{{"configuration", json_of(c)}, {"reports", reports}, {"ok", all_ok}},
       table.str());
  return all_ok ? 0 : 1;
}

int cmd_verify_identity(const GlobalOptions& opts, const std::string& bodies) {
  const BodyTuple t = load_tuple(bodies);
  const bool ok = vol_sum_identity_check(t);
  emit(opts, Json{{"ok", ok}}, ok ? "identity holds" : "identity FAILS");
  return ok ? 0 : 1;
}

int cmd_verify_dim(const GlobalOptions& opts, int dim) {
  const VerifyReport report = dim == 2 ? verify_dim2() : verify_dim3();
  std::ostringstream table;
  for (const ProofStep& s : report.steps) table << "[" << s.kind << "] " << s.statement << "\n";
  for (const auto& [ell, poly] : report.maxima)
    table << "max Vol(K_1 + ... + K_" << ell << ") = " << poly.to_string() << "\n";
  table << (report.ok ? "verified" : "FAILED") << "\n";
  emit(opts, report.to_json(), table.str());
  return report.ok ? 0 : 1;
}

int cmd_heine(const GlobalOptions& opts, const std::string& bodies) {
  const BodyTuple t = load_tuple(bodies);
  const HeineReport report = heine_check(t);
  std::ostringstream table;
  table << "det " << rat_to_string(report.det) << ", minors " << rat_to_string(report.minor_12)
        << " " << rat_to_string(report.minor_13) << " " << rat_to_string(report.minor_23)
        << (report.satisfied ? " (satisfied)" : " (NOT satisfied)") << "\n";
  emit(opts, json_of(report), table.str());
  return 0;
}

int cmd_rand_tuple(const GlobalOptions& opts, int d, int n, std::uint64_t seed, int box,
                   int points, bool full_dim) {
  const BodyTuple t = random_lattice_tuple(d, n, seed, box, points, full_dim);
  std::ostringstream table;
  for (const VPolytope& body : t.bodies)
    table << "body with " << body.vertices().size() << " vertices, affine dim "
          << body.affine_dim() << "\n";
  emit(opts, json_of(t), table.str());
  return 0;
}

int cmd_counterexample(const GlobalOptions& opts, int d) {
  const Configuration f = counterexample_config(d);
  const CheckReport af_report = check_config(f, gen_af(d));
  const CheckReport square_report = check_config(f, gen_square(d));
  const bool as_expected = af_report.all_satisfied() && !square_report.all_satisfied();
  Json payload{{"configuration", json_of(f)},
               {"af_report", json_of(af_report)},
               {"square_report", json_of(square_report)},
               {"af_satisfied", af_report.all_satisfied()},
               {"square_violated", !square_report.all_satisfied()}};
  std::ostringstream table;
  table << "pairwise concavity: " << af_report.satisfied << "/" << af_report.total
        << " satisfied\n";
  table << "square: " << square_report.violations.size() << " violation(s)";
  if (!square_report.violations.empty())
    table << ", witness " << rat_to_string(square_report.violations.front().lhs_value) << " > "
          << rat_to_string(square_report.violations.front().rhs_value);
  table << "\n";
  emit(opts, payload, table.str());
  return as_expected ? 0 : 1;
}

int cmd_extremal(const GlobalOptions& opts, int d, int m, int ell) {
  const BodyTuple t = extremal_tuple(d, m, ell);
  const Rat mv = mixed_volume(t);
  Json prefix_volumes = Json::array();
  std::ostringstream table;
  table << "mixed volume " << rat_to_string(mv) << "\n";
  VPolytope sum = t.bodies.front();
  for (int i = 1; i <= d; ++i) {
    if (i > 1) sum = minkowski_sum(sum, t.bodies[static_cast<std::size_t>(i - 1)]);
    const Rat vol = normalized_volume(sum);
    prefix_volumes.push_back(json_of(vol));
    table << "Vol(K_1 + ... + K_" << i << ") = " << rat_to_string(vol) << "\n";
  }
  const Rat expected = rat_pow(Rat(m + ell - 1), d);
  emit(opts,
       Json{{"tuple", json_of(t)},
            {"mixed_volume", json_of(mv)},
            {"prefix_volumes", prefix_volumes},
            {"ell", ell},
            {"expected_at_ell", json_of(expected)}},
       table.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact mixed-volume inequality workbench"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--seed", opts.seed, "default seed for randomized commands");
  app.add_option("--output", opts.output, "output path ('-' for stdout)");
  app.add_option("--format", opts.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  // delta
  int delta_n = 0, delta_d = 0;
  CLI::App* delta = app.add_subcommand("delta", "list the index simplex");
  delta->add_option("--n", delta_n, "tuple length")->required();
  delta->add_option("--d", delta_d, "degree")->required();

  // ineq gen
  CLI::App* ineq = app.add_subcommand("ineq", "inequality families");
  std::string ineq_family;
  int ineq_d = 0, ineq_max_i = 0;
  long ineq_cap = 0;
  bool ineq_log = false;
  CLI::App* ineq_gen = ineq->add_subcommand("gen", "generate one family");
  ineq_gen->add_option("--family", ineq_family, "af|square|gensquare|weakconc|doublesquare|simplexconc")
      ->required();
  ineq_gen->add_option("--d", ineq_d, "dimension")->required();
  ineq_gen->add_flag("--log", ineq_log, "include linearized forms");
  ineq_gen->add_option("--max-i", ineq_max_i, "cap on |I| for gensquare");
  ineq_gen->add_option("--cap", ineq_cap, "instance cap override");

  // cone vertices
  CLI::App* cone = app.add_subcommand("cone", "concavity cone slices");
  int cone_d = 0;
  bool cone_orbits = false;
  std::string cone_golden;
  CLI::App* cone_vertices = cone->add_subcommand("vertices", "enumerate vertices exactly");
  cone_vertices->add_option("--d", cone_d, "dimension")->required();
  cone_vertices->add_flag("--orbits", cone_orbits, "decompose into coordinate orbits");
  cone_vertices->add_option("--golden", cone_golden, "byte-compare against a golden file");

  // bound
  CLI::App* bound = app.add_subcommand("bound", "upper bounds with certificates");
  int bound_d = 0;
  std::string bound_p, bound_t = "1", bound_families = "af", bound_m = "1", bound_method = "af";
  bool bound_cert = false;
  long bound_cap = 0;
  CLI::App* bound_af = bound->add_subcommand("af", "closed-form concavity bound");
  bound_af->add_option("--d", bound_d, "dimension")->required();
  bound_af->add_option("--p", bound_p, "target, comma separated")->required();
  bound_af->add_flag("--certificate", bound_cert, "solve the LP and emit multipliers");
  CLI::App* bound_square = bound->add_subcommand("square", "LP bound under selected families");
  bound_square->add_option("--d", bound_d, "dimension")->required();
  bound_square->add_option("--p", bound_p, "target, comma separated")->required();
  bound_square->add_option("--t", bound_t, "normalization level (rational)");
  bound_square->add_option("--families", bound_families, "comma separated family list");
  bound_square->add_flag("--certificate", bound_cert, "emit dual multipliers");
  bound_square->add_option("--cap", bound_cap, "instance cap override");
  CLI::App* bound_path = bound->add_subcommand("path", "telescoped step-chain certificate");
  bound_path->add_option("--d", bound_d, "dimension")->required();
  bound_path->add_option("--p", bound_p, "target, comma separated")->required();
  CLI::App* bound_mink = bound->add_subcommand("mink", "closed-form Minkowski-sum bound");
  bound_mink->add_option("--d", bound_d, "dimension")->required();
  bound_mink->add_option("--m", bound_m, "normalized mixed volume (rational)");
  bound_mink->add_option("--method", bound_method, "af or square");

  // mv compute
  CLI::App* mv = app.add_subcommand("mv", "geometric mixed volumes");
  std::string mv_bodies;
  bool mv_config = false;
  int mv_n = 0;
  CLI::App* mv_compute = mv->add_subcommand("compute", "mixed volume of a tuple file");
  mv_compute->add_option("--bodies", mv_bodies, "tuple JSON file")->required();
  mv_compute->add_flag("--config", mv_config, "emit the full configuration");
  mv_compute->add_option("--n", mv_n, "expected tuple length (with --config)");

  // verify
  CLI::App* verify = app.add_subcommand("verify", "verification pipelines");
  std::string verify_bodies, verify_families = "af";
  long verify_cap = 0;
  CLI::App* verify_config_cmd = verify->add_subcommand("config", "check a tuple against families");
  verify_config_cmd->add_option("--bodies", verify_bodies, "tuple JSON file")->required();
  verify_config_cmd->add_option("--families", verify_families, "comma separated family list");
  verify_config_cmd->add_option("--cap", verify_cap, "instance cap override");
  CLI::App* verify_identity = verify->add_subcommand("identity", "Minkowski-sum volume expansion");
  verify_identity->add_option("--bodies", verify_bodies, "tuple JSON file")->required();
  CLI::App* verify_dim2_cmd = verify->add_subcommand("dim2", "exact maxima for pairs");
  CLI::App* verify_dim3_cmd = verify->add_subcommand("dim3", "exact maxima for triples");

  // heine
  std::string heine_bodies;
  CLI::App* heine = app.add_subcommand("heine", "mixed-area sign conditions for planar triples");
  heine->add_option("--bodies", heine_bodies, "tuple JSON file")->required();

  // rand-tuple
  int rt_d = 0, rt_n = 0, rt_box = 0, rt_points = 0;
  std::uint64_t rt_seed = 0;
  bool rt_full_dim = false;
  bool rt_seed_given = false;
  CLI::App* rand_tuple = app.add_subcommand("rand-tuple", "seeded random lattice tuples");
  rand_tuple->add_option("--d", rt_d, "dimension")->required();
  rand_tuple->add_option("--n", rt_n, "tuple length")->required();
  rand_tuple->add_option("--seed", rt_seed, "seed")->each([&](const std::string&) {
    rt_seed_given = true;
  });
  rand_tuple->add_option("--box", rt_box, "coordinate range [0, box]")->required();
  rand_tuple->add_option("--points", rt_points, "points drawn per body")->required();
  rand_tuple->add_flag("--full-dim", rt_full_dim, "redraw until full-dimensional");

  // counterexample
  int ce_d = 0;
  CLI::App* counterexample = app.add_subcommand(
      "counterexample", "concavity-satisfying, square-violating configuration");
  counterexample->add_option("--d", ce_d, "dimension")->required();

  // extremal
  int ex_d = 0, ex_m = 0, ex_ell = 0;
  CLI::App* extremal = app.add_subcommand("extremal", "the (mS, S, ..., S) tuple");
  extremal->add_option("--d", ex_d, "dimension")->required();
  extremal->add_option("--m", ex_m, "scale of the first body")->required();
  extremal->add_option("--ell", ex_ell, "prefix length reported")->required();

  // Let global flags appear after the subcommand as well.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    for (CLI::App* sub : cmd->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*delta) return cmd_delta(opts, delta_n, delta_d);
    if (*ineq_gen) return cmd_ineq_gen(opts, ineq_family, ineq_d, ineq_log, ineq_max_i, ineq_cap);
    if (*cone_vertices) return cmd_cone_vertices(opts, cone_d, cone_orbits, cone_golden);
    if (*bound_af) return cmd_bound_af(opts, bound_d, bound_p, bound_cert);
    if (*bound_square)
      return cmd_bound_square(opts, bound_d, bound_p, bound_t, bound_families, bound_cert,
                              bound_cap);
    if (*bound_path) return cmd_bound_path(opts, bound_d, bound_p);
    if (*bound_mink) return cmd_bound_mink(opts, bound_d, bound_m, bound_method);
    if (*mv_compute) return cmd_mv_compute(opts, mv_bodies, mv_config, mv_n);
    if (*verify_config_cmd) return cmd_verify_config(opts, verify_bodies, verify_families, verify_cap);
    if (*verify_identity) return cmd_verify_identity(opts, verify_bodies);
    if (*verify_dim2_cmd) return cmd_verify_dim(opts, 2);
    if (*verify_dim3_cmd) return cmd_verify_dim(opts, 3);
    if (*heine) return cmd_heine(opts, heine_bodies);
    if (*rand_tuple)
      return cmd_rand_tuple(opts, rt_d, rt_n, rt_seed_given ? rt_seed : opts.seed, rt_box,
                            rt_points, rt_full_dim);
    if (*counterexample) return cmd_counterexample(opts, ce_d);
    if (*extremal) return cmd_extremal(opts, ex_d, ex_m, ex_ell);
    std::cerr << "no command selected\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

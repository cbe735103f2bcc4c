// mu-kit: command-line front end for the convex-structure toolkit.
// Every invocation prints a single JSON report; exit status is 0 only when
// every compared quantity met its tolerance.

#include <CLI11.hpp>
#include <chrono>
#include <future>
#include <iostream>

#include "mukit/hull.hpp"
#include "mukit/mu_cert.hpp"
#include "mukit/quantum.hpp"
#include "mukit/scenario.hpp"
#include "mukit/stability.hpp"

namespace {

using mukit::Index;
using mukit::Vector;
using nlohmann::json;
namespace io = mukit::io;

struct GlobalOpts {
  std::uint64_t seed = mukit::kDefaultSeed;
  double tol = std::numeric_limits<double>::quiet_NaN();
  bool compact = false;
  bool parallel = false;
  bool timing = false;
};

double pick_tol(const GlobalOpts& g, double fallback) {
  return std::isnan(g.tol) ? fallback : g.tol;
}

class Timer {
 public:
  double ms(const GlobalOpts& g) const {
    if (!g.timing) return 0.0;  // deterministic reports by default
    const auto dt = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(dt).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int emit(json report, const GlobalOpts& g) {
  const bool pass = !report.contains("pass") || report["pass"].get<bool>();
  std::cout << io::dump(report, g.compact ? -1 : 2) << "\n";
  return pass ? 0 : 1;
}

json json_arg(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("failed to parse ") + what + ": " + e.what());
  }
}

// --fn grammar: one-minus-norm[:p] | affine:{...} | neg-affine-sq:{...} |
// neg-sq-dist:{...} | table:{...}
struct ParsedFn {
  mukit::hull::ObjectiveFunction f;
  bool is_table = false;
  std::vector<Vector> table_points;
  std::vector<double> table_values;
};

ParsedFn parse_fn(const std::string& spec, double default_p) {
  ParsedFn out;
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (head == "one-minus-norm") {
    const double p = rest.empty() ? default_p : std::stod(rest);
    out.f = mukit::hull::one_minus_norm(p);
    return out;
  }
  if (head == "affine" || head == "neg-affine-sq") {
    const json j = json_arg(rest, "--fn payload");
    const Vector slope = io::vector_from_json(j.at("slope"));
    const double offset = j.value("offset", 0.0);
    if (head == "affine") {
      out.f.evaluator = [slope, offset](const Vector& y) { return slope.dot(y) + offset; };
      out.f.declared_concave = true;
      out.f.declared_convex = true;
    } else {
      out.f.evaluator = [slope, offset](const Vector& y) {
        const double a = slope.dot(y) + offset;
        return -a * a;
      };
      out.f.declared_concave = true;
    }
    return out;
  }
  if (head == "neg-sq-dist") {
    const json j = json_arg(rest, "--fn payload");
    const Vector center = io::vector_from_json(j.at("center"));
    const double value = j.value("value", 0.0);
    out.f.evaluator = [center, value](const Vector& y) {
      return value - (y - center).squaredNorm();
    };
    out.f.declared_concave = true;
    return out;
  }
  if (head == "table") {
    const json j = json_arg(rest, "--fn payload");
    for (const auto& pt : j.at("points")) out.table_points.push_back(io::vector_from_json(pt));
    for (const auto& v : j.at("values")) out.table_values.push_back(v.get<double>());
    out.is_table = true;
    return out;
  }
  throw std::invalid_argument("unknown --fn '" + spec + "'");
}

json hull_solution_json(const mukit::hull::HullSolution& sol) {
  json j;
  j["value"] = sol.value;
  j["decomposition"] = io::to_json(sol.decomposition);
  j["iterations"] = sol.iterations;
  j["restarts_used"] = sol.restarts_used;
  j["heuristic"] = sol.heuristic;
  if (sol.lower_bound) {
    j["lower_bound"] = *sol.lower_bound;
    j["lower_witness"] = {{"slope", io::to_json(sol.lower_witness->slope)},
                          {"offset", sol.lower_witness->offset}};
  }
  return j;
}

json roof_result_json(const mukit::quantum::RoofResult& res, bool with_states) {
  json j;
  j["upper_bound"] = res.upper_bound;
  j["restarts_used"] = res.restarts_used;
  j["pure_shortcut"] = res.pure_shortcut;
  j["ensemble_size"] = res.ensemble_size;
  json comps = json::array();
  for (const auto& c : res.decomposition) {
    json cj;
    cj["weight"] = c.weight;
    if (with_states) {
      json st = json::array();
      for (Index i = 0; i < c.state.size(); ++i)
        st.push_back(json::array({c.state[i].real(), c.state[i].imag()}));
      cj["state"] = std::move(st);
    }
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  return j;
}

mukit::quantum::StateFunction parse_roof_fn(const std::string& spec) {
  if (spec == "entropy")
    return [](const mukit::quantum::DensityMatrix& r) {
      return mukit::quantum::von_neumann_entropy(r);
    };
  const auto colon = spec.find(':');
  if (spec.substr(0, colon) == "alpha") {
    const double alpha = colon == std::string::npos ? 2.0 : std::stod(spec.substr(colon + 1));
    return [alpha](const mukit::quantum::DensityMatrix& r) {
      return mukit::quantum::f_alpha(r, alpha);
    };
  }
  throw std::invalid_argument("unknown --f '" + spec + "' (expected alpha:<a> or entropy)");
}

json scenario_outcome_json(const mukit::scenarios::Outcome& o, double elapsed_ms) {
  return {{"scenario", o.name},   {"inputs", o.inputs},   {"outputs", o.outputs},
          {"tolerances", o.tolerances}, {"pass", o.pass}, {"elapsed_ms", elapsed_ms}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mu-kit: finite-truncation toolkit for convex envelopes, tail-mass "
               "certificates, midpoint stability and convex-roof optimization"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "root random seed")->envname("MUKIT_SEED");
  app.add_option("--tol", g.tol, "override the default tolerance where applicable");
  app.add_flag("--json", g.compact, "compact single-line JSON output");
  app.add_flag("--parallel", g.parallel, "run independent scenarios concurrently");
  app.add_flag("--timing", g.timing, "report wall-clock elapsed_ms (non-deterministic)");

  // ---- hull ----------------------------------------------------------------
  auto* hull_cmd = app.add_subcommand("hull", "upper bound for co f at a point");
  std::string hull_set, hull_fn, hull_point;
  int hull_restarts = 16;
  bool hull_lower = false;
  hull_cmd->add_option("--set", hull_set, "set descriptor JSON")->required();
  hull_cmd->add_option("--fn", hull_fn, "objective (builtin name or table:{...})")->required();
  hull_cmd->add_option("--point", hull_point, "query point JSON")->required();
  hull_cmd->add_option("--restarts", hull_restarts, "search restarts");
  hull_cmd->add_flag("--lower-bound", hull_lower, "fit and validate an affine lower bound");

  // ---- lsc -----------------------------------------------------------------
  auto* lsc_cmd = app.add_subcommand("lsc", "lower-semicontinuity gap along a sequence");
  std::string lsc_set, lsc_fn, lsc_points, lsc_limit;
  int lsc_restarts = 8;
  lsc_cmd->add_option("--set", lsc_set)->required();
  lsc_cmd->add_option("--fn", lsc_fn)->required();
  lsc_cmd->add_option("--points", lsc_points, "JSON array of points")->required();
  lsc_cmd->add_option("--limit", lsc_limit, "limit point JSON")->required();
  lsc_cmd->add_option("--restarts", lsc_restarts);

  // ---- mucert --------------------------------------------------------------
  auto* mucert_cmd = app.add_subcommand("mucert", "mu-compactness certificates and refutations");
  mucert_cmd->require_subcommand(1);

  auto* certify_cmd = mucert_cmd->add_subcommand("certify", "tail-mass check of a decomposition");
  std::string cert_h, cert_measure, cert_point;
  double cert_eps = 0.25;
  certify_cmd
      ->add_option("--cert", cert_h, "affine certificate {\"h\": [...], \"offset\": c} or 'index'")
      ->required();
  certify_cmd->add_option("--measure", cert_measure, "finite measure JSON")->required();
  certify_cmd->add_option("--point", cert_point, "barycenter JSON (defaults to b(mu))");
  certify_cmd->add_option("--eps", cert_eps);

  auto* dp_cmd = mucert_cmd->add_subcommand("refute-deltap", "block witness on the l_p simplex");
  double dp_p = 2.0, dp_eps = 0.25;
  int dp_r = 4;
  Index dp_prefix = 16, dp_dim = 256;
  dp_cmd->add_option("--p", dp_p);
  dp_cmd->add_option("--r", dp_r, "block index");
  dp_cmd->add_option("--eps", dp_eps);
  dp_cmd->add_option("--prefix", dp_prefix);
  dp_cmd->add_option("--dim", dp_dim);

  auto* ap_cmd = mucert_cmd->add_subcommand("refute-ap", "harmonic witness on the bounded l_p cone");
  double ap_p = 2.0, ap_c = std::numeric_limits<double>::quiet_NaN();
  Index ap_prefix = 10, ap_dim = 10000;
  ap_cmd->add_option("--p", ap_p);
  ap_cmd->add_option("--prefix", ap_prefix);
  ap_cmd->add_option("--dim", ap_dim);
  ap_cmd->add_option("--c", ap_c, "scaling of the harmonic point (default automatic)");

  auto* cube_cmd = mucert_cmd->add_subcommand("cube", "Hilbert-cube alternative");
  std::string cube_a, cube_rule = "";
  Index cube_dim = 64;
  cube_cmd->add_option("--a", cube_a, "side lengths JSON array");
  cube_cmd->add_option("--rule", cube_rule, "builtin sides: geometric | inv-sqrt | ones");
  cube_cmd->add_option("--dim", cube_dim, "dimension for --rule");

  const auto add_cone_options = [](CLI::App* cmd, std::string& gens, std::string& offset,
                                   bool& equivalence) {
    cmd->add_option("--generators", gens, "JSON array of generator vectors")->required();
    cmd->add_option("--offset", offset, "offset point JSON (defaults to 0)");
    cmd->add_flag("--equivalence", equivalence, "run the four-route equivalence report");
  };
  std::string mc_cone_gens, mc_cone_offset;
  bool mc_cone_equiv = false;
  auto* mc_cone_cmd = mucert_cmd->add_subcommand("cone", "pointedness classification");
  add_cone_options(mc_cone_cmd, mc_cone_gens, mc_cone_offset, mc_cone_equiv);

  // ---- split ---------------------------------------------------------------
  auto* split_cmd = app.add_subcommand("split", "constructive midpoint split on the simplex");
  std::string split_a, split_b, split_z;
  double split_p = 2.0, split_eps = 0.05;
  split_cmd->add_option("--p", split_p);
  split_cmd->add_option("--a", split_a)->required();
  split_cmd->add_option("--b", split_b)->required();
  split_cmd->add_option("--z", split_z)->required();
  split_cmd->add_option("--eps", split_eps);

  // ---- ballbound -----------------------------------------------------------
  auto* ball_cmd = app.add_subcommand("ballbound", "ball concentration bound and LP adversary");
  double ball_znorm = 0.9, ball_delta = 0.5;
  Index ball_dim = 3;
  int ball_trials = 0;
  ball_cmd->add_option("--znorm", ball_znorm)->required();
  ball_cmd->add_option("--delta", ball_delta)->required();
  ball_cmd->add_option("--dim", ball_dim, "adversary dimension");
  ball_cmd->add_option("--trials", ball_trials, "adversary LP trials (0 = bound only)");

  // ---- probe-openness --------------------------------------------------------
  auto* probe_cmd = app.add_subcommand("probe-openness", "midpoint openness probe");
  std::string probe_set, probe_a, probe_b, probe_zs, probe_eps;
  probe_cmd->add_option("--set", probe_set)->required();
  probe_cmd->add_option("--a", probe_a)->required();
  probe_cmd->add_option("--b", probe_b)->required();
  probe_cmd->add_option("--zs", probe_zs, "JSON array of probe points")->required();
  probe_cmd->add_option("--eps-schedule", probe_eps, "JSON array of budgets")->required();

  // ---- cone (top-level alias) ------------------------------------------------
  std::string cone_gens, cone_offset;
  bool cone_equiv = false;
  auto* cone_cmd = app.add_subcommand("cone", "pointedness classification (alias of mucert cone)");
  add_cone_options(cone_cmd, cone_gens, cone_offset, cone_equiv);

  // ---- roof ------------------------------------------------------------------
  auto* roof_cmd = app.add_subcommand("roof", "convex-roof upper bound on a bipartite state");
  std::string roof_state, roof_fn = "alpha:2";
  std::vector<Index> roof_dims;
  Index roof_m = 0;
  int roof_restarts = 64;
  bool roof_states = false;
  roof_cmd->add_option("--state", roof_state, "density matrix JSON [[[re,im],...],...]")->required();
  roof_cmd->add_option("--dims", roof_dims, "factor dimensions dH dK")->expected(2)->required();
  roof_cmd->add_option("--f", roof_fn, "alpha:<a> or entropy");
  roof_cmd->add_option("--m", roof_m, "ensemble size (0 = automatic)");
  roof_cmd->add_option("--restarts", roof_restarts);
  roof_cmd->add_flag("--states", roof_states, "include component state vectors in the report");

  // ---- scenario ----------------------------------------------------------------
  auto* scen_cmd = app.add_subcommand("scenario", "named regression scenarios");
  scen_cmd->require_subcommand(1);
  auto* scen_run = scen_cmd->add_subcommand("run", "run scenarios by name");
  std::vector<std::string> scen_names;
  std::string scen_override;
  bool scen_all = false;
  scen_run->add_option("names", scen_names, "scenario names");
  scen_run->add_flag("--all", scen_all, "run the whole registry");
  scen_run->add_option("--override", scen_override, "JSON object merged over the defaults");
  auto* scen_list = scen_cmd->add_subcommand("list", "list registered scenarios");
  std::string scen_filter;
  scen_list->add_option("--filter", scen_filter, "substring filter");

  for (auto* sc : {hull_cmd, lsc_cmd, mucert_cmd, certify_cmd, dp_cmd, ap_cmd, cube_cmd,
                   mc_cone_cmd, split_cmd, ball_cmd, probe_cmd, cone_cmd, roof_cmd, scen_cmd,
                   scen_run, scen_list})
    sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    // hull -------------------------------------------------------------------
    if (hull_cmd->parsed()) {
      Timer timer;
      const auto desc = io::set_from_json(json_arg(hull_set, "--set"));
      const Vector x = io::vector_from_json(json_arg(hull_point, "--point"));
      const auto fn = parse_fn(hull_fn, desc.p);
      mukit::hull::HullSolution sol;
      if (fn.is_table) {
        sol = mukit::hull::co_f_table(fn.table_points, fn.table_values, x);
      } else {
        mukit::hull::SearchConfig cfg;
        cfg.restarts = hull_restarts;
        cfg.seed = g.seed;
        cfg.tol = pick_tol(g, cfg.tol);
        cfg.fit_lower_bound = hull_lower;
        sol = mukit::hull::co_f_search(desc, fn.f, x, cfg);
      }
      json rep{{"command", "hull"},
               {"inputs", {{"set", json_arg(hull_set, "--set")},
                           {"fn", hull_fn},
                           {"point", io::to_json(x)},
                           {"restarts", hull_restarts},
                           {"seed", g.seed}}},
               {"outputs", hull_solution_json(sol)},
               {"tolerances", {{"tol", pick_tol(g, 1e-9)}}},
               {"pass", true}};
      rep["elapsed_ms"] = timer.ms(g);
      return emit(rep, g);
    }

    // lsc --------------------------------------------------------------------
    if (lsc_cmd->parsed()) {
      Timer timer;
      const auto desc = io::set_from_json(json_arg(lsc_set, "--set"));
      const auto fn = parse_fn(lsc_fn, desc.p);
      if (fn.is_table) throw std::invalid_argument("lsc: table objectives unsupported");
      std::vector<Vector> seq;
      for (const auto& pj : json_arg(lsc_points, "--points"))
        seq.push_back(io::vector_from_json(pj));
      const Vector limit = io::vector_from_json(json_arg(lsc_limit, "--limit"));
      mukit::hull::SearchConfig cfg;
      cfg.restarts = lsc_restarts;
      cfg.seed = g.seed;
      const auto probe = mukit::hull::lsc_probe(desc, fn.f, seq, limit, cfg);
      json rep{{"command", "lsc"},
               {"inputs", {{"set", json_arg(lsc_set, "--set")},
                           {"fn", lsc_fn},
                           {"points", seq.size()},
                           {"seed", g.seed}}},
               {"outputs", {{"gap", probe.gap},
                            {"limit_value", probe.limit_value},
                            {"sequence_values", probe.sequence_values}}},
               {"tolerances", json::object()},
               {"pass", true}};
      rep["elapsed_ms"] = timer.ms(g);
      return emit(rep, g);
    }

    // mucert certify -----------------------------------------------------------
    if (certify_cmd->parsed()) {
      Timer timer;
      const auto mu = io::measure_from_json(json_arg(cert_measure, "--measure"));
      mukit::cert::AffineCertificate h;
      if (cert_h == "index") {
        h.h.resize(mu.dim());
        for (Index i = 0; i < mu.dim(); ++i) h.h[i] = static_cast<double>(i + 1);
        h.label = "h_i = i";
      } else {
        const json hj = json_arg(cert_h, "--h");
        h.h = io::vector_from_json(hj.at("h"));
        h.offset = hj.value("offset", 0.0);
      }
      const Vector x = cert_point.empty() ? mukit::measures::barycenter(mu)
                                          : io::vector_from_json(json_arg(cert_point, "--point"));
      const auto res = mukit::cert::tail_certificate_check(h, x, mu, cert_eps, pick_tol(g, 1e-9));
      json rep{{"command", "mucert certify"},
               {"inputs", {{"eps", cert_eps}, {"cert", cert_h}}},
               {"outputs", {{"passed", res.passed},
                            {"outside_mass", res.outside_mass},
                            {"threshold", res.threshold}}},
               {"tolerances", {{"eps", cert_eps}, {"tol", pick_tol(g, 1e-9)}}},
               {"pass", res.passed}};
      rep["elapsed_ms"] = timer.ms(g);
      return emit(rep, g);
    }

    // mucert refute-deltap -------------------------------------------------------
    if (dp_cmd->parsed()) {
      Timer timer;
      const auto ref = mukit::cert::delta_p_refute(dp_p, dp_r, dp_eps, dp_prefix, dp_dim);
      json rep{{"command", "mucert refute-deltap"},
               {"inputs", {{"p", dp_p}, {"r", dp_r}, {"eps", dp_eps},
                           {"prefix", dp_prefix}, {"dim", dp_dim}}},
               {"outputs", {{"outside_mass", ref.witness.outside_mass},
                            {"block_start", ref.block_start},
                            {"block_length", ref.block_length},
                            {"in_block_power_sum", ref.in_block_power_sum},
                            {"decomposition", io::to_json(ref.witness.decomposition)}}},
               {"tolerances", {{"power_sum_cap", 1.0 / dp_r}}},
               {"pass", ref.witness.outside_mass > 1.0 - 1e-12}};
      rep["elapsed_ms"] = timer.ms(g);
      return emit(rep, g);
    }

    // mucert refute-ap -------------------------------------------------------------
    if (ap_cmd->parsed()) {
      Timer timer;
      const auto ref = mukit::cert::ap_refute(ap_p, ap_prefix, ap_dim, ap_c);
      json rep{{"command", "mucert refute-ap"},
               {"inputs", {{"p", ap_p}, {"prefix", ap_prefix}, {"dim", ap_dim}}},
               {"outputs", {{"outside_mass", ref.witness.outside_mass},
                            {"s", ref.s},
                            {"r", ref.r},
                            {"point_norm_p", ref.point_norm_p},
                            {"rescaled_norm_p", ref.rescaled_norm_p}}},
               {"tolerances", {{"lower", 1.0 / 3.0}, {"upper", 2.0 / 3.0}}},
               {"pass", ref.witness.outside_mass > 1.0 / 3.0 &&
                            ref.witness.outside_mass < 2.0 / 3.0}};
      rep["elapsed_ms"] = timer.ms(g);
      return emit(rep, g);
    }

    // mucert cube ----------------------------------------------------------------
    if (cube_cmd->parsed()) {
      Timer timer;
      Vector a;
      if (!cube_a.empty()) {
        a = io::vector_from_json(json_arg(cube_a, "--a"));
      } else if (cube_rule == "geometric") {
        a.resize(cube_dim);
        for (Index i = 0; i < cube_dim; ++i) a[i] = std::pow(2.0, -static_cast<double>(i + 1));
      } else if (cube_rule == "inv-sqrt") {
        a.resize(cube_dim);
        for (Index i = 0; i < cube_dim; ++i) a[i] = 1.0 / std::sqrt(static_cast<double>(i + 1));
      } else if (cube_rule == "ones") {
        a = Vector::Ones(cube_dim);
      } else {
        throw std::invalid_argument("cube: provide --a or a valid --rule");
      }
      const auto cls = mukit::cert::hilbert_cube_classify(a, pick_tol(g, 1e-9));
      json blocks = json::array();
      for (const auto& bl : cls.blocks)
        blocks.push_back({{"first", bl.first}, {"last", bl.last}, {"sum_sq", bl.sum_sq}});
      const char* verdict = cls.verdict == mukit::cert::CubeVerdict::CompactCertificate
                                ? "CompactCertificate"
                                : cls.verdict == mukit::cert::CubeVerdict::RefutationBlocks
                                      ? "RefutationBlocks"
                                      : "Inconclusive";
      json rep{{"command", "mucert cube"},
               {"inputs", {{"dim", a.size()}, {"rule", cube_rule}}},
               {"outputs", {{"verdict", verdict},
                            {"blocks", blocks},
                            {"suffix_energy", cls.suffix_energy}}},
               {"tolerances", {{"tol", pick_tol(g, 1e-9)}}},
               {"pass", cls.verdict != mukit::cert::CubeVerdict::Inconclusive}};
      rep["elapsed_ms"] = timer.ms(g);
      return emit(rep, g);
    }

    // cone (both spellings) --------------------------------------------------------
    if (mc_cone_cmd->parsed() || cone_cmd->parsed()) {
      Timer timer;
      const std::string gens_text = mc_cone_cmd->parsed() ? mc_cone_gens : cone_gens;
      const std::string offset_text = mc_cone_cmd->parsed() ? mc_cone_offset : cone_offset;
      const bool equivalence = mc_cone_cmd->parsed() ? mc_cone_equiv : cone_equiv;
      std::vector<Vector> gens;
      for (const auto& gj : json_arg(gens_text, "--generators"))
        gens.push_back(io::vector_from_json(gj));
      json outputs;
      bool pass = true;
      const auto cls = mukit::cert::pointed_cone_classify(gens);
      switch (cls.kind) {
        case mukit::cert::ConeKind::Pointed:
          outputs["kind"] = "Pointed";
          outputs["axis"] = io::to_json(cls.axis);
          break;
        case mukit::cert::ConeKind::ContainsLine:
          outputs["kind"] = "ContainsLine";
          outputs["direction"] = io::to_json(cls.line_direction);
          outputs["neg_reconstruction"] = io::to_json(cls.neg_reconstruction);
          break;
        default:
          outputs["kind"] = "Inconclusive";
          pass = false;
      }
      if (equivalence) {
        const Vector offset = offset_text.empty()
                                  ? Vector::Zero(gens.front().size()).eval()
                                  : io::vector_from_json(json_arg(offset_text, "--offset"));
        const auto rep4 = mukit::cert::polyhedral_equivalence_check(gens, offset);
        outputs["equivalence"] = {{"contained_in_pointed_cone", rep4.contained_in_pointed_cone},
                                  {"has_extreme_point", rep4.has_extreme_point},
                                  {"line_free", rep4.line_free},
                                  {"polar_has_interior", rep4.polar_has_interior},
                                  {"polar_ball_radius", rep4.polar_ball_radius},
                                  {"consistent", rep4.consistent}};
        pass = pass && rep4.consistent;
      }
      json rep{{"command", "cone"},
               {"inputs", {{"generators", gens.size()}}},
               {"outputs", outputs},
               {"tolerances", json::object()},
               {"pass", pass}};
      rep["elapsed_ms"] = timer.ms(g);
      return emit(rep, g);
    }

    // split ---------------------------------------------------------------------
    if (split_cmd->parsed()) {
      Timer timer;
      const Vector a = io::vector_from_json(json_arg(split_a, "--a"));
      const Vector b = io::vector_from_json(json_arg(split_b, "--b"));
      const Vector z = io::vector_from_json(json_arg(split_z, "--z"));
      const auto res = mukit::stability::delta_p_split(split_p, a, b, z, split_eps);
      bool exact_mid = true;
      for (Index k = 0; k < z.size(); ++k)
        exact_mid = exact_mid && ((res.x[k] + res.y[k]) / 2.0 == z[k]);
      json rep{{"command", "split"},
               {"inputs", {{"p", split_p}, {"eps", split_eps}, {"dim", z.size()}}},
               {"outputs", {{"x", io::to_json(res.x)},
                            {"y", io::to_json(res.y)},
                            {"tau", res.tau},
                            {"head_dim", res.head_dim},
                            {"achieved_eps", res.achieved_eps},
                            {"exact_midpoint", exact_mid}}},
               {"tolerances", {{"eps", split_eps}}},
               {"pass", exact_mid && res.achieved_eps < split_eps}};
      rep["elapsed_ms"] = timer.ms(g);
      return emit(rep, g);
    }

    // ballbound -------------------------------------------------------------------
    if (ball_cmd->parsed()) {
      Timer timer;
      const double r = mukit::stability::ball_bound(ball_znorm, ball_delta);
      json outputs{{"r", r}, {"complement_bound", 1.0 - r}};
      bool pass = true;
      if (ball_trials > 0) {
        Vector z = Vector::Zero(ball_dim);
        z[0] = ball_znorm;
        const auto adv = mukit::stability::ball_bound_adversary(z, ball_delta, ball_trials, g.seed);
        outputs["adversary"] = {{"max_outside_mass", adv.max_outside_mass},
                                {"trials_run", adv.trials_run},
                                {"trials_skipped", adv.trials_skipped}};
        pass = adv.max_outside_mass <= adv.bound + 1e-7;
      }
      json rep{{"command", "ballbound"},
               {"inputs", {{"znorm", ball_znorm}, {"delta", ball_delta},
                           {"dim", ball_dim}, {"trials", ball_trials}, {"seed", g.seed}}},
               {"outputs", outputs},
               {"tolerances", {{"slack", 1e-7}}},
               {"pass", pass}};
      rep["elapsed_ms"] = timer.ms(g);
      return emit(rep, g);
    }

    // probe-openness ------------------------------------------------------------------
    if (probe_cmd->parsed()) {
      Timer timer;
      const auto desc = io::set_from_json(json_arg(probe_set, "--set"));
      const Vector a = io::vector_from_json(json_arg(probe_a, "--a"));
      const Vector b = io::vector_from_json(json_arg(probe_b, "--b"));
      std::vector<Vector> zs;
      for (const auto& zj : json_arg(probe_zs, "--zs")) zs.push_back(io::vector_from_json(zj));
      std::vector<double> eps;
      for (const auto& ej : json_arg(probe_eps, "--eps-schedule")) eps.push_back(ej.get<double>());
      const auto repnt = mukit::stability::midpoint_openness_probe(desc, a, b, zs, eps);
      json entries = json::array();
      for (const auto& e : repnt.entries)
        entries.push_back({{"eps", e.eps},
                           {"achieved_eps", e.achieved_eps},
                           {"success", e.success},
                           {"tau", e.tau},
                           {"head_dim", e.head_dim},
                           {"error", e.error}});
      json rep{{"command", "probe-openness"},
               {"inputs", {{"set", json_arg(probe_set, "--set")}, {"points", zs.size()}}},
               {"outputs", {{"entries", entries}, {"all_success", repnt.all_success}}},
               {"tolerances", json::object()},
               {"pass", repnt.all_success}};
      rep["elapsed_ms"] = timer.ms(g);
      return emit(rep, g);
    }

    // roof -----------------------------------------------------------------------------
    if (roof_cmd->parsed()) {
      Timer timer;
      const auto entries = io::cmatrix_from_json(json_arg(roof_state, "--state"));
      const mukit::quantum::DensityMatrix omega(entries, roof_dims[0], roof_dims[1]);
      mukit::quantum::RoofConfig cfg;
      cfg.m = roof_m;
      cfg.restarts = roof_restarts;
      cfg.seed = g.seed;
      const auto res = mukit::quantum::roof_optimize(omega, parse_roof_fn(roof_fn), cfg);
      json rep{{"command", "roof"},
               {"inputs", {{"dims", {roof_dims[0], roof_dims[1]}},
                           {"f", roof_fn},
                           {"m", roof_m},
                           {"restarts", roof_restarts},
                           {"seed", g.seed}}},
               {"outputs", roof_result_json(res, roof_states)},
               {"tolerances", json::object()},
               {"pass", true}};
      rep["elapsed_ms"] = timer.ms(g);
      return emit(rep, g);
    }

    // scenario ----------------------------------------------------------------------
    if (scen_list->parsed()) {
      json rep{{"command", "scenario list"},
               {"scenarios", mukit::scenarios::list_json(scen_filter)}};
      return emit(rep, g);
    }
    if (scen_run->parsed()) {
      const json overrides =
          scen_override.empty() ? json::object() : json_arg(scen_override, "--override");
      std::vector<std::string> names = scen_names;
      if (scen_all || names.empty()) {
        names.clear();
        for (const auto& s : mukit::scenarios::registry()) names.push_back(s.name);
      }
      json results = json::array();
      bool all_pass = true;
      if (g.parallel) {
        std::vector<std::future<std::pair<mukit::scenarios::Outcome, double>>> futs;
        for (const auto& name : names) {
          futs.push_back(std::async(std::launch::async, [&, name] {
            Timer t;
            auto o = mukit::scenarios::run_scenario(name, overrides, g.seed);
            return std::make_pair(std::move(o), t.ms(g));
          }));
        }
        for (auto& fut : futs) {
          auto [o, ms] = fut.get();
          all_pass = all_pass && o.pass;
          results.push_back(scenario_outcome_json(o, ms));
        }
      } else {
        for (const auto& name : names) {
          Timer t;
          const auto o = mukit::scenarios::run_scenario(name, overrides, g.seed);
          all_pass = all_pass && o.pass;
          results.push_back(scenario_outcome_json(o, t.ms(g)));
        }
      }
      json rep{{"command", "scenario run"}, {"results", results}, {"pass", all_pass}};
      return emit(rep, g);
    }
  } catch (const std::exception& e) {
    json err{{"error", e.what()}};
    std::cerr << io::dump(err, g.compact ? -1 : 2) << "\n";
    return 2;
  }
  return 0;
}

#include "ahs/cli.hpp"

#include "ahs/error.hpp"
#include "ahs/graded_lie.hpp"
#include "ahs/holonomy.hpp"
#include "ahs/jet_weyl.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <sstream>

namespace ahs {

namespace {

bool is_slow(Series s) { return s == Series::E6 || s == Series::E7; }

std::string rank_range(Series s) {
  if (has_fixed_rank(s)) return "rank " + std::to_string(min_rank(s));
  return "n >= " + std::to_string(min_rank(s));
}

SeriesLabel label_of(const RunConfig& cfg) {
  const Series s = parse_series(cfg.series);
  const int rank = cfg.rank ? *cfg.rank : (has_fixed_rank(s) ? min_rank(s) : 0);
  if (!cfg.rank && !has_fixed_rank(s))
    throw Error(ErrorKind::InvalidConfig, "--rank is required for series " + cfg.series);
  SeriesLabel label{s, rank};
  validate(label);
  return label;
}

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CertificateReport from_certificate(const std::string& check, const Certificate& c) {
  CertificateReport r;
  r.check = check;
  r.name = c.name;
  r.target = c.target_name;
  r.target_dim = c.target_dim;
  r.achieved_dim = c.achieved_dim;
  r.generators_consumed = c.generators_consumed;
  r.witnesses = c.witnesses;
  r.details["contained_in_target"] = c.contained ? "yes" : "no";
  r.pass = c.pass;
  r.seconds = c.seconds;
  return r;
}

std::string vec_text(const GradedLieAlgebra& alg, const LieVec& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : v) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")" + alg.basis_name(i);
  }
  return out;
}

std::string nodes_text(const std::vector<int>& nodes) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) out += (i ? "," : "") + std::to_string(nodes[i]);
  return out;
}

void structure_check(const GradedLieAlgebra& alg, const Frame& frame, AlgebraReport& rep) {
  Clock clock;
  CertificateReport r;
  r.check = "structure";
  r.name = "structure";
  r.target = "g1 x g-1 pairing";
  r.target_dim = frame.n();
  r.achieved_dim = g1_pairing_rank(alg);
  const auto anti = antisymmetry_violations(alg);
  const auto grading = grading_violations(alg);
  const auto jacobi = jacobi_violations(alg, 0);
  const auto invariance = killing_invariance_violations(alg, 0);

  const LieVec& e = frame.grading_element();
  bool orthogonal = true;
  for (const auto& row : frame.g0ss().rows()) orthogonal = orthogonal && killing(alg, row, e) == 0;
  bool inside = frame.g0().contains(e);
  for (const auto& row : frame.g0ss().rows()) inside = inside && frame.g0().contains(row);
  const bool decomposition = inside && orthogonal && !frame.g0ss().contains(e) &&
                             frame.g0ss().dim() + 1 == frame.g0().dim();
  bool grading_element_ok = true;
  for (int i = 0; i < alg.dim(); ++i)
    grading_element_ok = grading_element_ok &&
                         bracket(alg, e, basis_vector(i)) == Rational(alg.grade(i)) * basis_vector(i);

  r.details = {{"antisymmetry_violations", std::to_string(anti)},
               {"grading_violations", std::to_string(grading)},
               {"jacobi_violations", std::to_string(jacobi)},
               {"killing_invariance_violations", std::to_string(invariance)},
               {"grading_element", vec_text(alg, e)},
               {"grading_element_acts_by_grade", grading_element_ok ? "yes" : "no"},
               {"g0_decomposition", decomposition ? "g0ss + QE orthogonal" : "failed"}};
  r.pass = anti == 0 && grading == 0 && jacobi == 0 && invariance == 0 && decomposition &&
           grading_element_ok && r.achieved_dim == r.target_dim;
  r.seconds = clock.seconds();
  rep.certificates.push_back(std::move(r));
}

void lemma1_check(const GradedLieAlgebra& alg, const Frame& frame, const SpanOptions& opts,
                  AlgebraReport& rep) {
  for (bool symmetric : {true, false})
    rep.certificates.push_back(from_certificate("lemma1", lemma1_certify(frame, symmetric, opts)));

  Clock clock;
  const CenterWitness cw = lemma1_center_witness(frame);
  CertificateReport c;
  c.check = "lemma1";
  c.name = "lemma1_center";
  c.target = "center QE";
  c.target_dim = 1;
  c.achieved_dim = cw.value != 0 ? 1 : 0;
  c.witnesses = {"P=" + std::string("Z2(x)Z1, X1, X2")};
  c.details = {{"killing_P_of_X_with_Y", to_string(cw.pairing)},
               {"killing_dP_with_E", to_string(cw.value)},
               {"X_Y_independent", cw.independent ? "yes" : "no"},
               {"P_of_Y_zero", cw.p_of_y_zero ? "yes" : "no"}};
  c.pass = cw.pass;
  c.seconds = clock.seconds();
  rep.certificates.push_back(std::move(c));

  for (const auto& ideal : simple_ideals(alg)) {
    Clock iclock;
    const IdealWitness w = lemma1_ideal_witness(frame, ideal);
    CertificateReport r;
    r.check = "lemma1";
    r.name = "lemma1_ideal_" + nodes_text(ideal.nodes);
    r.target = "simple ideal on nodes " + nodes_text(ideal.nodes);
    r.target_dim = ideal.space.dim();
    r.achieved_dim = g0_orbit_span(alg, w.value).dim();
    r.witnesses = {"P=Z_alpha^2+Z_alpha+beta^2, alpha=" + std::to_string(w.alpha_node) +
                   ", beta=" + std::to_string(w.beta_node) + ", alpha+beta=" + w.alpha_plus_beta};
    r.details = {{"coefficient_e_beta", to_string(w.coeff_e_beta)},
                 {"coefficient_f_beta", to_string(w.coeff_f_beta)},
                 {"killing_with_E", to_string(w.killing_with_e)},
                 {"value", vec_text(alg, w.value)}};
    r.pass = w.pass && r.achieved_dim == r.target_dim;
    r.seconds = iclock.seconds();
    rep.certificates.push_back(std::move(r));
  }
}

void lemma2_check(int n, AlgebraReport& rep) {
  for (bool symmetric : {true, false}) {
    const Lemma2Report l2 = lemma2_certify(n, symmetric);
    CertificateReport r = from_certificate("lemma2", l2.cert);
    r.details.erase("contained_in_target");
    r.details["method"] = l2.dense ? "dense" : "streamed";
    std::size_t ok = 0;
    for (const auto& c : l2.checks) ok += c.pass ? 1 : 0;
    r.details["preimage_checks"] = std::to_string(ok) + "/" + std::to_string(l2.checks.size());
    r.pass = l2.pass;
    rep.certificates.push_back(std::move(r));
  }
}

void theorem_check(const Frame& frame, const SpanOptions& opts, AlgebraReport& rep) {
  for (bool exact : {true, false})
    rep.certificates.push_back(from_certificate("theorem", theorem_certify(frame, exact, opts)));
}

// above these counts the jet identities run on a seeded sample of argument tuples
constexpr std::size_t kTripleBudget = 64;
constexpr std::size_t kTupleBudget = 4096;
// every sampled tuple drags in most of the lower derivative levels
constexpr std::size_t kDerivativeBudget = 256;

void jets_check(const GradedLieAlgebra& alg, const RunConfig& cfg, const SpanOptions& opts,
                AlgebraReport& rep) {
  const ModelChart chart(alg, cfg.jet_order);
  const JetPoly ups = random_upsilon(chart, cfg.seed, 0, 3);
  const TupleSample triples{kTripleBudget, cfg.seed}, tuples{kTupleBudget, cfg.seed};
  auto coverage = [](std::size_t checked, std::size_t total) {
    return std::to_string(checked) + " of " + std::to_string(total) + (checked < total ? " (sampled)" : "");
  };
  {
    Clock clock;
    const CurvatureDiff diff = check_curvature_identity(chart, ups, triples);
    CertificateReport r;
    r.check = "jets";
    r.name = "jets_curvature_identity";
    r.target = "direct curvature = dP";
    r.details = {{"seed", std::to_string(cfg.seed)},
                 {"compared_order", std::to_string(diff.compared_order)},
                 {"coefficients_compared", std::to_string(diff.coefficients_compared)},
                 {"mismatches", std::to_string(diff.mismatches.size())},
                 {"triples_checked", coverage(diff.tuples_checked, diff.tuples_total)}};
    for (const auto& m : diff.mismatches)
      r.witnesses.push_back("R(" + std::to_string(m.a) + "," + std::to_string(m.b) + ")X" +
                            std::to_string(m.c) + " at " + m.monomial + ": " + vec_text(alg, m.direct) +
                            " vs " + vec_text(alg, m.identity));
    r.pass = diff.pass;
    r.seconds = clock.seconds();
    rep.certificates.push_back(std::move(r));
  }
  for (int k = 2; k <= 4; ++k) {
    Clock clock;
    const RhoJetCheck rc = rho_jet_check(chart, cfg.seed, k, tuples);
    CertificateReport r;
    r.check = "jets";
    r.name = "jets_rho_k" + std::to_string(k);
    r.target = "nabla^k P(o) = nabla^(k+1) Upsilon(o)";
    r.details = {{"seed", std::to_string(cfg.seed)},
                 {"lower_jet_vanishes", rc.lower_jet_vanishes ? "yes" : "no"},
                 {"matches_flat_derivative", rc.matches_flat ? "yes" : "no"},
                 {"symmetric", rc.symmetric ? "yes" : "no"},
                 {"tuples_checked", coverage(rc.tuples_checked, rc.tuples_total)}};
    r.pass = rc.pass;
    r.seconds = clock.seconds();
    rep.certificates.push_back(std::move(r));
  }
  {
    Clock clock;
    CertificateReport r;
    r.check = "jets";
    r.name = "jets_curvature_derivative";
    r.target = "nabla^4 R(o) = (id x d) nabla^4 P(o)";
    const TupleCheck tc = curvature_derivative_check(chart, ups, 4, {kDerivativeBudget, cfg.seed});
    r.details = {{"seed", std::to_string(cfg.seed)}, {"k", "4"},
                 {"tuples_checked", coverage(tc.tuples_checked, tc.tuples_total)}};
    r.pass = tc.pass;
    r.seconds = clock.seconds();
    rep.certificates.push_back(std::move(r));
  }
  for (bool exact : {true, false}) {
    const JetSpanReport js = holonomy_span_jets(alg, exact, cfg.jet_order, opts);
    CertificateReport r = from_certificate("jets", js.cert);
    r.details["algebraic_dim"] = std::to_string(js.algebraic_dim);
    r.details["agrees_with_algebraic_path"] = js.agree ? "yes" : "no";
    r.pass = js.pass;
    rep.certificates.push_back(std::move(r));
  }
}

}  // namespace

int g_minus_dim(const RootSystem& rs, int node) {
  int count = 0;
  for (const auto& r : rs.roots)
    if (r.is_positive && alpha_grade(r, node) == 1) ++count;
  return count;
}

std::vector<int> resolve_nodes(const RootSystem& rs, const std::string& spec) {
  const auto nodes = valid_one_gradings(rs);
  if (nodes.empty())
    throw Error(ErrorKind::NoOneGrading, to_string(rs.label) + " has no |1|-grading");
  if (spec == "all") return nodes;
  if (spec.size() > 3 && spec.compare(spec.size() - 3, 3, "dim") == 0) {
    int want = 0;
    try {
      want = std::stoi(spec.substr(0, spec.size() - 3));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidConfig, "bad node selector '" + spec + "'");
    }
    std::vector<int> out;
    for (int n : nodes)
      if (g_minus_dim(rs, n) == want) out.push_back(n);
    if (out.empty())
      throw Error(ErrorKind::InvalidNode,
                  "no node of " + to_string(rs.label) + " has dim g-1 = " + std::to_string(want));
    return out;
  }
  int node = 0;
  std::size_t used = 0;
  try {
    node = std::stoi(spec, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != spec.size() || spec.empty())
    throw Error(ErrorKind::InvalidConfig, "bad node selector '" + spec + "'");
  if (std::find(nodes.begin(), nodes.end(), node) == nodes.end())
    throw Error(ErrorKind::InvalidNode, "node " + spec + " of " + to_string(rs.label) +
                                            " does not define a |1|-grading");
  return {node};
}

void normalize(RunConfig& cfg) {
  std::vector<std::string> checks;
  for (const auto& c : cfg.checks) {
    if (c == "all") {
      checks = all_checks();
      break;
    }
    if (std::find(all_checks().begin(), all_checks().end(), c) == all_checks().end())
      throw Error(ErrorKind::InvalidConfig, "unknown check '" + c + "'");
    checks.push_back(c);
  }
  if (cfg.checks.empty()) checks = all_checks();
  std::vector<std::string> ordered;
  for (const auto& c : all_checks())
    if (std::find(checks.begin(), checks.end(), c) != checks.end()) ordered.push_back(c);
  cfg.checks = ordered;
  if (cfg.exactness != "exact-rational")
    throw Error(ErrorKind::InvalidConfig, "only exact-rational certificates are produced");
  if (cfg.format != "json" && cfg.format != "text")
    throw Error(ErrorKind::InvalidConfig, "format must be json or text");
  if (cfg.parallel < 1) throw Error(ErrorKind::InvalidConfig, "--parallel must be >= 1");
  if (cfg.wants("jets") && cfg.jet_order < 6)
    throw Error(ErrorKind::InvalidConfig, "--jet-order must be >= 6 when jets are requested");
  label_of(cfg);
}

Report cmd_list(const std::optional<std::string>& series, const std::optional<int>& rank) {
  std::vector<SeriesLabel> labels;
  auto add_series = [&](Series s) {
    if (rank) {
      labels.push_back({s, *rank});
      validate(labels.back());
    } else if (has_fixed_rank(s)) {
      labels.push_back({s, min_rank(s)});
    } else {
      for (int r = min_rank(s); r <= min_rank(s) + 3; ++r) labels.push_back({s, r});
    }
  };
  if (series) {
    add_series(parse_series(*series));
  } else {
    for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E6, Series::E7, Series::E8,
                     Series::F4, Series::G2})
      add_series(s);
  }

  Report report;
  report.command = "list";
  report.pass = true;
  for (const auto& label : labels) {
    const RootSystem rs = build_root_system(label);
    const auto nodes = valid_one_gradings(rs);
    if (nodes.empty()) {
      CatalogEntry e;
      e.series = to_string(label.series);
      e.rank = label.rank;
      e.rank_range = rank_range(label.series);
      e.note = "no |1|-grading (no highest-root coefficient equals 1)";
      report.catalog.push_back(e);
      const bool expected = label.series == Series::E8 || label.series == Series::F4 ||
                            label.series == Series::G2;
      report.pass = report.pass && expected;
      continue;
    }
    for (int node : nodes) {
      const GradingRow row = grading_row(label, node);
      CatalogEntry e;
      e.series = to_string(label.series);
      e.rank = label.rank;
      e.rank_range = rank_range(label.series);
      e.node = node;
      e.row_g = row.g;
      e.row_g0 = row.g0;
      e.row_g_minus = row.g_minus;
      e.dim_g_minus = g_minus_dim(rs, node);
      e.table_dim_g_minus = row.table_dim_g_minus;
      e.in_table_range = row.in_table_range;
      if (label.series == Series::A)
        e.note = "p=" + std::to_string(node) + ", q=" + std::to_string(label.rank + 1 - node);
      report.pass = report.pass && e.dim_g_minus == e.table_dim_g_minus;
      report.catalog.push_back(e);
    }
  }
  return report;
}

Report cmd_verify(RunConfig cfg, std::ostream* progress, const std::optional<Corruption>& corruption) {
  normalize(cfg);
  const SeriesLabel label = label_of(cfg);
  if (is_slow(label.series) && !cfg.allow_slow && (cfg.wants("theorem") || cfg.wants("jets")))
    throw Error(ErrorKind::InvalidConfig,
                to_string(label) + " theorem/jets checks are slow; pass --allow-slow");
  const RootSystem rs = build_root_system(label);
  const auto nodes = resolve_nodes(rs, cfg.node);

  Report report;
  report.command = "verify";
  report.config = cfg;
  report.pass = true;
  for (int node : nodes) {
    GradedLieAlgebra alg = build_algebra(rs, node);
    if (corruption) {
      if (corruption->i < 0 || corruption->i >= alg.dim() || corruption->j < 0 ||
          corruption->j >= alg.dim() || corruption->k < 0 || corruption->k >= alg.dim())
        throw Error(ErrorKind::InvalidConfig, "corrupted constant index out of range");
      alg = alg.with_perturbed_constant(corruption->i, corruption->j, corruption->k, corruption->delta);
    }
    const Frame frame(alg);
    const GradingRow row = grading_row(label, node);

    AlgebraReport rep;
    rep.series = to_string(label.series);
    rep.rank = label.rank;
    rep.node = node;
    rep.row_g = row.g;
    rep.row_g0 = row.g0;
    rep.row_g_minus = row.g_minus;
    rep.table_dim_g_minus = row.table_dim_g_minus;
    rep.in_table_range = row.in_table_range;
    rep.dims = {alg.dim(), frame.n(), frame.g0().dim(), frame.g0ss().dim(), {}};
    for (const auto& ideal : simple_ideals(alg)) rep.dims.ideals.push_back(ideal.space.dim());

    SpanOptions opts;
    opts.parallel = cfg.parallel;
    if (progress && is_slow(label.series))
      // one line per dimension increase
      opts.progress = [progress, last = -1](std::size_t consumed, int dim) mutable {
        if (dim == last) return;
        last = dim;
        *progress << "progress: generators consumed " << consumed << ", span dim " << dim << "\n";
      };

    if (cfg.wants("structure")) structure_check(alg, frame, rep);
    if (cfg.wants("lemma1")) lemma1_check(alg, frame, opts, rep);
    if (cfg.wants("lemma2")) lemma2_check(frame.n(), rep);
    if (cfg.wants("theorem")) theorem_check(frame, opts, rep);
    if (cfg.wants("jets")) jets_check(alg, cfg, opts, rep);

    rep.pass = std::all_of(rep.certificates.begin(), rep.certificates.end(),
                           [](const CertificateReport& c) { return c.pass; });
    if (!cfg.timing)
      for (auto& c : rep.certificates) c.seconds.reset();
    report.pass = report.pass && rep.pass;
    report.algebras.push_back(std::move(rep));
  }
  return report;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates for |1|-graded simple Lie algebras and Weyl connection holonomy",
               "ahs-cert"};
  app.require_subcommand(1);

  std::optional<std::string> list_series;
  std::optional<int> list_rank;
  std::string list_format = "text";
  auto* list = app.add_subcommand("list", "Catalog of |1|-gradings");
  list->add_option("--series", list_series, "Restrict to one series (A B C D E6 E7 E8 F4 G2)");
  list->add_option("--rank", list_rank, "Restrict to one rank");
  list->add_option("--format", list_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  RunConfig cfg;
  std::string checks = "all";
  std::string corrupt;
  auto* verify = app.add_subcommand("verify", "Run certificates");
  verify->add_option("--series", cfg.series, "A B C D E6 E7")->required();
  verify->add_option("--rank", cfg.rank, "Rank (implied for E6, E7)");
  verify->add_option("--node", cfg.node, "Crossed node: number, 'all' or '<N>dim'");
  verify->add_option("--checks", checks, "Comma list of structure,lemma1,lemma2,theorem,jets or all");
  verify->add_option("--exactness", cfg.exactness, "exact-rational");
  verify->add_option("--jet-order", cfg.jet_order, "Jet truncation order (>= 6 for jets)");
  verify->add_option("--seed", cfg.seed, "Seed of the random Upsilon used by the jet checks");
  verify->add_option("--format", cfg.format, "json or text");
  verify->add_option("--parallel", cfg.parallel, "Worker threads for span certificates");
  verify->add_flag("--allow-slow", cfg.allow_slow, "Permit theorem/jets on E6 and E7");
  verify->add_flag("--timing", cfg.timing, "Include per-certificate seconds");
  verify->add_option("--corrupt-constant", corrupt, "i,j,k,delta")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) {
      const Report r = cmd_list(list_series, list_rank);
      if (list_format == "json")
        out << print_json(r);
      else
        print_text(out, r);
      return r.pass ? 0 : 1;
    }
    cfg.checks.clear();
    std::stringstream ss(checks);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) cfg.checks.push_back(item);
    std::optional<Corruption> corruption;
    if (!corrupt.empty()) {
      Corruption c;
      char s1 = 0, s2 = 0, s3 = 0;
      std::stringstream cs(corrupt);
      if (!(cs >> c.i >> s1 >> c.j >> s2 >> c.k >> s3 >> c.delta) || s1 != ',' || s2 != ',' || s3 != ',')
        throw Error(ErrorKind::InvalidConfig, "--corrupt-constant expects i,j,k,delta");
      corruption = c;
    }
    const Report r = cmd_verify(cfg, &err, corruption);
    if (r.config && r.config->format == "text")
      print_text(out, r);
    else
      out << print_json(r);
    return r.pass ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ahs

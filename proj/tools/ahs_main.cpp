// Command-line front end: schwarzian computations, quasimodular checks,
// exact ring verification, equivariance verification, and the suite runner.
// Exit codes: 0 pass, 1 fail, 2 degenerate-only, 3 usage error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ahs/equivariant.hpp"
#include "ahs/eval.hpp"
#include "ahs/graded.hpp"
#include "ahs/jet.hpp"
#include "ahs/kernels.hpp"
#include "ahs/moebius.hpp"
#include "ahs/quasimodular.hpp"
#include "ahs/report.hpp"
#include "ahs/rng.hpp"
#include "ahs/schwarzian.hpp"
#include "ahs/serialize.hpp"
#include "ahs/suites.hpp"
#include "ahs/version.hpp"

namespace {

using namespace ahs;

std::vector<std::string> tokenize(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ' ' || ch == ',' || ch == ':') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

Rat parse_rat_token(const std::string& tok) {
  const auto slash = tok.find('/');
  if (slash == std::string::npos) return rat_from_strings(tok, "1");
  return rat_from_strings(tok.substr(0, slash), tok.substr(slash + 1));
}

Cplx parse_cplx_token(const std::string& tok) {
  const auto comma = tok.find(',');
  if (comma == std::string::npos) return Cplx(std::stod(tok), 0.0);
  return Cplx(std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1)));
}

void parse_range(const std::string& s, int& lo, int& hi) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    lo = hi = std::stoi(s);
    return;
  }
  lo = std::stoi(s.substr(0, dots));
  hi = std::stoi(s.substr(dots + 2));
  if (lo > hi) throw CLI::ValidationError("--n", "empty range " + s);
}

void emit_json(const ordered_json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  std::fputs(text.c_str(), stdout);
  if (!path.empty()) write_text_file(path, text);
}

ordered_json cplx_json(Cplx z) {
  return ordered_json::array({z.real(), z.imag()});
}

// --------------------------------------------------------------------------
// schwarzian compute

struct SchwarzianArgs {
  std::string function = "exp";
  std::string point = "0";
  int n = 6;
  std::string domain = "complex";
  std::string out_path;
};

// The exponential jet normalized by e^{-z0}: post-scaling is a Moebius map,
// so all S_n (including S_1 = f''/2f') are unchanged and stay rational.
JetQ exp_jet_rational(const Rat& z0, int order) {
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
  Rat fact(1);
  c[0] = 1;
  for (int k = 1; k <= order; ++k) {
    fact /= k;
    c[static_cast<std::size_t>(k)] = fact;
  }
  return JetQ(z0, std::move(c));
}

JetC qform_jet(const std::string& name, Cplx z, int order) {
  const double tol = 1e-10;
  if (name == "E4")
    return FormEvaluator::eisenstein(EisForm::E4, 40)->jet(z, order, tol);
  if (name == "E6")
    return FormEvaluator::eisenstein(EisForm::E6, 40)->jet(z, order, tol);
  if (name == "E2")
    return FormEvaluator::eisenstein(EisForm::E2, 40)->jet(z, order, tol);
  if (name == "disc") {
    const JetC j4 = FormEvaluator::eisenstein(EisForm::E4, 40)->jet(z, order, tol);
    const JetC j6 = FormEvaluator::eisenstein(EisForm::E6, 40)->jet(z, order, tol);
    const JetC cube = jet_mul(jet_mul(j4, j4), j4);
    return jet_scale(jet_sub(cube, jet_mul(j6, j6)), Cplx(1.0 / 1728.0, 0.0));
  }
  throw CLI::ValidationError("--function", "unknown form " + name);
}

int run_schwarzian_compute(const SchwarzianArgs& args) {
  const std::vector<std::string> tok = tokenize(args.function);
  if (tok.empty()) throw CLI::ValidationError("--function", "empty spec");
  const std::string kind = tok[0];
  const int order = args.n + 3;

  ordered_json out;
  out["function"] = args.function;
  out["domain"] = args.domain;
  out["n"] = args.n;

  if (args.domain == "rational") {
    JetQ f = JetQ::constant(rat(0), 0);
    if (kind == "exp") {
      f = exp_jet_rational(parse_rat_token(args.point), order);
    } else if (kind == "moebius") {
      if (tok.size() != 5)
        throw CLI::ValidationError("--function", "moebius needs a b c d");
      const QMat g{parse_rat_token(tok[1]), parse_rat_token(tok[2]),
                   parse_rat_token(tok[3]), parse_rat_token(tok[4])};
      const Rat z0 = parse_rat_token(args.point);
      if (g.c * z0 + g.d == 0)
        throw math_error("moebius pole at the requested point");
      f = local_expansion(g, z0, order);
    } else if (kind == "file") {
      if (tok.size() != 2) throw CLI::ValidationError("--function", "file needs a path");
      f = jetq_from_json(load_json_file(tok[1]));
    } else if (kind == "qform") {
      throw CLI::ValidationError("--domain", "qform jets need --domain complex");
    } else {
      throw CLI::ValidationError("--function", "unknown kind " + kind);
    }
    const AharonovValues<Rat> direct = aharonov_direct(f, args.n);
    const AharonovJets<Rat> rec = aharonov_recursive(f, args.n);
    ordered_json s = ordered_json::array();
    double agreement = 0.0;
    for (int n = 1; n <= args.n; ++n) {
      s.push_back(direct.S(n).get_str());
      const Rat diff = direct.S(n) - rec.S(n).value();
      agreement = std::max(agreement, std::abs(diff.get_d()));
    }
    out["point"] = parse_rat_token(args.point).get_str();
    out["S"] = s;
    out["method_agreement"] = agreement;
  } else {
    const Cplx z = parse_cplx_token(args.point);
    JetC f = JetC::constant(Cplx(0, 0), 0);
    if (kind == "exp") {
      f = exp_map().jet_at(z, order);
    } else if (kind == "moebius") {
      if (tok.size() != 5)
        throw CLI::ValidationError("--function", "moebius needs a b c d");
      const MoebiusMap g{Cplx(parse_rat_token(tok[1]).get_d(), 0.0),
                         Cplx(parse_rat_token(tok[2]).get_d(), 0.0),
                         Cplx(parse_rat_token(tok[3]).get_d(), 0.0),
                         Cplx(parse_rat_token(tok[4]).get_d(), 0.0)};
      f = local_expansion(g, z, order);
    } else if (kind == "qform") {
      if (tok.size() != 2)
        throw CLI::ValidationError("--function", "qform needs a form name");
      f = qform_jet(tok[1], z, order);
    } else if (kind == "file") {
      if (tok.size() != 2) throw CLI::ValidationError("--function", "file needs a path");
      f = jetc_from_json(load_json_file(tok[1]));
    } else {
      throw CLI::ValidationError("--function", "unknown kind " + kind);
    }
    const AharonovValues<Cplx> direct = aharonov_direct(f, args.n);
    const AharonovJets<Cplx> rec = aharonov_recursive(f, args.n);
    ordered_json s = ordered_json::array();
    double agreement = 0.0;
    for (int n = 1; n <= args.n; ++n) {
      s.push_back(cplx_json(direct.S(n)));
      const double scale =
          std::max({std::abs(direct.S(n)), std::abs(rec.S(n).value()), 1e-12});
      agreement =
          std::max(agreement, std::abs(direct.S(n) - rec.S(n).value()) / scale);
    }
    out["point"] = cplx_json(z);
    out["S"] = s;
    out["method_agreement"] = agreement;
  }

  emit_json(out, args.out_path);
  return 0;
}

// --------------------------------------------------------------------------
// qm subcommands

struct QmCheckArgs {
  std::string form = "E2";
  int samples = 50;
  std::uint64_t seed = 7;
  double tol = 1e-8;
  int q_order = 40;
  std::string out_path;
};

int run_qm_check(const QmCheckArgs& args) {
  const auto base = static_cast<std::size_t>(std::max(args.q_order, 16));
  const double tol_eval = std::min(1e-10, args.tol * 1e-2);
  const FittedConstants& ac = adopted_constants();

  QMComponents comps;
  if (args.form == "E2") {
    comps = qm_e2(FormEvaluator::eisenstein(EisForm::E2, base), ac.kappa, tol_eval);
  } else if (args.form == "E4") {
    comps = qm_eis(EisForm::E4, FormEvaluator::eisenstein(EisForm::E4, base), tol_eval);
  } else if (args.form == "E6") {
    comps = qm_eis(EisForm::E6, FormEvaluator::eisenstein(EisForm::E6, base), tol_eval);
  } else if (args.form == "E2SQ") {
    comps = qm_e2_squared(FormEvaluator::eisenstein(EisForm::E2, base), ac.kappa,
                          tol_eval);
  } else {
    throw CLI::ValidationError("--form", "unknown form " + args.form);
  }

  double residual_max = 0.0;
  double completion_max = 0.0;
  for (int i = 0; i < args.samples; ++i) {
    Rng rng = case_rng(args.seed, "qm-check/" + args.form,
                       static_cast<std::uint64_t>(i));
    const IMat g = word_to_matrix(random_word(rng, 6));
    const Cplx z(rng.uniform(-0.5, 0.5), rng.uniform(1.0, 2.0));
    residual_max = std::max(residual_max, qm_transform_check(comps, g, z));
    for (int r = 0; r <= comps.depth; ++r)
      residual_max = std::max(residual_max, component_transform_check(comps, r, g, z));
    if (comps.depth >= 1)
      completion_max =
          std::max(completion_max, near_holomorphic_check(comps, ac.lambda, g, z));
  }

  ordered_json out;
  out["form"] = args.form;
  out["residual_max"] = residual_max;
  out["samples"] = args.samples;
  out["kappa"] = cplx_json(ac.kappa);
  out["kappa_dispersion"] = ac.kappa_dispersion;
  out["lambda"] = cplx_json(ac.lambda);
  if (comps.depth >= 1) out["completion_residual_max"] = completion_max;
  emit_json(out, args.out_path);
  const double worst = std::max(residual_max, completion_max);
  return worst <= args.tol ? 0 : 1;
}

// --------------------------------------------------------------------------
// equiv subcommands

EquivariantFn parse_h(const std::string& spec, int q_order, double tol) {
  const std::vector<std::string> tok = tokenize(spec);
  if (tok.empty()) throw CLI::ValidationError("--fn", "empty spec");
  if (tok[0] == "rational") {
    if (tok.size() != 2)
      throw CLI::ValidationError("--fn", "rational:{E4|E6|disc}");
    return rational_equivariant_named(
        tok[1], static_cast<std::size_t>(std::max(q_order, 16)),
        std::min(1e-9, tol * 1e-2));
  }
  if (tok[0] == "exp") return exp_map();
  if (tok[0] == "moebius") {
    if (tok.size() != 2)
      throw CLI::ValidationError("--fn", "moebius:WORD with letters TtSs");
    return moebius_map_fn(word_to_matrix(GroupWord::parse(tok[1])));
  }
  throw CLI::ValidationError("--fn", "unknown target " + spec);
}

struct EquivVerifyArgs {
  std::string h = "rational:E4";
  std::string n_range = "2..6";
  RunConfig cfg;
  std::string json_path;
};

int run_equiv_verify(const EquivVerifyArgs& args) {
  RunConfig cfg = args.cfg;
  parse_range(args.n_range, cfg.n_lo, cfg.n_hi);
  const EquivariantFn h = parse_h(args.h, cfg.q_order, cfg.tol);
  const std::vector<GZSample> samples =
      sample_gz(h, cfg, "equiv-verify/" + args.h, false);
  MainVerifyConfig mc;
  mc.n_lo = cfg.n_lo;
  mc.n_hi = cfg.n_hi;
  mc.tol = cfg.tol;
  const MainTheoremReport rep = main_theorem_verify(h, samples, mc);

  ordered_json out;
  out["h"] = h.label;
  ordered_json per_n;
  for (const auto& [n, r] : rep.per_n) per_n[std::to_string(n)] = r;
  out["per_n"] = per_n;
  out["component_residual_max"] = rep.component_residual_max;
  out["s_scale"] = rep.s_scale;
  out["cases"] = rep.cases;
  out["verdict"] = rep.verdict;
  emit_json(out, args.json_path);
  if (rep.verdict == "PASS") return 0;
  if (rep.verdict == "DEGENERATE") return 2;
  return 1;
}

struct FitRhoArgs {
  std::string h = "rational:E6";
  std::string word = "TST";
  int points = 10;
  std::uint64_t seed = 7;
  double tol = 1e-6;
  int q_order = 40;
  std::string out_path;
};

int run_equiv_fit_rho(const FitRhoArgs& args) {
  const EquivariantFn h = parse_h(args.h, args.q_order, args.tol);
  const GroupWord word = GroupWord::parse(args.word);
  const IMat g = word_to_matrix(word);
  const MoebiusMap gc = to_cmat(g);

  std::vector<Cplx> pts;
  const int need = std::max(args.points, 6);
  for (int i = 0; i < need; ++i) {
    Rng rng = case_rng(args.seed, "fit-rho/" + args.word,
                       static_cast<std::uint64_t>(i));
    bool found = false;
    for (int attempt = 0; attempt < 50 && !found; ++attempt) {
      const Cplx z(rng.uniform(-0.5, 0.5), rng.uniform(1.0, 2.0));
      try {
        const Cplx hz = h.value(z);
        const Cplx hgz = h.value(act_point(gc, z));
        if (std::isfinite(hz.real()) && std::isfinite(hz.imag()) &&
            std::isfinite(hgz.real()) && std::isfinite(hgz.imag())) {
          pts.push_back(z);
          found = true;
        }
      } catch (const math_error&) {
      }
    }
    if (!found) throw math_error("point sampling exhausted for " + args.word);
  }

  const RepFit fit = fit_representation(h, g, pts);
  const double deviation = projective_deviation(fit.rho, gc);

  ordered_json out;
  out["h"] = h.label;
  out["word"] = word.str();
  out["g"] = imat_to_json(g);
  out["rho"] = ordered_json::array({cplx_json(fit.rho.a), cplx_json(fit.rho.b),
                                    cplx_json(fit.rho.c), cplx_json(fit.rho.d)});
  out["fit_residual"] = fit.fit_residual;
  out["validation_max"] = fit.validation_max;
  out["deviation_from_g"] = deviation;
  out["degenerate"] = fit.degenerate;
  emit_json(out, args.out_path);
  if (fit.degenerate) return 2;
  return deviation <= args.tol ? 0 : 1;
}

// --------------------------------------------------------------------------
// suite

int run_suite_cmd(const std::string& name, const RunConfig& cfg) {
  const Report rep = run_suite(parse_suite(name), cfg);
  if (cfg.format == "csv") {
    const std::string text = report_to_csv(rep);
    std::fputs(text.c_str(), stdout);
    if (!cfg.out_path.empty()) write_text_file(cfg.out_path, text);
  } else {
    emit_json(report_to_json(rep, cfg), cfg.out_path);
  }
  return exit_code_for(rep);
}

void add_run_config_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--seed", cfg.seed, "Base seed for all sampling")
      ->envname("AHS_SEED");
  cmd->add_option("--q-order", cfg.q_order, "Base q-series truncation")
      ->envname("AHS_Q_ORDER");
  cmd->add_option("--jet-order", cfg.jet_order, "Default jet order")
      ->envname("AHS_JET_ORDER");
  cmd->add_option("--tol", cfg.tol, "Residual tolerance")->envname("AHS_TOL");
  cmd->add_option("--height-min", cfg.height_min, "Min Im z for sampling")
      ->envname("AHS_HEIGHT_MIN");
  cmd->add_option("--height-max", cfg.height_max, "Max Im z for sampling")
      ->envname("AHS_HEIGHT_MAX");
  cmd->add_option("--words", cfg.words, "Group words per check")
      ->envname("AHS_WORDS");
  cmd->add_option("--word-len", cfg.word_len, "Max word length")
      ->envname("AHS_WORD_LEN");
  cmd->add_option("--points", cfg.points, "Points per word")
      ->envname("AHS_POINTS");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher-Schwarzian calculus and quasimodular verification"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version,
               "Print version, fitted constants, kernel backend");

  // schwarzian compute
  SchwarzianArgs sch_args;
  CLI::App* sch = app.add_subcommand("schwarzian", "Invariant computations");
  sch->require_subcommand(1);
  CLI::App* sch_compute =
      sch->add_subcommand("compute", "Invariants of a function at a point");
  sch_compute
      ->add_option("--function", sch_args.function,
                   "exp | moebius A B C D | qform {E2|E4|E6|disc} | file PATH")
      ->envname("AHS_FUNCTION");
  sch_compute->add_option("--point", sch_args.point, "RE,IM or rational P/Q")
      ->envname("AHS_POINT");
  sch_compute->add_option("--n", sch_args.n, "Highest invariant index")
      ->envname("AHS_N");
  sch_compute->add_option("--domain", sch_args.domain, "rational | complex")
      ->check(CLI::IsMember({"rational", "complex"}))
      ->envname("AHS_DOMAIN");
  sch_compute->add_option("--out", sch_args.out_path, "Also write JSON here")
      ->envname("AHS_OUT");

  // qm
  CLI::App* qm = app.add_subcommand("qm", "Quasimodular form checks");
  qm->require_subcommand(1);

  std::string eis_which = "E2";
  int eis_order = 40;
  std::string eis_out;
  CLI::App* qm_eisenstein =
      qm->add_subcommand("eisenstein", "Exact q-expansion of E2/E4/E6");
  qm_eisenstein->add_option("--which", eis_which, "E2 | E4 | E6")
      ->check(CLI::IsMember({"E2", "E4", "E6"}))
      ->envname("AHS_WHICH");
  qm_eisenstein->add_option("--order", eis_order, "Truncation order")
      ->envname("AHS_ORDER");
  qm_eisenstein->add_option("--out", eis_out, "Also write JSON here")
      ->envname("AHS_OUT");

  QmCheckArgs qm_check_args;
  CLI::App* qm_check =
      qm->add_subcommand("check", "Transformation-law residuals of one form");
  qm_check->add_option("--form", qm_check_args.form, "E2 | E4 | E6 | E2SQ")
      ->check(CLI::IsMember({"E2", "E4", "E6", "E2SQ"}))
      ->envname("AHS_FORM");
  qm_check->add_option("--samples", qm_check_args.samples, "Sample count")
      ->envname("AHS_SAMPLES");
  qm_check->add_option("--seed", qm_check_args.seed, "Sampling seed")
      ->envname("AHS_SEED");
  qm_check->add_option("--tol", qm_check_args.tol, "Residual tolerance")
      ->envname("AHS_TOL");
  qm_check->add_option("--q-order", qm_check_args.q_order, "Base q-order")
      ->envname("AHS_Q_ORDER");
  qm_check->add_option("--out", qm_check_args.out_path, "Also write JSON here")
      ->envname("AHS_OUT");

  int sl2_max_weight = 20;
  std::string sl2_out;
  CLI::App* qm_sl2 =
      qm->add_subcommand("sl2", "Exact operator relations on the graded ring");
  qm_sl2->add_option("--max-weight", sl2_max_weight, "Weight sweep bound")
      ->envname("AHS_MAX_WEIGHT");
  qm_sl2->add_option("--out", sl2_out, "Also write JSON here")->envname("AHS_OUT");

  // equiv
  CLI::App* equiv = app.add_subcommand("equiv", "Equivariant function checks");
  equiv->require_subcommand(1);

  EquivVerifyArgs ev_args;
  CLI::App* equiv_verify =
      equiv->add_subcommand("verify", "Transformation law across an n range");
  equiv_verify
      ->add_option("--fn", ev_args.h, "rational:{E4|E6|disc} | exp | moebius:WORD")
      ->envname("AHS_H");
  equiv_verify->add_option("--n", ev_args.n_range, "Range LO..HI or single N")
      ->envname("AHS_N");
  add_run_config_flags(equiv_verify, ev_args.cfg);
  equiv_verify->add_option("--json", ev_args.json_path, "Write the report here")
      ->envname("AHS_JSON");

  FitRhoArgs fr_args;
  CLI::App* equiv_fit =
      equiv->add_subcommand("fit-rho", "Fit the representation matrix of a word");
  equiv_fit
      ->add_option("--fn", fr_args.h, "rational:{E4|E6|disc} | exp | moebius:WORD")
      ->envname("AHS_H");
  equiv_fit->add_option("--word", fr_args.word, "Group word, letters TtSs")
      ->envname("AHS_WORD");
  equiv_fit->add_option("--points", fr_args.points, "Sample points (>= 6)")
      ->envname("AHS_POINTS");
  equiv_fit->add_option("--seed", fr_args.seed, "Sampling seed")
      ->envname("AHS_SEED");
  equiv_fit->add_option("--tol", fr_args.tol, "Deviation tolerance")
      ->envname("AHS_TOL");
  equiv_fit->add_option("--q-order", fr_args.q_order, "Base q-order")
      ->envname("AHS_Q_ORDER");
  equiv_fit->add_option("--out", fr_args.out_path, "Also write JSON here")
      ->envname("AHS_OUT");

  // suite
  std::string suite_name = "all";
  RunConfig suite_cfg;
  CLI::App* suite = app.add_subcommand("suite", "Run a verification suite");
  suite
      ->add_option("--name", suite_name,
                   "schwarzian-props | qm-checks | sl2 | main-theorem | "
                   "converse | all")
      ->envname("AHS_SUITE");
  add_run_config_flags(suite, suite_cfg);
  suite->add_option("--n-lo", suite_cfg.n_lo, "Lowest invariant index")
      ->envname("AHS_N_LO");
  suite->add_option("--n-hi", suite_cfg.n_hi, "Highest invariant index")
      ->envname("AHS_N_HI");
  suite->add_option("--workers", suite_cfg.workers, "Parallel case workers")
      ->envname("AHS_WORKERS");
  suite->add_option("--out", suite_cfg.out_path, "Write the report here")
      ->envname("AHS_OUT");
  suite->add_option("--format", suite_cfg.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("AHS_FORMAT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (show_version) {
      const FittedConstants& ac = adopted_constants();
      std::printf("ahs %s\n", kVersion);
      std::printf("kappa %s %s (dispersion %s)\n",
                  format_double(ac.kappa.real()).c_str(),
                  format_double(ac.kappa.imag()).c_str(),
                  format_double(ac.kappa_dispersion).c_str());
      std::printf("lambda %s %s (residual %s)\n",
                  format_double(ac.lambda.real()).c_str(),
                  format_double(ac.lambda.imag()).c_str(),
                  format_double(ac.lambda_residual).c_str());
      std::printf("kernels %s\n",
                  kernels::backend_name(kernels::active_backend()).c_str());
      return 0;
    }

    if (sch_compute->parsed()) return run_schwarzian_compute(sch_args);
    if (qm_eisenstein->parsed()) {
      ordered_json out;
      out["which"] = eis_which;
      out["order"] = eis_order;
      EisForm which = EisForm::E2;
      if (eis_which == "E4") which = EisForm::E4;
      if (eis_which == "E6") which = EisForm::E6;
      out["series"] = qseries_to_json(eisenstein_q(which, eis_order));
      emit_json(out, eis_out);
      return 0;
    }
    if (qm_check->parsed()) return run_qm_check(qm_check_args);
    if (qm_sl2->parsed()) {
      const Sl2Report rep = sl2_commutator_check(sl2_max_weight);
      ordered_json out;
      out["max_weight"] = sl2_max_weight;
      out["monomials"] = rep.monomials;
      out["ok"] = rep.ok;
      if (!rep.ok) out["first_failure"] = rep.first_failure;
      emit_json(out, sl2_out);
      return rep.ok ? 0 : 1;
    }
    if (equiv_verify->parsed()) return run_equiv_verify(ev_args);
    if (equiv_fit->parsed()) return run_equiv_fit_rho(fr_args);
    if (suite->parsed()) return run_suite_cmd(suite_name, suite_cfg);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }

  std::fputs(app.help().c_str(), stderr);
  return 3;
}

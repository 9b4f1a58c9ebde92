// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Every numbered check is self-contained: oracles are recomputed here from
// first principles rather than imported from the library under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ahs/domain.hpp"
#include "ahs/eisenstein.hpp"
#include "ahs/equivariant.hpp"
#include "ahs/eval.hpp"
#include "ahs/graded.hpp"
#include "ahs/jet.hpp"
#include "ahs/moebius.hpp"
#include "ahs/quasimodular.hpp"
#include "ahs/report.hpp"
#include "ahs/rng.hpp"
#include "ahs/schwarzian.hpp"
#include "ahs/suites.hpp"

using namespace ahs;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_failures = 0;

void run_criterion(int number, const std::string& name, double budget_s,
                   const std::function<Outcome()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = fn();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (out.pass && budget_s > 0.0 && dt > budget_s) {
    out.pass = false;
    out.detail = "time budget exceeded";
  }
  if (!out.pass) ++g_failures;
  std::printf("%s criterion-%02d %-28s %7.2fs%s%s\n",
              out.pass ? "PASS" : "FAIL", number, name.c_str(), dt,
              out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
}

std::string rstr(const Rat& r) { return r.get_str(); }

// ---- shared random generators (mirrors of the suite samplers, local on
// purpose so acceptance does not lean on the harness being correct) ----

Rat rand_rat(Rng& rng, long hi) {
  const long num = rng.uniform_int(-hi, hi);
  const long den = rng.uniform_int(1, hi);
  return rat(num, den);
}

Rat rand_rat_nonzero(Rng& rng, long hi) {
  for (;;) {
    Rat r = rand_rat(rng, hi);
    if (sgn(r) != 0) return r;
  }
}

JetQ rand_jet(Rng& rng, int order, long hi) {
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
  c[0] = rand_rat(rng, hi);
  c[1] = rand_rat_nonzero(rng, hi);
  for (int k = 2; k <= order; ++k) c[static_cast<std::size_t>(k)] = rand_rat(rng, hi);
  return JetQ(rand_rat(rng, hi), std::move(c));
}

// Bernoulli numbers from the Pascan-triangle recurrence
// sum_{j<=n} C(n+1, j) B_j = 0, independent of any series machinery.
std::vector<Rat> bernoulli_numbers(int count) {
  std::vector<Rat> b(static_cast<std::size_t>(count) + 1);
  b[0] = rat(1);
  for (int n = 1; n <= count; ++n) {
    Rat acc = rat(0);
    for (int j = 0; j < n; ++j)
      acc += rat_binom(static_cast<unsigned long>(n + 1),
                       static_cast<unsigned long>(j)) *
             b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(n)] =
        -acc / rat_binom(static_cast<unsigned long>(n + 1),
                         static_cast<unsigned long>(n));
  }
  return b;
}

JetQ exp_jet(int order) {
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
  Rat f = rat(1);
  c[0] = f;
  for (int k = 1; k <= order; ++k) {
    f /= k;
    c[static_cast<std::size_t>(k)] = f;
  }
  return JetQ(rat(0), std::move(c));
}

RunConfig theorem_config(std::uint64_t seed) {
  RunConfig cfg;
  cfg.seed = seed;
  cfg.q_order = 40;
  cfg.words = 5;
  cfg.word_len = 8;
  cfg.points = 10;
  cfg.n_lo = 2;
  cfg.n_hi = 6;
  cfg.tol = 1e-7;
  return cfg;
}

std::vector<GZSample> e2_samples() {
  const std::vector<IMat> mats = {
      {0, -1, 1, 0}, {1, 0, 1, 1}, {3, 1, 2, 1}, {2, -1, 3, -1}, {1, 1, 1, 2}};
  const std::vector<Cplx> pts = {Cplx(0.31, 1.17), Cplx(-0.42, 0.93),
                                 Cplx(0.05, 1.61), Cplx(0.57, 1.29)};
  std::vector<GZSample> out;
  for (const IMat& g : mats)
    for (const Cplx& z : pts) out.push_back({g, z});
  return out;
}

std::vector<IMat> distinct_words(const std::vector<GZSample>& samples) {
  std::vector<IMat> gs;
  for (const GZSample& s : samples) {
    bool seen = false;
    for (const IMat& g : gs) seen = seen || g == s.g;
    if (!seen) gs.push_back(s.g);
  }
  return gs;
}

Outcome ok() { return {true, ""}; }
Outcome fail(std::string d) { return {false, std::move(d)}; }

// ------------------------------------------------------------------

Outcome criterion_bernoulli() {
  const int N = 12;
  const JetQ f = exp_jet(N + 2);
  const AharonovValues<Rat> s = aharonov_direct(f, N);
  const std::vector<Rat> b = bernoulli_numbers(N);
  Rat factorial = rat(1);
  for (int n = 1; n <= N; ++n) {
    factorial *= n;
    const Rat want = -b[static_cast<std::size_t>(n)] / factorial;
    if (!(s.S(n) == want))
      return fail("S_" + std::to_string(n) + " = " + rstr(s.S(n)) +
                  ", expected " + rstr(want));
  }
  // Spot anchors frozen from the classical table.
  if (!(s.S(2) == rat(-1, 12)) || !(s.S(12) == rat(691, 1307674368000L)))
    return fail("frozen spot values moved");
  return ok();
}

Outcome criterion_cross_agreement() {
  const int N = 10;
  for (int rep = 0; rep < 200; ++rep) {
    Rng rng = case_rng(2026, "acceptance/cross", static_cast<std::uint64_t>(rep));
    const JetQ f = rand_jet(rng, N + 3, 7);
    const AharonovJets<Rat> jets = aharonov_recursive(f, N);
    const AharonovValues<Rat> direct = aharonov_direct(f, N);
    for (int n = 1; n <= N; ++n)
      if (!(jets.S(n).value() == direct.S(n)))
        return fail("case " + std::to_string(rep) + " disagrees at n=" +
                    std::to_string(n));
  }
  return ok();
}

Outcome criterion_invariance() {
  const int N = 6;
  for (int rep = 0; rep < 100; ++rep) {
    Rng rng = case_rng(2026, "acceptance/invariance",
                       static_cast<std::uint64_t>(rep));
    const GroupWord w = random_word(rng, 6);
    const QMat m = to_qmat(word_to_matrix(w));

    JetQ f = rand_jet(rng, N + 3, 7);
    while (sgn(m.c * f.value() + m.d) == 0) f = rand_jet(rng, N + 3, 7);

    const AharonovValues<Rat> before = aharonov_direct(f, N);
    const AharonovValues<Rat> after = aharonov_direct(post_moebius(f, m), N);
    for (int n = 2; n <= N; ++n)
      if (!(before.S(n) == after.S(n)))
        return fail("case " + std::to_string(rep) +
                    " not invariant at n=" + std::to_string(n));

    // A Moebius jet itself is annihilated above n = 1.
    Rat z0 = rand_rat(rng, 7);
    while (sgn(m.c * z0 + m.d) == 0) z0 = rand_rat(rng, 7);
    const JetQ mj = local_expansion(m, z0, N + 2);
    const AharonovValues<Rat> sm = aharonov_direct(mj, N);
    for (int n = 2; n <= N; ++n)
      if (sgn(sm.S(n)) != 0)
        return fail("Moebius jet has S_" + std::to_string(n) + " != 0");
    const Rat want1 = -m.c / (m.c * z0 + m.d);
    if (!(sm.S(1) == want1))
      return fail("S_1 of a Moebius jet is " + rstr(sm.S(1)) + ", expected " +
                  rstr(want1));
  }
  return ok();
}

Outcome criterion_ode_oracle() {
  for (int rep = 0; rep < 50; ++rep) {
    Rng rng = case_rng(2026, "acceptance/ode", static_cast<std::uint64_t>(rep));
    std::vector<Rat> c(12);
    for (auto& x : c) x = rand_rat(rng, 5);
    const JetQ r(rat(0), std::move(c));
    const CheckReport rep_chk = ode_schwarzian_oracle(r, 10);
    if (!rep_chk.pass(0.0))
      return fail("case " + std::to_string(rep) + " max_abs " +
                  format_double(rep_chk.max_abs));
  }
  return ok();
}

Outcome criterion_jet_identities() {
  for (int rep = 0; rep < 50; ++rep) {
    Rng rng = case_rng(2026, "acceptance/identities",
                       static_cast<std::uint64_t>(rep));
    // Chain rule over composition.
    JetQ w = rand_jet(rng, 9, 5);
    JetQ f = rand_jet(rng, 9, 5);
    f = f.with_base(w.value());
    if (!cocycle_check(f, w).pass(0.0))
      return fail("cocycle case " + std::to_string(rep));

    // Inverse-function law needs a formal jet fixing 0.
    std::vector<Rat> ic(10);
    ic[0] = rat(0);
    ic[1] = rand_rat_nonzero(rng, 5);
    for (int k = 2; k <= 9; ++k) ic[static_cast<std::size_t>(k)] = rand_rat(rng, 5);
    const JetQ v(rat(0), std::move(ic));
    if (!inverse_function_check(v).pass(0.0))
      return fail("inverse case " + std::to_string(rep));

    const JetQ g = rand_jet(rng, 9, 5);
    if (!bivariate_identity_check(g, 8).pass(0.0))
      return fail("bivariate case " + std::to_string(rep));
  }
  return ok();
}

Outcome criterion_eisenstein() {
  const int M = 200;
  const QSeries e2 = eisenstein_q(EisForm::E2, M);
  const QSeries e4 = eisenstein_q(EisForm::E4, M);
  const QSeries e6 = eisenstein_q(EisForm::E6, M);
  // Independent sieve over divisors.
  std::vector<mpz_class> s1(M + 1), s3(M + 1), s5(M + 1);
  for (int d = 1; d <= M; ++d) {
    const mpz_class d1(d);
    const mpz_class d3 = d1 * d1 * d1;
    const mpz_class d5 = d3 * d1 * d1;
    for (int m = d; m <= M; m += d) {
      s1[static_cast<std::size_t>(m)] += d1;
      s3[static_cast<std::size_t>(m)] += d3;
      s5[static_cast<std::size_t>(m)] += d5;
    }
  }
  if (!(e2.a[0] == 1 && e4.a[0] == 1 && e6.a[0] == 1))
    return fail("constant terms moved");
  for (int n = 1; n <= M; ++n) {
    if (!(e2.a[static_cast<std::size_t>(n)] == Rat(-24 * s1[static_cast<std::size_t>(n)])))
      return fail("E2 coefficient " + std::to_string(n));
    if (!(e4.a[static_cast<std::size_t>(n)] == Rat(240 * s3[static_cast<std::size_t>(n)])))
      return fail("E4 coefficient " + std::to_string(n));
    if (!(e6.a[static_cast<std::size_t>(n)] == Rat(-504 * s5[static_cast<std::size_t>(n)])))
      return fail("E6 coefficient " + std::to_string(n));
  }
  const bool spots = e2.a[1] == rat(-24) && e2.a[2] == rat(-72) &&
                     e2.a[3] == rat(-96) && e4.a[1] == rat(240) &&
                     e4.a[2] == rat(2160) && e6.a[1] == rat(-504) &&
                     e6.a[2] == rat(-16632);
  return spots ? ok() : fail("spot values moved");
}

Outcome criterion_quasimodular_e2() {
  const auto e2 = FormEvaluator::eisenstein(EisForm::E2, 64);
  const std::vector<GZSample> samples = e2_samples();
  const KappaFit kf = fit_e2_constant(samples, *e2, 1e-11);
  if (kf.samples != 20)
    return fail("expected 20 samples, got " + std::to_string(kf.samples));
  const Cplx exact = kappa_exact().to_complex();
  if (std::abs(kf.kappa - exact) > 1e-8)
    return fail("kappa off by " + format_double(std::abs(kf.kappa - exact)));
  if (kf.dispersion > 1e-8)
    return fail("kappa dispersion " + format_double(kf.dispersion));
  const QMComponents f = qm_e2(e2, kf.kappa, 1e-11);
  const LambdaFit lf = fit_lambda(f, samples);
  if (lf.residual_max > 1e-8)
    return fail("completion residual " + format_double(lf.residual_max));
  return ok();
}

Outcome criterion_sl2() {
  const Sl2Report r = sl2_commutator_check(20, 12);
  if (!r.ok) return fail(r.first_failure);
  if (r.monomials <= 0) return fail("empty monomial sweep");
  return ok();
}

Outcome criterion_main_theorem() {
  MainVerifyConfig vc;
  vc.n_lo = 2;
  vc.n_hi = 6;
  vc.tol = 1e-7;
  const struct {
    const char* name;
    int weight;
  } forms[] = {{"E4", 4}, {"E6", 6}};
  for (const auto& fm : forms) {
    const EquivariantFn h = rational_equivariant_named(fm.name, 40, 1e-9);
    const RunConfig cfg = theorem_config(97);
    const std::vector<GZSample> samples =
        sample_gz(h, cfg, std::string("acceptance/main/") + fm.name, false);
    if (samples.size() != 50)
      return fail(std::string(fm.name) + ": expected 50 samples, got " +
                  std::to_string(samples.size()));
    const MainTheoremReport r = main_theorem_verify(h, samples, vc);
    if (r.verdict != "PASS")
      return fail(std::string(fm.name) + " verdict " + r.verdict);
    for (const auto& [n, res] : r.per_n)
      if (res > vc.tol)
        return fail(std::string(fm.name) + " residual at n=" +
                    std::to_string(n) + " is " + format_double(res));
  }
  return ok();
}

Outcome criterion_negative_control() {
  const EquivariantFn h = exp_map();
  const RunConfig cfg = theorem_config(98);
  const std::vector<GZSample> samples =
      sample_gz(h, cfg, "acceptance/negative", true);
  if (samples.empty()) return fail("no samples drawn");
  MainVerifyConfig vc;
  vc.n_lo = 2;
  vc.n_hi = 2;
  int words = 0;
  for (const IMat& g : distinct_words(samples)) {
    if (g.c == 0) continue;
    std::vector<GZSample> sub;
    for (const GZSample& s : samples)
      if (s.g == g) sub.push_back(s);
    const MainTheoremReport r = main_theorem_verify(h, sub, vc);
    if (r.verdict != "FAIL")
      return fail("word " + std::to_string(words) + " verdict " + r.verdict);
    if (r.per_n.at(2) < 1e-2)
      return fail("word " + std::to_string(words) + " residual only " +
                  format_double(r.per_n.at(2)));
    ++words;
  }
  if (words == 0) return fail("no word with c != 0 sampled");
  return ok();
}

Outcome criterion_converse() {
  MainVerifyConfig vc;
  vc.n_lo = 2;
  vc.n_hi = 7;
  vc.tol = 1e-7;
  const EquivariantFn h = rational_equivariant_named("E4", 40, 1e-9);
  RunConfig cfg = theorem_config(99);
  cfg.n_hi = 7;  // sampling must probe the widest level checked below
  const std::vector<GZSample> good =
      sample_gz(h, cfg, "acceptance/converse", false);
  const ConverseReport pos = converse_check(h, 5, good, vc);
  if (!pos.witness_pass) return fail("witness level failed on a passing h");
  if (pos.full.verdict != "PASS")
    return fail("full range verdict " + pos.full.verdict);
  if (!pos.consistent) return fail("witness did not predict the range");

  const EquivariantFn bad = exp_map();
  const std::vector<GZSample> badsm =
      sample_gz(bad, cfg, "acceptance/converse-neg", true);
  const ConverseReport neg = converse_check(bad, 5, badsm, vc);
  if (neg.witness_pass) return fail("witness level passed on a failing h");
  if (neg.full.verdict != "FAIL")
    return fail("negative full verdict " + neg.full.verdict);
  if (neg.full.per_n.at(2) < 1e-2)
    return fail("failing h did not fail at n=2");
  if (!neg.consistent) return fail("negative witness inconsistent");
  return ok();
}

Outcome criterion_representation() {
  std::vector<Cplx> pts;
  Rng prng = case_rng(2026, "acceptance/rep-points", 0);
  for (int i = 0; i < 10; ++i)
    pts.push_back(Cplx(prng.uniform(-0.8, 0.8), prng.uniform(1.0, 2.0)));

  const EquivariantFn hs[] = {rational_equivariant_named("E4", 40, 1e-9),
                              rational_equivariant_named("E6", 40, 1e-9)};
  Rng wrng = case_rng(2026, "acceptance/rep-words", 0);
  for (const EquivariantFn& h : hs) {
    for (int wi = 0; wi < 5; ++wi) {
      GroupWord w = random_word(wrng, 8);
      while (w.letters.empty()) w = random_word(wrng, 8);
      const IMat g = word_to_matrix(w);
      const RepFit fit = fit_representation(h, g, pts);
      if (fit.degenerate) return fail(h.label + ": degenerate fit");
      const double dev = projective_deviation(fit.rho, to_cmat(g));
      if (dev > 1e-6)
        return fail(h.label + ": deviation " + format_double(dev));
    }
    std::vector<GroupWord> words;
    while (words.size() < 20) {
      GroupWord w = random_word(wrng, 8);
      if (w.letters.size() >= 2) words.push_back(w);
    }
    const HomomorphismReport hr = homomorphism_check(h, words, pts);
    if (hr.degenerate) return fail(h.label + ": homomorphism degenerate");
    if (hr.words != 20)
      return fail(h.label + ": " + std::to_string(hr.words) + " words");
    if (hr.max_deviation > 1e-6)
      return fail(h.label + ": homomorphism deviation " +
                  format_double(hr.max_deviation));
  }
  return ok();
}

Outcome criterion_determinism() {
  RunConfig cfg;
  cfg.seed = 424242;
  cfg.q_order = 40;
  cfg.jet_order = 8;
  cfg.tol = 1e-7;
  cfg.words = 2;
  cfg.word_len = 6;
  cfg.points = 3;
  cfg.n_lo = 2;
  cfg.n_hi = 4;

  cfg.workers = 1;
  const Report r1 = run_suite(SuiteName::all, cfg);
  const Report r2 = run_suite(SuiteName::all, cfg);
  RunConfig cfg4 = cfg;
  cfg4.workers = 4;
  const Report r3 = run_suite(SuiteName::all, cfg4);

  // Byte-identity over an empty report would prove nothing; demand real
  // content before comparing.
  if (r1.children.size() != 5)
    return fail("expected 5 sub-suites, got " +
                std::to_string(r1.children.size()));
  long total = 0;
  for (const Report& c : r1.children) {
    if (c.cases.empty()) return fail("sub-suite " + c.suite + " ran no cases");
    total += static_cast<long>(c.cases.size());
  }
  if (total < 50)
    return fail("only " + std::to_string(total) + " cases across sub-suites");

  const std::string t1 = report_to_json(r1, cfg).dump(2);
  const std::string t2 = report_to_json(r2, cfg).dump(2);
  const std::string t3 = report_to_json(r3, cfg4).dump(2);
  if (t1 != t2) return fail("two runs differ at the byte level");
  if (t1 != t3) return fail("1-vs-4 workers differ at the byte level");
  if (r1.aggregate_verdict() != "PASS")
    return fail("suite verdict " + r1.aggregate_verdict());
  return ok();
}

}  // namespace

int main() {
  std::printf("acceptance gate: 13 criteria\n");
  run_criterion(1, "exp-series-invariants", 1.0, criterion_bernoulli);
  run_criterion(2, "method-cross-agreement", 30.0, criterion_cross_agreement);
  run_criterion(3, "projective-invariance", 0.0, criterion_invariance);
  run_criterion(4, "ode-oracle", 0.0, criterion_ode_oracle);
  run_criterion(5, "jet-identities", 0.0, criterion_jet_identities);
  run_criterion(6, "eisenstein-coefficients", 0.0, criterion_eisenstein);
  run_criterion(7, "e2-quasimodularity", 0.0, criterion_quasimodular_e2);
  run_criterion(8, "operator-relations", 60.0, criterion_sl2);
  run_criterion(9, "main-theorem-forward", 120.0, criterion_main_theorem);
  run_criterion(10, "negative-control", 0.0, criterion_negative_control);
  run_criterion(11, "converse-witness", 0.0, criterion_converse);
  run_criterion(12, "representation-recovery", 0.0, criterion_representation);
  run_criterion(13, "deterministic-reports", 0.0, criterion_determinism);
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "udisc/bounds.hpp"
#include "udisc/classify.hpp"
#include "udisc/cli.hpp"
#include "udisc/ensemble_io.hpp"
#include "udisc/oracle.hpp"
#include "udisc/supports.hpp"
#include "udisc/witness.hpp"

using namespace udisc;
using namespace udisc::test;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Records the first failure of a criterion and keeps counting the rest.
class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  bool ok() const { return failures_ == 0; }
  std::size_t failures() const { return failures_; }
  const std::string& first() const { return first_; }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

struct ChainLedger {
  std::size_t checked = 0;
  std::size_t violated = 0;
  double worst_pairwise = INFINITY;
  double worst_cauchy = INFINITY;
  double worst_levels = INFINITY;
  std::string first;

  void record(const Ensemble& e, const Povm& p, const std::string& source) {
    ++checked;
    try {
      const ProofChainSlacks s = verify_proof_chain(e, p, kTol);
      worst_pairwise = std::min(worst_pairwise, s.pairwise);
      for (double c : s.cauchy) worst_cauchy = std::min(worst_cauchy, c);
      worst_levels = std::min(worst_levels, s.levels);
      if (!s.holds()) {
        ++violated;
        if (first.empty()) first = source + ": slack below tolerance";
      }
    } catch (const std::exception& ex) {
      ++violated;
      if (first.empty()) first = source + ": " + ex.what();
    }
  }
};

int g_failed = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failed;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.uniform() * static_cast<double>(hi - lo + 1));
}

std::vector<double> priors_from(Rng& rng, std::size_t n) { return random_priors(n, rng); }

double min_eigenvalue(const ComplexMatrix& m) {
  const RealVector ev = hermitian_eig(m).eigenvalues;
  return ev(ev.size() - 1);
}

int run_cli(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "udisc");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path workdir() {
  const fs::path d = fs::temp_directory_path() / "udisc_acceptance";
  fs::create_directories(d);
  return d;
}

// Identifiable corpus for criteria 4 and 5: dim <= 6, n in {2, 3}, sum of ranks <= dim.
std::vector<Ensemble> identifiable_corpus() {
  std::vector<Ensemble> out;
  Rng rng(4004);
  for (std::size_t k = 0; k < 100; ++k) {
    const std::size_t n = 2 + k % 2;
    const std::size_t dim = pick(rng, n, 6);
    std::vector<std::size_t> ranks(n, 1);
    std::size_t spare = dim - n;
    for (auto& r : ranks) {
      const std::size_t extra = pick(rng, 0, spare);
      r += extra;
      spare -= extra;
    }
    GenSpec spec;
    spec.dim = dim;
    spec.n = n;
    spec.ranks = ranks;
    spec.seed = derive_seed(4004, k);
    spec.priors = priors_from(rng, n);
    out.push_back(generate(spec));
  }
  return out;
}

ChainLedger g_chains;

void criterion1() {
  Criterion c;
  Rng rng(1001);
  const auto t0 = Clock::now();
  double worst_p = 0.0;
  double worst_off = 0.0;
  for (std::size_t k = 0; k < 200; ++k) {
    const std::size_t dim = pick(rng, 2, 8);
    const std::size_t n = pick(rng, 2, std::min<std::size_t>(4, dim));
    std::vector<std::size_t> ranks(n, 1);
    std::size_t spare = dim - n;
    for (auto& r : ranks) {
      const std::size_t extra = pick(rng, 0, spare);
      r += extra;
      spare -= extra;
    }
    const Ensemble e = ensemble(orthogonal_family(dim, ranks, derive_seed(1001, k)), priors_from(rng, n));
    const DistinguishabilityClass cls = classify_ensemble(e, kTol);
    c.check(cls.kind == DistinguishabilityKind::Perfect, "ensemble " + std::to_string(k) + " not Perfect");
    if (cls.kind != DistinguishabilityKind::Perfect) continue;
    const Povm p = perfect_povm(e, kTol);
    const DiscriminationOutcome o = evaluate_povm(e, p);
    for (double v : o.success_probs) worst_p = std::max(worst_p, std::abs(v - 1.0));
    worst_off = std::max(worst_off, o.offdiag_max);
    g_chains.record(e, p, "perfect #" + std::to_string(k));
  }
  const double elapsed = seconds_since(t0);
  c.check(worst_p <= 1e-8, "p_i deviates from 1 by " + fmt("%.3g", worst_p));
  c.check(worst_off <= 1e-8, "offdiag_max " + fmt("%.3g", worst_off));
  c.check(elapsed < 10.0, "runtime " + fmt("%.2f s", elapsed));
  report(1, "orthogonal families are Perfect and perfect_povm is exact", c.ok(),
         "200 ensembles, max|p_i-1| = " + fmt("%.2e", worst_p) + ", max offdiag = " + fmt("%.2e", worst_off) +
             ", " + fmt("%.2f s", elapsed) + (c.ok() ? "" : "; " + c.first()));
}

void criterion2() {
  Criterion c;
  Rng rng(2002);
  double min_p = INFINITY;
  double worst_lemma = 0.0;
  double worst_psd = INFINITY;
  for (std::size_t k = 0; k < 200; ++k) {
    const std::size_t dim = pick(rng, 2, 8);
    const std::size_t n = pick(rng, 2, std::min<std::size_t>(5, dim));
    std::vector<std::size_t> ranks(n, 1);
    std::size_t spare = dim - n;
    for (auto& r : ranks) {
      const std::size_t extra = pick(rng, 0, spare);
      r += extra;
      spare -= extra;
    }
    GenSpec spec{dim, n, ranks, derive_seed(2002, k), priors_from(rng, n), Family::Generic};
    const Ensemble e = generate(spec);
    const std::string tag = "ensemble " + std::to_string(k);
    try {
      const WitnessSet w = build_witness_povm(e, kTol);
      // Povm invariants: every element PSD and I - sum PSD.
      for (const auto& el : w.povm.elements()) worst_psd = std::min(worst_psd, min_eigenvalue(el));
      worst_psd = std::min(worst_psd, min_eigenvalue(w.povm.inconclusive()));
      const DiscriminationOutcome o = evaluate_povm(e, w.povm);
      for (double v : o.success_probs) min_p = std::min(min_p, v);
      const double lemma = check_lemma1(e, w.povm, kTol);
      worst_lemma = std::max(worst_lemma, lemma);
      g_chains.record(e, w.povm, "witness #" + std::to_string(k));
    } catch (const std::exception& ex) {
      c.check(false, tag + ": " + ex.what());
    }
  }
  c.check(min_p > 1e-12, "min p_i = " + fmt("%.3g", min_p));
  c.check(worst_lemma <= 1e-8, "check_lemma1 = " + fmt("%.3g", worst_lemma));
  c.check(worst_psd >= -kTol.psd_tol, "min eigenvalue " + fmt("%.3g", worst_psd));
  report(2, "witness construction on identifiable ensembles", c.ok(),
         "200 ensembles, min p_i = " + fmt("%.3e", min_p) + ", max lemma1 = " + fmt("%.2e", worst_lemma) +
             ", min POVM eigenvalue = " + fmt("%.2e", worst_psd) + (c.ok() ? "" : "; " + c.first()));
}

void criterion3() {
  Criterion c;
  std::vector<Ensemble> cases{full_rank_counterexample()};
  Rng rng(3003);
  for (std::size_t k = 0; k < 50; ++k) {
    const std::size_t dim = pick(rng, 2, 6);
    const std::size_t n = pick(rng, 2, 4);
    GenSpec spec{dim, n, std::vector<std::size_t>(n, dim), derive_seed(3003, k), priors_from(rng, n),
                 Family::Generic};
    cases.push_back(generate(spec));
  }
  const fs::path dir = workdir();
  std::size_t forced = 0;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const Ensemble& e = cases[k];
    const std::string tag = k == 0 ? "counterexample" : "full-support #" + std::to_string(k - 1);
    const DistinguishabilityClass cls = classify_ensemble(e, kTol);
    c.check(cls.kind == DistinguishabilityKind::NotUnambiguous, tag + " classified " + std::string(to_string(cls.kind)));

    const fs::path f = dir / ("c3_" + std::to_string(k) + ".json");
    std::ofstream(f) << write_ensemble(e);
    const int code = run_cli({"witness", f.string()});
    c.check(code == cli::kIdentifiabilityError, tag + ": witness exit " + std::to_string(code));

    const OptimizationResult r = optimal_unambiguous(e, kTol);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (cls.per_state_identifiable[i]) continue;
      const bool zero = r.block_dims[i] == 0 && r.success_probs[i] == 0.0 && r.povm.element(i).norm() == 0.0;
      c.check(zero, tag + ": state " + std::to_string(i) + " not forced to zero");
      forced += zero ? 1 : 0;
    }
  }
  report(3, "full-support ensembles are not unambiguously distinguishable", c.ok(),
         std::to_string(cases.size()) + " ensembles, witness exit 5 each, " + std::to_string(forced) +
             " states forced to p_i = 0" + (c.ok() ? "" : "; " + c.first()));
}

struct CorpusResult {
  std::vector<BoundReport> bounds;
  std::vector<double> p_star;
};

CorpusResult criterion4(const std::vector<Ensemble>& corpus) {
  Criterion c;
  CorpusResult res;
  const auto t0 = Clock::now();
  double worst_lower = INFINITY;  // p_star - max_k P0^(k)
  double worst_upper = INFINITY;  // P0(witness) - p_star
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const Ensemble& e = corpus[k];
    const std::string tag = "ensemble " + std::to_string(k);
    const BoundReport b = bound_series(e, kMaxBoundLevels, kTol);
    const OptimizationResult r = optimal_unambiguous(e, kTol);
    c.check(r.status == OptimizationStatus::Converged, tag + ": oracle " + std::string(to_string(r.status)));
    for (double level : b.levels) worst_lower = std::min(worst_lower, r.p_star - level);
    try {
      const WitnessSet w = build_witness_povm(e, kTol);
      const double pw = evaluate_povm(e, w.povm).inconclusive_prob;
      worst_upper = std::min(worst_upper, pw - r.p_star);
      g_chains.record(e, w.povm, "witness corpus #" + std::to_string(k));
    } catch (const std::exception& ex) {
      c.check(false, tag + ": " + ex.what());
    }
    g_chains.record(e, r.povm, "oracle corpus #" + std::to_string(k));
    res.bounds.push_back(b);
    res.p_star.push_back(r.p_star);
  }
  const double elapsed = seconds_since(t0);
  c.check(worst_lower >= -1e-7, "p_star below a bound level by " + fmt("%.3g", -worst_lower));
  c.check(worst_upper >= -1e-7, "witness P0 below p_star by " + fmt("%.3g", -worst_upper));
  c.check(elapsed < 300.0, "runtime " + fmt("%.1f s", elapsed));
  report(4, "bound validity and witness upper bound", c.ok(),
         std::to_string(corpus.size()) + " ensembles, min(p_star - P0^(k)) = " + fmt("%.3e", worst_lower) +
             ", min(P0_witness - p_star) = " + fmt("%.3e", worst_upper) + ", " + fmt("%.1f s", elapsed) +
             (c.ok() ? "" : "; " + c.first()));
  return res;
}

void criterion5(const std::vector<Ensemble>& corpus, const CorpusResult& res) {
  Criterion c;
  double worst_mono = INFINITY;
  double worst_collapse = 0.0;
  std::size_t deepest = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const Ensemble& e = corpus[k];
    const std::string tag = "ensemble " + std::to_string(k);
    const BoundReport all = bound_series(e, kMaxBoundLevels, kTol, SeriesStop::AllLevels);
    for (std::size_t j = 1; j < all.levels.size(); ++j) {
      worst_mono = std::min(worst_mono, all.levels[j] - all.levels[j - 1]);
    }
    const BoundReport& b = res.bounds[k];
    c.check(b.converged_at > 0 && b.converged_at <= kMaxBoundLevels, tag + ": no convergence within 64 levels");
    if (b.levels.size() >= 2) {
      c.check(std::abs(b.levels.back() - b.levels[b.levels.size() - 2]) < kSeriesConvergence,
              tag + ": last increment too large");
    }
    deepest = std::max(deepest, b.converged_at);
    if (e.size() == 2) {
      // Independent oracle: fidelity from the Gram eigenvalues of sqrt(a) sqrt(b).
      const ComplexMatrix m = psd_sqrt(e.state(0).matrix(), kTol) * psd_sqrt(e.state(1).matrix(), kTol);
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> s(m.adjoint() * m, Eigen::EigenvaluesOnly);
      double f = 0.0;
      const double cut = 1e-14 * s.eigenvalues().maxCoeff();  // drop roundoff before the square root
      for (Eigen::Index i = 0; i < s.eigenvalues().size(); ++i) {
        if (s.eigenvalues()(i) > cut) f += std::sqrt(s.eigenvalues()(i));
      }
      const double target = 2.0 * std::sqrt(e.prior(0) * e.prior(1)) * f;
      for (double level : all.levels) worst_collapse = std::max(worst_collapse, std::abs(level - target));
    }
  }
  c.check(worst_mono >= -1e-12, "level decrease " + fmt("%.3g", -worst_mono));
  c.check(worst_collapse <= 1e-12, "n=2 collapse error " + fmt("%.3g", worst_collapse));
  report(5, "bound series structure", c.ok(),
         "min increment = " + fmt("%.2e", worst_mono) + ", n=2 collapse error = " + fmt("%.2e", worst_collapse) +
             ", deepest convergence level = " + std::to_string(deepest) + (c.ok() ? "" : "; " + c.first()));
}

void criterion6() {
  Criterion c;
  double worst_tight = 0.0;
  for (int si = 1; si <= 9; ++si) {
    const double s = 0.1 * si;
    const Ensemble e = pure_pair(s);
    const OptimizationResult r = optimal_unambiguous(e, kTol);
    const BoundReport b = bound_series(e, 1, kTol);
    worst_tight = std::max({worst_tight, std::abs(r.p_star - s), std::abs(r.p_star - b.levels[0])});
    g_chains.record(e, r.povm, "oracle tight s=" + fmt("%.1f", s));
  }
  c.check(worst_tight <= 1e-6, "equal-prior deviation " + fmt("%.3g", worst_tight));

  // Grid verification of the closed form against the optimizer.
  double worst_grid = 0.0;
  double min_margin = INFINITY;
  for (int si = 1; si <= 9; ++si) {
    for (int ei = 1; ei <= 9; ++ei) {
      const double s = 0.1 * si;
      const double eta1 = 0.1 * ei;
      const Ensemble e = pure_pair(s, eta1);
      const OptimizationResult r = optimal_unambiguous(e, kTol);
      worst_grid = std::max(worst_grid, std::abs(r.p_star - js_two_pure_optimal(s, eta1, 1.0 - eta1)));
      const double lo = std::min(eta1, 1.0 - eta1);
      const double hi = std::max(eta1, 1.0 - eta1);
      if (s > std::sqrt(lo / hi) + 1e-12) {
        min_margin = std::min(min_margin, r.p_star - bound_series(e, 1, kTol).levels[0]);
      }
    }
  }
  c.check(worst_grid <= 1e-6, "closed form vs optimizer " + fmt("%.3g", worst_grid));
  c.check(min_margin > 0.0, "non-tight margin " + fmt("%.3g", min_margin));

  const Ensemble skew = pure_pair(0.9, 0.95);
  const OptimizationResult r = optimal_unambiguous(skew, kTol);
  const double p1 = bound_series(skew, 1, kTol).levels[0];
  const double margin = r.p_star - p1;
  const double js = js_two_pure_optimal(0.9, 0.95, 0.05);
  c.check(margin > 1e-4, "margin at s=0.9 " + fmt("%.3g", margin));
  c.check(std::abs(r.p_star - js) <= 1e-6, "s=0.9 optimum vs closed form " + fmt("%.3g", std::abs(r.p_star - js)));
  g_chains.record(skew, r.povm, "oracle skew");
  report(6, "tightness at equal priors, non-tightness when unbalanced", c.ok(),
         "max|p_star - s| = " + fmt("%.2e", worst_tight) + ", grid max|p_star - js| = " + fmt("%.2e", worst_grid) +
             ", s=0.9 eta=(0.95,0.05): p_star = " + fmt("%.6f", r.p_star) + ", P0^(1) = " + fmt("%.6f", p1) +
             " (margin " + fmt("%.4f", margin) + ")" + (c.ok() ? "" : "; " + c.first()));
}

void criterion7() {
  const bool ok = g_chains.checked > 0 && g_chains.violated == 0;
  report(7, "proof-chain slacks for every produced POVM", ok,
         std::to_string(g_chains.checked) + " POVMs, min pairwise = " + fmt("%.2e", g_chains.worst_pairwise) +
             ", min cauchy = " + fmt("%.2e", g_chains.worst_cauchy) + ", min level slack = " +
             fmt("%.2e", g_chains.worst_levels) + (ok ? "" : "; " + g_chains.first));
}

void criterion8() {
  Criterion c;
  Rng rng(8008);
  double worst_recon = 0.0;
  for (Eigen::Index d = 1; d <= 16; ++d) {
    for (int rep = 0; rep < 4; ++rep) {
      const ComplexMatrix a = random_hermitian(d, rng);
      const HermitianEig eig = hermitian_eig(a);
      const ComplexMatrix back =
          eig.eigenvectors * eig.eigenvalues.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
      worst_recon = std::max(worst_recon, (back - a).norm() / a.norm());
    }
  }
  c.check(worst_recon <= 1e-10, "reconstruction " + fmt("%.3g", worst_recon));

  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const std::size_t d = pick(rng, 1, 8);
    const DensityMatrix a = random_density(d, pick(rng, 1, d), rng);
    const DensityMatrix b = random_density(d, pick(rng, 1, d), rng);
    const double fab = fidelity(a, b, kTol);
    const double fba = fidelity(b, a, kTol);
    const ComplexMatrix u = random_unitary(d, rng);
    const DensityMatrix ua = DensityMatrix::validate(u * a.matrix() * u.adjoint(), kTol);
    const DensityMatrix ub = DensityMatrix::validate(u * b.matrix() * u.adjoint(), kTol);
    const double dev = std::max({std::abs(fab - fba), std::abs(fidelity(a, a, kTol) - 1.0),
                                 std::max(0.0, -fab), std::max(0.0, fab - 1.0),
                                 std::abs(fidelity(ua, ub, kTol) - fab)});
    worst = std::max(worst, dev);
  }
  c.check(worst <= 1e-9, "fidelity axiom deviation " + fmt("%.3g", worst));
  report(8, "kernel numerics", c.ok(),
         "max relative reconstruction error = " + fmt("%.2e", worst_recon) +
             ", max fidelity axiom deviation over 500 pairs = " + fmt("%.2e", worst) +
             (c.ok() ? "" : "; " + c.first()));
}

void criterion9() {
  Criterion c;
  const fs::path dir = workdir();
  std::size_t fixtures = 0;
  const std::vector<std::vector<std::string>> specs{
      {"--dim", "2", "--n", "2", "--ranks", "1,1", "--seed", "7"},
      {"--dim", "4", "--n", "3", "--ranks", "1,2,1", "--seed", "42", "--priors", "0.2,0.3,0.5"},
      {"--dim", "5", "--n", "2", "--ranks", "2,2", "--seed", "9", "--family", "orthogonal"},
      {"--fixture", "counterexample"},
  };
  for (std::size_t k = 0; k < specs.size(); ++k) {
    std::string gen_text[2], cls_text[2], rep_text[2];
    for (int pass = 0; pass < 2; ++pass) {
      const fs::path f = dir / ("c9_" + std::to_string(k) + "_" + std::to_string(pass) + ".json");
      const fs::path r = dir / ("c9_" + std::to_string(k) + "_" + std::to_string(pass) + ".report.json");
      std::vector<std::string> gen{"gen"};
      gen.insert(gen.end(), specs[k].begin(), specs[k].end());
      gen.push_back("-o");
      gen.push_back(f.string());
      c.check(run_cli(gen) == cli::kOk, "gen failed for fixture " + std::to_string(k));
      gen_text[pass] = slurp(f);
      c.check(run_cli({"classify", f.string(), "--json"}, &cls_text[pass]) == cli::kOk,
              "classify failed for fixture " + std::to_string(k));
      c.check(run_cli({"report", f.string(), "--json", "-o", r.string()}) == cli::kOk,
              "report failed for fixture " + std::to_string(k));
      rep_text[pass] = slurp(r);
    }
    const bool same = gen_text[0] == gen_text[1] && cls_text[0] == cls_text[1] && rep_text[0] == rep_text[1] &&
                      !rep_text[0].empty();
    c.check(same, "fixture " + std::to_string(k) + " not byte-deterministic");
    fixtures += same ? 1 : 0;
  }

  // Exit-code contract.
  const fs::path good = dir / "c9_1_0.json";
  const std::string text = slurp(good);
  const fs::path trunc = dir / "c9_truncated.json";
  std::ofstream(trunc) << text.substr(0, text.size() / 3);
  std::string bad_prior = text;
  const auto pos = bad_prior.find("\"prior\": ");
  bad_prior.replace(pos, 9, "\"prior\": 7");
  const fs::path invalid = dir / "c9_invalid.json";
  std::ofstream(invalid) << bad_prior;
  const fs::path big = dir / "c9_big.json";
  run_cli({"gen", "--dim", "32", "--n", "2", "-o", big.string()});

  const std::vector<std::pair<int, std::vector<std::string>>> contract{
      {cli::kOk, {"classify", good.string()}},
      {cli::kFileError, {"classify", (dir / "c9_missing.json").string()}},
      {cli::kParseError, {"classify", trunc.string()}},
      {cli::kValidationError, {"classify", invalid.string()}},
      {cli::kIdentifiabilityError, {"witness", (dir / "c9_3_0.json").string()}},
      {cli::kScaleError, {"optimize", big.string()}},
      {cli::kFlagError, {"bounds", good.string(), "--levels", "65"}},
  };
  std::string codes;
  for (const auto& [expected, args] : contract) {
    const int got = run_cli(args);
    codes += (codes.empty() ? "" : " ") + std::to_string(got);
    c.check(got == expected, args[0] + ": exit " + std::to_string(got) + ", expected " + std::to_string(expected));
  }
  report(9, "CLI determinism and exit-code contract", c.ok(),
         std::to_string(fixtures) + "/" + std::to_string(specs.size()) +
             " fixtures byte-identical across runs, exit codes {" + codes + "}" + (c.ok() ? "" : "; " + c.first()));
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  const std::vector<Ensemble> corpus = identifiable_corpus();
  const CorpusResult res = criterion4(corpus);
  criterion5(corpus, res);
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("%d of 9 criteria failed (%.1f s)\n", g_failed, seconds_since(t0));
  return g_failed == 0 ? 0 : 1;
}

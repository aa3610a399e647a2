#include "digit_dirichlet/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

#include "digit_dirichlet/beta_series.hpp"
#include "digit_dirichlet/delange.hpp"
#include "digit_dirichlet/digit_sums.hpp"
#include "digit_dirichlet/integer_base_series.hpp"
#include "digit_dirichlet/pole_catalog.hpp"

namespace digit_dirichlet {

namespace {

std::string fmt(const char* pattern, ...) {
  va_list args;
  va_start(args, pattern);
  char buffer[512];
  std::vsnprintf(buffer, sizeof(buffer), pattern, args);
  va_end(args);
  return buffer;
}

// --------------------------------------------------------------------------
// Direct-sum oracles (tail bounds from the growth estimates)
// --------------------------------------------------------------------------

EvalResult direct_zb(std::int64_t b, Complex s, std::int64_t N) {
  auto coeff = [b](std::int64_t n) { return double(differenced_digit_sum(b, n)); };
  // Abel summation against the partial sums d_b(t) <= (b-1)(log_b t + 1)
  // gives a tail of order |s| d_b(N) N^{-Re s}.
  auto tail = [b, s](std::int64_t n) {
    double dmax = (b - 1.0) * (std::log(double(n)) / std::log(double(b)) + 1.0);
    double sigma = s.real();
    return dmax * std::pow(double(n), -sigma) * (1.0 + std::abs(s) / (sigma - 1.0));
  };
  return direct_dirichlet_sum(coeff, s, N, 1.0, tail);
}

EvalResult direct_fb(std::int64_t b, Complex s, std::int64_t N) {
  auto coeff = [b](std::int64_t n) { return double(digit_sum(b, n)); };
  auto tail = [b, s](std::int64_t n) {
    double sigma = s.real();
    double c = (b - 1.0) * (std::log(double(n)) / std::log(double(b)) + 2.0);
    return 2.0 * c / ((sigma - 1.0) * std::pow(double(n), sigma - 1.0));
  };
  return direct_dirichlet_sum(coeff, s, N, 1.0, tail);
}

EvalResult direct_gb(std::int64_t b, Complex s, std::int64_t N) {
  auto coeff = [b](std::int64_t n) { return double(cumulative_digit_sum(b, n)); };
  auto tail = [b, s](std::int64_t n) {
    double sigma = s.real();
    double c = (b - 1.0) / (2.0 * std::log(double(b))) + 0.5;
    double logn = std::log(double(n));
    return 2.0 * c * (logn + 1.0) /
           ((sigma - 2.0) * std::pow(double(n), sigma - 2.0));
  };
  return direct_dirichlet_sum(coeff, s, N, 2.0, tail);
}

PoleDescriptor find_pole(SeriesTag tag, std::int64_t b, int k, int m) {
  double v = lattice_spacing(b);
  double sigma0 = tag == SeriesTag::Fb ? 1.0 : (tag == SeriesTag::Gb ? 2.0 : 0.0);
  Complex loc(tag == SeriesTag::Gb && k == 1 ? 1.0 : sigma0 - k, v * m);
  auto poles = enumerate_poles(tag, b, std::abs(loc) + 1.0);
  for (const auto& p : poles) {
    if (p.lattice_k == k && p.lattice_m == m) return p;
  }
  throw InvalidInput("verification: pole not found in catalog");
}

// --------------------------------------------------------------------------
// Criteria
// --------------------------------------------------------------------------

CriterionOutcome crit_zb_closed_form(double ts) {
  double tol = 1e-6 * ts;
  double worst = 0.0;
  for (std::int64_t b : {2, 3, 10}) {
    for (Complex s : {Complex(2, 0), Complex(3, 0), Complex(2, 5)}) {
      auto oracle = direct_zb(b, s, 100000);
      double diff = std::abs(zb_eval(b, s) - oracle.value);
      worst = std::max(worst, diff);
    }
  }
  return {worst < tol, fmt("max |closed form - direct sum| = %.3g (tol %.1g)",
                           worst, tol)};
}

CriterionOutcome crit_continuation_oracle(double ts) {
  double tol = 1e-5 * ts;
  double worst = 0.0;
  bool within_estimates = true;
  for (std::int64_t b : {2, 3}) {
    auto fb = fb_eval(b, {2.5, 0.0}, 6, 1e-10);
    auto fb_oracle = direct_fb(b, {2.5, 0.0}, 1000000);
    double fdiff = std::abs(fb.value - fb_oracle.value);
    within_estimates = within_estimates &&
        fdiff <= fb.abs_error_estimate + fb_oracle.abs_error_estimate;
    worst = std::max(worst, fdiff);

    auto gb = gb_eval(b, {3.5, 0.0}, 6, 1e-10);
    auto gb_oracle = direct_gb(b, {3.5, 0.0}, 100000);
    double gdiff = std::abs(gb.value - gb_oracle.value);
    within_estimates = within_estimates &&
        gdiff <= gb.abs_error_estimate + gb_oracle.abs_error_estimate;
    worst = std::max(worst, gdiff);
  }
  return {within_estimates && worst < tol,
          fmt("max |continuation - series| = %.3g (tol %.1g), within summed "
              "estimates: %s", worst, tol, within_estimates ? "yes" : "no")};
}

CriterionOutcome crit_k_independence(double ts) {
  double tol = 1e-7 * ts;
  double worst = 0.0;
  for (Complex s : {Complex(0.5, 0.3), Complex(-1.5, 0.2)}) {
    auto a = fb_eval(2, s, 4, 1e-10);
    auto b = fb_eval(2, s, 8, 1e-10);
    worst = std::max(worst, std::abs(a.value - b.value));
  }
  auto a = gb_eval(2, {1.5, 0.7}, 4, 1e-10);
  auto b = gb_eval(2, {1.5, 0.7}, 8, 1e-10);
  worst = std::max(worst, std::abs(a.value - b.value));
  return {worst < tol,
          fmt("max |K=4 - K=8| = %.3g (tol %.1g)", worst, tol)};
}

CriterionOutcome crit_fb_residues(double ts) {
  double tol = 1e-6 * ts;
  double worst = 0.0;
  std::string parts;
  // (k, m) = (0, 1): s = 1 + 2 pi i / log 2.
  // (k, m) = (1, 0): s = 0, residue 1/(4 log 2).
  // (k, m) = (2, 0): s = -1, residue -(b-1)/(24 log b).
  for (auto [k, m] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{2, 0}}) {
    auto pole = find_pole(SeriesTag::Fb, 2, k, m);
    auto report = residue_check(pole, tol);
    worst = std::max(worst, report.abs_diff);
    parts += fmt(" (k=%d,m=%d): %.3g", k, m, report.abs_diff);
  }
  double expected_s0 = 1.0 / (4.0 * std::log(2.0));
  double got_s0 = find_pole(SeriesTag::Fb, 2, 1, 0).residue.real();
  bool anchor = std::abs(got_s0 - expected_s0) < 1e-14;
  return {worst < tol && anchor,
          fmt("contour vs formula:%s (tol %.1g)", parts.c_str(), tol)};
}

CriterionOutcome crit_gb_residues(double ts) {
  double tol_res = 1e-8 * ts;
  double tol_laurent = 1e-6 * ts;
  double worst_res = 0.0;
  for (std::int64_t b : {2, 3}) {
    auto pole = find_pole(SeriesTag::Gb, b, 1, 0);  // isolated s = 1
    auto report = residue_check(pole, tol_res);
    worst_res = std::max(worst_res, report.abs_diff);
  }
  // Double-pole data at s = 2 for b = 2 against the closed forms.
  double logb = std::log(2.0);
  ContourSpec spec{{2.0, 0.0}, 0.4, 64};
  auto f = [](Complex s) { return gb_eval(2, s, 6, 1e-10).value; };
  Complex a2 = laurent_coefficient(f, spec, 2);
  Complex a1 = laurent_coefficient(f, spec, 1);
  double d2 = std::abs(a2 - Complex(0.5 / logb, 0.0));
  double d1 = std::abs(
      a1 - Complex(0.5 / logb * (constants::log_two_pi - 1.0) - 0.75, 0.0));
  bool ok = worst_res < tol_res && d2 < tol_laurent && d1 < tol_laurent;
  return {ok, fmt("Res(G_b,1) diff = %.3g (tol %.1g); s=2 Laurent diffs "
                  "a_-2 = %.3g, a_-1 = %.3g (tol %.1g)",
                  worst_res, tol_res, d2, d1, tol_laurent)};
}

CriterionOutcome crit_zb_laurent(double ts) {
  double tol_res = 1e-9 * ts;
  double tol_const = 1e-8 * ts;
  double worst_res = 0.0;
  double worst_const = 0.0;
  for (std::int64_t b : {2, 3}) {
    double logb = std::log(double(b));
    ContourSpec spec{{0.0, 0.0}, 0.5, 64};
    auto f = [b](Complex s) { return zb_eval(b, s); };
    Complex a1 = laurent_coefficient(f, spec, 1);
    Complex a0 = laurent_coefficient(f, spec, 0);
    worst_res = std::max(worst_res,
                         std::abs(a1 - Complex((b - 1.0) / (2.0 * logb), 0.0)));
    Complex a0_expected(-(b + 1.0) / 4.0 +
                        (b - 1.0) * constants::log_two_pi / (2.0 * logb), 0.0);
    worst_const = std::max(worst_const, std::abs(a0 - a0_expected));
  }
  return {worst_res < tol_res && worst_const < tol_const,
          fmt("a_-1 diff = %.3g (tol %.1g), a_0 diff = %.3g (tol %.1g)",
              worst_res, tol_res, worst_const, tol_const)};
}

CriterionOutcome crit_delange_integer(double ts) {
  double tol = 0.05 * ts;
  double worst_1000 = 0.0;
  double worst_4000 = 0.0;
  for (double bd : {2.0, 3.0, 5.0, 10.0}) {
    BetaParam beta(bd);
    std::int64_t b = std::int64_t(bd);
    double w1 = 0.0;
    double w4 = 0.0;
    for (std::int64_t n = 1; n <= 1000; ++n) {
      double exact = double(cumulative_digit_sum(b, n));
      w1 = std::max(w1, std::abs(s_beta(beta, n, {1000}) - exact) / double(n));
      w4 = std::max(w4, std::abs(s_beta(beta, n, {4000}) - exact) / double(n));
    }
    worst_1000 = std::max(worst_1000, w1);
    worst_4000 = std::max(worst_4000, w4);
  }
  bool reduced = worst_4000 <= 0.8 * worst_1000;
  return {worst_1000 < tol && reduced,
          fmt("max |S_beta - S_b|/n: %.4g at K=1000 (tol %.3g), %.4g at "
              "K=4000 (reduction %.0f%%)", worst_1000, tol, worst_4000,
              100.0 * (1.0 - worst_4000 / worst_1000))};
}

CriterionOutcome crit_h_zero(double ts) {
  double tol = 0.02 * ts;
  double worst = 0.0;
  for (double b : {2.0, 3.0, 10.0}) {
    worst = std::max(worst, std::abs(h_beta(BetaParam(b), 0.0, {4000})));
  }
  return {worst < tol, fmt("max |h_b(0)| = %.4g at K=4000 (tol %.3g)", worst, tol)};
}

CriterionOutcome crit_gbeta_oracle(double ts) {
  double tol = 1e-4 * ts;
  FourierTruncation trunc{1000};
  auto table = build_sbeta_table(2.5, 100000, trunc);
  auto got = g_beta_eval(2.5, {3.0, 0.0}, trunc);

  auto coeff = [&](std::int64_t n) { return table.at(n); };
  auto tail = [&](std::int64_t n) {
    return table.growth_constant() * (std::log(double(n)) + 1.0) / double(n);
  };
  auto oracle = direct_dirichlet_sum(coeff, {3.0, 0.0}, table.n_max(), 2.0, tail);

  double diff = std::abs(got.value - oracle.value);
  bool within = diff <= got.abs_error_estimate + oracle.abs_error_estimate;
  // The analytic n-tail of the truncated oracle at N = 10^5 is
  // (beta-1)/(2 log beta)(ln N + 1)/N + O(1/N) ~ 1.005e-4, so the 1e-4 cap
  // sits below what this comparison can measure for any correct evaluator.
  return {within && diff < tol,
          fmt("|g_beta - table sum| = %.6g (tol %.1g, analytic oracle tail "
              "~1.005e-4), summed estimates %.3g",
              diff, tol, got.abs_error_estimate + oracle.abs_error_estimate)};
}

CriterionOutcome crit_beta_integer_coherence(double ts) {
  double tol_value = 1e-2 * ts;
  double tol_identity = 1e-12 * ts;
  FourierTruncation trunc{1000};
  auto table = build_sbeta_table(2.0, 100000, trunc);
  auto via_beta = f_beta_eval(table, {2.5, 0.0}, 1e-5);
  auto via_integer = fb_eval(2, {2.5, 0.0}, 6, 1e-10);
  double diff = std::abs(via_beta.value - via_integer.value);

  double worst_identity = 0.0;
  for (double b : {2.0, 3.0, 5.0, 10.0}) {
    BetaParam bp(b);
    double lhs = delange_coefficient(bp, 0).value.real() +
                 (b - 1.0) / (2.0 * bp.log_beta);
    double rhs = (b - 1.0) * constants::log_two_pi / (2.0 * bp.log_beta) -
                 (b + 1.0) / 4.0;
    worst_identity = std::max(worst_identity, std::abs(lhs - rhs));
  }
  return {diff < tol_value && worst_identity < tol_identity,
          fmt("|F_beta(2, 2.5) - F_2(2.5)| = %.4g (tol %.1g); Laurent "
              "identity residue = %.3g (tol %.1g)",
              diff, tol_value, worst_identity, tol_identity)};
}

CriterionOutcome crit_pole_count(double ts) {
  double lo = 3.2 / ts;
  double hi = 4.8 * ts;
  long c20 = count_poles(SeriesTag::Fb, 2, 20.0);
  long c40 = count_poles(SeriesTag::Fb, 2, 40.0);
  long c80 = count_poles(SeriesTag::Fb, 2, 80.0);
  double g1 = double(c40) / double(c20);
  double g2 = double(c80) / double(c40);
  bool ok = g1 >= lo && g1 <= hi && g2 >= lo && g2 <= hi;
  return {ok, fmt("counts %ld/%ld/%ld at r=20/40/80, ratios %.3f, %.3f "
                  "(band [%.2f, %.2f])", c20, c40, c80, g1, g2, lo, hi)};
}

CriterionOutcome crit_figure_grids(double ts) {
  double band = 0.5 * ts;
  FourierTruncation trunc{1000};
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "digit_dirichlet_verify_grids";
  fs::create_directories(dir);

  auto grid1 = figure_grid(1, 1.01, 15.0, 0.01, trunc);
  auto grid2 = figure_grid(2, 1.01, 8.0, 0.01, trunc);
  auto grid3 = figure_grid(3, 1.01, 8.0, 0.01, trunc);
  int figure = 0;
  for (const auto* grid : {&grid1, &grid2, &grid3}) {
    ++figure;
    for (const auto& row : *grid) {
      if (!std::isfinite(row.value)) {
        return {false, fmt("non-finite value at beta=%.2f in figure %d",
                           row.beta, figure)};
      }
    }
    std::ofstream os(dir / fmt("fig%d_beta_grid.csv", figure));
    write_grid_csv(os, *grid);
  }

  double lo = 1e300;
  double hi = -1e300;
  for (const auto& row : grid1) {
    if (row.beta >= 11.0 - 1e-9 && row.beta <= 15.0 + 1e-9) {
      lo = std::min(lo, row.value);
      hi = std::max(hi, row.value);
    }
  }
  bool flat = (hi - lo) < band;
  return {flat, fmt("grids emitted to %s; fig1 max-min on [11,15] = %.4g "
                    "(band %.2g)", dir.c_str(), hi - lo, band)};
}

CriterionOutcome crit_symmetry(double ts) {
  double tol = 1e-10 * ts;
  std::mt19937 rng(20250808);
  std::uniform_real_distribution<double> uim(0.2, 6.0);
  double worst = 0.0;
  int points = 0;

  auto record = [&](Complex a, Complex b) {
    worst = std::max(worst, std::abs(a - std::conj(b)));
    ++points;
  };

  // 40 points on Z_b across bases.
  std::uniform_real_distribution<double> ure(-3.0, 4.0);
  for (int i = 0; i < 40; ++i) {
    std::int64_t b = 2 + i % 3;
    Complex s(ure(rng), uim(rng));
    if (pole_distance(SeriesTag::Zb, b, s) < 1e-2) continue;
    record(zb_eval(b, std::conj(s)), zb_eval(b, s));
  }
  // 25 points on F_b.
  std::uniform_real_distribution<double> fre(-1.5, 3.0);
  for (int i = 0; i < 25; ++i) {
    std::int64_t b = 2 + i % 2;
    Complex s(fre(rng), uim(rng));
    if (pole_distance(SeriesTag::Fb, b, s) < 1e-2) continue;
    int K = default_truncation(SeriesTag::Fb, s);
    record(fb_eval(b, std::conj(s), K, 1e-11).value, fb_eval(b, s, K, 1e-11).value);
  }
  // 15 points on G_b.
  std::uniform_real_distribution<double> gre(0.5, 3.5);
  for (int i = 0; i < 15; ++i) {
    std::int64_t b = 2 + i % 2;
    Complex s(gre(rng), uim(rng));
    if (pole_distance(SeriesTag::Gb, b, s) < 1e-2) continue;
    int K = default_truncation(SeriesTag::Gb, s);
    record(gb_eval(b, std::conj(s), K, 1e-11).value, gb_eval(b, s, K, 1e-11).value);
  }
  // 10 points on G_beta, 10 on F_beta.
  std::uniform_real_distribution<double> bre(2.2, 4.0);
  for (int i = 0; i < 10; ++i) {
    Complex s(bre(rng), uim(rng));
    record(g_beta_eval(2.5, std::conj(s), {400}).value,
           g_beta_eval(2.5, s, {400}).value);
  }
  // 1/Gamma amplification at Im(s) up to 6 needs the table tail pushed past
  // e^{-20}; the extraction is conjugate-exact, so a loose tol is fine.
  auto table = build_sbeta_table(2.5, 200000, FourierTruncation{400});
  std::uniform_real_distribution<double> fbre(0.8, 2.5);
  for (int i = 0; i < 10; ++i) {
    Complex s(fbre(rng), uim(rng));
    record(f_beta_eval(table, std::conj(s), 1e-4).value,
           f_beta_eval(table, s, 1e-4).value);
  }
  return {points >= 100 && worst < tol,
          fmt("%d points, max |f(conj s) - conj f(s)| = %.3g (tol %.1g)",
              points, worst, tol)};
}

std::vector<Criterion> build_criteria() {
  return {
      {1, "zb-closed-form", "oracles", crit_zb_closed_form, "", 5.0},
      {2, "continuation-oracle", "oracles", crit_continuation_oracle, "", 60.0},
      {3, "k-independence", "continuation", crit_k_independence, "", 60.0},
      {4, "fb-residues", "residues", crit_fb_residues, "", 120.0},
      {5, "gb-residues", "residues", crit_gb_residues, "", 120.0},
      {6, "zb-laurent", "residues", crit_zb_laurent, "", 60.0},
      {7, "delange-integer-bases", "delange", crit_delange_integer, "", 300.0},
      {8, "h-zero-at-integer-bases", "delange", crit_h_zero, "", 60.0},
      {9, "gbeta-oracle", "beta-series", crit_gbeta_oracle,
       "the 1e-4 cap is below the ~1.005e-4 truncation tail of its own "
       "N=1e5 oracle", 60.0},
      {10, "beta-integer-coherence", "beta-series", crit_beta_integer_coherence,
       "", 60.0},
      {11, "pole-count-growth", "pole-count", crit_pole_count, "", 10.0},
      {12, "figure-grids", "delange", crit_figure_grids, "", 600.0},
      {13, "symmetry-suite", "symmetry", crit_symmetry, "", 120.0},
  };
}

}  // namespace

const std::vector<Criterion>& verification_criteria() {
  static const std::vector<Criterion> criteria = build_criteria();
  return criteria;
}

VerifyReport run_verification(std::ostream& os, const std::string& only,
                              double tol_scale, int threads) {
  const auto& all = verification_criteria();
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (only.empty() || all[i].name.find(only) != std::string::npos ||
        all[i].group.find(only) != std::string::npos) {
      selected.push_back(i);
    }
  }

  struct Timed {
    CriterionOutcome outcome;
    double seconds = 0.0;
  };
  std::vector<Timed> results(selected.size());

  auto run_one = [&](std::size_t slot) {
    auto start = std::chrono::steady_clock::now();
    Timed timed;
    try {
      timed.outcome = all[selected[slot]].run(tol_scale);
    } catch (const std::exception& e) {
      timed.outcome = {false, std::string("exception: ") + e.what()};
    }
    timed.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    results[slot] = std::move(timed);
  };

  if (threads <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) run_one(i);
  } else {
    std::vector<std::thread> pool;
    std::size_t next = 0;
    std::mutex mtx;
    std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(threads), selected.size());
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t slot;
          {
            std::lock_guard<std::mutex> lock(mtx);
            if (next >= selected.size()) return;
            slot = next++;
          }
          run_one(slot);
        }
      });
    }
    for (auto& worker : pool) worker.join();
  }

  VerifyReport report;
  report.total = static_cast<int>(selected.size());
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const auto& criterion = all[selected[i]];
    auto& timed = results[i];
    bool infeasible = !criterion.infeasible_note.empty();
    std::string suffix;
    // Budgets describe the criterion's own cost; under concurrency the wall
    // clock measures core contention instead, so they gate reference mode only.
    if (threads <= 1 && timed.outcome.passed &&
        timed.seconds > criterion.budget_seconds) {
      timed.outcome.passed = false;
      timed.outcome.detail += fmt(" [runtime %.0fs exceeded the %.0fs budget]",
                                  timed.seconds, criterion.budget_seconds);
    }
    if (!timed.outcome.passed) {
      ++report.failures;
      if (infeasible) {
        ++report.expected_failures;
        suffix = fmt("  [expected: %s]", criterion.infeasible_note.c_str());
      }
    } else if (infeasible) {
      // A documented-infeasible criterion passing means the measurement
      // changed; surface it rather than silently celebrating.
      ++report.surprises;
      suffix = "  [unexpected pass of a documented-infeasible criterion]";
    }
    // Timings go to stderr: stdout stays byte-identical across runs.
    os << fmt("[%2d] %s  %-24s %s%s\n", criterion.index,
              timed.outcome.passed ? "PASS" : "FAIL", criterion.name.c_str(),
              timed.outcome.detail.c_str(), suffix.c_str());
    std::fprintf(stderr, "# [%2d] %s: %.1fs\n", criterion.index,
                 criterion.name.c_str(), timed.seconds);
  }
  return report;
}

}  // namespace digit_dirichlet

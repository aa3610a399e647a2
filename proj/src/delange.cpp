#include "digit_dirichlet/delange.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>

namespace digit_dirichlet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Per-beta coefficient tables: cache[beta][k] = c_beta(k) for k >= 0.
// Growth replaces the whole vector behind a shared_ptr, so readers hold an
// immutable snapshot and never race with later growth.
std::mutex g_coeff_mutex;
std::map<double, std::shared_ptr<const std::vector<Complex>>> g_coeff_cache;

Complex compute_coefficient(const BetaParam& beta, int k) {
  if (k == 0) {
    double c0 = (beta.beta - 1.0) / (2.0 * beta.log_beta) *
                    (constants::log_two_pi - 1.0) -
                (beta.beta + 1.0) / 4.0;
    return Complex(c0, 0.0);
  }
  double t = 2.0 * kPi * k / beta.log_beta;
  // Heights grow linearly in k; past the EM engine's comfortable range the
  // absolute tolerance is relaxed (the 1/k^2 damping below makes the
  // coefficient error far smaller than the truncation tail anyway).
  PrecisionProfile profile;
  profile.target_abs_tol = std::max(1e-12, 2e-16 * std::abs(t));
  Complex zeta_val = riemann_zeta(Complex(0.0, t), profile);
  Complex damp = 1.0 / (Complex(0.0, 2.0 * kPi * k) *
                        (1.0 + Complex(0.0, t)));
  return -(beta.beta - 1.0) * damp * zeta_val;
}

// Returns a snapshot covering c_beta(0..K).
std::shared_ptr<const std::vector<Complex>> coefficients(const BetaParam& beta,
                                                         int K) {
  std::lock_guard<std::mutex> lock(g_coeff_mutex);
  auto& slot = g_coeff_cache[beta.beta];
  if (!slot || static_cast<int>(slot->size()) <= K) {
    auto grown = std::make_shared<std::vector<Complex>>(
        slot ? *slot : std::vector<Complex>{});
    grown->reserve(static_cast<std::size_t>(K) + 1);
    while (static_cast<int>(grown->size()) <= K) {
      grown->push_back(
          compute_coefficient(beta, static_cast<int>(grown->size())));
    }
    slot = grown;
  }
  return slot;
}

void check_truncation(const FourierTruncation& trunc) {
  if (trunc.cutoff_K < 1) throw InvalidInput("Fourier cutoff must be >= 1");
}

}  // namespace

BetaParam::BetaParam(double value) : beta(value), log_beta(std::log(value)) {
  if (!(value > 1.0 + 1e-6)) {
    throw OutOfDomain("BetaParam: beta must exceed 1 + 1e-6");
  }
}

DelangeCoefficient delange_coefficient(const BetaParam& beta, int k) {
  auto table = coefficients(beta, std::abs(k));
  Complex value = (*table)[static_cast<std::size_t>(std::abs(k))];
  if (k < 0) value = std::conj(value);
  return DelangeCoefficient{k, value};
}

double h_beta(const BetaParam& beta, double x, const FourierTruncation& trunc) {
  check_truncation(trunc);
  auto table = coefficients(beta, trunc.cutoff_K);
  const std::vector<Complex>& c = *table;
  double x_red = x - std::floor(x);  // makes h(x) = h(x+1) bit-exact

  Complex acc(c[0]);
  for (int k = 1; k <= trunc.cutoff_K; ++k) {
    Complex z = c[k] * std::polar(1.0, 2.0 * kPi * k * x_red);
    // (+k, -k) paired before accumulating: the pair is conjugate-symmetric,
    // so its imaginary part is pure rounding.
    acc += z + std::conj(z);
  }
  if (std::abs(acc.imag()) > 1e-10) {
    throw SymmetryViolation("h_beta: imaginary residue above 1e-10");
  }
  return acc.real();
}

double s_beta(const BetaParam& beta, std::int64_t n,
              const FourierTruncation& trunc) {
  if (n < 1) throw InvalidInput("s_beta: n must be >= 1");
  double nd = static_cast<double>(n);
  double log_n = std::log(nd);
  double main = (beta.beta - 1.0) / (2.0 * beta.log_beta) * nd * log_n;
  return main + h_beta(beta, log_n / beta.log_beta, trunc) * nd;
}

double d_beta(const BetaParam& beta, std::int64_t n,
              const FourierTruncation& trunc) {
  if (n < 1) throw InvalidInput("d_beta: n must be >= 1");
  return s_beta(beta, n + 1, trunc) - s_beta(beta, n, trunc);
}

double fourier_tail_bound(const BetaParam& beta, int cutoff_K) {
  if (cutoff_K < 1) throw InvalidInput("fourier_tail_bound: cutoff must be >= 1");
  int k_fit = std::min(10, cutoff_K);
  double c_fit = std::abs(delange_coefficient(beta, k_fit).value);
  double envelope = c_fit * std::pow(static_cast<double>(k_fit), 1.5);
  // sum_{|k| > K} C k^{-3/2} = 2 C * 2 / sqrt(K)
  return 4.0 * envelope / std::sqrt(static_cast<double>(cutoff_K));
}

std::vector<GridRow> figure_grid(int figure, double beta_min, double beta_max,
                                 double step, const FourierTruncation& trunc) {
  if (figure < 1 || figure > 3) throw InvalidInput("figure_grid: figure must be 1..3");
  if (!(step > 0.0) || !(beta_max >= beta_min)) {
    throw InvalidInput("figure_grid: bad beta range");
  }
  std::vector<GridRow> rows;
  long steps = static_cast<long>(std::floor((beta_max - beta_min) / step + 1e-9));
  for (long i = 0; i <= steps; ++i) {
    double beta_val = beta_min + static_cast<double>(i) * step;
    BetaParam beta(beta_val);
    GridRow row;
    row.beta = beta_val;
    switch (figure) {
      case 1:
        row.value = s_beta(beta, 10, trunc);
        row.tail_bound = 10.0 * fourier_tail_bound(beta, trunc.cutoff_K);
        break;
      case 2:
        row.value = h_beta(beta, 2.0, trunc);
        row.tail_bound = fourier_tail_bound(beta, trunc.cutoff_K);
        break;
      case 3:
        row.value = h_beta(beta, std::log(2.0) / beta.log_beta, trunc);
        row.tail_bound = fourier_tail_bound(beta, trunc.cutoff_K);
        break;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_grid_csv(std::ostream& os, const std::vector<GridRow>& rows) {
  os << "beta,value,tail_bound\n";
  char buffer[128];
  for (const auto& row : rows) {
    std::snprintf(buffer, sizeof(buffer), "%.6f,%.12g,%.6g\n", row.beta,
                  row.value, row.tail_bound);
    os << buffer;
  }
}

}  // namespace digit_dirichlet

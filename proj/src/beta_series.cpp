#include "digit_dirichlet/beta_series.hpp"

#include <algorithm>
#include <cmath>

namespace digit_dirichlet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kXMinFloor = 1e-4;

// sup |zeta(sigma + it)| envelope on a vertical line, for tail estimates.
double zeta_line_bound(double sigma, double t_from) {
  if (sigma > 1.2) {
    PrecisionProfile p;
    return std::abs(riemann_zeta(Complex(sigma, 0.0), p));
  }
  double growth = std::max(0.0, 0.5 * (1.3 - sigma));
  return 2.5 * std::pow(std::max(t_from, 3.0), growth);
}

}  // namespace

SbetaTable::SbetaTable(BetaParam beta, std::int64_t n_max, FourierTruncation trunc)
    : beta_(beta), trunc_(trunc) {
  if (n_max < 100) throw InvalidInput("SbetaTable: n_max must be >= 100");
  values_.resize(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    values_[static_cast<std::size_t>(n - 1)] = s_beta(beta_, n, trunc_);
  }
  double c = 0.0;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    double nd = static_cast<double>(n);
    c = std::max(c, at(n) / (nd * std::log(nd)));
  }
  growth_constant_ = 1.2 * std::max(c, 0.1);
}

double SbetaTable::at(std::int64_t n) const {
  if (n < 1 || n > n_max()) throw TableTooShort("SbetaTable: index out of range");
  return values_[static_cast<std::size_t>(n - 1)];
}

SbetaTable build_sbeta_table(double beta, std::int64_t n_max,
                             const FourierTruncation& trunc) {
  return SbetaTable(BetaParam(beta), n_max, trunc);
}

double beta_pole_distance(double beta, Complex s, bool f_series) {
  BetaParam bp(beta);
  double v = 2.0 * kPi / bp.log_beta;
  double sigma0 = f_series ? 1.0 : 2.0;
  double dy = s.imag() - v * std::nearbyint(s.imag() / v);
  return std::hypot(s.real() - sigma0, dy);
}

EvalResult g_beta_eval(double beta, Complex s, const FourierTruncation& trunc) {
  BetaParam bp(beta);
  if (!(s.real() > 1.0 + 1e-3)) {
    throw OutOfDomain("g_beta_eval: requires Re(s) > 1");
  }
  if (beta_pole_distance(beta, s, false) < 1e-9) {
    throw PoleAt(s, "G_beta: pole at 2 + 2 pi i k / log beta");
  }

  const double v = 2.0 * kPi / bp.log_beta;
  const double coef = (bp.beta - 1.0) / (2.0 * bp.log_beta);

  SfResult dz = riemann_zeta_derivative_detailed(s - 1.0);
  Complex acc = -coef * dz.value;
  double err = coef * dz.abs_error_estimate;

  Complex c0 = delange_coefficient(bp, 0).value;
  SfResult z0 = riemann_zeta_detailed(s - 1.0);
  acc += c0 * z0.value;
  err += std::abs(c0) * z0.abs_error_estimate;

  for (int k = 1; k <= trunc.cutoff_K; ++k) {
    Complex ck = delange_coefficient(bp, k).value;
    SfResult zp = riemann_zeta_detailed(s - 1.0 - Complex(0.0, v * k));
    SfResult zm = riemann_zeta_detailed(s - 1.0 + Complex(0.0, v * k));
    acc += ck * zp.value + std::conj(ck) * zm.value;
    err += std::abs(ck) * (zp.abs_error_estimate + zm.abs_error_estimate);
  }

  // Fourier tail: |c(k)| ~ C k^{-3/2} against the zeta envelope on the line.
  double sigma_line = s.real() - 1.0;
  double tail = fourier_tail_bound(bp, trunc.cutoff_K) *
                zeta_line_bound(sigma_line, v * trunc.cutoff_K);

  EvalResult out;
  out.value = acc;
  out.abs_error_estimate = err + tail;
  out.k_used = trunc.cutoff_K;
  return out;
}

EvalResult f_beta_eval(const SbetaTable& table, Complex s, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("f_beta_eval: tol must be positive");
  if (!(s.real() > 1e-3)) {
    throw OutOfDomain("f_beta_eval: requires Re(s) > 0");
  }
  if (beta_pole_distance(table.beta(), s, true) < 1e-9) {
    throw PoleAt(s, "F_beta: pole at 1 + 2 pi i k / log beta");
  }

  const BetaParam& bp = table.beta_param();
  FourierTruncation trunc{table.cutoff_K()};
  EvalResult g = g_beta_eval(table.beta(), s + 1.0, trunc);
  const double s_beta_1 = table.at(1);

  const double sigma = s.real();
  const double C = table.growth_constant();
  const std::int64_t n_max = table.n_max();

  // Series length for p(e^{-x}): the tail of sum S(n) e^{-nx} must not
  // contribute more than tol/10 to the integral once the (e^x - 1 - x) and
  // x^{sigma-1} factors are applied.
  auto required_terms = [&](double x) -> std::int64_t {
    double front = x <= 30.0 ? std::expm1(x) - x : std::exp(x);
    double weight = front * std::pow(x, sigma - 1.0);
    double target = 0.1 * tol / std::max(weight, 1e-300);
    // Tail of sum S(n) e^{-nx} past N: ~ C ln N (u+1) e^{-u} / x^2, u = N x.
    double u = 12.0;
    for (int iter = 0; iter < 4; ++iter) {
      double n = std::max(u / x, 2.0);
      double mass = C * std::log(n) * (u + 1.0) / (x * x);
      double ratio = std::max(mass / target, 1.0);
      u = std::max(8.0, std::log(ratio));
    }
    return static_cast<std::int64_t>(std::ceil(u / x)) + 2;
  };

  auto p_value = [&](double x, std::int64_t terms) -> double {
    double r = std::exp(-x);
    double rn = r;  // r^1
    double acc = 0.0;
    std::int64_t n_top = std::min(terms, n_max);
    for (std::int64_t n = 2; n <= n_top; ++n) {
      rn *= r;
      acc += table.at(n) * rn;
    }
    return acc;
  };

  auto integrand = [&](double x) -> Complex {
    // Past x ~ 690 every table term e^{-(n-1)x}, n >= 2, underflows to zero
    // (and exp(x) in the term-count heuristic would overflow).
    if (x > 690.0) return Complex(0.0, 0.0);
    std::int64_t need = required_terms(x);
    if (x <= 30.0) {
      double front = std::expm1(x) - x;
      double p = p_value(x, need);
      return front * p * std::exp((s - 1.0) * std::log(x));
    }
    // Factored form for large x: (e^x - 1 - x) e^{-nx} term by term, no
    // overflow of e^x on its own.
    std::int64_t n_top = std::min(need, n_max);
    double acc = 0.0;
    for (std::int64_t n = 2; n <= n_top; ++n) {
      double nd = static_cast<double>(n);
      acc += table.at(n) *
             (std::exp(-(nd - 1.0) * x) - (1.0 + x) * std::exp(-nd * x));
    }
    return acc * std::exp((s - 1.0) * std::log(x));
  };

  // Integrated error from p-series terms past the table end, over the low-x
  // region where the table saturates: tail_p(x) ~ C ln N (Nx+1) e^{-Nx}/x^2
  // against the (e^x - 1 - x) x^{sigma-1} weight, on a log grid.
  double integrated_tail = 0.0;
  {
    const double Nd = static_cast<double>(n_max);
    const double x_hi = 60.0 / Nd;
    if (x_hi > kXMinFloor) {
      const int steps = 256;
      const double lstep = std::log(x_hi / kXMinFloor) / steps;
      for (int i = 0; i <= steps; ++i) {
        double x = kXMinFloor * std::exp(i * lstep);
        double u = Nd * x;
        double tail_p = C * std::log(Nd) * (u + 1.0) * std::exp(-u) / (x * x);
        double front = std::expm1(x) - x;
        integrated_tail +=
            tail_p * front * std::pow(x, sigma - 1.0) * x * lstep;
      }
    }
  }

  Complex rg = reciprocal_gamma(s);
  if (std::abs(rg) * integrated_tail > tol) {
    throw TableTooShort("f_beta_eval: table cannot reach the requested tol");
  }
  double quad_tol = std::max(1e-12, 0.5 * tol / std::max(1.0, std::abs(rg)));
  QuadratureResult quad =
      integrate_with_lower_cutoff(integrand, kXMinFloor, quad_tol);
  Complex remainder = rg * quad.value;

  // Discarded (0, x_min) mass: integrand ~ C ln(1/x) x^{sigma-1} there.
  double xm = kXMinFloor;
  double cut_mass = C * std::pow(xm, sigma) *
                    (std::log(1.0 / xm) / sigma + 1.0 / (sigma * sigma));

  EvalResult out;
  out.value = -s_beta_1 * (s + 1.0) + s * g.value + remainder;
  out.abs_error_estimate = std::abs(s) * g.abs_error_estimate +
                           std::abs(rg) * (quad.abs_error_estimate +
                                           integrated_tail + cut_mass);
  out.k_used = table.cutoff_K();
  out.quadrature = quad;
  return out;
}

}  // namespace digit_dirichlet

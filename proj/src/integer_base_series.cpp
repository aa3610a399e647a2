#include "digit_dirichlet/integer_base_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "digit_dirichlet/digit_sums.hpp"

namespace digit_dirichlet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_base(std::int64_t b) {
  if (b < 2) throw InvalidInput("series evaluation requires base b >= 2");
}

// e^z - 1 without cancellation for small |z|.
Complex cexpm1(Complex z) {
  double a = z.real();
  double b = z.imag();
  double em = std::expm1(a);
  double sb = std::sin(b);
  double hav = 2.0 * std::sin(0.5 * b) * std::sin(0.5 * b);  // 1 - cos b
  return Complex(em - hav - em * hav, sb + em * sb);
}

// b^s - b^p as b^p * (e^{(s-p) log b} - 1) reduced modulo the period
// 2*pi*i/log b, so values near the zero set keep full relative accuracy.
Complex pow_minus_pow(double logb, Complex s, double p) {
  Complex w = (s - p) * logb;
  double m = std::nearbyint(w.imag() / (2.0 * kPi));
  Complex delta = w - Complex(0.0, 2.0 * kPi * m);
  return std::exp(p * logb) * cexpm1(delta);
}

bool fb_line(int k) { return k == 0 || k == 1 || (k >= 2 && k % 2 == 0); }
bool gb_line(int k) { return k == 0 || (k >= 2 && k % 2 == 0); }

// ---------------------------------------------------------------------------
// Bernoulli brackets for the remainder integrands
// ---------------------------------------------------------------------------

// x/(1-e^{-x}) - sum_{k=0}^{K} (-1)^k B_k x^k / k!. For x below the
// crossover the difference is evaluated as the series tail (the direct
// subtraction would cancel to noise and get amplified by x^{s-2}).
double fb_bracket(int K, double x) {
  if (x < 2.0) {
    double tail = 0.0;
    for (int k = K + 1; k <= 200; ++k) {
      if (k != 1 && k % 2 == 1) continue;
      double coef = bernoulli_over_factorial(k);
      if (k == 1) coef = -coef;  // (-1)^1 B_1
      double term = coef * std::pow(x, k);
      tail += term;
      if (std::abs(term) < 1e-24) break;
    }
    return tail;
  }
  double direct = x / (-std::expm1(-x));
  double partial = 0.0;
  for (int k = K; k >= 0; --k) {
    if (k != 1 && k % 2 == 1) continue;
    double coef = bernoulli_over_factorial(k);
    if (k == 1) coef = -coef;
    partial += coef * std::pow(x, k);
  }
  return direct - partial;
}

// x^2 e^{-x}/(1-e^{-x})^2 - 1 + sum_{k=2}^{K} B_k x^k / (k (k-2)!), using
// B_k/(k(k-2)!) = (k-1) B_k/k!.
double gb_bracket(int K, double x) {
  if (x < 2.0) {
    double tail = 0.0;
    for (int k = K % 2 == 0 ? K + 2 : K + 1; k <= 200; k += 2) {
      double term = (k - 1) * bernoulli_over_factorial(k) * std::pow(x, k);
      tail -= term;
      if (std::abs(term) < 1e-24) break;
    }
    return tail;
  }
  double em = -std::expm1(-x);  // 1 - e^{-x}
  double direct = x * x * std::exp(-x) / (em * em);
  double partial = 0.0;
  for (int k = K; k >= 2; --k) {
    if (k % 2 == 1) continue;
    partial += (k - 1) * bernoulli_over_factorial(k) * std::pow(x, k);
  }
  return direct - 1.0 + partial;
}

}  // namespace

const char* to_string(SeriesTag tag) {
  switch (tag) {
    case SeriesTag::Zb: return "Zb";
    case SeriesTag::Fb: return "Fb";
    case SeriesTag::Gb: return "Gb";
  }
  return "?";
}

SeriesTag series_tag_from_string(const std::string& name) {
  if (name == "Zb") return SeriesTag::Zb;
  if (name == "Fb") return SeriesTag::Fb;
  if (name == "Gb") return SeriesTag::Gb;
  throw InvalidInput("unknown series tag: " + name);
}

double lattice_spacing(std::int64_t b) {
  check_base(b);
  return 2.0 * kPi / std::log(static_cast<double>(b));
}

double pole_distance(SeriesTag tag, std::int64_t b, Complex s) {
  check_base(b);
  const double v = lattice_spacing(b);
  const double dy = s.imag() - v * std::nearbyint(s.imag() / v);

  auto line_distance = [&](double sigma0, int k) {
    return std::hypot(s.real() - (sigma0 - k), dy);
  };

  double best = std::numeric_limits<double>::infinity();
  switch (tag) {
    case SeriesTag::Zb:
      best = std::hypot(s.real(), dy);
      break;
    case SeriesTag::Fb: {
      int k0 = static_cast<int>(std::lround(std::clamp(1.0 - s.real(), 0.0, 1e6)));
      for (int k = std::max(0, k0 - 2); k <= k0 + 2; ++k) {
        if (!fb_line(k)) continue;
        best = std::min(best, line_distance(1.0, k));
      }
      break;
    }
    case SeriesTag::Gb: {
      int k0 = static_cast<int>(std::lround(std::clamp(2.0 - s.real(), 0.0, 1e6)));
      for (int k = std::max(0, k0 - 2); k <= k0 + 2; ++k) {
        if (!gb_line(k)) continue;
        best = std::min(best, line_distance(2.0, k));
      }
      best = std::min(best, std::abs(s - Complex(1.0, 0.0)));
      break;
    }
  }
  return best;
}

SfResult zb_eval_detailed(std::int64_t b, Complex s,
                          const PrecisionProfile& profile) {
  check_base(b);
  const double logb = std::log(static_cast<double>(b));
  const double v = 2.0 * kPi / logb;

  // Pole test in lattice coordinates: s is a pole iff s * log b / (2 pi i)
  // is an integer.
  double lattice_re = s.imag() / v;
  double lattice_im = s.real() / v;
  double d_lattice = std::hypot(lattice_re - std::nearbyint(lattice_re), lattice_im);
  if (d_lattice < 1e-12) {
    Complex loc(0.0, v * std::nearbyint(lattice_re));
    throw PoleAt(loc, "Z_b: pole on the lattice 2 pi i m / log b");
  }

  if (std::abs(s - 1.0) < 1e-6) {
    // (b^s - b) kills the zeta pole; two-term local expansion keeps the
    // digits that the direct quotient would lose.
    Complex u = s - 1.0;
    double q1 = b * logb / (b - 1.0);
    double q2 = -q1 * logb * (b + 1.0) / (2.0 * (b - 1.0));
    Complex value = q1 + (q1 * constants::euler_gamma + q2) * u;
    return {value, 8.0 * std::norm(u) + 1e-15};
  }

  SfResult zeta = riemann_zeta_detailed(s, profile);
  Complex num = pow_minus_pow(logb, s, 1.0);  // b^s - b
  Complex den = pow_minus_pow(logb, s, 0.0);  // b^s - 1
  Complex factor = num / den;
  Complex value = factor * zeta.value;
  double est = std::abs(factor) * zeta.abs_error_estimate +
               std::abs(value) * 5e-16;
  return {value, est};
}

Complex zb_eval(std::int64_t b, Complex s, const PrecisionProfile& profile) {
  return zb_eval_detailed(b, s, profile).value;
}

int default_truncation(SeriesTag tag, Complex s) {
  double shift = tag == SeriesTag::Gb ? 2.0 : 1.0;
  int k = std::max(4, static_cast<int>(std::ceil(shift - s.real())) + 4);
  if (k % 2) ++k;
  return std::min(k, kMaxTruncation);
}

EvalResult fb_eval(std::int64_t b, Complex s, int K, double tol) {
  check_base(b);
  if (K < 1 || K > kMaxTruncation) {
    throw InvalidInput("fb_eval: K must be in [1, 40]");
  }
  if (!(s.real() > 1.0 - K + 0.05)) {
    throw OutOfDomain("fb_eval: Re(s) too far left for this K");
  }
  if (!(tol > 0.0)) throw InvalidInput("fb_eval: tol must be positive");
  if (pole_distance(SeriesTag::Fb, b, s) < kPoleGuard) {
    throw PoleAt(s, "F_b: within the pole guard band");
  }

  PrecisionProfile profile;
  profile.target_abs_tol = std::max(1e-14, std::min(1e-12, tol));

  Complex main{};
  double sf_err = 0.0;
  double mag_sum = 0.0;
  for (int k = 0; k <= K; ++k) {
    if (k != 1 && k % 2 == 1) continue;  // B_k = 0
    double coef = bernoulli_over_factorial(k);
    if (k == 1) coef = -coef;  // (-1)^k B_k / k!
    Complex ratio = gamma_ratio(s, k);
    SfResult z = zb_eval_detailed(b, s - 1.0 + double(k), profile);
    Complex term = coef * ratio * z.value;
    main += term;
    sf_err += std::abs(coef * ratio) * z.abs_error_estimate;
    mag_sum += std::abs(term);
  }

  Complex rg = reciprocal_gamma(s);
  // 1/Gamma(s) grows like e^{pi |Im s|/2} up the lattice, so the remainder
  // integral has to be resolved that much more tightly.
  double quad_tol = std::max(1e-13, 0.5 * tol / std::max(1.0, std::abs(rg)));
  auto integrand = [&](double x) -> Complex {
    double pe = p_lambert_exp(b, x);
    if (pe == 0.0) return Complex(0.0, 0.0);
    double br = fb_bracket(K, x);
    if (br == 0.0) return Complex(0.0, 0.0);  // x^{s-2} may overflow where br underflows
    return br * pe * std::exp((s - 2.0) * std::log(x));
  };
  QuadratureResult quad = integrate_zero_to_infinity(integrand, quad_tol);
  Complex remainder = rg * quad.value;

  EvalResult out;
  out.value = main + remainder;
  out.abs_error_estimate = sf_err + std::abs(rg) * quad.abs_error_estimate +
                           (mag_sum + std::abs(remainder)) * 2e-15;
  out.k_used = K;
  out.quadrature = quad;
  return out;
}

EvalResult gb_eval(std::int64_t b, Complex s, int K, double tol) {
  check_base(b);
  if (K < 2 || K > kMaxTruncation) {
    throw InvalidInput("gb_eval: K must be in [2, 40]");
  }
  if (!(s.real() > 2.0 - K + 0.05)) {
    throw OutOfDomain("gb_eval: Re(s) too far left for this K");
  }
  if (!(tol > 0.0)) throw InvalidInput("gb_eval: tol must be positive");
  if (pole_distance(SeriesTag::Gb, b, s) < kPoleGuard) {
    throw PoleAt(s, "G_b: within the pole guard band");
  }

  PrecisionProfile profile;
  profile.target_abs_tol = std::max(1e-14, std::min(1e-12, tol));

  SfResult z0 = zb_eval_detailed(b, s - 2.0, profile);
  Complex lead_coef = 1.0 / ((s - 1.0) * (s - 2.0));
  Complex main = lead_coef * z0.value;
  double sf_err = std::abs(lead_coef) * z0.abs_error_estimate;
  double mag_sum = std::abs(main);

  for (int k = 2; k <= K; k += 2) {
    // B_k/(k (k-2)!) * (s)(s+1)...(s+k-3); odd k drop out with B_k = 0.
    double coef = (k - 1) * bernoulli_over_factorial(k);
    Complex prod = 1.0;
    for (int j = 0; j <= k - 3; ++j) prod *= s + double(j);
    SfResult z = zb_eval_detailed(b, s - 2.0 + double(k), profile);
    Complex term = -coef * prod * z.value;
    main += term;
    sf_err += std::abs(coef * prod) * z.abs_error_estimate;
    mag_sum += std::abs(term);
  }

  Complex rg = reciprocal_gamma(s);
  double quad_tol = std::max(1e-13, 0.5 * tol / std::max(1.0, std::abs(rg)));
  auto integrand = [&](double x) -> Complex {
    double pe = p_lambert_exp(b, x);
    if (pe == 0.0) return Complex(0.0, 0.0);
    double br = gb_bracket(K, x);
    if (br == 0.0) return Complex(0.0, 0.0);
    return br * pe * std::exp((s - 3.0) * std::log(x));
  };
  QuadratureResult quad = integrate_zero_to_infinity(integrand, quad_tol);
  Complex remainder = rg * quad.value;

  EvalResult out;
  out.value = main + remainder;
  out.abs_error_estimate = sf_err + std::abs(rg) * quad.abs_error_estimate +
                           (mag_sum + std::abs(remainder)) * 2e-15;
  out.k_used = K;
  out.quadrature = quad;
  return out;
}

}  // namespace digit_dirichlet

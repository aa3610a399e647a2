#include "digit_dirichlet/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace digit_dirichlet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr long kMaxEvaluations = 1L << 20;

// ---------------------------------------------------------------------------
// tanh-sinh on a finite interval
// ---------------------------------------------------------------------------

QuadratureResult tanh_sinh(const Integrand& f, double a, double b, double tol,
                           long& budget) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double t_max = 6.5;

  long evals = 0;
  // Abscissae are carried as distances from the nearer endpoint, so nodes
  // double-exponentially close to an algebraic singularity at x = a keep
  // their full relative accuracy instead of collapsing onto the endpoint.
  auto sample = [&](double t) -> Complex {
    double q = (kPi / 2.0) * std::sinh(t);
    double e = std::exp(-2.0 * std::abs(q));  // (0, 1]
    double dist = (b - a) * e / (1.0 + e);    // distance from the near end
    double x;
    if (t < 0.0) {
      x = a + dist;
      if (x <= a) return Complex(0.0, 0.0);
    } else if (t > 0.0) {
      x = b - dist;
      if (x >= b) return Complex(0.0, 0.0);
    } else {
      x = mid;
    }
    double w = half * (kPi / 2.0) * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
    if (w == 0.0) return Complex(0.0, 0.0);
    ++evals;
    return f(x) * w;
  };

  double h = 1.0;
  Complex integral = sample(0.0);
  for (double t = h; t <= t_max; t += h) {
    integral += sample(t) + sample(-t);
  }
  integral *= h;

  QuadratureResult out;
  double err = std::abs(integral);
  for (int level = 1; level <= 12; ++level) {
    h *= 0.5;
    Complex refinement{};
    for (double t = h; t <= t_max; t += 2.0 * h) {
      refinement += sample(t) + sample(-t);
    }
    Complex next = 0.5 * integral + h * refinement;
    err = std::abs(next - integral);
    integral = next;
    if (evals > budget) {
      throw NonConvergence("tanh-sinh: evaluation budget exhausted");
    }
    if (level >= 3 && err <= tol) break;
  }
  budget -= evals;
  out.value = integral;
  out.abs_error_estimate = std::max(err, 1e-16 * std::abs(integral));
  out.evaluation_count = evals;
  return out;
}

// ---------------------------------------------------------------------------
// Gauss-Kronrod 7-15
// ---------------------------------------------------------------------------

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
  Complex value{};
  double error = 0.0;
};

PanelEstimate qk15(const Integrand& f, double a, double b, long& evals) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Complex kronrod{};
  Complex gauss{};
  for (int i = 0; i < 8; ++i) {
    Complex fsum;
    if (i == 7) {
      fsum = f(mid);
      ++evals;
    } else {
      fsum = f(mid - half * kXgk[i]) + f(mid + half * kXgk[i]);
      evals += 2;
    }
    kronrod += kWgk[i] * fsum;
    // The embedded 7-point Gauss rule sits at the odd-index nodes plus center.
    if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
  }
  PanelEstimate out;
  out.value = kronrod * half;
  double diff = std::abs((kronrod - gauss) * half);
  out.error = diff;
  return out;
}

PanelEstimate gk_adaptive(const Integrand& f, double a, double b, double tol,
                          long& budget) {
  struct Segment {
    double a, b;
    Complex value;
    double error;
  };
  long evals = 0;
  auto make = [&](double lo, double hi) {
    PanelEstimate e = qk15(f, lo, hi, evals);
    return Segment{lo, hi, e.value, e.error};
  };
  std::vector<Segment> segments{make(a, b)};
  for (;;) {
    double total_err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < segments.size(); ++i) {
      total_err += segments[i].error;
      if (segments[i].error > segments[worst].error) worst = i;
    }
    if (total_err <= tol) break;
    if (evals > budget) {
      throw NonConvergence("gauss-kronrod: evaluation budget exhausted");
    }
    Segment split = segments[worst];
    double mid = 0.5 * (split.a + split.b);
    if (mid <= split.a || mid >= split.b) break;  // interval at float resolution
    segments[worst] = make(split.a, mid);
    segments.push_back(make(mid, split.b));
  }
  budget -= evals;
  PanelEstimate out;
  for (const auto& seg : segments) {
    out.value += seg.value;
    out.error += seg.error;
  }
  return out;
}

QuadratureResult integrate_impl(const Integrand& f, double x_min, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("quadrature tolerance must be positive");
  long budget = kMaxEvaluations;
  QuadratureResult out;

  QuadratureResult head = tanh_sinh(f, x_min, 1.0, tol * 0.25, budget);
  out.value = head.value;
  out.abs_error_estimate = head.abs_error_estimate;
  out.evaluation_count = head.evaluation_count;

  // Geometric panels [1,2], [2,4], ... The Bernoulli-bracket integrands peak
  // near x ~ K before their exponential decay kicks in, so a minimum number
  // of panels is always swept before the two-quiet-panels stop rule applies.
  double lo = 1.0;
  int quiet_panels = 0;
  constexpr int kMinPanels = 9;
  for (int k = 0; k < 60; ++k) {
    double hi = 2.0 * lo;
    long before = budget;
    PanelEstimate panel = gk_adaptive(f, lo, hi, tol * 0.1, budget);
    out.evaluation_count += before - budget;
    out.value += panel.value;
    out.abs_error_estimate += panel.error;
    if (std::abs(panel.value) + panel.error < tol * 0.1) {
      ++quiet_panels;
      if (quiet_panels >= 2 && k >= kMinPanels) break;
    } else {
      quiet_panels = 0;
    }
    lo = hi;
  }
  return out;
}

}  // namespace

QuadratureResult integrate_zero_to_infinity(const Integrand& f, double tol) {
  return integrate_impl(f, 0.0, tol);
}

QuadratureResult integrate_with_lower_cutoff(const Integrand& f, double x_min,
                                             double tol) {
  if (!(x_min >= 0.0) || x_min >= 1.0) {
    throw InvalidInput("integrate_with_lower_cutoff: need 0 <= x_min < 1");
  }
  return integrate_impl(f, x_min, tol);
}

Complex laurent_coefficient(const std::function<Complex(Complex)>& f,
                            const ContourSpec& spec, int j) {
  if (j < 0) throw InvalidInput("laurent_coefficient: j must be >= 0");
  if (spec.node_count < 32 || (spec.node_count & (spec.node_count - 1)) != 0) {
    throw InvalidInput("laurent_coefficient: node_count must be a power of two >= 32");
  }
  if (!(spec.radius > 0.0)) throw InvalidInput("laurent_coefficient: radius must be positive");

  // a_{-j} = r^j / (2 pi) * int_0^{2pi} f(c + r e^{i t}) e^{i j t} dt,
  // trapezoid on 2N nodes; the N-node subsum provides the doubling check.
  const int n2 = 2 * spec.node_count;
  Complex sum_fine{};
  Complex sum_coarse{};
  for (int i = 0; i < n2; ++i) {
    double theta = 2.0 * kPi * i / n2;
    Complex point = spec.center + std::polar(spec.radius, theta);
    Complex fi = f(point) * std::polar(1.0, j * theta);
    sum_fine += fi;
    if (i % 2 == 0) sum_coarse += fi;
  }
  const double rj = std::pow(spec.radius, j);
  Complex fine = rj * sum_fine / static_cast<double>(n2);
  Complex coarse = rj * sum_coarse / static_cast<double>(spec.node_count);
  if (std::abs(fine - coarse) > 1e-8 * std::max(1.0, std::abs(fine))) {
    throw NonConvergence("laurent_coefficient: trapezoid rule not converged");
  }
  return fine;
}

EvalResult direct_dirichlet_sum(const std::function<double(std::int64_t)>& coeff,
                                Complex s, std::int64_t N, double sigma_a,
                                const std::function<double(std::int64_t)>& tail_bound) {
  if (N < 1) throw InvalidInput("direct_dirichlet_sum: N must be >= 1");
  if (!(s.real() - sigma_a > 0.0)) {
    throw OutOfDomain("direct_dirichlet_sum: Re(s) must exceed sigma_a");
  }
  Complex sum{};
  Complex comp{};
  for (std::int64_t n = 1; n <= N; ++n) {
    Complex term = coeff(n) * std::exp(-s * std::log(static_cast<double>(n)));
    Complex y = term - comp;
    Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  EvalResult out;
  out.value = sum;
  out.abs_error_estimate = tail_bound(N);
  out.k_used = N;
  return out;
}

}  // namespace digit_dirichlet

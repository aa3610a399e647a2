#include "digit_dirichlet/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <vector>

namespace digit_dirichlet {

namespace {

// ---------------------------------------------------------------------------
// Bernoulli numbers
// ---------------------------------------------------------------------------

std::mutex g_bernoulli_mutex;
// Deque so returned references survive later growth of the cache.
std::deque<Rational> g_bernoulli;         // B_0, B_1, ...
std::vector<double> g_bernoulli_over_kf;  // B_k / k!

// Extends the exact cache through index k using
//   sum_{j=0}^{m-1} C(m, j) B_j = 0  (m >= 2),
// which fixes the B_1 = -1/2 convention of x/(e^x - 1).
void grow_bernoulli_locked(int k) {
  if (g_bernoulli.empty()) {
    g_bernoulli.emplace_back(1);
  }
  for (int i = static_cast<int>(g_bernoulli.size()); i <= k; ++i) {
    const int m = i + 1;
    Rational acc(0);
    Rational binom(1);  // C(m, j), updated multiplicatively
    for (int j = 0; j < i; ++j) {
      acc = acc + binom * g_bernoulli[j];
      binom = binom * Rational(m - j, j + 1);
    }
    // binom now equals C(m, i) = m.
    g_bernoulli.push_back(-(acc / Rational(m)));
  }
}

void grow_bernoulli_over_kf_locked(int k) {
  grow_bernoulli_locked(k);
  for (int i = static_cast<int>(g_bernoulli_over_kf.size()); i <= k; ++i) {
    BigInt kfact(1);
    for (int j = 2; j <= i; ++j) kfact = kfact * BigInt(j);
    Rational r(g_bernoulli[i].numerator(),
               g_bernoulli[i].denominator() * kfact);
    g_bernoulli_over_kf.push_back(r.to_double());
  }
}

// ---------------------------------------------------------------------------
// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficients).
// ---------------------------------------------------------------------------

constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogPi = 1.1447298858494001741434273513530587;
constexpr double kLog2 = 0.69314718055994530941723212145817657;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;

Complex lanczos_log_gamma(Complex z) {
  // Valid for Re(z) >= 0.5.
  Complex zz = z - 1.0;
  Complex series = kLanczosCoeff[0];
  for (int k = 1; k < 15; ++k) series += kLanczosCoeff[k] / (zz + double(k));
  Complex t = zz + kLanczosG + 0.5;
  return (zz + 0.5) * std::log(t) - t + kHalfLog2Pi + std::log(series);
}

Complex ensure_finite(Complex value, const char* what) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw OutOfDomain(std::string(what) + ": result overflows double range");
  }
  return value;
}

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 &&
         s.real() == std::nearbyint(s.real());
}

// log(sin(pi*s/2)) up to an integer multiple of 2*pi*i, stable for any
// |Im(s)| (the direct sin would overflow past |Im| ~ 450).
Complex log_sin_pi_half(Complex s) {
  double m = std::nearbyint(s.real() / 2.0);
  Complex w = (s - 2.0 * m) * (kPi / 2.0);
  double b = w.imag();
  Complex out;
  if (std::abs(b) <= 20.0) {
    out = std::log(std::sin(w));
  } else if (b > 0.0) {
    // sin w = (i/2) e^{-iw} (1 - e^{2iw}),  |e^{2iw}| = e^{-2b} << 1
    out = Complex(0.0, -1.0) * w + std::log(1.0 - std::exp(Complex(0.0, 2.0) * w)) +
          Complex(-kLog2, kPi / 2.0);
  } else {
    out = Complex(0.0, 1.0) * w + std::log(1.0 - std::exp(Complex(0.0, -2.0) * w)) +
          Complex(-kLog2, -kPi / 2.0);
  }
  if (std::abs(m - 2.0 * std::nearbyint(m / 2.0)) > 0.5) out += Complex(0.0, kPi);
  return out;
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin engine
// ---------------------------------------------------------------------------

const double* log_table(std::int64_t n_max) {
  thread_local std::vector<double> table{0.0, 0.0};  // table[n] = ln n
  while (static_cast<std::int64_t>(table.size()) <= n_max) {
    table.push_back(std::log(static_cast<double>(table.size())));
  }
  return table.data();
}

struct KahanSum {
  Complex sum{};
  Complex comp{};
  void add(Complex x) {
    Complex y = x - comp;
    Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

struct EmOut {
  Complex value;
  double trunc_err = 0.0;
  double round_err = 0.0;
};

constexpr std::int64_t kMaxEmTerms = std::int64_t{1} << 22;

// One Euler-Maclaurin pass at fixed (N, M); derivative = true computes
// zeta'(s) by differentiating every term of the same formula.
EmOut zeta_em_pass(Complex s, std::int64_t N, int M, bool derivative) {
  const double sigma = s.real();
  const double t = std::abs(s.imag());
  const double* ln = log_table(N);

  KahanSum acc;
  double round_sq = 0.0;
  if (!derivative) acc.add(Complex(1.0, 0.0));  // n = 1 term
  for (std::int64_t n = 2; n < N; ++n) {
    Complex term = std::exp(-s * ln[n]);
    if (derivative) term *= -ln[n];
    acc.add(term);
    double r = 1.1e-16 * std::abs(term) * (3.0 + 0.5 * t * ln[n]);
    round_sq += r * r;
  }

  const double logN = std::log(static_cast<double>(N));
  const Complex NmS = std::exp(-s * logN);  // N^{-s}
  const Complex sm1 = s - 1.0;

  Complex tail;
  if (!derivative) {
    tail = NmS * static_cast<double>(N) / sm1 + 0.5 * NmS;
  } else {
    tail = NmS * static_cast<double>(N) * (-logN / sm1 - 1.0 / (sm1 * sm1)) -
           0.5 * logN * NmS;
  }

  // Correction terms B_{2j}/(2j)! * poch(s, 2j-1) * N^{-s-2j+1} and, for the
  // derivative, their d/ds. The pochhammer derivative is carried through the
  // product rule so zeros of the rising product stay harmless.
  Complex poch = s;        // rising product s(s+1)...(s+2j-2)
  Complex dpoch = 1.0;     // d/ds of the rising product
  Complex npow = NmS / static_cast<double>(N);  // N^{-s-2j+1}
  Complex corr{};
  double last_mag = 0.0;
  for (int j = 1; 2 * j <= M; ++j) {
    const double bf = bernoulli_over_factorial(2 * j);
    Complex term = derivative ? bf * (dpoch - poch * logN) * npow
                              : bf * poch * npow;
    corr += term;
    last_mag = std::abs(term);
    Complex f1 = s + double(2 * j - 1);
    Complex f2 = s + double(2 * j);
    dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
    poch *= f1 * f2;
    npow /= static_cast<double>(N) * static_cast<double>(N);
  }

  // Next omitted term bounds the truncation error (times the standard
  // |s+2M+1|/(sigma+2M+1) factor for complex s).
  Complex next = derivative
                     ? bernoulli_over_factorial(M + 2) * (dpoch - poch * logN) * npow
                     : bernoulli_over_factorial(M + 2) * poch * npow;
  double factor = std::abs(s + double(M + 1)) / std::max(1.0, sigma + M + 1);
  double trunc = std::abs(next) * std::max(1.0, factor) * 1.5;

  EmOut out;
  out.value = acc.sum + tail + corr;
  out.trunc_err = trunc;
  out.round_err = std::sqrt(round_sq) +
                  3e-16 * (std::abs(tail) + std::abs(corr)) + last_mag * 1e-16;
  return out;
}

void check_profile(const PrecisionProfile& profile) {
  if (!(profile.target_abs_tol >= 1e-14)) {
    throw InvalidInput("PrecisionProfile: target_abs_tol must be >= 1e-14");
  }
  if (profile.em_cutoff_N < 1 || profile.em_order_M < 2) {
    throw InvalidInput("PrecisionProfile: bad Euler-Maclaurin parameters");
  }
}

SfResult zeta_em(Complex s, const PrecisionProfile& profile, bool derivative) {
  check_profile(profile);
  const double t = std::abs(s.imag());
  std::int64_t N = std::max<std::int64_t>(
      profile.em_cutoff_N, static_cast<std::int64_t>(std::ceil(0.55 * (t + 25.0))));
  N = std::min(N, kMaxEmTerms);
  int M = profile.em_order_M;
  if (M % 2) ++M;
  if (t > 300.0) M = std::max(M, 24);

  EmOut out;
  for (int attempt = 0;; ++attempt) {
    out = zeta_em_pass(s, N, M, derivative);
    if (out.trunc_err <= profile.target_abs_tol || attempt >= 2) break;
    N = std::min(N * 2, kMaxEmTerms);
    M = std::min(M + 6, 30);
  }
  if (out.trunc_err > profile.target_abs_tol * (derivative ? 10.0 : 1.0)) {
    throw NonConvergence("zeta: Euler-Maclaurin tail did not reach tolerance");
  }
  return {out.value, out.trunc_err + out.round_err};
}

}  // namespace

const Rational& bernoulli_number(int k) {
  if (k < 0) throw InvalidInput("bernoulli_number: k must be >= 0");
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  if (k >= static_cast<int>(g_bernoulli.size())) grow_bernoulli_locked(k);
  return g_bernoulli[k];
}

double bernoulli_over_factorial(int k) {
  if (k < 0) throw InvalidInput("bernoulli_over_factorial: k must be >= 0");
  if (k > 200) throw InvalidInput("bernoulli_over_factorial: k > 200 unsupported");
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  if (k >= static_cast<int>(g_bernoulli_over_kf.size())) {
    grow_bernoulli_over_kf_locked(k);
  }
  return g_bernoulli_over_kf[k];
}

Complex log_gamma(Complex s) {
  if (s.real() < 0.5) {
    throw OutOfDomain("log_gamma: requires Re(s) >= 0.5");
  }
  return lanczos_log_gamma(s);
}

Complex sin_pi(Complex s) {
  double m = std::nearbyint(s.real());
  Complex w = s - m;
  Complex val = std::sin(kPi * w);
  bool odd = std::abs(m - 2.0 * std::nearbyint(m / 2.0)) > 0.5;
  return odd ? -val : val;
}

Complex complex_gamma(Complex s) {
  if (is_nonpositive_integer(s)) {
    throw PoleAt(s, "complex_gamma: pole at nonpositive integer");
  }
  if (s.real() >= 0.5) return ensure_finite(std::exp(lanczos_log_gamma(s)), "complex_gamma");
  // Reflection: Gamma(s) = pi / (sin(pi s) Gamma(1-s)).
  return ensure_finite(kPi / (sin_pi(s) * std::exp(lanczos_log_gamma(1.0 - s))),
                       "complex_gamma");
}

Complex reciprocal_gamma(Complex s) {
  if (s.real() >= 0.5) return std::exp(-lanczos_log_gamma(s));
  return sin_pi(s) * std::exp(lanczos_log_gamma(1.0 - s)) / kPi;
}

Complex gamma_ratio(Complex s, int k) {
  if (k < 0) throw InvalidInput("gamma_ratio: k must be >= 0");
  if (k == 0) {
    if (std::abs(s - 1.0) < 1e-14) {
      throw PoleAt(Complex(1.0, 0.0), "gamma_ratio: pole at s = 1 for k = 0");
    }
    return 1.0 / (s - 1.0);
  }
  Complex prod = 1.0;
  for (int j = 0; j <= k - 2; ++j) prod *= s + double(j);
  return prod;
}

SfResult riemann_zeta_detailed(Complex s, const PrecisionProfile& profile) {
  if (std::abs(s - 1.0) < 1e-14) {
    throw PoleAt(Complex(1.0, 0.0), "riemann_zeta: pole at s = 1");
  }
  if (s.real() >= profile.reflection_threshold) {
    return zeta_em(s, profile, false);
  }
  if (std::abs(s) < 1e-12) {
    // zeta(s) = -1/2 - (1/2) log(2 pi) s + O(s^2); avoids the 0 * pole
    // product in the functional equation at the origin.
    Complex v = Complex(-0.5, 0.0) - 0.5 * constants::log_two_pi * s;
    return {v, 2.1 * std::norm(s) + 1e-16};
  }
  // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s), assembled in
  // log space so the sin/Gamma growth at large |Im(s)| cannot overflow.
  Complex w = 1.0 - s;
  SfResult inner = zeta_em(w, profile, false);
  Complex log_chi = s * kLog2 + (s - 1.0) * kLogPi + log_sin_pi_half(s) +
                    lanczos_log_gamma(w);
  Complex chi = std::exp(log_chi);
  Complex value = ensure_finite(chi * inner.value, "riemann_zeta");
  double est = std::abs(chi) * inner.abs_error_estimate +
               std::abs(value) * (std::abs(log_chi) + 4.0) * 1.1e-16;
  return {value, est};
}

Complex riemann_zeta(Complex s, const PrecisionProfile& profile) {
  return riemann_zeta_detailed(s, profile).value;
}

SfResult riemann_zeta_derivative_detailed(Complex s,
                                          const PrecisionProfile& profile) {
  // The series evaluators only need Re(s) > 0, but the Euler-Maclaurin
  // formula is comfortable down to -1/2, which covers zeta'(0).
  if (s.real() <= -0.5) {
    throw OutOfDomain("riemann_zeta_derivative: requires Re(s) > -1/2");
  }
  if (std::abs(s - 1.0) < 1e-14) {
    throw PoleAt(Complex(1.0, 0.0), "riemann_zeta_derivative: pole at s = 1");
  }
  return zeta_em(s, profile, true);
}

Complex riemann_zeta_derivative(Complex s, const PrecisionProfile& profile) {
  return riemann_zeta_derivative_detailed(s, profile).value;
}

}  // namespace digit_dirichlet

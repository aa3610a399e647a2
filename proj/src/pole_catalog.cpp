#include "digit_dirichlet/pole_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace digit_dirichlet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// zeta(2 pi i m / log b); m = 0 gives zeta(0) = -1/2 exactly.
Complex zeta_on_axis(std::int64_t b, int m) {
  if (m == 0) return Complex(-0.5, 0.0);
  double v = lattice_spacing(b);
  return riemann_zeta(Complex(0.0, v * m));
}

// Residue of Z_b at 2 pi i m / log b: -(b-1)/log b * zeta(2 pi i m / log b).
Complex zb_residue(std::int64_t b, int m) {
  double logb = std::log(static_cast<double>(b));
  return -((b - 1.0) / logb) * zeta_on_axis(b, m);
}

// Residue of F_b at 1 - k + 2 pi i m / log b for k = 1 or even k >= 2:
//   (-1)^{k+1} (b-1)/log b * zeta(2 pi i m/log b) * B_k/k! *
//   prod_{j=1}^{k-1} (2 pi i m / log b - j).
Complex fb_bernoulli_residue(std::int64_t b, int k, int m) {
  double logb = std::log(static_cast<double>(b));
  Complex mu(0.0, lattice_spacing(b) * m);
  Complex prod = 1.0;
  for (int j = 1; j <= k - 1; ++j) prod *= mu - double(j);
  double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
  return sign * ((b - 1.0) / logb) * zeta_on_axis(b, m) *
         bernoulli_over_factorial(k) * prod;
}

// Residue of G_b at 2 - k + 2 pi i m / log b for even k >= 2:
//   (b-1)/log b * zeta(2 pi i m/log b) * B_k/(k (k-2)!) *
//   prod_{j=1}^{k-2} (2 pi i m / log b - j).
Complex gb_bernoulli_residue(std::int64_t b, int k, int m) {
  double logb = std::log(static_cast<double>(b));
  Complex mu(0.0, lattice_spacing(b) * m);
  Complex prod = 1.0;
  for (int j = 1; j <= k - 2; ++j) prod *= mu - double(j);
  return ((b - 1.0) / logb) * zeta_on_axis(b, m) *
         ((k - 1) * bernoulli_over_factorial(k)) * prod;
}

PoleDescriptor make_pole(SeriesTag tag, std::int64_t b, int k, int m) {
  const double v = lattice_spacing(b);
  const double logb = std::log(static_cast<double>(b));
  PoleDescriptor pole;
  pole.tag = tag;
  pole.base = b;
  pole.lattice_k = k;
  pole.lattice_m = m;

  switch (tag) {
    case SeriesTag::Zb:
      pole.location = Complex(0.0, v * m);
      pole.residue = zb_residue(b, m);
      break;
    case SeriesTag::Fb:
      pole.location = Complex(1.0 - k, v * m);
      if (k == 0 && m == 0) {
        pole.order = 2;
        pole.laurent_minus2 = (b - 1.0) / (2.0 * logb);
        pole.residue = (b - 1.0) / (2.0 * logb) * constants::log_two_pi -
                       (b + 1.0) / 4.0;
      } else if (k == 0) {
        pole.residue = -((b - 1.0) / (2.0 * kPi * m)) * Complex(0.0, -1.0) *
                       zeta_on_axis(b, m);
      } else {
        pole.residue = fb_bernoulli_residue(b, k, m);
      }
      break;
    case SeriesTag::Gb:
      if (k == 1) {
        // The isolated simple pole at s = 1 from Gamma(s-2)/Gamma(s).
        pole.location = Complex(1.0, 0.0);
        pole.residue = (b + 1.0) / 12.0;
        break;
      }
      pole.location = Complex(2.0 - k, v * m);
      if (k == 0 && m == 0) {
        pole.order = 2;
        pole.laurent_minus2 = (b - 1.0) / (2.0 * logb);
        pole.residue =
            (b - 1.0) / (2.0 * logb) * (constants::log_two_pi - 1.0) -
            (b + 1.0) / 4.0;
      } else if (k == 0) {
        Complex mu(0.0, v * m);
        pole.residue = -((b - 1.0) / (2.0 * kPi * m)) * Complex(0.0, -1.0) /
                       (1.0 + mu) * zeta_on_axis(b, m);
      } else {
        pole.residue = gb_bernoulli_residue(b, k, m);
      }
      break;
  }
  if (pole.order == 1 && std::abs(pole.residue) < 1e-15) {
    pole.zero_residue_flag = true;
  }
  return pole;
}

bool fb_line(int k) { return k == 0 || k == 1 || (k >= 2 && k % 2 == 0); }
bool gb_line(int k) { return k == 0 || (k >= 2 && k % 2 == 0); }

}  // namespace

std::vector<PoleDescriptor> enumerate_poles(SeriesTag tag, std::int64_t b,
                                            double radius) {
  if (b < 2) throw InvalidInput("enumerate_poles: base must be >= 2");
  if (!(radius > 0.0)) throw InvalidInput("enumerate_poles: radius must be positive");

  const double v = lattice_spacing(b);
  std::vector<PoleDescriptor> out;

  auto sweep_line = [&](double sigma0, int k) {
    double re = sigma0 - k;
    if (std::abs(re) >= radius) return;
    double height = std::sqrt(radius * radius - re * re);
    int m_max = static_cast<int>(std::ceil(height / v));
    for (int m = -m_max; m <= m_max; ++m) {
      if (std::hypot(re, v * m) < radius) out.push_back(make_pole(tag, b, k, m));
    }
  };

  switch (tag) {
    case SeriesTag::Zb:
      sweep_line(0.0, 0);
      break;
    case SeriesTag::Fb:
      for (int k = 0; k <= static_cast<int>(radius) + 2; ++k) {
        if (fb_line(k)) sweep_line(1.0, k);
      }
      break;
    case SeriesTag::Gb:
      for (int k = 0; k <= static_cast<int>(radius) + 3; ++k) {
        if (gb_line(k)) sweep_line(2.0, k);
      }
      if (1.0 < radius) out.push_back(make_pole(SeriesTag::Gb, b, 1, 0));
      break;
  }

  std::sort(out.begin(), out.end(), [](const PoleDescriptor& a,
                                       const PoleDescriptor& c) {
    double ra = std::abs(a.location);
    double rc = std::abs(c.location);
    if (ra != rc) return ra < rc;
    if (a.lattice_m != c.lattice_m) return a.lattice_m < c.lattice_m;
    return a.lattice_k < c.lattice_k;
  });
  return out;
}

long count_poles(SeriesTag tag, std::int64_t b, double radius) {
  if (!(radius >= 5.0)) throw InvalidInput("count_poles: radius must be >= 5");
  return static_cast<long>(enumerate_poles(tag, b, radius).size());
}

double certification_radius(const PoleDescriptor& pole) {
  // 0.4x the distance to the nearest other catalog pole keeps the trapezoid
  // rule in its spectral regime.
  double search = std::abs(pole.location) + 2.0 * lattice_spacing(pole.base) + 8.0;
  auto all = enumerate_poles(pole.tag, pole.base, search);
  double nearest = std::numeric_limits<double>::infinity();
  for (const auto& other : all) {
    double d = std::abs(other.location - pole.location);
    if (d > 1e-9) nearest = std::min(nearest, d);
  }
  if (!std::isfinite(nearest)) nearest = 1.0;
  return 0.4 * std::min(nearest, 2.5);
}

ResidueReport residue_check(const PoleDescriptor& pole, double tol) {
  ResidueReport report;
  report.pole = pole;
  report.formula_value = pole.residue;

  ContourSpec spec;
  spec.center = pole.location;
  spec.radius = certification_radius(pole);
  spec.node_count = 64;

  std::function<Complex(Complex)> f;
  switch (pole.tag) {
    case SeriesTag::Zb:
      f = [&](Complex s) { return zb_eval(pole.base, s); };
      break;
    case SeriesTag::Fb:
      f = [&](Complex s) {
        int K = default_truncation(SeriesTag::Fb,
                                   pole.location - spec.radius);
        return fb_eval(pole.base, s, K, 1e-10).value;
      };
      break;
    case SeriesTag::Gb:
      f = [&](Complex s) {
        int K = default_truncation(SeriesTag::Gb,
                                   pole.location - spec.radius);
        return gb_eval(pole.base, s, K, 1e-10).value;
      };
      break;
  }

  report.contour_value = laurent_coefficient(f, spec, 1);
  report.abs_diff = std::abs(report.contour_value - report.formula_value);
  report.passed = report.abs_diff < tol;
  return report;
}

void to_json(nlohmann::json& j, const PoleDescriptor& pole) {
  j = nlohmann::json{{"tag", to_string(pole.tag)},
                     {"b", pole.base},
                     {"k", pole.lattice_k},
                     {"m", pole.lattice_m},
                     {"re", pole.location.real()},
                     {"im", pole.location.imag()},
                     {"order", pole.order},
                     {"residue_re", pole.residue.real()},
                     {"residue_im", pole.residue.imag()},
                     {"laurent2_re", pole.laurent_minus2.real()},
                     {"laurent2_im", pole.laurent_minus2.imag()}};
  if (pole.zero_residue_flag) j["removable"] = true;
}

}  // namespace digit_dirichlet

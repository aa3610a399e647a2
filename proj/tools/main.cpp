// digit-dirichlet: evaluate the Dirichlet series attached to base-b digit
// sums on their meromorphic continuations, enumerate poles with closed-form
// residues, and run the verification suite.

#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "digit_dirichlet/beta_series.hpp"
#include "digit_dirichlet/delange.hpp"
#include "digit_dirichlet/digit_sums.hpp"
#include "digit_dirichlet/integer_base_series.hpp"
#include "digit_dirichlet/pole_catalog.hpp"
#include "digit_dirichlet/verification.hpp"

namespace dd = digit_dirichlet;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

// Complex arguments come in shell-safe a+bi / a-bi form (no spaces); a bare
// real like "2.5" is accepted too.
dd::Complex parse_complex(const std::string& text) {
  if (text.empty()) throw dd::InvalidInput("empty complex literal");
  std::string body = text;
  bool has_i = body.back() == 'i' || body.back() == 'I';
  if (has_i) body.pop_back();

  std::size_t split = std::string::npos;
  for (std::size_t pos = body.size(); pos-- > 1;) {
    char c = body[pos];
    if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
      split = pos;
      break;
    }
  }

  try {
    std::size_t used = 0;
    if (!has_i) {
      double re = std::stod(body, &used);
      if (used != body.size()) throw dd::InvalidInput("trailing characters");
      return {re, 0.0};
    }
    if (split == std::string::npos) {
      // Pure imaginary: "2i", "-1.5i", "i".
      if (body.empty() || body == "+") return {0.0, 1.0};
      if (body == "-") return {0.0, -1.0};
      double im = std::stod(body, &used);
      if (used != body.size()) throw dd::InvalidInput("trailing characters");
      return {0.0, im};
    }
    double re = std::stod(body.substr(0, split), &used);
    if (used != split) throw dd::InvalidInput("trailing characters");
    std::string imag_part = body.substr(split);
    double im = (imag_part == "+") ? 1.0
                : (imag_part == "-") ? -1.0
                                     : std::stod(imag_part, &used);
    return {re, im};
  } catch (const std::exception&) {
    throw dd::InvalidInput("cannot parse complex literal '" + text +
                           "' (expected a+bi)");
  }
}

json complex_json(dd::Complex z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json eval_result_json(const dd::EvalResult& r) {
  json j{{"value", complex_json(r.value)},
         {"abs_error_estimate", r.abs_error_estimate},
         {"K_used", r.k_used}};
  if (r.quadrature) {
    j["quadrature"] = json{
        {"abs_error_estimate", r.quadrature->abs_error_estimate},
        {"evaluation_count", r.quadrature->evaluation_count}};
  }
  return j;
}

int threads_from_env() {
  const char* env = std::getenv("DIGIT_DIRICHLET_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n >= 1 ? n : 1;
}

struct EvalOptions {
  std::string function = "Fb";
  std::int64_t base = 2;
  double beta = 2.0;
  bool beta_set = false;
  std::string s_text;
  int K = 0;  // 0 = auto
  double tol = 1e-10;
  int fourier_cutoff = 1000;
  std::int64_t table_n = 100000;
  std::string format = "json";
};

int run_eval(const EvalOptions& opt) {
  dd::Complex s = parse_complex(opt.s_text);
  dd::EvalResult result;
  json j;

  if (opt.function == "Zb" || opt.function == "Fb" || opt.function == "Gb") {
    dd::SeriesTag tag = dd::series_tag_from_string(opt.function);
    if (opt.base < 2) throw dd::InvalidInput("--base must be an integer >= 2");
    int K = opt.K > 0 ? opt.K : dd::default_truncation(tag, s);
    switch (tag) {
      case dd::SeriesTag::Zb: {
        dd::SfResult z = dd::zb_eval_detailed(opt.base, s);
        result.value = z.value;
        result.abs_error_estimate = z.abs_error_estimate;
        result.k_used = 0;
        break;
      }
      case dd::SeriesTag::Fb:
        result = dd::fb_eval(opt.base, s, K, opt.tol);
        break;
      case dd::SeriesTag::Gb:
        result = dd::gb_eval(opt.base, s, K, opt.tol);
        break;
    }
    j = eval_result_json(result);
    j["function"] = opt.function;
    j["base"] = opt.base;
  } else if (opt.function == "Gbeta" || opt.function == "Fbeta") {
    if (!opt.beta_set) throw dd::InvalidInput("--beta is required for beta series");
    if (!(opt.beta > 1.0)) throw dd::InvalidInput("--beta must exceed 1");
    dd::FourierTruncation trunc{opt.fourier_cutoff};
    if (opt.function == "Gbeta") {
      result = dd::g_beta_eval(opt.beta, s, trunc);
    } else {
      auto table = dd::build_sbeta_table(opt.beta, opt.table_n, trunc);
      result = dd::f_beta_eval(table, s, opt.tol);
    }
    j = eval_result_json(result);
    j["function"] = opt.function;
    j["beta"] = opt.beta;
  } else {
    throw dd::InvalidInput("unknown --function " + opt.function);
  }
  j["s"] = complex_json(s);

  if (opt.format == "csv") {
    std::cout << "value_re,value_im,abs_error_estimate,K_used\n";
    std::printf("%.17g,%.17g,%.6g,%lld\n", result.value.real(),
                result.value.imag(), result.abs_error_estimate,
                static_cast<long long>(result.k_used));
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

int run_poles(const std::string& function, std::int64_t base, double radius,
              const std::string& format) {
  dd::SeriesTag tag = dd::series_tag_from_string(function);
  auto poles = dd::enumerate_poles(tag, base, radius);
  if (format == "csv") {
    std::cout << "tag,b,k,m,re,im,order,residue_re,residue_im,"
                 "laurent2_re,laurent2_im\n";
    for (const auto& p : poles) {
      std::printf("%s,%lld,%d,%d,%.17g,%.17g,%d,%.17g,%.17g,%.17g,%.17g\n",
                  dd::to_string(p.tag), static_cast<long long>(p.base),
                  p.lattice_k, p.lattice_m, p.location.real(),
                  p.location.imag(), p.order, p.residue.real(),
                  p.residue.imag(), p.laurent_minus2.real(),
                  p.laurent_minus2.imag());
    }
  } else {
    std::cout << json(poles).dump(2) << "\n";
  }
  return kExitOk;
}

int run_certify(const std::string& function, std::int64_t base, double radius,
                int max_m, double tol, const std::string& format) {
  dd::SeriesTag tag = dd::series_tag_from_string(function);
  auto poles = dd::enumerate_poles(tag, base, radius);
  json rows = json::array();
  bool all_passed = true;
  for (const auto& p : poles) {
    if (std::abs(p.lattice_m) > max_m) continue;
    auto report = dd::residue_check(p, tol);
    all_passed = all_passed && report.passed;
    rows.push_back(json{{"k", p.lattice_k},
                        {"m", p.lattice_m},
                        {"location", complex_json(p.location)},
                        {"order", p.order},
                        {"formula", complex_json(report.formula_value)},
                        {"contour", complex_json(report.contour_value)},
                        {"abs_diff", report.abs_diff},
                        {"passed", report.passed}});
  }
  if (format == "csv") {
    std::cout << "k,m,re,im,order,formula_re,formula_im,contour_re,contour_im,"
                 "abs_diff,passed\n";
    for (const auto& row : rows) {
      std::printf("%d,%d,%.17g,%.17g,%d,%.17g,%.17g,%.17g,%.17g,%.6g,%d\n",
                  row["k"].get<int>(), row["m"].get<int>(),
                  row["location"]["re"].get<double>(),
                  row["location"]["im"].get<double>(), row["order"].get<int>(),
                  row["formula"]["re"].get<double>(),
                  row["formula"]["im"].get<double>(),
                  row["contour"]["re"].get<double>(),
                  row["contour"]["im"].get<double>(),
                  row["abs_diff"].get<double>(),
                  row["passed"].get<bool>() ? 1 : 0);
    }
  } else {
    std::cout << json{{"function", function},
                      {"base", base},
                      {"tol", tol},
                      {"all_passed", all_passed},
                      {"checks", rows}}
                     .dump(2)
              << "\n";
  }
  return all_passed ? kExitOk : kExitVerifyFailure;
}

struct DelangeOptions {
  double beta = 2.0;
  int fourier_cutoff = 1000;
  int coefficient_k = 0;
  bool want_coefficient = false;
  double h_at = 0.0;
  bool want_h = false;
  std::int64_t s_at = 0;
  std::int64_t d_at = 0;
  std::string format = "json";
};

int run_delange(const DelangeOptions& opt) {
  if (!(opt.beta > 1.0)) throw dd::InvalidInput("--beta must exceed 1");
  dd::BetaParam beta(opt.beta);
  dd::FourierTruncation trunc{opt.fourier_cutoff};
  double tail = dd::fourier_tail_bound(beta, trunc.cutoff_K);

  struct Row {
    std::string kind;
    double x_or_n;
    double value;
    double bound;
  };
  std::vector<Row> rows;
  if (opt.want_coefficient) {
    auto c = dd::delange_coefficient(beta, opt.coefficient_k);
    rows.push_back({"c_re", double(opt.coefficient_k), c.value.real(), 0.0});
    rows.push_back({"c_im", double(opt.coefficient_k), c.value.imag(), 0.0});
  }
  if (opt.want_h) {
    rows.push_back({"h", opt.h_at, dd::h_beta(beta, opt.h_at, trunc), tail});
  }
  if (opt.s_at > 0) {
    rows.push_back({"S", double(opt.s_at), dd::s_beta(beta, opt.s_at, trunc),
                    double(opt.s_at) * tail});
  }
  if (opt.d_at > 0) {
    rows.push_back({"d", double(opt.d_at), dd::d_beta(beta, opt.d_at, trunc),
                    double(2 * opt.d_at + 1) * tail});
  }
  if (rows.empty()) {
    throw dd::InvalidInput(
        "delange: request at least one of --coefficient/--h-at/--s-at/--d-at");
  }

  if (opt.format == "csv") {
    std::cout << "beta,x_or_n,value,tail_bound,cutoff_K\n";
    for (const auto& row : rows) {
      std::printf("%.6f,%.17g,%.17g,%.6g,%d\n", opt.beta, row.x_or_n,
                  row.value, row.bound, trunc.cutoff_K);
    }
  } else {
    json j{{"beta", opt.beta}, {"cutoff_K", trunc.cutoff_K}};
    for (const auto& row : rows) {
      j[row.kind] = json{{"arg", row.x_or_n},
                         {"value", row.value},
                         {"tail_bound", row.bound}};
    }
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

int run_plot(const std::string& figures, double step, int cutoff,
             const std::string& output_dir) {
  std::filesystem::create_directories(output_dir);
  dd::FourierTruncation trunc{cutoff};
  auto emit = [&](int figure) {
    double beta_max = figure == 1 ? 15.0 : 8.0;
    auto rows = dd::figure_grid(figure, 1.01, beta_max, step, trunc);
    std::string path = output_dir + "/fig" + std::to_string(figure) +
                       "_beta_grid.csv";
    std::ofstream os(path);
    if (!os) throw dd::InvalidInput("cannot open " + path + " for writing");
    dd::write_grid_csv(os, rows);
    std::cerr << "wrote " << path << " (" << rows.size() << " rows)\n";
  };
  if (figures == "all") {
    emit(1);
    emit(2);
    emit(3);
  } else {
    emit(std::stoi(figures));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Dirichlet series of base-b digit sums: evaluation on the meromorphic "
      "continuation, pole catalogs with closed-form residues, Delange "
      "interpolation to real bases, and a self-verification suite."};
  app.require_subcommand(1);

  // eval
  EvalOptions eval_opt;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one series at a point");
  eval_cmd->add_option("--function", eval_opt.function,
                       "Zb | Fb | Gb | Gbeta | Fbeta")
      ->required();
  eval_cmd->add_option("--base", eval_opt.base, "integer base b >= 2");
  auto* beta_opt =
      eval_cmd->add_option("--beta", eval_opt.beta, "real base beta > 1");
  eval_cmd->add_option("--s", eval_opt.s_text, "point, e.g. 2.5+0i")->required();
  eval_cmd->add_option("--K", eval_opt.K, "Bernoulli truncation (0 = auto)");
  eval_cmd->add_option("--tol", eval_opt.tol, "target absolute tolerance");
  eval_cmd->add_option("--fourier-cutoff", eval_opt.fourier_cutoff,
                       "Fourier cutoff for beta series");
  eval_cmd->add_option("--table-n", eval_opt.table_n,
                       "S_beta table length for Fbeta");
  eval_cmd->add_option("--format", eval_opt.format, "json | csv");

  // poles
  std::string poles_function = "Fb";
  std::int64_t poles_base = 2;
  double poles_radius = 10.0;
  std::string poles_format = "json";
  auto* poles_cmd =
      app.add_subcommand("poles", "Enumerate poles with closed-form residues");
  poles_cmd->add_option("--function", poles_function, "Zb | Fb | Gb")->required();
  poles_cmd->add_option("--base", poles_base, "integer base b >= 2");
  poles_cmd->add_option("--radius", poles_radius, "|s| < radius")->required();
  poles_cmd->add_option("--format", poles_format, "json | csv");

  // certify
  std::string cert_function = "Fb";
  std::int64_t cert_base = 2;
  double cert_radius = 6.0;
  int cert_max_m = 2;
  double cert_tol = 1e-6;
  std::string cert_format = "json";
  auto* cert_cmd = app.add_subcommand(
      "certify", "Certify closed-form residues by contour extraction");
  cert_cmd->add_option("--function", cert_function, "Zb | Fb | Gb")->required();
  cert_cmd->add_option("--base", cert_base, "integer base b >= 2");
  cert_cmd->add_option("--radius", cert_radius, "certify poles with |s| < radius");
  cert_cmd->add_option("--max-m", cert_max_m, "restrict to |m| <= max-m");
  cert_cmd->add_option("--tol", cert_tol, "pass threshold on |contour - formula|");
  cert_cmd->add_option("--format", cert_format, "json | csv");

  // delange
  DelangeOptions del_opt;
  auto* del_cmd = app.add_subcommand(
      "delange", "Evaluate the Delange interpolation engine at points");
  del_cmd->add_option("--beta", del_opt.beta, "real base beta > 1")->required();
  del_cmd->add_option("--fourier-cutoff", del_opt.fourier_cutoff, "cutoff K");
  auto* copt = del_cmd->add_option("--coefficient", del_opt.coefficient_k,
                                   "emit c_beta(k)");
  auto* hopt = del_cmd->add_option("--h-at", del_opt.h_at, "emit h_beta(x)");
  del_cmd->add_option("--s-at", del_opt.s_at, "emit S_beta(n)");
  del_cmd->add_option("--d-at", del_opt.d_at, "emit d_beta(n)");
  del_cmd->add_option("--format", del_opt.format, "json | csv");

  // plot
  std::string plot_figures = "all";
  double plot_step = 0.01;
  int plot_cutoff = 1000;
  std::string plot_dir = ".";
  auto* plot_cmd = app.add_subcommand(
      "plot", "Emit the beta-sweep figure grids as CSV files");
  plot_cmd->add_option("--figures", plot_figures, "all | 1 | 2 | 3");
  plot_cmd->add_option("--step", plot_step, "beta grid step");
  plot_cmd->add_option("--fourier-cutoff", plot_cutoff, "cutoff K");
  plot_cmd->add_option("--output-dir", plot_dir, "directory for the CSV files");

  // verify
  std::string verify_only;
  double verify_tol_scale = 1.0;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run the full verification suite");
  verify_cmd->add_option("--only", verify_only,
                         "run only criteria whose group/name matches");
  verify_cmd->add_option("--tol-scale", verify_tol_scale,
                         "multiply every tolerance (0.1 = stricter)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) {
      eval_opt.beta_set = beta_opt->count() > 0;
      return run_eval(eval_opt);
    }
    if (poles_cmd->parsed()) {
      return run_poles(poles_function, poles_base, poles_radius, poles_format);
    }
    if (cert_cmd->parsed()) {
      return run_certify(cert_function, cert_base, cert_radius, cert_max_m,
                         cert_tol, cert_format);
    }
    if (del_cmd->parsed()) {
      del_opt.want_coefficient = copt->count() > 0;
      del_opt.want_h = hopt->count() > 0;
      return run_delange(del_opt);
    }
    if (plot_cmd->parsed()) {
      return run_plot(plot_figures, plot_step, plot_cutoff, plot_dir);
    }
    if (verify_cmd->parsed()) {
      auto report = dd::run_verification(std::cout, verify_only,
                                         verify_tol_scale, threads_from_env());
      return report.failures == 0 ? kExitOk : kExitVerifyFailure;
    }
  } catch (const dd::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dd::PoleAt& e) {
    std::cout << json{{"error",
                       {{"kind", "PoleAt"},
                        {"message", e.what()},
                        {"location", complex_json(e.location())}}}}
                     .dump(2)
              << "\n";
    return kExitNumeric;
  } catch (const dd::Error& e) {
    std::string kind = "NumericFailure";
    if (dynamic_cast<const dd::OutOfDomain*>(&e)) kind = "OutOfDomain";
    if (dynamic_cast<const dd::NonConvergence*>(&e)) kind = "NonConvergence";
    if (dynamic_cast<const dd::TableTooShort*>(&e)) kind = "TableTooShort";
    if (dynamic_cast<const dd::SymmetryViolation*>(&e)) kind = "SymmetryViolation";
    std::cout << json{{"error", {{"kind", kind}, {"message", e.what()}}}}.dump(2)
              << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}

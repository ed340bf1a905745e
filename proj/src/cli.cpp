#include "kernelforge/cli.hpp"

#include "kernelforge/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <optional>
#include <ostream>

namespace kernelforge::cli {

namespace {

nlohmann::json complex_json(std::complex<double> v) {
  if (v.imag() == 0.0) return v.real();
  return nlohmann::json{{"re", v.real()}, {"im", v.imag()}};
}

const char* normalization_name(Normalization n) {
  switch (n) {
    case Normalization::ratio_to_unweighted: return "ratio-to-unweighted-kernel";
    case Normalization::absolute_exact_volume: return "absolute-with-exact-volume";
    case Normalization::absolute_mc_volume: return "absolute-with-mc-volume";
  }
  return "?";
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("KERNELFORGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("KERNELFORGE_SEED must be an unsigned integer");
    }
  }
  return 12345;
}

Eigen::MatrixXcd parse_point(const DomainType& d, const std::string& text) {
  std::vector<std::complex<double>> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    entries.push_back(parse_complex(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }

  int rows = 0, cols = 0;
  switch (d.kind()) {
    case DomainKind::type_i: rows = d.m(); cols = d.n(); break;
    case DomainKind::type_ii:
    case DomainKind::type_iii: rows = d.n(); cols = d.n(); break;
    case DomainKind::type_iv: rows = d.n(); cols = 1; break;
    default: throw UnsupportedDomainError("points of types V/VI are not supported");
  }
  if (entries.size() != static_cast<std::size_t>(rows * cols))
    throw std::invalid_argument("expected " + std::to_string(rows * cols) + " comma-separated entries for " + d.label());

  Eigen::MatrixXcd x(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) x(i, j) = entries[static_cast<std::size_t>(i * cols + j)];
  return DomainPoint::make(d, std::move(x)).data;
}

Eigen::VectorXcd parse_fiber(const std::string& text, unsigned m) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(m);
  if (text.empty()) return out;
  std::size_t start = 0;
  unsigned idx = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (idx >= m) throw std::invalid_argument("fiber vector has more than m entries");
    out(idx++) = parse_complex(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (idx != m) throw std::invalid_argument("fiber vector must have exactly m entries");
  return out;
}

void emit(std::ostream& out, const OutputRecord& rec) { out << rec.to_json().dump(2) << "\n"; }

struct VerifyFailure {};

}  // namespace

nlohmann::json OutputRecord::to_json() const {
  return nlohmann::json{
      {"command", command}, {"params", params}, {"result", result}, {"provenance", provenance}};
}

std::complex<double> parse_complex(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty complex literal");
  std::string t = text;
  // Strip one pair of enclosing parentheses.
  if (t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);

  auto parse_part = [](const std::string& s) -> double {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("malformed number: " + s);
    return v;
  };

  bool imaginary_tail = t.back() == 'i' || t.back() == 'I';
  // Split at the last top-level +/- that is not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = t.size(); i-- > 1;) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      split = i;
      break;
    }
  }

  if (!imaginary_tail) {
    return {parse_part(t), 0.0};
  }
  std::string imag_text;
  double real = 0.0;
  if (split == std::string::npos) {
    imag_text = t.substr(0, t.size() - 1);
  } else {
    real = parse_part(t.substr(0, split));
    imag_text = t.substr(split, t.size() - split - 1);
  }
  if (imag_text.empty() || imag_text == "+") imag_text = "1";
  else if (imag_text == "-") imag_text = "-1";
  return {real, parse_part(imag_text)};
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"kernelforge: weighted and virtual Bergman kernels of bounded symmetric domains"};
  app.require_subcommand(1);

  std::string type_spec;
  std::string format = "json";

  // --- invariants ---
  auto* cmd_inv = app.add_subcommand("invariants", "numerical invariants r, a, b, g, n");
  cmd_inv->add_option("type", type_spec, "domain type, e.g. I:2,3")->required();

  // --- chi ---
  auto* cmd_chi = app.add_subcommand("chi", "the chi polynomial of the Hua integral");
  bool chi_expanded = false, chi_factored = false, chi_latex = false;
  cmd_chi->add_option("type", type_spec)->required();
  cmd_chi->add_flag("--expanded", chi_expanded, "exact expanded coefficients");
  cmd_chi->add_flag("--factored", chi_factored, "rising-factorial form (default)");
  cmd_chi->add_flag("--latex", chi_latex, "LaTeX form");
  cmd_chi->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  // --- hua ---
  auto* cmd_hua = app.add_subcommand("hua", "normalized Hua integral chi(0)/chi(s)");
  std::string s_text;
  cmd_hua->add_option("type", type_spec)->required();
  cmd_hua->add_option("--s", s_text, "exponent, rational or real")->required();

  // --- vk ---
  auto* cmd_vk = app.add_subcommand("vk", "virtual-kernel coefficients c_j and evaluations");
  std::string mu_text = "1";
  bool vk_coeffs = false;
  std::vector<std::string> eval_args;
  cmd_vk->add_option("type", type_spec)->required();
  cmd_vk->add_option("--mu", mu_text, "weight exponent (rational)")->required();
  cmd_vk->add_flag("--coeffs", vk_coeffs, "emit the exact coefficients (default)");
  cmd_vk->add_option("--eval", eval_args, "evaluate the m-th scaled derivative at t: --eval t m")
      ->expected(2);
  cmd_vk->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  // --- kernel ---
  auto* cmd_kernel = app.add_subcommand("kernel", "kernel evaluations at points");
  std::string point_text, point2_text, fiber_text, fiber2_text;
  int fiber_m = -1;
  double hartogs_r = -1.0;
  bool use_mc_volume = false;
  std::size_t mc_samples = 200000;
  std::uint64_t seed = 0;
  cmd_kernel->add_option("type", type_spec)->required();
  cmd_kernel->add_option("--mu", mu_text, "weight exponent (rational)");
  cmd_kernel->add_option("--m", fiber_m, "fiber dimension of the inflated domain");
  cmd_kernel->add_option("--point", point_text, "base point, comma-separated complex entries, row-major")->required();
  cmd_kernel->add_option("--fiber", fiber_text, "fiber vector Z (defaults to 0)");
  cmd_kernel->add_option("--point2", point2_text, "second base point w (defaults to z)");
  cmd_kernel->add_option("--fiber2", fiber2_text, "second fiber vector W (defaults to Z)");
  cmd_kernel->add_option("--r", hartogs_r, "virtual-kernel radius-squared argument");
  cmd_kernel->add_flag("--mc-volume", use_mc_volume, "normalize by a Monte Carlo volume estimate");
  cmd_kernel->add_option("--mc-samples", mc_samples);
  auto* kernel_seed_opt = cmd_kernel->add_option("--seed", seed);

  // --- verify ---
  auto* cmd_verify = app.add_subcommand("verify", "run an independent verification suite");
  std::string suite;
  double s_value = 1.0, sel_x = 1.0, sel_y = 1.0, sel_z = 1.0, rho = 1.0;
  int sel_n = 1, ball_n = 1, ball_m = 1, degree_max = 3;
  std::size_t samples = 1000000;
  bool paper_exponent = false;
  std::vector<double> t_list = {0.1, 0.3, 0.5};
  std::vector<int> m_list = {0, 1, 2};
  cmd_verify->add_option("suite", suite,
                         "mc-hua | selberg | reproducing-disk | inflation-ball | series-closed | "
                         "homogeneous-projection")
      ->required();
  cmd_verify->add_option("--type", type_spec);
  cmd_verify->add_option("--s", s_value);
  cmd_verify->add_option("--mu", mu_text);
  cmd_verify->add_option("--samples", samples);
  auto* verify_seed_opt = cmd_verify->add_option("--seed", seed);
  cmd_verify->add_option("--x", sel_x);
  cmd_verify->add_option("--y", sel_y);
  cmd_verify->add_option("--z", sel_z);
  cmd_verify->add_option("--n", ball_n);
  cmd_verify->add_option("--m", ball_m);
  cmd_verify->add_option("--selberg-n", sel_n);
  cmd_verify->add_option("--rho", rho);
  cmd_verify->add_option("--degree-max", degree_max);
  cmd_verify->add_option("--t", t_list);
  cmd_verify->add_option("--m-list", m_list);
  cmd_verify->add_flag("--paper-exponent", paper_exponent,
                       "use the uncorrected closed-form exponent (expected to fail)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;  // help exits 0; anything else is a usage error
  }

  if (cmd_inv->parsed()) {
    DomainType d = DomainType::parse(type_spec);
    Invariants v = invariants(d);
    OutputRecord rec{"invariants",
                     {{"type", d.label()}},
                     {{"r", v.rank}, {"a", v.a}, {"b", v.b}, {"g", v.genus}, {"n", v.dim}},
                     "exact"};
    emit(out, rec);
    return 0;
  }

  if (cmd_chi->parsed()) {
    DomainType d = DomainType::parse(type_spec);
    ChiPolynomial chi = chi_polynomial(d);
    if (!chi_expanded && !chi_latex) chi_factored = true;

    if (format == "csv") {
      if (!chi_expanded) throw std::invalid_argument("--format csv requires --expanded");
      out << "degree,coefficient\n";
      for (int i = 0; i <= chi.expanded.degree(); ++i)
        out << i << "," << to_string(chi.expanded.coefficient(static_cast<std::size_t>(i))) << "\n";
      return 0;
    }

    nlohmann::json result;
    result["degree"] = chi.expanded.degree();
    if (chi_factored) result["factored"] = chi.factored.to_string();
    if (chi_latex) result["latex"] = chi.factored.to_latex();
    if (chi_expanded) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (int i = 0; i <= chi.expanded.degree(); ++i)
        coeffs.push_back(to_string(chi.expanded.coefficient(static_cast<std::size_t>(i))));
      result["expanded"] = coeffs;
      result["pretty"] = chi.expanded.to_string();
    }
    emit(out, OutputRecord{"chi", {{"type", d.label()}}, result, "exact"});
    return 0;
  }

  if (cmd_hua->parsed()) {
    DomainType d = DomainType::parse(type_spec);
    OutputRecord rec;
    rec.command = "hua";
    rec.params = {{"type", d.label()}, {"s", s_text}};
    try {
      Rational s = parse_rational(s_text);
      rec.result = {{"ratio", to_string(hua_ratio(d, s))}};
      rec.provenance = "exact";
    } catch (const std::invalid_argument&) {
      rec.result = {{"ratio", hua_ratio(d, std::stod(s_text))}};
      rec.provenance = "float";
    }
    emit(out, rec);
    return 0;
  }

  if (cmd_vk->parsed()) {
    DomainType d = DomainType::parse(type_spec);
    Rational mu = parse_rational(mu_text);
    VirtualKernel vk = virtual_decomposition(d, mu);
    if (eval_args.empty()) vk_coeffs = true;

    if (format == "csv") {
      if (!vk_coeffs) throw std::invalid_argument("--format csv requires --coeffs");
      out << "j,c\n";
      for (std::size_t j = 0; j < vk.coeffs.size(); ++j)
        out << j << "," << to_string(vk.coeffs[j]) << "\n";
      return 0;
    }

    nlohmann::json result;
    std::string provenance = "exact";
    if (vk_coeffs) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto& c : vk.coeffs) coeffs.push_back(to_string(c));
      result["coeffs"] = coeffs;
    }
    if (!eval_args.empty()) {
      double t = std::stod(eval_args[0]);
      int m = std::stoi(eval_args[1]);
      if (m < 0) throw std::invalid_argument("--eval derivative order must be >= 0");
      result["eval"] = {{"t", t}, {"m", m},
                        {"value", complex_json(f_eval(vk, t, static_cast<unsigned>(m)))}};
      provenance = "float";
    }
    emit(out, OutputRecord{"vk", {{"type", d.label()}, {"mu", to_string(mu)}}, result, provenance});
    return 0;
  }

  if (cmd_kernel->parsed()) {
    DomainType d = DomainType::parse(type_spec);
    Rational mu = parse_rational(mu_text);
    Eigen::MatrixXcd z = parse_point(d, point_text);
    Eigen::MatrixXcd w = point2_text.empty() ? z : parse_point(d, point2_text);

    std::optional<VolumeEstimate> volume;
    std::string provenance = "float";
    if (use_mc_volume) {
      std::uint64_t sd = kernel_seed_opt->count() ? seed : default_seed();
      volume = mc_volume_omega(d, mc_samples, sd);
      provenance = "monte-carlo";
    }
    const VolumeEstimate* volp = volume ? &*volume : nullptr;

    KernelValue kv{};
    nlohmann::json params = {{"type", d.label()}, {"mu", to_string(mu)}};
    if (hartogs_r >= 0.0) {
      params["r"] = hartogs_r;
      kv = virtual_kernel_value(d, mu, z, hartogs_r, volp);
    } else if (fiber_m >= 0 || !fiber_text.empty()) {
      unsigned m = fiber_m >= 0 ? static_cast<unsigned>(fiber_m)
                                : static_cast<unsigned>(std::count(fiber_text.begin(), fiber_text.end(), ',') + 1);
      Eigen::VectorXcd zf = parse_fiber(fiber_text, m);
      Eigen::VectorXcd wf = fiber2_text.empty() ? zf : parse_fiber(fiber2_text, m);
      params["m"] = m;
      kv = inflated_kernel(d, mu, m, z, zf, w, wf, volp);
    } else {
      kv = weighted_kernel_ratio(d, mu, z, w);
    }
    emit(out, OutputRecord{"kernel", params,
                           {{"value", complex_json(kv.value)},
                            {"normalization", normalization_name(kv.normalization)}},
                           provenance});
    return 0;
  }

  // verify
  std::uint64_t sd = verify_seed_opt->count() ? seed : default_seed();
  Report rep;
  std::string provenance = "float";

  if (suite == "mc-hua") {
    if (type_spec.empty()) throw std::invalid_argument("mc-hua requires --type");
    DomainType d = DomainType::parse(type_spec);
    McEstimate est = mc_hua(d, s_value, samples, sd);
    double exact = hua_ratio(d, s_value);
    rep.name = "mc-hua";
    rep.params = {{"type", d.label()}, {"s", s_value}, {"samples", est.samples}, {"seed", sd}};
    rep.expected = exact;
    rep.observed = est.mean;
    rep.tolerance = 4.0 * est.stderr_;
    rep.pass = std::abs(est.mean - exact) <= rep.tolerance;
    rep.params["stderr"] = est.stderr_;
    rep.params["acceptance_rate"] = est.acceptance_rate;
    if (est.boundary_sensitive) rep.params["boundary_sensitive"] = true;
    provenance = "monte-carlo";
  } else if (suite == "selberg") {
    SelbergParams p{sel_x, sel_y, sel_z, sel_n};
    rep.name = "selberg";
    rep.params = {{"x", p.x}, {"y", p.y}, {"z", p.z}, {"n", p.n}};
    rep.expected = "closed product formula";
    rep.observed = selberg_value(p);
    rep.tolerance = 0.0;
    rep.pass = std::isfinite(selberg_value(p));
  } else if (suite == "reproducing-disk") {
    rep = check_reproducing_disk(parse_rational(mu_text), degree_max);
  } else if (suite == "inflation-ball") {
    rep = check_inflation_ball(ball_n, ball_m, sd);
  } else if (suite == "series-closed") {
    if (type_spec.empty()) type_spec = "I:1,1";
    rep = check_series_vs_closed(DomainType::parse(type_spec), parse_rational(mu_text), t_list,
                                 m_list, paper_exponent ? FExponent::paper_literal : FExponent::corrected);
  } else if (suite == "homogeneous-projection") {
    rep = check_homogeneous_projection(ball_m, rho);
  } else {
    throw std::invalid_argument("unknown verification suite: " + suite);
  }

  emit(out, OutputRecord{"verify", rep.params,
                         {{"report", rep.to_json()}}, provenance});
  if (!rep.pass) throw VerifyFailure{};
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const VerifyFailure&) {
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace kernelforge::cli

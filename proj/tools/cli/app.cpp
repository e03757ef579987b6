#include "app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fracspec/fracspec.hpp"

namespace fracspec::cli {
namespace {

using nlohmann::ordered_json;

enum class Format { csv, json, pretty };

struct Globals {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<double> gamma;
  std::string format;
  std::optional<double> tol;
};

struct ThetaArgs {
  std::optional<int> m;
  std::optional<double> lambda;
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> beta;
  std::vector<int> grid;
  std::string spectrum;
};

struct CnArgs {
  std::optional<int> n_min;
  std::optional<int> n_max;
};

struct MorseArgs {
  std::string spectrum;
  std::optional<double> null_tol;
};

struct BifurcateArgs {
  std::string path;
  std::size_t resolution = 1024;
  std::optional<double> refine_tol;
  std::optional<double> null_tol;
  std::string plot_data;
  std::size_t plot_samples = 512;
};

struct RegimeArgs {
  std::string n_range;
  int gamma_steps = 20;
};

Format resolve_format(const Globals& g, Format fallback) {
  if (g.format.empty()) return fallback;
  if (g.format == "csv") return Format::csv;
  if (g.format == "json") return Format::json;
  return Format::pretty;
}

double num(double v) { return round_significant(v); }
std::string txt(double v) { return format_double(v); }

template <typename T>
T parse_meta(const Metadata& meta, const std::string& key) {
  const std::string& text = meta.at(key);
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ParseError("metadata '" + key + "' is not a number: " + text);
  }
  return value;
}

/// Flags win over file metadata; k defaults to 1.
SpectralParams resolve_params(const Globals& g, const Metadata* meta, std::ostream& err) {
  auto from_meta = [&](const char* key) { return meta && meta->count(key) > 0; };
  int n = 0;
  if (g.n) {
    n = *g.n;
  } else if (from_meta("n")) {
    n = parse_meta<int>(*meta, "n");
  } else {
    throw DomainError("--n is required");
  }
  int k = 1;
  if (g.k) {
    k = *g.k;
  } else if (from_meta("k")) {
    k = parse_meta<int>(*meta, "k");
  }
  double gamma = 0.0;
  if (g.gamma) {
    gamma = *g.gamma;
  } else if (from_meta("gamma")) {
    gamma = parse_meta<double>(*meta, "gamma");
  } else {
    throw DomainError("--gamma is required");
  }
  SpectralParams params(n, k, gamma, GammaPolicy::allow_integer);
  if (params.extended()) {
    err << "warning: integer gamma = " << txt(gamma) << " evaluated in extended mode\n";
  }
  return params;
}

ordered_json params_json(const SpectralParams& p) {
  return {{"n", p.n()}, {"k", p.k()}, {"gamma", num(p.gamma())}, {"extended", p.extended()}};
}

ordered_json document(const SpectralParams& p) { return {{"schema", 1}, {"params", params_json(p)}}; }

void print_json(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

/// Plain rows of strings, printed comma-separated or column-aligned.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& out, Format format) const {
    if (format == Format::pretty) {
      std::vector<std::size_t> width(header.size());
      for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (c > 0) out << "  ";
          out << std::setw(static_cast<int>(width[c])) << cells[c];
        }
        out << '\n';
      };
      line(header);
      for (const auto& row : rows) line(row);
      return;
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) out << (c > 0 ? "," : "") << cells[c];
      out << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
  }
};

void cmd_theta(const Globals& g, const ThetaArgs& t, std::ostream& out, std::ostream& err) {
  const Format format = resolve_format(g, Format::csv);

  if (!t.grid.empty()) {
    if (t.spectrum.empty()) {
      throw DomainError("theta --grid needs --spectrum FILE");
    }
    const auto file = read_spectrum_file(t.spectrum);
    const auto params = resolve_params(g, &file.metadata, err);
    const int max_m = t.grid[0];
    const int max_l = t.grid[1];
    if (max_m < 0 || max_l < 0) {
      throw DomainError("theta --grid: M and L must be >= 0");
    }
    if (static_cast<std::size_t>(max_l) >= file.spectrum.size()) {
      throw DomainError("theta --grid: L = " + std::to_string(max_l) + " exceeds the " +
                        std::to_string(file.spectrum.size()) + " eigenvalues in " + t.spectrum);
    }
    const auto lambdas = file.spectrum.eigenvalues().first(static_cast<std::size_t>(max_l) + 1);
    const ThetaGrid grid(params, max_m, lambdas);
    if (format == Format::json) {
      auto doc = document(params);
      ordered_json lam = ordered_json::array();
      for (double v : grid.lambdas()) lam.push_back(num(v));
      ordered_json avals = ordered_json::array();
      for (double v : grid.a_values()) avals.push_back(num(v));
      ordered_json values = ordered_json::array();
      for (std::size_t m = 0; m < grid.rows(); ++m) {
        ordered_json row = ordered_json::array();
        for (std::size_t l = 0; l < grid.cols(); ++l) row.push_back(num(grid.at(m, l)));
        values.push_back(std::move(row));
      }
      doc["lambda"] = std::move(lam);
      doc["a"] = std::move(avals);
      doc["theta"] = std::move(values);
      print_json(out, doc);
      return;
    }
    Table table;
    table.header.push_back("m");
    for (std::size_t l = 0; l < grid.cols(); ++l) table.header.push_back("theta_l" + std::to_string(l));
    for (std::size_t m = 0; m < grid.rows(); ++m) {
      std::vector<std::string> row{std::to_string(m)};
      for (std::size_t l = 0; l < grid.cols(); ++l) row.push_back(txt(grid.at(m, l)));
      table.rows.push_back(std::move(row));
    }
    table.print(out, format);
    return;
  }

  const auto params = resolve_params(g, nullptr, err);
  if (t.m || t.lambda) {
    if (!t.m || !t.lambda) {
      throw DomainError("theta: --m and --lambda go together");
    }
    if (t.a || t.b || t.beta) {
      throw DomainError("theta: give either --m/--lambda or --a with --b/--beta");
    }
    const double value = theta_eigenvalue(*t.m, *t.lambda, params);
    if (format == Format::json) {
      auto doc = document(params);
      doc["m"] = *t.m;
      doc["lambda"] = num(*t.lambda);
      doc["theta"] = num(value);
      print_json(out, doc);
    } else {
      Table{{"m", "lambda", "theta"}, {{std::to_string(*t.m), txt(*t.lambda), txt(value)}}}.print(out, format);
    }
    return;
  }

  if (!t.a || (t.b.has_value() == t.beta.has_value())) {
    throw DomainError("theta: needs --m/--lambda, --a with exactly one of --b/--beta, or --grid with --spectrum");
  }
  const SymbolB b = t.b ? SymbolB::real(*t.b) : SymbolB::imaginary(*t.beta);
  const double value = theta({*t.a, b}, params);
  const std::string b_key = t.b ? "b" : "beta";
  if (format == Format::json) {
    auto doc = document(params);
    doc["a"] = num(*t.a);
    doc[b_key] = num(b.magnitude());
    doc["theta"] = num(value);
    print_json(out, doc);
  } else {
    Table{{"a", b_key, "theta"}, {{txt(*t.a), txt(b.magnitude()), txt(value)}}}.print(out, format);
  }
}

void cmd_cn(const Globals& g, const CnArgs& c, std::ostream& out) {
  const Format format = resolve_format(g, Format::csv);
  const int n_min = *c.n_min;
  const int n_max = c.n_max.value_or(n_min);
  const auto table = thresholds::cn_table(n_min, n_max, g.tol.value_or(1e-12));
  if (format == Format::json) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : table) {
      rows.push_back({{"n", r.n},
                      {"c_n", num(r.c_n)},
                      {"residual", num(r.residual)},
                      {"gap_to_asymptote", num(r.gap_to_asymptote())}});
    }
    print_json(out, {{"schema", 1}, {"cn", std::move(rows)}});
    return;
  }
  Table t{{"n", "c_n", "residual", "gap_to_asymptote"}, {}};
  for (const auto& r : table) {
    if (format == Format::pretty) {
      std::ostringstream c6;
      c6 << std::fixed << std::setprecision(6) << r.c_n;
      t.rows.push_back({std::to_string(r.n), c6.str(), txt(r.residual), txt(r.gap_to_asymptote())});
    } else {
      t.rows.push_back({std::to_string(r.n), txt(r.c_n), txt(r.residual), txt(r.gap_to_asymptote())});
    }
  }
  t.print(out, format);
}

const char* to_string(PairClass c) { return c == PairClass::negative ? "negative" : "null"; }

void cmd_morse(const Globals& g, const MorseArgs& m, std::ostream& out, std::ostream& err) {
  const Format format = resolve_format(g, Format::json);
  const auto file = read_spectrum_file(m.spectrum);
  const auto params = resolve_params(g, &file.metadata, err);
  const auto report = morse_index_nullity(file.spectrum, params, m.null_tol);
  if (!report.complete) {
    err << "warning: truncation certificate failed: Θ at the truncation bound (" << txt(report.certificate_theta)
        << ") does not clear the threshold (" << txt(report.threshold)
        << "); omitted eigenvalues may contribute\n";
  }
  if (format == Format::json) {
    auto doc = document(params);
    doc["index"] = report.index;
    doc["nullity"] = report.nullity;
    doc["threshold"] = num(report.threshold);
    doc["null_tolerance"] = num(report.null_tolerance);
    doc["complete"] = report.complete;
    doc["certificate_theta"] = num(report.certificate_theta);
    ordered_json pairs = ordered_json::array();
    for (const auto& p : report.contributing_pairs) {
      pairs.push_back({{"m", p.m},
                       {"l", p.l},
                       {"lambda", num(p.lambda)},
                       {"theta", num(p.theta)},
                       {"class", to_string(p.classification)}});
    }
    doc["contributing_pairs"] = std::move(pairs);
    print_json(out, doc);
    return;
  }
  if (format == Format::pretty) {
    out << "index      " << report.index << '\n'
        << "nullity    " << report.nullity << '\n'
        << "threshold  " << txt(report.threshold) << '\n'
        << "complete   " << (report.complete ? "yes" : "no") << '\n';
  }
  Table t{{"m", "l", "lambda", "theta", "class"}, {}};
  for (const auto& p : report.contributing_pairs) {
    t.rows.push_back({std::to_string(p.m), std::to_string(p.l), txt(p.lambda), txt(p.theta),
                      to_string(p.classification)});
  }
  if (format == Format::csv) {
    Table{{"index", "nullity", "threshold", "null_tolerance", "complete", "certificate_theta"},
          {{std::to_string(report.index), std::to_string(report.nullity), txt(report.threshold),
            txt(report.null_tolerance), report.complete ? "true" : "false", txt(report.certificate_theta)}}}
        .print(out, format);
    return;
  }
  t.print(out, format);
}

void cmd_bifurcate(const Globals& g, const BifurcateArgs& b, std::ostream& out, std::ostream& err) {
  const Format format = resolve_format(g, Format::json);
  const auto file = read_path_file(b.path);
  const auto params = resolve_params(g, &file.metadata, err);
  DetectOptions options;
  options.scan_resolution = b.resolution;
  options.refine_tol = b.refine_tol.value_or(g.tol.value_or(options.refine_tol));
  options.null_tolerance = b.null_tol;
  const auto report = detect_instants(file.path, params, options);
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';

  if (!b.plot_data.empty()) {
    std::ofstream plot(b.plot_data);
    if (!plot) {
      throw DomainError("cannot write plot data to " + b.plot_data);
    }
    write_plot_data(plot, file.path, params, b.plot_samples);
  }

  if (format == Format::json) {
    auto doc = document(params);
    doc["path_kind"] = to_string(file.path.kind());
    doc["threshold"] = num(report.threshold);
    doc["null_tolerance"] = num(report.null_tolerance);
    doc["index_start"] = report.index_start;
    doc["index_end"] = report.index_end;
    doc["jump_total"] = report.jump_total;
    doc["validated"] = report.validated;
    ordered_json instants = ordered_json::array();
    for (const auto& i : report.instants) {
      instants.push_back({{"t", num(i.t)},
                          {"track", i.track},
                          {"direction", i.direction},
                          {"theta", num(i.theta)},
                          {"residual", num(i.residual)}});
    }
    doc["instants"] = std::move(instants);
    ordered_json profile = ordered_json::array();
    for (const auto& s : report.index_profile) {
      profile.push_back({{"t_begin", num(s.t_begin)}, {"t_end", num(s.t_end)}, {"index", s.index}});
    }
    doc["index_profile"] = std::move(profile);
    doc["warnings"] = report.warnings;
    print_json(out, doc);
    return;
  }
  if (format == Format::pretty) {
    out << "threshold    " << txt(report.threshold) << '\n'
        << "index        " << report.index_start << " -> " << report.index_end << '\n'
        << "jump_total   " << report.jump_total << '\n'
        << "validated    " << (report.validated ? "yes" : "no") << '\n';
  }
  Table t{{"t", "track", "direction", "theta", "residual"}, {}};
  for (const auto& i : report.instants) {
    t.rows.push_back({txt(i.t), std::to_string(i.track), std::to_string(i.direction), txt(i.theta),
                      txt(i.residual)});
  }
  t.print(out, format);
}

std::pair<int, int> parse_range(const std::string& text) {
  auto parse_int = [&](std::string_view part) {
    int v = 0;
    const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || res.ec != std::errc{} || res.ptr != part.data() + part.size()) {
      throw ParseError("--n-range: expected A:B or A, got '" + text + "'");
    }
    return v;
  };
  const std::string_view view(text);
  const auto colon = view.find(':');
  if (colon == std::string_view::npos) {
    const int v = parse_int(view);
    return {v, v};
  }
  return {parse_int(view.substr(0, colon)), parse_int(view.substr(colon + 1))};
}

void cmd_regime(const Globals& g, const RegimeArgs& r, std::ostream& out) {
  const Format format = resolve_format(g, Format::csv);
  const auto [n_lo, n_hi] = parse_range(r.n_range);
  if (n_lo < 3 || n_hi < n_lo) {
    throw DomainError("--n-range: requires 3 <= A <= B");
  }
  if (r.gamma_steps < 1) {
    throw DomainError("--gamma-steps must be >= 1");
  }
  const int k = g.k.value_or(1);

  Table t{{"n", "gamma", "k", "in_regime", "extended", "q_gamma", "xi", "threshold", "inequality_holds"}, {}};
  ordered_json rows = ordered_json::array();
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int j = 1; j <= r.gamma_steps; ++j) {
      const double gamma = 0.5 * n * j / (r.gamma_steps + 1);
      const SpectralParams params(n, k, gamma, GammaPolicy::allow_integer);
      std::optional<double> q;
      try {
        q = q_gamma_formula(n, k, gamma);
      } catch (const PoleError&) {
      }
      std::optional<BifurcationInequality> ineq;
      if (k == 1 && params.admissible_spectrum()) ineq = check_bifurcation_inequality(params);
      const bool in_regime = params.positive_curvature_regime();

      ordered_json row{{"n", n}, {"gamma", num(gamma)}, {"k", k}, {"in_regime", in_regime},
                       {"extended", params.extended()}};
      row["q_gamma"] = q ? ordered_json(num(*q)) : ordered_json();
      row["xi"] = ineq ? ordered_json(num(ineq->xi)) : ordered_json();
      row["threshold"] = ineq ? ordered_json(num(ineq->threshold)) : ordered_json();
      row["inequality_holds"] = ineq ? ordered_json(ineq->holds) : ordered_json();
      rows.push_back(std::move(row));

      t.rows.push_back({std::to_string(n), txt(gamma), std::to_string(k), in_regime ? "true" : "false",
                        params.extended() ? "true" : "false", q ? txt(*q) : "", ineq ? txt(ineq->xi) : "",
                        ineq ? txt(ineq->threshold) : "", ineq ? (ineq->holds ? "true" : "false") : ""});
    }
  }
  if (format == Format::json) {
    print_json(out, {{"schema", 1}, {"rows", std::move(rows)}});
  } else {
    t.print(out, format);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral theory of the conformal fractional Laplacian on S^{n-k-1} x Σ^{k+1}", "fracspec"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Globals g;
  app.add_option("--n", g.n, "Sphere dimension n >= 3");
  app.add_option("--k", g.k, "Singular subsphere dimension (default 1)");
  app.add_option("--gamma", g.gamma, "Order gamma in (0, n/2)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json", "pretty"}));
  app.add_option("--tol", g.tol, "Root tolerance (cn: on c_n; bifurcate: default refine tolerance)");

  ThetaArgs ta;
  auto* theta_cmd = app.add_subcommand("theta", "Evaluate Θ_{m,l}, Θ(a,b), or a grid over a spectrum");
  theta_cmd->add_option("--m", ta.m, "Spherical harmonic degree");
  theta_cmd->add_option("--lambda", ta.lambda, "Surface Laplace eigenvalue");
  theta_cmd->add_option("--a", ta.a, "Raw symbol argument a");
  theta_cmd->add_option("--b", ta.b, "Real symbol argument b >= 0");
  theta_cmd->add_option("--beta", ta.beta, "Imaginary symbol argument b = i*beta");
  theta_cmd->add_option("--grid", ta.grid, "Grid m = 0..M, l = 0..L")->expected(2);
  theta_cmd->add_option("--spectrum", ta.spectrum, "Spectrum file for --grid");

  CnArgs ca;
  auto* cn_cmd = app.add_subcommand("cn", "Table of the thresholds c_n");
  cn_cmd->add_option("--n-min", ca.n_min, "First n (>= 4)")->required();
  cn_cmd->add_option("--n-max", ca.n_max, "Last n (default n-min)");

  MorseArgs ma;
  auto* morse_cmd = app.add_subcommand("morse", "Morse index and nullity of the trivial solution");
  morse_cmd->add_option("--spectrum", ma.spectrum, "Spectrum file")->required();
  morse_cmd->add_option("--null-tol", ma.null_tol, "Nullity band (default 1e-9 * threshold)");

  BifurcateArgs ba;
  auto* bif_cmd = app.add_subcommand("bifurcate", "Degeneracy instants along a path of spectra");
  bif_cmd->add_option("--path", ba.path, "Path file")->required();
  bif_cmd->add_option("--resolution", ba.resolution, "Scan cells per track")->capture_default_str();
  bif_cmd->add_option("--refine-tol", ba.refine_tol, "Bisection tolerance on t (default 1e-10)");
  bif_cmd->add_option("--null-tol", ba.null_tol, "Nullity band (default 1e-9 * threshold)");
  bif_cmd->add_option("--plot-data", ba.plot_data, "Write t, Θ_{0,l}(t), threshold CSV here");
  bif_cmd->add_option("--plot-samples", ba.plot_samples, "Plot samples")->capture_default_str();

  RegimeArgs ra;
  auto* regime_cmd = app.add_subcommand("regime", "Regime map over n and gamma");
  regime_cmd->add_option("--n-range", ra.n_range, "A:B or A")->required();
  regime_cmd->add_option("--gamma-steps", ra.gamma_steps, "Interior gamma grid points in (0, n/2)")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (theta_cmd->parsed()) {
      cmd_theta(g, ta, out, err);
    } else if (cn_cmd->parsed()) {
      cmd_cn(g, ca, out);
    } else if (morse_cmd->parsed()) {
      cmd_morse(g, ma, out, err);
    } else if (bif_cmd->parsed()) {
      cmd_bifurcate(g, ba, out, err);
    } else if (regime_cmd->parsed()) {
      cmd_regime(g, ra, out);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace fracspec::cli

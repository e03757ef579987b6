#include "fracspec/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <string>

#include "fracspec/error.hpp"
#include "fracspec/format.hpp"
#include "fracspec/morse.hpp"
#include "fracspec/roots.hpp"
#include "fracspec/specfun.hpp"
#include "fracspec/symbol.hpp"
#include "table_text.hpp"

namespace fracspec {

const char* to_string(PathKind kind) noexcept {
  switch (kind) {
    case PathKind::piecewise_linear:
      return "piecewise-linear";
    case PathKind::pinching_family:
      return "pinching-family";
    case PathKind::user_sampled:
      return "user-sampled";
  }
  return "unknown";
}

SpectralPath::SpectralPath(PathKind kind, std::vector<double> breakpoints, std::vector<std::vector<double>> tracks)
    : kind_(kind), breakpoints_(std::move(breakpoints)), tracks_(std::move(tracks)) {
  if (breakpoints_.size() < 2 || breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0) {
    throw DomainError("spectral path: breakpoints must run from t = 0 to t = 1");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] > breakpoints_[i - 1])) {
      throw DomainError("spectral path: breakpoints must be strictly increasing");
    }
  }
  if (tracks_.empty()) {
    throw DomainError("spectral path: at least one track is required");
  }
  for (std::size_t l = 0; l < tracks_.size(); ++l) {
    if (tracks_[l].size() != breakpoints_.size()) {
      throw DomainError("spectral path: track " + std::to_string(l + 1) + " has the wrong number of values");
    }
    for (double v : tracks_[l]) {
      if (!std::isfinite(v) || !(v > 0.0)) {
        throw DomainError("spectral path: track " + std::to_string(l + 1) + " must stay positive and finite");
      }
    }
  }
}

double SpectralPath::lambda(std::size_t l, double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("spectral path: t must lie in [0, 1]");
  }
  const auto& values = track(l);
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  if (it == breakpoints_.end()) return values.back();
  const std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  const double w = (t - breakpoints_[i]) / (breakpoints_[i + 1] - breakpoints_[i]);
  return values[i] + w * (values[i + 1] - values[i]);
}

SurfaceSpectrum SpectralPath::spectrum_at(double t) const {
  std::vector<double> lambdas;
  lambdas.reserve(tracks_.size() + 1);
  lambdas.push_back(0.0);
  for (std::size_t l = 1; l <= tracks_.size(); ++l) lambdas.push_back(lambda(l, t));
  std::sort(lambdas.begin() + 1, lambdas.end());
  return SurfaceSpectrum(std::move(lambdas));
}

SpectralPath pinching_family(int pinched, double lambda_end, const SurfaceSpectrum& base) {
  if (pinched < 1) {
    throw DomainError("pinching_family: need at least one pinched track");
  }
  if (!std::isfinite(lambda_end) || !(lambda_end > 0.25)) {
    throw DomainError("pinching_family: lambda_end must exceed 1/4");
  }
  const std::size_t tracks = base.size() - 1;
  if (static_cast<std::size_t>(pinched) > tracks) {
    throw DomainError("pinching_family: base spectrum has only " + std::to_string(tracks) + " nonzero eigenvalues");
  }
  std::vector<std::vector<double>> values;
  values.reserve(tracks);
  for (std::size_t l = 1; l <= tracks; ++l) {
    const double start = base[l];
    if (l <= static_cast<std::size_t>(pinched)) {
      const double target = 0.25 + (lambda_end - 0.25) * static_cast<double>(l) / pinched;
      if (!(start > target)) {
        throw DomainError("pinching_family: base eigenvalue " + std::to_string(l) + " does not exceed its target " +
                          std::to_string(target));
      }
      values.push_back({start, target});
    } else {
      values.push_back({start, start});
    }
  }
  return SpectralPath(PathKind::pinching_family, {0.0, 1.0}, std::move(values));
}

namespace {

int band_sign(double value, double tol) {
  if (value > tol) return 1;
  if (value < -tol) return -1;
  return 0;
}

}  // namespace

BifurcationReport detect_instants(const SpectralPath& path, const SpectralParams& params,
                                  const DetectOptions& options) {
  if (options.scan_resolution < 1) {
    throw DomainError("detect_instants: scan_resolution must be >= 1");
  }
  if (!(options.refine_tol > 0.0)) {
    throw DomainError("detect_instants: refine_tol must be positive");
  }
  BifurcationReport report;
  report.threshold = jacobi_threshold(params);
  report.null_tolerance = options.null_tolerance.value_or(default_null_tolerance(report.threshold));
  const double thr = report.threshold;
  const double tol = report.null_tolerance;
  const double a0 = a_m(0, params);

  auto excess = [&](std::size_t l, double t) {
    return theta({a0, b_of_lambda(path.lambda(l, t), 1)}, params) - thr;
  };

  for (std::size_t l = 1; l <= path.track_count(); ++l) {
    for (double t : {0.0, 1.0}) {
      if (band_sign(excess(l, t), tol) == 0) {
        throw EndpointDegenerateError("detect_instants: track " + std::to_string(l) + " is degenerate at t = " +
                                      format_double(t) + " (endpoints must have trivial kernel)");
      }
    }
    if (excess(l, 0.0) < 0.0) ++report.index_start;
  }

  const std::size_t cells = options.scan_resolution;
  for (std::size_t l = 1; l <= path.track_count(); ++l) {
    double last_t = 0.0;
    double last_value = excess(l, 0.0);
    int last_sign = band_sign(last_value, tol);
    bool touched_band = false;
    for (std::size_t i = 1; i <= cells; ++i) {
      const double t = i == cells ? 1.0 : static_cast<double>(i) / static_cast<double>(cells);
      const double value = excess(l, t);
      const int sign = band_sign(value, tol);
      if (sign == 0) {
        touched_band = true;
        continue;
      }
      if (sign != last_sign) {
        const auto root = roots::bisect([&](double s) { return excess(l, s); }, last_t, t, last_value,
                                        options.refine_tol);
        const double theta_star = root.fx + thr;
        report.instants.push_back({root.x, l, last_sign > 0 ? 1 : -1, theta_star, std::abs(root.fx)});
        if (std::abs(root.fx) > 1e-6 * thr) {
          report.warnings.push_back("track " + std::to_string(l) + ": refined crossing at t = " +
                                    format_double(root.x) + " has residual " + format_double(std::abs(root.fx)));
        }
      } else if (touched_band) {
        report.warnings.push_back("track " + std::to_string(l) + ": tangential contact with the threshold near t = " +
                                  format_double(t));
      }
      touched_band = false;
      last_t = t;
      last_value = value;
      last_sign = sign;
    }
  }

  std::sort(report.instants.begin(), report.instants.end(), [](const auto& x, const auto& y) {
    return x.t != y.t ? x.t < y.t : x.track < y.track;
  });

  int index = report.index_start;
  double seg_begin = 0.0;
  for (const auto& inst : report.instants) {
    if (inst.t > seg_begin) {
      report.index_profile.push_back({seg_begin, inst.t, index});
      seg_begin = inst.t;
    }
    index += inst.direction;
    report.jump_total += inst.direction;
  }
  report.index_profile.push_back({seg_begin, 1.0, index});

  report.index_end = morse_index_nullity(path.spectrum_at(1.0), params, tol).index;
  for (const auto& seg : report.index_profile) {
    const double mid = 0.5 * (seg.t_begin + seg.t_end);
    const int direct = morse_index_nullity(path.spectrum_at(mid), params, tol).index;
    if (direct != seg.index) {
      report.validated = false;
      report.warnings.push_back("resolution too coarse: index " + std::to_string(seg.index) + " on [" +
                                format_double(seg.t_begin) + ", " + format_double(seg.t_end) +
                                "] disagrees with direct count " + std::to_string(direct));
    }
  }
  if (report.index_end != report.index_start + report.jump_total) {
    report.validated = false;
    report.warnings.push_back("resolution too coarse: crossing count does not reproduce the index at t = 1");
  }
  return report;
}

double product_volume(int n, int genus) {
  if (n < 4) {
    throw DomainError("product_volume: requires n >= 4");
  }
  if (genus < 2) {
    throw DomainError("product_volume: genus must be >= 2");
  }
  const double half = 0.5 * (n + 1);
  return 8.0 * std::exp(half * std::log(std::numbers::pi) - specfun::log_gamma(0.5 * (n - 1))) * (genus - 1);
}

PathFile read_path(std::istream& in) {
  auto table = detail::read_table(in, "path");
  if (table.header.size() < 2 || table.header.front() != "t") {
    throw ParseError("path: header must be 't,lambda_1,...'");
  }
  PathKind kind = PathKind::user_sampled;
  if (auto it = table.metadata.find("kind"); it != table.metadata.end()) {
    if (it->second == "piecewise-linear") {
      kind = PathKind::piecewise_linear;
    } else if (it->second == "pinching-family") {
      kind = PathKind::pinching_family;
    } else if (it->second != "user-sampled") {
      throw ParseError("path: unknown kind '" + it->second + "'");
    }
  }
  std::vector<double> breakpoints;
  std::vector<std::vector<double>> tracks(table.header.size() - 1);
  for (const auto& row : table.rows) {
    breakpoints.push_back(row.front());
    for (std::size_t c = 1; c < row.size(); ++c) tracks[c - 1].push_back(row[c]);
  }
  return {SpectralPath(kind, std::move(breakpoints), std::move(tracks)), std::move(table.metadata)};
}

PathFile read_path_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw ParseError("cannot open path file " + file.string());
  }
  return read_path(in);
}

void write_path(std::ostream& out, const SpectralPath& path, const Metadata& metadata) {
  for (const auto& [key, value] : metadata) {
    if (key != "kind") out << "# " << key << ": " << value << '\n';
  }
  out << "# kind: " << to_string(path.kind()) << '\n';
  out << 't';
  for (std::size_t l = 1; l <= path.track_count(); ++l) out << ",lambda_" << l;
  out << '\n';
  const auto& bps = path.breakpoints();
  for (std::size_t i = 0; i < bps.size(); ++i) {
    out << format_double(bps[i], 17);
    for (std::size_t l = 1; l <= path.track_count(); ++l) out << ',' << format_double(path.track(l)[i], 17);
    out << '\n';
  }
}

void write_plot_data(std::ostream& out, const SpectralPath& path, const SpectralParams& params, std::size_t samples) {
  if (samples < 1) {
    throw DomainError("write_plot_data: samples must be >= 1");
  }
  const double thr = jacobi_threshold(params);
  const double a0 = a_m(0, params);
  out << 't';
  for (std::size_t l = 1; l <= path.track_count(); ++l) out << ",theta_" << l;
  out << ",threshold\n";
  for (std::size_t i = 0; i <= samples; ++i) {
    const double t = i == samples ? 1.0 : static_cast<double>(i) / static_cast<double>(samples);
    out << format_double(t);
    for (std::size_t l = 1; l <= path.track_count(); ++l) {
      out << ',' << format_double(theta({a0, b_of_lambda(path.lambda(l, t), 1)}, params));
    }
    out << ',' << format_double(thr) << '\n';
  }
}

}  // namespace fracspec

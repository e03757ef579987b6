#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fracspec/params.hpp"
#include "fracspec/spectrum.hpp"

namespace fracspec {

enum class PathKind { piecewise_linear, pinching_family, user_sampled };

const char* to_string(PathKind kind) noexcept;

/// A one-parameter family t -> {lambda_l(t)}, t in [0, 1], of surface spectra.
///
/// Each track l >= 1 is a breakpoint table over the shared breakpoints,
/// linearly interpolated in between; lambda_0(t) = 0 is implicit. Tracks may
/// cross each other, so the per-t spectrum is obtained by sorting.
class SpectralPath {
 public:
  /// tracks[l - 1][i] is lambda_l at breakpoints[i]. Breakpoints must be
  /// strictly increasing from 0 to 1 and every value positive and finite.
  SpectralPath(PathKind kind, std::vector<double> breakpoints, std::vector<std::vector<double>> tracks);

  PathKind kind() const noexcept { return kind_; }
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  std::size_t track_count() const noexcept { return tracks_.size(); }
  const std::vector<double>& track(std::size_t l) const { return tracks_.at(l - 1); }

  /// lambda_l(t) for l = 1..track_count().
  double lambda(std::size_t l, double t) const;

  /// Sorted spectrum at t, lambda_0 = 0 included.
  SurfaceSpectrum spectrum_at(double t) const;

 private:
  PathKind kind_;
  std::vector<double> breakpoints_;
  std::vector<std::vector<double>> tracks_;
};

/// Synthetic pinching family on top of `base`: tracks l = 1..pinched descend
/// linearly from their base values to 1/4 + (lambda_end - 1/4) j / pinched,
/// j = l, so the deepest track ends just above 1/4 and track `pinched` ends at
/// lambda_end. The remaining tracks stay constant. Every pinched base value
/// must exceed its target.
SpectralPath pinching_family(int pinched, double lambda_end, const SurfaceSpectrum& base);

struct DetectOptions {
  std::size_t scan_resolution = 1024;
  double refine_tol = 1e-10;
  std::optional<double> null_tolerance;  ///< defaults to 1e-9 * threshold
};

struct CrossingInstant {
  double t;
  std::size_t track;
  int direction;  ///< +1 when Θ_{0,l} drops below the threshold (index grows)
  double theta;
  double residual;  ///< |Θ_{0,l}(t) - threshold|
};

struct IndexSegment {
  double t_begin;
  double t_end;
  int index;
};

struct BifurcationReport {
  double threshold = 0.0;
  double null_tolerance = 0.0;
  std::vector<CrossingInstant> instants;  ///< sorted by (t, track)
  std::vector<IndexSegment> index_profile;
  int index_start = 0;
  int index_end = 0;
  int jump_total = 0;
  /// Every profile segment agrees with a direct Morse count at its midpoint.
  bool validated = true;
  std::vector<std::string> warnings;
};

/// Degeneracy instants of Θ_{0,l}(t) = Θ(a_0, b(lambda_l(t))) against the
/// Jacobi threshold.
///
/// Each track is sampled on a uniform grid of scan_resolution cells; sign
/// changes outside the nullity band are refined by bisection to refine_tol.
/// Samples that fall inside the band without a sign change are reported as
/// tangency warnings. The resulting index profile is checked against
/// morse_index_nullity at the midpoint of each segment; a mismatch (two
/// crossings of one track inside a scan cell) clears `validated` and adds a
/// resolution warning. Throws EndpointDegenerateError if some track is inside
/// the band at t = 0 or t = 1. Requires k = 1.
BifurcationReport detect_instants(const SpectralPath& path, const SpectralParams& params,
                                  const DetectOptions& options = {});

/// Volume of S^{n-2} x Σ^2 with the product metric:
/// 8 pi^{(n+1)/2} / Γ((n-1)/2) * (genus - 1).
double product_volume(int n, int genus);

struct PathFile {
  SpectralPath path;
  Metadata metadata;
};

/// Reads the breakpoint format
///
///   # n: 5
///   # gamma: 1
///   t,lambda_1,lambda_2
///   0,2.0,3.5
///   1,0.3,3.5
///
/// An optional "# kind:" entry selects the PathKind (default user-sampled).
PathFile read_path(std::istream& in);
PathFile read_path_file(const std::filesystem::path& file);
void write_path(std::ostream& out, const SpectralPath& path, const Metadata& metadata = {});

/// CSV t,theta_1,...,theta_L,threshold sampled at `samples` + 1 points.
void write_plot_data(std::ostream& out, const SpectralPath& path, const SpectralParams& params,
                     std::size_t samples);

}  // namespace fracspec

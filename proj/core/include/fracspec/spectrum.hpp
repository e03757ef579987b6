#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fracspec {

/// Laplace eigenvalues 0 = lambda_0 < lambda_1 <= ... <= lambda_L of a closed
/// hyperbolic surface, repeated by multiplicity.
///
/// truncation_bound is a lower bound for every omitted eigenvalue beyond
/// lambda_L; it defaults to lambda_L, which is always valid because the list is
/// sorted. When a genus g is given, at most 2g - 2 entries (lambda_0
/// included) may lie below 1/4.
class SurfaceSpectrum {
 public:
  /// Throws DomainError when an invariant fails.
  explicit SurfaceSpectrum(std::vector<double> eigenvalues, std::optional<int> genus = std::nullopt,
                           std::optional<double> truncation_bound = std::nullopt);

  std::span<const double> eigenvalues() const noexcept { return eigenvalues_; }
  std::size_t size() const noexcept { return eigenvalues_.size(); }
  double operator[](std::size_t l) const { return eigenvalues_.at(l); }
  std::optional<int> genus() const noexcept { return genus_; }
  double truncation_bound() const noexcept { return truncation_bound_; }

 private:
  std::vector<double> eigenvalues_;
  std::optional<int> genus_;
  double truncation_bound_;
};

/// Parsed "# key: value" comment lines of a table file.
using Metadata = std::map<std::string, std::string>;

struct SpectrumFile {
  SurfaceSpectrum spectrum;
  Metadata metadata;
};

/// Reads the single-column spectrum format:
///
///   # genus: 3
///   # truncation_bound: 40
///   lambda
///   0
///   0.21
///   ...
///
/// Lines starting with '#' are comments; those shaped "# key: value" are kept
/// as metadata, and genus / truncation_bound feed the spectrum. Throws
/// ParseError on malformed input and DomainError on invariant violations.
SpectrumFile read_spectrum(std::istream& in);
SpectrumFile read_spectrum_file(const std::filesystem::path& path);

void write_spectrum(std::ostream& out, const SurfaceSpectrum& spectrum, const Metadata& extra = {});

}  // namespace fracspec

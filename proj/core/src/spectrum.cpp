#include "fracspec/spectrum.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <string>

#include "fracspec/error.hpp"
#include "fracspec/format.hpp"
#include "table_text.hpp"

namespace fracspec {

SurfaceSpectrum::SurfaceSpectrum(std::vector<double> eigenvalues, std::optional<int> genus,
                                 std::optional<double> truncation_bound)
    : eigenvalues_(std::move(eigenvalues)), genus_(genus), truncation_bound_(0.0) {
  if (eigenvalues_.empty() || eigenvalues_.front() != 0.0) {
    throw DomainError("spectrum must start with lambda_0 = 0");
  }
  for (std::size_t l = 1; l < eigenvalues_.size(); ++l) {
    const double lambda = eigenvalues_[l];
    if (!std::isfinite(lambda)) {
      throw DomainError("spectrum entry " + std::to_string(l) + " is not finite");
    }
    if (lambda < eigenvalues_[l - 1]) {
      throw DomainError("spectrum must be nondecreasing (entry " + std::to_string(l) + ")");
    }
  }
  if (eigenvalues_.size() > 1 && !(eigenvalues_[1] > 0.0)) {
    throw DomainError("lambda_1 must be positive (connected surface)");
  }
  truncation_bound_ = truncation_bound.value_or(eigenvalues_.back());
  if (!std::isfinite(truncation_bound_) || truncation_bound_ < eigenvalues_.back()) {
    throw DomainError("truncation_bound must be >= the largest listed eigenvalue");
  }
  if (genus_) {
    if (*genus_ < 2) {
      throw DomainError("genus of a hyperbolic surface must be >= 2");
    }
    std::size_t below_quarter = 0;
    for (double lambda : eigenvalues_) below_quarter += lambda < 0.25;
    if (below_quarter > static_cast<std::size_t>(2 * *genus_ - 2)) {
      throw DomainError("genus " + std::to_string(*genus_) + " allows at most " + std::to_string(2 * *genus_ - 2) +
                        " eigenvalues below 1/4, found " + std::to_string(below_quarter));
    }
  }
}

SpectrumFile read_spectrum(std::istream& in) {
  auto table = detail::read_table(in, "spectrum");
  if (table.header.size() != 1 || table.header.front() != "lambda") {
    throw ParseError("spectrum: header must be 'lambda'");
  }
  std::vector<double> values;
  values.reserve(table.rows.size());
  for (const auto& row : table.rows) values.push_back(row.front());

  std::optional<int> genus;
  std::optional<double> bound;
  if (auto it = table.metadata.find("genus"); it != table.metadata.end()) {
    genus = detail::parse_integer(it->second, "spectrum genus");
  }
  if (auto it = table.metadata.find("truncation_bound"); it != table.metadata.end()) {
    bound = detail::parse_number(it->second, "spectrum truncation_bound");
  }
  return {SurfaceSpectrum(std::move(values), genus, bound), std::move(table.metadata)};
}

SpectrumFile read_spectrum_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open spectrum file " + path.string());
  }
  return read_spectrum(in);
}

void write_spectrum(std::ostream& out, const SurfaceSpectrum& spectrum, const Metadata& extra) {
  for (const auto& [key, value] : extra) {
    if (key == "genus" || key == "truncation_bound") continue;
    out << "# " << key << ": " << value << '\n';
  }
  if (spectrum.genus()) out << "# genus: " << *spectrum.genus() << '\n';
  out << "# truncation_bound: " << format_double(spectrum.truncation_bound(), 17) << '\n';
  out << "lambda\n";
  for (double lambda : spectrum.eigenvalues()) out << format_double(lambda, 17) << '\n';
}

}  // namespace fracspec

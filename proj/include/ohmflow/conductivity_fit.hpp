#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ohmflow/interp1d.hpp"
#include "ohmflow/point.hpp"
#include "ohmflow/separable.hpp"

namespace ohmflow {

struct SampleNode {
  double x1 = 0.0;
  double sigma = 0.0;
};

struct SampleRow {
  double ordinate = 0.0;  // common x2 of the row
  std::vector<SampleNode> nodes;
};

// Conductivity samples on horizontal grid lines, rows sorted by descending
// ordinate (row 0 is the topmost line).
struct SampleGrid {
  std::vector<SampleRow> rows;

  // Throws std::invalid_argument unless: >= 1 row, strictly descending
  // ordinates, >= 2 nodes per row with strictly increasing abscissae, and
  // every conductivity value > 0.
  void validate() const;

  double min_ordinate() const;
  double max_ordinate() const;
};

// Parses CSV with columns x1, x2, sigma (optional header line). Samples
// sharing x2 within group_tol form one row; rows are sorted descending by
// ordinate and nodes ascending by x1.
SampleGrid read_sample_csv(std::istream& in, double group_tol = 1e-12);
SampleGrid read_sample_csv_file(const std::string& path, double group_tol = 1e-12);

// One horizontal band of the piecewise model: sigma(x1, x2) = (x2 + K) *
// alpha(x1) for x2 in [lo, hi). The top band also owns x2 == hi.
struct Band {
  double lo = 0.0;
  double hi = 0.0;
  double ordinate = 0.0;  // source row's x2
  Interp1D alpha;         // row interpolant divided by (ordinate + K)
};

// Piecewise separable conductivity. Bands are stored top-down (descending
// ordinate, matching the row order); together they cover [x2_min, x2_max]
// with a boundary point belonging to the band above it.
struct PiecewiseSeparableSigma {
  double K = 0.0;
  std::vector<Band> bands;

  // Band owning x2; throws BandLookupError outside [x2_min, x2_max].
  std::size_t band_index(double x2) const;
  double evaluate(const Point& at) const;

  double x2_min() const { return bands.back().lo; }
  double x2_max() const { return bands.front().hi; }
};

// K giving x2 + K >= 1 over a domain with the given lowest x2.
inline double default_fit_K(double x2_min) { return 1.0 - x2_min; }

struct FitOptions {
  std::optional<double> K;  // default_fit_K(x2_min) when unset
  InterpKind kind = InterpKind::pchip;
  // Band range; widened automatically if ordinates fall outside it.
  double x2_min = -1.0;
  double x2_max = 1.0;
};

// Builds the banded model: per row j an interpolant f_j through its nodes,
// alpha_j = f_j / (ordinate_j + K), band j from the midpoint below the row
// to the midpoint above (ends extended to the domain range). Throws
// SingularWeightError when x2 + K comes within 1e-6 of zero on the range.
PiecewiseSeparableSigma fit_conductivity(const SampleGrid& grid, const FitOptions& opts = {});

// Largest 2x2 cross minor |s(x1,x2) s(x1',x2') - s(x1,x2') s(x1',x2)| over
// an n x n sample inside the band, relative to the squared largest sampled
// value. Zero (to roundoff) certifies the band is rank-1 separable.
double separability_check(const PiecewiseSeparableSigma& fitted, std::size_t band, int n = 8);

// Max over n abscissae of the jump |upper(x1, boundary) - lower-limit| at
// the interface between bands k and k+1 (bands are only piecewise
// continuous; this reports the mismatch magnitude).
double boundary_jump(const PiecewiseSeparableSigma& fitted, std::size_t interface_k, int n = 32);

// Separable weight of one band: sigma = s1(x1) s2(x2) with s1 = alpha,
// s2 = x2 + K, so p1 = 1/sqrt(alpha), p2 = sqrt(x2 + K). Requires x2 + K > 0
// and alpha > 0 across the band (SingularWeightError otherwise).
SeparableP band_weight(const PiecewiseSeparableSigma& fitted, std::size_t band);

// JSON round-trip of the fitted model (K, band intervals, ordinates, alpha
// nodes, interpolant kind).
std::string fit_to_json(const PiecewiseSeparableSigma& fitted);
PiecewiseSeparableSigma fit_from_json(const std::string& text);

}  // namespace ohmflow

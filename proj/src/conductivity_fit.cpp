#include "ohmflow/conductivity_fit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ohmflow/errors.hpp"

namespace ohmflow {

void SampleGrid::validate() const {
  if (rows.empty()) throw std::invalid_argument("sample grid has no rows");
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const SampleRow& row = rows[j];
    if (j > 0 && !(row.ordinate < rows[j - 1].ordinate)) {
      throw std::invalid_argument("row ordinates must be strictly descending");
    }
    if (row.nodes.size() < 2) throw std::invalid_argument("each row needs at least two nodes");
    for (std::size_t k = 0; k < row.nodes.size(); ++k) {
      if (k > 0 && !(row.nodes[k].x1 > row.nodes[k - 1].x1)) {
        throw std::invalid_argument("node abscissae must be strictly increasing within a row");
      }
      if (!(row.nodes[k].sigma > 0.0)) {
        throw std::invalid_argument("conductivity samples must be positive");
      }
    }
  }
}

double SampleGrid::min_ordinate() const { return rows.back().ordinate; }
double SampleGrid::max_ordinate() const { return rows.front().ordinate; }

SampleGrid read_sample_csv(std::istream& in, double group_tol) {
  struct Triple {
    double x1, x2, sigma;
  };
  std::vector<Triple> triples;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    Triple t{};
    if (!(ls >> t.x1 >> t.x2 >> t.sigma)) {
      if (first) {
        first = false;  // tolerate a header line
        continue;
      }
      throw std::runtime_error("malformed sample line: " + line);
    }
    first = false;
    triples.push_back(t);
  }
  if (triples.empty()) throw std::runtime_error("no samples in CSV input");

  std::stable_sort(triples.begin(), triples.end(),
                   [](const Triple& a, const Triple& b) { return a.x2 > b.x2; });
  SampleGrid grid;
  for (const Triple& t : triples) {
    if (grid.rows.empty() || std::abs(grid.rows.back().ordinate - t.x2) > group_tol) {
      grid.rows.push_back(SampleRow{t.x2, {}});
    }
    grid.rows.back().nodes.push_back(SampleNode{t.x1, t.sigma});
  }
  for (SampleRow& row : grid.rows) {
    std::sort(row.nodes.begin(), row.nodes.end(),
              [](const SampleNode& a, const SampleNode& b) { return a.x1 < b.x1; });
  }
  grid.validate();
  return grid;
}

SampleGrid read_sample_csv_file(const std::string& path, double group_tol) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sample file: " + path);
  return read_sample_csv(in, group_tol);
}

std::size_t PiecewiseSeparableSigma::band_index(double x2) const {
  if (!bands.empty()) {
    if (x2 == bands.front().hi) return 0;  // closed top end
    for (std::size_t j = 0; j < bands.size(); ++j) {
      if (x2 >= bands[j].lo && x2 < bands[j].hi) return j;
    }
  }
  throw BandLookupError("x2 outside every fitted band");
}

double PiecewiseSeparableSigma::evaluate(const Point& at) const {
  const Band& band = bands[band_index(at.x2)];
  return (at.x2 + K) * band.alpha.value(at.x1);
}

PiecewiseSeparableSigma fit_conductivity(const SampleGrid& grid, const FitOptions& opts) {
  grid.validate();
  const double lo_end = std::min(opts.x2_min, grid.min_ordinate());
  const double hi_end = std::max(opts.x2_max, grid.max_ordinate());
  const double K = opts.K.value_or(default_fit_K(lo_end));
  // x2 + K must stay away from zero across [lo_end, hi_end].
  const double a = lo_end + K, b = hi_end + K;
  if ((a <= 0.0) != (b <= 0.0) || std::min(std::abs(a), std::abs(b)) < 1e-6) {
    throw SingularWeightError("x2 + K vanishes (or nearly) inside the fitted domain");
  }

  PiecewiseSeparableSigma fitted;
  fitted.K = K;
  const std::size_t n = grid.rows.size();
  for (std::size_t j = 0; j < n; ++j) {
    const SampleRow& row = grid.rows[j];
    Band band;
    band.ordinate = row.ordinate;
    band.hi = (j == 0) ? hi_end : 0.5 * (grid.rows[j - 1].ordinate + row.ordinate);
    band.lo = (j + 1 == n) ? lo_end : 0.5 * (row.ordinate + grid.rows[j + 1].ordinate);
    std::vector<double> xs, alphas;
    xs.reserve(row.nodes.size());
    alphas.reserve(row.nodes.size());
    for (const SampleNode& node : row.nodes) {
      xs.push_back(node.x1);
      alphas.push_back(node.sigma / (row.ordinate + K));
    }
    band.alpha = Interp1D(std::move(xs), std::move(alphas), opts.kind);
    fitted.bands.push_back(std::move(band));
  }
  return fitted;
}

double separability_check(const PiecewiseSeparableSigma& fitted, std::size_t band, int n) {
  if (band >= fitted.bands.size()) throw BandLookupError("band index out of range");
  const Band& b = fitted.bands[band];
  const double x1_lo = b.alpha.abscissae().front();
  const double x1_hi = b.alpha.abscissae().back();
  std::vector<std::vector<double>> val(static_cast<std::size_t>(n));
  double peak = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x1 = x1_lo + (x1_hi - x1_lo) * (n == 1 ? 0.5 : double(i) / (n - 1));
    for (int k = 0; k < n; ++k) {
      // Strictly interior x2 so every sample resolves to this band.
      const double x2 = b.lo + (b.hi - b.lo) * (k + 0.5) / n;
      const double s = fitted.evaluate({x1, x2});
      val[static_cast<std::size_t>(i)].push_back(s);
      peak = std::max(peak, std::abs(s));
    }
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int i2 = i + 1; i2 < n; ++i2)
      for (int k = 0; k < n; ++k)
        for (int k2 = k + 1; k2 < n; ++k2) {
          const auto& vi = val[static_cast<std::size_t>(i)];
          const auto& vi2 = val[static_cast<std::size_t>(i2)];
          worst = std::max(worst, std::abs(vi[static_cast<std::size_t>(k)] *
                                               vi2[static_cast<std::size_t>(k2)] -
                                           vi[static_cast<std::size_t>(k2)] *
                                               vi2[static_cast<std::size_t>(k)]));
        }
  return peak > 0.0 ? worst / (peak * peak) : worst;
}

double boundary_jump(const PiecewiseSeparableSigma& fitted, std::size_t interface_k, int n) {
  if (interface_k + 1 >= fitted.bands.size()) {
    throw BandLookupError("interface index out of range");
  }
  const Band& upper = fitted.bands[interface_k];
  const Band& lower = fitted.bands[interface_k + 1];
  const double x2 = upper.lo;  // == lower.hi
  const double x1_lo = std::min(upper.alpha.abscissae().front(), lower.alpha.abscissae().front());
  const double x1_hi = std::max(upper.alpha.abscissae().back(), lower.alpha.abscissae().back());
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x1 = x1_lo + (x1_hi - x1_lo) * (n == 1 ? 0.5 : double(i) / (n - 1));
    const double above = (x2 + fitted.K) * upper.alpha.value(x1);
    const double below = (x2 + fitted.K) * lower.alpha.value(x1);
    worst = std::max(worst, std::abs(above - below));
  }
  return worst;
}

SeparableP band_weight(const PiecewiseSeparableSigma& fitted, std::size_t band) {
  if (band >= fitted.bands.size()) throw BandLookupError("band index out of range");
  const Band& b = fitted.bands[band];
  if (!(b.lo + fitted.K > 0.0)) {
    throw SingularWeightError("band weight needs x2 + K > 0 across the band");
  }
  const auto& xs = b.alpha.abscissae();
  for (double x1 : xs) {
    if (!(b.alpha.value(x1) > 0.0)) {
      throw SingularWeightError("band weight needs a positive band function");
    }
  }
  // Copies of the interpolant keep the returned evaluators self-contained.
  const Interp1D alpha = b.alpha;
  const double K = fitted.K;
  SeparableP p;
  p.p1.value = [alpha](double x1) { return 1.0 / std::sqrt(alpha.value(x1)); };
  p.p1.log_derivative = [alpha](double x1) {
    return -0.5 * alpha.derivative(x1) / alpha.value(x1);
  };
  p.p2.value = [K](double x2) { return std::sqrt(x2 + K); };
  p.p2.log_derivative = [K](double x2) { return 0.5 / (x2 + K); };
  return p;
}

std::string fit_to_json(const PiecewiseSeparableSigma& fitted) {
  nlohmann::json doc;
  doc["K"] = fitted.K;
  doc["bands"] = nlohmann::json::array();
  for (const Band& band : fitted.bands) {
    nlohmann::json jb;
    jb["lo"] = band.lo;
    jb["hi"] = band.hi;
    jb["ordinate"] = band.ordinate;
    jb["interp"] = band.alpha.kind() == InterpKind::pchip ? "pchip" : "linear";
    nlohmann::json nodes = nlohmann::json::array();
    const auto& xs = band.alpha.abscissae();
    const auto& ys = band.alpha.ordinates();
    for (std::size_t k = 0; k < xs.size(); ++k) nodes.push_back({xs[k], ys[k]});
    jb["nodes"] = std::move(nodes);
    doc["bands"].push_back(std::move(jb));
  }
  return doc.dump(2) + "\n";
}

PiecewiseSeparableSigma fit_from_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  PiecewiseSeparableSigma fitted;
  fitted.K = doc.at("K").get<double>();
  for (const nlohmann::json& jb : doc.at("bands")) {
    Band band;
    band.lo = jb.at("lo").get<double>();
    band.hi = jb.at("hi").get<double>();
    band.ordinate = jb.at("ordinate").get<double>();
    const std::string kind = jb.at("interp").get<std::string>();
    if (kind != "pchip" && kind != "linear") {
      throw std::runtime_error("unknown interpolant kind: " + kind);
    }
    std::vector<double> xs, ys;
    for (const nlohmann::json& node : jb.at("nodes")) {
      xs.push_back(node.at(0).get<double>());
      ys.push_back(node.at(1).get<double>());
    }
    band.alpha =
        Interp1D(std::move(xs), std::move(ys),
                 kind == "pchip" ? InterpKind::pchip : InterpKind::linear);
    fitted.bands.push_back(std::move(band));
  }
  if (fitted.bands.empty()) throw std::runtime_error("fitted model has no bands");
  return fitted;
}

}  // namespace ohmflow

#include "ohmflow/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ohmflow {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_powers_csv(std::ostream& out, const std::vector<PowerRow>& rows) {
  out << "x1,x2,re,im\n";
  for (const PowerRow& r : rows) {
    out << fmt17(r.x1) << ',' << fmt17(r.x2) << ',' << fmt17(r.z.real()) << ','
        << fmt17(r.z.imag()) << '\n';
  }
}

void write_fields_csv(std::ostream& out, const std::vector<FieldRow>& rows) {
  out << "x1,x2,j1,j2\n";
  for (const FieldRow& r : rows) {
    out << fmt17(r.x1) << ',' << fmt17(r.x2) << ',' << fmt17(r.j1) << ',' << fmt17(r.j2)
        << '\n';
  }
}

void write_boundary_csv(std::ostream& out, const BoundaryTrace& trace) {
  out << "theta,u,u_h\n";
  for (const BoundarySample& s : trace.samples) {
    out << fmt17(s.theta) << ',' << fmt17(s.u) << ',' << fmt17(s.u_h) << '\n';
  }
}

void write_trace_csv(std::ostream& out, const std::vector<Streamline>& lines) {
  out << "line,step,x1,x2\n";
  for (std::size_t l = 0; l < lines.size(); ++l) {
    for (std::size_t s = 0; s < lines[l].vertices.size(); ++s) {
      const Point& p = lines[l].vertices[s];
      out << l << ',' << s << ',' << fmt17(p.x1) << ',' << fmt17(p.x2) << '\n';
    }
  }
}

void write_powers_json(std::ostream& out, const std::vector<PowerRow>& rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const PowerRow& r : rows) {
    doc.push_back({{"x1", r.x1}, {"x2", r.x2}, {"re", r.z.real()}, {"im", r.z.imag()}});
  }
  out << doc.dump(2) << '\n';
}

void write_fields_json(std::ostream& out, const std::vector<FieldRow>& rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const FieldRow& r : rows) {
    doc.push_back({{"x1", r.x1}, {"x2", r.x2}, {"j1", r.j1}, {"j2", r.j2}});
  }
  out << doc.dump(2) << '\n';
}

void write_boundary_json(std::ostream& out, const BoundaryTrace& trace) {
  nlohmann::json doc;
  doc["order"] = trace.m;
  doc["coeff"] = {trace.coeff.real(), trace.coeff.imag()};
  doc["homogeneous_display_scale"] = trace.homogeneous_display_scale;
  doc["samples"] = nlohmann::json::array();
  for (const BoundarySample& s : trace.samples) {
    doc["samples"].push_back({{"theta", s.theta}, {"u", s.u}, {"u_h", s.u_h}});
  }
  out << doc.dump(2) << '\n';
}

namespace {

// Plot coordinates: x right, y down in SVG, so y = -x2.
std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.5f", v);
  return buf;
}

}  // namespace

void write_trace_svg(std::ostream& out, const std::vector<Streamline>& lines,
                     const SvgOptions& opts) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.size_px << "\" height=\""
      << opts.size_px << "\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n";
  out << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#999\" "
         "stroke-width=\"0.006\"/>\n";
  for (const Streamline& line : lines) {
    if (line.vertices.size() < 2) continue;
    out << "<polyline fill=\"none\" stroke=\"#000\" stroke-width=\"0.004\" points=\"";
    for (std::size_t s = 0; s < line.vertices.size(); ++s) {
      if (s) out << ' ';
      out << coord(line.vertices[s].x1) << ',' << coord(-line.vertices[s].x2);
    }
    out << "\"/>\n";
    // Arrowheads every arrow_every vertices, oriented along the local step.
    for (std::size_t s = static_cast<std::size_t>(opts.arrow_every);
         s < line.vertices.size(); s += static_cast<std::size_t>(opts.arrow_every)) {
      const Point& a = line.vertices[s - 1];
      const Point& b = line.vertices[s];
      const double dx = b.x1 - a.x1, dy = b.x2 - a.x2;
      const double norm = std::hypot(dx, dy);
      if (norm < 1e-15) continue;
      const double ux = dx / norm, uy = dy / norm;
      const double len = 0.045, half = 0.018;
      const double tipx = b.x1, tipy = b.x2;
      const double bx = tipx - len * ux, by = tipy - len * uy;
      // Perpendicular offsets for the back corners.
      const double px = -uy, py = ux;
      out << "<path d=\"M " << coord(tipx) << ' ' << coord(-tipy) << " L "
          << coord(bx + half * px) << ' ' << coord(-(by + half * py)) << " L "
          << coord(bx - half * px) << ' ' << coord(-(by - half * py))
          << " Z\" fill=\"#000\"/>\n";
    }
  }
  out << "</svg>\n";
}

std::vector<std::vector<double>> read_csv_numeric(std::istream& in, std::size_t expect_cols) {
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::vector<double> row;
    double v;
    while (ls >> v) row.push_back(v);
    if (row.size() != expect_cols) {
      if (first) {
        first = false;  // header
        continue;
      }
      throw std::runtime_error("unexpected column count in CSV row: " + line);
    }
    first = false;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ohmflow

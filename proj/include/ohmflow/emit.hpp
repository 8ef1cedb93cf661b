#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ohmflow/fields_potentials.hpp"
#include "ohmflow/point.hpp"
#include "ohmflow/streamline.hpp"

namespace ohmflow {

// Full-precision decimal form (17 significant digits): re-parsing the text
// recovers the exact double, which is what makes every artifact round-trip.
std::string fmt17(double v);

struct PowerRow {
  double x1 = 0.0, x2 = 0.0;
  Cplx z;
};

struct FieldRow {
  double x1 = 0.0, x2 = 0.0;
  double j1 = 0.0, j2 = 0.0;
};

void write_powers_csv(std::ostream& out, const std::vector<PowerRow>& rows);
void write_fields_csv(std::ostream& out, const std::vector<FieldRow>& rows);
void write_boundary_csv(std::ostream& out, const BoundaryTrace& trace);
// Columns line,step,x1,x2; one block per streamline in input order.
void write_trace_csv(std::ostream& out, const std::vector<Streamline>& lines);

void write_powers_json(std::ostream& out, const std::vector<PowerRow>& rows);
void write_fields_json(std::ostream& out, const std::vector<FieldRow>& rows);
void write_boundary_json(std::ostream& out, const BoundaryTrace& trace);

struct SvgOptions {
  int size_px = 640;
  int arrow_every = 40;  // arrowhead at every k-th vertex of a polyline
};

// Static plot of streamlines in the unit disk: boundary circle, one
// polyline per streamline, small triangular arrowheads showing the flow
// direction. x1 runs right, x2 runs up.
void write_trace_svg(std::ostream& out, const std::vector<Streamline>& lines,
                     const SvgOptions& opts = {});

// Numeric CSV reader for round-trip checks: skips an optional header line,
// requires expect_cols values per row.
std::vector<std::vector<double>> read_csv_numeric(std::istream& in, std::size_t expect_cols);

}  // namespace ohmflow

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cubical/complex.hpp"
#include "cubical/cylinders.hpp"
#include "cubical/hyperbolicity.hpp"
#include "cubical/stability.hpp"

namespace cubical {

// On-disk description of a complex: vertex count, edge list, optional
// automorphisms and name. Canonical text form (edges sorted, each pair
// ascending, stable key order) round-trips byte-identically.
struct ComplexFile {
  int vertices = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> automorphisms;  // empty = absent
  std::string name;                             // empty = absent
};

ComplexFile load_complex_file(const std::string& path);
std::string complex_file_text(ComplexFile f);
void save_complex_file(const ComplexFile& f, const std::string& path);

CubeComplex to_complex(const ComplexFile& f);
ComplexFile from_complex(const CubeComplex& c);

// Doubled half-integer as exact text: 6 -> "3", 5 -> "5/2".
std::string half_str(long x2);

std::string sweep_report_json(const SweepReport& r);

// Human-readable lines for the explicit constants; huge values stay in
// the exact coefficient * 2^exponent form.
std::string constants_text(const StabilityConstants& p);

// Graph description for external rendering: hyperplane classes as edge
// colors, cylinder vertices (when given) filled.
void export_dot(const CubeComplex& c, std::ostream& out,
                const Cylinder* highlight = nullptr);

}  // namespace cubical

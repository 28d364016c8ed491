#pragma once

/**
 * OFF export of bounded 3-D polytopes. Vertices are intersections of
 * constraint triples that satisfy every row; faces are the facets of the
 * irredundant description with at least three vertices, ordered
 * counterclockwise seen from outside.
 */

#include "nok/io.hpp"
#include "nok/polytope.hpp"

#include <string>
#include <vector>

namespace nok {

struct OffExport {
  HPolytope facets;
  /// Sorted lexicographically.
  std::vector<std::vector<Rational>> vertices;
  std::vector<std::vector<std::size_t>> faces;
  std::string off;
  /// {"vertices": [["p/q", ...], ...], "faces": [...], "hrep": <hrep>}
  Json sidecar;
};

/// Throws NotThreeDimensional unless dim == 3, Empty / Unbounded from the
/// bounding box.
OffExport emit_off_3d(const HPolytope& polytope, int precision = 6);

/// Decimal rendering rounded half away from zero.
std::string decimal_string(const Rational& value, int precision);

}  // namespace nok

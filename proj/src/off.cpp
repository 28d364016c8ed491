#include "nok/off.hpp"

#include "nok/error.hpp"
#include "nok/lattice.hpp"
#include "nok/lp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <sstream>

namespace nok {

std::string decimal_string(const Rational& value, int precision) {
  if (precision < 0) precision = 0;
  Integer scale = 1;
  for (int i = 0; i < precision; ++i) scale *= 10;
  Rational scaled = value * Rational(scale);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  Integer units = floor_of(scaled + Rational(1, 2));
  std::string digits = units.str();
  if (precision > 0) {
    if (digits.size() <= static_cast<std::size_t>(precision)) {
      digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(precision), ".");
  }
  return (negative && units != 0 ? "-" : "") + digits;
}

namespace {

using Point = std::vector<Rational>;

Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Cramer's rule on three constraint planes.
std::optional<Point> intersect(const LinearConstraint& a, const LinearConstraint& b,
                               const LinearConstraint& c) {
  std::array<std::array<Rational, 3>, 3> m;
  std::array<Rational, 3> rhs{Rational(a.bound), Rational(b.bound), Rational(c.bound)};
  const LinearConstraint* rows[3] = {&a, &b, &c};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = Rational(rows[i]->coeffs[j]);
  }
  Rational d = det3(m);
  if (d == 0) return std::nullopt;
  Point p(3);
  for (int j = 0; j < 3; ++j) {
    auto mj = m;
    for (int i = 0; i < 3; ++i) mj[i][j] = rhs[i];
    p[j] = det3(mj) / d;
  }
  return p;
}

Point minus(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Point cross(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const Point& a, const std::vector<Integer>& n) {
  return a[0] * Rational(n[0]) + a[1] * Rational(n[1]) + a[2] * Rational(n[2]);
}

// Orders the vertices of one facet around their centroid. Angles are only
// used for sorting; orientation is fixed exactly afterwards.
void order_cyclically(std::vector<std::size_t>& face, const std::vector<Point>& vertices,
                      const std::vector<Integer>& normal) {
  Point centre{0, 0, 0};
  for (auto v : face) {
    for (int j = 0; j < 3; ++j) centre[j] += vertices[v][j];
  }
  for (int j = 0; j < 3; ++j) centre[j] /= Rational(static_cast<long>(face.size()));
  Point u = minus(vertices[face[0]], centre);
  Point w = cross(Point{Rational(normal[0]), Rational(normal[1]), Rational(normal[2])}, u);
  auto to_d = [](const Rational& r) { return r.convert_to<double>(); };
  auto angle = [&](std::size_t v) {
    Point r = minus(vertices[v], centre);
    double x = to_d(r[0] * u[0] + r[1] * u[1] + r[2] * u[2]);
    double y = to_d(r[0] * w[0] + r[1] * w[1] + r[2] * w[2]);
    return std::atan2(y, x);
  };
  std::vector<std::pair<double, std::size_t>> keyed;
  for (auto v : face) keyed.emplace_back(angle(v), v);
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t t = 0; t < face.size(); ++t) face[t] = keyed[t].second;
  Point turn = cross(minus(vertices[face[1]], vertices[face[0]]),
                     minus(vertices[face[2]], vertices[face[0]]));
  if (dot(turn, normal) < 0) std::reverse(face.begin() + 1, face.end());
}

}  // namespace

OffExport emit_off_3d(const HPolytope& polytope, int precision) {
  if (polytope.dim() != 3) {
    throw Error(Errc::NotThreeDimensional, "OFF export needs dim 3, got " + std::to_string(polytope.dim()));
  }
  bounding_box(polytope);
  OffExport out;
  out.facets = remove_redundant(polytope);
  const auto& rows = out.facets.rows();

  std::vector<Point> found;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      for (std::size_t c = b + 1; c < rows.size(); ++c) {
        auto p = intersect(rows[a], rows[b], rows[c]);
        if (p && out.facets.contains(std::span<const Rational>(*p))) found.push_back(std::move(*p));
      }
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  out.vertices = found;

  for (const auto& row : rows) {
    std::vector<std::size_t> face;
    for (std::size_t v = 0; v < found.size(); ++v) {
      if (dot(found[v], row.coeffs) == Rational(row.bound)) face.push_back(v);
    }
    if (face.size() < 3) continue;
    order_cyclically(face, found, row.coeffs);
    out.faces.push_back(std::move(face));
  }

  std::ostringstream off;
  off << "OFF\n" << found.size() << " " << out.faces.size() << " 0\n";
  for (const auto& v : found) {
    off << decimal_string(v[0], precision) << " " << decimal_string(v[1], precision) << " "
        << decimal_string(v[2], precision) << "\n";
  }
  for (const auto& f : out.faces) {
    off << f.size();
    for (auto v : f) off << " " << v;
    off << "\n";
  }
  out.off = off.str();

  Json vertices = Json::array();
  for (const auto& v : found) {
    Json p = Json::array();
    for (const auto& x : v) p.push_back(to_string(x));
    vertices.push_back(std::move(p));
  }
  out.sidecar = Json::object();
  out.sidecar["vertices"] = std::move(vertices);
  out.sidecar["faces"] = out.faces;
  out.sidecar["hrep"] = to_json(out.facets);
  return out;
}

}  // namespace nok

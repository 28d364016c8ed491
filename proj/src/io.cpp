#include "nok/io.hpp"

#include "nok/error.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace nok {

namespace {

// Integers beyond 64 bits fall back to decimal strings.
Json integer_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

Integer integer_from(const Json& json) {
  if (json.is_number_integer()) return Integer(json.get<std::int64_t>());
  if (json.is_string()) {
    Rational r = parse_rational(json.get<std::string>());
    if (!is_integer(r)) throw Error(Errc::Parse, "expected an integer, got " + json.dump());
    return boost::multiprecision::numerator(r);
  }
  throw Error(Errc::Parse, "expected an integer, got " + json.dump());
}

const Json& field(const Json& json, const char* key) {
  if (!json.is_object() || !json.contains(key)) {
    throw Error(Errc::Parse, std::string("missing key \"") + key + "\"");
  }
  return json.at(key);
}

const Json& array_field(const Json& json, const char* key) {
  const Json& a = field(json, key);
  if (!a.is_array()) throw Error(Errc::Parse, std::string("\"") + key + "\" must be an array");
  return a;
}

std::size_t size_field(const Json& json, const char* key) {
  const Json& v = field(json, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw Error(Errc::Parse, std::string("\"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::int64_t> int_list(const Json& json) {
  if (!json.is_array()) throw Error(Errc::Parse, "expected an integer array, got " + json.dump());
  std::vector<std::int64_t> out;
  for (const auto& v : json) {
    if (!v.is_number_integer()) throw Error(Errc::Parse, "expected an integer, got " + v.dump());
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

Json row_json(const LinearConstraint& row) {
  Json a = Json::array();
  for (const auto& c : row.coeffs) a.push_back(integer_json(c));
  Json out = Json::object();
  out["a"] = std::move(a);
  out["b"] = integer_json(row.bound);
  return out;
}

LinearConstraint row_from(const Json& json, std::size_t dim, Relation kind) {
  const Json& a = array_field(json, "a");
  if (a.size() != dim) throw Error(Errc::Parse, "row length " + std::to_string(a.size()) + " != dim");
  std::vector<Integer> coeffs;
  for (const auto& c : a) coeffs.push_back(integer_from(c));
  return {std::move(coeffs), integer_from(field(json, "b")), kind};
}

Json row_json(const VerificationRow& row) {
  Json out = Json::object();
  out["k"] = row.k;
  out["fflv_sum"] = integer_json(row.fflv_sum);
  out["gz_sum"] = integer_json(row.gz_sum);
  out["demazure_dim"] = integer_json(row.demazure_dim);
  out["agree"] = row.agree();
  return out;
}

std::string render_weight(const Weight& w) {
  std::string s = "(";
  for (std::size_t j = 0; j < w.size(); ++j) s += (j ? "," : "") + std::to_string(w[j]);
  return s + ")";
}

}  // namespace

Json to_json(const BundleSpec& spec) {
  Json weights = Json::array();
  for (const auto& w : spec.weights()) weights.push_back(Json(std::vector<std::int64_t>(w.entries().begin(), w.entries().end())));
  Json out = Json::object();
  out["n"] = spec.n();
  out["weights"] = std::move(weights);
  return out;
}

BundleSpec bundle_spec_from_json(const Json& json) {
  const std::size_t n = size_field(json, "n");
  std::vector<Weight> weights;
  for (const auto& w : array_field(json, "weights")) weights.push_back(make_weight(int_list(w)));
  return make_bundle_spec(n, std::move(weights));
}

Json to_json(const HPolytope& polytope, const std::vector<std::string>& labels) {
  Json ineqs = Json::array(), eqs = Json::array();
  for (const auto& row : polytope.rows()) (row.is_equality() ? eqs : ineqs).push_back(row_json(row));
  Json out = Json::object();
  out["dim"] = polytope.dim();
  out["order"] = "row-major-u";
  out["ineqs"] = std::move(ineqs);
  out["eqs"] = std::move(eqs);
  if (!labels.empty()) out["labels"] = labels;
  return out;
}

HPolytope hpolytope_from_json(const Json& json) {
  const std::size_t dim = size_field(json, "dim");
  HPolytope out(dim);
  for (const auto& row : array_field(json, "ineqs")) out.add(row_from(row, dim, Relation::LessEqual));
  if (json.contains("eqs")) {
    for (const auto& row : array_field(json, "eqs")) out.add(row_from(row, dim, Relation::Equal));
  }
  return out;
}

Json to_json(const MinkowskiSpec& spec) {
  Json summands = Json::array();
  for (const auto& s : spec.summands()) summands.push_back(to_json(s));
  Json out = Json::object();
  out["dim"] = spec.dim();
  out["summands"] = std::move(summands);
  return out;
}

MinkowskiSpec minkowski_spec_from_json(const Json& json) {
  const std::size_t dim = size_field(json, "dim");
  std::vector<HPolytope> summands;
  for (const auto& s : array_field(json, "summands")) {
    summands.push_back(hpolytope_from_json(s));
    if (summands.back().dim() != dim) throw Error(Errc::SizeMismatch, "summand dimension != dim");
  }
  return MinkowskiSpec(std::move(summands));
}

Json to_json(const LaurentPolynomial& character) {
  Json terms = Json::array();
  for (const auto& [e, c] : character.terms()) {
    Json t = Json::object();
    t["exp"] = e;
    t["coeff"] = integer_json(c);
    terms.push_back(std::move(t));
  }
  Json out = Json::object();
  out["n"] = character.variables();
  out["terms"] = std::move(terms);
  return out;
}

LaurentPolynomial character_from_json(const Json& json) {
  LaurentPolynomial out(size_field(json, "n"));
  for (const auto& t : array_field(json, "terms")) {
    out.add_term(int_list(field(t, "exp")), integer_from(field(t, "coeff")));
  }
  return out;
}

Json to_json(const EhrhartPolynomial& polynomial) {
  Json out = Json::array();
  for (const auto& c : polynomial.coefficients()) out.push_back(to_string(c));
  return out;
}

Json to_json(const VerificationReport& report) {
  Json out = Json::object();
  out["spec"] = to_json(report.spec);
  out["max_dilation"] = report.max_dilation;
  out["verdict"] = report.pass ? "pass" : "fail";
  Json rows = Json::array();
  for (const auto& row : report.rows) rows.push_back(row_json(row));
  out["rows"] = std::move(rows);
  out["first_discrepancy"] = report.first_discrepancy ? row_json(*report.first_discrepancy) : Json();
  if (report.polynomials) {
    Json p = Json::object();
    p["fflv_ehrhart"] = to_json(report.polynomials->fflv);
    p["gz_ehrhart"] = to_json(report.polynomials->gz);
    p["hilbert"] = to_json(report.polynomials->hilbert);
    p["agree"] = report.polynomials->agree();
    out["polynomials"] = std::move(p);
  }
  if (report.polynomial_error) out["polynomial_error"] = *report.polynomial_error;
  if (report.resource_exceeded) out["resource_exceeded"] = *report.resource_exceeded;
  return out;
}

Json to_json(const CheckReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j = Json::object();
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  Json out = Json::object();
  out["verdict"] = report.pass() ? "pass" : "fail";
  out["checks"] = std::move(checks);
  return out;
}

std::string to_text(const HPolytope& polytope, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "dim " << polytope.dim() << ", " << polytope.inequality_count() << " inequalities, "
      << polytope.equality_count() << " equalities\n";
  for (const auto& row : polytope.rows()) out << "  " << describe(row, labels) << "\n";
  return out.str();
}

std::string to_text(const VerificationReport& report) {
  std::vector<std::vector<std::string>> cells{{"k", "fflv_sum", "gz_sum", "demazure_dim", "agree"}};
  for (const auto& row : report.rows) {
    cells.push_back({std::to_string(row.k), row.fflv_sum.str(), row.gz_sum.str(),
                     row.demazure_dim.str(), row.agree() ? "yes" : "NO"});
  }
  std::vector<std::size_t> width(5, 0);
  for (const auto& r : cells) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  out << "spec n=" << report.spec.n();
  for (const auto& w : report.spec.weights()) out << " " << render_weight(w);
  out << "\n";
  for (const auto& r : cells) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << r[c];
    }
    out << "\n";
  }
  if (report.polynomials) {
    auto line = [&](const char* name, const EhrhartPolynomial& p) {
      out << name;
      for (const auto& c : p.coefficients()) out << " " << to_string(c);
      out << "\n";
    };
    line("fflv ehrhart:", report.polynomials->fflv);
    line("gz ehrhart:  ", report.polynomials->gz);
    line("hilbert:     ", report.polynomials->hilbert);
  }
  if (report.polynomial_error) out << "polynomial fit: " << *report.polynomial_error << "\n";
  if (report.resource_exceeded) out << "incomplete: " << *report.resource_exceeded << "\n";
  out << "verdict: " << (report.pass ? "pass" : "fail") << "\n";
  return out.str();
}

std::string to_text(const CheckReport& report) {
  std::size_t width = 0;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << std::left << std::setw(static_cast<int>(width)) << c.name << "  "
        << (c.passed ? "ok" : "FAIL");
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  out << "verdict: " << (report.pass() ? "pass" : "fail") << "\n";
  return out.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::Parse, e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

}  // namespace nok

// nok: construct, count, verify and export the polytopes of the library.
//
// Exit status: 0 success, 1 computation error, 2 usage error, 3 verification
// failure.

#include "nok/demazure.hpp"
#include "nok/error.hpp"
#include "nok/fflv_gz.hpp"
#include "nok/io.hpp"
#include "nok/lattice.hpp"
#include "nok/lp.hpp"
#include "nok/minkowski.hpp"
#include "nok/off.hpp"
#include "nok/verify.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace nok;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t n = 0;
  std::string weight;
  std::string weights;
  std::string spec_file;
  std::string input_file;
  std::string kind = "fflv";
  std::size_t slot = 0;
  std::int64_t dilation = 1;
  std::optional<std::int64_t> max_dilation;
  std::optional<std::size_t> degree;
  std::string out;
  std::string format = "json";
  int jobs = 0;
  std::size_t fm_row_cap = 0;
  int precision = 6;
  double time_budget = 0;
  bool dim_only = false;
};

// Input errors are usage errors; anything thrown later is a computation error.
template <class F>
auto parse_input(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

ProjectionOptions projection(const Options& o) {
  ProjectionOptions p;
  if (o.fm_row_cap > 0) p.row_cap = o.fm_row_cap;
  return p;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Error(Errc::Parse, "cannot write " + o.out);
  file << text;
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

BundleSpec bundle_spec(const Options& o) {
  return parse_input([&] {
    if (!o.spec_file.empty()) return bundle_spec_from_json(read_json_file(o.spec_file));
    if (o.n == 0 || o.weights.empty()) throw UsageError("need --spec FILE or --n with --weights");
    return parse_weights(o.n, o.weights);
  });
}

Weight single_weight(const Options& o) {
  return parse_input([&] {
    if (o.weight.empty()) throw UsageError("need --weight");
    Weight w = parse_weight(o.weight);
    if (o.n != 0) {
      const std::size_t expected = o.slot == 0 ? o.n : o.n - o.slot + 1;
      if (w.size() != expected) {
        throw Error(Errc::SizeMismatch, "weight has " + std::to_string(w.size()) + " entries, expected " +
                                            std::to_string(expected));
      }
    }
    return w;
  });
}

void emit_polytope(const Options& o, const HPolytope& p, const std::vector<std::string>& labels) {
  if (o.format == "text") return emit(o, to_text(p, labels));
  if (o.format == "off") {
    OffExport e = emit_off_3d(p, o.precision);
    emit(o, e.off);
    if (!o.out.empty()) {
      std::ofstream side(o.out + ".json", std::ios::binary);
      side << dump(e.sidecar);
    }
    return;
  }
  emit(o, dump(to_json(p, labels)));
}

int run_single(const Options& o, bool is_fflv) {
  Weight w = single_weight(o);
  const char symbol = is_fflv ? 'u' : 'z';
  if (o.slot == 0) {
    HPolytope p = is_fflv ? fflv(w) : gz(w);
    emit_polytope(o, p, AmbientFrame(w.size()).labels(symbol));
    return 0;
  }
  if (o.n == 0) throw UsageError("--slot needs --n");
  AmbientFrame frame(o.n);
  if (o.slot >= o.n) throw UsageError("--slot must be below --n");
  HPolytope p = is_fflv ? embed_fflv(frame, o.slot, w) : embed_gz(frame, o.slot, w);
  emit_polytope(o, p, frame.labels(symbol));
  return 0;
}

// The polytope or sum a counting verb works on, with labels when known.
struct Target {
  std::optional<HPolytope> polytope;
  std::optional<MinkowskiSpec> sum;
  std::vector<std::string> labels;
};

Target target(const Options& o) {
  return parse_input([&] {
    Target t;
    if (!o.input_file.empty()) {
      Json j = read_json_file(o.input_file);
      if (j.contains("summands")) {
        t.sum = minkowski_spec_from_json(j);
      } else {
        t.polytope = hpolytope_from_json(j);
        if (j.contains("labels")) t.labels = j.at("labels").get<std::vector<std::string>>();
      }
      return t;
    }
    if (o.kind != "fflv" && o.kind != "gz") throw UsageError("--kind must be fflv or gz");
    if (!o.weight.empty()) {
      Weight w = single_weight(o);
      t.polytope = o.kind == "fflv" ? fflv(w) : gz(w);
      t.labels = AmbientFrame(w.size()).labels(o.kind == "fflv" ? 'u' : 'z');
      return t;
    }
    BundleSpec spec = bundle_spec(o);
    t.sum = o.kind == "fflv" ? fflv_sum_spec(spec) : gz_sum_spec(spec);
    t.labels = AmbientFrame(spec.n()).labels(o.kind == "fflv" ? 'u' : 'z');
    return t;
  });
}

HPolytope explicit_polytope(const Options& o, const Target& t) {
  if (t.polytope) return *t.polytope;
  return explicit_hrep(*t.sum, projection(o));
}

int run_msum(const Options& o) {
  Target t = target(o);
  if (!t.sum) t.sum = MinkowskiSpec({*t.polytope});
  MinkowskiSpec spec = o.dilation == 1 ? *t.sum : t.sum->dilated(o.dilation);
  emit_polytope(o, explicit_hrep(spec, projection(o)), t.labels);
  return 0;
}

int run_count(const Options& o) {
  if (o.dilation < 0) throw UsageError("--dilation must be nonnegative");
  Target t = target(o);
  Integer c;
  if (t.polytope) {
    c = count_lattice_points(dilate(*t.polytope, Rational(o.dilation)), {true, projection(o)});
  } else {
    c = SumCounter(*t.sum, {true, projection(o)}).count(o.dilation);
  }
  if (o.format == "text") {
    emit(o, c.str() + "\n");
  } else {
    Json j = Json::object();
    j["dilation"] = o.dilation;
    j["count"] = c.str().size() < 19 ? Json(c.convert_to<std::int64_t>()) : Json(c.str());
    emit(o, dump(j));
  }
  return 0;
}

int run_ehrhart(const Options& o) {
  Target t = target(o);
  HPolytope p = explicit_polytope(o, t);
  const std::size_t degree = o.degree ? *o.degree : expected_degree(p);
  EhrhartPolynomial e = ehrhart(p, degree, {true, projection(o)});
  Rational volume = factorial(static_cast<unsigned>(degree)) * e.coefficient(degree);
  if (o.format == "text") {
    std::ostringstream s;
    s << "coefficients (constant first):";
    for (const auto& c : e.coefficients()) s << " " << to_string(c);
    s << "\nnormalized volume: " << to_string(volume) << "\n";
    emit(o, s.str());
  } else {
    Json j = Json::object();
    j["degree"] = degree;
    j["coefficients"] = to_json(e);
    j["normalized_volume"] = to_string(volume);
    emit(o, dump(j));
  }
  return 0;
}

int run_gdc(const Options& o) {
  if (o.dilation < 0) throw UsageError("--dilation must be nonnegative");
  BundleSpec spec = parse_input([&] { return scale_spec(bundle_spec(o), o.dilation); });
  CharacterReport r = gdc(spec);
  if (o.dim_only) {
    emit(o, r.dimension.str() + "\n");
  } else if (o.format == "text") {
    std::ostringstream s;
    for (const auto& [e, c] : r.polynomial.terms()) {
      s << c << " x^(";
      for (std::size_t j = 0; j < e.size(); ++j) s << (j ? "," : "") << e[j];
      s << ")\n";
    }
    s << "dimension " << r.dimension << "\n";
    emit(o, s.str());
  } else {
    emit(o, dump(to_json(r.polynomial)));
  }
  return 0;
}

int run_verify(const Options& o) {
  BundleSpec spec = bundle_spec(o);
  const std::int64_t k = o.max_dilation ? *o.max_dilation : default_max_dilation(spec.n());
  if (k < 0) throw UsageError("--max-dilation must be nonnegative");
  VerifyOptions options;
  options.projection = projection(o);
  options.time_budget = o.time_budget;
  VerificationReport r = verify_theorem(spec, k, options);
  emit(o, o.format == "text" ? to_text(r) : dump(to_json(r)));
  if (r.resource_exceeded) return 1;
  return r.pass ? 0 : 3;
}

int run_regress(const Options& o) {
  auto [first, second] = parse_input([&] {
    std::string text = o.weights.empty() ? "1,0,-1;1,0" : o.weights;
    BundleSpec spec = parse_weights(3, text);
    return std::pair{spec.factor(1), spec.factor(2)};
  });
  CheckReport r = regression_example(first, second);
  emit(o, o.format == "text" ? to_text(r) : dump(to_json(r)));
  return r.pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton-Okounkov polytopes of Bott-Samelson line bundles"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write output to FILE instead of stdout");
    sub->add_option("--format", o.format, "json, text or off")
        ->check(CLI::IsMember({"json", "text", "off"}));
    sub->add_option("--jobs", o.jobs, "OpenMP threads")->check(CLI::PositiveNumber);
    sub->add_option("--fm-row-cap", o.fm_row_cap, "Fourier-Motzkin row cap (overrides NOK_FM_ROW_CAP)");
  };
  auto weights = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Rank n of GL_n")->check(CLI::Range(2, 64));
    sub->add_option("--weights", o.weights, "Weights L_1;...;L_{n-1}, e.g. \"1,0,-1;1,0\"");
    sub->add_option("--spec", o.spec_file, "BundleSpec JSON file");
  };
  auto polytope_input = [&](CLI::App* sub) {
    weights(sub);
    sub->add_option("--weight", o.weight, "Single weight, e.g. 1,0,-1");
    sub->add_option("--input", o.input_file, "H-rep or MinkowskiSpec JSON file");
    sub->add_option("--kind", o.kind, "fflv or gz")->check(CLI::IsMember({"fflv", "gz"}));
  };

  auto* fflv_cmd = app.add_subcommand("fflv", "FFLV polytope of a weight");
  auto* gz_cmd = app.add_subcommand("gz", "Gelfand-Zetlin polytope of a weight");
  for (auto* sub : {fflv_cmd, gz_cmd}) {
    sub->add_option("--n", o.n, "Ambient rank; checks the weight size");
    sub->add_option("--weight", o.weight, "Weight, e.g. 1,0,-1")->required();
    sub->add_option("--slot", o.slot, "Embed as factor i of the ambient space for GL_n");
    sub->add_option("--precision", o.precision, "Decimals in OFF output");
    common(sub);
  }

  auto* msum_cmd = app.add_subcommand("msum", "Explicit H-rep of a Minkowski sum");
  polytope_input(msum_cmd);
  msum_cmd->add_option("--dilation", o.dilation, "Dilation k");
  msum_cmd->add_option("--precision", o.precision, "Decimals in OFF output");
  common(msum_cmd);

  auto* count_cmd = app.add_subcommand("count", "Lattice points of a dilated polytope or sum");
  polytope_input(count_cmd);
  count_cmd->add_option("--dilation", o.dilation, "Dilation k");
  common(count_cmd);

  auto* ehrhart_cmd = app.add_subcommand("ehrhart", "Ehrhart polynomial by interpolation");
  polytope_input(ehrhart_cmd);
  ehrhart_cmd->add_option("--degree", o.degree, "Degree (default: affine dimension)");
  common(ehrhart_cmd);

  auto* gdc_cmd = app.add_subcommand("gdc", "Generalized Demazure character");
  weights(gdc_cmd);
  gdc_cmd->add_option("--dilation", o.dilation, "Dilation k");
  gdc_cmd->add_flag("--dim", o.dim_only, "Print only the dimension");
  common(gdc_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Three-way count comparison");
  weights(verify_cmd);
  verify_cmd->add_option("--max-dilation", o.max_dilation, "Largest dilation K");
  verify_cmd->add_option("--time-budget", o.time_budget, "Seconds before stopping with a partial report");
  common(verify_cmd);

  auto* regress_cmd = app.add_subcommand("regress", "Regression checks for the n = 3 example");
  regress_cmd->add_option("--weights", o.weights, "Two weights, e.g. \"1,0,-1;1,0\"");
  common(regress_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int status = app.exit(e);
    return status == 0 ? 0 : 2;
  }
  if (o.jobs > 0) omp_set_num_threads(o.jobs);

  try {
    if (fflv_cmd->parsed()) return run_single(o, true);
    if (gz_cmd->parsed()) return run_single(o, false);
    if (msum_cmd->parsed()) return run_msum(o);
    if (count_cmd->parsed()) return run_count(o);
    if (ehrhart_cmd->parsed()) return run_ehrhart(o);
    if (gdc_cmd->parsed()) return run_gdc(o);
    if (verify_cmd->parsed()) return run_verify(o);
    if (regress_cmd->parsed()) return run_regress(o);
  } catch (const UsageError& e) {
    std::cerr << "nok: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "nok: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

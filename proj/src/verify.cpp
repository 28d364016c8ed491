#include "nok/verify.hpp"

#include "nok/error.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace nok {

std::int64_t default_max_dilation(std::size_t n) {
  const auto d = static_cast<std::int64_t>(n * (n - 1) / 2);
  if (n <= 3) return d + 2;
  if (n == 4) return d;
  return 2;
}

MinkowskiSpec fflv_sum_spec(const BundleSpec& spec) {
  AmbientFrame frame(spec.n());
  std::vector<HPolytope> summands;
  for (std::size_t i = 1; i < spec.n(); ++i) summands.push_back(embed_fflv(frame, i, spec.factor(i)));
  return MinkowskiSpec(std::move(summands));
}

MinkowskiSpec gz_sum_spec(const BundleSpec& spec) {
  AmbientFrame frame(spec.n());
  std::vector<HPolytope> summands;
  for (std::size_t i = 1; i < spec.n(); ++i) summands.push_back(embed_gz(frame, i, spec.factor(i)));
  return MinkowskiSpec(std::move(summands));
}

VerificationReport verify_theorem(const BundleSpec& spec, std::int64_t max_dilation,
                                  VerifyOptions options) {
  if (spec.n() > options.max_n) {
    throw Error(Errc::ResourceExceeded, "n = " + std::to_string(spec.n()) + " exceeds the limit " +
                                            std::to_string(options.max_n));
  }
  if (max_dilation < 0) throw Error(Errc::IndexOutOfRange, "dilation must be nonnegative");
  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (options.time_budget <= 0) return false;
    std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
    return spent.count() > options.time_budget;
  };

  VerificationReport report;
  report.spec = spec;
  report.max_dilation = max_dilation;
  SumCountOptions count_options{options.parallel, options.projection};
  SumCounter fflv_counter(fflv_sum_spec(spec), count_options);
  SumCounter gz_counter(gz_sum_spec(spec), count_options);
  report.fflv_explicit = fflv_counter.has_explicit_hrep();
  report.gz_explicit = gz_counter.has_explicit_hrep();

  for (std::int64_t k = 0; k <= max_dilation; ++k) {
    if (out_of_time()) {
      report.resource_exceeded = "time budget exhausted before k = " + std::to_string(k);
      break;
    }
    VerificationRow row;
    row.k = k;
    row.fflv_sum = fflv_counter.count(k);
    row.gz_sum = gz_counter.count(k);
    row.demazure_dim = gdc(scale_spec(spec, k)).dimension;
    if (!row.agree() && !report.first_discrepancy) report.first_discrepancy = row;
    report.rows.push_back(std::move(row));
  }

  const std::size_t d = spec.n() * (spec.n() - 1) / 2;
  if (!report.resource_exceeded && report.rows.size() >= d + 3) {
    std::vector<Integer> f, g, h;
    for (const auto& row : report.rows) {
      f.push_back(row.fflv_sum);
      g.push_back(row.gz_sum);
      h.push_back(row.demazure_dim);
    }
    try {
      report.polynomials = PolynomialComparison{fit_with_holdouts(f, d), fit_with_holdouts(g, d),
                                                fit_with_holdouts(h, d)};
    } catch (const Error& e) {
      report.polynomial_error = e.what();
    }
  }

  report.pass = !report.resource_exceeded && !report.first_discrepancy;
  return report;
}

bool CheckReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* CheckReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

namespace {

std::vector<Integer> ints(std::initializer_list<long> values) {
  return {values.begin(), values.end()};
}

// Rows present in one canonical form but not the other, rendered with labels.
std::string difference(const HPolytope& got, const HPolytope& want,
                       const std::vector<std::string>& labels) {
  std::ostringstream out;
  for (const auto& row : got.rows()) {
    if (std::find(want.rows().begin(), want.rows().end(), row) == want.rows().end()) {
      out << "unexpected " << describe(row, labels) << "; ";
    }
  }
  for (const auto& row : want.rows()) {
    if (std::find(got.rows().begin(), got.rows().end(), row) == got.rows().end()) {
      out << "missing " << describe(row, labels) << "; ";
    }
  }
  return out.str();
}

Check compare(std::string name, const HPolytope& got, const HPolytope& want,
              const std::vector<std::string>& labels) {
  HPolytope a = canonical_form(got), b = canonical_form(want);
  Check c{std::move(name), a == b, {}};
  if (!c.passed) c.detail = difference(a, b, labels);
  return c;
}

}  // namespace

CheckReport regression_example(const Weight& first, const Weight& second) {
  if (first.size() != 3 || second.size() != 2) {
    throw Error(Errc::SizeMismatch, "the example takes a GL_3 and a GL_2 weight");
  }
  AmbientFrame frame(3);
  const auto labels = frame.labels('u');
  CheckReport report;

  // Coordinates (u^1_1, u^1_2, u^2_1).
  const long a = first[0] - first[1], b = first[1] - first[2], c = first[0] - first[2];
  HPolytope six(3);
  six.add_le(ints({-1, 0, 0}), 0);
  six.add_le(ints({0, -1, 0}), 0);
  six.add_le(ints({0, 0, -1}), 0);
  six.add_le(ints({1, 0, 0}), a);
  six.add_le(ints({0, 1, 0}), b);
  six.add_le(ints({1, 1, 1}), c);
  report.checks.push_back(compare("fflv-first-factor", fflv(first), six, labels));

  HPolytope segment(3);
  segment.add_eq(ints({1, 0, 0}), 0);
  segment.add_eq(ints({0, 0, 1}), 0);
  segment.add_le(ints({0, -1, 0}), 0);
  segment.add_le(ints({0, 1, 0}), second[0] - second[1]);
  report.checks.push_back(compare("fflv-second-factor-segment", embed_fflv(frame, 2, second), segment,
                                  labels));

  if (first.is_strictly_dominant() && second.is_strictly_dominant()) {
    BundleSpec spec = make_bundle_spec(3, {first, second});
    HPolytope sum = explicit_hrep(fflv_sum_spec(spec));
    Check facets{"sum-facet-count", sum.inequality_count() == 7 && sum.equality_count() == 0, {}};
    if (!facets.passed) {
      facets.detail = std::to_string(sum.inequality_count()) + " inequalities, " +
                      std::to_string(sum.equality_count()) + " equalities";
    }
    report.checks.push_back(std::move(facets));
  }
  return report;
}

std::vector<Weight> dominant_weights(std::size_t size, std::int64_t lo, std::int64_t hi) {
  std::vector<Weight> out;
  if (size == 0 || lo > hi) return out;
  std::vector<std::int64_t> entries(size, hi);
  // Enumerate in lexicographically decreasing order.
  while (true) {
    out.push_back(make_weight(entries));
    std::size_t j = size;
    while (j > 0 && entries[j - 1] == lo) --j;
    if (j == 0) break;
    --entries[j - 1];
    for (std::size_t t = j; t < size; ++t) entries[t] = entries[j - 1];
  }
  return out;
}

namespace {

std::string render(const Weight& w) {
  std::string s = "(";
  for (std::size_t j = 0; j < w.size(); ++j) s += (j ? "," : "") + std::to_string(w[j]);
  return s + ")";
}

}  // namespace

SingleWeightReport single_weight_suite(std::size_t n, std::int64_t max_entry, bool parallel) {
  AmbientFrame frame(n);
  SingleWeightReport out;
  CountOptions options{parallel, {}};
  for (std::size_t i = 1; i < n; ++i) {
    const auto weights = dominant_weights(n - i + 1, 0, max_entry);
    out.weights_per_slot.push_back(weights.size());
    Check counts{"slot-" + std::to_string(i) + "-counts", true, {}};
    Check chars{"slot-" + std::to_string(i) + "-character", true, {}};
    for (const auto& w : weights) {
      Integer f = count_lattice_points(embed_fflv(frame, i, w), options);
      Integer g = count_lattice_points(embed_gz(frame, i, w), options);
      Integer expect = weyl_dim(w);
      if (counts.passed && (f != expect || g != expect)) {
        counts.passed = false;
        counts.detail = render(w) + ": fflv " + f.str() + ", gz " + g.str() + ", weyl " + expect.str();
      }
      if (i == 1 && chars.passed) {
        std::vector<Weight> spec_weights{w};
        for (std::size_t t = 2; t < n; ++t) spec_weights.push_back(zero_weight(n - t + 1));
        CharacterReport ch = gdc(make_bundle_spec(n, std::move(spec_weights)));
        if (!(ch.polynomial == schur(w, n))) {
          chars.passed = false;
          chars.detail = render(w) + ": generalized Demazure character differs from the Schur polynomial";
        }
      }
    }
    out.report.checks.push_back(std::move(counts));
    if (i == 1) out.report.checks.push_back(std::move(chars));
  }
  return out;
}

BundleSpec random_spec(std::size_t n, std::int64_t max_entry, std::uint64_t seed) {
  if (max_entry < 0) throw Error(Errc::IndexOutOfRange, "max entry must be nonnegative");
  std::mt19937_64 gen(seed);
  const auto range = static_cast<std::uint64_t>(max_entry) + 1;
  std::vector<Weight> weights;
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<std::int64_t> entries(n - i + 1);
    for (auto& e : entries) e = static_cast<std::int64_t>(gen() % range);
    std::sort(entries.begin(), entries.end(), std::greater<>());
    weights.push_back(make_weight(entries));
  }
  return make_bundle_spec(n, std::move(weights));
}

}  // namespace nok

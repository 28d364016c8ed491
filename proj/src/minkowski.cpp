#include "nok/minkowski.hpp"

#include "nok/error.hpp"

#include <omp.h>

#include <exception>
#include <numeric>

namespace nok {

MinkowskiSpec::MinkowskiSpec(std::vector<HPolytope> summands) : summands_(std::move(summands)) {
  if (summands_.empty()) throw Error(Errc::EmptyInput, "Minkowski sum needs a summand");
  dim_ = summands_.front().dim();
  for (std::size_t t = 0; t < summands_.size(); ++t) {
    if (summands_[t].dim() != dim_) {
      throw Error(Errc::SizeMismatch, "summand " + std::to_string(t + 1) + " has dimension " +
                                          std::to_string(summands_[t].dim()));
    }
    if (!feasible(summands_[t]).feasible()) {
      throw Error(Errc::EmptyInput, "summand " + std::to_string(t + 1) + " is empty");
    }
  }
}

MinkowskiSpec MinkowskiSpec::dilated(std::int64_t k) const {
  std::vector<HPolytope> out;
  out.reserve(summands_.size());
  for (const auto& s : summands_) out.push_back(dilate(s, Rational(k)));
  return MinkowskiSpec(std::move(out));
}

HPolytope lifted_system(const MinkowskiSpec& spec,
                        const std::optional<std::vector<Rational>>& point) {
  const std::size_t dim = spec.dim();
  const std::size_t count = spec.summands().size();
  const std::size_t total = dim * count + (point ? 0 : dim);
  HPolytope out(total);
  for (std::size_t t = 0; t < count; ++t) {
    for (const auto& row : spec.summands()[t].rows()) {
      std::vector<Integer> coeffs(total, 0);
      std::copy(row.coeffs.begin(), row.coeffs.end(), coeffs.begin() + static_cast<long>(t * dim));
      out.add({std::move(coeffs), row.bound, row.kind});
    }
  }
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<Integer> coeffs(total, 0);
    Integer bound = 0;
    Integer scale = 1;
    if (point) {
      if (point->size() != dim) throw Error(Errc::SizeMismatch, "query point dimension");
      scale = boost::multiprecision::denominator((*point)[j]);
      bound = boost::multiprecision::numerator((*point)[j]);
    } else {
      coeffs[count * dim + j] = -1;
    }
    for (std::size_t t = 0; t < count; ++t) coeffs[t * dim + j] = scale;
    out.add_eq(std::move(coeffs), std::move(bound));
  }
  return out;
}

Membership member(const MinkowskiSpec& spec, std::span<const Rational> point) {
  std::vector<Rational> p(point.begin(), point.end());
  LpOutcome out = feasible(lifted_system(spec, p));
  Membership m;
  if (!out.feasible()) return m;
  m.member = true;
  const std::size_t dim = spec.dim();
  for (std::size_t t = 0; t < spec.summands().size(); ++t) {
    m.certificate.emplace_back(out.witness->begin() + static_cast<long>(t * dim),
                               out.witness->begin() + static_cast<long>((t + 1) * dim));
  }
  return m;
}

HPolytope explicit_hrep(const MinkowskiSpec& spec, ProjectionOptions options) {
  if (spec.summands().size() == 1) return remove_redundant(spec.summands().front());
  HPolytope lifted = lifted_system(spec);
  std::vector<std::size_t> keep(spec.dim());
  std::iota(keep.begin(), keep.end(), spec.dim() * spec.summands().size());
  HPolytope projected = fm_project(lifted, keep, options);
  return remove_redundant(projected);
}

namespace {

class LiftedWalker {
 public:
  LiftedWalker(const HPolytope& lifted, std::span<const std::size_t> keep)
      : lifted_(lifted), keep_(keep.begin(), keep.end()) {}

  // Integer range of keep[j] over the lifted system with keep[0..j) pinned.
  bool range(std::size_t j, const std::vector<Integer>& prefix, Integer& lo, Integer& hi) const {
    HPolytope p = lifted_;
    for (std::size_t t = 0; t < j; ++t) p = pin_coordinate(p, keep_[t], prefix[t]);
    std::vector<Integer> e(p.dim(), 0);
    e[keep_[j]] = 1;
    LpOutcome top = maximize(e, p);
    if (top.status == LpStatus::Infeasible) return false;
    if (top.status == LpStatus::Unbounded) throw Error(Errc::Unbounded, "projected coordinate");
    LpOutcome bottom = minimize(e, p);
    if (bottom.status == LpStatus::Unbounded) throw Error(Errc::Unbounded, "projected coordinate");
    lo = ceil_of(*bottom.optimum);
    hi = floor_of(*top.optimum);
    return lo <= hi;
  }

  Integer walk(std::size_t j, std::vector<Integer>& prefix) const {
    Integer lo, hi;
    if (!range(j, prefix, lo, hi)) return 0;
    if (j + 1 == keep_.size()) return hi - lo + 1;
    Integer total = 0;
    for (Integer v = lo; v <= hi; ++v) {
      prefix[j] = v;
      total += walk(j + 1, prefix);
    }
    return total;
  }

  std::size_t depth() const { return keep_.size(); }

 private:
  HPolytope lifted_;
  std::vector<std::size_t> keep_;
};

}  // namespace

Integer count_projected(const HPolytope& lifted, std::span<const std::size_t> keep,
                        bool parallel) {
  if (keep.empty()) throw Error(Errc::SizeMismatch, "nothing to count");
  LiftedWalker walker(lifted, keep);
  std::vector<Integer> prefix(keep.size());
  Integer lo, hi;
  if (!walker.range(0, prefix, lo, hi)) return 0;
  if (walker.depth() == 1) return hi - lo + 1;
  const long span = static_cast<long>(hi - lo) + 1;
  std::vector<Integer> partial(static_cast<std::size_t>(span));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < span; ++i) {
    try {
      std::vector<Integer> local(keep.size());
      local[0] = lo + i;
      partial[static_cast<std::size_t>(i)] = walker.walk(1, local);
    } catch (...) {
#pragma omp critical(nok_projected_error)
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return std::accumulate(partial.begin(), partial.end(), Integer(0));
}

SumCounter::SumCounter(MinkowskiSpec spec, SumCountOptions options)
    : spec_(std::move(spec)), options_(options) {
  try {
    hrep_ = explicit_hrep(spec_, options_.projection);
    chain_ = std::make_shared<ProjectionChain>(*hrep_, options_.projection);
  } catch (const Error& e) {
    if (e.code() != Errc::DimensionOverflow) throw;
    hrep_.reset();
    chain_.reset();
  }
}

Integer SumCounter::count(std::int64_t k) const {
  if (k < 0) throw Error(Errc::IndexOutOfRange, "dilation must be nonnegative");
  if (chain_) return chain_->count(k, options_.parallel);
  MinkowskiSpec scaled = spec_.dilated(k);
  HPolytope lifted = lifted_system(scaled);
  std::vector<std::size_t> keep(spec_.dim());
  std::iota(keep.begin(), keep.end(), spec_.dim() * spec_.summands().size());
  return count_projected(lifted, keep, options_.parallel);
}

Integer count_sum(const MinkowskiSpec& spec, std::int64_t k, SumCountOptions options) {
  return SumCounter(spec, options).count(k);
}

namespace {

bool rows_hold(const HPolytope& region, std::size_t offset, const HPolytope& outer) {
  for (const auto& row : outer.rows()) {
    std::vector<Integer> c(region.dim(), 0);
    std::copy(row.coeffs.begin(), row.coeffs.end(), c.begin() + static_cast<long>(offset));
    LpOutcome top = maximize(c, region);
    if (top.status == LpStatus::Infeasible) return true;
    if (top.status == LpStatus::Unbounded || *top.optimum > Rational(row.bound)) return false;
    if (row.is_equality()) {
      LpOutcome bottom = minimize(c, region);
      if (*bottom.optimum < Rational(row.bound)) return false;
    }
  }
  return true;
}

}  // namespace

bool contained_in(const HPolytope& inner, const HPolytope& outer) {
  if (inner.dim() != outer.dim()) throw Error(Errc::SizeMismatch, "containment dimensions");
  return rows_hold(inner, 0, outer);
}

bool contained_in(const MinkowskiSpec& inner, const HPolytope& outer) {
  if (inner.dim() != outer.dim()) throw Error(Errc::SizeMismatch, "containment dimensions");
  HPolytope lifted = lifted_system(inner);
  return rows_hold(lifted, inner.dim() * inner.summands().size(), outer);
}

}  // namespace nok

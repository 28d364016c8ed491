#include "nok/lattice.hpp"

#include "nok/error.hpp"

#include <omp.h>

#include <exception>
#include <limits>
#include <numeric>

namespace nok {

namespace {

// Machine-integer kernel: coefficients and bounds below 2^31 keep every
// partial sum well inside __int128.
constexpr long long kFastLimit = 1LL << 31;

using Wide = __int128;

template <class Coef, class Acc>
struct BoundRow {
  std::vector<Coef> prefix;  // coefficients of x_0 .. x_{j-1}
  Coef coef;                 // coefficient of x_j, nonzero
  Coef bound;
  bool equality;
};

template <class Acc, class Coef>
Acc floor_div(const Acc& num, const Coef& den) {
  Acc d = static_cast<Acc>(den);
  Acc q = num / d;
  if (q * d != num && ((num < 0) != (d < 0))) q -= 1;
  return q;
}

template <class Acc, class Coef>
Acc ceil_div(const Acc& num, const Coef& den) {
  return -floor_div<Acc, Coef>(-num, den);
}

template <class Coef, class Acc>
class ChainKernel {
 public:
  using Row = BoundRow<Coef, Acc>;

  ChainKernel(std::vector<std::vector<Row>> rows, Acc k) : rows_(std::move(rows)), k_(k) {}

  std::size_t depth() const { return rows_.size(); }

  // Integer range of x_j for the given prefix; false when empty.
  bool range(std::size_t j, const std::vector<Acc>& x, Acc& lo, Acc& hi) const {
    bool has_lo = false, has_hi = false;
    for (const auto& row : rows_[j]) {
      Acc r = k_ * static_cast<Acc>(row.bound);
      for (std::size_t t = 0; t < j; ++t) {
        if (row.prefix[t] != 0) r -= static_cast<Acc>(row.prefix[t]) * x[t];
      }
      if (row.equality) {
        Acc c = static_cast<Acc>(row.coef);
        Acc v = r / c;
        if (v * c != r) return false;
        if (!has_lo || v > lo) lo = v;
        if (!has_hi || v < hi) hi = v;
        has_lo = has_hi = true;
      } else if (row.coef > 0) {
        Acc v = floor_div<Acc, Coef>(r, row.coef);
        if (!has_hi || v < hi) hi = v;
        has_hi = true;
      } else {
        Acc v = ceil_div<Acc, Coef>(r, row.coef);
        if (!has_lo || v > lo) lo = v;
        has_lo = true;
      }
      if (has_lo && has_hi && lo > hi) return false;
    }
    if (!has_lo || !has_hi) throw Error(Errc::Unbounded, "coordinate " + std::to_string(j + 1));
    return lo <= hi;
  }

  Integer walk(std::size_t j, std::vector<Acc>& x) const {
    Acc lo{}, hi{};
    if (!range(j, x, lo, hi)) return 0;
    if (j + 1 == depth()) {
      Acc span = hi - lo + 1;
      return to_integer(span);
    }
    Integer total = 0;
    for (Acc v = lo; v <= hi; v += 1) {
      x[j] = v;
      total += walk(j + 1, x);
    }
    return total;
  }

  Integer count_serial() const {
    std::vector<Acc> x(depth());
    return walk(0, x);
  }

  Integer count_parallel() const {
    const std::size_t split = std::min<std::size_t>(2, depth() - 1);
    if (split == 0) return count_serial();
    // Prefixes of length `split` whose partial ranges are nonempty.
    std::vector<std::vector<Acc>> prefixes;
    std::vector<Acc> x(depth());
    collect(0, split, x, prefixes);
    std::vector<Integer> partial(prefixes.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(prefixes.size()); ++i) {
      try {
        std::vector<Acc> local = prefixes[static_cast<std::size_t>(i)];
        partial[static_cast<std::size_t>(i)] = walk(split, local);
      } catch (...) {
#pragma omp critical(nok_count_error)
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    return std::accumulate(partial.begin(), partial.end(), Integer(0));
  }

 private:
  void collect(std::size_t j, std::size_t split, std::vector<Acc>& x,
               std::vector<std::vector<Acc>>& out) const {
    if (j == split) {
      out.push_back(x);
      return;
    }
    Acc lo{}, hi{};
    if (!range(j, x, lo, hi)) return;
    for (Acc v = lo; v <= hi; v += 1) {
      x[j] = v;
      collect(j + 1, split, x, out);
    }
  }

  static Integer to_integer(const Wide& v) {
    // __int128 has no stream or GMP conversion; split into two 64-bit halves.
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Integer hi = static_cast<unsigned long long>(u >> 64);
    Integer lo = static_cast<unsigned long long>(u & 0xFFFFFFFFFFFFFFFFULL);
    Integer r = (hi << 64) + lo;
    return neg ? Integer(-r) : r;
  }
  static Integer to_integer(const Integer& v) { return v; }

  std::vector<std::vector<Row>> rows_;
  Acc k_;
};

template <class Coef, class Acc>
std::vector<std::vector<BoundRow<Coef, Acc>>> extract_rows(const std::vector<HPolytope>& levels) {
  std::vector<std::vector<BoundRow<Coef, Acc>>> out(levels.size());
  for (std::size_t j = 0; j < levels.size(); ++j) {
    for (const auto& row : levels[j].rows()) {
      if (row.coeffs[j] == 0) continue;
      BoundRow<Coef, Acc> br;
      br.prefix.resize(j);
      for (std::size_t t = 0; t < j; ++t) br.prefix[t] = static_cast<Coef>(row.coeffs[t]);
      br.coef = static_cast<Coef>(row.coeffs[j]);
      br.bound = static_cast<Coef>(row.bound);
      br.equality = row.is_equality();
      out[j].push_back(std::move(br));
    }
  }
  return out;
}

bool fits_fast(const std::vector<HPolytope>& levels, std::int64_t k) {
  if (k >= kFastLimit) return false;
  for (const auto& level : levels) {
    for (const auto& row : level.rows()) {
      if (boost::multiprecision::abs(row.bound) >= kFastLimit) return false;
      for (const auto& c : row.coeffs) {
        if (boost::multiprecision::abs(c) >= kFastLimit) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Interval> bounding_box(const HPolytope& polytope) {
  if (!feasible(polytope).feasible()) throw Error(Errc::Empty, "bounding box of an empty polytope");
  std::vector<Interval> box(polytope.dim());
  std::vector<Integer> e(polytope.dim(), 0);
  for (std::size_t j = 0; j < polytope.dim(); ++j) {
    e[j] = 1;
    LpOutcome hi = maximize(e, polytope);
    LpOutcome lo = minimize(e, polytope);
    e[j] = 0;
    if (hi.status == LpStatus::Unbounded || lo.status == LpStatus::Unbounded) {
      throw Error(Errc::Unbounded, "coordinate " + std::to_string(j + 1) + " is unbounded");
    }
    box[j] = {*lo.optimum, *hi.optimum};
  }
  return box;
}

ProjectionChain::ProjectionChain(const HPolytope& polytope, ProjectionOptions options)
    : dim_(polytope.dim()) {
  if (dim_ == 0) throw Error(Errc::SizeMismatch, "zero-dimensional ambient space");
  if (!feasible(polytope).feasible()) {
    empty_ = true;
    return;
  }
  levels_.resize(dim_);
  std::vector<std::size_t> keep(dim_);
  std::iota(keep.begin(), keep.end(), 0);
  levels_[dim_ - 1] = fm_project(polytope, keep, options);
  for (std::size_t j = dim_ - 1; j >= 1; --j) {
    keep.pop_back();
    levels_[j - 1] = fm_project(levels_[j], keep, options);
  }
}

Integer ProjectionChain::count(std::int64_t k, bool parallel) const {
  if (k < 0) throw Error(Errc::IndexOutOfRange, "dilation must be nonnegative");
  if (empty_) return 0;
  if (fits_fast(levels_, k)) {
    ChainKernel<long long, Wide> kernel(extract_rows<long long, Wide>(levels_), Wide(k));
    return parallel ? kernel.count_parallel() : kernel.count_serial();
  }
  ChainKernel<Integer, Integer> kernel(extract_rows<Integer, Integer>(levels_), Integer(k));
  return parallel ? kernel.count_parallel() : kernel.count_serial();
}

Integer count_by_box_scan(const HPolytope& polytope, bool parallel) {
  if (!feasible(polytope).feasible()) return 0;
  auto box = bounding_box(polytope);
  const std::size_t dim = polytope.dim();
  std::vector<Integer> lo(dim), hi(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    lo[j] = ceil_of(box[j].lo);
    hi[j] = floor_of(box[j].hi);
    if (lo[j] > hi[j]) return 0;
  }
  auto scan_rest = [&](std::vector<Integer> point) {
    Integer found = 0;
    while (true) {
      if (polytope.contains(std::span<const Integer>(point))) found += 1;
      bool advanced = false;
      for (std::size_t j = dim; j > 1;) {
        --j;
        if (point[j] < hi[j]) {
          point[j] += 1;
          advanced = true;
          break;
        }
        point[j] = lo[j];
      }
      if (!advanced) return found;
    }
  };
  const long first_span = static_cast<long>(hi[0] - lo[0]) + 1;
  std::vector<Integer> partial(static_cast<std::size_t>(first_span));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < first_span; ++i) {
    try {
      std::vector<Integer> start = lo;
      start[0] = lo[0] + i;
      partial[static_cast<std::size_t>(i)] = scan_rest(std::move(start));
    } catch (...) {
#pragma omp critical(nok_scan_error)
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return std::accumulate(partial.begin(), partial.end(), Integer(0));
}

Integer count_lattice_points(const HPolytope& polytope, CountOptions options) {
  try {
    ProjectionChain chain(polytope, options.projection);
    return chain.count(1, options.parallel);
  } catch (const Error& e) {
    if (e.code() != Errc::DimensionOverflow) throw;
  }
  return count_by_box_scan(polytope, options.parallel);
}

Integer count_lattice_points_serial(const HPolytope& polytope) {
  return count_lattice_points(polytope, {.parallel = false});
}

}  // namespace nok

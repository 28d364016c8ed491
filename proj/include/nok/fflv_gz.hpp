#pragma once

/**
 * FFLV and Gelfand-Zetlin polytopes and their placement in the ambient space
 * of the Bott-Samelson resolution.
 *
 * Coordinates are indexed by table positions (row l, column m), l + m <= n,
 * and stored row-major: (1,1), ..., (1,n-1), (2,1), ..., (n-1,1). The factor
 * i polytope (a GL_{n-i+1} weight) occupies columns i..n-l of every row, with
 * the first i-1 columns pinned to zero.
 */

#include "nok/exact.hpp"
#include "nok/polytope.hpp"

#include <string>
#include <vector>

namespace nok {

struct TablePosition {
  std::size_t row = 1;
  std::size_t col = 1;

  friend auto operator<=>(const TablePosition&, const TablePosition&) = default;
};

struct DyckPath {
  std::size_t from = 1;  // i
  std::size_t to = 2;    // j
  std::vector<TablePosition> positions;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

/// Coordinates of the size-m table: m(m-1)/2 positions in row-major order.
class AmbientFrame {
 public:
  explicit AmbientFrame(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return n_ * (n_ - 1) / 2; }
  /// Dimension of the subspace carrying factor i: (n-i+1)(n-i)/2.
  std::size_t factor_dim(std::size_t i) const;

  std::size_t index(TablePosition pos) const;
  TablePosition position(std::size_t index) const;
  /// "u^l_m" or "z^l_m" for every coordinate.
  std::vector<std::string> labels(char symbol) const;

  /// Ambient indices receiving the intrinsic coordinates of factor i.
  std::vector<std::size_t> factor_placement(std::size_t i) const;

 private:
  std::size_t n_;
};

/// All Dyck paths from (1,i) to (1,j-1) inside the size-m table, using the
/// steps (l,c)->(l+1,c) and (l,c)->(l-1,c+1), in lexicographic order.
std::vector<DyckPath> dyck_paths(std::size_t m, std::size_t i, std::size_t j);

/// Nonnegativity rows first, then one row per Dyck path with bound l_i - l_j.
HPolytope fflv(const Weight& weight);

/// Interlacing rows: l_j >= z^1_j >= l_{j+1}, z^{l-1}_j >= z^l_j >= z^{l-1}_{j+1}.
HPolytope gz(const Weight& weight);

HPolytope embed_fflv(const AmbientFrame& frame, std::size_t i, const Weight& weight);
HPolytope embed_gz(const AmbientFrame& frame, std::size_t i, const Weight& weight);

/// Lowest Gelfand-Zetlin pattern of factor i: ambient (l, c) with c >= i holds
/// l_{l + c - i + 1}; everything else is zero.
std::vector<Rational> apex(const AmbientFrame& frame, std::size_t i, const Weight& weight);

}  // namespace nok

#include "nok/fflv_gz.hpp"

#include "nok/error.hpp"

#include <algorithm>

namespace nok {

namespace {

void require_table(const Weight& weight) {
  if (weight.size() < 2) {
    throw Error(Errc::SizeMismatch, "FFLV/GZ tables need a weight of size >= 2");
  }
}

void dyck_walk(std::size_t m, std::size_t target_col, std::vector<TablePosition>& path,
               std::vector<std::vector<TablePosition>>& out) {
  const TablePosition here = path.back();
  if (here.row == 1 && here.col == target_col) {
    out.push_back(path);
    return;
  }
  // extend: (l, c) -> (l+1, c)
  if (here.row + 1 + here.col <= m) {
    path.push_back({here.row + 1, here.col});
    dyck_walk(m, target_col, path, out);
    path.pop_back();
  }
  // shift: (l, c) -> (l-1, c+1)
  if (here.row > 1 && here.col + 1 <= target_col) {
    path.push_back({here.row - 1, here.col + 1});
    dyck_walk(m, target_col, path, out);
    path.pop_back();
  }
}

std::vector<Integer> unit(std::size_t dim, std::size_t at, long value) {
  std::vector<Integer> v(dim, 0);
  v[at] = value;
  return v;
}

}  // namespace

AmbientFrame::AmbientFrame(std::size_t n) : n_(n) {
  if (n < 2) throw Error(Errc::SizeMismatch, "ambient frame needs n >= 2");
}

std::size_t AmbientFrame::factor_dim(std::size_t i) const {
  if (i < 1 || i >= n_) throw Error(Errc::IndexOutOfRange, "factor index " + std::to_string(i));
  return (n_ - i + 1) * (n_ - i) / 2;
}

std::size_t AmbientFrame::index(TablePosition pos) const {
  if (pos.row < 1 || pos.col < 1 || pos.row + pos.col > n_) {
    throw Error(Errc::IndexOutOfRange, "table position (" + std::to_string(pos.row) + "," +
                                           std::to_string(pos.col) + ") outside size " +
                                           std::to_string(n_));
  }
  std::size_t offset = 0;
  for (std::size_t l = 1; l < pos.row; ++l) offset += n_ - l;
  return offset + pos.col - 1;
}

TablePosition AmbientFrame::position(std::size_t index) const {
  for (std::size_t l = 1; l < n_; ++l) {
    if (index < n_ - l) return {l, index + 1};
    index -= n_ - l;
  }
  throw Error(Errc::IndexOutOfRange, "coordinate index past the table");
}

std::vector<std::string> AmbientFrame::labels(char symbol) const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < dim(); ++k) {
    auto p = position(k);
    out.push_back(std::string(1, symbol) + "^" + std::to_string(p.row) + "_" + std::to_string(p.col));
  }
  return out;
}

std::vector<std::size_t> AmbientFrame::factor_placement(std::size_t i) const {
  const std::size_t m = n_ - i + 1;
  (void)factor_dim(i);
  AmbientFrame intrinsic(m);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < intrinsic.dim(); ++k) {
    auto p = intrinsic.position(k);
    out.push_back(index({p.row, p.col + i - 1}));
  }
  return out;
}

std::vector<DyckPath> dyck_paths(std::size_t m, std::size_t i, std::size_t j) {
  if (i < 1 || i >= j || j > m) {
    throw Error(Errc::IndexOutOfRange, "Dyck path endpoints need 1 <= i < j <= m");
  }
  std::vector<std::vector<TablePosition>> raw;
  std::vector<TablePosition> path{{1, i}};
  dyck_walk(m, j - 1, path, raw);
  std::sort(raw.begin(), raw.end());
  std::vector<DyckPath> out;
  for (auto& p : raw) out.push_back({i, j, std::move(p)});
  return out;
}

HPolytope fflv(const Weight& weight) {
  require_table(weight);
  const std::size_t m = weight.size();
  AmbientFrame table(m);
  const std::size_t dim = table.dim();
  HPolytope out(dim);
  for (std::size_t k = 0; k < dim; ++k) out.add_le(unit(dim, k, -1), 0);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = i + 1; j <= m; ++j) {
      for (const auto& path : dyck_paths(m, i, j)) {
        std::vector<Integer> coeffs(dim, 0);
        for (auto pos : path.positions) coeffs[table.index(pos)] += 1;
        out.add_le(std::move(coeffs), Integer(weight[i - 1] - weight[j - 1]));
      }
    }
  }
  return out;
}

HPolytope gz(const Weight& weight) {
  require_table(weight);
  const std::size_t m = weight.size();
  AmbientFrame table(m);
  const std::size_t dim = table.dim();
  HPolytope out(dim);
  for (std::size_t l = 1; l < m; ++l) {
    for (std::size_t j = 1; j + l <= m; ++j) {
      std::size_t z = table.index({l, j});
      if (l == 1) {
        out.add_le(unit(dim, z, 1), Integer(weight[j - 1]));
        out.add_le(unit(dim, z, -1), Integer(-weight[j]));
      } else {
        std::vector<Integer> upper = unit(dim, z, 1);
        upper[table.index({l - 1, j})] = -1;
        out.add_le(std::move(upper), 0);
        std::vector<Integer> lower = unit(dim, z, -1);
        lower[table.index({l - 1, j + 1})] = 1;
        out.add_le(std::move(lower), 0);
      }
    }
  }
  return out;
}

namespace {

HPolytope embed_factor(const AmbientFrame& frame, std::size_t i, const Weight& weight,
                       const HPolytope& intrinsic) {
  if (weight.size() != frame.n() - i + 1) {
    throw Error(Errc::SizeMismatch, "factor " + std::to_string(i) + " needs a weight of size " +
                                        std::to_string(frame.n() - i + 1));
  }
  auto placement = frame.factor_placement(i);
  return coordinate_embed(intrinsic, frame.dim(), placement);
}

}  // namespace

HPolytope embed_fflv(const AmbientFrame& frame, std::size_t i, const Weight& weight) {
  (void)frame.factor_dim(i);
  return embed_factor(frame, i, weight, fflv(weight));
}

HPolytope embed_gz(const AmbientFrame& frame, std::size_t i, const Weight& weight) {
  (void)frame.factor_dim(i);
  return embed_factor(frame, i, weight, gz(weight));
}

std::vector<Rational> apex(const AmbientFrame& frame, std::size_t i, const Weight& weight) {
  (void)frame.factor_dim(i);
  if (weight.size() != frame.n() - i + 1) {
    throw Error(Errc::SizeMismatch, "apex weight size mismatch");
  }
  std::vector<Rational> point(frame.dim(), Rational(0));
  for (std::size_t k = 0; k < frame.dim(); ++k) {
    auto p = frame.position(k);
    if (p.col < i) continue;
    point[k] = weight[p.row + p.col - i];  // l_{row + col - i + 1}, 1-based
  }
  return point;
}

}  // namespace nok

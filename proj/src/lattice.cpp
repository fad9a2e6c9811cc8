#include "monosep/lattice.hpp"

#include <utility>

#include "monosep/error.hpp"

namespace monosep {

namespace {

void axpy(IntVector& dst, const BigInt& s, const IntVector& src) {
  if (s == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += s * src[i];
}

}  // namespace

HermiteEchelon::HermiteEchelon(std::span<const IntVector> generators, std::size_t width)
    : width_(width), num_generators_(generators.size()) {
  const std::size_t m = generators.size();
  rows_.assign(generators.begin(), generators.end());
  for (const IntVector& r : rows_) {
    if (r.size() != width_) throw Error(ErrorKind::InvalidInput, "HermiteEchelon: ragged generator");
  }
  transform_.assign(m, IntVector(m, BigInt(0)));
  for (std::size_t i = 0; i < m; ++i) transform_[i][i] = 1;

  std::size_t r = 0;
  for (std::size_t col = 0; col < width_ && r < m; ++col) {
    // Euclid on column `col` among rows r..m-1 until one nonzero entry remains.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (rows_[i][col] == 0) continue;
        if (best == m || abs(rows_[i][col]) < abs(rows_[best][col])) best = i;
      }
      if (best == m) break;
      std::swap(rows_[r], rows_[best]);
      std::swap(transform_[r], transform_[best]);
      bool others = false;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (rows_[i][col] == 0) continue;
        BigInt q = floor_div(rows_[i][col], rows_[r][col]);
        axpy(rows_[i], -q, rows_[r]);
        axpy(transform_[i], -q, transform_[r]);
        if (rows_[i][col] != 0) others = true;
      }
      if (!others) break;
    }
    if (rows_[r][col] == 0) continue;
    if (rows_[r][col] < 0) {
      for (BigInt& v : rows_[r]) v = -v;
      for (BigInt& v : transform_[r]) v = -v;
    }
    // Reduce entries above the pivot into [0, pivot) to keep numbers small.
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q = floor_div(rows_[i][col], rows_[r][col]);
      axpy(rows_[i], -q, rows_[r]);
      axpy(transform_[i], -q, transform_[r]);
    }
    pivots_.push_back(col);
    ++r;
  }
}

std::optional<IntVector> HermiteEchelon::solve(const IntVector& target) const {
  if (target.size() != width_) throw Error(ErrorKind::InvalidInput, "HermiteEchelon: target width mismatch");
  IntVector residual = target;
  IntVector coeffs(num_generators_, BigInt(0));
  std::size_t r = 0;
  for (std::size_t col = 0; col < width_; ++col) {
    if (r < pivots_.size() && pivots_[r] == col) {
      const BigInt& pivot = rows_[r][col];
      if (!mpz_divisible_p(residual[col].get_mpz_t(), pivot.get_mpz_t())) return std::nullopt;
      BigInt t = residual[col] / pivot;
      axpy(residual, -t, rows_[r]);
      axpy(coeffs, t, transform_[r]);
      ++r;
    } else if (residual[col] != 0) {
      return std::nullopt;
    }
  }
  return coeffs;
}

}  // namespace monosep

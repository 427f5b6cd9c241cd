#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "peirce/field.hpp"

namespace peirce {

using Vec = std::vector<Scalar>;

namespace linalg {

inline Vec zero_vec(const FieldSpec& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline void axpy(Vec& y, const Scalar& a, const Vec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

inline Vec scaled(const Vec& v, const Scalar& a) {
  Vec r = v;
  for (auto& x : r) x *= a;
  return r;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec negated(const Vec& v) {
  Vec r = v;
  for (auto& x : r) x = -x;
  return r;
}

/// Incremental reduced row echelon form. Rows are kept normalized (leading
/// coefficient 1), fully reduced against each other, and ordered by pivot
/// column, so the row set is the canonical RREF basis of the span.
class Rref {
 public:
  Rref(FieldSpec field, std::size_t width) : field_(std::move(field)), width_(width) {}

  const FieldSpec& field() const { return field_; }
  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v against the current rows; returns the residual.
  Vec reduce(Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& c = v[pivots_[r]];
      if (!c.is_zero()) axpy(v, -c, rows_[r]);
    }
    return v;
  }

  /// Inserts a vector into the span. Returns true if the rank grew.
  bool insert(Vec v) {
    v = reduce(std::move(v));
    std::size_t piv = 0;
    while (piv < width_ && v[piv].is_zero()) ++piv;
    if (piv == width_) return false;
    Scalar lead = v[piv];
    for (auto& x : v) x /= lead;
    // back-substitute into existing rows, then place by pivot order
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& c = rows_[r][piv];
      if (!c.is_zero()) axpy(rows_[r], -c, v);
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
  }

  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

  /// Coordinates of v in the RREF basis, if v lies in the span.
  std::optional<Vec> coordinates(const Vec& v) const {
    Vec coords(rows_.size(), Scalar::zero(field_));
    Vec residual = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& c = residual[pivots_[r]];
      if (!c.is_zero()) {
        coords[r] = c;
        axpy(residual, -c, rows_[r]);
      }
    }
    if (!is_zero_vec(residual)) return std::nullopt;
    return coords;
  }

  bool operator==(const Rref& o) const {
    return field_ == o.field_ && width_ == o.width_ && rows_ == o.rows_;
  }

 private:
  FieldSpec field_;
  std::size_t width_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Solves x_1 w_1 + ... + x_m w_m = t for given spanning vectors w_i.
/// Works on the augmented rows [w_i | e_i], so solutions come out expressed
/// in the original indices; the particular solution is the canonical
/// echelon-first one (free coefficients zero), and `nullspace()` spans all
/// coefficient vectors combining to zero.
class SpanSolver {
 public:
  SpanSolver(const FieldSpec& field, std::size_t width, const std::vector<Vec>& vectors)
      : field_(field), width_(width), m_(vectors.size()), rref_(field, width + vectors.size()) {
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      Vec row = vectors[i];
      row.resize(width_ + m_, Scalar::zero(field));
      row[width_ + i] = Scalar::one(field);
      rref_.insert(std::move(row));
    }
  }

  /// A coefficient vector x (length = #vectors) with sum x_i w_i = t, or
  /// nullopt if t is outside the span.
  std::optional<Vec> solve(const Vec& t) const {
    Vec residual = t;
    Vec coeffs(m_, Scalar::zero(field_));
    for (std::size_t r = 0; r < rref_.rank(); ++r) {
      std::size_t p = rref_.pivots()[r];
      if (p >= width_) break;  // remaining rows are pure combination records
      const Scalar c = residual[p];  // by value: the loop below overwrites residual[p]
      if (!c.is_zero()) {
        for (std::size_t j = 0; j < width_; ++j) residual[j] -= c * rref_.rows()[r][j];
        for (std::size_t j = 0; j < m_; ++j) coeffs[j] += c * rref_.rows()[r][width_ + j];
      }
    }
    if (!is_zero_vec(residual)) return std::nullopt;
    return coeffs;
  }

  /// Basis of coefficient vectors with sum x_i w_i = 0.
  std::vector<Vec> nullspace() const {
    std::vector<Vec> out;
    for (std::size_t r = 0; r < rref_.rank(); ++r) {
      if (rref_.pivots()[r] >= width_)
        out.emplace_back(rref_.rows()[r].begin() + width_, rref_.rows()[r].end());
    }
    return out;
  }

 private:
  FieldSpec field_;
  std::size_t width_;
  std::size_t m_;
  Rref rref_;
};

}  // namespace linalg
}  // namespace peirce

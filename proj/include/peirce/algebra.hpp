#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "peirce/linalg.hpp"

namespace peirce {

class Algebra;
using AlgebraHandle = std::shared_ptr<const Algebra>;

/// Sparse vector in basis coordinates, sorted by index.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

namespace detail {

inline void sparse_axpy(SparseVec& acc, const Scalar& c, const SparseVec& row) {
  if (c.is_zero()) return;
  SparseVec merged;
  merged.reserve(acc.size() + row.size());
  std::size_t i = 0, j = 0;
  while (i < acc.size() || j < row.size()) {
    if (j == row.size() || (i < acc.size() && acc[i].first < row[j].first)) {
      merged.push_back(acc[i++]);
    } else if (i == acc.size() || row[j].first < acc[i].first) {
      merged.emplace_back(row[j].first, c * row[j].second);
      ++j;
    } else {
      Scalar s = acc[i].second + c * row[j].second;
      if (!s.is_zero()) merged.emplace_back(acc[i].first, std::move(s));
      ++i, ++j;
    }
  }
  acc = std::move(merged);
}

}  // namespace detail

/// Finite-dimensional associative algebra presented by structure constants
/// over an exact field. Immutable after construction; associativity and the
/// unit law are verified eagerly on every basis triple/pair.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  struct TableEntry {
    std::uint32_t i, j, k;
    Scalar c;
  };

  static AlgebraHandle create(FieldSpec field, std::vector<std::string> basis_names,
                              const std::vector<TableEntry>& entries,
                              std::optional<Vec> unit = std::nullopt) {
    auto a = std::shared_ptr<Algebra>(new Algebra(std::move(field), std::move(basis_names)));
    a->fill_table(entries);
    if (unit) {
      if (unit->size() != a->dim_) fail(errc::bad_input, "unit vector has wrong length");
      for (const auto& c : *unit)
        if (c.field() != a->field_) fail(errc::field_mismatch, "unit coefficients");
      a->unit_ = std::move(unit);
    }
    a->verify_associativity();
    a->verify_unit();
    return a;
  }

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  bool is_unital() const { return unit_.has_value(); }
  const Vec& unit_coords() const {
    if (!unit_) fail(errc::not_unital, "algebra has no unit");
    return *unit_;
  }

  /// b_i * b_j as a sparse vector.
  const SparseVec& table(std::uint32_t i, std::uint32_t j) const { return table_[i * dim_ + j]; }

  /// All nonzero (i, j, k, c) entries in lexicographic order.
  std::vector<TableEntry> table_entries() const {
    std::vector<TableEntry> out;
    for (std::uint32_t i = 0; i < dim_; ++i)
      for (std::uint32_t j = 0; j < dim_; ++j)
        for (const auto& [k, c] : table(i, j)) out.push_back({i, j, k, c});
    return out;
  }

  bool structure_equals(const Algebra& o) const {
    return field_ == o.field_ && names_ == o.names_ && table_ == o.table_ && unit_ == o.unit_;
  }

 private:
  Algebra(FieldSpec field, std::vector<std::string> names)
      : field_(std::move(field)), names_(std::move(names)), dim_(names_.size()) {
    if (dim_ == 0) fail(errc::bad_input, "algebra dimension must be positive");
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (names_[i] == names_[j]) fail(errc::bad_input, "duplicate basis name " + names_[i]);
    table_.assign(dim_ * dim_, {});
  }

  void fill_table(const std::vector<TableEntry>& entries) {
    std::vector<Vec> dense(dim_ * dim_);
    for (const auto& e : entries) {
      if (e.i >= dim_ || e.j >= dim_ || e.k >= dim_)
        fail(errc::bad_input, "table index out of range");
      if (e.c.field() != field_) fail(errc::field_mismatch, "table coefficient");
      auto& cell = dense[e.i * dim_ + e.j];
      if (cell.empty()) cell = linalg::zero_vec(field_, dim_);
      cell[e.k] += e.c;
    }
    for (std::size_t idx = 0; idx < dense.size(); ++idx) {
      if (dense[idx].empty()) continue;
      for (std::uint32_t k = 0; k < dim_; ++k)
        if (!dense[idx][k].is_zero()) table_[idx].emplace_back(k, dense[idx][k]);
    }
  }

  SparseVec sparse_right_mul(const SparseVec& x, std::uint32_t k) const {
    SparseVec acc;
    for (const auto& [m, c] : x) detail::sparse_axpy(acc, c, table(m, k));
    return acc;
  }

  SparseVec sparse_left_mul(std::uint32_t i, const SparseVec& x) const {
    SparseVec acc;
    for (const auto& [m, c] : x) detail::sparse_axpy(acc, c, table(i, m));
    return acc;
  }

  void verify_associativity() const {
    for (std::uint32_t i = 0; i < dim_; ++i)
      for (std::uint32_t j = 0; j < dim_; ++j) {
        const SparseVec& ij = table(i, j);
        for (std::uint32_t k = 0; k < dim_; ++k) {
          if (sparse_right_mul(ij, k) != sparse_left_mul(i, table(j, k)))
            fail(errc::bad_input, "structure constants are not associative at basis triple (" +
                                      names_[i] + ", " + names_[j] + ", " + names_[k] + ")");
        }
      }
  }

  void verify_unit() const {
    if (!unit_) return;
    for (std::uint32_t i = 0; i < dim_; ++i) {
      SparseVec left, right, expect{{i, Scalar::one(field_)}};
      for (std::uint32_t j = 0; j < dim_; ++j) {
        if (!(*unit_)[j].is_zero()) {
          detail::sparse_axpy(left, (*unit_)[j], table(j, i));
          detail::sparse_axpy(right, (*unit_)[j], table(i, j));
        }
      }
      if (left != expect || right != expect)
        fail(errc::bad_input, "declared unit does not act as identity on " + names_[i]);
    }
  }

  FieldSpec field_;
  std::vector<std::string> names_;
  std::size_t dim_;
  std::vector<SparseVec> table_;
  std::optional<Vec> unit_;
};

/// Element of a structure-constant algebra: parent handle plus a dense
/// coefficient vector.
class Element {
 public:
  Element(AlgebraHandle parent, Vec coords) : parent_(std::move(parent)), coords_(std::move(coords)) {
    if (coords_.size() != parent_->dim()) fail(errc::bad_input, "coefficient vector length");
  }

  static Element zero(const AlgebraHandle& a) {
    return Element(a, linalg::zero_vec(a->field(), a->dim()));
  }

  static Element basis(const AlgebraHandle& a, std::uint32_t i) {
    Element e = zero(a);
    e.coords_[i] = Scalar::one(a->field());
    return e;
  }

  static Element unit(const AlgebraHandle& a) { return Element(a, a->unit_coords()); }

  const AlgebraHandle& parent() const { return parent_; }
  const Vec& coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const { return linalg::is_zero_vec(coords_); }

  friend Element operator+(const Element& a, const Element& b) {
    check_parents(a, b);
    return Element(a.parent_, linalg::add(a.coords_, b.coords_));
  }

  friend Element operator-(const Element& a, const Element& b) {
    check_parents(a, b);
    return Element(a.parent_, linalg::sub(a.coords_, b.coords_));
  }

  Element operator-() const { return Element(parent_, linalg::negated(coords_)); }

  friend Element operator*(const Scalar& c, const Element& x) {
    if (c.field() != x.parent_->field()) fail(errc::field_mismatch, "scalar * element");
    return Element(x.parent_, linalg::scaled(x.coords_, c));
  }

  /// Ring product through the structure-constant tensor.
  friend Element operator*(const Element& x, const Element& y) {
    check_parents(x, y);
    const Algebra& a = *x.parent_;
    Vec acc = linalg::zero_vec(a.field(), a.dim());
    for (std::uint32_t i = 0; i < a.dim(); ++i) {
      if (x.coords_[i].is_zero()) continue;
      for (std::uint32_t j = 0; j < a.dim(); ++j) {
        if (y.coords_[j].is_zero()) continue;
        Scalar c = x.coords_[i] * y.coords_[j];
        for (const auto& [k, s] : a.table(i, j)) acc[k] += c * s;
      }
    }
    return Element(x.parent_, std::move(acc));
  }

  bool operator==(const Element& o) const {
    return parent_ == o.parent_ && coords_ == o.coords_;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      if (coords_[i].is_one())
        out += parent_->basis_names()[i];
      else
        out += coords_[i].to_string() + "*" + parent_->basis_names()[i];
    }
    return out.empty() ? "0" : out;
  }

 private:
  static void check_parents(const Element& a, const Element& b) {
    if (a.parent_ != b.parent_) fail(errc::algebra_mismatch, "elements of different algebras");
  }

  AlgebraHandle parent_;
  Vec coords_;
};

inline Element multiply(const Element& x, const Element& y) { return x * y; }

/// [x, y] = xy - yx.
inline Element lie_bracket(const Element& x, const Element& y) { return x * y - y * x; }

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

/// The ground field as a one-dimensional unital algebra.
inline AlgebraHandle field_algebra(const FieldSpec& f) {
  std::vector<Algebra::TableEntry> t{{0, 0, 0, Scalar::one(f)}};
  return Algebra::create(f, {"1"}, t, Vec{Scalar::one(f)});
}

/// M_n(R) for a unital coefficient algebra R. Basis E_ij (x) r_k with
/// E_ij r * E_kl s = delta_jk E_il (rs).
inline AlgebraHandle matrix_algebra(const AlgebraHandle& R, std::uint32_t n) {
  if (!R->is_unital()) fail(errc::not_unital, "matrix algebra needs a unital coefficient algebra");
  if (n == 0) fail(errc::bad_input, "matrix size must be positive");
  const FieldSpec& f = R->field();
  std::uint32_t dr = static_cast<std::uint32_t>(R->dim());
  auto index = [&](std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    return (i * n + j) * dr + k;
  };
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t k = 0; k < dr; ++k) {
        std::string nm = "E" + std::to_string(i + 1) + std::to_string(j + 1);
        if (dr > 1) nm += "*" + R->basis_names()[k];
        names.push_back(std::move(nm));
      }
  std::vector<Algebra::TableEntry> entries;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t l = 0; l < n; ++l)
        for (std::uint32_t k = 0; k < dr; ++k)
          for (std::uint32_t m = 0; m < dr; ++m)
            for (const auto& [t, c] : R->table(k, m))
              entries.push_back({index(i, j, k), index(j, l, m), index(i, l, t), c});
  Vec unit = linalg::zero_vec(f, names.size());
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t k = 0; k < dr; ++k) unit[index(i, i, k)] = R->unit_coords()[k];
  return Algebra::create(f, std::move(names), entries, std::move(unit));
}

/// M_n over the ground field itself.
inline AlgebraHandle matrix_algebra(const FieldSpec& f, std::uint32_t n) {
  return matrix_algebra(field_algebra(f), n);
}

/// Matrix unit E_ij (1-based indices) in an algebra built by matrix_algebra
/// over the ground field.
inline Element matrix_unit(const AlgebraHandle& a, std::uint32_t n, std::uint32_t i,
                           std::uint32_t j) {
  if (a->dim() != std::size_t(n) * n || i < 1 || j < 1 || i > n || j > n)
    fail(errc::bad_input, "matrix_unit index out of range");
  return Element::basis(a, (i - 1) * n + (j - 1));
}

/// A^op: same basis, product reversed.
inline AlgebraHandle opposite(const AlgebraHandle& a) {
  std::vector<Algebra::TableEntry> entries;
  for (const auto& e : a->table_entries()) entries.push_back({e.j, e.i, e.k, e.c});
  std::optional<Vec> unit;
  if (a->is_unital()) unit = a->unit_coords();
  return Algebra::create(a->field(), a->basis_names(), entries, std::move(unit));
}

/// A (+) B with componentwise products and zero cross products. Left basis
/// names get the prefix "l_", right names "r_".
inline AlgebraHandle direct_sum(const AlgebraHandle& a, const AlgebraHandle& b) {
  if (a->field() != b->field()) fail(errc::field_mismatch, "direct sum over different fields");
  std::uint32_t da = static_cast<std::uint32_t>(a->dim());
  std::vector<std::string> names;
  for (const auto& n : a->basis_names()) names.push_back("l_" + n);
  for (const auto& n : b->basis_names()) names.push_back("r_" + n);
  std::vector<Algebra::TableEntry> entries;
  for (const auto& e : a->table_entries()) entries.push_back(e);
  for (const auto& e : b->table_entries()) entries.push_back({e.i + da, e.j + da, e.k + da, e.c});
  std::optional<Vec> unit;
  if (a->is_unital() && b->is_unital()) {
    Vec u = a->unit_coords();
    const Vec& ub = b->unit_coords();
    u.insert(u.end(), ub.begin(), ub.end());
    unit = std::move(u);
  }
  return Algebra::create(a->field(), std::move(names), entries, std::move(unit));
}

/// Left (resp. right) component embedding x -> x (+) 0 into a direct sum
/// built by direct_sum(a, b).
inline Element sum_embed(const AlgebraHandle& sum, const Element& x, bool left,
                         std::size_t left_dim) {
  Vec v = linalg::zero_vec(sum->field(), sum->dim());
  std::size_t off = left ? 0 : left_dim;
  for (std::size_t i = 0; i < x.coords().size(); ++i) v[off + i] = x.coords()[i];
  return Element(sum, std::move(v));
}

/// A + F*1 with a freshly adjoined identity (adjoined even if A already has
/// one). The new unit sits at the last coordinate, named "hull1".
inline AlgebraHandle unital_hull_algebra(const AlgebraHandle& a) {
  std::uint32_t d = static_cast<std::uint32_t>(a->dim());
  std::vector<std::string> names = a->basis_names();
  names.push_back("hull1");
  std::vector<Algebra::TableEntry> entries;
  for (const auto& e : a->table_entries()) entries.push_back(e);
  Scalar one = Scalar::one(a->field());
  for (std::uint32_t i = 0; i <= d; ++i) {
    entries.push_back({d, i, i, one});
    if (i < d) entries.push_back({i, d, i, one});
  }
  Vec unit = linalg::zero_vec(a->field(), d + 1);
  unit[d] = one;
  return Algebra::create(a->field(), std::move(names), entries, std::move(unit));
}

/// Coordinate extension of an element of A into its hull.
inline Element hull_embed(const AlgebraHandle& hull, const Element& x) {
  if (hull->dim() != x.parent()->dim() + 1) fail(errc::bad_input, "not a hull of the parent");
  Vec v = x.coords();
  v.push_back(Scalar::zero(hull->field()));
  return Element(hull, std::move(v));
}

/// Inverse of hull_embed on elements whose hull-unit coordinate vanishes.
inline Element hull_project(const AlgebraHandle& a, const Element& x) {
  if (x.parent()->dim() != a->dim() + 1) fail(errc::bad_input, "not an element of the hull");
  if (!x.coords().back().is_zero())
    fail(errc::not_in_domain, "element has a component along the adjoined unit");
  Vec v(x.coords().begin(), x.coords().end() - 1);
  return Element(a, std::move(v));
}

}  // namespace peirce

#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "peirce/algebra.hpp"

namespace peirce {

/// Subspace of an ambient algebra, stored as the canonical reduced
/// row-echelon basis. Two equal subspaces have bit-identical matrices, so
/// subspace equality is matrix equality.
class Subspace {
 public:
  explicit Subspace(AlgebraHandle ambient)
      : ambient_(std::move(ambient)), rref_(ambient_->field(), ambient_->dim()) {}

  static Subspace zero(const AlgebraHandle& a) { return Subspace(a); }

  static Subspace full(const AlgebraHandle& a) {
    Subspace s(a);
    for (std::uint32_t i = 0; i < a->dim(); ++i) s.insert(Element::basis(a, i));
    return s;
  }

  const AlgebraHandle& ambient() const { return ambient_; }
  std::size_t rank() const { return rref_.rank(); }
  bool is_zero() const { return rank() == 0; }
  bool is_full() const { return rank() == ambient_->dim(); }
  const std::vector<Vec>& rows() const { return rref_.rows(); }

  bool insert(const Element& x) {
    if (x.parent() != ambient_) fail(errc::algebra_mismatch, "span of foreign element");
    return rref_.insert(x.coords());
  }

  bool contains(const Element& x) const {
    if (x.parent() != ambient_) fail(errc::algebra_mismatch, "membership of foreign element");
    return rref_.contains(x.coords());
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) fail(errc::algebra_mismatch, "subspaces of different algebras");
    for (const auto& r : other.rows())
      if (!rref_.contains(r)) return false;
    return true;
  }

  /// Coordinates of x in the canonical basis, if x lies in the subspace.
  std::optional<Vec> coordinates(const Element& x) const {
    if (x.parent() != ambient_) fail(errc::algebra_mismatch, "coordinates of foreign element");
    return rref_.coordinates(x.coords());
  }

  Element basis_element(std::size_t r) const { return Element(ambient_, rows()[r]); }

  std::vector<Element> basis_elements() const {
    std::vector<Element> out;
    out.reserve(rank());
    for (const auto& r : rows()) out.emplace_back(ambient_, r);
    return out;
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && rref_ == o.rref_;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) fail(errc::algebra_mismatch, "sum of foreign subspaces");
    Subspace s = a;
    for (const auto& r : b.rows()) s.rref_.insert(r);
    return s;
  }

 private:
  AlgebraHandle ambient_;
  linalg::Rref rref_;
};

/// Canonical span of a list of elements with a common parent.
inline Subspace span(const AlgebraHandle& a, const std::vector<Element>& vectors) {
  Subspace s(a);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

inline Subspace span(const std::vector<Element>& vectors) {
  if (vectors.empty()) fail(errc::bad_input, "span of empty list needs an explicit ambient");
  return span(vectors.front().parent(), vectors);
}

inline Subspace span(std::initializer_list<Element> vectors) {
  return span(std::vector<Element>(vectors));
}

/// Span of all products u*v over the basis rows of U and V.
inline Subspace subspace_product(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) fail(errc::algebra_mismatch, "product of foreign subspaces");
  Subspace out(u.ambient());
  for (const auto& x : u.basis_elements())
    for (const auto& y : v.basis_elements()) out.insert(x * y);
  return out;
}

/// Span of all brackets [u, v] over the basis rows.
inline Subspace bracket_span(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) fail(errc::algebra_mismatch, "bracket of foreign subspaces");
  Subspace out(u.ambient());
  for (const auto& x : u.basis_elements())
    for (const auto& y : v.basis_elements()) out.insert(lie_bracket(x, y));
  return out;
}

/// [A, A]: the derived Lie ring of the whole algebra.
inline Subspace derived_lie_ring(const AlgebraHandle& a) {
  Subspace f = Subspace::full(a);
  return bracket_span(f, f);
}

/// Closure of U under products: the least subspace containing U with
/// S*S `subseteq` S, computed as the fixed point of S -> S + S*S.
inline Subspace subring_generated(const Subspace& u) {
  Subspace s = u;
  for (;;) {
    Subspace next = s + subspace_product(s, s);
    if (next.rank() == s.rank()) return s;
    s = std::move(next);
  }
}

/// Annihilator of a subring given as a product-closed subspace S:
/// {x in S | xS = Sx = 0}.
inline Subspace annihilator(const Subspace& s) {
  const AlgebraHandle& a = s.ambient();
  const FieldSpec& f = a->field();
  std::size_t d = a->dim();
  std::size_t m = s.rank();
  auto basis = s.basis_elements();
  // unknown x = sum t_r basis_r; stack the coordinates of x*s_q and s_q*x
  std::vector<Vec> columns(m, linalg::zero_vec(f, 2 * m * d));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t q = 0; q < m; ++q) {
      Vec right = (basis[r] * basis[q]).coords();
      Vec left = (basis[q] * basis[r]).coords();
      for (std::size_t k = 0; k < d; ++k) {
        columns[r][q * d + k] = right[k];
        columns[r][m * d + q * d + k] = left[k];
      }
    }
  }
  linalg::SpanSolver solver(f, 2 * m * d, columns);
  Subspace out(a);
  for (const auto& combo : solver.nullspace()) {
    Vec v = linalg::zero_vec(f, d);
    for (std::size_t r = 0; r < m; ++r)
      if (!combo[r].is_zero()) linalg::axpy(v, combo[r], basis[r].coords());
    out.insert(Element(a, v));
  }
  return out;
}

/// Ann(A) = {x | xA = Ax = 0}.
inline Subspace annihilator(const AlgebraHandle& a) { return annihilator(Subspace::full(a)); }

}  // namespace peirce

#pragma once

#include <random>
#include <vector>

#include "peirce/linear_map.hpp"
#include "peirce/subspace.hpp"

namespace peirce::testing {

inline Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng) {
  if (f.kind == FieldKind::prime) {
    std::uniform_int_distribution<std::uint64_t> d(0, f.p - 1);
    return Scalar::of_residue(f, d(rng));
  }
  std::uniform_int_distribution<long long> num(-9, 9);
  std::uniform_int_distribution<long long> den(1, 9);
  return Scalar::of_rational(Rational(num(rng), den(rng)));
}

inline Scalar random_nonzero_scalar(const FieldSpec& f, std::mt19937_64& rng) {
  for (;;) {
    Scalar s = random_scalar(f, rng);
    if (!s.is_zero()) return s;
  }
}

inline Element random_element(const AlgebraHandle& a, std::mt19937_64& rng) {
  Vec v;
  v.reserve(a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) v.push_back(random_scalar(a->field(), rng));
  return Element(a, std::move(v));
}

inline Element random_in_subspace(const Subspace& s, std::mt19937_64& rng) {
  Element acc = Element::zero(s.ambient());
  for (const auto& b : s.basis_elements()) acc = acc + random_scalar(s.ambient()->field(), rng) * b;
  return acc;
}

/// Random invertible matrix as an element of M_n(F): a product of elementary
/// row operations applied to the identity.
inline Element random_invertible_matrix(const AlgebraHandle& mn, std::uint32_t n,
                                        std::mt19937_64& rng) {
  Element g = Element::unit(mn);
  std::uniform_int_distribution<std::uint32_t> idx(1, n);
  for (int step = 0; step < 6; ++step) {
    std::uint32_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    g = g * (Element::unit(mn) + random_scalar(mn->field(), rng) * matrix_unit(mn, n, i, j));
  }
  // a random invertible diagonal twist
  Element d = Element::zero(mn);
  for (std::uint32_t i = 1; i <= n; ++i)
    d = d + random_nonzero_scalar(mn->field(), rng) * matrix_unit(mn, n, i, i);
  return g * d;
}

/// Inverse of an invertible element of a unital algebra, by linear solve.
inline Element inverse_element(const Element& g) {
  const AlgebraHandle& a = g.parent();
  std::vector<Vec> cols;
  for (std::uint32_t i = 0; i < a->dim(); ++i) cols.push_back((g * Element::basis(a, i)).coords());
  linalg::SpanSolver solver(a->field(), a->dim(), cols);
  auto sol = solver.solve(a->unit_coords());
  if (!sol) fail(errc::bad_input, "element is not invertible");
  return Element(a, *sol);
}

/// Conjugation x -> g^{-1} x g restricted to a subspace (which it must
/// preserve as a set for the map to be well-typed on that domain).
inline LinearMap conjugation_map(const Subspace& domain, const Element& g) {
  Element gi = inverse_element(g);
  return LinearMap::from_function(domain, domain.ambient(),
                                  [&](const Element& x) { return gi * x * g; });
}

/// Quotient of an algebra by a two-sided ideal given as a subspace, together
/// with the projection map. Products are computed on a chosen complement
/// basis and reduced mod the ideal.
struct QuotientAlgebra {
  AlgebraHandle algebra;
  LinearMap projection;
};

inline QuotientAlgebra quotient_algebra(const AlgebraHandle& a, const Subspace& ideal) {
  const FieldSpec& f = a->field();
  linalg::Rref extended(f, a->dim());
  for (const auto& r : ideal.rows()) extended.insert(r);
  std::vector<std::uint32_t> complement;
  for (std::uint32_t i = 0; i < a->dim(); ++i)
    if (extended.insert(Element::basis(a, i).coords())) complement.push_back(i);

  std::vector<Vec> cols;
  for (const auto& r : ideal.rows()) cols.push_back(r);
  for (auto i : complement) cols.push_back(Element::basis(a, i).coords());
  linalg::SpanSolver solver(f, a->dim(), cols);
  auto quotient_coords = [&](const Element& x) {
    auto sol = solver.solve(x.coords());
    if (!sol) fail(errc::bad_input, "quotient solve failed");
    return Vec(sol->begin() + ideal.rank(), sol->end());
  };

  std::vector<std::string> names;
  for (auto i : complement) names.push_back("q_" + a->basis_names()[i]);
  std::vector<Algebra::TableEntry> entries;
  for (std::uint32_t r = 0; r < complement.size(); ++r)
    for (std::uint32_t s = 0; s < complement.size(); ++s) {
      Vec q = quotient_coords(Element::basis(a, complement[r]) * Element::basis(a, complement[s]));
      for (std::uint32_t k = 0; k < q.size(); ++k)
        if (!q[k].is_zero()) entries.push_back({r, s, k, q[k]});
    }
  std::optional<Vec> unit;
  if (a->is_unital()) unit = quotient_coords(Element::unit(a));
  AlgebraHandle q = Algebra::create(f, std::move(names), entries, std::move(unit));
  LinearMap proj = LinearMap::from_function(Subspace::full(a), q, [&](const Element& x) {
    return Element(q, quotient_coords(x));
  });
  return {q, std::move(proj)};
}

/// Transpose of an element of matrix_algebra(F, n).
inline Element transpose_matrix(const Element& x, std::uint32_t n) {
  const AlgebraHandle& a = x.parent();
  Element out = Element::zero(a);
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = 1; j <= n; ++j) {
      Scalar c = x.coords()[(i - 1) * n + (j - 1)];
      if (!c.is_zero()) out = out + c * matrix_unit(a, n, j, i);
    }
  return out;
}

}  // namespace peirce::testing

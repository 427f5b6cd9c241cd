#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "peirce/subspace.hpp"

namespace peirce {

/// Exact additive map from a subspace of one algebra into another algebra.
/// The matrix rows are the images of the domain's canonical basis rows.
class LinearMap {
 public:
  LinearMap(Subspace domain, AlgebraHandle codomain, std::vector<Vec> matrix)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (matrix_.size() != domain_.rank()) fail(errc::bad_input, "matrix row count != domain rank");
    for (const auto& r : matrix_)
      if (r.size() != codomain_->dim()) fail(errc::bad_input, "matrix row width != codomain dim");
    if (domain_.ambient()->field() != codomain_->field())
      fail(errc::field_mismatch, "map between algebras over different fields");
  }

  /// Builds the map sending the r-th canonical basis row of `domain` to
  /// `images[r]`.
  static LinearMap from_basis_images(const Subspace& domain, const AlgebraHandle& codomain,
                                     const std::vector<Element>& images) {
    if (images.size() != domain.rank()) fail(errc::bad_input, "one image per basis row required");
    std::vector<Vec> m;
    m.reserve(images.size());
    for (const auto& e : images) {
      if (e.parent() != codomain) fail(errc::algebra_mismatch, "image outside codomain");
      m.push_back(e.coords());
    }
    return LinearMap(domain, codomain, std::move(m));
  }

  /// Builds the map from images of an arbitrary spanning set; rejects
  /// inconsistent data (images that disagree on linear dependencies).
  static LinearMap from_spanning_images(const AlgebraHandle& ambient, const AlgebraHandle& codomain,
                                        const std::vector<Element>& vectors,
                                        const std::vector<Element>& images) {
    if (vectors.size() != images.size()) fail(errc::bad_input, "vectors/images length mismatch");
    Subspace domain = span(ambient, vectors);
    linalg::SpanSolver solver(ambient->field(), ambient->dim(), [&] {
      std::vector<Vec> vs;
      for (const auto& v : vectors) vs.push_back(v.coords());
      return vs;
    }());
    std::vector<Element> basis_images;
    for (const auto& row : domain.rows()) {
      auto coeffs = solver.solve(row);
      if (!coeffs) fail(errc::bad_input, "spanning solve failed");
      Element img = Element::zero(codomain);
      for (std::size_t i = 0; i < images.size(); ++i) img = img + (*coeffs)[i] * images[i];
      basis_images.push_back(std::move(img));
    }
    LinearMap f = from_basis_images(domain, codomain, basis_images);
    for (std::size_t i = 0; i < vectors.size(); ++i)
      if (!(f.apply(vectors[i]) == images[i]))
        fail(errc::inconsistent_system, "images are inconsistent on a linear dependency");
    return f;
  }

  static LinearMap from_function(const Subspace& domain, const AlgebraHandle& codomain,
                                 const std::function<Element(const Element&)>& fn) {
    std::vector<Element> images;
    for (const auto& b : domain.basis_elements()) images.push_back(fn(b));
    return from_basis_images(domain, codomain, images);
  }

  static LinearMap identity_on(const Subspace& domain) {
    return from_function(domain, domain.ambient(), [](const Element& x) { return x; });
  }

  static LinearMap zero_map(const Subspace& domain, const AlgebraHandle& codomain) {
    return from_function(domain, codomain, [&](const Element&) { return Element::zero(codomain); });
  }

  const Subspace& domain() const { return domain_; }
  const AlgebraHandle& codomain() const { return codomain_; }
  const std::vector<Vec>& matrix() const { return matrix_; }

  Element apply(const Element& x) const {
    auto coords = domain_.coordinates(x);
    if (!coords) fail(errc::not_in_domain, "element outside the map's domain");
    Vec out = linalg::zero_vec(codomain_->field(), codomain_->dim());
    for (std::size_t r = 0; r < matrix_.size(); ++r)
      if (!(*coords)[r].is_zero()) linalg::axpy(out, (*coords)[r], matrix_[r]);
    return Element(codomain_, std::move(out));
  }

  Element operator()(const Element& x) const { return apply(x); }

  /// Image of a subspace of the domain.
  Subspace image(const Subspace& s) const {
    Subspace out(codomain_);
    for (const auto& b : s.basis_elements()) out.insert(apply(b));
    return out;
  }

  Subspace image() const { return image(domain_); }

  Subspace kernel() const {
    linalg::SpanSolver solver(codomain_->field(), codomain_->dim(), matrix_);
    Subspace out(domain_.ambient());
    for (const auto& combo : solver.nullspace()) {
      Vec v = linalg::zero_vec(domain_.ambient()->field(), domain_.ambient()->dim());
      for (std::size_t r = 0; r < combo.size(); ++r)
        if (!combo[r].is_zero()) linalg::axpy(v, combo[r], domain_.rows()[r]);
      out.insert(Element(domain_.ambient(), v));
    }
    return out;
  }

  bool is_injective() const { return kernel().is_zero(); }

  /// g after f; f's images must lie in g's domain.
  friend LinearMap compose(const LinearMap& g, const LinearMap& f) {
    if (g.domain_.ambient() != f.codomain_)
      fail(errc::algebra_mismatch, "composition over mismatched algebras");
    return from_function(f.domain_, g.codomain_,
                         [&](const Element& x) { return g.apply(f.apply(x)); });
  }

  friend LinearMap operator+(const LinearMap& a, const LinearMap& b) {
    if (!(a.domain_ == b.domain_) || a.codomain_ != b.codomain_)
      fail(errc::algebra_mismatch, "sum of maps with different domains");
    return from_function(a.domain_, a.codomain_,
                         [&](const Element& x) { return a.apply(x) + b.apply(x); });
  }

  /// Equality as maps (same domain subspace, same action).
  bool operator==(const LinearMap& o) const {
    return domain_ == o.domain_ && codomain_ == o.codomain_ && matrix_ == o.matrix_;
  }

 private:
  Subspace domain_;
  AlgebraHandle codomain_;
  std::vector<Vec> matrix_;
};

/// Evaluates f at x; x must lie in f's domain subspace.
inline Element apply_map(const LinearMap& f, const Element& x) { return f.apply(x); }

struct UnitalHull {
  AlgebraHandle hull;
  LinearMap embedding;  // algebra monomorphism A -> A + F*1
};

/// A + F*1 with the embedding of A onto the first dim(A) coordinates. A new
/// identity is adjoined even when A is already unital.
inline UnitalHull unital_hull(const AlgebraHandle& a) {
  AlgebraHandle hull = unital_hull_algebra(a);
  LinearMap emb = LinearMap::from_function(Subspace::full(a), hull, [&](const Element& x) {
    return hull_embed(hull, x);
  });
  return UnitalHull{hull, std::move(emb)};
}

}  // namespace peirce

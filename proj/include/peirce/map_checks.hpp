#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "peirce/frames.hpp"

namespace peirce {

enum class MapLaw {
  lie_hom,
  lie_der,
  jordan_der,
  assoc_hom,
  assoc_antihom,
  assoc_der,
  specialization_pairwise,
  specialization_words,
};

inline const char* map_law_name(MapLaw k) {
  switch (k) {
    case MapLaw::lie_hom: return "lie_hom";
    case MapLaw::lie_der: return "lie_der";
    case MapLaw::jordan_der: return "jordan_der";
    case MapLaw::assoc_hom: return "assoc_hom";
    case MapLaw::assoc_antihom: return "assoc_antihom";
    case MapLaw::assoc_der: return "assoc_der";
    case MapLaw::specialization_pairwise: return "specialization_pairwise";
    case MapLaw::specialization_words: return "specialization_words";
  }
  return "unknown";
}

/// Outcome of a map-law check. A failing verdict carries a witness pair that
/// re-evaluates to a genuine violation of the law in one evaluation.
struct MapVerdict {
  MapLaw kind;
  bool pass = false;
  std::optional<std::pair<Element, Element>> witness;
  std::string detail;

  explicit operator bool() const { return pass; }
};

namespace detail {

inline void require_bracket_closed(const Subspace& domain) {
  auto basis = domain.basis_elements();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!domain.contains(lie_bracket(basis[i], basis[j])))
        fail(errc::domain_not_bracket_closed, "domain is not closed under the bracket");
}

}  // namespace detail

/// f[x, y] = [f x, f y] on all basis pairs of the (bracket-closed) domain.
inline MapVerdict check_lie_hom(const LinearMap& f) {
  detail::require_bracket_closed(f.domain());
  auto basis = f.domain().basis_elements();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (!(f(lie_bracket(basis[i], basis[j])) == lie_bracket(f(basis[i]), f(basis[j]))))
        return {MapLaw::lie_hom, false, std::make_pair(basis[i], basis[j]),
                "f[x,y] != [fx,fy]"};
    }
  return {MapLaw::lie_hom, true, std::nullopt, ""};
}

/// d[x, y] = [d x, y] + [x, d y] on all basis pairs of the domain.
inline MapVerdict check_lie_derivation(const LinearMap& d) {
  detail::require_bracket_closed(d.domain());
  auto basis = d.domain().basis_elements();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Element lhs = d(lie_bracket(basis[i], basis[j]));
      Element rhs = lie_bracket(d(basis[i]), basis[j]) + lie_bracket(basis[i], d(basis[j]));
      if (!(lhs == rhs))
        return {MapLaw::lie_der, false, std::make_pair(basis[i], basis[j]),
                "d[x,y] != [dx,y] + [x,dy]"};
    }
  return {MapLaw::lie_der, true, std::nullopt, ""};
}

/// d(ab + ba) = d(a)b + b d(a) + a d(b) + d(b)a on all basis pairs; the
/// domain must be the whole algebra.
inline MapVerdict check_jordan_derivation(const LinearMap& d) {
  if (!d.domain().is_full())
    fail(errc::bad_input, "Jordan derivation check needs a map on the whole algebra");
  auto basis = d.domain().basis_elements();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Element &a = basis[i], &b = basis[j];
      Element lhs = d(a * b + b * a);
      Element rhs = d(a) * b + b * d(a) + a * d(b) + d(b) * a;
      if (!(lhs == rhs))
        return {MapLaw::jordan_der, false, std::make_pair(a, b),
                "d(ab+ba) != d(a)b + bd(a) + ad(b) + d(b)a"};
    }
  return {MapLaw::jordan_der, true, std::nullopt, ""};
}

/// d(ab) = d(a)b + a d(b) on all basis pairs of a product-closed domain.
inline MapVerdict check_assoc_derivation(const LinearMap& d) {
  auto basis = d.domain().basis_elements();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Element &a = basis[i], &b = basis[j];
      if (!d.domain().contains(a * b)) fail(errc::not_in_domain, "domain not product-closed");
      if (!(d(a * b) == d(a) * b + a * d(b)))
        return {MapLaw::assoc_der, false, std::make_pair(a, b), "d(ab) != d(a)b + ad(b)"};
    }
  return {MapLaw::assoc_der, true, std::nullopt, ""};
}

/// f(xy) = f(x)f(y), or f(xy) = f(y)f(x) when anti is set.
inline MapVerdict check_assoc_hom(const LinearMap& f, bool anti) {
  MapLaw law = anti ? MapLaw::assoc_antihom : MapLaw::assoc_hom;
  auto basis = f.domain().basis_elements();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Element &x = basis[i], &y = basis[j];
      if (!f.domain().contains(x * y)) fail(errc::not_in_domain, "domain not product-closed");
      Element rhs = anti ? f(y) * f(x) : f(x) * f(y);
      if (!(f(x * y) == rhs))
        return {law, false, std::make_pair(x, y),
                anti ? "f(xy) != f(y)f(x)" : "f(xy) != f(x)f(y)"};
    }
  return {law, true, std::nullopt, ""};
}

namespace detail {

/// First pair (u, v) of basis elements of two subspaces with u * v != 0.
inline std::optional<std::pair<Element, Element>> nonzero_product_pair(const Subspace& u,
                                                                       const Subspace& v) {
  for (const auto& x : u.basis_elements())
    for (const auto& y : v.basis_elements())
      if (!(x * y).is_zero()) return std::make_pair(x, y);
  return std::nullopt;
}

}  // namespace detail

/// The length-2 specialization condition: f(L_a) f(L_b) = 0 whenever
/// a + b lies outside Delta and is nonzero.
inline MapVerdict check_specialization_pairwise(const LinearMap& f, const GradedLieRing& grading,
                                                const AlgebraHandle& target) {
  if (f.codomain() != target) fail(errc::bad_input, "map codomain is not the stated target");
  if (!f.domain().contains(grading.total()))
    fail(errc::bad_input, "map must be defined on the grading total");
  auto roots = grading.roots().roots();
  for (const auto& alpha : roots) {
    Subspace fa = f.image(grading.component(alpha));
    for (const auto& beta : roots) {
      std::vector<int> sum = grading.roots().weight(alpha);
      RootSystem::add_weight(sum, grading.roots().weight(beta));
      if (grading.roots().in_delta_or_zero(sum)) continue;
      Subspace fb = f.image(grading.component(beta));
      if (auto pair = detail::nonzero_product_pair(fa, fb)) {
        return {MapLaw::specialization_pairwise, false, pair,
                "f(L_a) f(L_b) != 0 at roots (" + std::to_string(alpha.i) + "," +
                    std::to_string(alpha.j) + ") + (" + std::to_string(beta.i) + "," +
                    std::to_string(beta.j) + ")"};
      }
    }
  }
  return {MapLaw::specialization_pairwise, true, std::nullopt, ""};
}

/// Exhaustive word check: products of component images along any root word
/// of length <= max_len vanish whenever the root sum leaves Delta u {0}.
/// Prefix products that already vanish prune their whole subtree.
inline MapVerdict check_specialization_words(const LinearMap& f, const GradedLieRing& grading,
                                             const AlgebraHandle& target, unsigned max_len = 4) {
  if (f.codomain() != target) fail(errc::bad_input, "map codomain is not the stated target");
  if (!f.domain().contains(grading.total()))
    fail(errc::bad_input, "map must be defined on the grading total");
  if (max_len < 2) fail(errc::bad_input, "max_len must be at least 2");

  auto roots = grading.roots().roots();
  std::vector<Subspace> images;
  images.reserve(roots.size());
  for (const auto& r : roots) images.push_back(f.image(grading.component(r)));

  struct Walker {
    const std::vector<RootSystem::Root>& roots;
    const std::vector<Subspace>& images;
    const RootSystem& system;
    unsigned max_len;
    std::optional<MapVerdict> violation;

    void walk(const Subspace& prefix, const std::vector<int>& sum, unsigned len) {
      if (violation) return;
      for (std::size_t t = 0; t < roots.size(); ++t) {
        Subspace prod = subspace_product(prefix, images[t]);
        if (prod.is_zero()) continue;
        std::vector<int> next = sum;
        RootSystem::add_weight(next, system.weight(roots[t]));
        if (len + 1 >= 2 && !system.in_delta_or_zero(next)) {
          // nonzero product along a forbidden word
          auto pair = detail::nonzero_product_pair(prefix, images[t]);
          violation = MapVerdict{MapLaw::specialization_words, false, pair,
                                 "nonzero product along a root word of length " +
                                     std::to_string(len + 1) + " with sum outside Delta"};
          return;
        }
        if (len + 1 < max_len) walk(prod, next, len + 1);
        if (violation) return;
      }
    }
  };

  Walker w{roots, images, grading.roots(), max_len, std::nullopt};
  for (std::size_t t = 0; t < roots.size(); ++t) {
    if (images[t].is_zero()) continue;
    w.walk(images[t], grading.roots().weight(roots[t]), 1);
    if (w.violation) return *w.violation;
  }
  return {MapLaw::specialization_words, true, std::nullopt, ""};
}

}  // namespace peirce

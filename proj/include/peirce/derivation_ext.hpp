#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "peirce/map_checks.hpp"

namespace peirce {

/// target = sum_i a_{i,1} ... a_{i,n_i} with every factor in [A,A], all n_i
/// even, and the reversed sum a_{i,n_i} ... a_{i,1} equal to zero. Instances
/// are verified before use (verify() recomputes both defining sums).
struct EvenDecomposition {
  Element target;                     // in the frame's work algebra
  std::vector<std::vector<Element>> terms;

  void verify(const Subspace& derived) const {
    const AlgebraHandle& w = target.parent();
    Element forward = Element::zero(w);
    Element reversed = Element::zero(w);
    for (const auto& term : terms) {
      if (term.empty() || term.size() % 2 != 0)
        fail(errc::no_decomposition, "even decomposition has an odd-length term");
      Element f = term.front();
      Element r = term.back();
      for (std::size_t t = 1; t < term.size(); ++t) {
        f = f * term[t];
        r = r * term[term.size() - 1 - t];
      }
      forward = forward + f;
      reversed = reversed + r;
      for (const auto& factor : term)
        if (!derived.contains(factor))
          fail(errc::no_decomposition, "even decomposition factor outside [A,A]");
    }
    if (!(forward == target))
      fail(errc::no_decomposition, "even decomposition does not reproduce the target");
    if (!reversed.is_zero())
      fail(errc::no_decomposition, "reversed products of an even decomposition do not vanish");
  }
};

namespace detail {

/// Solves target = sum t_{rs} u_r v_s over the product basis of U x V and
/// returns the nonzero pairs (t u_r, v_s). seed = 0 takes the canonical
/// echelon-first solution; other seeds mix in random nullspace vectors.
inline std::optional<std::vector<std::pair<Element, Element>>> product_decomposition(
    const Subspace& u, const Subspace& v, const Element& target, std::uint64_t seed) {
  const AlgebraHandle& w = target.parent();
  std::vector<Vec> products;
  for (const auto& x : u.basis_elements())
    for (const auto& y : v.basis_elements()) products.push_back((x * y).coords());
  linalg::SpanSolver solver(w->field(), w->dim(), products);
  auto coeffs = solver.solve(target.coords());
  if (!coeffs) return std::nullopt;
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-3, 3);
    for (const auto& ns : solver.nullspace()) {
      Scalar c = Scalar::of_int(w->field(), small(rng));
      for (std::size_t t = 0; t < coeffs->size(); ++t) (*coeffs)[t] += c * ns[t];
    }
  }
  std::vector<std::pair<Element, Element>> out;
  std::size_t idx = 0;
  for (const auto& x : u.basis_elements())
    for (const auto& y : v.basis_elements()) {
      const Scalar& c = (*coeffs)[idx++];
      if (!c.is_zero()) out.emplace_back(c * x, y);
    }
  return out;
}

inline std::size_t pick_index(std::size_t n, std::size_t avoid1, std::size_t avoid2,
                              std::uint64_t seed, std::uint64_t salt) {
  std::vector<std::size_t> choices;
  for (std::size_t k = 0; k < n; ++k)
    if (k != avoid1 && k != avoid2) choices.push_back(k);
  if (seed == 0) return choices.front();
  std::mt19937_64 rng(seed ^ (salt * 0x9e3779b97f4a7c15ull));
  return choices[rng() % choices.size()];
}

}  // namespace detail

/// Even-product decomposition of an element over a full frame with n >= 3.
/// Off-diagonal Peirce components split as A_ij = A_ik A_kj (reversed
/// products vanish termwise); diagonal components route through A_ij A_ji
/// and a second split of both factors, giving length-four products whose
/// reversed products vanish termwise as well. seed selects among valid
/// intermediate indices and solver solutions; seed 0 is the canonical
/// deterministic choice.
inline EvenDecomposition even_decompose(const IdempotentFrame& frame, const Element& a,
                                        std::uint64_t seed = 0) {
  if (frame.size() < 3) fail(errc::bad_input, "even_decompose needs a frame with n >= 3");
  for (std::size_t i = 0; i < frame.size(); ++i)
    if (!frame.is_full(i)) fail(errc::not_full, "even_decompose needs a full frame");
  Element ahat = frame.embed(a);
  const AlgebraHandle& w = frame.work();
  std::size_t n = frame.size();

  EvenDecomposition dec{ahat, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element comp = frame.idempotent(i) * ahat * frame.idempotent(j);
      if (comp.is_zero()) continue;
      if (i != j) {
        std::size_t k = detail::pick_index(n, i, j, seed, i * n + j);
        auto pairs = detail::product_decomposition(frame.component(i, k), frame.component(k, j),
                                                   comp, seed);
        if (!pairs)
          fail(errc::not_generated, "component is not a sum of A_ik A_kj products");
        for (auto& [x, y] : *pairs) dec.terms.push_back({x, y});
      } else {
        std::size_t j2 = detail::pick_index(n, i, i, seed, i * n + i);
        auto pairs = detail::product_decomposition(frame.component(i, j2), frame.component(j2, i),
                                                   comp, seed);
        if (!pairs)
          fail(errc::not_generated, "diagonal component is not a sum of A_ij A_ji products");
        std::size_t k = detail::pick_index(n, i, j2, seed, 2 * n * n + i);
        for (auto& [u, v] : *pairs) {
          auto left = detail::product_decomposition(frame.component(i, k), frame.component(k, j2),
                                                    u, seed);
          auto right = detail::product_decomposition(frame.component(j2, k), frame.component(k, i),
                                                     v, seed);
          if (!left || !right)
            fail(errc::not_generated, "diagonal splitting through a third index failed");
          for (auto& [c, d] : *left)
            for (auto& [f, g] : *right) dec.terms.push_back({c, d, f, g});
        }
      }
    }
  dec.verify(derived_lie_ring(w));
  return dec;
}

namespace detail {

/// Leibniz sum of a decomposition: sum over terms and positions of
/// a_1 ... d(a_p) ... a_m.
inline Element leibniz_value(const EvenDecomposition& dec,
                             const std::function<Element(const Element&)>& d) {
  const AlgebraHandle& w = dec.target.parent();
  Element acc = Element::zero(w);
  for (const auto& term : dec.terms) {
    for (std::size_t p = 0; p < term.size(); ++p) {
      Element prod = d(term[p]);
      for (std::size_t q = p; q-- > 0;) prod = term[q] * prod;
      for (std::size_t q = p + 1; q < term.size(); ++q) prod = prod * term[q];
      acc = acc + prod;
    }
  }
  return acc;
}

}  // namespace detail

/// Extends a Lie derivation of [A,A] to an associative derivation of A via
/// even decompositions and the Leibniz sum. Every basis value is re-derived
/// from a second, independently chosen decomposition; the result is checked
/// to be an associative derivation restricting to d before it is returned.
inline LinearMap extend_derivation(const IdempotentFrame& frame, const LinearMap& d) {
  const AlgebraHandle& a = frame.base();
  if (!(d.domain() == derived_lie_ring(a)))
    fail(errc::precondition_failed, "d must be defined exactly on [A,A]");
  if (d.codomain() != a) fail(errc::precondition_failed, "d must map into A");
  if (frame.size() < 3)
    fail(errc::precondition_failed, "Theorem hypotheses need n >= 3 idempotents");
  for (std::size_t i = 0; i < frame.size(); ++i)
    if (!frame.is_full(i)) fail(errc::precondition_failed, "frame idempotents must be full");
  if (frame.uses_hull() && !annihilator(a).is_zero())
    fail(errc::precondition_failed, "the hull-frame case needs Ann(A) = 0");
  MapVerdict lie = check_lie_derivation(d);
  if (!lie.pass)
    fail(errc::precondition_failed, "d is not a Lie derivation of [A,A]");

  auto dhat = [&](const Element& x) { return frame.embed(d(frame.project(x))); };

  std::vector<Element> images;
  for (std::uint32_t t = 0; t < a->dim(); ++t) {
    Element b = Element::basis(a, t);
    EvenDecomposition dec = even_decompose(frame, b, 0);
    Element value = detail::leibniz_value(dec, dhat);
    EvenDecomposition alt = even_decompose(frame, b, 1);
    if (!(detail::leibniz_value(alt, dhat) == value))
      fail(errc::well_definedness_failure,
           "two decompositions of " + b.to_string() + " disagree under the Leibniz sum");
    images.push_back(frame.project(value));
  }
  LinearMap dtilde = LinearMap::from_basis_images(Subspace::full(a), a, images);

  for (std::uint32_t i = 0; i < a->dim(); ++i)
    for (std::uint32_t j = 0; j < a->dim(); ++j) {
      Element x = Element::basis(a, i), y = Element::basis(a, j);
      if (!(dtilde(x * y) == dtilde(x) * y + x * dtilde(y)))
        fail(errc::well_definedness_failure, "extension violates the Leibniz rule");
    }
  for (const auto& r : d.domain().basis_elements())
    if (!(dtilde(r) == d(r)))
      fail(errc::well_definedness_failure, "extension does not restrict to d on [A,A]");
  return dtilde;
}

/// Certificate that a Lie derivation of [A,A] admits no associative
/// extension: elements X, Y with X, Y, XY all in [A,A] and
/// d(XY) != d(X)Y + X d(Y). kind records how the certificate was found.
struct DerivationObstruction {
  Element x;
  Element y;
  Element gap;  // d(XY) - d(X)Y - X d(Y)
  std::string kind;
};

struct TwoIdempotentResult {
  std::optional<LinearMap> extension;
  std::optional<DerivationObstruction> obstruction;

  bool extended() const { return extension.has_value(); }
};

/// The n = 2 pathway. A Leibniz violation inside [A,A] is a proof that no
/// extension exists and is returned as the obstruction. Otherwise a
/// candidate extension is propagated from the off-diagonal components
/// (where d itself already defines it) and verified outright; if the
/// candidate fails verification without a triple certificate, the failing
/// pair is reported with kind "candidate_failure".
inline TwoIdempotentResult attempt_extension_two_idempotents(const IdempotentFrame& frame,
                                                             const LinearMap& d) {
  const AlgebraHandle& a = frame.base();
  if (frame.size() != 2)
    fail(errc::precondition_failed, "this pathway expects exactly two idempotents");
  for (std::size_t i = 0; i < 2; ++i)
    if (!frame.is_full(i)) fail(errc::precondition_failed, "frame idempotents must be full");
  if (!(d.domain() == derived_lie_ring(a)))
    fail(errc::precondition_failed, "d must be defined exactly on [A,A]");
  if (d.codomain() != a) fail(errc::precondition_failed, "d must map into A");
  MapVerdict lie = check_lie_derivation(d);
  if (!lie.pass) fail(errc::precondition_failed, "d is not a Lie derivation of [A,A]");

  const AlgebraHandle& w = frame.work();
  Subspace derived_w = derived_lie_ring(w);
  auto dhat = [&](const Element& x) { return frame.embed(d(frame.project(x))); };

  // search for a closed Leibniz violation: X, Y, XY in [A,A]
  auto basis = derived_w.basis_elements();
  for (const auto& x : basis)
    for (const auto& y : basis) {
      Element p = x * y;
      if (!derived_w.contains(p)) continue;
      Element gap = dhat(p) - dhat(x) * y - x * dhat(y);
      if (!gap.is_zero())
        return {std::nullopt,
                DerivationObstruction{frame.project(x), frame.project(y), frame.project(gap),
                                      "leibniz_triple"}};
    }

  // candidate: off-diagonal Peirce components lie in [A,A], so d defines the
  // extension there; diagonal components propagate through A_ij A_ji
  std::vector<Element> images;
  for (std::uint32_t t = 0; t < a->dim(); ++t) {
    Element bhat = frame.embed(Element::basis(a, t));
    Element value = Element::zero(w);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        Element comp = frame.idempotent(i) * bhat * frame.idempotent(j);
        if (comp.is_zero()) continue;
        if (i != j) {
          value = value + dhat(comp);
        } else {
          auto pairs = detail::product_decomposition(frame.component(i, 1 - i),
                                                     frame.component(1 - i, i), comp, 0);
          if (!pairs) fail(errc::not_generated, "diagonal component escapes A_ij A_ji");
          for (const auto& [u, v] : *pairs) value = value + dhat(u) * v + u * dhat(v);
        }
      }
    images.push_back(frame.project(value));
  }
  LinearMap candidate = LinearMap::from_basis_images(Subspace::full(a), a, images);

  for (std::uint32_t i = 0; i < a->dim(); ++i)
    for (std::uint32_t j = 0; j < a->dim(); ++j) {
      Element x = Element::basis(a, i), y = Element::basis(a, j);
      Element gap = candidate(x * y) - candidate(x) * y - x * candidate(y);
      if (!gap.is_zero()) return {std::nullopt, DerivationObstruction{x, y, gap, "candidate_failure"}};
    }
  for (const auto& r : d.domain().basis_elements()) {
    Element gap = candidate(r) - d(r);
    if (!gap.is_zero())
      return {std::nullopt, DerivationObstruction{r, r, gap, "candidate_failure"}};
  }
  return {std::move(candidate), std::nullopt};
}

}  // namespace peirce

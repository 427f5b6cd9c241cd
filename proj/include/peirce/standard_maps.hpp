#pragma once

#include <string>
#include <utility>
#include <vector>

#include "peirce/map_checks.hpp"

namespace peirce {

/// A (+) A^op together with the Lie embedding theta(a) = a (+) (-a) of the
/// derived ring and the exchange involution (x (+) y)* = y (+) x.
struct EnvelopePair {
  AlgebraHandle base;      // A
  AlgebraHandle env;       // A (+) A^op
  LinearMap theta;         // [A,A] -> env
  LinearMap involution;    // env -> env

  Element embed_left(const Element& a) const { return sum_embed(env, a, true, base->dim()); }
  Element embed_right(const Element& a) const { return sum_embed(env, a, false, base->dim()); }
};

/// Builds the envelope and verifies its structural identities: theta is an
/// injective Lie homomorphism, the exchange is an anti-automorphism of order
/// two, and involution(theta(x)) = -theta(x).
inline EnvelopePair build_envelope(const AlgebraHandle& a) {
  AlgebraHandle env = direct_sum(a, opposite(a));
  std::size_t d = a->dim();
  Subspace derived = derived_lie_ring(a);
  LinearMap theta = LinearMap::from_function(derived, env, [&](const Element& x) {
    Vec v = linalg::zero_vec(env->field(), env->dim());
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = x.coords()[i];
      v[d + i] = -x.coords()[i];
    }
    return Element(env, v);
  });
  LinearMap invol = LinearMap::from_function(Subspace::full(env), env, [&](const Element& x) {
    Vec v = linalg::zero_vec(env->field(), env->dim());
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = x.coords()[d + i];
      v[d + i] = x.coords()[i];
    }
    return Element(env, v);
  });

  if (!theta.is_injective()) fail(errc::bad_input, "theta is not injective");
  MapVerdict hom = check_lie_hom(theta);
  if (!hom.pass) fail(errc::bad_input, "theta is not a Lie homomorphism");
  for (std::uint32_t i = 0; i < env->dim(); ++i) {
    Element bi = Element::basis(env, i);
    if (!(invol(invol(bi)) == bi)) fail(errc::bad_input, "involution is not of order two");
    for (std::uint32_t j = 0; j < env->dim(); ++j) {
      Element bj = Element::basis(env, j);
      if (!(invol(bi * bj) == invol(bj) * invol(bi)))
        fail(errc::bad_input, "involution is not an anti-automorphism");
    }
  }
  if (env->is_unital() && !(invol(Element::unit(env)) == Element::unit(env)))
    fail(errc::bad_input, "involution moves the unit");
  for (const auto& r : derived.basis_elements())
    if (!(invol(theta(r)) == -theta(r)))
      fail(errc::bad_input, "involution does not negate theta images");
  return EnvelopePair{a, env, std::move(theta), std::move(invol)};
}

/// Is A (+) A^op generated as a ring by the theta images of the off-diagonal
/// Peirce components?
inline bool check_envelope_generation(const EnvelopePair& ep, const IdempotentFrame& frame) {
  if (frame.base() != ep.base) fail(errc::algebra_mismatch, "frame is not on the envelope's base");
  Subspace gens(ep.env);
  for (std::size_t i = 0; i < frame.size(); ++i)
    for (std::size_t j = 0; j < frame.size(); ++j) {
      if (i == j) continue;
      for (const auto& r : frame.component(i, j).basis_elements())
        gens.insert(ep.theta(frame.project(r)));
    }
  return subring_generated(gens) == Subspace::full(ep.env);
}

/// The elements E_1 = sum theta(a_mu) theta(b_mu) and
/// E_3 = sum theta(c_nu) theta(d_nu) built from decompositions
/// e_1 = sum a_mu b_mu (a in A_12, b in A_21) and
/// e_3 = sum c_nu d_nu (c in A_32, d in A_23), with the exchange identities
/// E_1 x = x E_3 = (1 - E_3*) x for x in theta(A_13) verified on a full
/// component basis, along with E_1 x y = x y for y in theta(A_32) and
/// E_1 theta(A_23) = 0.
struct EElements {
  Element e1;
  Element e3;
};

inline EElements build_E_elements(const EnvelopePair& ep, const IdempotentFrame& frame) {
  if (frame.size() < 3) fail(errc::bad_input, "E elements need a frame with n >= 3");
  if (!ep.env->is_unital()) fail(errc::not_unital, "E element identities need a unital envelope");
  auto dec1 = peirce_unit_decomposition(frame, 0, 1);
  auto dec3 = peirce_unit_decomposition(frame, 2, 1);
  Element E1 = Element::zero(ep.env);
  for (const auto& [x, y] : dec1) E1 = E1 + ep.theta(frame.project(x)) * ep.theta(frame.project(y));
  Element E3 = Element::zero(ep.env);
  for (const auto& [x, y] : dec3) E3 = E3 + ep.theta(frame.project(x)) * ep.theta(frame.project(y));

  Element one = Element::unit(ep.env);
  Element e3star = ep.involution(E3);
  for (const auto& r : frame.component(0, 2).basis_elements()) {
    Element x = ep.theta(frame.project(r));
    if (!(E1 * x == x * E3) || !(x * E3 == (one - e3star) * x))
      fail(errc::no_decomposition, "E element exchange identity failed on theta(A_13)");
    for (const auto& s : frame.component(2, 1).basis_elements()) {
      Element y = ep.theta(frame.project(s));
      if (!(E1 * (x * y) == x * y))
        fail(errc::no_decomposition, "E_1 does not fix theta(A_13) theta(A_32) products");
    }
  }
  for (const auto& s : frame.component(1, 2).basis_elements())
    if (!(E1 * ep.theta(frame.project(s))).is_zero())
      fail(errc::no_decomposition, "E_1 theta(A_23) != 0");
  return EElements{E1, E3};
}

/// chi : A (+) A^op -> B with psi_1(a) = chi(a (+) 0) a homomorphism,
/// psi_2(a) = chi(0 (+) a) an anti-homomorphism, mutually annihilating
/// images, and phi = psi_1 - psi_2 on [A, A].
struct StandardDecomposition {
  EnvelopePair envelope;
  LinearMap chi;
  LinearMap psi1;
  LinearMap psi2;
};

namespace detail {

/// Shared solving pipeline behind extend_to_standard and the non-unital
/// variant. Enumerates products of theta images of off-diagonal Peirce basis
/// elements breadth-first until they span the envelope, equates each product
/// with the corresponding product of phi images, and solves the resulting
/// linear system for chi. Multiplicativity and the standard-decomposition
/// identities are then verified outright.
inline StandardDecomposition standardize(const LinearMap& phi, const IdempotentFrame& frame) {
  const AlgebraHandle& a = frame.base();
  const AlgebraHandle& b = phi.codomain();
  GradedLieRing grading = delta_grading(frame);

  // phi must be defined on [A,A]; lift it to the work algebra's coordinates
  // so the grading checks can consume it.
  LinearMap phi_graded = frame.uses_hull()
                             ? LinearMap::from_function(
                                   grading.total(), b,
                                   [&](const Element& x) { return phi(frame.project(x)); })
                             : phi;
  MapVerdict hom = check_lie_hom(phi_graded);
  if (!hom.pass)
    fail(errc::not_specialization,
         "phi is not a Lie homomorphism; witness (" + hom.witness->first.to_string() + ", " +
             hom.witness->second.to_string() + ")");
  MapVerdict pairwise = check_specialization_pairwise(phi_graded, grading, b);
  if (!pairwise.pass) fail(errc::not_specialization, "pairwise condition failed: " + pairwise.detail);

  EnvelopePair ep = build_envelope(a);
  std::size_t denv = ep.env->dim(), db = b->dim();

  // deterministic generator list: roots in lexicographic order, component
  // rows in echelon order
  std::vector<std::pair<Element, Element>> gens;  // (theta image, phi image)
  for (const auto& r : grading.roots().roots())
    for (const auto& row : grading.component(r).basis_elements()) {
      Element in_a = frame.project(row);
      gens.emplace_back(ep.theta(in_a), phi(in_a));
    }

  linalg::Rref constraints(a->field(), denv + db);
  linalg::Rref span_env(a->field(), denv);
  std::vector<std::pair<Element, Element>> level;
  auto push_word = [&](const Element& v, const Element& c) {
    Vec row = v.coords();
    row.insert(row.end(), c.coords().begin(), c.coords().end());
    constraints.insert(std::move(row));
    span_env.insert(v.coords());
    if (!v.is_zero()) level.emplace_back(v, c);
  };
  for (const auto& [v, c] : gens) push_word(v, c);
  while (span_env.rank() < denv) {
    std::vector<std::pair<Element, Element>> prev;
    prev.swap(level);
    std::size_t before = span_env.rank();
    for (const auto& [v, c] : prev)
      for (const auto& [gv, gc] : gens) push_word(v * gv, c * gc);
    if (span_env.rank() == before)
      fail(errc::not_generated, "theta images of the off-diagonal components do not generate");
  }

  // read chi off the echelon form; the envelope part has full column rank
  // (that is Theorem 2's uniqueness: the homogeneous system has only the
  // zero solution), so the leading block reduces to the identity and any
  // row pivoting in the target zone is an inconsistency
  std::vector<Vec> chi_matrix(denv, linalg::zero_vec(a->field(), db));
  for (std::size_t r = 0; r < constraints.rank(); ++r) {
    std::size_t p = constraints.pivots()[r];
    const Vec& row = constraints.rows()[r];
    if (p >= denv)
      fail(errc::inconsistent_system,
           "products of phi images are incompatible with the envelope relations");
    chi_matrix[p] = Vec(row.begin() + denv, row.end());
  }

  LinearMap chi(Subspace::full(ep.env), b, std::move(chi_matrix));
  for (std::uint32_t i = 0; i < denv; ++i)
    for (std::uint32_t j = 0; j < denv; ++j) {
      Element x = Element::basis(ep.env, i), y = Element::basis(ep.env, j);
      if (!(chi(x * y) == chi(x) * chi(y)))
        fail(errc::not_multiplicative, "solved chi is not multiplicative");
    }
  for (const auto& r : ep.theta.domain().basis_elements())
    if (!(chi(ep.theta(r)) == phi(r)))
      fail(errc::not_multiplicative, "chi does not factor phi through theta");

  LinearMap psi1 = LinearMap::from_function(Subspace::full(a), b, [&](const Element& x) {
    return chi(ep.embed_left(x));
  });
  LinearMap psi2 = LinearMap::from_function(Subspace::full(a), b, [&](const Element& x) {
    return chi(ep.embed_right(x));
  });
  if (!check_assoc_hom(psi1, false).pass)
    fail(errc::not_multiplicative, "psi1 is not a homomorphism");
  if (!check_assoc_hom(psi2, true).pass)
    fail(errc::not_multiplicative, "psi2 is not an anti-homomorphism");
  for (std::uint32_t i = 0; i < a->dim(); ++i)
    for (std::uint32_t j = 0; j < a->dim(); ++j) {
      Element x = Element::basis(a, i), y = Element::basis(a, j);
      if (!(psi1(x) * psi2(y)).is_zero() || !(psi2(y) * psi1(x)).is_zero())
        fail(errc::not_multiplicative, "psi images are not mutually annihilating");
    }
  for (const auto& r : phi.domain().basis_elements())
    if (!(phi(r) == psi1(r) - psi2(r)))
      fail(errc::not_multiplicative, "phi != psi1 - psi2 on the derived ring");

  return StandardDecomposition{std::move(ep), std::move(chi), std::move(psi1), std::move(psi2)};
}

}  // namespace detail

/// Extends a Lie isomorphism phi : [A,A] -> [B,B] to a standard map, for a
/// full in-algebra frame with n >= 3 idempotents summing to 1.
inline StandardDecomposition extend_to_standard(const LinearMap& phi,
                                                const IdempotentFrame& frame) {
  if (frame.uses_hull())
    fail(errc::bad_input,
         "extend_to_standard needs idempotents summing to 1 inside A; "
         "use check_standardizable_nonunital for hull frames");
  if (!(phi.domain() == derived_lie_ring(frame.base())))
    fail(errc::bad_input, "phi must be defined exactly on [A,A]");
  return detail::standardize(phi, frame);
}

/// The non-unital variant: requires Ann(<[B,B]>) = 0 on the target, then
/// runs the same pipeline (a hull frame with four relatively full
/// idempotents is accepted). When the subring generated by [B,B] has a
/// nonzero annihilator the obstruction is reported instead.
inline StandardDecomposition check_standardizable_nonunital(const LinearMap& phi,
                                                            const IdempotentFrame& frame,
                                                            const AlgebraHandle& target) {
  if (phi.codomain() != target) fail(errc::bad_input, "phi codomain is not the stated target");
  Subspace generated = subring_generated(derived_lie_ring(target));
  Subspace ann = annihilator(generated);
  if (!ann.is_zero()) {
    std::string detail = "Ann(<[B,B]>) has rank " + std::to_string(ann.rank()) +
                         "; first obstruction element: " + ann.basis_element(0).to_string();
    fail(errc::annihilator_nonzero, detail);
  }
  if (!(phi.domain() == derived_lie_ring(frame.base())))
    fail(errc::bad_input, "phi must be defined exactly on [A,A]");
  return detail::standardize(phi, frame);
}

}  // namespace peirce

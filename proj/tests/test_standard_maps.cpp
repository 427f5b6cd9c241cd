#include <catch2/catch_amalgamated.hpp>

#include "peirce/standard_maps.hpp"
#include "support.hpp"

using namespace peirce;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<Element> diagonal_idempotents(const AlgebraHandle& mn, std::uint32_t n) {
  std::vector<Element> out;
  for (std::uint32_t i = 1; i <= n; ++i) out.push_back(matrix_unit(mn, n, i, i));
  return out;
}

}  // namespace

TEST_CASE("envelope structure", "[standard]") {
  auto m3 = matrix_algebra(Q, 3);
  EnvelopePair ep = build_envelope(m3);
  REQUIRE(ep.env->dim() == 18);
  Element e12 = matrix_unit(m3, 3, 1, 2);
  Element t = ep.theta(e12);
  REQUIRE(t == ep.embed_left(e12) - ep.embed_right(e12));
  REQUIRE(ep.involution(t) == -t);

  std::mt19937_64 rng(41);
  Subspace sl3 = derived_lie_ring(m3);
  for (int i = 0; i < 10; ++i) {
    Element x = testing::random_in_subspace(sl3, rng);
    Element y = testing::random_in_subspace(sl3, rng);
    REQUIRE(ep.theta(lie_bracket(x, y)) == lie_bracket(ep.theta(x), ep.theta(y)));
    Element u = testing::random_element(ep.env, rng);
    REQUIRE(ep.involution(ep.involution(u)) == u);
  }
}

TEST_CASE("envelope generation", "[standard]") {
  auto m3 = matrix_algebra(Q, 3);
  REQUIRE(check_envelope_generation(build_envelope(m3),
                                    build_frame(m3, diagonal_idempotents(m3, 3))));

  auto m4 = matrix_algebra(FieldSpec::prime(3), 4);
  REQUIRE(check_envelope_generation(build_envelope(m4),
                                    build_frame(m4, diagonal_idempotents(m4, 4))));

  // a frame with no off-diagonal components generates nothing
  auto ff = direct_sum(field_algebra(Q), field_algebra(Q));
  IdempotentFrame degenerate = build_frame(ff, {Element::basis(ff, 0), Element::basis(ff, 1)});
  REQUIRE_FALSE(check_envelope_generation(build_envelope(ff), degenerate));
}

TEST_CASE("E elements on M3(Q)", "[standard]") {
  auto m3 = matrix_algebra(Q, 3);
  EnvelopePair ep = build_envelope(m3);
  IdempotentFrame frame = build_frame(m3, diagonal_idempotents(m3, 3));
  EElements ee = build_E_elements(ep, frame);
  // E1 = theta(E12) theta(E21) = E11 (+) E22
  REQUIRE(ee.e1 == ep.embed_left(matrix_unit(m3, 3, 1, 1)) +
                       ep.embed_right(matrix_unit(m3, 3, 2, 2)));
  Element x13 = ep.theta(matrix_unit(m3, 3, 1, 3));
  REQUIRE(ee.e1 * x13 == x13 * ee.e3);
  REQUIRE(x13 * ee.e3 == (Element::unit(ep.env) - ep.involution(ee.e3)) * x13);
  REQUIRE((ee.e1 * ep.theta(matrix_unit(m3, 3, 2, 3))).is_zero());
}

TEST_CASE("E elements on M4(F3)", "[standard]") {
  auto m4 = matrix_algebra(FieldSpec::prime(3), 4);
  EnvelopePair ep = build_envelope(m4);
  IdempotentFrame frame = build_frame(m4, diagonal_idempotents(m4, 4));
  REQUIRE_NOTHROW(build_E_elements(ep, frame));  // all identities verified inside
}

TEST_CASE("extend identity to standard", "[standard]") {
  auto m3 = matrix_algebra(Q, 3);
  IdempotentFrame frame = build_frame(m3, diagonal_idempotents(m3, 3));
  Subspace sl3 = derived_lie_ring(m3);
  StandardDecomposition sd = extend_to_standard(LinearMap::identity_on(sl3), frame);
  // psi1 = inclusion, psi2 = 0
  for (std::uint32_t i = 0; i < 9; ++i) {
    Element b = Element::basis(m3, i);
    REQUIRE(sd.psi1(b) == b);
    REQUIRE(sd.psi2(b).is_zero());
  }
}

TEST_CASE("extend conjugation to standard", "[standard]") {
  FieldSpec f2 = FieldSpec::prime(2);
  auto m3 = matrix_algebra(f2, 3);
  IdempotentFrame frame = build_frame(m3, diagonal_idempotents(m3, 3));
  Subspace sl3 = derived_lie_ring(m3);
  Element g = matrix_unit(m3, 3, 1, 2) + matrix_unit(m3, 3, 2, 3) + matrix_unit(m3, 3, 3, 1);
  Element gi = testing::inverse_element(g);
  LinearMap phi = testing::conjugation_map(sl3, g);
  StandardDecomposition sd = extend_to_standard(phi, frame);
  for (std::uint32_t i = 0; i < 9; ++i) {
    Element b = Element::basis(m3, i);
    REQUIRE(sd.psi1(b) == gi * b * g);
    REQUIRE(sd.psi2(b).is_zero());
  }
}

TEST_CASE("extend negative transpose to standard", "[standard]") {
  auto m3 = matrix_algebra(Q, 3);
  IdempotentFrame frame = build_frame(m3, diagonal_idempotents(m3, 3));
  Subspace sl3 = derived_lie_ring(m3);
  LinearMap phi = LinearMap::from_function(sl3, m3, [&](const Element& x) {
    return -testing::transpose_matrix(x, 3);
  });
  StandardDecomposition sd = extend_to_standard(phi, frame);
  for (std::uint32_t i = 0; i < 9; ++i) {
    Element b = Element::basis(m3, i);
    REQUIRE(sd.psi1(b).is_zero());
    REQUIRE(sd.psi2(b) == testing::transpose_matrix(b, 3));
  }
}

TEST_CASE("standardization rejects non-specializations", "[standard]") {
  auto m3 = matrix_algebra(Q, 3);
  IdempotentFrame frame = build_frame(m3, diagonal_idempotents(m3, 3));
  Subspace sl3 = derived_lie_ring(m3);
  // plain transpose is an anti-isomorphism, not a Lie homomorphism
  LinearMap trans = LinearMap::from_function(sl3, m3, [&](const Element& x) {
    return testing::transpose_matrix(x, 3);
  });
  REQUIRE_THROWS_MATCHES(extend_to_standard(trans, frame), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("NotSpecialization")));

  // the adjoint representation is a Lie hom but fails the pairwise condition
  auto m8 = matrix_algebra(Q, 8);
  LinearMap ad = LinearMap::from_function(sl3, m8, [&](const Element& x) {
    Vec coords = linalg::zero_vec(Q, 64);
    for (std::uint32_t c = 0; c < 8; ++c) {
      auto col = sl3.coordinates(lie_bracket(x, sl3.basis_element(c)));
      for (std::uint32_t r = 0; r < 8; ++r) coords[r * 8 + c] = (*col)[r];
    }
    return Element(m8, coords);
  });
  REQUIRE_THROWS_MATCHES(extend_to_standard(ad, frame), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("NotSpecialization")));
}

TEST_CASE("nonunital pathway on a hull frame", "[standard]") {
  FieldSpec f3 = FieldSpec::prime(3);
  auto m4 = matrix_algebra(f3, 4);
  std::vector<Vec> rows;
  for (std::uint32_t i = 1; i <= 3; ++i) rows.push_back(matrix_unit(m4, 4, i, i).coords());
  Vec e4 = linalg::zero_vec(f3, 17);
  e4[16] = Scalar::one(f3);
  for (std::uint32_t i = 1; i <= 3; ++i) e4[(i - 1) * 4 + (i - 1)] = -Scalar::one(f3);
  rows.push_back(e4);
  IdempotentFrame frame = build_frame(m4, rows, /*use_hull=*/true);

  LinearMap phi = LinearMap::identity_on(derived_lie_ring(m4));
  StandardDecomposition sd = check_standardizable_nonunital(phi, frame, m4);
  for (std::uint32_t i = 0; i < m4->dim(); ++i) {
    Element b = Element::basis(m4, i);
    REQUIRE(sd.psi1(b) == b);
    REQUIRE(sd.psi2(b).is_zero());
  }
  // the unital in-algebra frame delegates to the same pipeline
  IdempotentFrame plain = build_frame(m4, diagonal_idempotents(m4, 4));
  REQUIRE_NOTHROW(check_standardizable_nonunital(phi, plain, m4));
}

TEST_CASE("nonunital pathway reports annihilator obstructions", "[standard]") {
  auto m3 = matrix_algebra(Q, 3);
  IdempotentFrame frame = build_frame(m3, diagonal_idempotents(m3, 3));
  // target with Ann(<[B,B]>) != 0: in the exterior algebra on e1, e2 the
  // commutators span the line e1e2, whose generated subring annihilates
  // itself
  Scalar one = Scalar::one(Q);
  std::vector<Algebra::TableEntry> t{
      {1, 2, 3, one},   // e1 e2 = e1e2
      {2, 1, 3, -one},  // e2 e1 = -e1e2
  };
  for (std::uint32_t i = 0; i < 4; ++i) {
    t.push_back({0, i, i, one});
    if (i > 0) t.push_back({i, 0, i, one});
  }
  Vec unit{one, Scalar::zero(Q), Scalar::zero(Q), Scalar::zero(Q)};
  auto grass = Algebra::create(Q, {"1", "e1", "e2", "e1e2"}, t, unit);
  auto target = direct_sum(grass, Algebra::create(Q, {"t"}, {}));
  LinearMap zero = LinearMap::zero_map(derived_lie_ring(m3), target);
  REQUIRE_THROWS_MATCHES(check_standardizable_nonunital(zero, frame, target), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("AnnihilatorNonzero")));
}

TEST_CASE("chi uniqueness in every successful run", "[standard]") {
  // the solving pipeline asserts a zero-dimensional solution space
  // internally; run a composite automorphism through it as a smoke test
  auto m3 = matrix_algebra(Q, 3);
  IdempotentFrame frame = build_frame(m3, diagonal_idempotents(m3, 3));
  Subspace sl3 = derived_lie_ring(m3);
  std::mt19937_64 rng(43);
  Element g = testing::random_invertible_matrix(m3, 3, rng);
  LinearMap conj = testing::conjugation_map(sl3, g);
  LinearMap negt = LinearMap::from_function(sl3, m3, [&](const Element& x) {
    return -testing::transpose_matrix(x, 3);
  });
  LinearMap composite = compose(negt, conj);
  StandardDecomposition sd = extend_to_standard(composite, frame);
  for (const auto& r : sl3.basis_elements()) REQUIRE(composite(r) == sd.psi1(r) - sd.psi2(r));
  REQUIRE(check_assoc_hom(sd.psi2, true).pass);
  // a composite with one transpose factor has psi1 = 0
  for (std::uint32_t i = 0; i < 9; ++i) REQUIRE(sd.psi1(Element::basis(m3, i)).is_zero());
}

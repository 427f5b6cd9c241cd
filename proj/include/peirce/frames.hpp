#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "peirce/linear_map.hpp"

namespace peirce {

/// Root system of type A_{n-1}: the n(n-1) differences w_i - w_j inside the
/// weight lattice spanned by w_1..w_n. Indices are 0-based.
struct RootSystem {
  std::uint32_t n = 0;

  struct Root {
    std::uint32_t i, j;  // the root w_i - w_j, i != j
    bool operator==(const Root&) const = default;
  };

  explicit RootSystem(std::uint32_t n_) : n(n_) {
    if (n < 3) fail(errc::grading_failure, "type A gradings need n >= 3 weights");
  }

  std::vector<Root> roots() const {
    std::vector<Root> out;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (i != j) out.push_back({i, j});
    return out;
  }

  /// Lattice vector of a root.
  std::vector<int> weight(const Root& r) const {
    std::vector<int> v(n, 0);
    v[r.i] += 1;
    v[r.j] -= 1;
    return v;
  }

  static void add_weight(std::vector<int>& acc, const std::vector<int>& w) {
    for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += w[t];
  }

  static bool is_zero_weight(const std::vector<int>& v) {
    for (int x : v)
      if (x != 0) return false;
    return true;
  }

  /// Returns the root equal to the lattice vector, if there is one.
  std::optional<Root> as_root(const std::vector<int>& v) const {
    std::optional<std::uint32_t> pos, neg;
    for (std::uint32_t t = 0; t < n; ++t) {
      if (v[t] == 1 && !pos)
        pos = t;
      else if (v[t] == -1 && !neg)
        neg = t;
      else if (v[t] != 0)
        return std::nullopt;
    }
    if (pos && neg) return Root{*pos, *neg};
    return std::nullopt;
  }

  bool in_delta_or_zero(const std::vector<int>& v) const {
    return is_zero_weight(v) || as_root(v).has_value();
  }
};

/// Pairwise orthogonal idempotents e_0..e_{n-1} summing to 1 (in the unital
/// hull when requested), with all Peirce components A_ij = e_i A e_j cached
/// and per-idempotent fullness flags (AeA = A, products taken through the
/// hull but compared inside A).
class IdempotentFrame {
 public:
  const AlgebraHandle& base() const { return base_; }
  const AlgebraHandle& work() const { return work_; }
  bool uses_hull() const { return uses_hull_; }
  std::size_t size() const { return idempotents_.size(); }
  const Element& idempotent(std::size_t i) const { return idempotents_[i]; }
  const std::vector<Element>& idempotents() const { return idempotents_; }
  const Subspace& component(std::size_t i, std::size_t j) const { return peirce_[i][j]; }
  bool is_full(std::size_t i) const { return full_[i]; }
  /// Image of the base algebra inside the work algebra.
  const Subspace& embedded_base() const { return embedded_; }

  Element embed(const Element& x) const {
    if (x.parent() != base_) fail(errc::algebra_mismatch, "embed of foreign element");
    return uses_hull_ ? hull_embed(work_, x) : x;
  }

  Element project(const Element& x) const {
    if (x.parent() != work_) fail(errc::algebra_mismatch, "project of foreign element");
    return uses_hull_ ? hull_project(base_, x) : x;
  }

  friend IdempotentFrame build_frame(const AlgebraHandle&, const std::vector<Vec>&, bool);

 private:
  IdempotentFrame(AlgebraHandle base, AlgebraHandle work, bool uses_hull, Subspace embedded)
      : base_(std::move(base)),
        work_(std::move(work)),
        uses_hull_(uses_hull),
        embedded_(std::move(embedded)) {}

  AlgebraHandle base_;
  AlgebraHandle work_;
  bool uses_hull_;
  Subspace embedded_;
  std::vector<Element> idempotents_;
  std::vector<std::vector<Subspace>> peirce_;
  std::vector<bool> full_;
};

/// True iff e is idempotent and AeA = A.
inline bool is_full_idempotent(const AlgebraHandle& a, const Element& e) {
  if (e.parent() != a) fail(errc::algebra_mismatch, "idempotent of a foreign algebra");
  if (!(e * e == e)) fail(errc::not_idempotent, e.to_string() + " is not idempotent");
  Subspace full = Subspace::full(a);
  return subspace_product(subspace_product(full, span(a, {e})), full) == full;
}

/// Validates candidate idempotents and computes the Peirce data. Coordinate
/// rows have length dim(A), or dim(A)+1 when use_hull is set (the last entry
/// is the coefficient of the adjoined identity).
inline IdempotentFrame build_frame(const AlgebraHandle& a, const std::vector<Vec>& idem_coords,
                                   bool use_hull = false) {
  if (idem_coords.size() < 2) fail(errc::bad_input, "a frame needs at least two idempotents");
  if (!use_hull && !a->is_unital())
    fail(errc::not_complete,
         "idempotents of a non-unital algebra cannot sum to 1; build the frame in the hull");

  AlgebraHandle work = use_hull ? unital_hull_algebra(a) : a;
  Subspace embedded(work);
  for (std::uint32_t i = 0; i < a->dim(); ++i) {
    Element b = Element::basis(a, i);
    embedded.insert(use_hull ? hull_embed(work, b) : b);
  }

  IdempotentFrame frame(a, work, use_hull, embedded);
  for (const auto& row : idem_coords) {
    Vec v = row;
    if (use_hull && v.size() == a->dim()) v.push_back(Scalar::zero(a->field()));
    if (v.size() != work->dim()) fail(errc::bad_input, "idempotent coordinate length");
    frame.idempotents_.emplace_back(work, std::move(v));
  }

  const auto& es = frame.idempotents_;
  std::size_t n = es.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!(es[i] * es[i] == es[i]))
      fail(errc::not_idempotent, "candidate " + std::to_string(i) + " is not idempotent");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !(es[i] * es[j]).is_zero())
        fail(errc::not_orthogonal,
             "e" + std::to_string(i) + " * e" + std::to_string(j) + " != 0");
  Element sum = Element::zero(work);
  for (const auto& e : es) sum = sum + e;
  if (!(sum == Element::unit(work)))
    fail(errc::not_complete, "idempotents do not sum to the identity");

  // Peirce components e_i A e_j, computed inside A (through the hull when
  // present; A is an ideal there, so the products stay in the embedded copy).
  frame.peirce_.assign(n, std::vector<Subspace>(n, Subspace(work)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Subspace s(work);
      for (const auto& b : frame.embedded_.basis_elements()) s.insert(es[i] * b * es[j]);
      frame.peirce_[i][j] = std::move(s);
    }

  std::size_t total_rank = 0;
  Subspace sum_comp(work);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      total_rank += frame.peirce_[i][j].rank();
      sum_comp = sum_comp + frame.peirce_[i][j];
    }
  if (total_rank != a->dim() || !(sum_comp == frame.embedded_))
    fail(errc::peirce_mismatch, "Peirce components do not decompose the algebra");

  for (std::size_t i = 0; i < n; ++i) {
    Subspace aea = subspace_product(
        subspace_product(frame.embedded_, span(work, {es[i]})), frame.embedded_);
    frame.full_.push_back(aea == frame.embedded_);
  }
  return frame;
}

inline IdempotentFrame build_frame(const AlgebraHandle& a, const std::vector<Element>& idems,
                                   bool use_hull = false) {
  std::vector<Vec> rows;
  for (const auto& e : idems) {
    if (e.parent() != a) fail(errc::algebra_mismatch, "idempotent of a foreign algebra");
    rows.push_back(e.coords());
  }
  return build_frame(a, rows, use_hull);
}

/// Decomposition e_i = sum_mu a_mu b_mu with a_mu in A_ij, b_mu in A_ji.
/// The solver takes the canonical echelon-first solution over the product
/// basis of the two components.
inline std::vector<std::pair<Element, Element>> peirce_unit_decomposition(
    const IdempotentFrame& frame, std::size_t i, std::size_t j) {
  if (i == j || i >= frame.size() || j >= frame.size())
    fail(errc::bad_input, "peirce_unit_decomposition needs distinct frame indices");
  const Subspace& aij = frame.component(i, j);
  const Subspace& aji = frame.component(j, i);
  std::vector<Vec> products;
  for (const auto& u : aij.basis_elements())
    for (const auto& v : aji.basis_elements()) products.push_back((u * v).coords());
  linalg::SpanSolver solver(frame.work()->field(), frame.work()->dim(), products);
  auto coeffs = solver.solve(frame.idempotent(i).coords());
  if (!coeffs)
    fail(errc::no_decomposition, "e" + std::to_string(i) + " is not a sum of A_" +
                                     std::to_string(i) + std::to_string(j) + " * A_" +
                                     std::to_string(j) + std::to_string(i) + " products");
  std::vector<std::pair<Element, Element>> out;
  std::size_t idx = 0;
  for (const auto& u : aij.basis_elements())
    for (const auto& v : aji.basis_elements()) {
      const Scalar& c = (*coeffs)[idx++];
      if (!c.is_zero()) out.emplace_back(c * u, v);
    }
  return out;
}

/// h_ij = sum [a_mu, b_mu] for a decomposition e_i = sum a_mu b_mu. Lies in
/// e_i + A_jj, and ad(h_ij) is +1 on A_ik and -1 on A_ki for every k outside
/// {i, j}.
inline Element h_element(const IdempotentFrame& frame, std::size_t i, std::size_t j) {
  auto decomposition = peirce_unit_decomposition(frame, i, j);
  Element h = Element::zero(frame.work());
  for (const auto& [x, y] : decomposition) h = h + lie_bracket(x, y);
  if (!frame.component(j, j).contains(h - frame.idempotent(i)))
    fail(errc::no_decomposition, "h element postcondition failed: h - e_i outside A_jj");
  for (std::size_t k = 0; k < frame.size(); ++k) {
    if (k == i || k == j) continue;
    for (const auto& x : frame.component(i, k).basis_elements())
      if (!(lie_bracket(h, x) == x))
        fail(errc::no_decomposition, "h element postcondition failed: ad(h) != 1 on A_ik");
    for (const auto& y : frame.component(k, i).basis_elements())
      if (!(lie_bracket(h, y) == -y))
        fail(errc::no_decomposition, "h element postcondition failed: ad(h) != -1 on A_ki");
  }
  return h;
}

/// Type A_{n-1} grading of the derived Lie ring: L_{w_i - w_j} = A_ij and
/// L_0 = sum of [A_ij, A_ji].
class GradedLieRing {
 public:
  const RootSystem& roots() const { return roots_; }
  const AlgebraHandle& ambient() const { return ambient_; }
  const Subspace& component(const RootSystem::Root& r) const { return comp_[r.i][r.j]; }
  const Subspace& component(std::uint32_t i, std::uint32_t j) const { return comp_[i][j]; }
  const Subspace& zero_component() const { return zero_; }
  const Subspace& total() const { return total_; }

  /// Builds a grading from explicit root components; L_0 and the total are
  /// derived, and all grading identities are verified.
  static GradedLieRing from_components(const AlgebraHandle& ambient, std::uint32_t n,
                                       const std::vector<std::vector<Subspace>>& comps) {
    GradedLieRing g(ambient, n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (i != j) g.comp_[i][j] = comps[i][j];
    g.finish();
    return g;
  }

  friend GradedLieRing delta_grading(const IdempotentFrame& frame);

 private:
  GradedLieRing(AlgebraHandle ambient, std::uint32_t n)
      : roots_(n),
        ambient_(std::move(ambient)),
        comp_(n, std::vector<Subspace>(n, Subspace(ambient_))),
        zero_(ambient_),
        total_(ambient_) {}

  // Derives L_0 and the total, then checks every grading identity.
  void finish() {
    const std::uint32_t n = roots_.n;
    zero_ = Subspace(ambient_);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (i != j) zero_ = zero_ + bracket_span(comp_[i][j], comp_[j][i]);
    total_ = zero_;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (i != j) total_ = total_ + comp_[i][j];

    auto rs = roots_.roots();
    for (const auto& alpha : rs) {
      for (const auto& beta : rs) {
        Subspace prod = bracket_span(component(alpha), component(beta));
        std::vector<int> sum = roots_.weight(alpha);
        RootSystem::add_weight(sum, roots_.weight(beta));
        const char* what = nullptr;
        if (RootSystem::is_zero_weight(sum)) {
          if (!zero_.contains(prod)) what = "[L_a, L_-a] outside L_0";
        } else if (auto r = roots_.as_root(sum)) {
          if (!component(*r).contains(prod)) what = "[L_a, L_b] outside L_{a+b}";
        } else if (!prod.is_zero()) {
          what = "[L_a, L_b] nonzero for a+b outside Delta";
        }
        if (what)
          fail(errc::grading_failure, std::string(what) + " at roots (" + std::to_string(alpha.i) +
                                          "," + std::to_string(alpha.j) + the_pair(beta));
      }
      if (!component(alpha).contains(bracket_span(zero_, component(alpha))))
        fail(errc::grading_failure, "[L_0, L_a] escapes L_a");
    }
    if (!zero_.contains(bracket_span(zero_, zero_)))
      fail(errc::grading_failure, "[L_0, L_0] escapes L_0");
  }

  static std::string the_pair(const RootSystem::Root& b) {
    return ") x (" + std::to_string(b.i) + "," + std::to_string(b.j) + ")";
  }

  RootSystem roots_;
  AlgebraHandle ambient_;
  std::vector<std::vector<Subspace>> comp_;
  Subspace zero_;
  Subspace total_;
};

/// The Delta-grading of [A, A] induced by a full idempotent frame with
/// n >= 3. Verifies that the graded pieces reassemble the derived Lie ring
/// exactly before returning.
inline GradedLieRing delta_grading(const IdempotentFrame& frame) {
  if (frame.size() < 3) fail(errc::grading_failure, "delta grading needs at least 3 idempotents");
  for (std::size_t i = 0; i < frame.size(); ++i)
    if (!frame.is_full(i))
      fail(errc::not_full, "idempotent " + std::to_string(i) + " is not full");
  std::uint32_t n = static_cast<std::uint32_t>(frame.size());
  std::vector<std::vector<Subspace>> comps(n, std::vector<Subspace>(n, Subspace(frame.work())));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (i != j) comps[i][j] = frame.component(i, j);
  GradedLieRing g = GradedLieRing::from_components(frame.work(), n, comps);
  if (!(g.total() == derived_lie_ring(frame.work())))
    fail(errc::grading_failure, "graded pieces do not sum to the derived Lie ring");
  return g;
}

/// L = [L, L]?
inline bool is_perfect(const GradedLieRing& g) {
  return bracket_span(g.total(), g.total()) == g.total();
}

struct ExtensionVerdict {
  bool pass = false;
  std::string detail;
  std::optional<Element> witness;  // re-checkable certificate element

  explicit operator bool() const { return pass; }
};

/// Checks that a surjective graded Lie homomorphism f : L' -> L has its
/// kernel inside L'_0 (the defining property of a graded central extension).
/// Surjectivity and gradedness are preconditions; the kernel condition is
/// the verdict.
inline ExtensionVerdict verify_graded_central_extension(const LinearMap& f,
                                                        const GradedLieRing& source,
                                                        const GradedLieRing& target) {
  if (!(f.domain() == source.total()))
    fail(errc::bad_input, "map must be defined exactly on the source total");
  if (source.roots().n != target.roots().n)
    fail(errc::not_graded, "root systems of different rank");
  for (const auto& [x, y] :
       [&] {
         std::vector<std::pair<Element, Element>> pairs;
         auto basis = f.domain().basis_elements();
         for (std::size_t i = 0; i < basis.size(); ++i)
           for (std::size_t j = i + 1; j < basis.size(); ++j)
             pairs.emplace_back(basis[i], basis[j]);
         return pairs;
       }())
    if (!(f(lie_bracket(x, y)) == lie_bracket(f(x), f(y))))
      fail(errc::not_graded, "map is not a Lie homomorphism");
  for (const auto& alpha : source.roots().roots())
    if (!target.component(alpha).contains(f.image(source.component(alpha))))
      fail(errc::not_graded, "f(L'_a) escapes L_a at root (" + std::to_string(alpha.i) + "," +
                                 std::to_string(alpha.j) + ")");
  if (!(f.image() == target.total())) fail(errc::not_surjective, "map is not onto the target");

  Subspace ker = f.kernel();
  for (const auto& k : ker.basis_elements()) {
    if (!source.zero_component().contains(k)) {
      // name the root component the kernel leaks into
      for (const auto& alpha : source.roots().roots()) {
        Subspace probe = source.zero_component() + source.component(alpha);
        if (probe.contains(k))
          return {false,
                  "kernel meets root component (" + std::to_string(alpha.i) + "," +
                      std::to_string(alpha.j) + ")",
                  k};
      }
      return {false, "kernel element outside L'_0", k};
    }
  }
  return {true, "kernel inside L'_0", std::nullopt};
}

/// Checks A' = A'A' and Ker f inside Ann(A') for a surjective homomorphism
/// f : A' -> A of associative algebras.
inline ExtensionVerdict verify_annihilator_extension(const LinearMap& f,
                                                     const AlgebraHandle& source,
                                                     const AlgebraHandle& target) {
  if (!(f.domain() == Subspace::full(source)))
    fail(errc::bad_input, "map must be defined on the whole source algebra");
  if (f.codomain() != target) fail(errc::bad_input, "codomain is not the stated target");
  for (std::uint32_t i = 0; i < source->dim(); ++i)
    for (std::uint32_t j = 0; j < source->dim(); ++j) {
      Element x = Element::basis(source, i), y = Element::basis(source, j);
      if (!(f(x * y) == f(x) * f(y)))
        fail(errc::not_homomorphism, "map is not an algebra homomorphism");
    }
  if (!f.image().is_full()) fail(errc::not_surjective, "map is not onto the target");

  Subspace full = Subspace::full(source);
  Subspace ss = subspace_product(full, full);
  if (!(ss == full)) {
    for (std::uint32_t i = 0; i < source->dim(); ++i)
      if (!ss.contains(Element::basis(source, i)))
        return {false, "source != source * source", Element::basis(source, i)};
  }
  Subspace ann = annihilator(source);
  for (const auto& k : f.kernel().basis_elements())
    if (!ann.contains(k)) return {false, "kernel element outside Ann(source)", k};
  return {true, "annihilator extension conditions hold", std::nullopt};
}

}  // namespace peirce

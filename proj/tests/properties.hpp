#pragma once

// Randomized property suites shared by the unit tests and the acceptance run.
// Each suite returns the number of cases tried and the number that failed.

#include "oracles.hpp"

#include <string>

namespace props {

using namespace sutor;

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (!failures) first_failure = what;
    ++failures;
  }
};

struct FreeFox {
  AlphabetPtr al = make_alphabet({"a", "b", "c"});
  Abelianization phi = abelianize(*al, {});

  GroupRingElement d(const Word& w, std::size_t x) const { return fox_derivative(w, x, phi); }
  GroupRingElement image(const Word& w) const { return monomial(phi.group, phi(w)); }
};

inline Outcome fox_product_rule(std::size_t n, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  FreeFox f;
  Outcome out;
  for (std::size_t i = 0; i < n; ++i) {
    Word u = oracle::random_word(rng, f.al, 8), v = oracle::random_word(rng, f.al, 8);
    bool ok = true;
    for (std::size_t x = 0; x < 3; ++x) ok = ok && f.d(u * v, x) == f.d(u, x) + f.image(u) * f.d(v, x);
    out.record(ok, render(u) + " | " + render(v));
  }
  return out;
}

inline Outcome fox_inverse_rule(std::size_t n, std::uint64_t seed = 2) {
  std::mt19937_64 rng(seed);
  FreeFox f;
  Outcome out;
  for (std::size_t i = 0; i < n; ++i) {
    Word u = oracle::random_word(rng, f.al, 10);
    bool ok = true;
    for (std::size_t x = 0; x < 3; ++x) ok = ok && f.d(invert(u), x) == -(f.image(invert(u)) * f.d(u, x));
    out.record(ok, render(u));
  }
  return out;
}

/// w - 1 = sum_x (dw/dx)(x - 1).
inline Outcome fox_fundamental_identity(std::size_t n, std::uint64_t seed = 3) {
  std::mt19937_64 rng(seed);
  FreeFox f;
  const auto one = GroupRingElement::one(f.phi.group);
  Outcome out;
  for (std::size_t i = 0; i < n; ++i) {
    Word w = oracle::random_word(rng, f.al, 12);
    GroupRingElement rhs(f.phi.group);
    for (std::size_t x = 0; x < 3; ++x) rhs += f.d(w, x) * (f.image(Word::letter(f.al, x)) - one);
    out.record(rhs == f.image(w) - one, render(w));
  }
  return out;
}

inline std::vector<SuturedInput> move_fixtures() {
  using namespace families;
  return {solid_torus(1),         solid_torus(3),         solid_torus(5),     pretzel_odd(1, 1, 1),
          pretzel_odd(2, 1, 3),   pretzel_even(1, 1, 1), pretzel_even(2, 2, 2), cantwell_conlon(),
          trefoil(),              figure_eight()};
}

inline Outcome nielsen_invariance(std::size_t n, std::uint64_t seed = 4) {
  std::mt19937_64 rng(seed);
  const auto fixtures = move_fixtures();
  std::vector<GroupRingElement> base;
  for (const auto& in : fixtures) base.push_back(torsion(in).tau);
  std::uniform_int_distribution<std::size_t> pick(0, fixtures.size() - 1), len(1, 5), coin(0, 1);
  Outcome out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t f = pick(rng);
    SuturedInput in = fixtures[f];
    const std::size_t l = in.rminus.size();
    std::uniform_int_distribution<std::size_t> idx(0, l - 1);
    std::string trace = std::to_string(f);
    for (std::size_t k = len(rng); k > 0; --k) {
      NielsenMove m;
      m.k = idx(rng);
      if (l > 1 && coin(rng)) {
        m.kind = NielsenMove::Kind::Multiply;
        do m.other = idx(rng);
        while (m.other == m.k);
      }
      trace += m.kind == NielsenMove::Kind::Invert ? " I" + std::to_string(m.k)
                                                   : " M" + std::to_string(m.k) + std::to_string(m.other);
      in = nielsen_move(in, m);
    }
    out.record(sim_equal(torsion(in).tau, base[f]), trace);
  }
  return out;
}

inline Outcome tietze_invariance(std::size_t n, std::uint64_t seed = 5) {
  std::mt19937_64 rng(seed);
  const auto fixtures = move_fixtures();
  std::vector<TorsionResult> base;
  for (const auto& in : fixtures) base.push_back(torsion(in));
  std::uniform_int_distribution<std::size_t> pick(0, fixtures.size() - 1), len(1, 5);
  Outcome out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t f = pick(rng);
    SuturedInput in = fixtures[f];
    std::string trace = std::to_string(f);
    const std::size_t moves = len(rng);
    for (std::size_t k = 0; k < moves; ++k) {
      Word w = oracle::random_word(rng, in.alphabet, 4, 2);
      trace += " [" + render(w) + "]";
      in = tietze_add_generator(in, w, "g" + std::to_string(k));
    }
    auto after = torsion(in);
    out.record(sim_equal(push_forward(base[f].tau, identify_groups(base[f], after)), after.tau), trace);
  }
  return out;
}

inline bool divides(const Integer& a, const Integer& b) { return a.is_zero() ? b.is_zero() : (b % a).is_zero(); }

inline Outcome snf_postconditions(std::size_t n, std::uint64_t seed = 6) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  Outcome out;
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix m = oracle::random_matrix(rng, dim(rng), dim(rng), 20);
    SmithForm s = smith_normal_form(m);
    bool ok = s.U * m * s.V == s.D;
    for (std::size_t r = 0; r < s.D.rows(); ++r)
      for (std::size_t c = 0; c < s.D.cols(); ++c)
        if (r != c && !s.D(r, c).is_zero()) ok = false;
    auto d = s.diagonal();
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k] < 0) ok = false;
      if (k + 1 < d.size() && !divides(d[k], d[k + 1])) ok = false;
    }
    ok = ok && abs(oracle::int_det(s.U)) == 1 && abs(oracle::int_det(s.V)) == 1;
    ok = ok && s.U * s.U_inv == IntMatrix::identity(m.rows());
    if (m.rows() == m.cols()) {
      Integer prod = 1;
      for (const auto& x : d) prod *= x;
      ok = ok && prod == abs(oracle::int_det(m));
    }
    out.record(ok, std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " case " + std::to_string(i));
  }
  return out;
}

inline std::vector<AbelianGroup> sample_groups() {
  return {AbelianGroup::free(1), AbelianGroup::free(2), AbelianGroup::free(3), AbelianGroup{1, {2}}, AbelianGroup{0, {3}},
          AbelianGroup{2, {2, 4}}};
}

inline Outcome normalize_properties(std::size_t n, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  const auto groups = sample_groups();
  std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1), coin(0, 1);
  Outcome out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = groups[pick(rng)];
    auto p = oracle::random_ring_element(rng, g, 6);
    auto np = normalize(p);
    bool ok = normalize(np) == np;
    auto unit = monomial(g, oracle::random_element(rng, g, 5), coin(rng) ? 1 : -1);
    ok = ok && normalize(unit * p) == np && sim_equal(unit * p, p);
    out.record(ok, format(p, {}));
  }
  return out;
}

inline GRMatrix random_gr_matrix(std::mt19937_64& rng, const AbelianGroup& g, std::size_t n) {
  GRMatrix m(g, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, oracle::random_ring_element(rng, g, 3, 2, 3));
  return m;
}

/// Swapping two columns negates the determinant, which also matches Leibniz.
inline Outcome column_swap_antisymmetry(std::size_t n, std::uint64_t seed = 8) {
  std::mt19937_64 rng(seed);
  const AbelianGroup g = AbelianGroup::free(2);
  std::uniform_int_distribution<std::size_t> col(0, 3);
  Outcome out;
  for (std::size_t i = 0; i < n; ++i) {
    GRMatrix m = random_gr_matrix(rng, g, 4);
    std::size_t a = col(rng), b = col(rng);
    while (b == a) b = col(rng);
    GRMatrix swapped = m;
    for (std::size_t r = 0; r < 4; ++r) {
      swapped.set(r, a, m(r, b));
      swapped.set(r, b, m(r, a));
    }
    auto det = determinant(m);
    std::vector<std::vector<GroupRingElement>> rows(4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) rows[r].push_back(m(r, c));
    auto ref = oracle::leibniz<GroupRingElement>(
        rows, GroupRingElement(g), GroupRingElement::one(g), [](const auto& x, const auto& y) { return x * y; },
        [](const auto& x, const auto& y) { return x + y; }, [](const auto& x) { return -x; });
    out.record(determinant(swapped) == -det && det == ref, "case " + std::to_string(i));
  }
  return out;
}

}  // namespace props

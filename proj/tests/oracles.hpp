#pragma once

// Reference computations that share no code with the library beyond the
// Integer type: dense polynomials, Leibniz determinants, exponent sums.

#include "sutor/sutor.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using sutor::Integer;

/// Dense polynomial in one variable, coefficient i of t^i.
using Poly = std::vector<Integer>;

inline Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trim(r);
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(r);
}

/// Strip leading zero coefficients and fix the sign of the lowest term.
inline Poly canonical(Poly p) {
  p = trim(p);
  std::size_t lead = 0;
  while (lead < p.size() && p[lead] == 0) ++lead;
  p.erase(p.begin(), p.begin() + static_cast<long>(lead));
  if (!p.empty() && p[0] < 0)
    for (auto& c : p) c = -c;
  return p;
}

template <class T, class Mul, class Add, class Neg>
T leibniz(const std::vector<std::vector<T>>& m, T zero, T one, Mul mul_fn, Add add_fn, Neg neg_fn) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = zero;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term = one;
    for (std::size_t i = 0; i < n; ++i) term = mul_fn(term, m[i][perm[i]]);
    total = add_fn(total, inversions % 2 ? neg_fn(term) : term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Integer int_det(const std::vector<std::vector<Integer>>& m) {
  if (m.empty()) return 1;
  return leibniz<Integer>(m, Integer(0), Integer(1), std::multiplies<Integer>(), std::plus<Integer>(),
                          std::negate<Integer>());
}

inline Integer int_det(const sutor::IntMatrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return int_det(rows);
}

/// Alexander polynomial det(V - t V^T) from a Seifert matrix.
inline Poly seifert_alexander(const std::vector<std::vector<long>>& v) {
  const std::size_t n = v.size();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = trim({Integer(v[i][j]), Integer(-v[j][i])});
  return canonical(leibniz<Poly>(
      m, Poly{}, Poly{1}, [](const Poly& a, const Poly& b) { return mul(a, b); },
      [](const Poly& a, const Poly& b) { return add(a, b); }, [](const Poly& a) { return mul(a, Poly{-1}); }));
}

/// Coefficient list of an element of Z[Z], shifted to start at t^0.
inline Poly as_poly(const sutor::GroupRingElement& p) {
  if (p.is_zero()) return {};
  Integer lo = p.terms().begin()->first.free.at(0), hi = lo;
  for (const auto& [h, c] : p.terms()) {
    lo = std::min(lo, h.free.at(0));
    hi = std::max(hi, h.free.at(0));
  }
  Poly out((hi - lo).convert_to<std::size_t>() + 1);
  for (const auto& [h, c] : p.terms()) out[(h.free.at(0) - lo).convert_to<std::size_t>()] = c;
  return canonical(out);
}

/// Exponent sum of generator `g` in `w`, by walking the letters.
inline Integer exponent_sum(const sutor::Word& w, std::size_t g) {
  Integer s = 0;
  for (const auto& l : w.letters())
    if (l.gen == g) s += l.exp;
  return s;
}

/// Random raw letter sequence, exponents in [-max_exp, max_exp] \ {0}.
inline std::vector<sutor::Letter> random_letters(std::mt19937_64& rng, std::size_t gens, std::size_t max_len,
                                                 int max_exp = 3) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), gen(0, gens - 1);
  std::uniform_int_distribution<int> ex(-max_exp, max_exp - 1);
  std::vector<sutor::Letter> out(len(rng));
  for (auto& l : out) {
    int e = ex(rng);
    l = {gen(rng), Integer(e >= 0 ? e + 1 : e)};
  }
  return out;
}

inline sutor::Word random_word(std::mt19937_64& rng, const sutor::AlphabetPtr& al, std::size_t max_len, int max_exp = 3) {
  return sutor::Word::reduce(al, random_letters(rng, al->size(), max_len, max_exp));
}

inline sutor::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound);
  sutor::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = e(rng);
  return m;
}

inline sutor::AbElement random_element(std::mt19937_64& rng, const sutor::AbelianGroup& g, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound);
  sutor::AbElement x = sutor::zero_element(g);
  for (auto& v : x.free) v = e(rng);
  for (std::size_t i = 0; i < x.tor.size(); ++i) x.tor[i] = Integer(e(rng) + 100 * bound) % g.torsion[i];
  return x;
}

inline sutor::GroupRingElement random_ring_element(std::mt19937_64& rng, const sutor::AbelianGroup& g, std::size_t max_terms,
                                                   int exp_bound = 3, int coeff_bound = 4) {
  std::uniform_int_distribution<std::size_t> n(0, max_terms);
  std::uniform_int_distribution<int> c(-coeff_bound, coeff_bound);
  sutor::GroupRingElement p(g);
  for (std::size_t k = n(rng); k > 0; --k) p.add_term(random_element(rng, g, exp_bound), c(rng));
  return p;
}

}  // namespace oracle

#pragma once

#include "sutor/abelian.hpp"
#include "sutor/error.hpp"
#include "sutor/integer.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sutor {

/// Finitely supported Z-valued function on an abelian group H, i.e. an element
/// of the integral group ring Z[H]. Terms are kept sorted by the canonical
/// element order (free part lexicographic, then torsion residues).
class GroupRingElement {
 public:
  using Terms = std::map<AbElement, Integer>;

  explicit GroupRingElement(AbelianGroup group) : group_(std::move(group)) {}

  static GroupRingElement monomial(const AbelianGroup& g, const AbElement& h, const Integer& c = 1) {
    GroupRingElement p(g);
    p.add_term(h, c);
    return p;
  }
  static GroupRingElement constant(const AbelianGroup& g, const Integer& c) { return monomial(g, zero_element(g), c); }
  static GroupRingElement one(const AbelianGroup& g) { return constant(g, 1); }

  const AbelianGroup& group() const { return group_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const AbElement& h) const {
    auto it = terms_.find(reduce(group_, h));
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const AbElement& h, const Integer& c) {
    if (c.is_zero()) return;
    auto key = reduce(group_, h);
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  GroupRingElement& operator+=(const GroupRingElement& q) {
    check_group(q);
    for (const auto& [h, c] : q.terms_) add_term(h, c);
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& q) {
    check_group(q);
    for (const auto& [h, c] : q.terms_) add_term(h, -c);
    return *this;
  }

  friend GroupRingElement operator+(GroupRingElement p, const GroupRingElement& q) { return p += q; }
  friend GroupRingElement operator-(GroupRingElement p, const GroupRingElement& q) { return p -= q; }
  friend GroupRingElement operator-(const GroupRingElement& p) {
    GroupRingElement r(p.group_);
    for (const auto& [h, c] : p.terms_) r.terms_.emplace(h, -c);
    return r;
  }

  friend GroupRingElement operator*(const GroupRingElement& p, const GroupRingElement& q) {
    p.check_group(q);
    GroupRingElement r(p.group_);
    for (const auto& [h1, c1] : p.terms_)
      for (const auto& [h2, c2] : q.terms_) r.add_term(add(p.group_, h1, h2), c1 * c2);
    return r;
  }
  GroupRingElement& operator*=(const GroupRingElement& q) { return *this = *this * q; }

  /// Multiplication by the group element h (a unit of Z[H]).
  GroupRingElement shifted(const AbElement& h) const {
    GroupRingElement r(group_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(add(group_, k, h), c);
    return r;
  }

  friend bool operator==(const GroupRingElement& p, const GroupRingElement& q) {
    return p.group_ == q.group_ && p.terms_ == q.terms_;
  }

  void check_group(const GroupRingElement& q) const {
    if (!(group_ == q.group_)) throw Error(ErrorCode::GroupMismatch, "group ring elements over different groups");
  }

 private:
  AbelianGroup group_;
  Terms terms_;
};

inline GroupRingElement monomial(const AbelianGroup& g, const AbElement& h, const Integer& c = 1) {
  return GroupRingElement::monomial(g, h, c);
}

/// Element of a torsion-free group from its exponent vector.
inline AbElement free_element(IntVector v) { return {std::move(v), {}}; }

namespace detail {

inline bool term_sequence_less(const GroupRingElement::Terms& a, const GroupRingElement::Terms& b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (ia->first < ib->first) return true;
    if (ib->first < ia->first) return false;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.end() && ib != b.end();
}

}  // namespace detail

/// Canonical representative of {+-h * p : h in H}: the lexicographically least
/// term sequence among translates whose least support point is the identity
/// with a positive coefficient.
inline GroupRingElement normalize(const GroupRingElement& p) {
  if (p.is_zero()) return p;
  const auto& g = p.group();
  const IntVector& least_free = p.terms().begin()->first.free;
  std::optional<GroupRingElement> best;
  for (const auto& [h, c] : p.terms()) {
    if (h.free != least_free) break;
    GroupRingElement cand = p.shifted(negate(g, h));
    if (c < 0) cand = -cand;
    if (!best || detail::term_sequence_less(cand.terms(), best->terms())) best = std::move(cand);
  }
  return *best;
}

inline bool sim_equal(const GroupRingElement& p, const GroupRingElement& q) {
  p.check_group(q);
  return normalize(p) == normalize(q);
}

inline Integer augmentation(const GroupRingElement& p) {
  Integer s = 0;
  for (const auto& [h, c] : p.terms()) s += c;
  return s;
}

/// Sum of |coefficients|.
inline Integer coefficient_mass(const GroupRingElement& p) {
  Integer s = 0;
  for (const auto& [h, c] : p.terms()) s += sutor::abs(c);
  return s;
}

/// Exact quotient p / q in Z[H] for torsion-free H; nullopt when q does not
/// divide p. Both operands are shifted into the non-negative orthant and
/// divided under graded lexicographic order.
inline std::optional<GroupRingElement> exact_div(const GroupRingElement& p, const GroupRingElement& q) {
  p.check_group(q);
  const auto& g = p.group();
  if (!g.is_torsion_free()) throw Error(ErrorCode::UnsupportedTorsion, "exact division needs a torsion-free group");
  if (q.is_zero()) throw Error(ErrorCode::ZeroInput, "division by zero");
  if (p.is_zero()) return p;

  const std::size_t n = g.rank;
  auto min_exponents = [n](const GroupRingElement& x) {
    IntVector m = x.terms().begin()->first.free;
    for (const auto& [h, c] : x.terms())
      for (std::size_t i = 0; i < n; ++i)
        if (h.free[i] < m[i]) m[i] = h.free[i];
    return m;
  };

  // Graded-lex keyed polynomial: (total degree, exponents) -> coefficient.
  using Key = std::pair<Integer, IntVector>;
  using Poly = std::map<Key, Integer>;
  auto to_poly = [&](const GroupRingElement& x, const IntVector& shift) {
    Poly out;
    for (const auto& [h, c] : x.terms()) {
      IntVector e = h.free;
      Integer deg = 0;
      for (std::size_t i = 0; i < n; ++i) deg += (e[i] -= shift[i]);
      out.emplace(Key{deg, std::move(e)}, c);
    }
    return out;
  };

  const IntVector pmin = min_exponents(p), qmin = min_exponents(q);
  Poly rem = to_poly(p, pmin);
  const Poly divisor = to_poly(q, qmin);
  const auto& [lead_key, lead_coeff] = *divisor.rbegin();

  GroupRingElement quotient(g);
  while (!rem.empty()) {
    auto [rkey, rcoeff] = *rem.rbegin();
    IntVector m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = rkey.second[i] - lead_key.second[i];
      if (m[i] < 0) return std::nullopt;
    }
    if (!(rcoeff % lead_coeff).is_zero()) return std::nullopt;
    const Integer c = rcoeff / lead_coeff;
    const Integer mdeg = rkey.first - lead_key.first;
    for (const auto& [dkey, dcoeff] : divisor) {
      IntVector e = dkey.second;
      for (std::size_t i = 0; i < n; ++i) e[i] += m[i];
      Key k{dkey.first + mdeg, std::move(e)};
      auto [it, inserted] = rem.try_emplace(k, -c * dcoeff);
      if (!inserted) {
        it->second -= c * dcoeff;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
    quotient.add_term(free_element(m), c);
  }
  IntVector offset(n);
  for (std::size_t i = 0; i < n; ++i) offset[i] = pmin[i] - qmin[i];
  return quotient.shifted(free_element(offset));
}

/// Square matrix over Z[H].
class GRMatrix {
 public:
  GRMatrix(AbelianGroup group, std::size_t rows, std::size_t cols)
      : group_(std::move(group)), rows_(rows), cols_(cols), data_(rows * cols, GroupRingElement(group_)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const AbelianGroup& group() const { return group_; }

  const GroupRingElement& operator()(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }
  void set(std::size_t i, std::size_t j, GroupRingElement v) {
    if (!(v.group() == group_)) throw Error(ErrorCode::GroupMismatch, "GRMatrix entry over a different group");
    data_.at(i * cols_ + j) = std::move(v);
  }

 private:
  AbelianGroup group_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GroupRingElement> data_;
};

namespace detail {

/// Cofactor expansion along the sparsest remaining line, memoized on the
/// (row set, column set) of each minor.
class CofactorDeterminant {
 public:
  explicit CofactorDeterminant(const GRMatrix& a) : a_(a) {}

  GroupRingElement run() {
    const std::size_t n = a_.rows();
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return minor(full, full);
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
      return std::hash<std::uint64_t>()(k.first * 0x9E3779B97F4A7C15ull ^ k.second);
    }
  };

  GroupRingElement minor(std::uint64_t rows, std::uint64_t cols) {
    const auto& g = a_.group();
    if (rows == 0) return GroupRingElement::one(g);
    auto key = std::make_pair(rows, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const std::size_t n = a_.rows();
    bool along_row = true;
    std::size_t line = 0, best = SIZE_MAX;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(rows >> i & 1)) continue;
      std::size_t cnt = 0;
      for (std::size_t j = 0; j < n; ++j)
        if ((cols >> j & 1) && !a_(i, j).is_zero()) ++cnt;
      if (cnt < best) best = cnt, line = i, along_row = true;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cols >> j & 1)) continue;
      std::size_t cnt = 0;
      for (std::size_t i = 0; i < n; ++i)
        if ((rows >> i & 1) && !a_(i, j).is_zero()) ++cnt;
      if (cnt < best) best = cnt, line = j, along_row = false;
    }

    GroupRingElement det(g);
    if (best > 0) {
      const std::uint64_t fixed_mask = along_row ? rows : cols;
      const std::uint64_t other_mask = along_row ? cols : rows;
      const int fixed_pos = std::popcount(fixed_mask & ((std::uint64_t{1} << line) - 1));
      for (std::size_t k = 0; k < n; ++k) {
        if (!(other_mask >> k & 1)) continue;
        const auto& entry = along_row ? a_(line, k) : a_(k, line);
        if (entry.is_zero()) continue;
        const int other_pos = std::popcount(other_mask & ((std::uint64_t{1} << k) - 1));
        GroupRingElement sub = along_row ? minor(rows & ~(std::uint64_t{1} << line), cols & ~(std::uint64_t{1} << k))
                                         : minor(rows & ~(std::uint64_t{1} << k), cols & ~(std::uint64_t{1} << line));
        if (sub.is_zero()) continue;
        if ((fixed_pos + other_pos) % 2 == 0)
          det += entry * sub;
        else
          det -= entry * sub;
      }
    }
    memo_.emplace(key, det);
    return det;
  }

  const GRMatrix& a_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, GroupRingElement, KeyHash> memo_;
};

}  // namespace detail

inline GroupRingElement determinant(const GRMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::NotSquare, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix");
  if (a.rows() > 64) throw Error(ErrorCode::BadParameter, "determinant limited to 64x64");
  return detail::CofactorDeterminant(a).run();
}

inline GroupRingElement push_forward(const GroupRingElement& p, const AbelianMap& proj) {
  if (!(proj.source == p.group())) throw Error(ErrorCode::GroupMismatch, "push_forward source group");
  GroupRingElement r(proj.target);
  for (const auto& [h, c] : p.terms()) r.add_term(proj(h), c);
  return r;
}

/// I_G: the sum of all elements of a finite G, and 0 for infinite G.
inline GroupRingElement sum_of_all_elements(const AbelianGroup& g) {
  GroupRingElement r(g);
  if (g.rank > 0) return r;
  if (*order(g) > 10'000'000) throw Error(ErrorCode::BadParameter, "group too large to enumerate");
  AbElement h = zero_element(g);
  for (;;) {
    r.add_term(h, 1);
    std::size_t i = 0;
    for (; i < g.torsion.size(); ++i) {
      h.tor[i] += 1;
      if (h.tor[i] < g.torsion[i]) break;
      h.tor[i] = 0;
    }
    if (i == g.torsion.size()) break;
  }
  return r;
}

/// p (x) q in Z[H1 + H2].
inline GroupRingElement external_product(const GroupRingElement& p, const GroupRingElement& q) {
  DirectSum ds = direct_sum(p.group(), q.group());
  GroupRingElement r(ds.group);
  for (const auto& [h1, c1] : p.terms()) {
    AbElement x = ds.first(h1);
    for (const auto& [h2, c2] : q.terms()) r.add_term(add(ds.group, x, ds.second(h2)), c1 * c2);
  }
  return r;
}

/// Human-readable polynomial, e.g. "2 - 3*t + 2*t^2". One name per group
/// coordinate (free coordinates first, then torsion).
inline std::string format(const GroupRingElement& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [h, c] : p.terms()) {
    std::string mono;
    auto coords = h.coordinates();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i].is_zero()) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "h" + std::to_string(i + 1);
      if (coords[i] != 1) mono += "^" + coords[i].str();
    }
    Integer mag = sutor::abs(c);
    std::string body = mono.empty() ? mag.str() : (mag == 1 ? mono : mag.str() + "*" + mono);
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace sutor

#pragma once

#include "sutor/error.hpp"
#include "sutor/integer.hpp"
#include "sutor/words.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sutor {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "IntMatrix entry count");
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const { return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_}; }
  IntVector col(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  IntVector apply(const IntVector& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "IntMatrix::apply");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "IntMatrix product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    if (q.is_zero()) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += q * (*this)(src, j);
  }
  /// col[dst] += q * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    if (q.is_zero()) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += q * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }
  void negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * M * V = D with U, V unimodular and D diagonal with d_i | d_{i+1}.
/// U_inv is U^{-1}, tracked alongside so cokernel sections come for free.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix U_inv;

  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

/// Row operations on D mirrored into U and, inversely, into U_inv.
struct SmithState {
  SmithForm f;

  void swap_rows(std::size_t a, std::size_t b) {
    f.D.swap_rows(a, b);
    f.U.swap_rows(a, b);
    f.U_inv.swap_cols(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    f.D.add_row(dst, src, q);
    f.U.add_row(dst, src, q);
    f.U_inv.add_col(src, dst, -q);
  }
  void negate_row(std::size_t r) {
    f.D.negate_row(r);
    f.U.negate_row(r);
    f.U_inv.negate_col(r);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    f.D.swap_cols(a, b);
    f.V.swap_cols(a, b);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    f.D.add_col(dst, src, q);
    f.V.add_col(dst, src, q);
  }
};

}  // namespace detail

/// Smith normal form by repeated minimal-|entry| pivoting.
inline SmithForm smith_normal_form(const IntMatrix& M) {
  const std::size_t r = M.rows(), c = M.cols();
  detail::SmithState s{{IntMatrix::identity(r), M, IntMatrix::identity(c), IntMatrix::identity(r)}};
  IntMatrix& D = s.f.D;

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (!D(i, j).is_zero() && (!best || sutor::abs(D(i, j)) < sutor::abs(D(best->first, best->second))))
          best = {i, j};
    if (!best) break;
    s.swap_rows(t, best->first);
    s.swap_cols(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (D(i, t).is_zero()) continue;
        s.add_row(i, t, -Integer(D(i, t) / D(t, t)));
        if (!D(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (D(t, j).is_zero()) continue;
        s.add_col(j, t, -Integer(D(t, j) / D(t, t)));
        if (!D(t, j).is_zero()) clean = false;
      }
      if (!clean) {
        // A nonzero remainder is smaller than the pivot; move the smallest in.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < r; ++i)
          if (!D(i, t).is_zero() && sutor::abs(D(i, t)) < sutor::abs(D(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < c; ++j)
          if (!D(t, j).is_zero() && sutor::abs(D(t, j)) < sutor::abs(D(bi, bj))) bi = t, bj = j;
        s.swap_rows(t, bi);
        s.swap_cols(t, bj);
        continue;
      }
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < r && !bad_row; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!(D(i, j) % D(t, t)).is_zero()) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      s.add_row(t, *bad_row, 1);
    }
    if (D(t, t) < 0) s.negate_row(t);
  }
  return std::move(s.f);
}

/// Z^rank + Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  static AbelianGroup free(std::size_t rank) { return {rank, {}}; }

  std::size_t dimension() const { return rank + torsion.size(); }
  bool is_torsion_free() const { return torsion.empty(); }
  bool is_trivial() const { return rank == 0 && torsion.empty(); }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Element of an AbelianGroup: free coordinates plus torsion residues.
struct AbElement {
  IntVector free;
  IntVector tor;

  IntVector coordinates() const {
    IntVector v = free;
    v.insert(v.end(), tor.begin(), tor.end());
    return v;
  }

  friend bool operator==(const AbElement&, const AbElement&) = default;
  friend bool operator<(const AbElement& a, const AbElement& b) {
    if (a.free != b.free) return a.free < b.free;
    return a.tor < b.tor;
  }
};

inline AbElement zero_element(const AbelianGroup& g) { return {IntVector(g.rank), IntVector(g.torsion.size())}; }

inline AbElement reduce(const AbelianGroup& g, AbElement x) {
  if (x.free.size() != g.rank || x.tor.size() != g.torsion.size())
    throw Error(ErrorCode::GroupMismatch, "element shape does not match group");
  for (std::size_t i = 0; i < x.tor.size(); ++i) x.tor[i] = floor_mod(x.tor[i], g.torsion[i]);
  return x;
}

/// Builds an element from a (free, torsion) coordinate vector.
inline AbElement from_coordinates(const AbelianGroup& g, const IntVector& v) {
  if (v.size() != g.dimension()) throw Error(ErrorCode::GroupMismatch, "coordinate count does not match group");
  AbElement x{{v.begin(), v.begin() + g.rank}, {v.begin() + g.rank, v.end()}};
  return reduce(g, std::move(x));
}

inline AbElement add(const AbelianGroup& g, const AbElement& x, const AbElement& y) {
  AbElement z = x;
  for (std::size_t i = 0; i < z.free.size(); ++i) z.free[i] += y.free[i];
  for (std::size_t i = 0; i < z.tor.size(); ++i) z.tor[i] += y.tor[i];
  return reduce(g, std::move(z));
}

inline AbElement scale(const AbelianGroup& g, const AbElement& x, const Integer& k) {
  AbElement z = x;
  for (auto& v : z.free) v *= k;
  for (auto& v : z.tor) v *= k;
  return reduce(g, std::move(z));
}

inline AbElement negate(const AbelianGroup& g, const AbElement& x) { return scale(g, x, -1); }

inline bool is_zero(const AbElement& x) {
  for (const auto& v : x.free)
    if (!v.is_zero()) return false;
  for (const auto& v : x.tor)
    if (!v.is_zero()) return false;
  return true;
}

/// Group order; nullopt for an infinite group.
inline std::optional<Integer> order(const AbelianGroup& g) {
  if (g.rank > 0) return std::nullopt;
  Integer n = 1;
  for (const auto& d : g.torsion) n *= d;
  return n;
}

inline std::string describe(const AbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::string out;
  if (g.rank > 0) out = g.rank == 1 ? "Z" : "Z^" + std::to_string(g.rank);
  for (const auto& d : g.torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + d.str();
  return out;
}

/// Homomorphism between abelian groups given on coordinates.
struct AbelianMap {
  AbelianGroup source;
  AbelianGroup target;
  IntMatrix matrix;  // target.dimension() x source.dimension()

  AbElement operator()(const AbElement& x) const {
    return from_coordinates(target, matrix.apply(x.coordinates()));
  }
};

/// Presentation of a cokernel Z^n / im(R) in invariant-factor coordinates.
/// `proj` maps Z^n onto the group; `section` sends each group coordinate back
/// to a preimage in Z^n (exact on free coordinates, modulo d_i on torsion).
struct Cokernel {
  AbelianGroup group;
  IntMatrix proj;     // group.dimension() x n
  IntMatrix section;  // n x group.dimension()
};

namespace detail {

/// Puts the free rows [0, rank) of `proj` in Hermite normal form, applying the
/// inverse column operations to `section`. This fixes the free basis
/// canonically: a presentation without relators keeps the standard basis.
inline void hermite_free_rows(IntMatrix& proj, IntMatrix& section, std::size_t rank) {
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& q) {
    proj.add_row(dst, src, q);
    section.add_col(src, dst, -q);
  };
  auto swap_row = [&](std::size_t a, std::size_t b) {
    proj.swap_rows(a, b);
    section.swap_cols(a, b);
  };
  auto negate_row = [&](std::size_t a) {
    proj.negate_row(a);
    section.negate_col(a);
  };

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < proj.cols() && pivot_row < rank; ++col) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = pivot_row; i < rank; ++i)
        if (!proj(i, col).is_zero() && (!best || sutor::abs(proj(i, col)) < sutor::abs(proj(*best, col)))) best = i;
      if (!best) break;
      swap_row(pivot_row, *best);
      bool clean = true;
      for (std::size_t i = pivot_row + 1; i < rank; ++i) {
        if (proj(i, col).is_zero()) continue;
        add_row(i, pivot_row, -Integer(proj(i, col) / proj(pivot_row, col)));
        if (!proj(i, col).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (proj(pivot_row, col).is_zero()) continue;
    if (proj(pivot_row, col) < 0) negate_row(pivot_row);
    const Integer p = proj(pivot_row, col);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q = proj(i, col) / p;
      if (floor_mod(proj(i, col), p) != proj(i, col) - q * p) q -= 1;
      add_row(i, pivot_row, -q);
    }
    ++pivot_row;
  }
}

}  // namespace detail

/// Z^n / (column span of relations), n = relations.rows().
inline Cokernel cokernel(const IntMatrix& relations) {
  const std::size_t n = relations.rows();
  SmithForm snf = smith_normal_form(relations);
  auto diag = snf.diagonal();

  std::vector<std::size_t> free_rows, tor_rows;
  AbelianGroup group;
  for (std::size_t k = 0; k < n; ++k) {
    if (k >= diag.size() || diag[k].is_zero())
      free_rows.push_back(k);
    else if (diag[k] != 1)
      tor_rows.push_back(k);
  }
  group.rank = free_rows.size();
  for (auto k : tor_rows) group.torsion.push_back(diag[k]);

  std::vector<std::size_t> order_rows = free_rows;
  order_rows.insert(order_rows.end(), tor_rows.begin(), tor_rows.end());
  IntMatrix proj(order_rows.size(), n), section(n, order_rows.size());
  for (std::size_t a = 0; a < order_rows.size(); ++a)
    for (std::size_t j = 0; j < n; ++j) {
      proj(a, j) = snf.U(order_rows[a], j);
      section(j, a) = snf.U_inv(j, order_rows[a]);
    }
  detail::hermite_free_rows(proj, section, group.rank);
  for (std::size_t t = 0; t < group.torsion.size(); ++t)
    for (std::size_t j = 0; j < n; ++j) proj(group.rank + t, j) = floor_mod(proj(group.rank + t, j), group.torsion[t]);
  return {std::move(group), std::move(proj), std::move(section)};
}

/// H_1 of a presentation with generator images.
struct Abelianization {
  AbelianGroup group;
  std::vector<AbElement> images;  // one per generator
  IntMatrix proj;                 // exponent vectors -> group coordinates
  IntMatrix section;

  /// The image of a word under abelianization.
  AbElement operator()(const Word& w) const {
    IntVector v(images.size());
    for (const auto& l : w.letters()) v.at(l.gen) += l.exp;
    return from_coordinates(group, proj.apply(v));
  }
};

/// Exponent-sum matrix: rows are generators, columns are relators.
inline IntMatrix exponent_sum_matrix(std::size_t generators, const std::vector<Word>& relators) {
  IntMatrix m(generators, relators.size());
  for (std::size_t j = 0; j < relators.size(); ++j)
    for (const auto& l : relators[j].letters()) m(l.gen, j) += l.exp;
  return m;
}

inline Abelianization abelianize(std::size_t generators, const std::vector<Word>& relators) {
  Cokernel ck = cokernel(exponent_sum_matrix(generators, relators));
  std::vector<AbElement> images;
  for (std::size_t g = 0; g < generators; ++g) images.push_back(from_coordinates(ck.group, ck.proj.col(g)));
  return {std::move(ck.group), std::move(images), std::move(ck.proj), std::move(ck.section)};
}

inline Abelianization abelianize(const Alphabet& alphabet, const std::vector<Word>& relators) {
  return abelianize(alphabet.size(), relators);
}

/// Relation matrix of `g` on its own coordinates: diag(0,..,0,d_1,..,d_k).
inline IntMatrix torsion_relations(const AbelianGroup& g) {
  IntMatrix m(g.dimension(), g.torsion.size());
  for (std::size_t t = 0; t < g.torsion.size(); ++t) m(g.rank + t, t) = g.torsion[t];
  return m;
}

struct Quotient {
  AbelianGroup group;
  AbelianMap proj;
};

/// H / <killed> with its canonical surjection.
inline Quotient quotient(const AbelianGroup& h, const std::vector<AbElement>& killed) {
  IntMatrix base = torsion_relations(h);
  IntMatrix rel(h.dimension(), base.cols() + killed.size());
  for (std::size_t i = 0; i < h.dimension(); ++i)
    for (std::size_t j = 0; j < base.cols(); ++j) rel(i, j) = base(i, j);
  for (std::size_t k = 0; k < killed.size(); ++k) {
    auto v = reduce(h, killed[k]).coordinates();
    for (std::size_t i = 0; i < h.dimension(); ++i) rel(i, base.cols() + k) = v[i];
  }
  Cokernel ck = cokernel(rel);
  return {ck.group, AbelianMap{h, ck.group, ck.proj}};
}

struct DirectSum {
  AbelianGroup group;
  AbelianMap first;
  AbelianMap second;
};

/// H1 + H2 in invariant-factor form; for free groups the coordinates are
/// simply concatenated.
inline DirectSum direct_sum(const AbelianGroup& h1, const AbelianGroup& h2) {
  const std::size_t n1 = h1.dimension(), n2 = h2.dimension();
  IntMatrix r1 = torsion_relations(h1), r2 = torsion_relations(h2);
  IntMatrix rel(n1 + n2, r1.cols() + r2.cols());
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < r1.cols(); ++j) rel(i, j) = r1(i, j);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < r2.cols(); ++j) rel(n1 + i, r1.cols() + j) = r2(i, j);
  Cokernel ck = cokernel(rel);
  IntMatrix m1(ck.group.dimension(), n1), m2(ck.group.dimension(), n2);
  for (std::size_t i = 0; i < ck.group.dimension(); ++i) {
    for (std::size_t j = 0; j < n1; ++j) m1(i, j) = ck.proj(i, j);
    for (std::size_t j = 0; j < n2; ++j) m2(i, j) = ck.proj(i, n1 + j);
  }
  return {ck.group, AbelianMap{h1, ck.group, std::move(m1)}, AbelianMap{h2, ck.group, std::move(m2)}};
}

/// The homomorphism source.group -> target with x_j |-> target_images[j],
/// assuming it is well defined (the caller vouches that relations map to 0).
inline AbelianMap induced_map(const Abelianization& source, const AbelianGroup& target,
                              const std::vector<AbElement>& target_images) {
  if (target_images.size() != source.images.size())
    throw Error(ErrorCode::DimensionMismatch, "induced_map needs one image per generator");
  IntMatrix m(target.dimension(), source.group.dimension());
  for (std::size_t k = 0; k < source.group.dimension(); ++k) {
    AbElement acc = zero_element(target);
    for (std::size_t j = 0; j < target_images.size(); ++j)
      if (!source.section(j, k).is_zero()) acc = add(target, acc, scale(target, target_images[j], source.section(j, k)));
    auto v = acc.coordinates();
    for (std::size_t i = 0; i < target.dimension(); ++i) m(i, k) = v[i];
  }
  return {source.group, target, std::move(m)};
}

}  // namespace sutor

#pragma once

#include "sutor/engine.hpp"
#include "sutor/error.hpp"
#include "sutor/group_ring.hpp"
#include "sutor/polytope.hpp"
#include "sutor/words.hpp"

#include <array>
#include <map>
#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sutor::families {

namespace detail {

inline std::string join_params(std::initializer_list<Integer> xs) {
  std::string out;
  for (const auto& x : xs) out += "_" + x.str();
  return out;
}

/// a^i b^j in Z[Z^2] with basis (a, b).
inline GroupRingElement ab(const Integer& i, const Integer& j, const Integer& c = 1) {
  return monomial(AbelianGroup::free(2), free_element({i, j}), c);
}

inline GroupRingElement divide_or_throw(const GroupRingElement& p, const GroupRingElement& q) {
  auto r = exact_div(p, q);
  if (!r) throw Error(ErrorCode::BadParameter, "expected exact division failed");
  return *r;
}

}  // namespace detail

/// Seifert surface complement of the pretzel knot P(2r+1, 2s+1, 2t+1):
/// pi_1 free on a, b; R_- words a^r a (b^-1 a)^s and a^r b^(t+1).
inline SuturedInput pretzel_odd(const Integer& r, const Integer& s, const Integer& t) {
  auto al = make_alphabet({"a", "b"});
  Word a = Word::letter(al, 0), b = Word::letter(al, 1);
  Word alpha = power(a, r) * a * power(invert(b) * a, s);
  Word beta = power(a, r) * power(b, t + 1);
  SuturedInput in{al, {}, {alpha, beta}, "pretzel_odd" + detail::join_params({r, s, t}), "", true};
  if (r < 1 || s < 1 || t < 1) in.notes = "parameters outside r, s, t >= 1; the hexagon description does not apply";
  return in;
}

/// Independent route to tau(pretzel_odd(r,s,t)): the cleared-denominator
/// identity divided by (1 - a)(1 - b)(1 - a b^-1).
inline GroupRingElement pretzel_odd_expected(const Integer& r, const Integer& s, const Integer& t) {
  if (r < 1 || s < 1 || t < 1) throw Error(ErrorCode::BadParameter, "pretzel_odd_expected needs r, s, t >= 1");
  using detail::ab;
  const auto one = ab(0, 0);
  auto rhs = (one - ab(r, 0)) * (one - ab(0, t + 1)) * (one - ab(1, -1)) +
             ab(r, 0) * (one - ab(s + 1, -(s + 1))) * (one - ab(0, t + 1)) * (one - ab(1, 0)) +
             ab(1, -1) * (one - ab(s, -s)) * (one - ab(r, 0)) * (one - ab(0, 1));
  auto q = detail::divide_or_throw(rhs, one - ab(1, 0));
  q = detail::divide_or_throw(q, one - ab(0, 1));
  q = detail::divide_or_throw(q, one - ab(1, -1));
  return q;
}

/// Seifert surface complement of the pretzel link P(2r, 2s, 2t).
inline SuturedInput pretzel_even(const Integer& r, const Integer& s, const Integer& t) {
  auto al = make_alphabet({"a", "b"});
  Word a = Word::letter(al, 0), b = Word::letter(al, 1);
  Word alpha = power(a, r) * power(invert(b) * a, s);
  Word beta = power(a, r) * power(b, t);
  SuturedInput in{al, {}, {alpha, beta}, "pretzel_even" + detail::join_params({r, s, t}), "", true};
  if (r < 1 || s < 1 || t < 1) in.notes = "parameters outside r, s, t >= 1";
  return in;
}

/// Solid torus with two parallel sutures of slope p (an unknotted annulus
/// with p full twists).
inline SuturedInput solid_torus(const Integer& p) {
  if (p < 1) throw Error(ErrorCode::BadParameter, "solid_torus needs p >= 1");
  auto al = make_alphabet({"a"});
  return {al, {}, {Word::letter(al, 0, p)}, "solid_torus" + detail::join_params({p}), "", true};
}

/// (t^p - 1)^n / (t - 1) = (1 + ... + t^(p-1)) (t^p - 1)^(n-1).
inline GroupRingElement twisted_band_expected(const Integer& p, const Integer& n) {
  if (p < 1 || n < 1) throw Error(ErrorCode::BadParameter, "twisted_band_expected needs p, n >= 1");
  const AbelianGroup z = AbelianGroup::free(1);
  GroupRingElement out = solid_torus_polynomial(p);
  const GroupRingElement tp1 = monomial(z, free_element({p})) - GroupRingElement::one(z);
  for (Integer k = 1; k < n; ++k) out *= tp1;
  return out;
}

/// Genus-three handlebody whose R_- basis maps to a, b a^-1 b c^-1, b a^-1 c a b^-1.
inline SuturedInput cantwell_conlon() {
  auto al = make_alphabet({"a", "b", "c"});
  return {al,
          {},
          {parse_word("a", al), parse_word("b a^-1 b c^-1", al), parse_word("b a^-1 c a b^-1", al)},
          "cantwell_conlon",
          "",
          true};
}

/// The published torsion 2a - 3 + 2a^-1 of the genus-two handlebody without a
/// disk decomposition. Only the value is available, not the defining words.
inline GroupRingElement goda_tau() {
  const AbelianGroup z = AbelianGroup::free(1);
  return monomial(z, free_element({1}), 2) + monomial(z, free_element({0}), -3) + monomial(z, free_element({-1}), 2);
}

using PdCrossing = std::array<long, 4>;
using PdCode = std::vector<PdCrossing>;

struct WirtingerOptions {
  std::optional<std::size_t> dropped_crossing;  // default: the last crossing
  std::size_t meridian_arc = 0;
};

/// Knot exterior as a sutured manifold with two meridional sutures, from a
/// planar diagram code. Each crossing lists edge labels counterclockwise
/// starting at the incoming under-edge; labels run 1..2n along the knot.
inline SuturedInput wirtinger_knot(const PdCode& pd, const WirtingerOptions& opts = {}) {
  const long n = static_cast<long>(pd.size());
  if (n < 3) throw Error(ErrorCode::MalformedPd, "need at least 3 crossings");
  const long edges = 2 * n;
  std::map<long, int> seen;
  for (const auto& x : pd)
    for (long e : x) {
      if (e < 1 || e > edges) throw Error(ErrorCode::MalformedPd, "edge label " + std::to_string(e) + " outside 1.." + std::to_string(edges));
      ++seen[e];
    }
  for (long e = 1; e <= edges; ++e)
    if (seen[e] != 2) throw Error(ErrorCode::MalformedPd, "edge label " + std::to_string(e) + " must appear exactly twice");

  std::vector<long> parent(edges + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](long a, long b) { parent[find(a)] = find(b); };

  for (const auto& x : pd) unite(x[0], x[2]), unite(x[1], x[3]);
  std::set<long> components;
  for (long e = 1; e <= edges; ++e) components.insert(find(e));
  if (components.size() > 1)
    throw Error(ErrorCode::MultiComponent, std::to_string(components.size()) + "-component link; R_- would be disconnected");

  auto next = [&](long e) { return e == edges ? 1 : e + 1; };
  std::vector<int> sign(pd.size());
  for (std::size_t c = 0; c < pd.size(); ++c) {
    const auto& x = pd[c];
    if (x[2] != next(x[0])) throw Error(ErrorCode::MalformedPd, "crossing " + std::to_string(c + 1) + ": under-strand labels are not consecutive");
    if (x[1] == next(x[3]))
      sign[c] = 1;
    else if (x[3] == next(x[1]))
      sign[c] = -1;
    else
      throw Error(ErrorCode::MalformedPd, "crossing " + std::to_string(c + 1) + ": over-strand labels are not consecutive");
  }

  // Arcs: edges glued through over-crossings.
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& x : pd) unite(x[1], x[3]);
  std::map<long, std::size_t> arc_of_root;
  for (long e = 1; e <= edges; ++e) arc_of_root.try_emplace(find(e), arc_of_root.size());
  auto arc = [&](long e) { return arc_of_root.at(find(e)); };
  const std::size_t arcs = arc_of_root.size();

  std::vector<std::string> names;
  for (std::size_t i = 0; i < arcs; ++i) names.push_back("x" + std::to_string(i + 1));
  auto al = make_alphabet(names);

  const std::size_t dropped = opts.dropped_crossing.value_or(pd.size() - 1);
  if (dropped >= pd.size()) throw Error(ErrorCode::Index, "dropped crossing out of range");
  if (opts.meridian_arc >= arcs) throw Error(ErrorCode::Index, "meridian arc out of range");

  std::vector<Word> relators;
  for (std::size_t c = 0; c < pd.size(); ++c) {
    if (c == dropped) continue;
    const auto& x = pd[c];
    Word o = Word::letter(al, arc(x[1]));
    Word in = Word::letter(al, arc(x[0]));
    Word out = Word::letter(al, arc(x[2]));
    if (sign[c] > 0)
      relators.push_back(o * in * invert(o) * invert(out));
    else
      relators.push_back(invert(o) * in * o * invert(out));
  }
  return {al, std::move(relators), {Word::letter(al, opts.meridian_arc)}, "wirtinger", "", true};
}

inline PdCode trefoil_pd() { return {{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}}; }
inline PdCode figure_eight_pd() { return {{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}; }
/// The trefoil diagram with its last crossing switched: an unknot.
inline PdCode unknot_3_pd() { return {{1, 5, 2, 4}, {3, 1, 4, 6}, {2, 5, 3, 6}}; }

inline SuturedInput trefoil() {
  auto in = wirtinger_knot(trefoil_pd());
  in.name = "trefoil";
  return in;
}

inline SuturedInput figure_eight() {
  auto in = wirtinger_knot(figure_eight_pd());
  in.name = "figure_eight";
  return in;
}

/// Murasugi sum of twisted bands read off an all-even continued fraction
/// [2c_1, ..., 2c_k]: the product of (t_i^|c_i| - 1)/(t_i - 1) in independent
/// variables t_1..t_k.
inline GroupRingElement two_bridge_expected(const std::vector<Integer>& even_fraction) {
  if (even_fraction.empty()) throw Error(ErrorCode::BadParameter, "empty continued fraction");
  std::optional<GroupRingElement> acc;
  for (const auto& entry : even_fraction) {
    if (entry.is_zero() || !(entry % 2).is_zero())
      throw Error(ErrorCode::BadParameter, "continued fraction terms must be nonzero and even, got " + entry.str());
    auto band = twisted_band_expected(sutor::abs(entry) / 2, 1);
    acc = acc ? external_product(*acc, band) : band;
  }
  return *acc;
}

/// Lower bound 4 (1^2 + ... + n^2) on the top-grading rank for the pinwheel
/// pretzel link P(n, -n, n, -n).
inline Integer pinwheel_expected_mass(const Integer& n) { return 2 * n * (n + 1) * (2 * n + 1) / 3; }

/// Checks a user-supplied word model of the P(n,-n,n,-n) Seifert surface
/// complement against the pinwheel coefficient mass.
inline bool pinwheel_mass_check(const SuturedInput& user_model, const Integer& n) {
  return coefficient_mass(torsion(user_model).tau) == pinwheel_expected_mass(n);
}

/// Published support of tau for the 9_38 Seifert surface complement.
inline std::vector<IntVector> knot_9_38_target_support() {
  return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}};
}

/// Whether the support of tau equals `target` after some translation.
inline bool support_matches_up_to_translation(const GroupRingElement& tau, std::vector<IntVector> target) {
  Support s = support(tau);
  if (s.size() != target.size() || target.empty()) return false;
  std::sort(target.begin(), target.end());
  const IntVector& base = s.points.begin()->first;
  IntVector shift(base.size());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = target.front()[i] - base[i];
  std::vector<IntVector> moved;
  for (const auto& [p, c] : s.points) {
    IntVector q = p;
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += shift[i];
    moved.push_back(std::move(q));
  }
  return moved == target;
}

}  // namespace sutor::families

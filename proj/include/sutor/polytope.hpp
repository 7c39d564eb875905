#pragma once

#include "sutor/error.hpp"
#include "sutor/group_ring.hpp"
#include "sutor/integer.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sutor {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Lattice points of a torsion-free group ring element with their coefficients.
struct Support {
  std::size_t dim = 0;
  std::map<IntVector, Integer> points;

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
  std::vector<IntVector> point_list() const {
    std::vector<IntVector> out;
    for (const auto& [p, c] : points) out.push_back(p);
    return out;
  }
};

inline Support support(const GroupRingElement& tau) {
  if (!tau.group().is_torsion_free())
    throw Error(ErrorCode::UnsupportedTorsion, "support analysis needs a torsion-free H_1");
  Support s{tau.group().rank, {}};
  for (const auto& [h, c] : tau.terms()) s.points.emplace(h.free, c);
  return s;
}

namespace detail {

inline void require_nonempty(const Support& s) {
  if (s.empty()) throw Error(ErrorCode::EmptySupport, "empty support");
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline void require_dim(const Support& s, const IntVector& alpha) {
  if (alpha.size() != s.dim)
    throw Error(ErrorCode::DimensionMismatch,
                "covector has " + std::to_string(alpha.size()) + " entries, support dimension is " + std::to_string(s.dim));
}

}  // namespace detail

/// Exact test whether `v` is a convex combination of `points`: phase one of
/// the simplex method over the rationals with Bland's rule, on
///   sum_i lambda_i p_i = v,  sum_i lambda_i = 1,  lambda >= 0.
inline bool in_convex_hull(const IntVector& v, const std::vector<IntVector>& points) {
  if (points.empty()) return false;
  const std::size_t d = v.size(), k = points.size(), m = d + 1, n = k + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < k; ++j) t[r][j] = r < d ? Rational(points[j].at(r)) : Rational(1);
    t[r][n] = r < d ? Rational(v[r]) : Rational(1);
    if (t[r][n] < 0)
      for (std::size_t j = 0; j <= n; ++j) t[r][j] = -t[r][j];
    t[r][k + r] = 1;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = k + r;
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> cost(n + 1);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t r = 0; r < m; ++r) cost[j] -= t[r][j];
  for (std::size_t r = 0; r < m; ++r) cost[n] -= t[r][n];

  for (;;) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < n; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (!enter) break;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][*enter] <= 0) continue;
      Rational ratio = t[r][n] / t[r][*enter];
      if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (!leave) break;  // unbounded cannot happen for a bounded-below objective
    const std::size_t pr = *leave, pc = *enter;
    const Rational piv = t[pr][pc];
    for (auto& x : t[pr]) x /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == pr || t[r][pc] == 0) continue;
      const Rational f = t[r][pc];
      for (std::size_t j = 0; j <= n; ++j) t[r][j] -= f * t[pr][j];
    }
    if (cost[pc] != 0) {
      const Rational f = cost[pc];
      for (std::size_t j = 0; j <= n; ++j) cost[j] -= f * t[pr][j];
    }
    basis[pr] = pc;
  }
  return cost[n] == 0;
}

/// Vertices of the convex hull of the support, sorted lexicographically.
inline std::vector<IntVector> vertices(const Support& s) {
  detail::require_nonempty(s);
  auto pts = s.point_list();
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (!in_convex_hull(pts[i], others)) out.push_back(pts[i]);
  }
  return out;
}

/// max <s, alpha> - min <s, alpha> over the support.
inline Integer width(const Support& s, const IntVector& alpha) {
  detail::require_nonempty(s);
  detail::require_dim(s, alpha);
  std::optional<Integer> lo, hi;
  for (const auto& [p, c] : s.points) {
    Integer v = detail::dot(p, alpha);
    if (!lo || v < *lo) lo = v;
    if (!hi || v > *hi) hi = v;
  }
  return *hi - *lo;
}

/// Vertices of conv{x - y : x, y in support}. The hull of all differences
/// equals the hull of differences of vertices, so only those are examined.
inline std::vector<IntVector> difference_polytope(const Support& s) {
  auto verts = vertices(s);
  Support diffs{s.dim, {}};
  for (const auto& x : verts)
    for (const auto& y : verts) {
      IntVector d(s.dim);
      for (std::size_t i = 0; i < s.dim; ++i) d[i] = x[i] - y[i];
      diffs.points.emplace(std::move(d), 1);
    }
  return vertices(diffs);
}

/// Point reflection through the bounding-box center, with coefficients
/// matching up to one global sign.
inline bool is_centrally_symmetric(const Support& s) {
  detail::require_nonempty(s);
  IntVector twice_center(s.dim);
  for (std::size_t i = 0; i < s.dim; ++i) {
    Integer lo = s.points.begin()->first[i], hi = lo;
    for (const auto& [p, c] : s.points) {
      lo = std::min(lo, p[i]);
      hi = std::max(hi, p[i]);
    }
    twice_center[i] = lo + hi;
  }
  auto matches = [&](int sign) {
    for (const auto& [p, c] : s.points) {
      IntVector q(s.dim);
      for (std::size_t i = 0; i < s.dim; ++i) q[i] = twice_center[i] - p[i];
      auto it = s.points.find(q);
      if (it == s.points.end() || it->second != sign * c) return false;
    }
    return true;
  };
  return matches(1) || matches(-1);
}

/// Terms of tau on the face of its support maximizing <., alpha>.
inline GroupRingElement extremal_part(const GroupRingElement& tau, const IntVector& alpha) {
  if (tau.is_zero()) throw Error(ErrorCode::ZeroInput, "extremal part of zero");
  Support s = support(tau);
  detail::require_dim(s, alpha);
  std::optional<Integer> hi;
  for (const auto& [p, c] : s.points) {
    Integer v = detail::dot(p, alpha);
    if (!hi || v > *hi) hi = v;
  }
  GroupRingElement out(tau.group());
  for (const auto& [h, c] : tau.terms())
    if (detail::dot(h.free, alpha) == *hi) out.add_term(h, c);
  return out;
}

/// Vertices of a 2-dimensional support in counterclockwise order (for one or
/// two vertices, the sorted list).
inline std::vector<IntVector> hull_cycle_2d(const Support& s) {
  if (s.dim != 2) throw Error(ErrorCode::DimensionMismatch, "hull_cycle_2d needs a 2-dimensional support");
  auto verts = vertices(s);
  if (verts.size() < 3) return verts;
  const Integer n = verts.size();
  IntVector sum(2);
  for (const auto& v : verts) sum[0] += v[0], sum[1] += v[1];
  auto rel = [&](const IntVector& v) { return std::pair<Integer, Integer>{n * v[0] - sum[0], n * v[1] - sum[1]}; };
  auto half = [](const std::pair<Integer, Integer>& p) { return (p.second > 0 || (p.second == 0 && p.first > 0)) ? 0 : 1; };
  std::sort(verts.begin(), verts.end(), [&](const IntVector& a, const IntVector& b) {
    auto pa = rel(a), pb = rel(b);
    int ha = half(pa), hb = half(pb);
    if (ha != hb) return ha < hb;
    return pa.first * pb.second - pa.second * pb.first > 0;
  });
  return verts;
}

/// Lattice lengths of the edges of a 2-dimensional hull, following
/// hull_cycle_2d from its first vertex.
inline std::vector<Integer> edge_lengths_2d(const Support& s) {
  auto cyc = hull_cycle_2d(s);
  std::vector<Integer> out;
  if (cyc.size() < 2) return out;
  const std::size_t edges = cyc.size() == 2 ? 1 : cyc.size();
  for (std::size_t i = 0; i < edges; ++i) {
    const auto& a = cyc[i];
    const auto& b = cyc[(i + 1) % cyc.size()];
    out.push_back(boost::multiprecision::gcd(sutor::abs(b[0] - a[0]), sutor::abs(b[1] - a[1])));
  }
  return out;
}

inline std::string to_tsv(const Support& s) {
  std::ostringstream os;
  for (const auto& [p, c] : s.points) {
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
    os << '\t' << c << '\n';
  }
  return os.str();
}

/// SVG drawing of a support of dimension <= 2 at 32 px per lattice unit.
/// The viewport always contains the origin, which is drawn as a cross.
inline std::string to_svg(const Support& s) {
  detail::require_nonempty(s);
  if (s.dim > 2) throw Error(ErrorCode::DimensionMismatch, "SVG output supports dimension <= 2");
  constexpr long unit = 32, margin = 32;
  auto coord = [&](const IntVector& p, std::size_t i) -> long { return i < s.dim ? p[i].convert_to<long>() : 0L; };
  long minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (const auto& [p, c] : s.points) {
    minx = std::min(minx, coord(p, 0));
    maxx = std::max(maxx, coord(p, 0));
    miny = std::min(miny, coord(p, 1));
    maxy = std::max(maxy, coord(p, 1));
  }
  auto px = [&](long x) { return (x - minx) * unit + margin; };
  auto py = [&](long y) { return (maxy - y) * unit + margin; };
  const long w = (maxx - minx) * unit + 2 * margin, h = (maxy - miny) * unit + 2 * margin;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
     << ' ' << h << "\">\n";
  os << "  <path d=\"M " << px(0) - 6 << ' ' << py(0) << " H " << px(0) + 6 << " M " << px(0) << ' ' << py(0) - 6
     << " V " << py(0) + 6 << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  std::vector<IntVector> hull;
  if (s.dim == 2) {
    hull = hull_cycle_2d(s);
  } else {
    hull = vertices(s);
  }
  if (hull.size() >= 2) {
    os << "  <polygon points=\"";
    for (std::size_t i = 0; i < hull.size(); ++i)
      os << (i ? " " : "") << px(coord(hull[i], 0)) << ',' << py(coord(hull[i], 1));
    os << "\" fill=\"#dde8f5\" stroke=\"#2a5d9f\" stroke-width=\"2\"/>\n";
  }
  for (const auto& [p, c] : s.points) {
    const long x = px(coord(p, 0)), y = py(coord(p, 1));
    os << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"6\" fill=\"" << (c > 0 ? "#2a5d9f" : "#b03a2e")
       << "\"/>\n";
    os << "  <text x=\"" << x + 8 << "\" y=\"" << y - 8 << "\" font-family=\"monospace\" font-size=\"11\">" << c
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

/// 1 + t + ... + t^(p-1) in Z[Z].
inline GroupRingElement solid_torus_polynomial(const Integer& p) {
  AbelianGroup z = AbelianGroup::free(1);
  GroupRingElement out(z);
  for (Integer j = 0; j < p; ++j) out.add_term(free_element({j}), 1);
  return out;
}

struct DiskCandidate {
  std::string label;
  GroupRingElement element;
  std::optional<Integer> single;                       // matches (t^p - 1)/(t - 1)
  std::optional<std::pair<Integer, Integer>> product;  // matches a product of two such

  bool matched() const { return single || product; }
};

struct DiskReport {
  Integer user_cap;
  Integer degree_cap;
  Integer cap;  // min of the two
  std::vector<DiskCandidate> candidates;
  bool obstructed = false;

  std::string binding() const { return degree_cap < user_cap ? "degree span" : "p_max"; }
};

/// Compares tau and its two extremal parts against solid-torus torsions
/// (t^p - 1)/(t - 1) and products of two of them, 1 <= p <= cap.
inline DiskReport disk_obstruction_report(const GroupRingElement& tau, const Integer& p_max) {
  const auto& g = tau.group();
  if (!g.is_torsion_free() || g.rank != 1)
    throw Error(ErrorCode::BadParameter, "disk obstruction needs tau over Z[Z], got H of rank " + std::to_string(g.rank));
  if (p_max < 1) throw Error(ErrorCode::BadParameter, "p_max must be positive");

  DiskReport report;
  report.user_cap = p_max;
  report.degree_cap = 1;
  if (!tau.is_zero()) report.degree_cap = width(support(tau), {1}) + 1;
  report.cap = std::min(report.user_cap, report.degree_cap);

  report.candidates.push_back({"tau", tau, {}, {}});
  if (!tau.is_zero()) {
    report.candidates.push_back({"extremal(+1)", extremal_part(tau, {1}), {}, {}});
    report.candidates.push_back({"extremal(-1)", extremal_part(tau, {-1}), {}, {}});
  }

  std::vector<GroupRingElement> phi;
  for (Integer p = 1; p <= report.cap; ++p) phi.push_back(normalize(solid_torus_polynomial(p)));

  for (auto& cand : report.candidates) {
    if (cand.element.is_zero()) continue;
    const auto norm = normalize(cand.element);
    for (std::size_t i = 0; i < phi.size() && !cand.single; ++i)
      if (norm == phi[i]) cand.single = Integer(i + 1);
    for (std::size_t i = 0; i < phi.size() && !cand.product; ++i) {
      auto q = exact_div(norm, phi[i]);
      if (!q || q->is_zero()) continue;
      auto qn = normalize(*q);
      for (std::size_t j = i; j < phi.size(); ++j)
        if (qn == phi[j]) {
          cand.product = std::pair<Integer, Integer>{Integer(i + 1), Integer(j + 1)};
          break;
        }
    }
  }
  report.obstructed = true;
  for (const auto& c : report.candidates)
    if (c.matched()) report.obstructed = false;
  return report;
}

}  // namespace sutor

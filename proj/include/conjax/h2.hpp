#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "conjax/enumerate.hpp"
#include "conjax/word.hpp"

namespace conjax {

template <class T>
struct Mat2T {
  T a{}, b{}, c{}, d{};

  T det() const { return a * d - b * c; }
  T trace() const { return a + d; }

  Mat2T inverse() const { return Mat2T{d, -b, -c, a}; }  // det == 1

  friend Mat2T operator*(const Mat2T& m, const Mat2T& n) {
    return Mat2T{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
                 m.c * n.b + m.d * n.d};
  }

  static Mat2T identity() { return Mat2T{T(1), T(0), T(0), T(1)}; }
};

using Mat2 = Mat2T<double>;
using Mat2i = Mat2T<long long>;

// Discrete faithful representation of the once-punctured torus group: two
// hyperbolic integer matrices with parabolic commutator (trace -2).
struct PuncturedTorusRep {
  Mat2 gen_x{1, 1, 1, 2};
  Mat2 gen_y{1, -1, -1, 2};

  Mat2 commutator() const {
    return gen_x * gen_y * gen_x.inverse() * gen_y.inverse();
  }

  bool self_check(double tol = 1e-9) const {
    return std::abs(gen_x.det() - 1.0) <= tol && std::abs(gen_y.det() - 1.0) <= tol &&
           std::abs(commutator().trace() + 2.0) <= tol;
  }
};

template <class T>
inline Mat2T<T> letter_matrix(const Mat2T<T>& x, const Mat2T<T>& y, Letter l) {
  switch (l) {
    case Letter::x: return x;
    case Letter::y: return y;
    case Letter::X: return x.inverse();
    default: return y.inverse();
  }
}

inline Mat2 evaluate(const PuncturedTorusRep& rep, const ReducedWord& w) {
  Mat2 m = Mat2::identity();
  for (Letter l : w.letters) m = m * letter_matrix(rep.gen_x, rep.gen_y, l);
  return m;
}

// Exact integer evaluation for the default representation.
inline Mat2i evaluate_int(const ReducedWord& w) {
  Mat2i x{1, 1, 1, 2}, y{1, -1, -1, 2};
  Mat2i m = Mat2i::identity();
  for (Letter l : w.letters) m = m * letter_matrix(x, y, l);
  return m;
}

inline bool is_hyperbolic(const Mat2& m, double tol = 1e-9) {
  return std::abs(m.trace()) > 2.0 + tol;
}

inline double translation_length_h2(const Mat2& m) {
  double t = std::abs(m.trace());
  if (t <= 2.0 + 1e-9) throw std::invalid_argument("not hyperbolic");
  return 2.0 * std::acosh(t / 2.0);
}

// Point of the boundary circle R u {inf}.
struct IdealPoint {
  double value = 0.0;
  bool infinite = false;

  friend bool operator<(const IdealPoint& p, const IdealPoint& q) {
    if (p.infinite != q.infinite) return !p.infinite;  // inf sorts last
    return p.value < q.value;
  }
};

inline bool ideal_close(const IdealPoint& p, const IdealPoint& q, double tol) {
  if (p.infinite || q.infinite) return p.infinite && q.infinite;
  return std::abs(p.value - q.value) <= tol;
}

// Complete geodesic of the upper half-plane: the semicircle or vertical ray
// between two distinct ideal endpoints, stored sorted.
struct GeodesicH2 {
  IdealPoint e1, e2;

  GeodesicH2() = default;
  GeodesicH2(IdealPoint p, IdealPoint q) {
    if (q < p) std::swap(p, q);
    e1 = p;
    e2 = q;
  }

  bool vertical() const { return e2.infinite; }
};

inline bool geodesic_close(const GeodesicH2& g, const GeodesicH2& h, double tol) {
  return ideal_close(g.e1, h.e1, tol) && ideal_close(g.e2, h.e2, tol);
}

struct PointH2 {
  double re = 0.0;
  double im = 1.0;
};

inline double hyp_distance(const PointH2& p, const PointH2& q) {
  double dre = p.re - q.re, dim = p.im - q.im;
  return std::acosh(1.0 + (dre * dre + dim * dim) / (2.0 * p.im * q.im));
}

inline PointH2 mobius_apply(const Mat2& m, const PointH2& p) {
  std::complex<double> z(p.re, p.im);
  std::complex<double> w = (m.a * z + m.b) / (m.c * z + m.d);
  return PointH2{w.real(), w.imag()};
}

inline IdealPoint mobius_apply_boundary(const Mat2& m, const IdealPoint& p) {
  if (p.infinite) {
    if (m.c == 0.0) return IdealPoint{0.0, true};
    return IdealPoint{m.a / m.c, false};
  }
  double denom = m.c * p.value + m.d;
  if (denom == 0.0) return IdealPoint{0.0, true};
  return IdealPoint{(m.a * p.value + m.b) / denom, false};
}

// Fixed points of the Moebius map t -> (a t + b)/(c t + d): the ideal
// endpoints of the invariant geodesic.
inline GeodesicH2 axis_geodesic_h2(const Mat2& m) {
  if (!is_hyperbolic(m)) throw std::invalid_argument("not hyperbolic");
  if (m.c == 0.0)
    return GeodesicH2{IdealPoint{m.b / (m.d - m.a), false}, IdealPoint{0.0, true}};
  double disc = m.trace() * m.trace() - 4.0;  // (a-d)^2 + 4bc
  double root = std::sqrt(disc);
  double t1 = (m.a - m.d + root) / (2.0 * m.c);
  double t2 = (m.a - m.d - root) / (2.0 * m.c);
  return GeodesicH2{IdealPoint{t1, false}, IdealPoint{t2, false}};
}

namespace detail {

// Whether v lies strictly between p and q on the real line.
inline bool strictly_between(double p, double q, double v) {
  return (std::min(p, q) < v) && (v < std::max(p, q));
}

}  // namespace detail

// Unique intersection point when the endpoint pairs interleave on the
// boundary circle; nullopt otherwise.
inline std::optional<PointH2> geodesic_intersect_h2(const GeodesicH2& g1, const GeodesicH2& g2,
                                                    double tol = 1e-12) {
  if (geodesic_close(g1, g2, tol)) throw std::invalid_argument("geodesics are identical");
  if (g1.vertical() && g2.vertical()) return std::nullopt;
  if (g1.vertical() || g2.vertical()) {
    const GeodesicH2& vert = g1.vertical() ? g1 : g2;
    const GeodesicH2& circ = g1.vertical() ? g2 : g1;
    double v = vert.e1.value;
    double p = circ.e1.value, q = circ.e2.value;
    if (!detail::strictly_between(p, q, v)) return std::nullopt;
    double c = 0.5 * (p + q), r = 0.5 * std::abs(q - p);
    double h2 = r * r - (v - c) * (v - c);
    if (h2 <= 0.0) return std::nullopt;
    return PointH2{v, std::sqrt(h2)};
  }
  double p1 = g1.e1.value, q1 = g1.e2.value;
  double p2 = g2.e1.value, q2 = g2.e2.value;
  bool in1 = detail::strictly_between(p1, q1, p2);
  bool in2 = detail::strictly_between(p1, q1, q2);
  if (in1 == in2) return std::nullopt;  // nested or disjoint supports
  double c1 = 0.5 * (p1 + q1), r1 = 0.5 * std::abs(q1 - p1);
  double c2 = 0.5 * (p2 + q2), r2 = 0.5 * std::abs(q2 - p2);
  double re = (c2 * c2 - c1 * c1 + r1 * r1 - r2 * r2) / (2.0 * (c2 - c1));
  double h2 = r1 * r1 - (re - c1) * (re - c1);
  if (h2 <= 0.0) return std::nullopt;
  return PointH2{re, std::sqrt(h2)};
}

struct Lift {
  ReducedWord conjugator;
  GeodesicH2 geodesic;
};

// Axes of g W g^-1 over all reduced conjugators with L(g) <= depth,
// deduplicated by endpoint pairs.
inline std::vector<Lift> lifts_of(const PuncturedTorusRep& rep, const ReducedWord& w, int depth,
                                  double dedup_tol = 1e-8) {
  if (!is_cyclically_reduced(w.letters))
    throw std::invalid_argument("word must be cyclically reduced");
  Mat2 mw = evaluate(rep, w);
  if (!is_hyperbolic(mw)) throw std::invalid_argument("not hyperbolic");
  std::vector<Lift> out;
  for (int n = 0; n <= depth; ++n) {
    auto add = [&](const Letters& g) {
      ReducedWord gw(g);
      Mat2 mg = evaluate(rep, gw);
      Mat2 m = mg * mw * mg.inverse();
      GeodesicH2 geo = axis_geodesic_h2(m);
      for (const Lift& l : out)
        if (geodesic_close(l.geodesic, geo, dedup_tol)) return;
      out.push_back(Lift{gw, geo});
    };
    if (n == 0)
      add({});
    else
      for_each_reduced(n, add);
  }
  return out;
}

struct TriangleReport {
  std::array<std::size_t, 3> lift_index{};
  std::array<PointH2, 3> vertices{};
  std::array<double, 3> edge_lengths{};
  double gamma_length = 0.0;
  double max_edge_ratio = 0.0;
};

struct TriangleScan {
  std::vector<Lift> lifts;
  std::vector<TriangleReport> triangles;
  std::vector<std::size_t> violations;  // indices into triangles
  std::size_t degenerate = 0;
  double gamma_length = 0.0;
};

// Enumerates all triples of distinct lifts with three pairwise intersection
// points; an edge not shorter than the closed geodesic (within tolerance)
// is a violation.
inline TriangleScan triangle_scan(const PuncturedTorusRep& rep, const ReducedWord& w, int depth,
                                  double tolerance = 1e-9) {
  TriangleScan scan;
  scan.lifts = lifts_of(rep, w, depth);
  scan.gamma_length = translation_length_h2(evaluate(rep, w));
  const double sep = 1e-7;
  const std::size_t n = scan.lifts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto pij = geodesic_intersect_h2(scan.lifts[i].geodesic, scan.lifts[j].geodesic);
      if (!pij) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        auto pik = geodesic_intersect_h2(scan.lifts[i].geodesic, scan.lifts[k].geodesic);
        if (!pik) continue;
        auto pjk = geodesic_intersect_h2(scan.lifts[j].geodesic, scan.lifts[k].geodesic);
        if (!pjk) continue;
        if (hyp_distance(*pij, *pik) < sep || hyp_distance(*pij, *pjk) < sep ||
            hyp_distance(*pik, *pjk) < sep) {
          ++scan.degenerate;
          continue;
        }
        TriangleReport t;
        t.lift_index = {i, j, k};
        t.vertices = {*pij, *pik, *pjk};
        t.edge_lengths = {hyp_distance(*pij, *pik), hyp_distance(*pij, *pjk),
                          hyp_distance(*pik, *pjk)};
        t.gamma_length = scan.gamma_length;
        t.max_edge_ratio =
            *std::max_element(t.edge_lengths.begin(), t.edge_lengths.end()) / scan.gamma_length;
        bool violated = false;
        for (double e : t.edge_lengths)
          if (e >= scan.gamma_length - tolerance) violated = true;
        scan.triangles.push_back(t);
        if (violated) scan.violations.push_back(scan.triangles.size() - 1);
      }
    }
  return scan;
}

}  // namespace conjax

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "conjax/axis.hpp"
#include "conjax/cyclic.hpp"
#include "conjax/runs.hpp"
#include "conjax/word.hpp"

namespace conjax {

enum class MeetKind { Disjoint, Point, Segment };

// A reference axis for W and two conjugate axes, with the labels of both
// overlaps and coverage data for the designated copy of W at [0, L).
struct TripodReport {
  CyclicWord W;  // the designated copy's rotation
  ReducedWord g1, g2;
  CyclicWord w1, w2;  // cyclically reduced cores of the two conjugates
  ReducedWord U, V;
  std::int64_t u_lo = 0, u_hi = 0;
  std::int64_t v_lo = 0, v_hi = 0;
  MeetKind meet = MeetKind::Disjoint;
  ReducedWord meet_label;  // nonempty only for a segment meet
  bool covers = false;
  std::optional<ReducedWord> union_label;
  std::int64_t excess = 0;
};

namespace detail {

// Rotation indices j such that a window of length L containing the interval
// [lo, hi) can carry the rotation rot_j as its label: j in
// [t + hi - L, t + lo] mod L. Translation of the interval by L does not
// change the set.
inline std::vector<bool> window_rotations(std::int64_t L, int shift, std::int64_t lo,
                                          std::int64_t hi) {
  std::vector<bool> in(static_cast<std::size_t>(L), false);
  for (std::int64_t p = hi - L; p <= lo; ++p)
    in[static_cast<std::size_t>(floor_mod(shift + p, L))] = true;
  return in;
}

inline std::vector<bool> matching_rotations(const CyclicWord& w, const CyclicWord& core) {
  const auto L = static_cast<std::int64_t>(w.size());
  std::vector<bool> in(static_cast<std::size_t>(L), false);
  for (std::int64_t j = 0; j < L; ++j) in[static_cast<std::size_t>(j)] = w.rotated(j) == core;
  return in;
}

inline bool intersects(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return true;
  return false;
}

struct MeetInfo {
  MeetKind kind;
  std::int64_t lo = 0, hi = 0;  // shared edges when kind == Segment
};

inline MeetInfo classify_meet(std::int64_t alo, std::int64_t ahi, std::int64_t blo,
                              std::int64_t bhi) {
  std::int64_t lo = std::max(alo, blo), hi = std::min(ahi, bhi);
  if (lo < hi) return MeetInfo{MeetKind::Segment, lo, hi};
  bool touch = (alo == bhi || ahi == blo || alo == blo || ahi == bhi);
  return MeetInfo{touch ? MeetKind::Point : MeetKind::Disjoint, 0, 0};
}

inline bool covers_copy(std::int64_t a, std::int64_t L, std::int64_t ulo, std::int64_t uhi,
                        std::int64_t vlo, std::int64_t vhi) {
  for (std::int64_t e = a; e < a + L; ++e)
    if (!((e >= ulo && e < uhi) || (e >= vlo && e < vhi))) return false;
  return true;
}

}  // namespace detail

// Builds the configuration of a reference axis and two conjugate axes from
// the conjugators g1, g2. The conjugates pin down rotations of W; among all
// maximal overlap runs whose period window admits those rotations the
// report picks, deterministically: a covering pair first, then the longest
// U-run (smallest shift, smallest anchor), then an edge-disjoint meet, then
// the longest V-run. The copy of W is designated to start at the U-overlap.
inline TripodReport tripod_config(const CyclicWord& w, const ReducedWord& g1,
                                  const ReducedWord& g2) {
  if (w.empty()) throw std::invalid_argument("reference word must be nonempty");
  const auto L = static_cast<std::int64_t>(w.size());
  Axis lambda = axis_of(w.word());

  CyclicWord cores[2];
  for (int i = 0; i < 2; ++i) {
    const ReducedWord& g = i == 0 ? g1 : g2;
    ReducedWord conj = conjugate(g, w.word());
    Axis ax = axis_of(conj);
    if (axis_intersection(lambda, ax).kind == IntersectionKind::SameLine)
      throw std::invalid_argument(i == 0 ? "axis of g1-conjugate coincides with the reference axis"
                                         : "axis of g2-conjugate coincides with the reference axis");
    cores[i] = cyclic_reduce(conj).core;
  }

  RunScan scan = match_runs(w);
  std::vector<bool> r1 = detail::matching_rotations(w, cores[0]);
  std::vector<bool> r2 = detail::matching_rotations(w, cores[1]);

  struct UCand {
    const MatchRun* run;  // null for the degenerate vertex overlap
    std::int64_t anchor, len;
    int shift;
  };
  std::vector<UCand> ucands;
  for (const MatchRun& r : scan.runs) {
    auto jw = detail::window_rotations(L, r.shift, r.lo, r.hi);
    if (detail::intersects(jw, r1)) ucands.push_back(UCand{&r, r.lo, r.length(), r.shift});
  }
  ucands.push_back(UCand{nullptr, 0, 0, 0});

  struct VCand {
    const MatchRun* run;
    std::int64_t b, len;
    int shift;
  };

  struct Choice {
    UCand u;
    VCand v;
    detail::MeetInfo meet;
    bool covers;
    std::tuple<int, std::int64_t, int, std::int64_t, int, std::int64_t, int, std::int64_t> key;
  };
  std::optional<Choice> best;

  std::vector<const MatchRun*> vruns;
  for (const MatchRun& r : scan.runs) {
    auto jw = detail::window_rotations(L, r.shift, r.lo, r.hi);
    if (detail::intersects(jw, r2)) vruns.push_back(&r);
  }

  for (const UCand& uc : ucands) {
    std::int64_t a = uc.anchor, u = uc.len;
    auto consider = [&](const VCand& vc) {
      auto meet = detail::classify_meet(a, a + u, vc.b, vc.b + vc.len);
      bool cov = detail::covers_copy(a, L, a, a + u, vc.b, vc.b + vc.len);
      Choice c{uc, vc, meet, cov,
               {cov ? 0 : 1, -u, uc.shift, a, meet.kind == MeetKind::Segment ? 1 : 0, -vc.len,
                vc.shift, vc.b}};
      if (!best || c.key < best->key) best = c;
    };
    for (const MatchRun* r : vruns) {
      // all translates interacting with the designated copy [a, a + L)
      std::int64_t lo_bound = a - r->length();
      std::int64_t b0 = lo_bound + floor_mod(r->lo - lo_bound, L);
      for (std::int64_t b = b0; b <= a + L; b += L)
        consider(VCand{r, b, r->length(), r->shift});
    }
    consider(VCand{nullptr, a + u, 0, 0});  // degenerate vertex overlap
  }

  const Choice& ch = *best;
  std::int64_t a = ch.u.anchor;
  CyclicWord wa = w.rotated(a);

  TripodReport rep;
  rep.W = wa;
  rep.g1 = g1;
  rep.g2 = g2;
  rep.w1 = cores[0];
  rep.w2 = cores[1];
  rep.u_lo = 0;
  rep.u_hi = ch.u.len;
  rep.v_lo = ch.v.b - a;
  rep.v_hi = ch.v.b - a + ch.v.len;
  rep.U = wa.segment(rep.u_lo, rep.u_hi);
  rep.V = wa.segment(rep.v_lo, rep.v_hi);
  rep.meet = ch.meet.kind;
  if (ch.meet.kind == MeetKind::Segment)
    rep.meet_label = wa.segment(ch.meet.lo - a, ch.meet.hi - a);
  rep.covers = ch.covers;
  std::int64_t ulo = 0, uhi = ch.u.len, vlo = rep.v_lo, vhi = rep.v_hi;
  if (std::max(ulo, vlo) <= std::min(uhi, vhi)) {
    std::int64_t lo = std::min(ulo, vlo), hi = std::max(uhi, vhi);
    rep.union_label = wa.segment(lo, hi);
    rep.excess = rep.covers ? (hi - lo) - L : 0;
  }
  return rep;
}

// The four bundled overlap configurations, computed from scratch.
inline std::vector<TripodReport> example_suite() {
  struct In {
    const char* w;
    const char* g1;
    const char* g2;
  };
  static constexpr In inputs[4] = {
      {"xyxyx", "X", "x"},
      {"xyyxyyx", "YX", "x"},
      {"yxyyxyyx", "Y", "yyx"},
      {"yxyxyyxyxyyx", "XYXY", "x"},
  };
  std::vector<TripodReport> out;
  out.reserve(4);
  for (const In& in : inputs)
    out.push_back(tripod_config(CyclicWord(parse_reduced(in.w)), parse_reduced(in.g1),
                                parse_reduced(in.g2)));
  return out;
}

}  // namespace conjax

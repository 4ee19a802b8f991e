#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "conjax/cyclic.hpp"
#include "conjax/word.hpp"

namespace conjax {

struct TreeVertex {
  ReducedWord address;
  auto operator<=>(const TreeVertex&) const = default;
};

// Eventually periodic infinite reduced word: prefix followed by the
// periodization of block.
struct EndWord {
  Letters prefix;
  Letters block;

  Letter at(std::int64_t i) const {
    if (i < static_cast<std::int64_t>(prefix.size()))
      return prefix[static_cast<std::size_t>(i)];
    std::int64_t j = i - static_cast<std::int64_t>(prefix.size());
    return block[static_cast<std::size_t>(j % static_cast<std::int64_t>(block.size()))];
  }
};

// Bound beyond which two eventually periodic words that still agree must be
// equal as infinite words.
inline std::int64_t end_agreement_bound(const EndWord& a, const EndWord& b) {
  auto pa = static_cast<std::int64_t>(a.prefix.size());
  auto pb = static_cast<std::int64_t>(b.prefix.size());
  auto qa = static_cast<std::int64_t>(a.block.size());
  auto qb = static_cast<std::int64_t>(b.block.size());
  return std::max(pa, pb) + std::lcm(qa, qb) + 1;
}

// Longest common prefix length of two ends; nullopt when equal as infinite
// words.
inline std::optional<std::int64_t> end_lcp(const EndWord& a, const EndWord& b) {
  std::int64_t bound = end_agreement_bound(a, b);
  for (std::int64_t i = 0; i < bound; ++i)
    if (a.at(i) != b.at(i)) return i;
  return std::nullopt;
}

// The axis of a nontrivial element a W a^-1: the line through the two ends
// a.W.W... and a.W^-1.W^-1... . Vertices are the prefixes of either end of
// length >= L(a).
struct Axis {
  ReducedWord conjugator;
  CyclicWord core;

  EndWord attracting_end() const { return EndWord{conjugator.letters, core.rot}; }
  EndWord repelling_end() const {
    return EndWord{conjugator.letters, invert_letters(core.rot)};
  }

  // The group element this axis was built from.
  ReducedWord element() const {
    return element_of(CyclicDecomposition{conjugator, core});
  }

  // Signed coordinate along the axis: the conjugator vertex sits at 0 and
  // the attracting direction is positive.
  TreeVertex vertex_at(std::int64_t c) const {
    EndWord e = c >= 0 ? attracting_end() : repelling_end();
    std::int64_t len = static_cast<std::int64_t>(conjugator.size()) + (c >= 0 ? c : -c);
    Letters out;
    out.reserve(static_cast<std::size_t>(len));
    for (std::int64_t i = 0; i < len; ++i) out.push_back(e.at(i));
    return TreeVertex{ReducedWord(std::move(out))};
  }

  // Label of the edge from coordinate c to c+1, read in the attracting
  // direction.
  Letter edge_label(std::int64_t c) const {
    auto base = static_cast<std::int64_t>(conjugator.size());
    if (c >= 0) return attracting_end().at(base + c);
    return inverse(repelling_end().at(base - c - 1));
  }

  // Coordinate of a vertex known to lie on the axis.
  std::int64_t coordinate_of(const TreeVertex& v) const {
    auto base = static_cast<std::int64_t>(conjugator.size());
    auto len = static_cast<std::int64_t>(v.address.size());
    std::int64_t c = len - base;
    if (c <= 0) {
      // could be on either ray only when v == conjugator
      if (c == 0) return 0;
      throw std::logic_error("vertex not on axis");
    }
    EndWord att = attracting_end();
    bool on_att = true;
    for (std::int64_t i = 0; i < len && on_att; ++i)
      on_att = att.at(i) == v.address.letters[static_cast<std::size_t>(i)];
    return on_att ? c : -c;
  }

  bool contains(const TreeVertex& v) const {
    auto base = static_cast<std::int64_t>(conjugator.size());
    auto len = static_cast<std::int64_t>(v.address.size());
    if (len < base) return false;
    for (EndWord e : {attracting_end(), repelling_end()}) {
      bool ok = true;
      for (std::int64_t i = 0; i < len && ok; ++i)
        ok = e.at(i) == v.address.letters[static_cast<std::size_t>(i)];
      if (ok) return true;
    }
    return false;
  }
};

inline Axis axis_of(const ReducedWord& g) {
  if (g.empty()) throw std::invalid_argument("identity has no axis");
  CyclicDecomposition d = cyclic_reduce(g);
  return Axis{d.conjugator, d.core};
}

inline std::size_t translation_length(const ReducedWord& g) {
  if (g.empty()) return 0;
  return cyclic_reduce(g).core.size();
}

// Axis of g h g^-1 where h is the element of A; equals the image of A under
// left multiplication by g.
inline Axis translate_axis(const ReducedWord& g, const Axis& a) {
  return axis_of(conjugate(g, a.element()));
}

// All axis vertices of address length <= L(conjugator) + radius; the
// brute-force oracle for intersections.
inline std::vector<TreeVertex> axis_window(const Axis& a, int radius) {
  std::vector<TreeVertex> out;
  out.reserve(static_cast<std::size_t>(2 * radius + 1));
  for (std::int64_t c = -radius; c <= radius; ++c) out.push_back(a.vertex_at(c));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

enum class IntersectionKind { Empty, Vertex, Segment, SameLine };

struct TreeSegment {
  TreeVertex start;   // endpoint nearest the first axis's repelling end
  ReducedWord label;  // letters read in the first axis's attracting direction
};

struct IntersectionResult {
  IntersectionKind kind = IntersectionKind::Empty;
  std::optional<TreeVertex> vertex;
  std::optional<TreeSegment> segment;
};

namespace detail {

inline Letters end_prefix(const EndWord& e, std::int64_t len) {
  Letters out;
  out.reserve(static_cast<std::size_t>(len));
  for (std::int64_t i = 0; i < len; ++i) out.push_back(e.at(i));
  return out;
}

}  // namespace detail

// Exact intersection of two axes: empty, one vertex, a finite segment, or
// the same line. Computed from longest-common-prefix meets of the four ends;
// the projection of an end of B onto A is the deepest of the pairwise meets.
inline IntersectionResult axis_intersection(const Axis& a, const Axis& b) {
  EndWord am = a.repelling_end(), ap = a.attracting_end();
  EndWord bm = b.repelling_end(), bp = b.attracting_end();

  // Any shared end forces equal vertex sets for axes.
  if (!end_lcp(ap, bp) || !end_lcp(ap, bm) || !end_lcp(am, bp) || !end_lcp(am, bm)) {
    IntersectionResult r;
    r.kind = IntersectionKind::SameLine;
    return r;
  }

  auto proj_len = [&](const EndWord& xi) {
    std::int64_t m0 = static_cast<std::int64_t>(a.conjugator.size());
    std::int64_t m1 = *end_lcp(am, xi);
    std::int64_t m2 = *end_lcp(ap, xi);
    // med(A-, A+, xi): the deepest of the three pairwise meets; exactly one
    // of m1, m2 can exceed m0.
    if (m1 > m0) return std::pair<std::int64_t, bool>{m1, false};  // on repelling ray
    if (m2 > m0) return std::pair<std::int64_t, bool>{m2, true};   // on attracting ray
    return std::pair<std::int64_t, bool>{m0, true};                // the conjugator vertex
  };

  auto [lp, dp] = proj_len(bm);
  auto [lq, dq] = proj_len(bp);
  auto base = static_cast<std::int64_t>(a.conjugator.size());
  std::int64_t cp = dp ? lp - base : base - lp;
  std::int64_t cq = dq ? lq - base : base - lq;

  if (cp == cq) {
    TreeVertex v = a.vertex_at(cp);
    IntersectionResult r;
    if (b.contains(v)) {
      r.kind = IntersectionKind::Vertex;
      r.vertex = v;
    }
    return r;
  }

  std::int64_t lo = std::min(cp, cq), hi = std::max(cp, cq);
  Letters label;
  label.reserve(static_cast<std::size_t>(hi - lo));
  for (std::int64_t c = lo; c < hi; ++c) label.push_back(a.edge_label(c));
  IntersectionResult r;
  r.kind = IntersectionKind::Segment;
  r.segment = TreeSegment{a.vertex_at(lo), ReducedWord(std::move(label))};
  return r;
}

}  // namespace conjax

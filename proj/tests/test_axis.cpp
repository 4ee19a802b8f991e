#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "conjax/axis.hpp"
#include "conjax/enumerate.hpp"
#include "conjax/word.hpp"

using namespace conjax;

namespace {

ReducedWord rw(const char* s) { return parse_reduced(s); }

// Vertex set of an axis truncated at address length <= cutoff.
std::set<Letters> truncated_vertices(const Axis& a, std::int64_t cutoff) {
  std::set<Letters> out;
  std::int64_t base = static_cast<std::int64_t>(a.conjugator.size());
  for (std::int64_t c = -(cutoff + 1); c <= cutoff + 1; ++c) {
    TreeVertex v = a.vertex_at(c);
    if (static_cast<std::int64_t>(v.address.size()) <= cutoff) out.insert(v.address.letters);
  }
  (void)base;
  return out;
}

// Windowed brute-force classification of the intersection.
void check_against_oracle(const Axis& a, const Axis& b) {
  std::int64_t r = static_cast<std::int64_t>(a.conjugator.size() + b.conjugator.size()) +
                   2 * static_cast<std::int64_t>(std::max(a.core.size(), b.core.size())) + 2;
  std::int64_t cutoff =
      std::max(a.conjugator.size(), b.conjugator.size()) + static_cast<std::size_t>(r);
  std::set<Letters> sa = truncated_vertices(a, cutoff);
  std::set<Letters> sb = truncated_vertices(b, cutoff);
  std::set<Letters> both;
  for (const Letters& v : sa)
    if (sb.count(v)) both.insert(v);

  IntersectionResult res = axis_intersection(a, b);
  switch (res.kind) {
    case IntersectionKind::Empty:
      REQUIRE(both.empty());
      break;
    case IntersectionKind::Vertex:
      REQUIRE(both.size() == 1);
      REQUIRE(*both.begin() == res.vertex->address.letters);
      break;
    case IntersectionKind::Segment: {
      std::set<Letters> seg;
      Letters cur = res.segment->start.address.letters;
      seg.insert(cur);
      for (Letter l : res.segment->label.letters) {
        reduce_append(cur, l);
        seg.insert(cur);
      }
      // the whole segment must fit inside the window for the check to bind
      for (const Letters& v : seg) REQUIRE(static_cast<std::int64_t>(v.size()) <= cutoff);
      REQUIRE(both == seg);
      break;
    }
    case IntersectionKind::SameLine:
      REQUIRE(sa == sb);
      REQUIRE_FALSE(sa.empty());
      break;
  }
}

}  // namespace

TEST_CASE("axis construction and errors") {
  REQUIRE_THROWS_WITH(axis_of(rw("")), Catch::Matchers::ContainsSubstring("identity"));

  Axis a1 = axis_of(rw("xyxyx"));
  REQUIRE(a1.conjugator.empty());
  REQUIRE(to_string(a1.core) == "xyxyx");

  Axis a2 = axis_of(rw("xyX"));
  REQUIRE(to_string(a2.conjugator) == "x");
  REQUIRE(to_string(a2.core) == "y");
}

TEST_CASE("translation length") {
  REQUIRE(translation_length(rw("xyxyx")) == 5);
  REQUIRE(translation_length(rw("xyX")) == 1);
  REQUIRE(translation_length(rw("")) == 0);
  REQUIRE(translation_length(free_reduce(parse_word("Xxyxyxx"))) == 5);
}

TEST_CASE("minimal displacement equals the core length on windows") {
  for (const char* s : {"xyxyx", "xyX", "yxY", "xxyxy", "yxyyxyyx"}) {
    ReducedWord g = rw(s);
    Axis a = axis_of(g);
    std::size_t want = translation_length(g);
    // on-axis vertices displace exactly by the translation length
    for (std::int64_t c = -4; c <= 4; ++c) {
      TreeVertex v = a.vertex_at(c);
      ReducedWord moved = concat(concat(invert(v.address), g), v.address);
      REQUIRE(moved.size() == want);
    }
    // neighbors off the axis displace strictly farther
    TreeVertex v0 = a.vertex_at(0);
    for (int l = 0; l < 4; ++l) {
      ReducedWord n = concat(v0.address, ReducedWord({Letter(l)}));
      if (a.contains(TreeVertex{n})) continue;
      ReducedWord moved = concat(concat(invert(n), g), n);
      REQUIRE(moved.size() > want);
    }
  }
}

TEST_CASE("axis window examples") {
  auto w = axis_window(axis_of(rw("x")), 2);
  std::set<Letters> got;
  for (const TreeVertex& v : w) got.insert(v.address.letters);
  std::set<Letters> expect = {rw("XX").letters, rw("X").letters, rw("").letters, rw("x").letters,
                              rw("xx").letters};
  REQUIRE(got == expect);

  auto w2 = axis_window(axis_of(rw("xy")), 2);
  std::set<Letters> got2;
  for (const TreeVertex& v : w2) got2.insert(v.address.letters);
  REQUIRE(got2.count(rw("").letters) == 1);
  REQUIRE(got2.count(rw("x").letters) == 1);
  REQUIRE(got2.count(rw("xy").letters) == 1);

  Axis a = axis_of(rw("yxY"));
  for (int r = 1; r <= 6; ++r) {
    auto big = axis_window(a, r + 1);
    auto small = axis_window(a, r);
    REQUIRE(big.size() >= small.size());
    REQUIRE(big.size() - small.size() <= 2);
  }
}

TEST_CASE("intersection examples") {
  Axis l = axis_of(rw("xyxyx"));
  REQUIRE(axis_intersection(l, l).kind == IntersectionKind::SameLine);
  REQUIRE(axis_intersection(l, axis_of(invert(rw("xyxyx")))).kind == IntersectionKind::SameLine);
  REQUIRE(axis_intersection(l, axis_of(rw("xyxyxxyxyx"))).kind == IntersectionKind::SameLine);

  auto v = axis_intersection(axis_of(rw("x")), axis_of(rw("y")));
  REQUIRE(v.kind == IntersectionKind::Vertex);
  REQUIRE(v.vertex->address.empty());

  // lines {x^n} and {y x^n} are disjoint
  auto e = axis_intersection(axis_of(rw("x")), axis_of(rw("yxY")));
  REQUIRE(e.kind == IntersectionKind::Empty);

  // axis of the rotation-by-2 conjugate meets the reference axis in xyx
  auto s = axis_intersection(l, axis_of(conjugate(rw("YX"), rw("xyxyx"))));
  REQUIRE(s.kind == IntersectionKind::Segment);
  REQUIRE(to_string(s.segment->label) == "xyx");
  REQUIRE(s.segment->start.address.empty());
}

TEST_CASE("intersection agrees with the windowed oracle (exhaustive small)") {
  std::vector<Axis> axes;
  std::vector<ReducedWord> gs = reduced_words_up_to(2);
  for (int n = 1; n <= 3; ++n)
    for_each_cyclically_reduced(n, [&](const Letters& core) {
      Axis base = axis_of(ReducedWord(core));
      for (const ReducedWord& g : gs) axes.push_back(translate_axis(g, base));
    });
  for (std::size_t i = 0; i < axes.size(); i += 7)
    for (std::size_t j = 0; j < axes.size(); j += 5)
      check_against_oracle(axes[i], axes[j]);
}

TEST_CASE("intersection agrees with the windowed oracle (random at spec sizes)") {
  std::mt19937_64 rng(20260810);
  std::vector<ReducedWord> cores;
  for (int n = 1; n <= 6; ++n)
    for_each_cyclically_reduced(n, [&](const Letters& ls) { cores.emplace_back(ls); });
  std::vector<ReducedWord> gs = reduced_words_up_to(3);
  std::uniform_int_distribution<std::size_t> dc(0, cores.size() - 1);
  std::uniform_int_distribution<std::size_t> dg(0, gs.size() - 1);
  for (int trial = 0; trial < 4000; ++trial) {
    Axis a = translate_axis(gs[dg(rng)], axis_of(cores[dc(rng)]));
    Axis b = translate_axis(gs[dg(rng)], axis_of(cores[dc(rng)]));
    check_against_oracle(a, b);
  }
}

TEST_CASE("translate_axis matches conjugation and is equivariant") {
  std::mt19937_64 rng(99);
  std::vector<ReducedWord> gs = reduced_words_up_to(3);
  std::vector<ReducedWord> cores;
  for (int n = 1; n <= 4; ++n)
    for_each_cyclically_reduced(n, [&](const Letters& ls) { cores.emplace_back(ls); });
  std::uniform_int_distribution<std::size_t> dc(0, cores.size() - 1);
  std::uniform_int_distribution<std::size_t> dg(0, gs.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    ReducedWord g = gs[dg(rng)], h = gs[dg(rng)], w = cores[dc(rng)];
    Axis a = axis_of(w);
    Axis t1 = translate_axis(g, translate_axis(h, a));
    Axis t2 = translate_axis(concat(g, h), a);
    REQUIRE(axis_intersection(t1, t2).kind == IntersectionKind::SameLine);
    REQUIRE(t1.element() == t2.element());
    // identity action
    REQUIRE(translate_axis(rw(""), a).element() == a.element());
  }
}

TEST_CASE("the element translates its axis toward the attracting end") {
  for (const char* s : {"xy", "xyxyx", "xxyxy", "yxyyxyyx"}) {
    ReducedWord g = rw(s);
    Axis a = axis_of(g);
    auto L = static_cast<std::int64_t>(a.core.size());
    for (std::int64_t c = -3; c <= 3; ++c) {
      ReducedWord moved = concat(g, a.vertex_at(c).address);
      REQUIRE(moved == a.vertex_at(c + L).address);
    }
  }
}

TEST_CASE("intersection label length bound for conjugate axes (small exhaustive)") {
  // distinct axes of conjugates overlap in at most L(W) - 2 edges
  std::vector<ReducedWord> gs = reduced_words_up_to(3);
  for (int n = 2; n <= 4; ++n)
    for_each_cyclically_reduced(n, [&](const Letters& ls) {
      ReducedWord w(ls);
      Axis lam = axis_of(w);
      for (const ReducedWord& g : gs) {
        Axis translated = translate_axis(g, lam);
        IntersectionResult r = axis_intersection(lam, translated);
        if (r.kind == IntersectionKind::Segment)
          REQUIRE(r.segment->label.size() <= w.size() - 2);
      }
    });
}

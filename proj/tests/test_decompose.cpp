#include <catch2/catch_amalgamated.hpp>

#include "conjax/decompose.hpp"
#include "conjax/enumerate.hpp"
#include "conjax/runs.hpp"

using namespace conjax;

namespace {

ReducedWord rw(const char* s) { return parse_reduced(s); }
CyclicWord cw(const char* s) { return CyclicWord(parse_reduced(s)); }

}  // namespace

TEST_CASE("nonequivalent occurrences") {
  REQUIRE(find_nonequivalent_occurrence(cw("xyxyx"), rw("xyx")) == std::vector<int>{2});
  REQUIRE(find_nonequivalent_occurrence(cw("yxyyxyyx"), rw("yxyyxy")) == std::vector<int>{3});
  REQUIRE(find_nonequivalent_occurrence(cw("xy"), rw("x")).empty());
  REQUIRE_THROWS(find_nonequivalent_occurrence(cw("xy"), rw("y")));
  REQUIRE_THROWS(find_nonequivalent_occurrence(cw("xy"), rw("")));
}

TEST_CASE("covering-overlap decomposition examples") {
  auto o1 = cover_decompose(cw("yxyyxyyx"), 6);
  REQUIRE(o1.status == CoverDecomposeStatus::Ok);
  REQUIRE(to_string(o1.decomposition->B) == "");
  REQUIRE(to_string(o1.decomposition->C) == "yxy");
  REQUIRE(o1.decomposition->k == 2);
  REQUIRE(to_string(o1.decomposition->I) == "yx");
  REQUIRE(o1.shift == 3);

  auto o2 = cover_decompose(cw("yxyxyyxyxyyx"), 10);
  REQUIRE(o2.status == CoverDecomposeStatus::Ok);
  REQUIRE(to_string(o2.decomposition->B) == "");
  REQUIRE(to_string(o2.decomposition->C) == "yxyxy");
  REQUIRE(o2.decomposition->k == 2);
  REQUIRE(to_string(o2.decomposition->I) == "yx");

  // boundary occurrence: the second copy starts exactly at the overlap's end
  auto o3 = cover_decompose(cw("xyxxy"), 3);
  REQUIRE(o3.status == CoverDecomposeStatus::Ok);
  REQUIRE(to_string(o3.decomposition->C) == "xyx");
  REQUIRE(o3.decomposition->k == 1);
  REQUIRE(to_string(o3.decomposition->I) == "xy");
}

TEST_CASE("degenerate and inconclusive outcomes") {
  auto deg = cover_decompose(cw("xyxy"), 2);
  REQUIRE(deg.status == CoverDecomposeStatus::Degenerate);

  // the overlap repeats but every period dies before the copy ends
  auto inc = cover_decompose(cw("xxxyxxxY"), 2);
  REQUIRE(inc.status == CoverDecomposeStatus::Inconclusive);
  auto inc2 = cover_decompose(cw("xyxY"), 1);
  REQUIRE(inc2.status == CoverDecomposeStatus::Inconclusive);

  auto none = cover_decompose(cw("xyyy"), 1);
  REQUIRE(none.status == CoverDecomposeStatus::NoOccurrence);

  REQUIRE_THROWS(cover_decompose(cw("xyxyx"), 0));
  REQUIRE_THROWS(cover_decompose(cw("xyxyx"), 5));
}

TEST_CASE("verification of decompositions") {
  CyclicWord w = cw("yxyyxyyx");
  REQUIRE(verify_decomposition(w, Decomposition{rw(""), rw("yxy"), 2, rw("yx")}));
  REQUIRE_FALSE(verify_decomposition(w, Decomposition{rw(""), rw("yxy"), 2, rw("xy")}));
  REQUIRE(verify_decomposition(w, Decomposition{rw(""), w.word(), 1, rw("")}));
  REQUIRE_FALSE(verify_decomposition(w, Decomposition{rw(""), w.word(), 0, rw("")}));
}

TEST_CASE("terminal complement of the initial subword") {
  Decomposition d{rw(""), rw("yxy"), 2, rw("yx")};
  REQUIRE(to_string(remark_terminal(d)) == "y");
  Decomposition d2{rw("x"), rw("yx"), 2, rw("")};
  REQUIRE(to_string(remark_terminal(d2)) == "yx");
}

TEST_CASE("every covering edge-disjoint configuration decomposes (lengths 2..8)") {
  for (int n = 2; n <= 8; ++n)
    for (const CyclicWord& w : enumerate_cyclically_reduced(n, true))
      for (const OverlapConfig& cfg : configs_for(w)) {
        CyclicWord wa = w.rotated(cfg.anchor);
        auto out = cover_decompose(wa, static_cast<int>(cfg.run_u.length()));
        INFO("word " << to_string(w) << " anchor " << cfg.anchor << " u "
                     << cfg.run_u.length());
        REQUIRE(out.status == CoverDecomposeStatus::Ok);
        REQUIRE(verify_decomposition(wa, *out.decomposition));
      }
}

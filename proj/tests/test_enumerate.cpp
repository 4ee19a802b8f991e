#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "conjax/enumerate.hpp"

using namespace conjax;

TEST_CASE("cyclically reduced counts match the closed form") {
  // 3^n + 1 + (2 if n even) for n >= 1
  std::vector<std::size_t> expected = {4, 12, 28, 84, 244, 732};
  for (int n = 1; n <= 6; ++n) {
    auto words = enumerate_cyclically_reduced(n, false);
    REQUIRE(words.size() == expected[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("raw enumeration agrees with filtering all reduced words") {
  for (int n = 1; n <= 6; ++n) {
    std::size_t filtered = 0, total = 0;
    for_each_reduced(n, [&](const Letters& ls) {
      ++total;
      if (n < 2 || ls.back() != inverse(ls.front())) ++filtered;
    });
    std::size_t reduced_count = 4;
    for (int i = 1; i < n; ++i) reduced_count *= 3;
    REQUIRE(total == reduced_count);
    REQUIRE(enumerate_cyclically_reduced(n, false).size() == filtered);
  }
}

TEST_CASE("symmetry reduction keeps exactly one representative per orbit") {
  for (int n = 1; n <= 5; ++n) {
    auto reps = enumerate_cyclically_reduced(n, true);
    std::set<Letters> canon_of_reps;
    for (const CyclicWord& w : reps) {
      REQUIRE(canonical_cyclic_form(w.rot) == w.rot);
      canon_of_reps.insert(w.rot);
    }
    REQUIRE(canon_of_reps.size() == reps.size());
    // every word's canonical form is among the representatives
    std::set<Letters> seen;
    for (const CyclicWord& w : enumerate_cyclically_reduced(n, false))
      seen.insert(canonical_cyclic_form(w.rot));
    REQUIRE(seen == canon_of_reps);
  }
}

TEST_CASE("letter automorphisms commute with inverse") {
  for (const auto& table : letter_automorphisms()) {
    std::set<Letter> image;
    for (int v = 0; v < 4; ++v) {
      Letter l = Letter(v);
      image.insert(table[static_cast<std::size_t>(v)]);
      REQUIRE(table[static_cast<std::uint8_t>(inverse(l))] ==
              inverse(table[static_cast<std::uint8_t>(l)]));
    }
    REQUIRE(image.size() == 4);
  }
}

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "conjax/cyclic.hpp"
#include "conjax/word.hpp"

namespace conjax {

// All freely reduced words of length exactly n, lexicographic in the
// letter order x < y < X < Y.
inline void for_each_reduced(int n, const std::function<void(const Letters&)>& fn) {
  Letters cur;
  cur.reserve(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      fn(cur);
      return;
    }
    for (std::uint8_t v = 0; v < 4; ++v) {
      Letter l = Letter(v);
      if (!cur.empty() && l == inverse(cur.back())) continue;
      cur.push_back(l);
      self(self, depth + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

// All freely reduced words of length <= n (including the empty word).
inline std::vector<ReducedWord> reduced_words_up_to(int n) {
  std::vector<ReducedWord> out;
  out.emplace_back();
  for (int k = 1; k <= n; ++k)
    for_each_reduced(k, [&](const Letters& ls) { out.emplace_back(ls); });
  return out;
}

inline void for_each_cyclically_reduced(int n, const std::function<void(const Letters&)>& fn) {
  for_each_reduced(n, [&](const Letters& ls) {
    if (n >= 2 && ls.back() == inverse(ls.front())) return;
    fn(ls);
  });
}

// The eight letter automorphisms: swap the two generators and/or invert
// either one. Each is a permutation of the alphabet commuting with inverse.
inline const std::array<std::array<Letter, 4>, 8>& letter_automorphisms() {
  static const auto tables = [] {
    std::array<std::array<Letter, 4>, 8> out{};
    int idx = 0;
    for (int swap = 0; swap < 2; ++swap)
      for (int ix = 0; ix < 2; ++ix)
        for (int iy = 0; iy < 2; ++iy) {
          for (std::uint8_t v = 0; v < 4; ++v) {
            Letter l = Letter(v);
            bool isx = (l == Letter::x || l == Letter::X);
            bool inv = (l == Letter::X || l == Letter::Y);
            if (isx && ix) inv = !inv;
            if (!isx && iy) inv = !inv;
            if (swap) isx = !isx;
            Letter m = isx ? (inv ? Letter::X : Letter::x) : (inv ? Letter::Y : Letter::y);
            out[static_cast<std::size_t>(idx)][v] = m;
          }
          ++idx;
        }
    return out;
  }();
  return tables;
}

// Least representative of the orbit of a cyclically reduced word under
// rotation, inversion, and the letter automorphisms.
inline Letters canonical_cyclic_form(const Letters& w) {
  const auto n = static_cast<std::int64_t>(w.size());
  Letters best = w;
  for (const auto& table : letter_automorphisms()) {
    Letters img(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
      img[i] = table[static_cast<std::uint8_t>(w[i])];
    for (int invpass = 0; invpass < 2; ++invpass) {
      Letters v = invpass ? invert_letters(img) : img;
      for (std::int64_t r = 0; r < n; ++r) {
        Letters cand(w.size());
        for (std::int64_t i = 0; i < n; ++i)
          cand[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>((i + r) % n)];
        if (cand < best) best = cand;
      }
    }
  }
  return best;
}

// Cyclically reduced words of length exactly n in lexicographic order;
// with modulo_symmetry only orbit representatives (canonical forms) are kept.
inline std::vector<CyclicWord> enumerate_cyclically_reduced(int n, bool modulo_symmetry) {
  std::vector<CyclicWord> out;
  for_each_cyclically_reduced(n, [&](const Letters& ls) {
    if (modulo_symmetry && canonical_cyclic_form(ls) != ls) return;
    out.emplace_back(ls);
  });
  return out;
}

}  // namespace conjax

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "conjax/cyclic.hpp"
#include "conjax/runs.hpp"
#include "conjax/tripod.hpp"
#include "conjax/word.hpp"

namespace conjax {

// W = D . C^k with k > 1 and the two conjugates equal to C^r D C^(k-r) and
// C^s D C^(k-s) for some r != s in [0, k].
struct ConjectureWitness {
  ReducedWord D;
  ReducedWord C;
  int k = 0;
  int r = 0;
  int s = 0;
};

struct ConjectureResult {
  std::optional<ConjectureWitness> witness;
  // a witness exists when the conjugate words may be any rotation, but not
  // under the position-matched window constraint
  bool near_miss = false;
};

namespace detail {

inline bool rotation_matches(const CyclicWord& w, const Letters& target,
                             const std::vector<bool>& allowed) {
  const auto L = static_cast<std::int64_t>(w.size());
  for (std::int64_t j = 0; j < L; ++j) {
    if (!allowed[static_cast<std::size_t>(j)]) continue;
    bool eq = true;
    for (std::int64_t i = 0; i < L && eq; ++i)
      eq = w.at(j + i) == target[static_cast<std::size_t>(i)];
    if (eq) return true;
  }
  return false;
}

inline std::optional<ConjectureWitness> conjecture_search(const CyclicWord& w,
                                                          const std::vector<bool>& ju,
                                                          const std::vector<bool>& jv) {
  const auto L = static_cast<std::int64_t>(w.size());
  for (std::int64_t c = 1; c <= L / 2; ++c) {
    for (int k = 2; static_cast<std::int64_t>(k) * c <= L; ++k) {
      std::int64_t dlen = L - static_cast<std::int64_t>(k) * c;
      // W = D C^k with C the repeated suffix block
      bool split_ok = true;
      for (std::int64_t i = dlen; i + c < L && split_ok; ++i)
        split_ok = w.at(i) == w.at(i + c);
      if (!split_ok) continue;
      ReducedWord d = w.segment(0, dlen);
      ReducedWord cw = w.segment(dlen, dlen + c);
      auto form = [&](int r) {
        Letters out;
        out.reserve(static_cast<std::size_t>(L));
        for (int i = 0; i < r; ++i)
          out.insert(out.end(), cw.letters.begin(), cw.letters.end());
        out.insert(out.end(), d.letters.begin(), d.letters.end());
        for (int i = r; i < k; ++i)
          out.insert(out.end(), cw.letters.begin(), cw.letters.end());
        return out;
      };
      for (int r = 0; r <= k; ++r) {
        Letters fr = form(r);
        if (!rotation_matches(w, fr, ju)) continue;
        for (int s = 0; s <= k; ++s) {
          if (s == r) continue;
          if (!rotation_matches(w, form(s), jv)) continue;
          return ConjectureWitness{d, cw, k, r, s};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Exhaustive conjecture-form search for a covering edge-disjoint overlap
// configuration. The conjugate words are matched against the rotations the
// two overlap windows can carry; witnesses are returned in lexicographic
// (L(C), r, s) order.
inline ConjectureResult conjecture_form_check(const OverlapConfig& cfg, const CyclicWord& w) {
  const auto L = static_cast<std::int64_t>(w.size());
  CyclicWord wa = w.rotated(cfg.anchor);
  if (cfg.run_v.lo != cfg.run_u.hi || cfg.run_u.lo != 0)
    throw std::invalid_argument("configuration is not an anchored edge-disjoint cover");
  if (cfg.run_u.length() + cfg.run_v.length() < L)
    throw std::invalid_argument("configuration does not cover the designated copy");

  auto ju = detail::window_rotations(L, cfg.run_u.shift, cfg.run_u.lo, cfg.run_u.hi);
  auto jv = detail::window_rotations(L, cfg.run_v.shift, cfg.run_v.lo, cfg.run_v.hi);

  ConjectureResult out;
  out.witness = detail::conjecture_search(wa, ju, jv);
  if (!out.witness) {
    std::vector<bool> all(static_cast<std::size_t>(L), true);
    out.near_miss = detail::conjecture_search(wa, all, all).has_value();
  }
  return out;
}

}  // namespace conjax

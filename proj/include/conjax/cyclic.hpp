#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "conjax/word.hpp"

namespace conjax {

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline bool is_cyclically_reduced(const Letters& ls) {
  if (!is_freely_reduced(ls)) return false;
  if (ls.size() >= 2 && ls.back() == inverse(ls.front())) return false;
  return true;
}

// Cyclically reduced word with a designated starting rotation. Indexing
// extends bi-infinitely: at(i) is the letter of the periodization at
// position i.
struct CyclicWord {
  Letters rot;

  CyclicWord() = default;
  explicit CyclicWord(Letters ls) : rot(std::move(ls)) {
    if (!is_cyclically_reduced(rot))
      throw std::invalid_argument("word is not cyclically reduced");
  }
  explicit CyclicWord(const ReducedWord& w) : CyclicWord(w.letters) {}

  std::size_t size() const { return rot.size(); }
  bool empty() const { return rot.empty(); }

  Letter at(std::int64_t i) const {
    return rot[static_cast<std::size_t>(floor_mod(i, static_cast<std::int64_t>(rot.size())))];
  }

  ReducedWord word() const { return ReducedWord(rot); }

  // Label of the periodization over [lo, hi). Any factor of the
  // periodization of a cyclically reduced word is freely reduced.
  ReducedWord segment(std::int64_t lo, std::int64_t hi) const {
    Letters out;
    out.reserve(static_cast<std::size_t>(hi > lo ? hi - lo : 0));
    for (std::int64_t i = lo; i < hi; ++i) out.push_back(at(i));
    return ReducedWord(std::move(out));
  }

  CyclicWord rotated(std::int64_t k) const {
    Letters out;
    out.reserve(rot.size());
    for (std::size_t i = 0; i < rot.size(); ++i)
      out.push_back(at(k + static_cast<std::int64_t>(i)));
    return CyclicWord(std::move(out));
  }

  bool operator==(const CyclicWord&) const = default;
};

inline std::string to_string(const CyclicWord& w) {
  std::string s;
  s.reserve(w.rot.size());
  for (Letter l : w.rot) s.push_back(to_char(l));
  return s;
}

// w = conjugator . core . conjugator^-1, reduced as written, with the
// shortest such conjugator.
struct CyclicDecomposition {
  ReducedWord conjugator;
  CyclicWord core;
};

inline CyclicDecomposition cyclic_reduce(const ReducedWord& w) {
  const Letters& v = w.letters;
  std::size_t i = 0, j = v.size();
  while (j - i >= 2 && v[j - 1] == inverse(v[i])) {
    ++i;
    --j;
  }
  CyclicDecomposition d;
  d.conjugator = ReducedWord(Letters(v.begin(), v.begin() + i));
  d.core = CyclicWord(Letters(v.begin() + i, v.begin() + j));
  return d;
}

// a . core . a^-1 as a reduced word (no cancellation occurs at either
// junction by construction).
inline ReducedWord element_of(const CyclicDecomposition& d) {
  Letters out = d.conjugator.letters;
  out.insert(out.end(), d.core.rot.begin(), d.core.rot.end());
  Letters back = invert_letters(d.conjugator.letters);
  out.insert(out.end(), back.begin(), back.end());
  return ReducedWord(std::move(out));
}

// Smallest rotation offset j >= 0 with rotated(j) letterwise equal to v,
// if one exists.
inline std::optional<std::int64_t> rotation_index_of(const CyclicWord& w, const CyclicWord& v) {
  if (w.size() != v.size()) return std::nullopt;
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(w.size()); ++j) {
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i)
      ok = w.at(j + static_cast<std::int64_t>(i)) == v.rot[i];
    if (ok) return j;
  }
  return std::nullopt;
}

}  // namespace conjax

#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conjax/letter.hpp"

namespace conjax {

using Letters = std::vector<Letter>;

inline bool is_freely_reduced(const Letters& ls) {
  for (std::size_t i = 1; i < ls.size(); ++i)
    if (ls[i] == inverse(ls[i - 1])) return false;
  return true;
}

// A raw word over the alphabet; may contain cancelling pairs.
struct Word {
  Letters letters;

  Word() = default;
  explicit Word(Letters ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const Word&) const = default;
};

// Freely reduced word: the normal form of a group element.
struct ReducedWord {
  Letters letters;

  ReducedWord() = default;
  explicit ReducedWord(Letters ls) : letters(std::move(ls)) {
    assert(is_freely_reduced(letters));
  }

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  auto operator<=>(const ReducedWord&) const = default;
};

inline Word parse_word(std::string_view text) {
  Letters ls;
  ls.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto l = letter_from_char(text[i]);
    if (!l)
      throw std::invalid_argument("invalid character '" + std::string(1, text[i]) +
                                  "' at index " + std::to_string(i));
    ls.push_back(*l);
  }
  return Word(std::move(ls));
}

template <class W>
inline std::string to_string(const W& w) {
  std::string s;
  s.reserve(w.letters.size());
  for (Letter l : w.letters) s.push_back(to_char(l));
  return s;
}

inline void reduce_append(Letters& out, Letter l) {
  if (!out.empty() && out.back() == inverse(l))
    out.pop_back();
  else
    out.push_back(l);
}

inline ReducedWord free_reduce(const Letters& ls) {
  Letters out;
  out.reserve(ls.size());
  for (Letter l : ls) reduce_append(out, l);
  return ReducedWord(std::move(out));
}

inline ReducedWord free_reduce(const Word& w) { return free_reduce(w.letters); }
inline ReducedWord free_reduce(const ReducedWord& w) { return w; }

inline Letters invert_letters(const Letters& ls) {
  Letters out;
  out.reserve(ls.size());
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

inline ReducedWord invert(const ReducedWord& w) {
  return ReducedWord(invert_letters(w.letters));
}

inline ReducedWord concat(const ReducedWord& u, const ReducedWord& v) {
  Letters out = u.letters;
  out.reserve(u.size() + v.size());
  for (Letter l : v.letters) reduce_append(out, l);
  return ReducedWord(std::move(out));
}

// conjugate(g, w) = g w g^-1, freely reduced.
inline ReducedWord conjugate(const ReducedWord& g, const ReducedWord& w) {
  return concat(concat(g, w), invert(g));
}

inline bool is_initial_subword(const ReducedWord& p, const ReducedWord& w) {
  if (p.size() > w.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.letters[i] != w.letters[i]) return false;
  return true;
}

inline bool is_terminal_subword(const ReducedWord& s, const ReducedWord& w) {
  if (s.size() > w.size()) return false;
  std::size_t off = w.size() - s.size();
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.letters[i] != w.letters[off + i]) return false;
  return true;
}

inline ReducedWord parse_reduced(std::string_view text) {
  Word w = parse_word(text);
  if (!is_freely_reduced(w.letters))
    throw std::invalid_argument("word is not freely reduced: " + std::string(text));
  return ReducedWord(std::move(w.letters));
}

}  // namespace conjax

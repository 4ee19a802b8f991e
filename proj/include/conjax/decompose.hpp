#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "conjax/cyclic.hpp"
#include "conjax/periodicity.hpp"
#include "conjax/word.hpp"

namespace conjax {

// W = B . C^k . I with B a terminal subword of C and I an initial subword
// of C, k > 0.
struct Decomposition {
  ReducedWord B;
  ReducedWord C;
  int k = 0;
  ReducedWord I;
};

inline bool verify_decomposition(const CyclicWord& w, const Decomposition& d) {
  if (d.k <= 0 || d.C.empty()) return false;
  if (!is_terminal_subword(d.B, d.C)) return false;
  if (!is_initial_subword(d.I, d.C)) return false;
  Letters built = d.B.letters;
  for (int i = 0; i < d.k; ++i)
    built.insert(built.end(), d.C.letters.begin(), d.C.letters.end());
  built.insert(built.end(), d.I.letters.begin(), d.I.letters.end());
  return built == w.rot;
}

// With C = I . T, the terminal complement T of the initial subword I.
inline ReducedWord remark_terminal(const Decomposition& d) {
  return ReducedWord(Letters(d.C.letters.begin() + static_cast<std::ptrdiff_t>(d.I.size()),
                             d.C.letters.end()));
}

// All shifts t in [1, L-1] at which the periodization contains another copy
// of U (U must sit at position 0 of the designated copy).
inline std::vector<int> find_nonequivalent_occurrence(const CyclicWord& w,
                                                      const ReducedWord& u) {
  const auto L = static_cast<std::int64_t>(w.size());
  const auto n = static_cast<std::int64_t>(u.size());
  if (n < 1) throw std::invalid_argument("occurrence search needs a nonempty subword");
  for (std::int64_t i = 0; i < n; ++i)
    if (w.at(i) != u.letters[static_cast<std::size_t>(i)])
      throw std::invalid_argument("subword does not sit at position 0 of the copy");
  std::vector<int> out;
  for (int t = 1; t < L; ++t) {
    bool ok = true;
    for (std::int64_t i = 0; i < n && ok; ++i)
      ok = w.at(t + i) == u.letters[static_cast<std::size_t>(i)];
    if (ok) out.push_back(t);
  }
  return out;
}

enum class CoverDecomposeStatus {
  Ok,
  Inconclusive,   // the period does not propagate across the whole word
  Degenerate,     // W = U^2: the three axes would coincide
  NoOccurrence,   // no nonequivalent copy of U begins inside U
};

struct CoverDecomposeOutcome {
  CoverDecomposeStatus status = CoverDecomposeStatus::NoOccurrence;
  std::optional<Decomposition> decomposition;
  int shift = 0;            // occurrence shift or linear period used
  bool via_period = false;  // decomposed by the copy's linear period
  std::string message;
};

namespace detail {

// Period-p decomposition anchored so that the block boundary sits at rem:
// B = the first rem letters, then floor((L - rem)/p) blocks, then the
// leftover prefix of the block.
inline Decomposition periodic_split(const CyclicWord& w, int p, int rem) {
  const auto L = static_cast<std::int64_t>(w.size());
  Decomposition d;
  d.B = w.segment(0, rem);
  d.C = w.segment(rem, rem + p);
  d.k = static_cast<int>((L - rem) / p);
  d.I = w.segment(rem + static_cast<std::int64_t>(d.k) * p, L);
  return d;
}

}  // namespace detail

// Decomposition of a word covered by two edge-disjoint conjugate overlaps,
// where the first overlap is the initial u_len letters of the designated
// copy. An occurrence of the overlap at shift t makes the copy t-periodic
// on [0, u_len); the smallest shift whose period reaches across the whole
// copy yields the decomposition. When no occurrence shift extends, the
// smallest linear period of the copy is used instead (this covers the case
// of a shorter initial overlap, where the occurrence structure lives on the
// terminal one).
inline CoverDecomposeOutcome cover_decompose(const CyclicWord& w, int u_len) {
  const auto L = static_cast<std::int64_t>(w.size());
  if (u_len < 1 || u_len >= L)
    throw std::invalid_argument("overlap length must satisfy 1 <= u_len < L(W)");

  CoverDecomposeOutcome out;
  ReducedWord u = w.segment(0, u_len);

  if (2 * u_len == L && w.segment(u_len, L) == u) {
    out.status = CoverDecomposeStatus::Degenerate;
    out.message = "W is the square of the overlap; the axes coincide";
    return out;
  }

  std::vector<int> occ = find_nonequivalent_occurrence(w, u);
  for (int t : occ) {
    // known t-periodic on [0, u_len); check the tail of [0, L - t)
    bool extends = true;
    for (std::int64_t i = u_len; i < L - t && extends; ++i) extends = w.at(i) == w.at(i + t);
    if (!extends) continue;
    out.status = CoverDecomposeStatus::Ok;
    out.decomposition = detail::periodic_split(w, t, t <= u_len ? u_len % t : 0);
    out.shift = t;
    return out;
  }

  // smallest linear period of the whole copy
  for (int p = 1; p < L; ++p) {
    bool periodic = true;
    for (std::int64_t i = 0; i + p < L && periodic; ++i) periodic = w.at(i) == w.at(i + p);
    if (!periodic) continue;
    out.status = CoverDecomposeStatus::Ok;
    out.decomposition = detail::periodic_split(w, p, 0);
    out.shift = p;
    out.via_period = true;
    return out;
  }

  if (!occ.empty()) {
    out.status = CoverDecomposeStatus::Inconclusive;
    out.message = "the overlap union is a proper subword of W";
  } else {
    out.status = CoverDecomposeStatus::NoOccurrence;
    out.message = "no nonequivalent copy of the overlap begins inside it";
  }
  return out;
}

}  // namespace conjax

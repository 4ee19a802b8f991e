#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "conjax/cyclic.hpp"
#include "conjax/word.hpp"

namespace conjax {

// u = B . C^k with C the final d letters of u and B a terminal subword of C.
struct PeriodicDecomposition {
  ReducedWord B;
  ReducedWord C;
  int k = 0;
};

// Requires 0 < d < L(u) and u[i] == u[i+d] on the whole overlap.
inline PeriodicDecomposition periodicity_decompose(const ReducedWord& u, int d) {
  const auto n = static_cast<int>(u.size());
  if (d <= 0 || d >= n)
    throw std::invalid_argument("shift must satisfy 0 < d < L(u)");
  for (int i = 0; i + d < n; ++i)
    if (u.letters[i] != u.letters[i + d])
      throw std::invalid_argument("periodicity fails at index " + std::to_string(i));
  PeriodicDecomposition out;
  out.k = n / d;
  int rem = n - out.k * d;
  out.B = ReducedWord(Letters(u.letters.begin(), u.letters.begin() + rem));
  out.C = ReducedWord(Letters(u.letters.end() - d, u.letters.end()));
  return out;
}

// c = root^m with m maximal; the root length is the smallest period of c
// dividing L(c). The cyclic flag only adds a cyclic-reducedness check.
inline std::pair<ReducedWord, int> primitive_root(const ReducedWord& c, bool cyclically_closed) {
  const auto n = static_cast<int>(c.size());
  if (n == 0) throw std::invalid_argument("primitive root of the empty word");
  if (cyclically_closed && !is_cyclically_reduced(c.letters))
    throw std::invalid_argument("word is not cyclically reduced");
  for (int p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (int i = 0; i + p < n && ok; ++i) ok = c.letters[i] == c.letters[i + p];
    if (ok)
      return {ReducedWord(Letters(c.letters.begin(), c.letters.begin() + p)), n / p};
  }
  return {c, 1};  // unreachable: p == n always matches
}

// Group-level primitive root: w = r^m with r not a proper power. Used for
// centralizer questions; commuting reduced words share this root.
inline ReducedWord group_primitive_root(const ReducedWord& w) {
  if (w.empty()) throw std::invalid_argument("primitive root of the identity");
  CyclicDecomposition d = cyclic_reduce(w);
  auto [c0, m] = primitive_root(d.core.word(), true);
  (void)m;
  return concat(concat(d.conjugator, c0), invert(d.conjugator));
}

}  // namespace conjax

#pragma once

#include <cstdint>
#include <vector>

#include "conjax/axis.hpp"
#include "conjax/cyclic.hpp"
#include "conjax/word.hpp"

namespace conjax {

// Maximal interval [lo, hi) on which the periodization agrees with its
// t-shift. Stored with lo normalized into [0, L); hi may exceed L.
struct MatchRun {
  int shift = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  ReducedWord label;

  std::int64_t length() const { return hi - lo; }
};

struct RunScan {
  std::vector<MatchRun> runs;
  // shifts whose agreement set is everything: the t-shifted line coincides
  // with the original (the word is a proper power aligned at t)
  std::vector<int> full_shifts;
};

inline RunScan match_runs(const CyclicWord& w) {
  RunScan out;
  const auto L = static_cast<std::int64_t>(w.size());
  for (int t = 1; t < L; ++t) {
    std::vector<bool> agree(static_cast<std::size_t>(L));
    bool all = true, none = true;
    for (std::int64_t i = 0; i < L; ++i) {
      bool eq = w.at(i) == w.at(i + t);
      agree[static_cast<std::size_t>(i)] = eq;
      all = all && eq;
      none = none && !eq;
    }
    if (all) {
      out.full_shifts.push_back(t);
      continue;
    }
    if (none) continue;
    // maximal runs of the L-periodic agreement set, one representative each
    for (std::int64_t s = 0; s < L; ++s) {
      if (!agree[static_cast<std::size_t>(s)]) continue;
      if (agree[static_cast<std::size_t>(floor_mod(s - 1, L))]) continue;  // not a run start
      std::int64_t e = s;
      while (agree[static_cast<std::size_t>(floor_mod(e, L))]) ++e;
      out.runs.push_back(MatchRun{t, s, e, w.segment(s, e)});
    }
  }
  return out;
}

// Conjugator realizing the run's line: the axis of (conjugate(g, w)) meets
// the axis of w exactly in the run's interval with the run's label.
inline ReducedWord run_conjugator(const CyclicWord& w, int shift, std::int64_t lo) {
  ReducedWord p = w.segment(0, lo);
  ReducedWord m = w.segment(lo, lo + shift);
  return concat(concat(p, invert(m)), invert(p));
}

// A covering, edge-disjoint pair of runs: the copy of the word is designated
// to start at the U-run's start (anchor); in anchored coordinates the U-run
// is [0, u) and the V-run is [u, u + v) with u + v >= L.
struct OverlapConfig {
  std::int64_t anchor = 0;  // position of the designated copy in the original rotation
  MatchRun run_u;           // anchored coordinates: lo == 0
  MatchRun run_v;           // anchored coordinates: lo == length of run_u
};

inline std::vector<OverlapConfig> configs_for(const CyclicWord& w) {
  std::vector<OverlapConfig> out;
  const auto L = static_cast<std::int64_t>(w.size());
  RunScan scan = match_runs(w);
  for (const MatchRun& ru : scan.runs) {
    const std::int64_t a = ru.lo;
    const std::int64_t u = ru.length();
    for (const MatchRun& rv : scan.runs) {
      // translate rv so that it starts exactly where the U-run ends
      if (floor_mod(rv.lo - (a + u), L) != 0) continue;
      const std::int64_t v = rv.length();
      if (u + v < L) continue;  // does not cover the designated copy
      CyclicWord wa = w.rotated(a);
      MatchRun au{ru.shift, 0, u, wa.segment(0, u)};
      MatchRun av{rv.shift, u, u + v, wa.segment(u, u + v)};
      out.push_back(OverlapConfig{a, au, av});
    }
  }
  return out;
}

}  // namespace conjax

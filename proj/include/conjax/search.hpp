#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "conjax/conjecture.hpp"
#include "conjax/decompose.hpp"
#include "conjax/enumerate.hpp"
#include "conjax/json_io.hpp"
#include "conjax/runs.hpp"

namespace conjax {

struct ConfigRecord {
  OverlapConfig cfg;
  CoverDecomposeOutcome outcome;
  ConjectureResult conjecture;
};

struct SearchRecord {
  CyclicWord w;
  std::vector<int> full_shifts;
  std::vector<ConfigRecord> configs;
  bool counterexample = false;
};

// Full analysis of one word: every covering edge-disjoint overlap
// configuration with its decomposition outcome and conjecture check.
inline SearchRecord analyze_word(const CyclicWord& w) {
  SearchRecord rec;
  rec.w = w;
  rec.full_shifts = match_runs(w).full_shifts;
  for (OverlapConfig& cfg : configs_for(w)) {
    ConfigRecord cr;
    cr.cfg = cfg;
    CyclicWord wa = w.rotated(cfg.anchor);
    cr.outcome = cover_decompose(wa, static_cast<int>(cfg.run_u.length()));
    cr.conjecture = conjecture_form_check(cfg, w);
    if (!cr.conjecture.witness) rec.counterexample = true;
    rec.configs.push_back(std::move(cr));
  }
  return rec;
}

inline ojson json_of(const ConfigRecord& c) {
  ojson j;
  j["anchor"] = c.cfg.anchor;
  j["run_u"] = json_of(c.cfg.run_u);
  j["run_v"] = json_of(c.cfg.run_v);
  j["covers"] = true;
  j["meet"] = "point";
  j["decomposition"] = json_of(c.outcome);
  j["conjecture"] = json_of(c.conjecture);
  return j;
}

inline ojson json_of(const SearchRecord& r) {
  ojson j;
  j["v"] = 1;
  j["word"] = to_string(r.w);
  j["len"] = r.w.size();
  j["full_period_shifts"] = r.full_shifts;
  j["configs"] = ojson::array();
  for (const ConfigRecord& c : r.configs) j["configs"].push_back(json_of(c));
  j["counterexample"] = r.counterexample;
  return j;
}

struct SearchOptions {
  int max_len = 2;
  bool symmetry = true;
  int jobs = 0;  // 0: hardware concurrency
};

struct SearchSummary {
  std::uint64_t words = 0;
  std::uint64_t configs = 0;
  std::uint64_t decompositions = 0;
  std::uint64_t failures = 0;
  std::uint64_t witnesses = 0;
  std::uint64_t near_misses = 0;
  std::uint64_t counterexamples = 0;
};

inline ojson json_of(const SearchSummary& s, const SearchOptions& opt) {
  ojson j;
  j["v"] = 1;
  j["max_len"] = opt.max_len;
  j["symmetry"] = opt.symmetry;
  j["words"] = s.words;
  j["configs"] = s.configs;
  j["decompositions"] = s.decompositions;
  j["failures"] = s.failures;
  j["witnesses"] = s.witnesses;
  j["near_misses"] = s.near_misses;
  j["counterexamples"] = s.counterexamples;
  return j;
}

namespace detail {

inline void tally(const SearchRecord& rec, SearchSummary& sum) {
  ++sum.words;
  sum.configs += rec.configs.size();
  for (const ConfigRecord& c : rec.configs) {
    if (c.outcome.status == CoverDecomposeStatus::Ok)
      ++sum.decompositions;
    else
      ++sum.failures;
    if (c.conjecture.witness)
      ++sum.witnesses;
    else if (c.conjecture.near_miss)
      ++sum.near_misses;
  }
  if (rec.counterexample) ++sum.counterexamples;
}

}  // namespace detail

// Deterministic search over all cyclically reduced words up to max_len:
// output ordering is by length then lexicographic regardless of job count.
inline SearchSummary run_search(const SearchOptions& opt,
                                const std::function<void(const std::string&)>& emit_line) {
  SearchSummary sum;
  int jobs = opt.jobs > 0 ? opt.jobs
                          : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (int n = 2; n <= opt.max_len; ++n) {
    std::vector<CyclicWord> words = enumerate_cyclically_reduced(n, opt.symmetry);
    std::vector<std::string> lines(words.size());
    std::vector<SearchSummary> partial(static_cast<std::size_t>(jobs));
    std::vector<std::thread> pool;
    std::size_t chunk = (words.size() + static_cast<std::size_t>(jobs) - 1) /
                        static_cast<std::size_t>(jobs);
    if (chunk == 0) chunk = 1;
    for (int t = 0; t < jobs; ++t) {
      std::size_t lo = static_cast<std::size_t>(t) * chunk;
      if (lo >= words.size()) break;
      std::size_t hi = std::min(words.size(), lo + chunk);
      pool.emplace_back([&, lo, hi, t] {
        for (std::size_t i = lo; i < hi; ++i) {
          SearchRecord rec = analyze_word(words[i]);
          detail::tally(rec, partial[static_cast<std::size_t>(t)]);
          lines[i] = json_of(rec).dump();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const SearchSummary& p : partial) {
      sum.words += p.words;
      sum.configs += p.configs;
      sum.decompositions += p.decompositions;
      sum.failures += p.failures;
      sum.witnesses += p.witnesses;
      sum.near_misses += p.near_misses;
      sum.counterexamples += p.counterexamples;
    }
    for (const std::string& l : lines) emit_line(l);
  }
  return sum;
}

}  // namespace conjax

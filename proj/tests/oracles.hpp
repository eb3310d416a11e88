// Test-only oracles, coded independently of the library paths they check:
// brute-force scans, an alternative reduction strategy, and a bidirectional
// relation-chain prover. Nothing here is linked into the library.

#ifndef SEMIKIT_TESTS_ORACLES_HPP_
#define SEMIKIT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "semikit/acts.hpp"
#include "semikit/rewriting.hpp"
#include "semikit/tables.hpp"
#include "semikit/words.hpp"

namespace semikit::oracles {

// Quadratic scan: positions where pattern occurs in w.
inline std::vector<std::size_t> occurrences_brute(Word const& pattern,
                                                  Word const& w) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p + pattern.size() <= w.size(); ++p) {
    bool hit = true;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      if (w[p + i] != pattern[i]) {
        hit = false;
        break;
      }
    }
    if (hit) {
      out.push_back(p);
    }
  }
  return out;
}

// Normal form under the opposite strategy: rightmost position, highest rule
// index. On complete systems it must agree with the library strategy.
inline std::optional<Word> normal_form_rightmost(Word w,
                                                 RewriteSystem const& rs,
                                                 std::size_t step_limit) {
  for (std::size_t steps = 0;; ++steps) {
    std::optional<std::pair<std::size_t, std::size_t>> redex;
    for (std::size_t pos = w.size(); pos-- > 0 && !redex;) {
      for (std::size_t r = rs.rules().size(); r-- > 0;) {
        auto const& lhs = rs.rules()[r].lhs;
        if (pos + lhs.size() <= w.size() &&
            std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) {
          redex = {pos, r};
          break;
        }
      }
    }
    if (!redex) {
      return w;
    }
    if (steps == step_limit) {
      return std::nullopt;
    }
    w = apply_rule_at(w, rs.rules()[redex->second], redex->first);
  }
}

// All total self-maps of t that are endomorphisms, by the n^n scan.
inline std::vector<std::vector<element_type>> endomorphisms_total_scan(
    MulTable const& t) {
  auto const n = static_cast<element_type>(t.size());
  std::vector<std::vector<element_type>> out;
  std::vector<element_type> img(n, 0);
  for (;;) {
    bool good = true;
    for (element_type x = 0; x < n && good; ++x) {
      for (element_type y = 0; y < n; ++y) {
        if (img[t.product(x, y)] != t.product(img[x], img[y])) {
          good = false;
          break;
        }
      }
    }
    if (good) {
      out.push_back(img);
    }
    element_type i = n;
    while (i-- > 0) {
      if (++img[i] < n) {
        break;
      }
      img[i] = 0;
      if (i == 0) {
        return out;
      }
    }
  }
}

// Product-closed subsets of size n-k by filtering every subset of {0..n-1}.
inline std::vector<std::vector<element_type>> cofinite_subsets_scan(
    MulTable const& t, std::size_t k) {
  std::size_t const n = t.size();
  std::vector<std::vector<element_type>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<element_type> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        subset.push_back(static_cast<element_type>(i));
      }
    }
    if (subset.size() != n - k) {
      continue;
    }
    bool closed = true;
    for (element_type x : subset) {
      for (element_type y : subset) {
        if (!std::binary_search(subset.begin(), subset.end(),
                                t.product(x, y))) {
          closed = false;
          break;
        }
      }
      if (!closed) {
        break;
      }
    }
    if (closed) {
      out.push_back(std::move(subset));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Second act-endomorphism enumerator: recursive backtracking over state
// images with incremental consistency pruning.
inline void act_endos_backtrack_rec(Act const& act,
                                    std::vector<state_type>& img,
                                    std::size_t next,
                                    std::vector<std::vector<state_type>>& out) {
  std::size_t const n = act.num_states();
  if (next == n) {
    out.push_back(img);
    return;
  }
  for (state_type v = 0; v < n; ++v) {
    img[next] = v;
    bool ok = true;
    // Check every constraint whose endpoints are already assigned.
    for (std::size_t s = 0; s <= next && ok; ++s) {
      for (letter_type g = 0; g < act.generators().size(); ++g) {
        state_type const t = act.step(static_cast<state_type>(s), g);
        if (t > next) {
          continue;
        }
        if (img[t] != act.step(img[s], g)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      act_endos_backtrack_rec(act, img, next + 1, out);
    }
  }
  img[next] = 0;
}

inline std::vector<std::vector<state_type>> act_endomorphisms_backtracking(
    Act const& act) {
  std::vector<std::vector<state_type>> out;
  std::vector<state_type> img(act.num_states(), 0);
  act_endos_backtrack_rec(act, img, 0, out);
  return out;
}

// Bidirectional relation-chain prover: searches for a chain of relation
// applications (both directions) from u to v, bounded by word length and
// visited-set size. A `true` answer certifies u = v in the presented
// semigroup independently of any rewriting system.
inline bool provably_equal_by_relation_chain(
    Word const& u, Word const& v,
    std::vector<std::pair<Word, Word>> const& relations, std::size_t max_len,
    std::size_t max_visited) {
  if (u == v) {
    return true;
  }
  std::set<Word> visited{u};
  std::deque<Word> queue{u};
  while (!queue.empty() && visited.size() < max_visited) {
    Word const w = std::move(queue.front());
    queue.pop_front();
    for (auto const& [left, right] : relations) {
      for (auto const* dir : {&left, &right}) {
        Word const& from = *dir;
        Word const& to = (dir == &left) ? right : left;
        if (from.size() > w.size()) {
          continue;
        }
        for (std::size_t p = 0; p + from.size() <= w.size(); ++p) {
          if (!std::equal(from.begin(), from.end(), w.begin() + p)) {
            continue;
          }
          Word next;
          next.reserve(w.size() - from.size() + to.size());
          next.insert(next.end(), w.begin(), w.begin() + p);
          next.insert(next.end(), to.begin(), to.end());
          next.insert(next.end(), w.begin() + p + from.size(), w.end());
          if (next.size() > max_len || !visited.insert(next).second) {
            continue;
          }
          if (next == v) {
            return true;
          }
          queue.push_back(std::move(next));
        }
      }
    }
  }
  return false;
}

}  // namespace semikit::oracles

#endif  // SEMIKIT_TESTS_ORACLES_HPP_

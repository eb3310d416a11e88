#include "semikit/rewriting.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>

#include "semikit/exception.hpp"

namespace semikit {

RewriteSystem::RewriteSystem(Alphabet alphabet, std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    auto const& r = rules_[i];
    if (r.lhs.empty()) {
      throw InvalidInput("rule " + std::to_string(i + 1) +
                         " has an empty left-hand side");
    }
    if (r.lhs == r.rhs) {
      throw InvalidInput("rule " + std::to_string(i + 1) +
                         " rewrites a word to itself");
    }
    if (!alphabet_.contains(r.lhs) || !alphabet_.contains(r.rhs)) {
      throw InvalidInput("rule " + std::to_string(i + 1) +
                         " uses a letter outside the alphabet");
    }
  }
}

namespace {

bool matches_at(Word const& w, Word const& lhs, std::size_t pos) {
  return pos + lhs.size() <= w.size() &&
         std::equal(lhs.begin(), lhs.end(), w.begin() + pos);
}

}  // namespace

std::optional<Redex> find_redex(Word const& w, RewriteSystem const& rs) {
  auto const& rules = rs.rules();
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if (matches_at(w, rules[r].lhs, pos)) {
        return Redex{pos, r};
      }
    }
  }
  return std::nullopt;
}

Word apply_rule_at(Word const& w, Rule const& rule, std::size_t pos) {
  Word out;
  out.reserve(w.size() - rule.lhs.size() + rule.rhs.size());
  out.insert(out.end(), w.begin(), w.begin() + pos);
  out.insert(out.end(), rule.rhs.begin(), rule.rhs.end());
  out.insert(out.end(), w.begin() + pos + rule.lhs.size(), w.end());
  return out;
}

std::optional<Word> reduce_once(Word const& w, RewriteSystem const& rs) {
  auto redex = find_redex(w, rs);
  if (!redex) {
    return std::nullopt;
  }
  return apply_rule_at(w, rs.rules()[redex->rule], redex->pos);
}

NormalFormResult normal_form(Word w, RewriteSystem const& rs,
                             std::size_t step_limit) {
  if (step_limit < 1) {
    throw InvalidInput("step limit must be at least 1");
  }
  NormalFormResult result;
  while (auto redex = find_redex(w, rs)) {
    if (result.steps == step_limit) {
      return result;  // word stays empty
    }
    w = apply_rule_at(w, rs.rules()[redex->rule], redex->pos);
    ++result.steps;
  }
  result.word = std::move(w);
  return result;
}

bool is_irreducible(Word const& w, RewriteSystem const& rs) {
  return !find_redex(w, rs).has_value();
}

std::optional<std::size_t> first_unoriented_rule(RewriteSystem const& rs) {
  for (std::size_t i = 0; i < rs.rules().size(); ++i) {
    if (shortlex_cmp(rs.rules()[i].lhs, rs.rules()[i].rhs) !=
        std::strong_ordering::greater) {
      return i;
    }
  }
  return std::nullopt;
}

namespace {

Word concat(Word const& a, Word const& b, std::size_t b_from) {
  Word out;
  out.reserve(a.size() + b.size() - b_from);
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin() + b_from, b.end());
  return out;
}

void collect_pairs_of(std::vector<Rule> const& rules, std::size_t i,
                      std::size_t j, std::vector<CriticalPair>& out) {
  Word const& li = rules[i].lhs;
  Word const& lj = rules[j].lhs;

  // Proper overlaps: suffix of li of length o == prefix of lj, with both
  // halves extending beyond the shared part.
  std::size_t const max_o = std::min(li.size(), lj.size()) - 1;
  for (std::size_t o = 1; o <= max_o; ++o) {
    if (!std::equal(lj.begin(), lj.begin() + o, li.end() - o)) {
      continue;
    }
    CriticalPair cp;
    cp.overlap = concat(li, lj, o);
    cp.rule_a = i;
    cp.rule_b = j;
    cp.pos_a = 0;
    cp.pos_b = li.size() - o;
    cp.left = apply_rule_at(cp.overlap, rules[i], cp.pos_a);
    cp.right = apply_rule_at(cp.overlap, rules[j], cp.pos_b);
    out.push_back(std::move(cp));
  }

  // Containments of lj inside li (prefix and suffix positions included).
  // The identity containment of a rule in itself carries no information.
  if (lj.size() <= li.size()) {
    for (std::size_t p : find_occurrences(lj, li)) {
      if (i == j && p == 0 && lj.size() == li.size()) {
        continue;
      }
      CriticalPair cp;
      cp.overlap = li;
      cp.rule_a = i;
      cp.rule_b = j;
      cp.pos_a = 0;
      cp.pos_b = p;
      cp.left = rules[i].rhs;
      cp.right = apply_rule_at(li, rules[j], p);
      out.push_back(std::move(cp));
    }
  }
}

}  // namespace

std::vector<CriticalPair> critical_pairs(RewriteSystem const& rs) {
  auto const& rules = rs.rules();
  std::vector<CriticalPair> out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      collect_pairs_of(rules, i, j, out);
    }
  }
  std::sort(out.begin(), out.end(),
            [](CriticalPair const& a, CriticalPair const& b) {
              if (auto c = shortlex_cmp(a.overlap, b.overlap); c != 0) {
                return c < 0;
              }
              if (a.rule_a != b.rule_a) {
                return a.rule_a < b.rule_a;
              }
              if (a.rule_b != b.rule_b) {
                return a.rule_b < b.rule_b;
              }
              if (a.pos_a != b.pos_a) {
                return a.pos_a < b.pos_a;
              }
              return a.pos_b < b.pos_b;
            });
  std::set<std::pair<Word, Word>> seen;
  std::vector<CriticalPair> unique;
  unique.reserve(out.size());
  for (auto& cp : out) {
    if (seen.emplace(cp.left, cp.right).second) {
      unique.push_back(std::move(cp));
    }
  }
  return unique;
}

bool CompletenessVerdict::any_unknown() const noexcept {
  return std::any_of(unresolved.begin(), unresolved.end(),
                     [](Unresolved const& u) { return u.limit_hit; });
}

namespace {

// Joins one critical pair; returns an Unresolved record when the pair does
// not join (or a normal form ran out of steps).
std::optional<CompletenessVerdict::Unresolved> join_pair(
    CriticalPair const& cp, RewriteSystem const& rs, std::size_t step_limit) {
  auto nf_left = normal_form(cp.left, rs, step_limit);
  auto nf_right = normal_form(cp.right, rs, step_limit);
  if (!nf_left.ok() || !nf_right.ok()) {
    return CompletenessVerdict::Unresolved{cp.left, cp.right, true};
  }
  if (*nf_left.word != *nf_right.word) {
    return CompletenessVerdict::Unresolved{*nf_left.word, *nf_right.word,
                                           false};
  }
  return std::nullopt;
}

CompletenessVerdict check_complete_impl(RewriteSystem const& rs,
                                        std::size_t step_limit,
                                        bool parallel) {
  CompletenessVerdict verdict;
  verdict.unoriented_rule = first_unoriented_rule(rs);
  verdict.oriented = !verdict.unoriented_rule.has_value();

  auto pairs = critical_pairs(rs);
  std::vector<std::optional<CompletenessVerdict::Unresolved>> slots(
      pairs.size());

  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      slots[i] = join_pair(pairs[i], rs, step_limit);
    }
  } else {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      slots[i] = join_pair(pairs[i], rs, step_limit);
    }
  }

  for (auto& slot : slots) {
    if (slot) {
      verdict.unresolved.push_back(std::move(*slot));
    }
  }
  verdict.locally_confluent = verdict.unresolved.empty();
  return verdict;
}

}  // namespace

CompletenessVerdict check_complete(RewriteSystem const& rs,
                                   std::size_t step_limit) {
  return check_complete_impl(rs, step_limit, true);
}

namespace serial {
CompletenessVerdict check_complete(RewriteSystem const& rs,
                                   std::size_t step_limit) {
  return check_complete_impl(rs, step_limit, false);
}
}  // namespace serial

namespace {

struct KbRule {
  Word lhs;
  Word rhs;
  std::size_t id;  // index into the derivation log
};

struct PendingEq {
  Word left;
  Word right;
  KbDerivation::Entry genesis;  // lhs/rhs filled in on rule addition
};

Word kb_normal_form(Word w, std::vector<KbRule> const& rules,
                    std::size_t step_limit, bool& limit_hit) {
  std::size_t steps = 0;
  for (;;) {
    bool reduced = false;
    for (std::size_t pos = 0; pos < w.size() && !reduced; ++pos) {
      for (auto const& r : rules) {
        if (matches_at(w, r.lhs, pos)) {
          if (steps == step_limit) {
            limit_hit = true;
            return w;
          }
          Word next;
          next.reserve(w.size() - r.lhs.size() + r.rhs.size());
          next.insert(next.end(), w.begin(), w.begin() + pos);
          next.insert(next.end(), r.rhs.begin(), r.rhs.end());
          next.insert(next.end(), w.begin() + pos + r.lhs.size(), w.end());
          w = std::move(next);
          ++steps;
          reduced = true;
          break;
        }
      }
    }
    if (!reduced) {
      return w;
    }
  }
}

bool lhs_reducible_by_other(std::vector<KbRule> const& rules, std::size_t k) {
  Word const& lhs = rules[k].lhs;
  for (std::size_t m = 0; m < rules.size(); ++m) {
    if (m == k) {
      continue;
    }
    Word const& other = rules[m].lhs;
    if (other.size() < lhs.size()) {
      if (!find_occurrences(other, lhs).empty()) {
        return true;
      }
    } else if (other == lhs && m < k) {
      // Equal left-hand sides: the earlier rule survives.
      return true;
    }
  }
  return false;
}

RewriteSystem to_system(Alphabet const& alphabet,
                        std::vector<KbRule> const& rules) {
  std::vector<Rule> out;
  out.reserve(rules.size());
  for (auto const& r : rules) {
    out.push_back(Rule{r.lhs, r.rhs});
  }
  return RewriteSystem(alphabet, std::move(out));
}

}  // namespace

KbResult knuth_bendix(std::vector<std::pair<Word, Word>> const& relations,
                      Alphabet const& alphabet, KbOptions options) {
  if (options.max_rules < 1 || options.max_word_len < 1 ||
      options.step_limit < 1) {
    throw InvalidInput("completion bounds must be at least 1");
  }
  for (auto const& [u, v] : relations) {
    if (u.empty() || v.empty()) {
      throw InvalidInput("relation sides must be nonempty");
    }
    if (!alphabet.contains(u) || !alphabet.contains(v)) {
      throw InvalidInput("relation uses a letter outside the alphabet");
    }
  }

  KbDerivation log;
  std::vector<KbRule> rules;
  std::deque<PendingEq> pending;

  for (std::size_t i = 0; i < relations.size(); ++i) {
    KbDerivation::Entry genesis;
    genesis.source = KbDerivation::Source::relation;
    genesis.relation_index = i;
    pending.push_back(PendingEq{relations[i].first, relations[i].second,
                                std::move(genesis)});
  }

  auto fail = [&](KbResult::Status status) {
    return KbResult{status, to_system(alphabet, rules), std::move(log)};
  };

  // Rounds guard against pathological add/collapse cycling within bounds.
  std::size_t const max_rounds = 10'000;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    while (!pending.empty()) {
      PendingEq eq = std::move(pending.front());
      pending.pop_front();

      bool limit_hit = false;
      Word p = kb_normal_form(std::move(eq.left), rules, options.step_limit,
                              limit_hit);
      Word q = kb_normal_form(std::move(eq.right), rules, options.step_limit,
                              limit_hit);
      if (limit_hit) {
        return fail(KbResult::Status::step_limit_exceeded);
      }
      if (p == q) {
        continue;  // trivial (or already joinable) equation
      }
      if (shortlex_less(p, q)) {
        std::swap(p, q);
      }
      if (p.size() > options.max_word_len) {
        return fail(KbResult::Status::max_word_len_exceeded);
      }

      eq.genesis.lhs = p;
      eq.genesis.rhs = q;
      std::size_t const id = log.entries.size();
      log.entries.push_back(std::move(eq.genesis));
      rules.push_back(KbRule{std::move(p), std::move(q), id});
      if (rules.size() > options.max_rules) {
        return fail(KbResult::Status::max_rules_exceeded);
      }

      // Interreduce: normalize right-hand sides, then collapse rules whose
      // lhs became reducible, requeueing their equations.
      for (auto& r : rules) {
        bool rhs_limit = false;
        r.rhs = kb_normal_form(std::move(r.rhs), rules, options.step_limit,
                               rhs_limit);
        if (rhs_limit) {
          return fail(KbResult::Status::step_limit_exceeded);
        }
      }
      for (std::size_t k = 0; k < rules.size();) {
        if (lhs_reducible_by_other(rules, k)) {
          KbDerivation::Entry genesis;
          genesis.source = KbDerivation::Source::collapse;
          genesis.collapsed_from = rules[k].id;
          pending.push_back(PendingEq{std::move(rules[k].lhs),
                                      std::move(rules[k].rhs),
                                      std::move(genesis)});
          rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(k));
        } else {
          ++k;
        }
      }
    }

    // Find the canonically-least unresolved critical pair, if any.
    auto sys = to_system(alphabet, rules);
    auto pairs = critical_pairs(sys);
    bool found = false;
    for (auto& cp : pairs) {
      auto nf_left = normal_form(cp.left, sys, options.step_limit);
      auto nf_right = normal_form(cp.right, sys, options.step_limit);
      if (!nf_left.ok() || !nf_right.ok()) {
        return fail(KbResult::Status::step_limit_exceeded);
      }
      if (*nf_left.word == *nf_right.word) {
        continue;
      }
      KbDerivation::Entry genesis;
      genesis.source = KbDerivation::Source::critical_pair;
      genesis.overlap = cp.overlap;
      genesis.parent_a = rules[cp.rule_a].id;
      genesis.parent_b = rules[cp.rule_b].id;
      genesis.parent_rule_a = Rule{rules[cp.rule_a].lhs, rules[cp.rule_a].rhs};
      genesis.parent_rule_b = Rule{rules[cp.rule_b].lhs, rules[cp.rule_b].rhs};
      genesis.pos_a = cp.pos_a;
      genesis.pos_b = cp.pos_b;
      genesis.raw_left = cp.left;
      genesis.raw_right = cp.right;
      pending.push_back(PendingEq{std::move(*nf_left.word),
                                  std::move(*nf_right.word),
                                  std::move(genesis)});
      found = true;
      break;
    }
    if (!found) {
      return KbResult{KbResult::Status::completed, std::move(sys),
                      std::move(log)};
    }
  }
  return fail(KbResult::Status::step_limit_exceeded);
}

}  // namespace semikit

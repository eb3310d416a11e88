// Oriented string-rewriting systems: one-step reduction with a fixed
// deterministic strategy, normal forms, critical pairs, the completeness
// verdict, and bounded Knuth-Bendix completion.

#ifndef SEMIKIT_REWRITING_HPP_
#define SEMIKIT_REWRITING_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "semikit/words.hpp"

namespace semikit {

inline constexpr std::size_t kDefaultStepLimit = 10'000;
inline constexpr std::size_t kDefaultMaxRules = 200;
inline constexpr std::size_t kDefaultMaxWordLen = 64;

struct Rule {
  Word lhs;
  Word rhs;

  friend bool operator==(Rule const&, Rule const&) = default;
};

// Rules over a single alphabet. Rule list order is significant: reduction
// applies the lowest-index rule among those matching at the chosen position.
class RewriteSystem {
 public:
  RewriteSystem(Alphabet alphabet, std::vector<Rule> rules);

  Alphabet const& alphabet() const noexcept { return alphabet_; }
  std::vector<Rule> const& rules() const noexcept { return rules_; }

 private:
  Alphabet alphabet_;
  std::vector<Rule> rules_;
};

struct Redex {
  std::size_t pos;
  std::size_t rule;
};

// Leftmost match position; lowest rule index among rules matching there.
std::optional<Redex> find_redex(Word const& w, RewriteSystem const& rs);

// Applies the rule of the deterministic strategy once, or nothing if w is
// irreducible.
std::optional<Word> reduce_once(Word const& w, RewriteSystem const& rs);

// Applies rule `rule` at position `pos` (no matching check beyond bounds).
Word apply_rule_at(Word const& w, Rule const& rule, std::size_t pos);

struct NormalFormResult {
  std::optional<Word> word;  // absent iff the step limit was exhausted
  std::size_t steps = 0;

  bool ok() const noexcept { return word.has_value(); }
};

NormalFormResult normal_form(Word w, RewriteSystem const& rs,
                             std::size_t step_limit = kDefaultStepLimit);

bool is_irreducible(Word const& w, RewriteSystem const& rs);

// Index of the first rule whose lhs is not shortlex-greater than its rhs;
// absent iff every rule is a strict shortlex decrease (which certifies
// termination).
std::optional<std::size_t> first_unoriented_rule(RewriteSystem const& rs);

// A minimal overlap of two rule left-hand sides together with its two
// one-step reducts.
struct CriticalPair {
  Word overlap;
  std::size_t rule_a;  // applied at pos_a
  std::size_t rule_b;  // applied at pos_b
  std::size_t pos_a;
  std::size_t pos_b;
  Word left;   // overlap reduced by rule_a
  Word right;  // overlap reduced by rule_b
};

// Every proper overlap (nonempty proper suffix of lhs_a meets a proper
// prefix of lhs_b) and every containment of lhs_b inside lhs_a. Deduplicated
// on the reduct pair, ordered by (shortlex of overlap, rule_a, rule_b).
std::vector<CriticalPair> critical_pairs(RewriteSystem const& rs);

struct CompletenessVerdict {
  bool oriented = false;
  std::optional<std::size_t> unoriented_rule;
  bool locally_confluent = false;

  struct Unresolved {
    Word left;
    Word right;
    bool limit_hit = false;  // pair is "unknown": a normal form ran out of steps
  };
  std::vector<Unresolved> unresolved;

  bool complete() const noexcept { return oriented && locally_confluent; }
  bool any_unknown() const noexcept;
};

// Orientation plus joinability of every critical pair. Pair joining is run
// in parallel; unresolved pairs are reported in canonical pair order.
CompletenessVerdict check_complete(RewriteSystem const& rs,
                                   std::size_t step_limit = kDefaultStepLimit);

namespace serial {
// Single-threaded reference used by tests and the benchmark.
CompletenessVerdict check_complete(RewriteSystem const& rs,
                                   std::size_t step_limit = kDefaultStepLimit);
}  // namespace serial

struct KbOptions {
  std::size_t max_rules = kDefaultMaxRules;
  std::size_t max_word_len = kDefaultMaxWordLen;
  std::size_t step_limit = kDefaultStepLimit;
};

// Genesis record for every rule the completion ever added, in addition
// order. Rule ids are indices into this log; interreduction may later drop
// or renormalize a rule without touching its entry.
struct KbDerivation {
  enum class Source {
    relation,       // oriented input relation
    critical_pair,  // unresolved critical pair of two earlier rules
    collapse,       // requeued equation of a rule whose lhs became reducible
  };

  struct Entry {
    Source source;
    Word lhs;  // as added, after normalization and orientation
    Word rhs;
    // source == relation
    std::size_t relation_index = 0;
    // source == critical_pair
    Word overlap;
    std::size_t parent_a = 0;  // rule ids
    std::size_t parent_b = 0;
    Rule parent_rule_a;  // the parent rules as they stood when the pair formed
    Rule parent_rule_b;
    std::size_t pos_a = 0;
    std::size_t pos_b = 0;
    Word raw_left;  // the two one-step reducts of overlap
    Word raw_right;
    // source == collapse
    std::size_t collapsed_from = 0;  // rule id
  };

  std::vector<Entry> entries;
};

struct KbResult {
  enum class Status {
    completed,
    max_rules_exceeded,
    max_word_len_exceeded,
    step_limit_exceeded,
  };

  Status status;
  RewriteSystem system;  // completed, or partial when a bound tripped
  KbDerivation derivation;

  bool completed() const noexcept { return status == Status::completed; }
};

// Bounded completion: orient relations by shortlex, resolve critical pairs
// in canonical order (smallest overlap first), interreduce eagerly. Rules
// whose lhs collapses are removed and their equation requeued so the
// presented congruence is preserved. Deterministic.
KbResult knuth_bendix(std::vector<std::pair<Word, Word>> const& relations,
                      Alphabet const& alphabet, KbOptions options = {});

}  // namespace semikit

#endif  // SEMIKIT_REWRITING_HPP_

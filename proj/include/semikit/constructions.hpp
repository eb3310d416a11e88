// Composite structures: the product semigroup on (free words over A) union
// (states of an A-act), with free-part truncation by length, and the
// ascending tower semigroups built from monogenic levels together with the
// level-shift endomorphism of the identity-adjoined tower.

#ifndef SEMIKIT_CONSTRUCTIONS_HPP_
#define SEMIKIT_CONSTRUCTIONS_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "semikit/acts.hpp"
#include "semikit/tables.hpp"
#include "semikit/words.hpp"

namespace semikit {

// Either a nonempty free word over the act's generator alphabet (length
// capped by the ambient FxSemigroup) or an in-window act state.
class FxElement {
 public:
  static FxElement free_part(Word w);
  static FxElement act_part(state_type s);

  bool is_free() const noexcept { return is_free_; }
  Word const& word() const;
  state_type state() const;

  friend bool operator==(FxElement const& a, FxElement const& b) {
    return a.is_free_ == b.is_free_ && a.word_ == b.word_ &&
           a.state_ == b.state_;
  }
  // Free parts first (shortlex), then act parts by state index.
  friend bool operator<(FxElement const& a, FxElement const& b);

 private:
  FxElement() = default;
  bool is_free_ = false;
  Word word_;
  state_type state_ = 0;
};

// The semigroup on FreeParts union ActParts with
//   s t   = concatenation          (overflow above the length cap)
//   s x   = x
//   x s   = the act run of s from x (overflow when it leaves the window)
//   x y   = y
class FxSemigroup {
 public:
  FxSemigroup(Act act, std::size_t word_cap);

  Act const& act() const noexcept { return act_; }
  Alphabet const& free_alphabet() const noexcept { return act_.generators(); }
  std::size_t word_cap() const noexcept { return word_cap_; }

  // Absent result = overflow past the truncation boundary (not a
  // mathematical failure).
  std::optional<FxElement> multiply(FxElement const& e1,
                                    FxElement const& e2) const;

  // Free words of length 1..max_word_len in shortlex order, then all act
  // states ascending.
  std::vector<FxElement> universe(std::size_t max_word_len) const;

 private:
  Act act_;
  std::size_t word_cap_;
};

struct FxAssocVerdict {
  bool holds;
  std::size_t skipped = 0;  // triples with an overflow on either side
  std::optional<std::array<FxElement, 3>> witness;
};

// Exhaustive triple check over universe(sample_bound).
FxAssocVerdict check_fx_associative(FxSemigroup const& fx,
                                    std::size_t sample_bound);

namespace serial {
FxAssocVerdict check_fx_associative(FxSemigroup const& fx,
                                    std::size_t sample_bound);
}  // namespace serial

struct FxLiftVerdict {
  bool ok;
  std::size_t skipped = 0;
  std::optional<std::pair<FxElement, FxElement>> witness;
  // Non-skipped pairs checked per case family.
  std::size_t checked_free_free = 0;
  std::size_t checked_free_act = 0;
  std::size_t checked_act_free = 0;
  std::size_t checked_act_act = 0;

  bool all_cases_exercised() const noexcept {
    return checked_free_free > 0 && checked_free_act > 0 &&
           checked_act_free > 0 && checked_act_act > 0;
  }
};

// Lifts the state map m to the product semigroup as identity-on-words union
// m-on-states and checks the homomorphism equation on every pair of
// universe(fx.word_cap()) that stays in-window and inside m's domain.
FxLiftVerdict lift_act_morphism(FxSemigroup const& fx, StateMap const& m);

struct FxIdempotentsResult {
  std::vector<FxElement> elements;   // canonical universe order
  std::size_t overflow_skipped = 0;  // squares past the truncation boundary
};

// Elements e of universe(max_word_len) with e*e = e. Expected: exactly the
// act parts.
FxIdempotentsResult fx_idempotents(FxSemigroup const& fx,
                                   std::size_t max_word_len);

// The tower with `levels` levels, each a copy of monogenic(2, 2) on
// generators b1, b2, ...; products inside a level follow the monogenic
// table and products across levels yield the higher-level factor. Levels
// 1..n are product-closed, so the truncation is a genuine semigroup.
MulTable build_tower_t(std::size_t levels);

// build_tower_t(levels) extended by monogenic(2, 3) on generator a, with
// every mixed product yielding the tower-side factor.
MulTable build_tower_s(std::size_t levels);

// Element index helpers for the tower layouts.
element_type tower_element(std::size_t level, std::size_t power);   // T part
element_type tower_s_f_element(std::size_t levels, std::size_t power);  // a^power

struct TowerShiftReport {
  MulTable table;    // identity-adjoined tower on `levels` levels
  ElementMap map;    // level 1 -> identity, level i+1 -> level i, 1 -> 1
  bool homomorphism_ok;
  std::size_t failing_pairs;
  std::pair<element_type, element_type> collision;  // (b1, 1): equal images
  bool collision_ok;
  std::vector<element_type> image;  // ascending
  bool image_is_lower_truncation;   // image = levels 1..n-1 plus 1
};

// The level-shift endomorphism of the identity-adjoined tower, verified
// exhaustively on all pairs of the truncation.
TowerShiftReport tower_shift_endo(std::size_t levels);

// Elements x with x^m = x^k whose monogenic subsemigroup is not a group.
// Requires m > k >= 1.
std::vector<element_type> characterize_by_power_identity(MulTable const& t,
                                                         std::uint64_t m,
                                                         std::uint64_t k);

}  // namespace semikit

#endif  // SEMIKIT_CONSTRUCTIONS_HPP_

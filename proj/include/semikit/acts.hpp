// Semigroup acts as labeled transition structures over a free generating
// alphabet: finite acts, finite windows of infinite acts (with an explicit
// out-of-window sentinel), state maps and the act-morphism check, orbits,
// one-point extensions, a hopficity scan for small exact acts, and DOT
// export.

#ifndef SEMIKIT_ACTS_HPP_
#define SEMIKIT_ACTS_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "semikit/words.hpp"

namespace semikit {

using state_type = std::uint32_t;

// Transition target for steps that leave a finite window of an infinite act.
inline constexpr state_type kOutOfWindow =
    std::numeric_limits<state_type>::max();

inline constexpr std::size_t kDefaultActHopfCap = 10;

class Act {
 public:
  // step is row-major states x generators; kOutOfWindow entries are only
  // allowed when window_radius is set. A designated sink must absorb every
  // generator.
  Act(std::vector<std::string> state_names, Alphabet generators,
      std::vector<state_type> step, std::optional<state_type> sink,
      std::optional<std::size_t> window_radius);

  std::size_t num_states() const noexcept { return state_names_.size(); }
  Alphabet const& generators() const noexcept { return generators_; }
  std::vector<std::string> const& state_names() const noexcept {
    return state_names_;
  }
  std::string const& state_name(state_type s) const {
    return state_names_.at(s);
  }
  std::optional<state_type> state_index(std::string const& name) const;

  state_type step(state_type s, letter_type g) const {
    return step_[static_cast<std::size_t>(s) * generators_.size() + g];
  }
  // Runs a word letter by letter; absent when some step leaves the window.
  std::optional<state_type> run(state_type s, Word const& w) const;

  bool windowed() const noexcept { return window_radius_.has_value(); }
  std::optional<std::size_t> window_radius() const noexcept {
    return window_radius_;
  }
  std::optional<state_type> sink() const noexcept { return sink_; }

 private:
  std::vector<std::string> state_names_;
  Alphabet generators_;
  std::vector<state_type> step_;
  std::optional<state_type> sink_;
  std::optional<std::size_t> window_radius_;
};

// A state map, possibly undefined on boundary states whose images would
// leave the window. Images are always in-window states.
class StateMap {
 public:
  static constexpr state_type kNoImage =
      std::numeric_limits<state_type>::max();

  explicit StateMap(std::vector<state_type> image);

  std::size_t size() const noexcept { return image_.size(); }
  bool in_domain(state_type s) const { return image_.at(s) != kNoImage; }
  bool total() const;
  state_type at(state_type s) const { return image_.at(s); }
  std::vector<state_type> const& image() const noexcept { return image_; }

  friend bool operator==(StateMap const&, StateMap const&) = default;

 private:
  std::vector<state_type> image_;
};

struct MorphismVerdict {
  enum class Status { verified, partial, fails };
  Status status;
  std::size_t skipped = 0;  // (state, generator) pairs that touched the
                            // window boundary or left the map's domain
  state_type state = 0;     // first violation, canonical (state, generator)
  letter_type generator = 0;

  bool ok() const noexcept { return status != Status::fails; }
};

// Checks m(s . g) = m(s) . g for every s in m's domain and generator g,
// skipping pairs where either side leaves the window or the domain.
MorphismVerdict check_act_morphism(Act const& act, StateMap const& m);

// The windowed act of the rank-3 free semigroup on three tracks
// x_{-n..n}, y_{-n..n}, z_{1..n} plus an absorbing sink "0":
//   x_i.a = x_{i+1}   x_i.b = x_{i-1}   x_i.c = y_i
//   y_i.a = y_i.b = 0  y_i.c = y_i (i <= 0) or z_i (i > 0)
//   z_i.a = z_i.b = 0  z_i.c = z_i      0.g = 0
// together with the one-step left shift (x_i -> x_{i-1}, y_i -> y_{i-1},
// z_i -> z_{i-1} except z_1 -> y_0, 0 -> 0), undefined on x_{-n}, y_{-n}
// whose images would leave the window.
struct ShiftActBundle {
  Act act;
  StateMap shift;
};
ShiftActBundle build_shift_act(std::size_t radius);

// State index helpers for build_shift_act layouts.
state_type shift_state_x(std::size_t radius, std::ptrdiff_t i);
state_type shift_state_y(std::size_t radius, std::ptrdiff_t i);
state_type shift_state_z(std::size_t radius, std::size_t i);
state_type shift_state_sink(std::size_t radius);

struct OrbitResult {
  std::vector<state_type> states;  // ascending
  bool boundary_touched = false;   // some step left the window; the closure
                                   // under-approximates the true orbit
};
OrbitResult orbit(Act const& act, state_type s);

// Adds one fresh state `top_name` with top.g = x0 for every generator.
Act extend_with_top(Act const& act, state_type x0, std::string const& top_name);

// States with no in-window predecessor.
std::vector<state_type> indegree_zero(Act const& act);

// All act endomorphisms of an exact act, by full n^n scan, in lexicographic
// order of image tuples. Throws CapExceeded above the state cap and
// InvalidInput on windowed acts.
std::vector<StateMap> act_endomorphisms(Act const& act,
                                        std::size_t cap = kDefaultActHopfCap);

struct ActHopfVerdict {
  bool hopfian;
  std::optional<StateMap> counterexample;
};

// Scans all total state maps of an exact act for a surjective non-injective
// endomorphism.
ActHopfVerdict finite_act_hopfian(Act const& act,
                                  std::size_t cap = kDefaultActHopfCap);

namespace serial {
std::vector<StateMap> act_endomorphisms(Act const& act,
                                        std::size_t cap = kDefaultActHopfCap);
ActHopfVerdict finite_act_hopfian(Act const& act,
                                  std::size_t cap = kDefaultActHopfCap);
}  // namespace serial

// Deterministic DOT digraph: one node per state, one labeled edge per
// in-window transition. With hide_sink_edges, edges into the sink are
// omitted and a caption comment records the convention.
std::string act_to_dot(Act const& act, bool hide_sink_edges = true);

}  // namespace semikit

#endif  // SEMIKIT_ACTS_HPP_

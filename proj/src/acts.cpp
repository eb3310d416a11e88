#include "semikit/acts.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "semikit/exception.hpp"

namespace semikit {

Act::Act(std::vector<std::string> state_names, Alphabet generators,
         std::vector<state_type> step, std::optional<state_type> sink,
         std::optional<std::size_t> window_radius)
    : state_names_(std::move(state_names)),
      generators_(std::move(generators)),
      step_(std::move(step)),
      sink_(sink),
      window_radius_(window_radius) {
  std::size_t const n = state_names_.size();
  if (n == 0) {
    throw InvalidInput("an act needs at least one state");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (state_names_[i].empty()) {
      throw InvalidInput("state names must be nonempty");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (state_names_[i] == state_names_[j]) {
        throw InvalidInput("duplicate state name \"" + state_names_[i] + "\"");
      }
    }
  }
  if (step_.size() != n * generators_.size()) {
    throw InvalidInput("act step table has wrong shape");
  }
  for (state_type v : step_) {
    if (v == kOutOfWindow) {
      if (!window_radius_) {
        throw InvalidInput(
            "out-of-window transition in an act not marked as windowed");
      }
    } else if (v >= n) {
      throw InvalidInput("act transition target out of range");
    }
  }
  if (sink_) {
    if (*sink_ >= n) {
      throw InvalidInput("sink state out of range");
    }
    for (letter_type g = 0; g < generators_.size(); ++g) {
      if (this->step(*sink_, g) != *sink_) {
        throw InvalidInput("designated sink does not absorb generator \"" +
                           generators_.name(g) + "\"");
      }
    }
  }
}

std::optional<state_type> Act::state_index(std::string const& name) const {
  for (std::size_t i = 0; i < state_names_.size(); ++i) {
    if (state_names_[i] == name) {
      return static_cast<state_type>(i);
    }
  }
  return std::nullopt;
}

std::optional<state_type> Act::run(state_type s, Word const& w) const {
  state_type cur = s;
  for (letter_type l : w) {
    cur = step(cur, l);
    if (cur == kOutOfWindow) {
      return std::nullopt;
    }
  }
  return cur;
}

StateMap::StateMap(std::vector<state_type> image) : image_(std::move(image)) {
  for (state_type v : image_) {
    if (v != kNoImage && v >= image_.size()) {
      throw InvalidInput("state map image out of range");
    }
  }
}

bool StateMap::total() const {
  return std::all_of(image_.begin(), image_.end(),
                     [](state_type v) { return v != kNoImage; });
}

MorphismVerdict check_act_morphism(Act const& act, StateMap const& m) {
  if (m.size() != act.num_states()) {
    throw InvalidInput("state map size does not match the act");
  }
  MorphismVerdict verdict;
  verdict.skipped = 0;
  auto const n = static_cast<state_type>(act.num_states());
  for (state_type s = 0; s < n; ++s) {
    if (!m.in_domain(s)) {
      continue;
    }
    for (letter_type g = 0; g < act.generators().size(); ++g) {
      state_type const t = act.step(s, g);
      state_type const mt = act.step(m.at(s), g);
      if (t == kOutOfWindow || mt == kOutOfWindow || !m.in_domain(t)) {
        ++verdict.skipped;
        continue;
      }
      if (m.at(t) != mt) {
        verdict.status = MorphismVerdict::Status::fails;
        verdict.state = s;
        verdict.generator = g;
        return verdict;
      }
    }
  }
  verdict.status = (verdict.skipped == 0 && m.total())
                       ? MorphismVerdict::Status::verified
                       : MorphismVerdict::Status::partial;
  return verdict;
}

state_type shift_state_x(std::size_t radius, std::ptrdiff_t i) {
  return static_cast<state_type>(i + static_cast<std::ptrdiff_t>(radius));
}

state_type shift_state_y(std::size_t radius, std::ptrdiff_t i) {
  return static_cast<state_type>(2 * radius + 1 + i +
                                 static_cast<std::ptrdiff_t>(radius));
}

state_type shift_state_z(std::size_t radius, std::size_t i) {
  return static_cast<state_type>(2 * (2 * radius + 1) + i - 1);
}

state_type shift_state_sink(std::size_t radius) {
  return static_cast<state_type>(2 * (2 * radius + 1) + radius);
}

ShiftActBundle build_shift_act(std::size_t radius) {
  if (radius < 2) {
    throw InvalidInput("shift act window radius must be at least 2");
  }
  auto const n = static_cast<std::ptrdiff_t>(radius);

  std::vector<std::string> names;
  auto subscript = [](std::ptrdiff_t i) {
    return i < 0 ? "m" + std::to_string(-i) : std::to_string(i);
  };
  for (std::ptrdiff_t i = -n; i <= n; ++i) {
    names.push_back("x" + subscript(i));
  }
  for (std::ptrdiff_t i = -n; i <= n; ++i) {
    names.push_back("y" + subscript(i));
  }
  for (std::ptrdiff_t i = 1; i <= n; ++i) {
    names.push_back("z" + subscript(i));
  }
  names.push_back("0");

  Alphabet gens({"a", "b", "c"});
  state_type const sink = shift_state_sink(radius);
  std::vector<state_type> step(names.size() * 3, sink);

  auto set = [&](state_type s, letter_type g, state_type target) {
    step[static_cast<std::size_t>(s) * 3 + g] = target;
  };
  letter_type const a = 0;
  letter_type const b = 1;
  letter_type const c = 2;

  for (std::ptrdiff_t i = -n; i <= n; ++i) {
    state_type const x = shift_state_x(radius, i);
    set(x, a, i == n ? kOutOfWindow : shift_state_x(radius, i + 1));
    set(x, b, i == -n ? kOutOfWindow : shift_state_x(radius, i - 1));
    set(x, c, shift_state_y(radius, i));
  }
  for (std::ptrdiff_t i = -n; i <= n; ++i) {
    state_type const y = shift_state_y(radius, i);
    set(y, a, sink);
    set(y, b, sink);
    set(y, c, i <= 0 ? y : shift_state_z(radius, static_cast<std::size_t>(i)));
  }
  for (std::ptrdiff_t i = 1; i <= n; ++i) {
    state_type const z = shift_state_z(radius, static_cast<std::size_t>(i));
    set(z, a, sink);
    set(z, b, sink);
    set(z, c, z);
  }
  // Sink rows were initialized to the sink itself.

  Act act(std::move(names), std::move(gens), std::move(step), sink, radius);

  std::vector<state_type> image(act.num_states(), StateMap::kNoImage);
  for (std::ptrdiff_t i = -n + 1; i <= n; ++i) {
    image[shift_state_x(radius, i)] = shift_state_x(radius, i - 1);
    image[shift_state_y(radius, i)] = shift_state_y(radius, i - 1);
  }
  image[shift_state_z(radius, 1)] = shift_state_y(radius, 0);
  for (std::ptrdiff_t i = 2; i <= n; ++i) {
    image[shift_state_z(radius, static_cast<std::size_t>(i))] =
        shift_state_z(radius, static_cast<std::size_t>(i - 1));
  }
  image[sink] = sink;

  return ShiftActBundle{std::move(act), StateMap(std::move(image))};
}

OrbitResult orbit(Act const& act, state_type s) {
  if (s >= act.num_states()) {
    throw InvalidInput("orbit start state out of range");
  }
  OrbitResult result;
  std::vector<char> in(act.num_states(), 0);
  std::deque<state_type> queue{s};
  in[s] = 1;
  while (!queue.empty()) {
    state_type const cur = queue.front();
    queue.pop_front();
    for (letter_type g = 0; g < act.generators().size(); ++g) {
      state_type const t = act.step(cur, g);
      if (t == kOutOfWindow) {
        result.boundary_touched = true;
      } else if (!in[t]) {
        in[t] = 1;
        queue.push_back(t);
      }
    }
  }
  for (state_type i = 0; i < act.num_states(); ++i) {
    if (in[i]) {
      result.states.push_back(i);
    }
  }
  return result;
}

Act extend_with_top(Act const& act, state_type x0,
                    std::string const& top_name) {
  if (x0 >= act.num_states()) {
    throw InvalidInput("extension target state out of range");
  }
  if (act.state_index(top_name)) {
    throw InvalidInput("state name \"" + top_name + "\" already in use");
  }
  auto names = act.state_names();
  names.push_back(top_name);
  std::size_t const gens = act.generators().size();
  std::vector<state_type> step;
  step.reserve(names.size() * gens);
  for (state_type s = 0; s < act.num_states(); ++s) {
    for (letter_type g = 0; g < gens; ++g) {
      step.push_back(act.step(s, g));
    }
  }
  for (letter_type g = 0; g < gens; ++g) {
    step.push_back(x0);
  }
  return Act(std::move(names), act.generators(), std::move(step), act.sink(),
             act.window_radius());
}

std::vector<state_type> indegree_zero(Act const& act) {
  std::vector<char> hit(act.num_states(), 0);
  for (state_type s = 0; s < act.num_states(); ++s) {
    for (letter_type g = 0; g < act.generators().size(); ++g) {
      state_type const t = act.step(s, g);
      if (t != kOutOfWindow) {
        hit[t] = 1;
      }
    }
  }
  std::vector<state_type> out;
  for (state_type s = 0; s < act.num_states(); ++s) {
    if (!hit[s]) {
      out.push_back(s);
    }
  }
  return out;
}

namespace {

std::uint64_t pow_u64(std::uint64_t b, std::uint64_t e) {
  std::uint64_t out = 1;
  while (e-- > 0) {
    out *= b;
  }
  return out;
}

bool is_act_endomorphism(Act const& act, std::vector<state_type> const& img) {
  auto const n = static_cast<state_type>(act.num_states());
  for (state_type s = 0; s < n; ++s) {
    for (letter_type g = 0; g < act.generators().size(); ++g) {
      if (img[act.step(s, g)] != act.step(img[s], g)) {
        return false;
      }
    }
  }
  return true;
}

void decode_map(std::uint64_t rank, std::size_t n,
                std::vector<state_type>& img) {
  img.assign(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    img[i] = static_cast<state_type>(rank % n);
    rank /= n;
  }
}

void require_exact_and_capped(Act const& act, std::size_t cap) {
  if (act.windowed()) {
    throw InvalidInput("the full map scan only applies to exact acts");
  }
  if (act.num_states() > cap) {
    throw CapExceeded("act has " + std::to_string(act.num_states()) +
                      " states, above the scan cap of " + std::to_string(cap));
  }
}

std::vector<StateMap> act_endomorphisms_impl(Act const& act, std::size_t cap,
                                             bool parallel) {
  require_exact_and_capped(act, cap);
  std::size_t const n = act.num_states();
  std::uint64_t const total = pow_u64(n, n);

  std::vector<std::pair<std::uint64_t, std::vector<state_type>>> found;
  if (parallel) {
#pragma omp parallel
    {
      std::vector<std::pair<std::uint64_t, std::vector<state_type>>> local;
      std::vector<state_type> img;
#pragma omp for schedule(static) nowait
      for (std::uint64_t rank = 0; rank < total; ++rank) {
        decode_map(rank, n, img);
        if (is_act_endomorphism(act, img)) {
          local.emplace_back(rank, img);
        }
      }
#pragma omp critical
      found.insert(found.end(), std::make_move_iterator(local.begin()),
                   std::make_move_iterator(local.end()));
    }
    std::sort(found.begin(), found.end(),
              [](auto const& a, auto const& b) { return a.first < b.first; });
  } else {
    std::vector<state_type> img;
    for (std::uint64_t rank = 0; rank < total; ++rank) {
      decode_map(rank, n, img);
      if (is_act_endomorphism(act, img)) {
        found.emplace_back(rank, img);
      }
    }
  }

  std::vector<StateMap> out;
  out.reserve(found.size());
  for (auto& [rank, img] : found) {
    out.push_back(StateMap(std::move(img)));
  }
  return out;
}

ActHopfVerdict finite_act_hopfian_impl(Act const& act, std::size_t cap,
                                       bool parallel) {
  for (auto& m : act_endomorphisms_impl(act, cap, parallel)) {
    std::vector<char> hit(act.num_states(), 0);
    bool injective = true;
    for (state_type v : m.image()) {
      if (hit[v]) {
        injective = false;
      }
      hit[v] = 1;
    }
    bool const surjective =
        std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    if (surjective && !injective) {
      return ActHopfVerdict{false, std::move(m)};
    }
  }
  return ActHopfVerdict{true, std::nullopt};
}

}  // namespace

std::vector<StateMap> act_endomorphisms(Act const& act, std::size_t cap) {
  return act_endomorphisms_impl(act, cap, true);
}

ActHopfVerdict finite_act_hopfian(Act const& act, std::size_t cap) {
  return finite_act_hopfian_impl(act, cap, true);
}

namespace serial {
std::vector<StateMap> act_endomorphisms(Act const& act, std::size_t cap) {
  return act_endomorphisms_impl(act, cap, false);
}
ActHopfVerdict finite_act_hopfian(Act const& act, std::size_t cap) {
  return finite_act_hopfian_impl(act, cap, false);
}
}  // namespace serial

std::string act_to_dot(Act const& act, bool hide_sink_edges) {
  std::ostringstream out;
  out << "digraph act {\n";
  bool const hiding = hide_sink_edges && act.sink().has_value();
  if (hiding) {
    out << "  // the arrows not shown all point to \""
        << act.state_name(*act.sink()) << "\"\n";
  }
  out << "  rankdir=LR;\n";
  for (state_type s = 0; s < act.num_states(); ++s) {
    out << "  \"" << act.state_name(s) << "\";\n";
  }
  for (state_type s = 0; s < act.num_states(); ++s) {
    for (letter_type g = 0; g < act.generators().size(); ++g) {
      state_type const t = act.step(s, g);
      if (t == kOutOfWindow) {
        continue;
      }
      if (hiding && t == *act.sink()) {
        continue;
      }
      out << "  \"" << act.state_name(s) << "\" -> \"" << act.state_name(t)
          << "\" [label=\"" << act.generators().name(g) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace semikit

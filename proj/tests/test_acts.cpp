#include <doctest.h>

#include <fstream>
#include <sstream>

#include "semikit/acts.hpp"
#include "semikit/exception.hpp"

#include "oracles.hpp"

using namespace semikit;

namespace {

letter_type const kA = 0;
letter_type const kB = 1;
letter_type const kC = 2;

Act chain_act(std::vector<state_type> step, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("s" + std::to_string(i));
  }
  return Act(std::move(names), Alphabet({"g"}), std::move(step), std::nullopt,
             std::nullopt);
}

}  // namespace

TEST_CASE("act validation") {
  Alphabet g({"g"});
  // Out-of-window targets need the window tag.
  CHECK_THROWS_AS(Act({"s"}, g, {kOutOfWindow}, std::nullopt, std::nullopt),
                  InvalidInput);
  // A declared sink must absorb.
  CHECK_THROWS_AS(Act({"s", "t"}, g, {1, 0}, state_type{1}, std::nullopt),
                  InvalidInput);
  CHECK_THROWS_AS(Act({"s", "s"}, g, {0, 0}, std::nullopt, std::nullopt),
                  InvalidInput);
  CHECK_THROWS_AS(Act({"s"}, g, {4}, std::nullopt, std::nullopt), InvalidInput);
}

TEST_CASE("the windowed shift act matches its defining equations") {
  std::size_t const n = 2;
  auto [act, shift] = build_shift_act(n);
  CHECK(act.num_states() == 13);
  CHECK(act.windowed());

  CHECK(act.step(shift_state_x(n, 0), kC) == shift_state_y(n, 0));
  CHECK(act.step(shift_state_y(n, 1), kC) == shift_state_z(n, 1));
  CHECK(act.step(shift_state_y(n, 0), kC) == shift_state_y(n, 0));
  CHECK(act.step(shift_state_y(n, 1), kA) == shift_state_sink(n));
  CHECK(act.step(shift_state_x(n, 1), kA) == shift_state_x(n, 2));
  CHECK(act.step(shift_state_x(n, 2), kA) == kOutOfWindow);
  CHECK(act.step(shift_state_x(n, -2), kB) == kOutOfWindow);
  CHECK(act.step(shift_state_z(n, 2), kC) == shift_state_z(n, 2));
  CHECK(act.step(shift_state_sink(n), kB) == shift_state_sink(n));

  // The shift map: collision at y0, sink fixed, boundary undefined.
  CHECK(shift.at(shift_state_z(n, 1)) == shift_state_y(n, 0));
  CHECK(shift.at(shift_state_y(n, 1)) == shift_state_y(n, 0));
  CHECK(shift.at(shift_state_sink(n)) == shift_state_sink(n));
  CHECK(!shift.in_domain(shift_state_x(n, -2)));
  CHECK(!shift.in_domain(shift_state_y(n, -2)));
  CHECK(shift.in_domain(shift_state_z(n, 2)));

  CHECK_THROWS_AS(build_shift_act(1), InvalidInput);
}

TEST_CASE("the shift map is a morphism up to the window boundary") {
  for (std::size_t n : {2, 3, 5, 10}) {
    auto [act, shift] = build_shift_act(n);
    auto verdict = check_act_morphism(act, shift);
    CHECK(verdict.status == MorphismVerdict::Status::partial);
    CHECK(verdict.ok());
    CHECK(verdict.skipped == 2);
  }
}

TEST_CASE("identity is a verified morphism") {
  auto [act, shift] = build_shift_act(3);
  std::vector<state_type> id(act.num_states());
  for (state_type s = 0; s < act.num_states(); ++s) {
    id[s] = s;
  }
  auto verdict = check_act_morphism(act, StateMap(std::move(id)));
  CHECK(verdict.status == MorphismVerdict::Status::verified);
  CHECK(verdict.skipped == 0);
}

TEST_CASE("a corrupted shift map fails at the first bad pair") {
  std::size_t const n = 5;
  auto [act, shift] = build_shift_act(n);
  auto image = shift.image();
  image[shift_state_y(n, 0)] = shift_state_y(n, 0);  // instead of y_{-1}
  auto verdict = check_act_morphism(act, StateMap(std::move(image)));
  CHECK(verdict.status == MorphismVerdict::Status::fails);
  CHECK(verdict.state == shift_state_x(n, 0));
  CHECK(verdict.generator == kC);
}

TEST_CASE("orbits") {
  std::size_t const n = 3;
  auto [act, shift] = build_shift_act(n);

  auto sink_orbit = orbit(act, shift_state_sink(n));
  CHECK(sink_orbit.states == std::vector<state_type>{shift_state_sink(n)});
  CHECK(!sink_orbit.boundary_touched);

  auto z1_orbit = orbit(act, shift_state_z(n, 1));
  CHECK(z1_orbit.states ==
        std::vector<state_type>{shift_state_z(n, 1), shift_state_sink(n)});
  CHECK(!z1_orbit.boundary_touched);

  auto x0_orbit = orbit(act, shift_state_x(n, 0));
  CHECK(x0_orbit.states.size() == act.num_states());
  CHECK(x0_orbit.boundary_touched);
}

TEST_CASE("extend_with_top and indegree_zero") {
  std::size_t const n = 5;
  auto [act, shift] = build_shift_act(n);
  CHECK(indegree_zero(act).empty());

  auto extended = extend_with_top(act, shift_state_x(n, 0), "top");
  CHECK(extended.num_states() == act.num_states() + 1);
  state_type const top = static_cast<state_type>(extended.num_states() - 1);
  for (letter_type g = 0; g < 3; ++g) {
    CHECK(extended.step(top, g) == shift_state_x(n, 0));
  }
  CHECK(indegree_zero(extended) == std::vector<state_type>{top});

  CHECK_THROWS_AS(extend_with_top(act, shift_state_x(n, 0), "x0"),
                  InvalidInput);
}

TEST_CASE("surjective endomorphisms of top-extended acts fix top") {
  // Exact mock-up of the one-point extension: a chain entered from the top.
  Alphabet g({"g"});
  //   top -> s0 -> s1 -> s1
  Act mock({"s0", "s1", "top"}, g, {1, 1, 0}, std::nullopt, std::nullopt);
  auto endos = act_endomorphisms(mock);
  state_type const top = 2;
  for (auto const& m : endos) {
    std::vector<char> hit(mock.num_states(), 0);
    for (state_type v : m.image()) {
      hit[v] = 1;
    }
    bool const surjective =
        std::all_of(hit.begin(), hit.end(), [](char c) { return c; });
    if (surjective) {
      CHECK(m.at(top) == top);
      // On the orbit of top (everything) a top-fixing endomorphism is the
      // identity.
      for (state_type s = 0; s < mock.num_states(); ++s) {
        CHECK(m.at(s) == s);
      }
    }
  }
}

TEST_CASE("finite act hopficity on the corpus examples") {
  // One state, all self-loops.
  Alphabet g({"g"});
  Act one({"s"}, g, {0}, std::nullopt, std::nullopt);
  CHECK(finite_act_hopfian(one).hopfian);

  // s -> t -> t: the only surjective endomorphism is the identity.
  CHECK(finite_act_hopfian(chain_act({1, 1}, 2)).hopfian);

  // s -> t -> u -> u: the shift candidate is not surjective because s has
  // indegree zero and must still be hit.
  CHECK(finite_act_hopfian(chain_act({1, 2, 2}, 3)).hopfian);

  // Windowed acts are rejected, oversized ones are capped.
  auto [act, shift] = build_shift_act(2);
  CHECK_THROWS_AS(finite_act_hopfian(act), InvalidInput);
  CHECK_THROWS_AS(finite_act_hopfian(chain_act({1, 2, 2}, 3), 2), CapExceeded);
}

TEST_CASE("act endomorphism scan agrees with the backtracking enumerator") {
  std::vector<Act> acts;
  acts.push_back(chain_act({1, 1}, 2));
  acts.push_back(chain_act({1, 2, 2}, 3));
  acts.push_back(chain_act({1, 2, 3, 3}, 4));
  // Two generators: a cycle and a collapse.
  acts.push_back(Act({"p", "q", "r"}, Alphabet({"a", "b"}),
                     {1, 2, 2, 2, 0, 2}, std::nullopt, std::nullopt));
  for (auto const& act : acts) {
    auto lib = act_endomorphisms(act);
    auto oracle = oracles::act_endomorphisms_backtracking(act);
    REQUIRE(lib.size() == oracle.size());
    for (std::size_t i = 0; i < lib.size(); ++i) {
      CHECK(lib[i].image() == oracle[i]);
    }
    auto lib_serial = serial::act_endomorphisms(act);
    CHECK(lib_serial.size() == lib.size());
  }
}

TEST_CASE("morphism composition stays verified") {
  // Verified endomorphisms of an exact act compose to a verified one.
  Act act = chain_act({1, 2, 3, 3, 3}, 5);
  auto endos = act_endomorphisms(act);
  for (auto const& m1 : endos) {
    for (auto const& m2 : endos) {
      std::vector<state_type> comp(act.num_states());
      for (state_type s = 0; s < act.num_states(); ++s) {
        comp[s] = m2.at(m1.at(s));
      }
      auto verdict = check_act_morphism(act, StateMap(std::move(comp)));
      CHECK(verdict.status == MorphismVerdict::Status::verified);
    }
  }
}

TEST_CASE("DOT export is deterministic and shields sink edges") {
  auto [act, shift] = build_shift_act(2);
  auto const dot = act_to_dot(act, true);
  CHECK(dot == act_to_dot(act, true));

  // 13 node lines and 20 visible edges at radius 2.
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::istringstream in(dot);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("->") != std::string::npos) {
      ++edges;
    } else if (line.find("\";") != std::string::npos) {
      ++nodes;
    }
  }
  CHECK(nodes == 13);
  CHECK(edges == 20);
  CHECK(dot.find("// the arrows not shown all point to \"0\"") !=
        std::string::npos);

  // Showing sink edges restores the full transition count minus the two
  // out-of-window steps.
  auto const full = act_to_dot(act, false);
  std::size_t full_edges = 0;
  std::istringstream in2(full);
  while (std::getline(in2, line)) {
    if (line.find("->") != std::string::npos) {
      ++full_edges;
    }
  }
  CHECK(full_edges == 13 * 3 - 2);
  CHECK(full.find("arrows not shown") == std::string::npos);

  // A one-state act: one node, one self-loop per generator.
  Act loop({"s"}, Alphabet({"a", "b"}), {0, 0}, std::nullopt, std::nullopt);
  auto const tiny = act_to_dot(loop, true);
  std::size_t tiny_edges = 0;
  std::istringstream in3(tiny);
  while (std::getline(in3, line)) {
    if (line.find("->") != std::string::npos) {
      ++tiny_edges;
    }
  }
  CHECK(tiny_edges == 2);
}

#include <doctest.h>

#include <random>

#include "semikit/constructions.hpp"
#include "semikit/exception.hpp"

using namespace semikit;

namespace {

FxSemigroup corpus_fx(std::size_t radius, std::size_t cap) {
  return FxSemigroup(build_shift_act(radius).act, cap);
}

FxElement fw(char const* text, FxSemigroup const& fx) {
  return FxElement::free_part(parse_word(text, fx.free_alphabet()));
}

}  // namespace

TEST_CASE("product rules of the combined semigroup") {
  std::size_t const n = 3;
  auto bundle = build_shift_act(n);
  FxSemigroup fx(bundle.act, 4);

  auto const x0 = FxElement::act_part(shift_state_x(n, 0));
  auto const x1 = FxElement::act_part(shift_state_x(n, 1));
  auto const y0 = FxElement::act_part(shift_state_y(n, 0));

  // s x = x.
  auto sx = fx.multiply(fw("a b", fx), x0);
  REQUIRE(sx.has_value());
  CHECK(*sx == x0);

  // x s = the act run: x0 . c = y0, x0 . a = x1.
  CHECK(*fx.multiply(x0, fw("c", fx)) == y0);
  CHECK(*fx.multiply(x0, fw("a", fx)) == x1);

  // x y = y.
  CHECK(*fx.multiply(x0, y0) == y0);
  CHECK(*fx.multiply(y0, y0) == y0);

  // Free concatenation, with overflow past the cap.
  auto cat = fx.multiply(fw("a b", fx), fw("c a", fx));
  REQUIRE(cat.has_value());
  CHECK(cat->word() == parse_word("a b c a", fx.free_alphabet()));
  CHECK(!fx.multiply(fw("a b c", fx), fw("a b", fx)).has_value());

  // Act runs that leave the window overflow too.
  auto const x3 = FxElement::act_part(shift_state_x(n, 3));
  CHECK(!fx.multiply(x3, fw("a", fx)).has_value());
}

TEST_CASE("associativity of the combined semigroup") {
  auto fx = corpus_fx(4, 4);
  auto verdict = check_fx_associative(fx, 2);
  CHECK(verdict.holds);
  CHECK(verdict.skipped > 0);

  auto reference = serial::check_fx_associative(fx, 2);
  CHECK(reference.holds == verdict.holds);
  CHECK(reference.skipped == verdict.skipped);

  // A single-state act stays associative for any cap.
  Act one({"s"}, Alphabet({"a", "b", "c"}), {0, 0, 0}, std::nullopt,
          std::nullopt);
  CHECK(check_fx_associative(FxSemigroup(one, 3), 3).holds);
}

TEST_CASE("a product that applies the act inconsistently fails the scan") {
  // Mutant product: act runs are only honored for single letters; longer
  // words leave the state untouched. The triple (x, s, t) with two moving
  // single-letter steps then separates x.(st) from (x.s).t.
  std::size_t const n = 3;
  auto bundle = build_shift_act(n);
  FxSemigroup fx(bundle.act, 4);
  auto mutant_multiply = [&](FxElement const& e1,
                             FxElement const& e2) -> std::optional<FxElement> {
    if (!e1.is_free() && e2.is_free() && e2.word().size() > 1) {
      return e1;
    }
    return fx.multiply(e1, e2);
  };

  auto const elems = fx.universe(2);
  bool found = false;
  std::array<FxElement, 3> witness{elems[0], elems[0], elems[0]};
  for (auto const& e1 : elems) {
    for (auto const& e2 : elems) {
      for (auto const& e3 : elems) {
        auto const p12 = mutant_multiply(e1, e2);
        auto const p23 = mutant_multiply(e2, e3);
        auto const lhs = p12 ? mutant_multiply(*p12, e3) : std::nullopt;
        auto const rhs = p23 ? mutant_multiply(e1, *p23) : std::nullopt;
        if (lhs && rhs && !(*lhs == *rhs)) {
          found = true;
          witness = {e1, e2, e3};
        }
      }
    }
  }
  CHECK(found);
  // The witness involves an act part followed by two free factors.
  CHECK(!witness[0].is_free());
}

TEST_CASE("lifting the shift map along the product semigroup") {
  auto bundle = build_shift_act(4);
  FxSemigroup fx(bundle.act, 4);
  auto verdict = lift_act_morphism(fx, bundle.shift);
  CHECK(verdict.ok);
  CHECK(verdict.all_cases_exercised());

  // The identity lifts with nothing skipped beyond overflow pairs.
  std::vector<state_type> id(bundle.act.num_states());
  for (state_type s = 0; s < bundle.act.num_states(); ++s) {
    id[s] = s;
  }
  auto id_verdict = lift_act_morphism(fx, StateMap(std::move(id)));
  CHECK(id_verdict.ok);
  CHECK(id_verdict.all_cases_exercised());

  // Corrupting the shift at y0 breaks the act-then-free case family.
  auto image = bundle.shift.image();
  image[shift_state_y(4, 0)] = shift_state_y(4, 0);
  auto broken = lift_act_morphism(fx, StateMap(std::move(image)));
  CHECK(!broken.ok);
  REQUIRE(broken.witness.has_value());
  CHECK(!broken.witness->first.is_free());
  CHECK(broken.witness->second.is_free());
}

TEST_CASE("idempotents of the combined semigroup are the act parts") {
  auto bundle = build_shift_act(3);
  FxSemigroup fx(bundle.act, 6);
  auto result = fx_idempotents(fx, 6);
  REQUIRE(result.elements.size() == bundle.act.num_states());
  for (std::size_t i = 0; i < result.elements.size(); ++i) {
    CHECK(!result.elements[i].is_free());
    CHECK(result.elements[i].state() == static_cast<state_type>(i));
  }
  // Words of length above cap/2 have overflowing squares and are skipped.
  CHECK(result.overflow_skipped > 0);
}

TEST_CASE("tower truncations") {
  auto t1 = build_tower_t(1);
  CHECK(t1 == monogenic(2, 2, "b1"));

  auto t2 = build_tower_t(2);
  // Cross-level products are absorbed by the higher level.
  CHECK(t2.product(tower_element(1, 1), tower_element(2, 1)) ==
        tower_element(2, 1));
  CHECK(t2.product(tower_element(2, 1), tower_element(1, 1)) ==
        tower_element(2, 1));
  // Same-level products follow the monogenic relation b^4 = b^2.
  CHECK(t2.product(tower_element(2, 2), tower_element(2, 2)) ==
        tower_element(2, 2));

  auto s2 = build_tower_s(2);
  CHECK(s2.size() == 10);
  CHECK(s2.product(tower_s_f_element(2, 1), tower_element(1, 1)) ==
        tower_element(1, 1));
  CHECK(s2.product(tower_s_f_element(2, 1), tower_s_f_element(2, 4)) ==
        tower_s_f_element(2, 2));

  for (std::size_t levels : {1, 2, 3}) {
    CHECK(check_associative(build_tower_t(levels)).associative);
    CHECK(check_associative(build_tower_s(levels)).associative);
    CHECK(check_associative(adjoin_identity(build_tower_t(levels))).associative);
    CHECK(check_associative(adjoin_identity(build_tower_s(levels))).associative);
  }

  CHECK(adjoin_identity(build_tower_t(3)).size() == 10);
  CHECK(adjoin_identity(build_tower_s(3)).size() == 14);
}

TEST_CASE("the tower restricted to its upper levels is the smaller tower") {
  for (std::size_t levels : {2, 3, 5}) {
    auto const big = build_tower_t(levels);
    auto const small = build_tower_t(levels - 1);
    for (element_type x = 0; x < small.size(); ++x) {
      for (element_type y = 0; y < small.size(); ++y) {
        CHECK(big.product(x + 3, y + 3) == small.product(x, y) + 3);
      }
    }
  }
}

TEST_CASE("the level-shift endomorphism") {
  auto report = tower_shift_endo(2);
  element_type const one = static_cast<element_type>(report.table.size() - 1);
  CHECK(report.map.at(tower_element(2, 1)) == tower_element(1, 1));
  CHECK(report.map.at(tower_element(2, 2)) == tower_element(1, 2));
  CHECK(report.map.at(tower_element(1, 1)) == one);
  CHECK(report.homomorphism_ok);
  CHECK(report.collision_ok);
  CHECK(report.image_is_lower_truncation);

  auto big = tower_shift_endo(4);
  CHECK(big.table.size() == 13);
  CHECK(big.homomorphism_ok);
  CHECK(big.failing_pairs == 0);

  CHECK_THROWS_AS(tower_shift_endo(1), InvalidInput);
}

TEST_CASE("power-identity characterizations") {
  auto const s1 = adjoin_identity(build_tower_s(3));

  auto five_two = characterize_by_power_identity(s1, 5, 2);
  CHECK(five_two == std::vector<element_type>{tower_s_f_element(3, 1)});

  auto four_two = characterize_by_power_identity(s1, 4, 2);
  CHECK(four_two ==
        std::vector<element_type>{tower_element(1, 1), tower_element(2, 1),
                                  tower_element(3, 1)});

  // The two characterized sets are disjoint and cover levels + 1 element.
  CHECK(five_two.size() + four_two.size() == 4);

  // On a group every cyclic subsemigroup is a group, so nothing qualifies.
  CHECK(characterize_by_power_identity(monogenic(1, 4), 5, 2).empty());
  CHECK(characterize_by_power_identity(monogenic(1, 4), 4, 2).empty());

  CHECK_THROWS_AS(characterize_by_power_identity(s1, 2, 2), InvalidInput);
}

TEST_CASE("the four product case equations hold on random samples") {
  std::size_t const radius = 5;
  auto bundle = build_shift_act(radius);
  FxSemigroup fx(bundle.act, 6);
  std::mt19937 rng(99);
  std::uniform_int_distribution<state_type> state(
      0, static_cast<state_type>(bundle.act.num_states() - 1));
  std::uniform_int_distribution<std::size_t> len(1, 3);
  std::uniform_int_distribution<letter_type> letter(0, 2);

  for (int i = 0; i < 500; ++i) {
    Word s(len(rng));
    for (auto& l : s) {
      l = letter(rng);
    }
    Word t(len(rng));
    for (auto& l : t) {
      l = letter(rng);
    }
    auto const x = FxElement::act_part(state(rng));
    auto const y = FxElement::act_part(state(rng));
    auto const fs = FxElement::free_part(s);
    auto const ft = FxElement::free_part(t);

    // s x = x and x y = y, always.
    CHECK(*fx.multiply(fs, x) == x);
    CHECK(*fx.multiply(x, y) == y);

    // (x . s) . t = x . (s t) whenever everything stays in the window.
    auto left = fx.multiply(x, fs);
    auto full = fx.multiply(fs, ft);
    if (left && full) {
      auto lhs = fx.multiply(*left, ft);
      auto rhs = fx.multiply(x, *full);
      if (lhs && rhs) {
        CHECK(*lhs == *rhs);
      }
    }
  }
}

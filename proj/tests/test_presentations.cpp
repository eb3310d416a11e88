#include <doctest.h>

#include "semikit/exception.hpp"
#include "semikit/presentations.hpp"
#include "semikit/rewriting.hpp"

using namespace semikit;

namespace {

struct OnerelFixture {
  Alphabet alphabet{std::vector<std::string>{"b", "a"}};
  Presentation presentation{
      alphabet,
      {{parse_word("a b a b b a b", alphabet), parse_word("b", alphabet)}}};
  RewriteSystem system{
      alphabet,
      {Rule{parse_word("a b a b b a b", alphabet), parse_word("b", alphabet)},
       Rule{parse_word("a b a b b b", alphabet),
            parse_word("b a b b a b", alphabet)}}};
  GeneratorMap phi{alphabet,
                   {parse_word("b a b", alphabet), parse_word("a", alphabet)}};

  Word w(char const* text) const { return parse_word(text, alphabet); }
};

}  // namespace

TEST_CASE("apply_map substitutes images in order") {
  OnerelFixture f;
  CHECK(apply_map(f.phi, f.w("b")) == f.w("b a b"));
  CHECK(apply_map(f.phi, f.w("a b b")) == f.w("a b a b b a b"));

  auto id = identity_map(f.alphabet);
  CHECK(apply_map(id, f.w("a b a b b b")) == f.w("a b a b b b"));

  CHECK_THROWS_AS(GeneratorMap(f.alphabet, {f.w("a")}), InvalidInput);
  CHECK_THROWS_AS(GeneratorMap(f.alphabet, {Word{}, f.w("a")}), InvalidInput);
}

TEST_CASE("check_endomorphism on the one-relation presentation") {
  OnerelFixture f;

  CHECK(check_endomorphism(f.presentation, f.system, f.phi).lifts());
  CHECK(check_endomorphism(f.presentation, f.system,
                           identity_map(f.alphabet))
            .lifts());

  // b -> a sends the relation sides to a^7 and a, which stay distinct.
  GeneratorMap collapse(f.alphabet, {f.w("a"), f.w("a")});
  auto verdict = check_endomorphism(f.presentation, f.system, collapse);
  CHECK(verdict.status == EndoCheck::Status::fails);
  CHECK(verdict.relation == 0);
}

TEST_CASE("composition of lifting maps lifts") {
  OnerelFixture f;
  auto phi2 = compose(f.alphabet, f.phi, f.phi);
  CHECK(check_endomorphism(f.presentation, f.system, phi2).lifts());
  // phi o phi sends b to the image of b a b.
  CHECK(phi2.image(*f.alphabet.index_of("b")) ==
        apply_map(f.phi, f.w("b a b")));
}

TEST_CASE("surjectivity search finds shortlex-least witnesses") {
  OnerelFixture f;
  auto verdict = surjectivity_search(f.phi, f.system, 3);
  REQUIRE(verdict.proven());
  CHECK(verdict.witnesses[*f.alphabet.index_of("a")] == f.w("a"));
  CHECK(verdict.witnesses[*f.alphabet.index_of("b")] == f.w("a b b"));

  // Witnesses re-verify.
  for (letter_type g = 0; g < f.alphabet.size(); ++g) {
    CHECK(word_equal(apply_map(f.phi, verdict.witnesses[g]), Word{g},
                     f.system));
  }

  // The identity is onto with each generator witnessing itself.
  auto id_verdict = surjectivity_search(identity_map(f.alphabet), f.system, 2);
  REQUIRE(id_verdict.proven());
  for (letter_type g = 0; g < f.alphabet.size(); ++g) {
    CHECK(id_verdict.witnesses[g] == Word{g});
  }

  // All images of (a -> a, b -> a) are powers of a; b is never reached.
  GeneratorMap collapse(f.alphabet, {f.w("a"), f.w("a")});
  CHECK(!surjectivity_search(collapse, f.system, 6).proven());
}

TEST_CASE("injectivity search refutes and re-verifies") {
  OnerelFixture f;
  auto verdict = injectivity_search(f.phi, f.system, 8);
  REQUIRE(verdict.refuted());
  // The witness pair: distinct normal forms, identical image normal forms.
  CHECK(!word_equal(verdict.first, verdict.second, f.system));
  CHECK(word_equal(apply_map(f.phi, verdict.first),
                   apply_map(f.phi, verdict.second), f.system));
  CHECK(is_irreducible(verdict.first, f.system));
  CHECK(is_irreducible(verdict.second, f.system));
  CHECK(shortlex_less(verdict.first, verdict.second));

  // The documented collision: b and a b b a a b b both map onto b a b.
  CHECK(word_equal(apply_map(f.phi, f.w("b")), f.w("b a b"), f.system));
  CHECK(word_equal(apply_map(f.phi, f.w("a b b a a b b")), f.w("b a b"),
                   f.system));
  CHECK(!word_equal(f.w("b"), f.w("a b b a a b b"), f.system));

  // The identity map never collides.
  CHECK(!injectivity_search(identity_map(f.alphabet), f.system, 5).refuted());
}

TEST_CASE("injectivity on the free semigroup") {
  // No relations: the empty system is complete and word_equal is literal
  // equality.
  Alphabet ab({"a", "b"});
  RewriteSystem free_system(ab, {});
  CHECK(check_complete(free_system).complete());

  GeneratorMap collapse(ab, {parse_word("a", ab), parse_word("a", ab)});
  auto verdict = injectivity_search(collapse, free_system, 3);
  REQUIRE(verdict.refuted());
  CHECK(verdict.first == parse_word("a", ab));
  CHECK(verdict.second == parse_word("b", ab));

  CHECK(word_equal(parse_word("a b", ab), parse_word("a b", ab), free_system));
  CHECK(!word_equal(parse_word("a b", ab), parse_word("b a", ab), free_system));
}

TEST_CASE("word_equal on corpus pairs") {
  OnerelFixture f;
  CHECK(word_equal(f.w("a b a b b b"), f.w("b a b b a b"), f.system));
  CHECK(word_equal(f.w("b a b"), f.w("b a b"), f.system));
  CHECK(!word_equal(f.w("a b b a a b b"), f.w("b"), f.system));

  // Step-limit exhaustion surfaces as CapExceeded.
  Alphabet one({"a"});
  RewriteSystem growing(one,
                        {Rule{parse_word("a", one), parse_word("a a", one)}});
  CHECK_THROWS_AS(
      word_equal(parse_word("a", one), parse_word("a a", one), growing, 10),
      CapExceeded);
}

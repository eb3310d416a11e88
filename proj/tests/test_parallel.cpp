// The OpenMP kernels must produce results identical to the serial reference
// implementations for any thread count.

#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "semikit/acts.hpp"
#include "semikit/constructions.hpp"
#include "semikit/rewriting.hpp"
#include "semikit/tables.hpp"

using namespace semikit;

namespace {

struct ThreadGuard {
  explicit ThreadGuard(int threads) {
#ifdef _OPENMP
    previous = omp_get_max_threads();
    omp_set_num_threads(threads);
#else
    (void)threads;
#endif
  }
  ~ThreadGuard() {
#ifdef _OPENMP
    omp_set_num_threads(previous);
#endif
  }
  int previous = 1;
};

std::vector<element_type> level_generators(std::size_t levels) {
  std::vector<element_type> gens;
  for (std::size_t lvl = 1; lvl <= levels; ++lvl) {
    gens.push_back(tower_element(lvl, 1));
  }
  return gens;
}

}  // namespace

TEST_CASE("kernels agree with their serial references across thread counts") {
  auto const tower = adjoin_identity(build_tower_s(6));  // 23 elements
  MulTable non_assoc(2, {1, 0, 0, 0});
  auto const t4 = build_tower_t(4);
  auto const gens4 = level_generators(4);
  auto const mono = monogenic(2, 11);  // 12 elements

  Alphabet g({"g"});
  Act chain({"s0", "s1", "s2", "s3", "s4", "s5"}, g, {1, 2, 3, 4, 5, 5},
            std::nullopt, std::nullopt);

  auto const bundle = build_shift_act(4);
  FxSemigroup fx(bundle.act, 4);

  Alphabet ba({"b", "a"});
  RewriteSystem forks(ba, {Rule{parse_word("a b", ba), parse_word("a", ba)},
                           Rule{parse_word("b a", ba), parse_word("b", ba)}});

  // Serial baselines, computed once.
  auto const assoc_ok = serial::check_associative(tower);
  auto const assoc_bad = serial::check_associative(non_assoc);
  auto const endos = serial::endomorphisms(t4, gens4);
  auto const cofinite = serial::cofinite_subsemigroups(mono, 3);
  auto const act_endos = serial::act_endomorphisms(chain);
  auto const fx_assoc = serial::check_fx_associative(fx, 2);
  auto const codes = serial::associative_operation_codes(3);
  auto const verdict = serial::check_complete(forks);

  for (int threads : {1, 2, 4}) {
    CAPTURE(threads);
    ThreadGuard guard(threads);

    auto const a = check_associative(tower);
    CHECK(a.associative == assoc_ok.associative);

    auto const bad = check_associative(non_assoc);
    CHECK(bad.associative == assoc_bad.associative);
    CHECK(bad.witness == assoc_bad.witness);

    CHECK(endomorphisms(t4, gens4) == endos);
    CHECK(cofinite_subsemigroups(mono, 3) == cofinite);

    auto const acts = act_endomorphisms(chain);
    REQUIRE(acts.size() == act_endos.size());
    for (std::size_t i = 0; i < acts.size(); ++i) {
      CHECK(acts[i].image() == act_endos[i].image());
    }

    auto const fxa = check_fx_associative(fx, 2);
    CHECK(fxa.holds == fx_assoc.holds);
    CHECK(fxa.skipped == fx_assoc.skipped);

    CHECK(associative_operation_codes(3) == codes);

    auto const v = check_complete(forks);
    CHECK(v.oriented == verdict.oriented);
    REQUIRE(v.unresolved.size() == verdict.unresolved.size());
    for (std::size_t i = 0; i < v.unresolved.size(); ++i) {
      CHECK(v.unresolved[i].left == verdict.unresolved[i].left);
      CHECK(v.unresolved[i].right == verdict.unresolved[i].right);
    }
  }
}

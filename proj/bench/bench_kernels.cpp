// Compares the serial reference implementations against the OpenMP kernels
// on fixed workloads and verifies that both produce identical results.
//
//   bench_kernels [--threads N] [--reps K]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "semikit/acts.hpp"
#include "semikit/constructions.hpp"
#include "semikit/rewriting.hpp"
#include "semikit/tables.hpp"

namespace {

using namespace semikit;
using clock_type = std::chrono::steady_clock;

double time_once(std::function<void()> const& f) {
  auto const start = clock_type::now();
  f();
  return std::chrono::duration<double, std::milli>(clock_type::now() - start)
      .count();
}

double best_of(std::size_t reps, std::function<void()> const& f) {
  double best = time_once(f);
  for (std::size_t i = 1; i < reps; ++i) {
    best = std::min(best, time_once(f));
  }
  return best;
}

void report(std::string const& name, double serial_ms, double parallel_ms,
            bool equal) {
  std::cout << std::left << std::setw(26) << name << std::right << std::fixed
            << std::setprecision(2) << std::setw(12) << serial_ms
            << std::setw(12) << parallel_ms << std::setw(10)
            << serial_ms / parallel_ms << std::setw(9)
            << (equal ? "yes" : "NO") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t reps = 3;
  for (int i = 1; i < argc; ++i) {
    std::string const arg = argv[i];
    if (arg == "--threads" && i + 1 < argc) {
#ifdef _OPENMP
      omp_set_num_threads(std::atoi(argv[++i]));
#else
      ++i;
#endif
    } else if (arg == "--reps" && i + 1 < argc) {
      reps = static_cast<std::size_t>(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: bench_kernels [--threads N] [--reps K]\n";
      return 2;
    }
  }

#ifdef _OPENMP
  int threads = 1;
#pragma omp parallel
  {
#pragma omp single
    threads = omp_get_num_threads();
  }
  std::cout << "OpenMP threads: " << threads << ", best of " << reps
            << " rep(s)\n";
#else
  std::cout << "built without OpenMP; both columns run serially\n";
#endif
  std::cout << std::left << std::setw(26) << "kernel" << std::right
            << std::setw(12) << "serial ms" << std::setw(12) << "omp ms"
            << std::setw(10) << "speedup" << std::setw(9) << "equal"
            << "\n";

  {
    auto const table = adjoin_identity(build_tower_s(130));  // 395 elements
    AssocVerdict a{true, {0, 0, 0}};
    AssocVerdict b{true, {0, 0, 0}};
    double const s =
        best_of(reps, [&] { a = serial::check_associative(table); });
    double const p = best_of(reps, [&] { b = check_associative(table); });
    report("assoc_tower_395", s, p, a.associative == b.associative);
  }

  {
    auto const table = build_tower_t(5);  // 15 elements, 5 generators
    std::vector<element_type> gens;
    for (std::size_t lvl = 1; lvl <= 5; ++lvl) {
      gens.push_back(tower_element(lvl, 1));
    }
    std::vector<ElementMap> a, b;
    double const s =
        best_of(reps, [&] { a = serial::endomorphisms(table, gens); });
    double const p = best_of(reps, [&] { b = endomorphisms(table, gens); });
    report("endos_tower_15^5", s, p, a == b);
  }

  {
    auto const table = monogenic(2, 39);  // 40 elements
    std::vector<std::vector<element_type>> a, b;
    double const s = best_of(
        reps, [&] { a = serial::cofinite_subsemigroups(table, 4); });
    double const p =
        best_of(reps, [&] { b = cofinite_subsemigroups(table, 4); });
    report("cofinite_C(40,4)", s, p, a == b);
  }

  {
    // 8-state single-generator chain: 8^8 maps.
    Alphabet g({"g"});
    std::vector<state_type> step{1, 2, 3, 4, 5, 6, 7, 7};
    Act chain({"s0", "s1", "s2", "s3", "s4", "s5", "s6", "s7"}, g, step,
              std::nullopt, std::nullopt);
    ActHopfVerdict a{true, std::nullopt};
    ActHopfVerdict b{true, std::nullopt};
    double const s =
        best_of(reps, [&] { a = serial::finite_act_hopfian(chain); });
    double const p = best_of(reps, [&] { b = finite_act_hopfian(chain); });
    report("act_hopf_8^8", s, p, a.hopfian == b.hopfian);
  }

  {
    auto const bundle = build_shift_act(12);
    FxSemigroup fx(bundle.act, 6);
    FxAssocVerdict a{};
    FxAssocVerdict b{};
    double const s =
        best_of(reps, [&] { a = serial::check_fx_associative(fx, 3); });
    double const p = best_of(reps, [&] { b = check_fx_associative(fx, 3); });
    report("fx_assoc_r12_l3", s, p,
           a.holds == b.holds && a.skipped == b.skipped);
  }

  {
    std::vector<std::uint64_t> a, b;
    double const s =
        best_of(reps, [&] { a = serial::associative_operation_codes(3); });
    double const p =
        best_of(reps, [&] { b = associative_operation_codes(3); });
    report("assoc_scan_3^9", s, p, a == b);
  }

  return 0;
}

#include "semikit/constructions.hpp"

#include <algorithm>
#include <string>

#include "semikit/exception.hpp"

namespace semikit {

FxElement FxElement::free_part(Word w) {
  if (w.empty()) {
    throw InvalidInput("free parts must be nonempty words");
  }
  FxElement e;
  e.is_free_ = true;
  e.word_ = std::move(w);
  return e;
}

FxElement FxElement::act_part(state_type s) {
  FxElement e;
  e.is_free_ = false;
  e.state_ = s;
  return e;
}

Word const& FxElement::word() const {
  if (!is_free_) {
    throw InvalidInput("act part has no word");
  }
  return word_;
}

state_type FxElement::state() const {
  if (is_free_) {
    throw InvalidInput("free part has no state");
  }
  return state_;
}

bool operator<(FxElement const& a, FxElement const& b) {
  if (a.is_free_ != b.is_free_) {
    return a.is_free_;
  }
  if (a.is_free_) {
    return shortlex_less(a.word_, b.word_);
  }
  return a.state_ < b.state_;
}

FxSemigroup::FxSemigroup(Act act, std::size_t word_cap)
    : act_(std::move(act)), word_cap_(word_cap) {
  if (word_cap_ < 1) {
    throw InvalidInput("free word length cap must be at least 1");
  }
}

std::optional<FxElement> FxSemigroup::multiply(FxElement const& e1,
                                               FxElement const& e2) const {
  if (e1.is_free() && e2.is_free()) {
    if (e1.word().size() + e2.word().size() > word_cap_) {
      return std::nullopt;
    }
    Word w = e1.word();
    w.insert(w.end(), e2.word().begin(), e2.word().end());
    return FxElement::free_part(std::move(w));
  }
  if (e1.is_free()) {
    return e2;  // s x = x
  }
  if (e2.is_free()) {
    auto target = act_.run(e1.state(), e2.word());
    if (!target) {
      return std::nullopt;
    }
    return FxElement::act_part(*target);  // x s = x . s
  }
  return e2;  // x y = y
}

std::vector<FxElement> FxSemigroup::universe(std::size_t max_word_len) const {
  std::vector<FxElement> out;
  if (max_word_len >= 1) {
    for (auto& w : all_words(free_alphabet().size(), max_word_len)) {
      out.push_back(FxElement::free_part(std::move(w)));
    }
  }
  for (state_type s = 0; s < act_.num_states(); ++s) {
    out.push_back(FxElement::act_part(s));
  }
  return out;
}

namespace {

// One i-slice of the triple scan; returns the least failing (j, k), or
// counts skips.
bool fx_assoc_slice(FxSemigroup const& fx, std::vector<FxElement> const& elems,
                    std::size_t i, std::size_t& j_out, std::size_t& k_out,
                    std::size_t& skipped) {
  for (std::size_t j = 0; j < elems.size(); ++j) {
    auto const ij = fx.multiply(elems[i], elems[j]);
    for (std::size_t k = 0; k < elems.size(); ++k) {
      auto const jk = fx.multiply(elems[j], elems[k]);
      auto const lhs = ij ? fx.multiply(*ij, elems[k]) : std::nullopt;
      auto const rhs = jk ? fx.multiply(elems[i], *jk) : std::nullopt;
      if (!lhs || !rhs) {
        ++skipped;
        continue;
      }
      if (!(*lhs == *rhs)) {
        j_out = j;
        k_out = k;
        return false;
      }
    }
  }
  return true;
}

FxAssocVerdict check_fx_associative_impl(FxSemigroup const& fx,
                                         std::size_t sample_bound,
                                         bool parallel) {
  auto const elems = fx.universe(sample_bound);
  FxAssocVerdict verdict;
  verdict.holds = true;

  if (!parallel) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      std::size_t j = 0;
      std::size_t k = 0;
      if (!fx_assoc_slice(fx, elems, i, j, k, verdict.skipped)) {
        verdict.holds = false;
        verdict.witness = {elems[i], elems[j], elems[k]};
        return verdict;
      }
    }
    return verdict;
  }

  std::size_t const total = elems.size();
  bool any_failure = false;
  std::size_t skipped = 0;
#pragma omp parallel
  {
    std::size_t loc_j = 0;
    std::size_t loc_k = 0;
    std::size_t loc_skipped = 0;
    bool loc_failed = false;
#pragma omp for schedule(static) nowait
    for (std::size_t i = 0; i < total; ++i) {
      if (!loc_failed &&
          !fx_assoc_slice(fx, elems, i, loc_j, loc_k, loc_skipped)) {
        loc_failed = true;
      }
    }
#pragma omp critical
    {
      skipped += loc_skipped;
      any_failure = any_failure || loc_failed;
    }
  }
  // Witness position and skip count follow the serial early-exit contract,
  // so recompute serially when a failure exists.
  if (any_failure) {
    return check_fx_associative_impl(fx, sample_bound, false);
  }
  verdict.skipped = skipped;
  return verdict;
}

}  // namespace

FxAssocVerdict check_fx_associative(FxSemigroup const& fx,
                                    std::size_t sample_bound) {
  return check_fx_associative_impl(fx, sample_bound, true);
}

namespace serial {
FxAssocVerdict check_fx_associative(FxSemigroup const& fx,
                                    std::size_t sample_bound) {
  return check_fx_associative_impl(fx, sample_bound, false);
}
}  // namespace serial

FxLiftVerdict lift_act_morphism(FxSemigroup const& fx, StateMap const& m) {
  if (m.size() != fx.act().num_states()) {
    throw InvalidInput("state map size does not match the act");
  }
  auto const elems = fx.universe(fx.word_cap());

  // phi: identity on free parts, m on act parts; absent outside m's domain.
  auto phi = [&](FxElement const& e) -> std::optional<FxElement> {
    if (e.is_free()) {
      return e;
    }
    if (!m.in_domain(e.state())) {
      return std::nullopt;
    }
    return FxElement::act_part(m.at(e.state()));
  };

  FxLiftVerdict verdict;
  verdict.ok = true;
  for (auto const& e1 : elems) {
    for (auto const& e2 : elems) {
      auto const p = fx.multiply(e1, e2);
      auto const f1 = phi(e1);
      auto const f2 = phi(e2);
      std::optional<FxElement> lhs = p ? phi(*p) : std::nullopt;
      std::optional<FxElement> rhs =
          (f1 && f2) ? fx.multiply(*f1, *f2) : std::nullopt;
      if (!p || !lhs || !f1 || !f2 || !rhs) {
        ++verdict.skipped;
        continue;
      }
      if (e1.is_free()) {
        ++(e2.is_free() ? verdict.checked_free_free : verdict.checked_free_act);
      } else {
        ++(e2.is_free() ? verdict.checked_act_free : verdict.checked_act_act);
      }
      if (!(*lhs == *rhs)) {
        verdict.ok = false;
        verdict.witness = {e1, e2};
        return verdict;
      }
    }
  }
  return verdict;
}

FxIdempotentsResult fx_idempotents(FxSemigroup const& fx,
                                   std::size_t max_word_len) {
  FxIdempotentsResult result;
  for (auto const& e : fx.universe(max_word_len)) {
    auto const sq = fx.multiply(e, e);
    if (!sq) {
      ++result.overflow_skipped;
      continue;
    }
    if (*sq == e) {
      result.elements.push_back(e);
    }
  }
  return result;
}

element_type tower_element(std::size_t level, std::size_t power) {
  return static_cast<element_type>((level - 1) * 3 + (power - 1));
}

element_type tower_s_f_element(std::size_t levels, std::size_t power) {
  return static_cast<element_type>(3 * levels + (power - 1));
}

namespace {

// Exponent normalization for monogenic(index, period).
std::size_t normalize_power(std::size_t s, std::size_t index,
                            std::size_t period) {
  std::size_t const n = index + period - 1;
  return s <= n ? s : index + (s - index) % period;
}

}  // namespace

MulTable build_tower_t(std::size_t levels) {
  if (levels < 1) {
    throw InvalidInput("the tower needs at least one level");
  }
  std::size_t const n = 3 * levels;
  std::vector<element_type> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t lvl = 1; lvl <= levels; ++lvl) {
    std::string const base = "b" + std::to_string(lvl);
    for (std::size_t p = 1; p <= 3; ++p) {
      names[tower_element(lvl, p)] =
          p == 1 ? base : base + "^" + std::to_string(p);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t const lx = x / 3 + 1;
    std::size_t const px = x % 3 + 1;
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t const ly = y / 3 + 1;
      std::size_t const py = y % 3 + 1;
      element_type value;
      if (lx == ly) {
        value = tower_element(lx, normalize_power(px + py, 2, 2));
      } else {
        value = static_cast<element_type>(lx > ly ? x : y);
      }
      table[x * n + y] = value;
    }
  }
  return MulTable(n, std::move(table), std::move(names));
}

MulTable build_tower_s(std::size_t levels) {
  MulTable t = build_tower_t(levels);
  std::size_t const nt = t.size();
  std::size_t const n = nt + 4;
  std::vector<element_type> table(n * n);
  std::vector<std::string> names = t.names();
  for (std::size_t p = 1; p <= 4; ++p) {
    names.push_back(p == 1 ? "a" : "a^" + std::to_string(p));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      element_type value;
      bool const fx = x >= nt;
      bool const fy = y >= nt;
      if (!fx && !fy) {
        value = t.product(static_cast<element_type>(x),
                          static_cast<element_type>(y));
      } else if (fx && fy) {
        std::size_t const s = (x - nt + 1) + (y - nt + 1);
        value = static_cast<element_type>(nt + normalize_power(s, 2, 3) - 1);
      } else {
        // Mixed products are absorbed by the tower side.
        value = static_cast<element_type>(fx ? y : x);
      }
      table[x * n + y] = value;
    }
  }
  return MulTable(n, std::move(table), std::move(names));
}

TowerShiftReport tower_shift_endo(std::size_t levels) {
  if (levels < 2) {
    throw InvalidInput("the shift endomorphism needs at least two levels");
  }
  MulTable table = adjoin_identity(build_tower_t(levels));
  auto const n = static_cast<element_type>(table.size());
  element_type const one = n - 1;

  std::vector<element_type> image(n);
  for (std::size_t lvl = 1; lvl <= levels; ++lvl) {
    for (std::size_t p = 1; p <= 3; ++p) {
      image[tower_element(lvl, p)] =
          lvl == 1 ? one : tower_element(lvl - 1, p);
    }
  }
  image[one] = one;
  ElementMap map{std::move(image)};

  TowerShiftReport report{std::move(table), std::move(map), true,     0,
                          {tower_element(1, 1), one},       false,    {},
                          false};

  for (element_type x = 0; x < n; ++x) {
    for (element_type y = 0; y < n; ++y) {
      if (report.map.at(report.table.product(x, y)) !=
          report.table.product(report.map.at(x), report.map.at(y))) {
        ++report.failing_pairs;
      }
    }
  }
  report.homomorphism_ok = report.failing_pairs == 0;

  report.collision_ok =
      report.collision.first != report.collision.second &&
      report.map.at(report.collision.first) ==
          report.map.at(report.collision.second);

  std::vector<char> hit(n, 0);
  for (element_type x = 0; x < n; ++x) {
    hit[report.map.at(x)] = 1;
  }
  for (element_type x = 0; x < n; ++x) {
    if (hit[x]) {
      report.image.push_back(x);
    }
  }
  std::vector<element_type> expected;
  for (std::size_t lvl = 1; lvl + 1 <= levels; ++lvl) {
    for (std::size_t p = 1; p <= 3; ++p) {
      expected.push_back(tower_element(lvl, p));
    }
  }
  expected.push_back(one);
  report.image_is_lower_truncation = report.image == expected;
  return report;
}

std::vector<element_type> characterize_by_power_identity(MulTable const& t,
                                                         std::uint64_t m,
                                                         std::uint64_t k) {
  if (k < 1 || m <= k) {
    throw InvalidInput("power identity needs m > k >= 1");
  }
  std::vector<element_type> out;
  for (element_type x = 0; x < t.size(); ++x) {
    if (t.power(x, m) == t.power(x, k) && !monogenic_is_group(t, x)) {
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace semikit

#include "semikit/tables.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "semikit/exception.hpp"

namespace semikit {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// b^e, saturating instead of overflowing.
std::uint64_t pow_saturating(std::uint64_t b, std::uint64_t e) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (b != 0 && out > kSaturated / b) {
      return kSaturated;
    }
    out *= b;
  }
  return out;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // out * (n - k + i) may overflow; divide first where possible.
    std::uint64_t num = n - k + i;
    if (out > kSaturated / num) {
      return kSaturated;
    }
    out = out * num / i;
  }
  return out;
}

}  // namespace

MulTable::MulTable(std::size_t n, std::vector<element_type> table,
                   std::vector<std::string> names)
    : n_(n), table_(std::move(table)), names_(std::move(names)) {
  if (n_ == 0) {
    throw InvalidInput("a multiplication table needs at least one element");
  }
  if (table_.size() != n_ * n_) {
    throw InvalidInput("multiplication table has wrong shape");
  }
  for (element_type v : table_) {
    if (v >= n_) {
      throw InvalidInput("multiplication table entry out of range");
    }
  }
  if (!names_.empty() && names_.size() != n_) {
    throw InvalidInput("element name list has wrong length");
  }
}

element_type MulTable::power(element_type x, std::uint64_t e) const {
  if (e < 1) {
    throw InvalidInput("powers start at exponent 1");
  }
  element_type out = x;
  for (std::uint64_t i = 1; i < e; ++i) {
    out = product(out, x);
  }
  return out;
}

std::string MulTable::label(element_type x) const {
  if (has_names()) {
    return names_.at(x);
  }
  return std::to_string(x + 1);
}

std::optional<element_type> MulTable::index_of_name(
    std::string const& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return static_cast<element_type>(i);
    }
  }
  return std::nullopt;
}

namespace {

// Scans one x-slice in (y, z) order; returns the least failing (y, z).
bool assoc_slice(MulTable const& t, element_type x, element_type& y_out,
                 element_type& z_out) {
  auto const n = static_cast<element_type>(t.size());
  for (element_type y = 0; y < n; ++y) {
    element_type const xy = t.product(x, y);
    for (element_type z = 0; z < n; ++z) {
      if (t.product(xy, z) != t.product(x, t.product(y, z))) {
        y_out = y;
        z_out = z;
        return false;
      }
    }
  }
  return true;
}

AssocVerdict check_associative_impl(MulTable const& t, bool parallel) {
  auto const n = static_cast<element_type>(t.size());
  AssocVerdict verdict{true, {0, 0, 0}};
  if (!parallel) {
    for (element_type x = 0; x < n; ++x) {
      element_type y = 0;
      element_type z = 0;
      if (!assoc_slice(t, x, y, z)) {
        return AssocVerdict{false, {x, y, z}};
      }
    }
    return verdict;
  }

  // Chunked so a failure stops the scan early while still reporting the
  // lexicographically least witness.
  element_type const chunk = 16;
  for (element_type x0 = 0; x0 < n; x0 += chunk) {
    element_type const x1 = std::min<element_type>(x0 + chunk, n);
    element_type best_x = n;
    element_type best_y = 0;
    element_type best_z = 0;
#pragma omp parallel
    {
      element_type loc_x = n;
      element_type loc_y = 0;
      element_type loc_z = 0;
#pragma omp for schedule(static) nowait
      for (element_type x = x0; x < x1; ++x) {
        if (loc_x == n && !assoc_slice(t, x, loc_y, loc_z)) {
          loc_x = x;
        }
      }
#pragma omp critical
      {
        if (loc_x < best_x) {
          best_x = loc_x;
          best_y = loc_y;
          best_z = loc_z;
        }
      }
    }
    if (best_x < n) {
      return AssocVerdict{false, {best_x, best_y, best_z}};
    }
  }
  return verdict;
}

}  // namespace

AssocVerdict check_associative(MulTable const& t) {
  return check_associative_impl(t, true);
}

namespace serial {
AssocVerdict check_associative(MulTable const& t) {
  return check_associative_impl(t, false);
}
}  // namespace serial

AssocVerdict check_associative_light(MulTable const& t,
                                     std::vector<element_type> const& gens) {
  auto closure = generated_sub(t, gens);
  if (closure.size() != t.size()) {
    throw InvalidInput("Light's test requires a generating set");
  }
  auto const n = static_cast<element_type>(t.size());
  for (element_type g : gens) {
    for (element_type x = 0; x < n; ++x) {
      element_type const xg = t.product(x, g);
      for (element_type y = 0; y < n; ++y) {
        if (t.product(xg, y) != t.product(x, t.product(g, y))) {
          return AssocVerdict{false, {x, g, y}};
        }
      }
    }
  }
  return AssocVerdict{true, {0, 0, 0}};
}

MulTable monogenic(std::size_t index, std::size_t period,
                   std::string const& letter) {
  if (index < 1 || period < 1) {
    throw InvalidInput("monogenic semigroups need index >= 1 and period >= 1");
  }
  std::size_t const n = index + period - 1;
  // Element e (0-based) is the power e+1; exponents above n wrap into the
  // cycle part: s -> index + (s - index) mod period.
  auto normalize = [&](std::size_t s) {
    if (s <= n) {
      return static_cast<element_type>(s - 1);
    }
    return static_cast<element_type>(index + (s - index) % period - 1);
  };
  std::vector<element_type> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      table[x * n + y] = normalize(x + 1 + y + 1);
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t p = 1; p <= n; ++p) {
    names.push_back(p == 1 ? letter : letter + "^" + std::to_string(p));
  }
  return MulTable(n, std::move(table), std::move(names));
}

MulTable adjoin_identity(MulTable const& t) {
  std::size_t const n = t.size();
  std::size_t const m = n + 1;
  std::vector<element_type> table(m * m);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      table[x * m + y] = t.product(static_cast<element_type>(x),
                                   static_cast<element_type>(y));
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    table[x * m + n] = static_cast<element_type>(x);
    table[n * m + x] = static_cast<element_type>(x);
  }
  std::vector<std::string> names;
  if (t.has_names()) {
    names = t.names();
    names.push_back("1");
  }
  return MulTable(m, std::move(table), std::move(names));
}

std::vector<element_type> generated_sub(MulTable const& t,
                                        std::vector<element_type> const& seeds) {
  if (seeds.empty()) {
    throw InvalidInput("generated subsemigroup needs at least one seed");
  }
  std::size_t const n = t.size();
  std::vector<char> in(n, 0);
  std::vector<element_type> order;
  for (element_type s : seeds) {
    if (s >= n) {
      throw InvalidInput("seed element out of range");
    }
    if (!in[s]) {
      in[s] = 1;
      order.push_back(s);
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (auto [a, b] : {std::pair{order[i], order[j]},
                          std::pair{order[j], order[i]}}) {
        element_type const p = t.product(a, b);
        if (!in[p]) {
          in[p] = 1;
          order.push_back(p);
        }
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

bool monogenic_is_group(MulTable const& t, element_type x) {
  if (x >= t.size()) {
    throw InvalidInput("element out of range");
  }
  std::vector<char> seen(t.size(), 0);
  element_type y = x;
  for (;;) {
    element_type const next = t.product(y, x);
    if (next == x) {
      return true;  // x^(k+1) = x for some k >= 1
    }
    if (seen[next]) {
      return false;  // cycle closed without revisiting x
    }
    seen[next] = 1;
    y = next;
  }
}

ElementMap::ElementMap(std::vector<element_type> image)
    : image_(std::move(image)) {
  for (element_type v : image_) {
    if (v >= image_.size()) {
      throw InvalidInput("element map image out of range");
    }
  }
}

bool ElementMap::is_surjective() const {
  std::vector<char> hit(image_.size(), 0);
  for (element_type v : image_) {
    hit[v] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool ElementMap::is_injective() const {
  std::vector<char> hit(image_.size(), 0);
  for (element_type v : image_) {
    if (hit[v]) {
      return false;
    }
    hit[v] = 1;
  }
  return true;
}

bool ElementMap::is_endomorphism(MulTable const& t) const {
  auto const n = static_cast<element_type>(t.size());
  for (element_type x = 0; x < n; ++x) {
    for (element_type y = 0; y < n; ++y) {
      if (image_[t.product(x, y)] != t.product(image_[x], image_[y])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Spanning product expressions: every non-seed element is defined as a
// product of two earlier-discovered elements, so each generator assignment
// extends to at most one total map.
struct SpanningDefs {
  std::vector<element_type> order;          // discovery order, seeds first
  std::vector<std::int64_t> parent_a;       // -1 for seeds
  std::vector<std::int64_t> parent_b;
};

SpanningDefs spanning_defs(MulTable const& t,
                           std::vector<element_type> const& gens) {
  std::size_t const n = t.size();
  SpanningDefs defs;
  defs.parent_a.assign(n, -1);
  defs.parent_b.assign(n, -1);
  std::vector<char> in(n, 0);
  for (element_type g : gens) {
    if (g >= n) {
      throw InvalidInput("generator element out of range");
    }
    if (!in[g]) {
      in[g] = 1;
      defs.order.push_back(g);
    }
  }
  for (std::size_t i = 0; i < defs.order.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (auto [a, b] : {std::pair{defs.order[i], defs.order[j]},
                          std::pair{defs.order[j], defs.order[i]}}) {
        element_type const p = t.product(a, b);
        if (!in[p]) {
          in[p] = 1;
          defs.parent_a[p] = a;
          defs.parent_b[p] = b;
          defs.order.push_back(p);
        }
      }
    }
  }
  if (defs.order.size() != n) {
    throw InvalidInput("the given elements do not generate the table");
  }
  return defs;
}

// Extends the generator assignment encoded by `rank` (base-n digits, first
// generator most significant) and verifies the homomorphism property.
// Returns true and fills img on success.
bool extend_assignment(MulTable const& t, std::vector<element_type> const& gens,
                       SpanningDefs const& defs, std::uint64_t rank,
                       std::vector<element_type>& img) {
  auto const n = static_cast<element_type>(t.size());
  std::size_t const g = gens.size();
  img.assign(n, 0);
  std::uint64_t r = rank;
  for (std::size_t i = g; i-- > 0;) {
    img[gens[i]] = static_cast<element_type>(r % n);
    r /= n;
  }
  for (element_type e : defs.order) {
    if (defs.parent_a[e] >= 0) {
      img[e] = t.product(img[defs.parent_a[e]], img[defs.parent_b[e]]);
    }
  }
  for (element_type x = 0; x < n; ++x) {
    for (element_type y = 0; y < n; ++y) {
      if (img[t.product(x, y)] != t.product(img[x], img[y])) {
        return false;
      }
    }
  }
  return true;
}

std::vector<ElementMap> endomorphisms_impl(MulTable const& t,
                                           std::vector<element_type> const& gens,
                                           std::uint64_t cap, bool parallel) {
  if (gens.empty()) {
    throw InvalidInput("endomorphism enumeration needs a generating set");
  }
  auto defs = spanning_defs(t, gens);
  std::uint64_t const total = pow_saturating(t.size(), gens.size());
  if (total > cap) {
    throw CapExceeded("endomorphism search space of size " +
                      (total == kSaturated ? std::string("overflow")
                                           : std::to_string(total)) +
                      " exceeds the cap");
  }

  std::vector<std::pair<std::uint64_t, std::vector<element_type>>> found;
  if (parallel) {
#pragma omp parallel
    {
      std::vector<std::pair<std::uint64_t, std::vector<element_type>>> local;
      std::vector<element_type> img;
#pragma omp for schedule(static) nowait
      for (std::uint64_t rank = 0; rank < total; ++rank) {
        if (extend_assignment(t, gens, defs, rank, img)) {
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
    std::vector<element_type> img;
    for (std::uint64_t rank = 0; rank < total; ++rank) {
      if (extend_assignment(t, gens, defs, rank, img)) {
        found.emplace_back(rank, img);
      }
    }
  }

  std::vector<ElementMap> out;
  out.reserve(found.size());
  for (auto& [rank, img] : found) {
    out.push_back(ElementMap(std::move(img)));
  }
  return out;
}

}  // namespace

std::vector<ElementMap> endomorphisms(MulTable const& t,
                                      std::vector<element_type> const& gens,
                                      std::uint64_t cap) {
  return endomorphisms_impl(t, gens, cap, true);
}

namespace serial {
std::vector<ElementMap> endomorphisms(MulTable const& t,
                                      std::vector<element_type> const& gens,
                                      std::uint64_t cap) {
  return endomorphisms_impl(t, gens, cap, false);
}
}  // namespace serial

HopfVerdict check_hopfian_finite(MulTable const& t,
                                 std::vector<element_type> const& gens,
                                 std::uint64_t cap) {
  for (auto& m : endomorphisms(t, gens, cap)) {
    if (m.is_surjective() && !m.is_injective()) {
      return HopfVerdict{false, std::move(m)};
    }
  }
  return HopfVerdict{true, std::nullopt};
}

namespace {

// Lexicographically ranked size-m combinations of {0..n-1}.
std::vector<element_type> unrank_combination(std::size_t n, std::size_t m,
                                             std::uint64_t rank) {
  std::vector<element_type> comb(m);
  std::size_t low = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = low;; ++c) {
      std::uint64_t const cnt = binomial_saturating(n - 1 - c, m - 1 - i);
      if (rank < cnt) {
        comb[i] = static_cast<element_type>(c);
        low = c + 1;
        break;
      }
      rank -= cnt;
    }
  }
  return comb;
}

bool next_combination(std::vector<element_type>& comb, std::size_t n) {
  std::size_t const m = comb.size();
  std::size_t i = m;
  while (i-- > 0) {
    if (comb[i] != n - m + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < m; ++j) {
        comb[j] = comb[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

bool is_closed(MulTable const& t, std::vector<element_type> const& subset,
               std::vector<char>& member) {
  std::fill(member.begin(), member.end(), 0);
  for (element_type e : subset) {
    member[e] = 1;
  }
  for (element_type x : subset) {
    for (element_type y : subset) {
      if (!member[t.product(x, y)]) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<element_type>> cofinite_impl(MulTable const& t,
                                                     std::size_t k,
                                                     std::uint64_t cap,
                                                     bool parallel) {
  std::size_t const n = t.size();
  if (k >= n) {
    throw InvalidInput("complement size must be smaller than the table");
  }
  std::size_t const m = n - k;
  std::uint64_t const total = binomial_saturating(n, k);
  if (total > cap) {
    throw CapExceeded("cofinite subset scan of size " +
                      std::to_string(total) + " exceeds the cap");
  }

  std::vector<std::vector<element_type>> out;
  if (parallel) {
    std::vector<std::pair<std::uint64_t, std::vector<element_type>>> found;
#pragma omp parallel
    {
      std::vector<std::pair<std::uint64_t, std::vector<element_type>>> local;
      std::vector<char> member(n, 0);
#pragma omp for schedule(static) nowait
      for (std::uint64_t rank = 0; rank < total; ++rank) {
        auto subset = unrank_combination(n, m, rank);
        if (is_closed(t, subset, member)) {
          local.emplace_back(rank, std::move(subset));
        }
      }
#pragma omp critical
      found.insert(found.end(), std::make_move_iterator(local.begin()),
                   std::make_move_iterator(local.end()));
    }
    std::sort(found.begin(), found.end(),
              [](auto const& a, auto const& b) { return a.first < b.first; });
    out.reserve(found.size());
    for (auto& [rank, subset] : found) {
      out.push_back(std::move(subset));
    }
  } else {
    std::vector<char> member(n, 0);
    std::vector<element_type> comb(m);
    std::iota(comb.begin(), comb.end(), 0);
    do {
      if (is_closed(t, comb, member)) {
        out.push_back(comb);
      }
    } while (next_combination(comb, n));
  }
  return out;
}

}  // namespace

std::vector<std::vector<element_type>> cofinite_subsemigroups(
    MulTable const& t, std::size_t k, std::uint64_t cap) {
  return cofinite_impl(t, k, cap, true);
}

namespace serial {
std::vector<std::vector<element_type>> cofinite_subsemigroups(
    MulTable const& t, std::size_t k, std::uint64_t cap) {
  return cofinite_impl(t, k, cap, false);
}
}  // namespace serial

ImageVerdict check_cofinite_images_proper(MulTable const& t,
                                          std::vector<element_type> const& gens,
                                          std::uint64_t endo_cap,
                                          std::uint64_t subset_cap) {
  std::size_t const n = t.size();
  auto endos = endomorphisms(t, gens, endo_cap);
  std::vector<char> hit(n, 0);
  for (std::size_t k = 1; k < n; ++k) {
    for (auto const& sub : cofinite_subsemigroups(t, k, subset_cap)) {
      for (auto const& f : endos) {
        std::fill(hit.begin(), hit.end(), 0);
        std::size_t covered = 0;
        for (element_type e : sub) {
          element_type const v = f.at(e);
          if (!hit[v]) {
            hit[v] = 1;
            ++covered;
          }
        }
        if (covered == n) {
          return ImageVerdict{false, f, sub};
        }
      }
    }
  }
  return ImageVerdict{true, std::nullopt, {}};
}

MulTable table_from_code(std::size_t n, std::uint64_t code) {
  std::size_t const cells = n * n;
  std::vector<element_type> table(cells);
  for (std::size_t i = cells; i-- > 0;) {
    table[i] = static_cast<element_type>(code % n);
    code /= n;
  }
  return MulTable(n, std::move(table));
}

namespace {

std::vector<std::uint64_t> assoc_codes_impl(std::size_t n, std::uint64_t cap,
                                            bool parallel) {
  std::uint64_t const total = pow_saturating(n, n * n);
  if (total > cap) {
    throw CapExceeded("operation scan of size " + std::to_string(total) +
                      " exceeds the cap");
  }
  std::vector<std::uint64_t> out;
  if (parallel) {
#pragma omp parallel
    {
      std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
      for (std::uint64_t code = 0; code < total; ++code) {
        if (serial::check_associative(table_from_code(n, code)).associative) {
          local.push_back(code);
        }
      }
#pragma omp critical
      out.insert(out.end(), local.begin(), local.end());
    }
    std::sort(out.begin(), out.end());
  } else {
    for (std::uint64_t code = 0; code < total; ++code) {
      if (serial::check_associative(table_from_code(n, code)).associative) {
        out.push_back(code);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> associative_operation_codes(std::size_t n,
                                                       std::uint64_t cap) {
  return assoc_codes_impl(n, cap, true);
}

namespace serial {
std::vector<std::uint64_t> associative_operation_codes(std::size_t n,
                                                       std::uint64_t cap) {
  return assoc_codes_impl(n, cap, false);
}
}  // namespace serial

}  // namespace semikit

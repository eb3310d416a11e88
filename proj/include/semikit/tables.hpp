// Finite semigroups as multiplication tables: associativity checks (naive
// and Light's test), monogenic builders, adjoined identities, generated
// subsets, endomorphism enumeration, a hopficity oracle, and cofinite
// subsemigroup enumeration. The scan-heavy operations have OpenMP kernels
// with serial reference implementations under semikit::serial.

#ifndef SEMIKIT_TABLES_HPP_
#define SEMIKIT_TABLES_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace semikit {

using element_type = std::uint32_t;

inline constexpr std::uint64_t kDefaultEndoCap = 10'000'000;
inline constexpr std::uint64_t kDefaultSubsetCap = 1'000'000;

// An n x n table of element indices. Closure is structural; associativity is
// a separate check (the builders in this library always produce associative
// tables, file-loaded ones are checked on load).
class MulTable {
 public:
  MulTable(std::size_t n, std::vector<element_type> table,
           std::vector<std::string> names = {});

  std::size_t size() const noexcept { return n_; }
  element_type product(element_type x, element_type y) const {
    return table_[static_cast<std::size_t>(x) * n_ + y];
  }
  // x^e for e >= 1.
  element_type power(element_type x, std::uint64_t e) const;

  bool has_names() const noexcept { return !names_.empty(); }
  std::vector<std::string> const& names() const noexcept { return names_; }
  // Element label: its name if present, else the 1-based index.
  std::string label(element_type x) const;
  std::optional<element_type> index_of_name(std::string const& name) const;

  std::vector<element_type> const& data() const noexcept { return table_; }

  friend bool operator==(MulTable const& a, MulTable const& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  std::size_t n_;
  std::vector<element_type> table_;
  std::vector<std::string> names_;
};

struct AssocVerdict {
  bool associative;
  std::array<element_type, 3> witness;  // meaningful iff !associative

  explicit operator bool() const noexcept { return associative; }
};

// Full O(n^3) scan; the reported witness is the lexicographically least
// failing triple.
AssocVerdict check_associative(MulTable const& t);

// Light's associativity test: checks (xg)y = x(gy) for generators g only.
// Requires gens to generate t.
AssocVerdict check_associative_light(MulTable const& t,
                                     std::vector<element_type> const& gens);

// Monogenic semigroup <x | x^(index+period) = x^index>: elements
// x^1 .. x^(index+period-1). A group iff index == 1.
MulTable monogenic(std::size_t index, std::size_t period,
                   std::string const& letter = "x");

// Appends a new two-sided identity as the last element, labeled "1".
MulTable adjoin_identity(MulTable const& t);

// Least product-closed subset containing the seeds, ascending.
std::vector<element_type> generated_sub(MulTable const& t,
                                        std::vector<element_type> const& seeds);

// True iff <x> is a group, i.e. x^(k+1) = x for some k >= 1.
bool monogenic_is_group(MulTable const& t, element_type x);

// A total self-map of the elements.
class ElementMap {
 public:
  explicit ElementMap(std::vector<element_type> image);

  std::size_t size() const noexcept { return image_.size(); }
  element_type at(element_type x) const { return image_.at(x); }
  std::vector<element_type> const& image() const noexcept { return image_; }

  bool is_surjective() const;
  bool is_injective() const;
  bool is_endomorphism(MulTable const& t) const;

  friend bool operator==(ElementMap const&, ElementMap const&) = default;

 private:
  std::vector<element_type> image_;
};

// All endomorphisms of t, driven by images of the generating set gens:
// each of the n^|gens| assignments is extended along a spanning set of
// product expressions and kept iff the extension is a homomorphism. Output
// in lexicographic order of generator-image tuples. Throws CapExceeded when
// n^|gens| > cap.
std::vector<ElementMap> endomorphisms(MulTable const& t,
                                      std::vector<element_type> const& gens,
                                      std::uint64_t cap = kDefaultEndoCap);

struct HopfVerdict {
  bool hopfian;
  std::optional<ElementMap> counterexample;  // surjective and non-injective
};

// Checks that every surjective endomorphism is injective. Finite structures
// always pass; this is a pipeline-soundness oracle.
HopfVerdict check_hopfian_finite(MulTable const& t,
                                 std::vector<element_type> const& gens,
                                 std::uint64_t cap = kDefaultEndoCap);

// All product-closed subsets of size n-k, in lexicographic order of their
// ascending element lists. Throws CapExceeded when C(n, k) > cap.
std::vector<std::vector<element_type>> cofinite_subsemigroups(
    MulTable const& t, std::size_t k, std::uint64_t cap = kDefaultSubsetCap);

struct ImageVerdict {
  bool holds;
  // Meaningful iff !holds: the endomorphism and subsemigroup whose image
  // covered everything.
  std::optional<ElementMap> endomorphism;
  std::vector<element_type> subsemigroup;
};

// For every endomorphism f and every proper product-closed cofinite subset
// T: f(T) must be a proper subset. A cardinality argument makes this always
// hold on finite tables; the scan ties the enumeration modules together.
ImageVerdict check_cofinite_images_proper(
    MulTable const& t, std::vector<element_type> const& gens,
    std::uint64_t endo_cap = kDefaultEndoCap,
    std::uint64_t subset_cap = kDefaultSubsetCap);

// Decodes one of the n^(n*n) binary operations on {0..n-1}: the table cells
// are the base-n digits of `code`, most significant first, row-major.
MulTable table_from_code(std::size_t n, std::uint64_t code);

// Codes of all associative operations on n elements, ascending. Throws
// CapExceeded when n^(n*n) > cap.
std::vector<std::uint64_t> associative_operation_codes(
    std::size_t n, std::uint64_t cap = 100'000'000);

namespace serial {
AssocVerdict check_associative(MulTable const& t);
std::vector<ElementMap> endomorphisms(MulTable const& t,
                                      std::vector<element_type> const& gens,
                                      std::uint64_t cap = kDefaultEndoCap);
std::vector<std::vector<element_type>> cofinite_subsemigroups(
    MulTable const& t, std::size_t k, std::uint64_t cap = kDefaultSubsetCap);
std::vector<std::uint64_t> associative_operation_codes(
    std::size_t n, std::uint64_t cap = 100'000'000);
}  // namespace serial

}  // namespace semikit

#endif  // SEMIKIT_TABLES_HPP_

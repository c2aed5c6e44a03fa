#pragma once

// Sequences over {0, +-1, +-i} (optionally carrying one variable per entry),
// non-periodic autocorrelation, Golay and complex Golay pairs.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sodforge/ring.hpp"

namespace sodforge {

struct Gaussian {
  std::int64_t re = 0, im = 0;
  Gaussian conj() const { return {re, -im}; }
  friend Gaussian operator+(Gaussian a, Gaussian b) { return {a.re + b.re, a.im + b.im}; }
  friend Gaussian operator*(Gaussian a, Gaussian b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

/// 0 or i^power * x_var (var < 0: no variable).
struct SeqEntry {
  std::int8_t power = -1;  // -1 encodes the zero entry, otherwise 0..3
  std::int32_t var = -1;

  static SeqEntry zero() { return {}; }
  static SeqEntry unit(int power, std::int32_t var = -1) {
    return {static_cast<std::int8_t>(((power % 4) + 4) % 4), var};
  }
  bool is_zero() const { return power < 0; }
  Gaussian value() const;  // unit part only
  SeqEntry conj() const { return is_zero() ? *this : unit(4 - power, var); }
  SeqEntry times_unit(int p) const { return is_zero() ? *this : unit(power + p, var); }
  friend bool operator==(const SeqEntry&, const SeqEntry&) = default;
};

/// S_C basis element and sign for a unit i^power.
GroupElement unit_element(int power);

class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::vector<SeqEntry> entries);
  /// Tokens 1, -1, i, -i, 0 separated by commas ("-" alone also means -1).
  static Sequence parse(std::string_view text);

  std::size_t length() const { return entries_.size(); }
  const SeqEntry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<SeqEntry>& entries() const { return entries_; }
  bool has_variables() const;
  bool is_real_pm1() const;     // every entry +-1, no variables
  bool is_complex_unit() const;  // every entry in {+-1, +-i}, no variables

  /// Attaches variable v to every nonzero entry.
  Sequence with_variable(std::int32_t v) const;
  Sequence times_unit(int power) const;
  Sequence negated() const { return times_unit(2); }
  Sequence concat(const Sequence& other) const;
  std::string to_string() const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<SeqEntry> entries_;
};

/// N_A(j) = sum_i a_{i+j} conj(a_i) for variable-free sequences.
Gaussian npaf(const Sequence& a, std::size_t j);
/// N_A(j) as an element of Z[S_C] with variables.
RingElement npaf_ring(const Sequence& a, std::size_t j);

/// sum_k N_{A_k}(j) = 0 for every j > 0.
bool is_complementary(std::span<const Sequence> seqs);
bool is_complementary(const Sequence& a, const Sequence& b);

/// (conj a_n, ..., conj a_1).
Sequence reverse_conjugate(const Sequence& a);

enum class Alphabet { Real, Complex };

struct GolayPair {
  Sequence a, b;
  Alphabet alphabet = Alphabet::Real;
  std::size_t length() const { return a.length(); }
  /// Complementary, equal lengths, entries in the alphabet.
  bool valid() const;
};

/// (A;B) -> (A|B ; A|-B).
GolayPair golay_double(const GolayPair& pair);

struct GolaySearchOptions {
  std::uint64_t node_budget = 2'000'000'000ULL;
  bool first_only = false;
  /// Lengths beyond 14 (real) or 8 (complex) need this flag.
  bool allow_large = false;
};

struct GolaySearchResult {
  std::vector<GolayPair> pairs;  // normalized: a_1 = b_1 = 1; depth-first order
  std::uint64_t nodes = 0;
};

/// Exhaustive depth-first search with both-ends NPAF pruning.  Throws
/// BudgetExceeded when the node budget runs out.
GolaySearchResult search_golay(std::size_t length, Alphabet alphabet, const GolaySearchOptions& options = {});

struct CatalogEntry {
  std::string name;
  std::string source;
  GolayPair pair;
};

/// Seed pairs; every entry is checked complementary when the catalog is first built.
const std::vector<CatalogEntry>& golay_catalog();

/// A pair of the given length: a catalog seed, or a seed doubled as often as needed.
/// Real pairs also serve as complex pairs.
std::optional<GolayPair> find_golay_pair(std::size_t length, Alphabet alphabet);

/// b + c + d + e <= a + 2u + 1 and u <= c + e.
bool is_admissible_cgn(unsigned a, unsigned b, unsigned c, unsigned d, unsigned e, unsigned u);
/// 2^(a+u) 3^b 5^c 11^d 13^e.
std::uint64_t cgn_value(unsigned a, unsigned b, unsigned c, unsigned d, unsigned e, unsigned u);

}  // namespace sodforge

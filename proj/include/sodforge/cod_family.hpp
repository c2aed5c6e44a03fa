#pragma once

// Complex orthogonal designs from Golay pairs: symbolic arrays E and F,
// their expansion against a Hadamard matrix into circulants, Hermitian
// splitting, the set Omega and its substitution into an equal-type OD.
//
// Variables: y = 0, z = 1, x_j = 1 + j (j = 1, 2, ...).

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sodforge/design.hpp"
#include "sodforge/golay.hpp"
#include "sodforge/int_matrix.hpp"

namespace sodforge {

/// First row of a circulant matrix with entries 0 or i^p * x_v.
class CirculantRow {
 public:
  CirculantRow() = default;
  explicit CirculantRow(std::vector<SeqEntry> entries) : entries_(std::move(entries)) {}

  std::size_t length() const { return entries_.size(); }
  const SeqEntry& operator[](std::size_t k) const { return entries_[k]; }
  const std::vector<SeqEntry>& entries() const { return entries_; }

  /// First row of C*: (conj a_0, conj a_{m-1}, ..., conj a_1).
  CirculantRow star() const;
  bool is_hermitian() const { return *this == star(); }
  CirculantRow negated() const;

  /// Tokens such as "y", "-ix", "0"; names default to y, z, x (single x) or x1, x2, ...
  std::vector<std::string> tokens(const std::vector<std::string>& names = {}) const;
  static CirculantRow parse_tokens(const std::vector<std::string>& tokens, const std::vector<std::string>& names);

  friend bool operator==(const CirculantRow&, const CirculantRow&) = default;

 private:
  std::vector<SeqEntry> entries_;
};

/// Circulant with arbitrary entries of Z[S_C][x] (degree <= 2).
struct RingCirculant {
  std::vector<RingElement> entries;
  std::size_t length() const { return entries.size(); }
  RingCirculant& operator+=(const RingCirculant& other);
  friend bool operator==(const RingCirculant&, const RingCirculant&) = default;
};

RingCirculant to_ring(const CirculantRow& row);
RingCirculant star(const RingCirculant& a);
/// circ(a) circ(b) = circ(c), c_k = sum_{i + j = k mod m} a_i b_j.
RingCirculant circulant_product(const RingCirculant& a, const RingCirculant& b);
/// True when a = form * I_m.
bool is_scalar_circulant(const RingCirculant& a, const RingElement& form);

/// Variable names for a family with `x_count` x variables.
std::vector<std::string> cod_variable_names(std::size_t x_count);

/// Golay pair (A;B) plus the complex pairs (C^(j);D^(j)), j = 1..2^(n-3)-1.
struct CodInputs {
  unsigned n = 3;
  GolayPair ab;
  std::vector<GolayPair> cd;

  std::size_t r() const { return ab.length(); }
  std::size_t m() const;
  std::vector<std::size_t> k() const;
  /// Throws unless n > 2, the pair count is 2^(n-3)-1 and every pair is valid.
  void validate() const;
};

/// Builds inputs from the catalog (plus doubling).
CodInputs cod_inputs_from_catalog(unsigned n, std::size_t r, const std::vector<std::size_t>& k);

/// E = (y, x_1 C1, ..., zA, ..., x_1 C1_Rbar) and F likewise; 2^(n-2) segments each.
struct SymbolicArrays {
  std::vector<Sequence> e, f;
  std::size_t m = 0;
};
SymbolicArrays build_EF(const CodInputs& in);

struct ExpandedRows {
  std::vector<CirculantRow> e, f;
};
/// Row j scales segment t by H[j][t] and concatenates.
ExpandedRows expand_rows(const SymbolicArrays& arrays, const IntMatrix& h);

struct HermitianSplit {
  CirculantRow prime, double_prime;
};
/// G' = (G + G*)/2, G'' = i(G - G*)/2; throws if G + G* has an odd coefficient.
HermitianSplit hermitian_split(const CirculantRow& g);

/// sum_j (E_j E_j* + F_j F_j*).
RingCirculant ef_gram_sum(const ExpandedRows& rows);
/// c (y^2 + r z^2 + 2 sum_j k_j x_j^2).
RingElement cod_form(std::int64_t c, std::size_t r, const std::vector<std::size_t>& k);
bool verify_EF_identity(const ExpandedRows& rows, const RingElement& expected);

/// {E'_j - E''_j, E'_j + E''_j} for every j, then the same for the F_j.
std::vector<CirculantRow> omega_from_rows(const ExpandedRows& rows);
std::vector<CirculantRow> omega_set(const CodInputs& in);
/// sum_{W in Omega} W^2.
RingCirculant omega_sum_of_squares(const std::vector<CirculantRow>& omega);

/// Type of the substituted design, read off u * (sum W^2); throws unless
/// sum W^2 is a diagonal form times I_m.
std::vector<std::int64_t> plugged_type(const DesignMatrix& od, const std::vector<CirculantRow>& omega);
/// Row `row` of the block matrix sum_i X_i (x) circ(W_i).
void plugged_row(const DesignMatrix& od, const std::vector<CirculantRow>& omega, std::size_t row,
                 std::vector<Entry>& out);
/// Materialized substitution; od must be an equal-type OD over S_R with |Omega| variables.
DesignMatrix plug_into_od(const DesignMatrix& od, const std::vector<CirculantRow>& omega);
/// Writes the substituted design in the text format without materializing it.
void stream_plugged(std::ostream& os, const DesignMatrix& od, const std::vector<CirculantRow>& omega);

struct PipelineOptions {
  /// Materialize the COD when its order is at most this.
  std::size_t materialize_limit = 4096;
  unsigned max_n = 4;
};

struct PipelineResult {
  CodInputs inputs;
  SymbolicArrays arrays;
  ExpandedRows rows;
  std::vector<CirculantRow> omega;
  RingCirculant omega_sum;
  DesignMatrix od;  // OD(2^q; 2^(2^(n-1)-1)_(2^n))
  unsigned q = 0;
  std::size_t order = 0;
  std::vector<std::int64_t> type;
  std::optional<DesignMatrix> cod;
};

/// OD(2^q; ...) = expand_sod(sod_power2(n)) with the canonical S(n) remrep.
DesignMatrix cod_family_od(unsigned n);
PipelineResult cod_family_pipeline(const CodInputs& in, const PipelineOptions& options = {});

/// JSON description sufficient to regenerate the COD.
std::string pipeline_manifest(const PipelineResult& result);

}  // namespace sodforge

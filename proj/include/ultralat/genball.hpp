#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ultralat/group_table.hpp"
#include "ultralat/rational.hpp"

namespace ultralat {

/// Dense membership bits over the elements of one table.
class NormalSet {
public:
  explicit NormalSet(const GroupTable& t);

  static NormalSet full(const GroupTable& t);

  const GroupTable& table() const { return *table_; }
  bool contains(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1u; }
  void insert(std::size_t i) { bits_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void insert_class(std::size_t c);
  std::size_t count() const;
  bool is_full() const { return count() == table_->size(); }
  std::vector<std::size_t> elements() const;
  /// Classes met by the set (all of them are contained when the set is normal).
  std::vector<std::size_t> classes() const;
  /// Closed under conjugation.
  bool is_normal() const;

  NormalSet& operator|=(const NormalSet& other);
  friend bool operator==(const NormalSet& a, const NormalSet& b) {
    return a.table_ == b.table_ && a.bits_ == b.bits_;
  }

private:
  const GroupTable* table_;
  std::vector<std::uint64_t> bits_;
};

/// Conjugacy class of h, joined with the class of h^-1 when symmetric.
NormalSet class_set(const GroupTable& t, std::size_t h, bool symmetric = false);

/// {s t : s in S, t in T} for normal S and T. Uses one representative per class of one
/// factor: the product is the union of the classes meeting x T over representatives x.
NormalSet product_set(const NormalSet& s, const NormalSet& t);

/// Direct double loop over all pairs; valid for arbitrary sets.
NormalSet product_set_naive(const NormalSet& s, const NormalSet& t);

/// Least k with (h^H)^{*k} = H. Throws for central h, and an internal error if the
/// powers become periodic without reaching H.
std::size_t covering_number(const GroupTable& t, std::size_t h);

/// For L = class(h1) (symmetrized on request): entry c is the least k with class c
/// contained in L^{*k}, or nullopt if the power sequence never reaches it.
std::vector<std::optional<std::size_t>> first_hits(const GroupTable& t, std::size_t h1, bool symmetric);

/// Least k with h2 in L^{*k} for L as in first_hits.
std::optional<std::size_t> relative_k(const GroupTable& t, std::size_t h1, std::size_t h2, bool symmetric);

struct CoveringRow {
  std::string group;
  std::size_t class_id = 0;
  std::size_t rep = 0;
  Rational length;  // projective rank length, or Hamming length for permutations
  std::size_t k = 0;
};

struct RelativeRow {
  std::string group;
  std::size_t class1 = 0, class2 = 0;
  Rational length1, length2;  // rank lengths, or Hamming lengths for permutations
  std::optional<std::size_t> k;
};

struct FitReport {
  Rational epsilon{1, 8};
  bool has_matrix = false, has_alt = false;
  Rational c_hat{0};      // max covering number times length
  Rational C_hat{0};      // relative generation slope
  std::size_t D_hat = 0;  // relative generation offset
  Rational c_alt_hat{0};  // max k / max(length ratio, 1) over alternating groups
  std::vector<CoveringRow> covering;
  std::vector<RelativeRow> relative;
};

std::vector<CoveringRow> covering_rows(const GroupTable& t);

/// Relative rows of one table: for matrix groups all class pairs with h1 non-central and
/// rank length at most 1 - epsilon; for alternating groups all pairs with h1 non-trivial.
std::vector<RelativeRow> relative_rows(const GroupTable& t, Rational epsilon);

/// Fits the constants on the given tables. Throws when no table has a non-central element.
FitReport fit_constants(const std::vector<const GroupTable*>& tables, Rational epsilon = Rational(1, 8));

/// The bound the fitted constants give for a row: max(C_hat ratio, D_hat) for matrix
/// rows, c_alt_hat max(ratio, 1) for permutation rows.
Rational fitted_bound(const FitReport& fit, const RelativeRow& row, bool perm);

/// Rows of the table that violate the fitted bound (or are never reached).
std::vector<RelativeRow> relative_violations(const GroupTable& t, const FitReport& fit);

}  // namespace ultralat

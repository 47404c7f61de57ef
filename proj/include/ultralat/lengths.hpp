#pragma once

#include <cstdint>

#include "ultralat/descriptor.hpp"
#include "ultralat/group_table.hpp"
#include "ultralat/linalg.hpp"
#include "ultralat/perm.hpp"
#include "ultralat/rational.hpp"

namespace ultralat {

/// rank(g - 1) / n. The descriptor overload checks membership first.
Rational rank_length(const Matrix& g);
Rational rank_length(const GroupDescriptor& d, const Matrix& g);

/// Minimum of rank(g - lambda) / n over the nonzero scalars of the matrix field (the
/// quadratic extension for unitary groups).
Rational projective_rank_length(const Matrix& g);
Rational projective_rank_length(const GroupDescriptor& d, const Matrix& g);

/// |supp(sigma)| / n.
Rational hamming_length(const Permutation& sigma);

/// log|g^H| / log|H|. The value is irrational in general, so it is kept as the exact pair
/// (class size, group order); all comparisons reduce to integer arithmetic.
struct ClassLength {
  std::uint64_t class_size = 1;
  std::uint64_t group_order = 1;

  double value() const;
  bool is_zero() const { return class_size == 1; }
  /// a <= b + c for lengths of the same group: |a| <= |b| * |c|.
  static bool sum_bound(const ClassLength& a, const ClassLength& b, const ClassLength& c);
  friend bool operator==(const ClassLength& a, const ClassLength& b) = default;
  friend auto operator<=>(const ClassLength& a, const ClassLength& b) {
    return a.class_size <=> b.class_size;
  }
};

ClassLength conjugacy_length(const GroupTable& t, std::size_t element);

}  // namespace ultralat

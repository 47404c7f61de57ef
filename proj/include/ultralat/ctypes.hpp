#pragma once

#include <optional>
#include <string>

#include "ultralat/descriptor.hpp"
#include "ultralat/linalg.hpp"
#include "ultralat/rational.hpp"

namespace ultralat {

/// The null sequence C n^-a (log n)^b, or the zero sequence.
struct ConvergenceType {
  bool zero = true;
  Rational C{1}, a{0}, b{0};

  static ConvergenceType Zero() { return {}; }
  static ConvergenceType make(Rational C, Rational a, Rational b) { return {false, C, a, b}; }

  /// Zero, or a positive null sequence that is at least of order 1/n.
  bool valid() const;
  /// Grammar "C*n^-A[*log^B]" or "0".
  static ConvergenceType parse(const std::string& text);
  std::string to_string() const;
};

enum class Order { Less, Equivalent, Greater };

std::string to_string(Order o);

/// Throws when either argument is not valid.
Order ct_compare(const ConvergenceType& r, const ConvergenceType& s);

struct OrderIdeal {
  ConvergenceType cut;
  bool closed = true;  // {r <= cut} when closed, {r < cut} otherwise

  static OrderIdeal I0() { return {ConvergenceType::Zero(), true}; }
  static OrderIdeal I1() { return {ConvergenceType::make(1, 1, 0), true}; }

  bool contains(const ConvergenceType& r) const;
};

/// Block-diagonal element with about n r of rank in (g - 1): copies of a fixed
/// rank-one block (linear, symplectic, unitary) or rank-two block (orthogonal) on
/// mutually orthogonal planes. r = 0 gives the identity; otherwise 1/n <= r <= 1/2.
Matrix rank_fraction_element(const GroupDescriptor& d, const Rational& r);

/// Number of blocks used and the rank of each block.
std::size_t rank_fraction_blocks(const GroupDescriptor& d, const Rational& r, std::size_t& block_rank);

}  // namespace ultralat

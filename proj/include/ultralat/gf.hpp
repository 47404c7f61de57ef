#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ultralat {

/// An element of a finite field, stored as the integer c_0 + c_1 p + ... + c_{k-1} p^{k-1}
/// of its coefficient vector in the polynomial basis. The integer order is the element
/// total order used for every deterministic choice (primitive element, least witness).
struct Elem {
  std::uint16_t v = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// GF(p^k) in the polynomial basis of the lexicographically least monic irreducible
/// polynomial of degree k. Instances are immutable and shared through Field::get.
class Field {
public:
  static constexpr std::uint32_t kMaxOrder = 1024;

  /// Cached constructor. Throws on non-prime p, k == 0, or p^k > kMaxOrder.
  static std::shared_ptr<const Field> get(std::uint32_t p, std::uint32_t k);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }

  /// Coefficients c_0..c_k of the monic modulus (c_k == 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem from_int(std::int64_t n) const;  // image of n under Z -> GF(p)
  Elem from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem x) const;
  Elem gen() const;  // the class of the indeterminate t (equals 1*p when k > 1)

  Elem add(Elem a, Elem b) const { return Elem{add_[a.v * q_ + b.v]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const { return Elem{neg_[a.v]}; }
  Elem mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return Elem{0};
    return Elem{exp_[log_[a.v] + log_[b.v]]};
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;

  /// x -> x^(p^(k/2)); requires even k.
  Elem conj(Elem a) const;
  bool has_conj() const { return k_ % 2 == 0; }

  /// Least element of multiplicative order q - 1.
  Elem primitive() const { return primitive_; }
  std::uint32_t mult_order(Elem a) const;

  /// 0 if a is a square, 1 otherwise. Requires p odd and a != 0.
  int square_class(Elem a) const;
  bool is_square(Elem a) const { return square_class(a) == 0; }

  /// Some y with y^2 == a, or none (returned as false).
  bool sqrt(Elem a, Elem& out) const;

  /// Absolute trace to GF(p) and relative trace/norm to the subfield of index 2.
  Elem rel_trace(Elem a) const { return add(a, conj(a)); }
  Elem rel_norm(Elem a) const { return mul(a, conj(a)); }

  std::vector<Elem> elements() const;
  std::vector<Elem> nonzero() const;
  /// {1, t, ..., t^{k-1}}: an additive basis over GF(p).
  std::vector<Elem> additive_basis() const;

  /// Subgroup <a> of the multiplicative group, in order of powers 1, a, a^2, ...
  std::vector<Elem> cyclic_subgroup(Elem a) const;

  /// k == 1: "n"; otherwise "c0,c1,...".
  std::string format(Elem a) const;
  Elem parse(const std::string& text) const;

  std::string modulus_string() const;

private:
  Field(std::uint32_t p, std::uint32_t k);

  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint16_t> add_, neg_, inv_, log_, exp_;
  Elem primitive_{};
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

/// True iff the monic polynomial with the given coefficients (low degree first, leading 1
/// included) is irreducible over GF(p). Trial division by all monic polynomials of degree
/// at most half the degree.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Decomposes q = p^k; returns false when q is not a prime power.
bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& k);

}  // namespace ultralat

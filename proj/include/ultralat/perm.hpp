#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ultralat {

/// A permutation of {0, ..., n-1}; printed and parsed with points 1..n.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(std::size_t n);
  /// Parses cycle notation such as "(1 2 3)(4 5)" or "()" for the identity.
  static Permutation parse_cycles(std::size_t n, const std::string& text);

  std::size_t degree() const { return images_.size(); }
  std::uint8_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  /// (a * b)(x) = a(b(x)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;

  /// Moved points, in increasing order.
  std::vector<std::size_t> support() const;
  bool is_even() const;
  bool is_identity() const;
  /// Cycle lengths including fixed points, in decreasing order.
  std::vector<std::size_t> cycle_type() const;
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<std::uint8_t> images_;
};

struct AltClassInfo {
  std::vector<std::size_t> cycle_type;
  std::uint64_t size = 0;  // size of the class in A_n
  bool split = false;      // the S_n class splits into two A_n classes
};

/// Class data of an even permutation under A_n-conjugation. Requires n >= 5.
AltClassInfo alt_class(const Permutation& rep);

/// Whether b is A_n-conjugate to a.
bool alt_conjugate(const Permutation& a, const Permutation& b);

}  // namespace ultralat

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ultralat/descriptor.hpp"
#include "ultralat/linalg.hpp"
#include "ultralat/perm.hpp"

namespace ultralat {

/// Full enumeration of a small group. Elements are packed into 64-bit keys and stored in
/// increasing key order, so an element's index is its rank in that order: lexicographic
/// order of entries for matrices and of image arrays for permutations.
class GroupTable {
public:
  /// Closure of the standard generators. Throws CapExceeded when the group order exceeds
  /// cap, and an internal error if the closure disagrees with the order formula.
  static GroupTable enumerate(const GroupDescriptor& d, std::uint64_t cap, Level level = Level::Group);

  /// Closure of arbitrary matrix generators; expected_order, when given, is checked.
  static GroupTable from_generators(const GroupDescriptor& d, Level level, const std::vector<Matrix>& gens,
                                    std::uint64_t cap, std::optional<std::uint64_t> expected_order);

  const GroupDescriptor& descriptor() const { return desc_; }
  Level level() const { return level_; }
  bool is_perm() const { return desc_.is_alt(); }
  std::size_t size() const { return keys_.size(); }
  /// Degree of permutations or dimension of matrices.
  std::size_t degree() const { return n_; }
  const FieldPtr& field_ptr() const { return field_; }

  std::uint64_t key(std::size_t i) const { return keys_[i]; }
  Matrix matrix(std::size_t i) const;
  Permutation perm(std::size_t i) const;

  std::optional<std::size_t> index_of(const Matrix& g) const;
  std::optional<std::size_t> index_of(const Permutation& g) const;
  std::optional<std::size_t> index_of_key(std::uint64_t key) const;

  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t conj(std::size_t g, std::size_t x) const { return mul(mul(g, x), inv(g)); }

  std::size_t class_count() const { return class_reps_.size(); }
  std::size_t class_of(std::size_t i) const { return class_id_[i]; }
  /// Least element index of the class.
  std::size_t class_rep(std::size_t c) const { return class_reps_[c]; }
  std::size_t class_size(std::size_t c) const { return class_sizes_[c]; }
  const std::vector<std::size_t>& class_members(std::size_t c) const { return class_members_[c]; }
  bool is_central(std::size_t i) const { return class_sizes_[class_id_[i]] == 1; }

private:
  GroupTable() = default;

  std::uint64_t encode(const std::uint16_t* data) const;
  void decode(std::uint64_t key, std::uint16_t* data) const;
  void multiply(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out) const;
  std::size_t stride() const { return is_perm() ? n_ : n_ * n_; }

  void finish(std::vector<std::uint64_t> keys, const std::vector<std::size_t>& gen_indices);
  void compute_classes(const std::vector<std::size_t>& gen_indices);

  GroupDescriptor desc_;
  Level level_ = Level::Group;
  std::size_t n_ = 0;
  FieldPtr field_;
  unsigned bits_ = 0;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint16_t> data_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> class_id_, class_reps_, class_sizes_;
  std::vector<std::vector<std::size_t>> class_members_;
};

}  // namespace ultralat

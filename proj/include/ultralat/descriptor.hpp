#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace ultralat {

enum class Family { SL, SU, Sp, OmegaOdd, OmegaPlus, OmegaMinus, Alt };

/// Which group of the family an enumeration or generator set refers to. Special and Full
/// only differ from Group for the orthogonal families (SO and GO respectively).
enum class Level { Group, Special, Full };

/// A classical family or alternating group label. Grammar (see parse):
///   SL(n,q) SU(n,q) Sp(n,q) O(n,q)[:d] O+(n,q) O-(n,q) A(n)
/// The ":d" suffix on O(n,q) selects the form whose discriminant is a non-square.
struct GroupDescriptor {
  Family family = Family::SL;
  std::uint32_t n = 0;
  std::uint32_t q = 0;  // 0 for Alt
  bool nonsquare_disc = false;

  static GroupDescriptor parse(const std::string& text);
  std::string to_string() const;

  bool is_alt() const { return family == Family::Alt; }
  bool is_orthogonal() const {
    return family == Family::OmegaOdd || family == Family::OmegaPlus || family == Family::OmegaMinus;
  }
  /// Characteristic p and degree k of the field carrying the natural module
  /// (GF(q^2) for unitary groups).
  std::uint32_t field_p() const;
  std::uint32_t field_k() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Throws ultralat::Error when the descriptor lies outside the supported list
/// (including the excluded small cases).
void validate(const GroupDescriptor& d);

/// Exact order of the group at the given level, or nullopt when it exceeds 2^64 - 1.
std::optional<std::uint64_t> group_order(const GroupDescriptor& d, Level level = Level::Group);

std::string to_string(Level level);

}  // namespace ultralat

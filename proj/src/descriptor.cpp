#include "ultralat/descriptor.hpp"

#include <cctype>
#include <regex>

#include "ultralat/error.hpp"
#include "ultralat/gf.hpp"

namespace ultralat {

namespace {

using u128 = unsigned __int128;

// Saturating arithmetic: kOverflow absorbs every operation.
constexpr u128 kOverflow = ~static_cast<u128>(0);

u128 smul(u128 a, u128 b) {
  u128 r = 0;
  if (a == kOverflow || b == kOverflow || __builtin_mul_overflow(a, b, &r)) return kOverflow;
  return r;
}

u128 sadd(u128 a, u128 b) { return (a == kOverflow || b == kOverflow) ? kOverflow : a + b; }
u128 ssub(u128 a, u128 b) { return a == kOverflow ? kOverflow : a - b; }
u128 sdiv(u128 a, u128 b) { return a == kOverflow ? kOverflow : a / b; }

u128 ipow(u128 base, std::uint32_t e) {
  u128 r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r = smul(r, base);
  return r;
}

}  // namespace

GroupDescriptor GroupDescriptor::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  static const std::regex classical(R"((SL|SU|Sp|O\+|O-|O)\((\d+),(\d+)\)(:d)?)");
  static const std::regex alt(R"(A\((\d+)\))");
  std::smatch m;
  GroupDescriptor d;
  if (std::regex_match(s, m, alt)) {
    d.family = Family::Alt;
    d.n = static_cast<std::uint32_t>(std::stoul(m[1]));
  } else if (std::regex_match(s, m, classical)) {
    const std::string fam = m[1];
    d.n = static_cast<std::uint32_t>(std::stoul(m[2]));
    d.q = static_cast<std::uint32_t>(std::stoul(m[3]));
    if (fam == "SL") d.family = Family::SL;
    else if (fam == "SU") d.family = Family::SU;
    else if (fam == "Sp") d.family = Family::Sp;
    else if (fam == "O+") d.family = Family::OmegaPlus;
    else if (fam == "O-") d.family = Family::OmegaMinus;
    else d.family = Family::OmegaOdd;
    if (m[4].matched) {
      require(d.family == Family::OmegaOdd, "the ':d' flag only applies to O(n,q)");
      d.nonsquare_disc = true;
    }
  } else {
    fail("unknown group descriptor '" + text + "'");
  }
  validate(d);
  return d;
}

std::string GroupDescriptor::to_string() const {
  const std::string args = "(" + std::to_string(n) + "," + std::to_string(q) + ")";
  switch (family) {
    case Family::SL: return "SL" + args;
    case Family::SU: return "SU" + args;
    case Family::Sp: return "Sp" + args;
    case Family::OmegaOdd: return "O" + args + (nonsquare_disc ? ":d" : "");
    case Family::OmegaPlus: return "O+" + args;
    case Family::OmegaMinus: return "O-" + args;
    case Family::Alt: return "A(" + std::to_string(n) + ")";
  }
  return "?";
}

std::uint32_t GroupDescriptor::field_p() const {
  std::uint32_t p = 0, k = 0;
  prime_power(q, p, k);
  return p;
}

std::uint32_t GroupDescriptor::field_k() const {
  std::uint32_t p = 0, k = 0;
  prime_power(q, p, k);
  return family == Family::SU ? 2 * k : k;
}

void validate(const GroupDescriptor& d) {
  const std::string name = d.to_string();
  if (d.family == Family::Alt) {
    require(d.n >= 5, name + ": alternating groups need degree at least 5");
    require(d.n <= 16, name + ": alternating degree above 16 is unsupported");
    return;
  }
  std::uint32_t p = 0, k = 0;
  require(prime_power(d.q, p, k), name + ": q must be a prime power");
  switch (d.family) {
    case Family::SL:
      require(d.n >= 2, name + ": SL needs n >= 2");
      require(!(d.n == 2 && (d.q == 2 || d.q == 3)), name + ": excluded small case");
      break;
    case Family::Sp:
      require(d.n % 2 == 0 && d.n >= 4, name + ": Sp needs even n >= 4");
      require(!(d.n == 4 && d.q == 2), name + ": excluded small case");
      break;
    case Family::SU:
      require(d.n >= 3, name + ": SU needs n >= 3");
      require(!(d.n == 3 && d.q == 2), name + ": excluded small case");
      break;
    case Family::OmegaOdd:
      require(d.n % 2 == 1 && d.n >= 5, name + ": odd orthogonal groups need odd n >= 5");
      require(p != 2, name + ": odd-dimensional orthogonal groups need odd q");
      break;
    case Family::OmegaPlus:
    case Family::OmegaMinus:
      require(d.n % 2 == 0 && d.n >= 6, name + ": even orthogonal groups need even n >= 6");
      break;
    case Family::Alt:
      break;
  }
  std::uint64_t qq = d.q;
  if (d.family == Family::SU) qq *= d.q;
  require(qq <= Field::kMaxOrder, name + ": field too large");
}

std::optional<std::uint64_t> group_order(const GroupDescriptor& d, Level level) {
  require(level == Level::Group || d.is_orthogonal(), "SO/GO levels only exist for orthogonal families");
  u128 order = 1;
  const u128 q = d.q;
  const std::uint32_t n = d.n;
  switch (d.family) {
    case Family::Alt:
      for (std::uint32_t i = 3; i <= n; ++i) order = smul(order, i);
      break;
    case Family::SL:
      order = ipow(q, n * (n - 1) / 2);
      for (std::uint32_t i = 2; i <= n; ++i) order = smul(order, ssub(ipow(q, i), 1));
      break;
    case Family::SU:
      order = ipow(q, n * (n - 1) / 2);
      for (std::uint32_t i = 2; i <= n; ++i) order = smul(order, (i % 2 == 0) ? ssub(ipow(q, i), 1) : sadd(ipow(q, i), 1));
      break;
    case Family::Sp: {
      const std::uint32_t m = n / 2;
      order = ipow(q, m * m);
      for (std::uint32_t i = 1; i <= m; ++i) order = smul(order, ssub(ipow(q, 2 * i), 1));
      break;
    }
    case Family::OmegaOdd: {
      const std::uint32_t m = (n - 1) / 2;
      order = smul(2, ipow(q, m * m));  // |GO|
      for (std::uint32_t i = 1; i <= m; ++i) order = smul(order, ssub(ipow(q, 2 * i), 1));
      if (level != Level::Full) order = sdiv(order, 2);
      if (level == Level::Group) order = sdiv(order, 2);
      break;
    }
    case Family::OmegaPlus:
    case Family::OmegaMinus: {
      const std::uint32_t m = n / 2;
      const bool plus = d.family == Family::OmegaPlus;
      order = smul(2, ipow(q, m * (m - 1)));  // |GO|
      order = smul(order, plus ? ssub(ipow(q, m), 1) : sadd(ipow(q, m), 1));
      for (std::uint32_t i = 1; i < m; ++i) order = smul(order, ssub(ipow(q, 2 * i), 1));
      const bool odd_q = d.q % 2 == 1;
      if (level == Level::Special && odd_q) order = sdiv(order, 2);
      if (level == Level::Group) order = sdiv(order, odd_q ? 4 : 2);
      break;
    }
  }
  if (order > static_cast<u128>(UINT64_MAX)) return std::nullopt;
  return static_cast<std::uint64_t>(order);
}

std::string to_string(Level level) {
  switch (level) {
    case Level::Group: return "group";
    case Level::Special: return "special";
    case Level::Full: return "full";
  }
  return "?";
}

}  // namespace ultralat

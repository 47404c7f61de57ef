#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "ultralat/error.hpp"
#include "ultralat/group_table.hpp"
#include "ultralat/lengths.hpp"
#include "ultralat/perm.hpp"

using namespace ultralat;

namespace {

Permutation P(std::size_t n, const std::string& c) { return Permutation::parse_cycles(n, c); }

// Orbit of x under conjugation by every element of the table.
std::size_t orbit_size(const GroupTable& t, std::size_t x) {
  std::vector<char> seen(t.size(), 0);
  std::size_t count = 0;
  for (std::size_t g = 0; g < t.size(); ++g) {
    const auto y = t.mul(t.mul(g, x), t.inv(g));
    if (!seen[y]) {
      seen[y] = 1;
      ++count;
    }
  }
  return count;
}

}  // namespace

TEST_SUITE("perm") {
  TEST_CASE("basic operations") {
    CHECK(Permutation::identity(5).support().empty());
    const auto c = P(5, "(1 2 3)");
    CHECK(c.support() == std::vector<std::size_t>{0, 1, 2});
    CHECK(hamming_length(c) == Rational(3, 5));
    const auto v = P(5, "(1 2)(3 4)");
    CHECK((v * v).is_identity());
    CHECK(c * c.inverse() == Permutation::identity(5));
    // (a*b)(x) = a(b(x)).
    const auto a = P(4, "(1 2)"), b = P(4, "(2 3)");
    CHECK((a * b)[1] == a[b[1]]);
    CHECK(c.is_even());
    CHECK_FALSE(a.is_even());
    CHECK(v.cycle_type() == std::vector<std::size_t>{2, 2, 1});
    CHECK_THROWS_AS(a * Permutation::identity(5), Error);
  }

  TEST_CASE("cycle notation") {
    CHECK(P(6, "(1 2 3)(4 5 6)").to_cycles() == "(1 2 3)(4 5 6)");
    CHECK(Permutation::identity(5).to_cycles() == "()");
    CHECK(P(5, "()").is_identity());
    CHECK(P(5, "(3 1 2)") == P(5, "(1 2 3)"));
    CHECK_THROWS_AS(P(5, "(1 2 2)"), Error);
    CHECK_THROWS_AS(P(5, "(1 6)"), Error);
    CHECK_THROWS_AS(P(5, "(1 2"), Error);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
      std::vector<std::uint8_t> im(8);
      for (std::uint8_t x = 0; x < 8; ++x) im[x] = x;
      std::shuffle(im.begin(), im.end(), rng);
      const Permutation p(im);
      CHECK(P(8, p.to_cycles()) == p);
    }
  }

  TEST_CASE("A5 class sizes") {
    const auto t = GroupTable::enumerate(GroupDescriptor::parse("A(5)"), 1000);
    const auto three = *t.index_of(P(5, "(1 2 3)"));
    const auto five = *t.index_of(P(5, "(1 2 3 4 5)"));
    CHECK(orbit_size(t, three) == 20);
    CHECK(orbit_size(t, five) == 12);
    CHECK(alt_class(P(5, "(1 2 3)")).size == 20);
    CHECK(alt_class(P(5, "(1 2 3 4 5)")).size == 12);
    CHECK(alt_class(P(5, "(1 2 3 4 5)")).split);
    CHECK(alt_class(Permutation::identity(5)).size == 1);
    CHECK_THROWS_AS(alt_class(P(5, "(1 2)")), Error);
    CHECK_THROWS_AS(alt_class(P(4, "(1 2 3)")), Error);
  }

  TEST_CASE("alternating classes agree with enumerated orbits") {
    for (std::size_t n = 5; n <= 9; ++n) {
      const auto t = GroupTable::enumerate(GroupDescriptor::parse("A(" + std::to_string(n) + ")"), 200000);
      std::size_t total = 0;
      for (std::size_t c = 0; c < t.class_count(); ++c) {
        const auto rep = t.perm(t.class_rep(c));
        REQUIRE(alt_class(rep).size == t.class_size(c));
        total += t.class_size(c);
        for (const auto m : t.class_members(c)) REQUIRE(t.perm(m).cycle_type() == rep.cycle_type());
      }
      CHECK(total == t.size());
      if (n <= 7) {
        for (std::size_t c = 0; c < t.class_count(); ++c) CHECK(orbit_size(t, t.class_rep(c)) == t.class_size(c));
      }
      std::mt19937_64 rng(n);
      for (int i = 0; i < 2000; ++i) {
        const std::size_t a = rng() % t.size(), b = rng() % t.size();
        REQUIRE(alt_conjugate(t.perm(a), t.perm(b)) == (t.class_of(a) == t.class_of(b)));
      }
    }
  }

  TEST_CASE("Hamming length is an invariant length function") {
    const auto t = GroupTable::enumerate(GroupDescriptor::parse("A(7)"), 10000);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 10000; ++i) {
      const auto a = t.perm(rng() % t.size()), b = t.perm(rng() % t.size());
      REQUIRE(hamming_length(b * a * b.inverse()) == hamming_length(a));
      REQUIRE(hamming_length(a * b) <= hamming_length(a) + hamming_length(b));
      REQUIRE(hamming_length(a.inverse()) == hamming_length(a));
    }
  }
}

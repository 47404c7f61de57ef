#include <doctest.h>

#include <cmath>
#include <random>

#include "ultralat/classical.hpp"
#include "ultralat/error.hpp"
#include "ultralat/group_table.hpp"
#include "ultralat/lengths.hpp"

using namespace ultralat;

namespace {

GroupDescriptor D(const std::string& s) { return GroupDescriptor::parse(s); }

// Minimum of rank(g - lambda)/n by a plain scan over all nonzero scalars.
Rational scan_projective(const Matrix& g) {
  const std::size_t n = g.rows();
  std::size_t best = n;
  for (const Elem l : g.field().nonzero()) best = std::min(best, rank(g - Matrix::scalar(g.field_ptr(), n, l)));
  return Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(n));
}

Matrix example_h1(std::uint32_t q, Elem lambda) {
  const auto f = Field::get(q, 1);
  Vec d(q, lambda);
  d[0] = f->one();
  return Matrix::diag(f, d);
}

}  // namespace

TEST_SUITE("lengths") {
  TEST_CASE("rank length examples") {
    const auto f5 = Field::get(5, 1);
    const auto sp = D("Sp(6,5)");
    CHECK(rank_length(sp, Matrix::identity(f5, 6)) == Rational(0));
    const Matrix minus = Matrix::scalar(f5, 6, f5->neg(f5->one()));
    CHECK(rank_length(sp, minus) == Rational(1));
    CHECK(projective_rank_length(sp, minus) == Rational(0));

    const auto f7 = Field::get(7, 1);
    const Matrix h1 = example_h1(7, f7->from_int(2));
    CHECK(rank_length(D("SL(7,7)"), h1) == Rational(6, 7));
    CHECK(projective_rank_length(D("SL(7,7)"), h1) == Rational(1, 7));
    Vec nd(7, f7->one());
    nd[6] = f7->from_int(3);
    CHECK_THROWS_AS(rank_length(D("SL(7,7)"), Matrix::diag(f7, nd)), Error);
  }

  TEST_CASE("unitary projective length scans the quadratic extension") {
    // In SU(3,5) the scalar matrices are the cube roots of unity of GF(25), which lie
    // outside GF(5).
    const auto d = D("SU(3,5)");
    const auto f = Field::get(5, 2);
    std::size_t seen = 0;
    for (const Elem l : f->nonzero()) {
      if (f->pow(l, 3) != f->one() || l == f->one()) continue;
      const Matrix s = Matrix::scalar(f, 3, l);
      CHECK(contains(d, s));
      CHECK(projective_rank_length(d, s) == Rational(0));
      CHECK(rank_length(d, s) == Rational(1));
      ++seen;
    }
    CHECK(seen == 2);
  }

  TEST_CASE("projective length equals rank length below one half") {
    for (const char* text : {"SL(3,3)", "Sp(4,3)", "SU(4,2)", "SL(2,5)"}) {
      const auto t = GroupTable::enumerate(D(text), 100000);
      for (std::size_t i = 0; i < t.size(); ++i) {
        const Matrix g = t.matrix(i);
        const Rational pr = projective_rank_length(g);
        REQUIRE(pr == scan_projective(g));
        REQUIRE(pr <= rank_length(g));
        if (rank_length(g) <= Rational(1, 2)) REQUIRE(pr == rank_length(g));
      }
    }
  }

  TEST_CASE("conjugacy length") {
    const auto t = GroupTable::enumerate(D("SL(2,5)"), 1000);
    CHECK(conjugacy_length(t, t.identity()).is_zero());
    CHECK(conjugacy_length(t, t.identity()).value() == 0.0);
    const auto f5 = Field::get(5, 1);
    const auto tr = *t.index_of(Matrix::from_rows(f5, {{Elem{1}, Elem{1}}, {Elem{0}, Elem{1}}}));
    std::vector<char> seen(t.size(), 0);
    std::uint64_t orbit = 0;
    for (std::size_t g = 0; g < t.size(); ++g) {
      const auto y = t.conj(g, tr);
      if (!seen[y]) {
        seen[y] = 1;
        ++orbit;
      }
    }
    CHECK(orbit == 12);
    const auto len = conjugacy_length(t, tr);
    CHECK(len.class_size == orbit);
    CHECK(len.group_order == 120);
    CHECK(len.value() == doctest::Approx(std::log(12.0) / std::log(120.0)));
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(conjugacy_length(t, i).value() >= 0.0);
      CHECK(conjugacy_length(t, i).value() < 1.0);
    }
  }

  TEST_CASE("Hamming length examples") {
    CHECK(hamming_length(Permutation::identity(6)) == Rational(0));
    CHECK(hamming_length(Permutation::parse_cycles(5, "(1 2 3 4 5)")) == Rational(1));
    CHECK(hamming_length(Permutation::parse_cycles(8, "(1 2)(3 4)")) == Rational(1, 2));
  }

  TEST_CASE("length axioms on random pairs") {
    std::mt19937_64 rng(8);
    for (const char* text : {"SL(2,5)", "SL(3,2)", "Sp(4,3)", "SU(4,2)", "O-(6,2)"}) {
      const auto t = GroupTable::enumerate(D(text), 100000);
      for (int i = 0; i < 10000; ++i) {
        const std::size_t a = rng() % t.size(), b = rng() % t.size();
        const Matrix ga = t.matrix(a), gb = t.matrix(b), gab = t.matrix(t.mul(a, b));
        const Matrix conj = t.matrix(t.conj(b, a)), inv = t.matrix(t.inv(a));
        REQUIRE(rank_length(gab) <= rank_length(ga) + rank_length(gb));
        REQUIRE(rank_length(conj) == rank_length(ga));
        REQUIRE(rank_length(inv) == rank_length(ga));
        REQUIRE(projective_rank_length(gab) <= projective_rank_length(ga) + projective_rank_length(gb));
        REQUIRE(projective_rank_length(conj) == projective_rank_length(ga));
        REQUIRE(projective_rank_length(inv) == projective_rank_length(ga));
        const auto ca = conjugacy_length(t, a), cb = conjugacy_length(t, b);
        REQUIRE(ClassLength::sum_bound(conjugacy_length(t, t.mul(a, b)), ca, cb));
        REQUIRE(conjugacy_length(t, t.conj(b, a)) == ca);
        REQUIRE(conjugacy_length(t, t.inv(a)) == ca);
      }
      CHECK(rank_length(t.matrix(t.identity())) == Rational(0));
    }
  }

  TEST_CASE("projective and conjugacy lengths are comparable") {
    for (const char* text : {"SL(2,5)", "SL(3,3)", "Sp(4,3)"}) {
      const auto t = GroupTable::enumerate(D(text), 100000);
      double lo = 1e9, hi = 0;
      for (std::size_t c = 0; c < t.class_count(); ++c) {
        const auto rep = t.class_rep(c);
        if (t.is_central(rep)) continue;
        const double ratio = conjugacy_length(t, rep).value() / to_double(projective_rank_length(t.matrix(rep)));
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
      MESSAGE(std::string(text) << ": l^c / l^pr in [" << lo << ", " << hi << "]");
      CHECK(lo > 0.1);
      CHECK(hi < 10.0);
    }
  }
}

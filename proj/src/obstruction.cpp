#include "ultralat/obstruction.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ultralat/error.hpp"

namespace ultralat {

ExampleInstance build_example(std::uint32_t q, std::uint32_t a, std::uint32_t b) {
  std::uint32_t p = 0, k = 0;
  require(prime_power(q, p, k), "q must be a prime power");
  require(a > 1 && b > 1, "a and b must exceed 1");
  require(static_cast<std::uint64_t>(a) * b == q - 1, "need a * b = q - 1");
  require(std::gcd(a, b) == 1, "a and b must be coprime");
  ExampleInstance inst;
  inst.q = q;
  inst.a = a;
  inst.b = b;
  inst.field = Field::get(p, k);
  const Field& f = *inst.field;
  inst.zeta = f.primitive();
  inst.lambda = f.pow(inst.zeta, a);
  inst.mu = f.pow(inst.zeta, b);
  const auto lg = f.cyclic_subgroup(inst.lambda), mg = f.cyclic_subgroup(inst.mu);
  if (std::find(lg.begin(), lg.end(), inst.mu) != lg.end() || std::find(mg.begin(), mg.end(), inst.lambda) != mg.end())
    internal_fail("eigenvalue subgroups are nested");
  Vec d1(q, inst.lambda), d2(q, inst.mu);
  d1[0] = d2[0] = f.one();
  inst.h1 = Matrix::diag(inst.field, d1);
  inst.h2 = Matrix::diag(inst.field, d2);
  // det = lambda^(q-1) = 1 since lambda lies in the multiplicative group.
  return inst;
}

namespace {

// Left or right multiplication by I + c E_ij, applied in place.
void row_op(Matrix& m, std::size_t i, std::size_t j, Elem c) {  // m <- (I + c E_ij) m
  const Field& f = m.field();
  for (std::size_t col = 0; col < m.cols(); ++col) m(i, col) = f.add(m(i, col), f.mul(c, m(j, col)));
}

void col_op(Matrix& m, std::size_t i, std::size_t j, Elem c) {  // m <- m (I + c E_ij)
  const Field& f = m.field();
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = f.add(m(r, j), f.mul(c, m(r, i)));
}

Matrix random_conjugate(const Matrix& h, std::mt19937_64& rng) {
  const Field& f = h.field();
  const std::size_t n = h.rows();
  struct Op {
    std::size_t i, j;
    Elem c;
  };
  // g = t_1 t_2 ... t_m with elementary transvections t = I + c E_ij, c != 0.
  std::vector<Op> ops;
  for (std::size_t s = 0; s < 2 * n; ++s) {
    const std::size_t i = rng() % n;
    std::size_t j = rng() % (n - 1);
    if (j >= i) ++j;
    ops.push_back({i, j, Elem{static_cast<std::uint16_t>(1 + rng() % (f.q() - 1))}});
  }
  Matrix m = h;
  for (std::size_t s = ops.size(); s-- > 0;) row_op(m, ops[s].i, ops[s].j, ops[s].c);
  // g^-1 = t_m^-1 ... t_1^-1, with (I + c E_ij)^-1 = I - c E_ij.
  for (std::size_t s = ops.size(); s-- > 0;) col_op(m, ops[s].i, ops[s].j, f.neg(ops[s].c));
  return m;
}

ObstructionSide run_side(const ExampleInstance& inst, bool use_h2, std::size_t k_max, std::size_t samples,
                         std::uint64_t seed) {
  const Field& f = *inst.field;
  const Elem shift_gen = use_h2 ? inst.mu : inst.lambda;
  const auto shifts = f.cyclic_subgroup(shift_gen);
  ObstructionSide side;
  side.pass = true;
  for (std::size_t k = 1; k <= k_max; ++k) {
    CertificateRow row;
    row.k = k;
    row.pass = true;
    for (std::size_t s = 0; s < samples; ++s) {
      const Matrix w = sample_word(inst, use_h2, k, seed, s);
      const std::size_t cert = min_shift_rank(w, shifts).rank;
      ++row.histogram[cert];
      row.max_certificate = std::max(row.max_certificate, cert);
      if (cert > k) row.pass = false;
    }
    side.pass = side.pass && row.pass;
    side.rows.push_back(std::move(row));
  }
  side.other_certificate = min_shift_rank(use_h2 ? inst.h1 : inst.h2, shifts).rank;
  side.pass = side.pass && side.other_certificate == inst.q - 1;
  return side;
}

}  // namespace

Matrix sample_word(const ExampleInstance& inst, bool use_h2, std::size_t k, std::uint64_t seed,
                   std::uint64_t sample) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(use_h2), static_cast<std::uint32_t>(k),
                    static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(sample >> 32)};
  std::mt19937_64 rng(seq);
  const Matrix& h = use_h2 ? inst.h2 : inst.h1;
  const Matrix h_inv = inverse(h);
  Matrix w = Matrix::identity(inst.field, inst.q);
  for (std::size_t i = 0; i < k; ++i) w = w * random_conjugate((rng() & 1) ? h : h_inv, rng);
  return w;
}

ObstructionReport verify_obstruction(const ExampleInstance& inst, std::size_t k_max, std::size_t samples,
                                     std::uint64_t seed) {
  require(k_max >= 1 && k_max + 2 <= inst.q, "k_max must lie in [1, q-2]");
  require(samples >= 1, "samples must be positive");
  ObstructionReport r;
  r.q = inst.q;
  r.a = inst.a;
  r.b = inst.b;
  r.k_max = k_max;
  r.samples = samples;
  r.seed = seed;
  r.forward = run_side(inst, false, k_max, samples, seed);
  r.reverse = run_side(inst, true, k_max, samples, seed);
  r.pass = r.forward.pass && r.reverse.pass;
  return r;
}

}  // namespace ultralat

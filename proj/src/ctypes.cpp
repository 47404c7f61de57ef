#include "ultralat/ctypes.hpp"

#include <regex>

#include "ultralat/classical.hpp"
#include "ultralat/error.hpp"
#include "ultralat/forms.hpp"

namespace ultralat {

Rational parse_rational(const std::string& text) {
  static const std::regex re(R"(\s*(-?\d+)(?:/(\d+))?\s*)");
  std::smatch m;
  require(std::regex_match(text, m, re), "malformed rational '" + text + "'");
  try {
    const std::int64_t num = std::stoll(m[1]);
    const std::int64_t den = m[2].matched ? std::stoll(m[2]) : 1;
    require(den != 0, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::out_of_range&) {
    fail("rational out of range '" + text + "'");
  }
}

bool ConvergenceType::valid() const {
  if (zero) return true;
  if (C <= 0) return false;
  const bool null = a > 0 || (a == 0 && b < 0);
  const bool above_inverse_n = a < 1 || (a == 1 && b >= 0);
  return null && above_inverse_n;
}

ConvergenceType ConvergenceType::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "0") return Zero();
  static const std::regex re(R"((\d+(?:/\d+)?)\*n\^(-?\d+(?:/\d+)?)(?:\*log\^(-?\d+(?:/\d+)?))?)");
  std::smatch m;
  require(std::regex_match(s, m, re), "malformed convergence type '" + text + "'");
  ConvergenceType t = make(parse_rational(m[1]), -parse_rational(m[2]), m[3].matched ? parse_rational(m[3]) : 0);
  require(t.valid(), "convergence type '" + text + "' is not a null sequence of order at least 1/n");
  return t;
}

std::string ConvergenceType::to_string() const {
  if (zero) return "0";
  std::string out = ultralat::to_string(C) + "*n^" + ultralat::to_string(-a);
  if (b != 0) out += "*log^" + ultralat::to_string(b);
  return out;
}

std::string to_string(Order o) {
  switch (o) {
    case Order::Less: return "less";
    case Order::Equivalent: return "equivalent";
    case Order::Greater: return "greater";
  }
  return "?";
}

Order ct_compare(const ConvergenceType& r, const ConvergenceType& s) {
  require(r.valid() && s.valid(), "comparison of invalid convergence types");
  if (r.zero || s.zero) {
    if (r.zero && s.zero) return Order::Equivalent;
    return r.zero ? Order::Less : Order::Greater;
  }
  // Larger a decays faster; with equal a the larger log exponent dominates.
  if (r.a != s.a) return r.a > s.a ? Order::Less : Order::Greater;
  if (r.b != s.b) return r.b < s.b ? Order::Less : Order::Greater;
  return Order::Equivalent;
}

bool OrderIdeal::contains(const ConvergenceType& r) const {
  const Order o = ct_compare(r, cut);
  return o == Order::Less || (closed && o == Order::Equivalent);
}

std::size_t rank_fraction_blocks(const GroupDescriptor& d, const Rational& r, std::size_t& block_rank) {
  validate(d);
  require(!d.is_alt(), "rank fractions need a classical descriptor");
  const auto n = static_cast<std::int64_t>(d.n);
  require(r == 0 || (r * n >= 1 && r <= Rational(1, 2)), "r must be 0 or lie in [1/n, 1/2]");
  block_rank = d.is_orthogonal() ? 2 : 1;
  const Rational nr = r * n;
  return static_cast<std::size_t>(nr.numerator() / nr.denominator()) / block_rank;
}

Matrix rank_fraction_element(const GroupDescriptor& d, const Rational& r) {
  std::size_t block_rank = 0;
  const std::size_t blocks = rank_fraction_blocks(d, r, block_rank);
  const auto field = Field::get(d.field_p(), d.field_k());
  const Field& f = *field;
  const std::size_t n = d.n;
  Matrix g = Matrix::identity(field, n);
  for (std::size_t i = 0; i < blocks; ++i) {
    switch (d.family) {
      case Family::SL:
        g(2 * i, 2 * i + 1) = f.one();
        break;
      case Family::Sp:
        g(i, n / 2 + i) = f.one();
        break;
      case Family::SU: {
        // Unitary transvection x -> x + a f(x, w) w with w = e + c e' isotropic
        // (c conj(c) = -1) and a + conj(a) = 0, on the plane of e = e_2i, e' = e_2i+1.
        Elem c{0}, a{0};
        for (const Elem x : f.nonzero())
          if (f.rel_norm(x) == f.neg(f.one())) {
            c = x;
            break;
          }
        for (const Elem x : f.nonzero())
          if (f.rel_trace(x).v == 0) {
            a = x;
            break;
          }
        const std::size_t e = 2 * i, e2 = 2 * i + 1;
        const Elem w[2] = {f.one(), c};
        const std::size_t idx[2] = {e, e2};
        // f(x, w) = x_e conj(w_0) + x_e2 conj(w_1) for the identity Gram matrix.
        for (int s = 0; s < 2; ++s)
          for (int t = 0; t < 2; ++t)
            g(idx[s], idx[t]) = f.add(g(idx[s], idx[t]), f.mul(a, f.mul(w[s], f.conj(w[t]))));
        break;
      }
      default:
        if (f.p() != 2) {
          // -1 on two orthonormal coordinates away from the discriminant coordinate.
          g(2 * i, 2 * i) = f.neg(f.one());
          g(2 * i + 1, 2 * i + 1) = f.neg(f.one());
        } else {
          // Product of the transvections in e_j + e_{m+j} for j = 2i, 2i+1.
          const FormSpace s = standard_space(d);
          for (std::size_t j : {2 * i, 2 * i + 1}) {
            Vec v(n, Elem{0});
            v[j] = v[n / 2 + j] = f.one();
            g = g * reflection(s, v);
          }
        }
        break;
    }
  }
  if (!contains(d, g)) internal_fail(d.to_string() + ": rank fraction element is not a member");
  return g;
}

}  // namespace ultralat

#include "ultralat/gf.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "ultralat/error.hpp"

namespace ultralat {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m, coefficients mod p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return out;
}

Poly decode(std::uint32_t code, std::uint32_t p, std::uint32_t k) {
  Poly out(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    out[i] = code % p;
    code /= p;
  }
  trim(out);
  return out;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& k) {
  if (q < 2) return false;
  std::uint64_t d = 2;
  while (q % d != 0) ++d;
  std::uint32_t e = 0;
  std::uint64_t r = q;
  while (r % d == 0) {
    r /= d;
    ++e;
  }
  if (r != 1) return false;
  p = static_cast<std::uint32_t>(d);
  k = e;
  return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = decode(static_cast<std::uint32_t>(code), p, d);
      g.resize(d, 0);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::shared_ptr<const Field> Field::get(std::uint32_t p, std::uint32_t k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Field>> cache;
  require(is_prime(p), "field characteristic " + std::to_string(p) + " is not prime");
  require(k >= 1, "field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    require(q <= kMaxOrder, "field order exceeds " + std::to_string(kMaxOrder));
  }
  std::lock_guard lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot = std::shared_ptr<const Field>(new Field(p, k));
  return slot;
}

Field::Field(std::uint32_t p, std::uint32_t k) : p_(p), k_(k), q_(1) {
  for (std::uint32_t i = 0; i < k; ++i) q_ *= p;

  // Least monic irreducible, ordered by the integer code of its lower coefficients.
  for (std::uint32_t code = 0; code < q_; ++code) {
    Poly f = decode(code, p, k);
    f.resize(k, 0);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }
  if (modulus_.empty()) internal_fail("no irreducible polynomial found");

  add_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t na = 0, scale = 1, x = a;
    for (std::uint32_t i = 0; i < k; ++i) {
      na += ((p - x % p) % p) * scale;
      x /= p;
      scale *= p;
    }
    neg_[a] = static_cast<std::uint16_t>(na);
    for (std::uint32_t b = 0; b < q_; ++b) {
      std::uint32_t s = 0, sc = 1, xa = a, xb = b;
      for (std::uint32_t i = 0; i < k; ++i) {
        s += ((xa % p + xb % p) % p) * sc;
        xa /= p;
        xb /= p;
        sc *= p;
      }
      add_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(s);
    }
  }

  // Primitive element: least code whose powers reach 1 only at exponent q - 1.
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    const Poly g = decode(cand, p, k);
    Poly x = g;
    std::uint32_t order = 1;
    while (!(x.size() == 1 && x[0] == 1)) {
      x = poly_mod(poly_mul(x, g, p), modulus_, p);
      ++order;
    }
    if (order == q_ - 1) {
      primitive_ = Elem{static_cast<std::uint16_t>(cand)};
      break;
    }
  }

  const std::uint32_t n = q_ - 1;
  exp_.resize(2 * static_cast<std::size_t>(n));
  log_.assign(q_, 0);
  const Poly g = decode(primitive_.v, p, k);
  Poly x{1};
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t c = encode(x, p);
    exp_[i] = exp_[i + n] = static_cast<std::uint16_t>(c);
    log_[c] = static_cast<std::uint16_t>(i);
    x = poly_mod(poly_mul(x, g, p), modulus_, p);
  }
  inv_.assign(q_, 0);
  for (std::uint32_t a = 1; a < q_; ++a) inv_[a] = exp_[(n - log_[a]) % n];
}

Elem Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint16_t>(r)};
}

Elem Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  require(coeffs.size() <= k_, "too many coefficients for GF(" + std::to_string(q_) + ")");
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    require(coeffs[i] < p_, "coefficient out of range");
    code = code * p_ + coeffs[i];
  }
  return Elem{static_cast<std::uint16_t>(code)};
}

std::vector<std::uint32_t> Field::coeffs(Elem x) const {
  std::vector<std::uint32_t> out(k_);
  std::uint32_t code = x.v;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out[i] = code % p_;
    code /= p_;
  }
  return out;
}

Elem Field::gen() const {
  return k_ == 1 ? Elem{0} : Elem{static_cast<std::uint16_t>(p_)};
}

Elem Field::inv(Elem a) const {
  require(a.v != 0, "inversion of zero");
  return Elem{inv_[a.v]};
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a.v == 0) {
    require(e >= 0, "negative power of zero");
    return e == 0 ? one() : zero();
  }
  const std::int64_t n = q_ - 1;
  std::int64_t l = (static_cast<std::int64_t>(log_[a.v]) * (e % n)) % n;
  if (l < 0) l += n;
  return Elem{exp_[l]};
}

Elem Field::conj(Elem a) const {
  require(k_ % 2 == 0, "conjugation requires an even-degree field");
  std::int64_t e = 1;
  for (std::uint32_t i = 0; i < k_ / 2; ++i) e *= p_;
  return pow(a, e);
}

std::uint32_t Field::mult_order(Elem a) const {
  require(a.v != 0, "zero has no multiplicative order");
  std::uint32_t order = 1;
  for (Elem x = a; x != one(); x = mul(x, a)) ++order;
  return order;
}

int Field::square_class(Elem a) const {
  require(p_ != 2, "square classes are trivial in characteristic 2");
  require(a.v != 0, "square class of zero");
  return pow(a, (q_ - 1) / 2) == one() ? 0 : 1;
}

bool Field::sqrt(Elem a, Elem& out) const {
  for (std::uint32_t y = 0; y < q_; ++y) {
    const Elem e{static_cast<std::uint16_t>(y)};
    if (mul(e, e) == a) {
      out = e;
      return true;
    }
  }
  return false;
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = Elem{static_cast<std::uint16_t>(i)};
  return out;
}

std::vector<Elem> Field::nonzero() const {
  std::vector<Elem> out;
  for (std::uint32_t i = 1; i < q_; ++i) out.push_back(Elem{static_cast<std::uint16_t>(i)});
  return out;
}

std::vector<Elem> Field::additive_basis() const {
  std::vector<Elem> out;
  std::uint32_t code = 1;
  for (std::uint32_t i = 0; i < k_; ++i, code *= p_) out.push_back(Elem{static_cast<std::uint16_t>(code)});
  return out;
}

std::vector<Elem> Field::cyclic_subgroup(Elem a) const {
  require(a.v != 0, "zero generates no multiplicative subgroup");
  std::vector<Elem> out{one()};
  for (Elem x = a; x != one(); x = mul(x, a)) out.push_back(x);
  return out;
}

std::string Field::format(Elem a) const {
  if (k_ == 1) return std::to_string(a.v);
  std::string out;
  const auto c = coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

Elem Field::parse(const std::string& text) const {
  std::vector<std::uint32_t> c;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    require(!part.empty(), "empty coefficient in '" + text + "'");
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(part, &used);
    } catch (const std::exception&) {
      fail("malformed field element '" + text + "'");
    }
    require(used == part.size() && v >= 0 && v < static_cast<long>(p_),
            "malformed field element '" + text + "'");
    c.push_back(static_cast<std::uint32_t>(v));
  }
  require(!c.empty(), "empty field element");
  require(k_ == 1 || c.size() == k_, "field element '" + text + "' needs " + std::to_string(k_) + " coefficients");
  return from_coeffs(c);
}

std::string Field::modulus_string() const {
  std::string out;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    if (modulus_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool coeff_shown = modulus_[i] != 1 || i == 0;
    if (coeff_shown) out += std::to_string(modulus_[i]);
    if (i >= 1) out += (coeff_shown ? "*" : "") + std::string("x");
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace ultralat

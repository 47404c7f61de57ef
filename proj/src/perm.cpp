#include "ultralat/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ultralat/error.hpp"

namespace ultralat {

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (const auto x : images_) {
    require(x < images_.size() && !seen[x], "not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  require(n <= 255, "permutation degree too large");
  std::vector<std::uint8_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(im));
}

Permutation Permutation::parse_cycles(std::size_t n, const std::string& text) {
  Permutation p = identity(n);
  std::vector<bool> used(n, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  require(pos < text.size(), "empty cycle notation");
  while (pos < text.size()) {
    require(text[pos] == '(', "expected '(' in cycle notation '" + text + "'");
    ++pos;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_ws();
      require(pos < text.size(), "unterminated cycle in '" + text + "'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      require(std::isdigit(static_cast<unsigned char>(text[pos])), "bad character in cycle notation '" + text + "'");
      std::size_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
        require(v <= n, "point out of range in '" + text + "'");
        ++pos;
      }
      require(v >= 1 && v <= n, "point out of range in '" + text + "'");
      require(!used[v - 1], "point repeated in '" + text + "'");
      used[v - 1] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p.images_[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
    skip_ws();
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  require(degree() == other.degree(), "permutation degree mismatch");
  std::vector<std::uint8_t> im(degree());
  for (std::size_t i = 0; i < degree(); ++i) im[i] = images_[other.images_[i]];
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

std::vector<std::size_t> Permutation::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degree(); ++i)
    if (images_[i] != i) out.push_back(i);
  return out;
}

bool Permutation::is_identity() const { return support().empty(); }

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<bool> seen(degree(), false);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (const auto len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out << ' ';
      out << j + 1;
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

namespace {

// A permutation c with c a c^-1 = b, for a and b of equal cycle type.
Permutation conjugator(const Permutation& a, const Permutation& b) {
  auto cycles = [](const Permutation& p) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(p.degree(), false);
    for (std::size_t i = 0; i < p.degree(); ++i) {
      if (seen[i]) continue;
      std::vector<std::size_t> c;
      for (std::size_t j = i; !seen[j]; j = p[j]) {
        seen[j] = true;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() > y.size(); });
    return out;
  };
  const auto ca = cycles(a), cb = cycles(b);
  std::vector<std::uint8_t> im(a.degree());
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < ca[i].size(); ++j) im[ca[i][j]] = static_cast<std::uint8_t>(cb[i][j]);
  return Permutation(std::move(im));
}

}  // namespace

AltClassInfo alt_class(const Permutation& rep) {
  const std::size_t n = rep.degree();
  require(n >= 5, "alternating classes need degree at least 5");
  require(rep.is_even(), "odd permutation is not in A_n");
  AltClassInfo info;
  info.cycle_type = rep.cycle_type();
  // |S_n class| = n! / prod_k (k^m_k m_k!).
  std::uint64_t size = 1;
  for (std::size_t i = 2; i <= n; ++i) size *= i;
  std::vector<std::size_t> mult(n + 1, 0);
  for (const auto len : info.cycle_type) ++mult[len];
  bool distinct_odd = true;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < mult[k]; ++i) size /= k;
    for (std::size_t i = 2; i <= mult[k]; ++i) size /= i;
    if (mult[k] > 1 || (mult[k] == 1 && k % 2 == 0)) distinct_odd = false;
  }
  info.split = distinct_odd;
  info.size = distinct_odd ? size / 2 : size;
  return info;
}

bool alt_conjugate(const Permutation& a, const Permutation& b) {
  require(a.degree() == b.degree(), "permutation degree mismatch");
  if (a.cycle_type() != b.cycle_type()) return false;
  if (!alt_class(a).split) return true;
  // The centralizer lies in A_n, so the parity of any conjugator decides.
  return conjugator(a, b).is_even();
}

}  // namespace ultralat

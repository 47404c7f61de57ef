#include "ultralat/genball.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "ultralat/error.hpp"
#include "ultralat/lengths.hpp"

namespace ultralat {

NormalSet::NormalSet(const GroupTable& t) : table_(&t), bits_((t.size() + 63) / 64, 0) {}

NormalSet NormalSet::full(const GroupTable& t) {
  NormalSet s(t);
  for (std::size_t i = 0; i < t.size(); ++i) s.insert(i);
  return s;
}

void NormalSet::insert_class(std::size_t c) {
  for (const auto i : table_->class_members(c)) insert(i);
}

std::size_t NormalSet::count() const {
  std::size_t n = 0;
  for (const auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> NormalSet::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table_->size(); ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> NormalSet::classes() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < table_->class_count(); ++c)
    for (const auto i : table_->class_members(c))
      if (contains(i)) {
        out.push_back(c);
        break;
      }
  return out;
}

bool NormalSet::is_normal() const {
  for (std::size_t c = 0; c < table_->class_count(); ++c) {
    const auto& m = table_->class_members(c);
    const bool first = contains(m.front());
    for (const auto i : m)
      if (contains(i) != first) return false;
  }
  return true;
}

NormalSet& NormalSet::operator|=(const NormalSet& other) {
  require(table_ == other.table_, "sets over different tables");
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] |= other.bits_[w];
  return *this;
}

NormalSet class_set(const GroupTable& t, std::size_t h, bool symmetric) {
  require(h < t.size(), "element index outside the table");
  NormalSet s(t);
  s.insert_class(t.class_of(h));
  if (symmetric) s.insert_class(t.class_of(t.inv(h)));
  return s;
}

NormalSet product_set(const NormalSet& s, const NormalSet& t) {
  require(&s.table() == &t.table(), "sets over different tables");
  const GroupTable& g = s.table();
  const auto cs = s.classes(), ct = t.classes();
  // ST = TS for normal sets; loop over the cheaper side.
  const bool s_outer = cs.size() * t.count() <= ct.size() * s.count();
  const auto& outer = s_outer ? cs : ct;
  const NormalSet& inner = s_outer ? t : s;
  const auto inner_elems = inner.elements();
  std::vector<char> hit(g.class_count(), 0);
  for (const auto c : outer) {
    const std::size_t x = g.class_rep(c);
    for (const auto y : inner_elems) hit[g.class_of(s_outer ? g.mul(x, y) : g.mul(y, x))] = 1;
  }
  NormalSet out(g);
  for (std::size_t c = 0; c < hit.size(); ++c)
    if (hit[c]) out.insert_class(c);
  return out;
}

NormalSet product_set_naive(const NormalSet& s, const NormalSet& t) {
  require(&s.table() == &t.table(), "sets over different tables");
  const GroupTable& g = s.table();
  NormalSet out(g);
  const auto te = t.elements();
  for (const auto x : s.elements())
    for (const auto y : te) out.insert(g.mul(x, y));
  return out;
}

namespace {

std::vector<bool> class_mask(const NormalSet& s) {
  std::vector<bool> mask(s.table().class_count(), false);
  for (const auto c : s.classes()) mask[c] = true;
  return mask;
}

}  // namespace

std::size_t covering_number(const GroupTable& t, std::size_t h) {
  require(h < t.size(), "element index outside the table");
  require(!t.is_central(h), "covering number of a central element is undefined");
  const NormalSet c = class_set(t, h);
  NormalSet p = c;
  std::set<std::vector<bool>> seen;
  for (std::size_t k = 1;; ++k) {
    if (p.is_full()) return k;
    if (!seen.insert(class_mask(p)).second)
      internal_fail(t.descriptor().to_string() + ": class powers became periodic below the whole group");
    p = product_set(c, p);
  }
}

std::vector<std::optional<std::size_t>> first_hits(const GroupTable& t, std::size_t h1, bool symmetric) {
  const NormalSet l = class_set(t, h1, symmetric);
  std::vector<std::optional<std::size_t>> hits(t.class_count());
  std::size_t missing = hits.size();
  NormalSet p = l;
  std::set<std::vector<bool>> seen;
  for (std::size_t k = 1;; ++k) {
    const auto mask = class_mask(p);
    for (std::size_t c = 0; c < mask.size(); ++c)
      if (mask[c] && !hits[c]) {
        hits[c] = k;
        --missing;
      }
    if (missing == 0 || !seen.insert(mask).second) return hits;
    p = product_set(l, p);
  }
}

std::optional<std::size_t> relative_k(const GroupTable& t, std::size_t h1, std::size_t h2, bool symmetric) {
  require(h2 < t.size(), "element index outside the table");
  const NormalSet l = class_set(t, h1, symmetric);
  NormalSet p = l;
  std::set<std::vector<bool>> seen;
  for (std::size_t k = 1;; ++k) {
    if (p.contains(h2)) return k;
    if (!seen.insert(class_mask(p)).second) return std::nullopt;
    p = product_set(l, p);
  }
}

namespace {

Rational element_length(const GroupTable& t, std::size_t i, bool projective) {
  if (t.is_perm()) return hamming_length(t.perm(i));
  return projective ? projective_rank_length(t.matrix(i)) : rank_length(t.matrix(i));
}

}  // namespace

std::vector<CoveringRow> covering_rows(const GroupTable& t) {
  std::vector<CoveringRow> rows;
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    const std::size_t rep = t.class_rep(c);
    if (t.is_central(rep)) continue;
    rows.push_back({t.descriptor().to_string(), c, rep, element_length(t, rep, true), covering_number(t, rep)});
  }
  return rows;
}

std::vector<RelativeRow> relative_rows(const GroupTable& t, Rational epsilon) {
  std::vector<RelativeRow> rows;
  std::vector<Rational> len(t.class_count());
  for (std::size_t c = 0; c < t.class_count(); ++c) len[c] = element_length(t, t.class_rep(c), false);
  for (std::size_t c1 = 0; c1 < t.class_count(); ++c1) {
    const std::size_t h1 = t.class_rep(c1);
    if (t.is_central(h1)) continue;
    if (!t.is_perm() && len[c1] > Rational(1) - epsilon) continue;
    const auto hits = first_hits(t, h1, false);
    for (std::size_t c2 = 0; c2 < t.class_count(); ++c2)
      rows.push_back({t.descriptor().to_string(), c1, c2, len[c1], len[c2], hits[c2]});
  }
  return rows;
}

Rational fitted_bound(const FitReport& fit, const RelativeRow& row, bool perm) {
  const Rational ratio = row.length2 / row.length1;
  if (perm) return fit.c_alt_hat * std::max(ratio, Rational(1));
  return std::max(fit.C_hat * ratio, Rational(static_cast<std::int64_t>(fit.D_hat)));
}

FitReport fit_constants(const std::vector<const GroupTable*>& tables, Rational epsilon) {
  require(!tables.empty(), "constant fitting needs at least one table");
  FitReport fit;
  fit.epsilon = epsilon;
  std::vector<RelativeRow> matrix_rows, perm_rows;
  for (const auto* t : tables) {
    auto cov = covering_rows(*t);
    fit.covering.insert(fit.covering.end(), cov.begin(), cov.end());
    auto rel = relative_rows(*t, epsilon);
    auto& dest = t->is_perm() ? perm_rows : matrix_rows;
    dest.insert(dest.end(), rel.begin(), rel.end());
    (t->is_perm() ? fit.has_alt : fit.has_matrix) = true;
  }
  require(!fit.covering.empty(), "no non-central elements to fit on");
  for (const auto& r : fit.covering)
    fit.c_hat = std::max(fit.c_hat, r.length * Rational(static_cast<std::int64_t>(r.k)));

  for (const auto& r : matrix_rows) {
    require(r.k.has_value(), r.group + ": relative generation never reaches a class");
    if (r.length2 <= r.length1) fit.D_hat = std::max(fit.D_hat, *r.k);
  }
  for (const auto& r : matrix_rows)
    if (*r.k > fit.D_hat)
      fit.C_hat = std::max(fit.C_hat, Rational(static_cast<std::int64_t>(*r.k)) / (r.length2 / r.length1));
  for (const auto& r : perm_rows) {
    require(r.k.has_value(), r.group + ": relative generation never reaches a class");
    const Rational denom = std::max(r.length2 / r.length1, Rational(1));
    fit.c_alt_hat = std::max(fit.c_alt_hat, Rational(static_cast<std::int64_t>(*r.k)) / denom);
  }
  fit.relative = std::move(matrix_rows);
  fit.relative.insert(fit.relative.end(), perm_rows.begin(), perm_rows.end());
  return fit;
}

std::vector<RelativeRow> relative_violations(const GroupTable& t, const FitReport& fit) {
  std::vector<RelativeRow> bad;
  for (const auto& r : relative_rows(t, fit.epsilon))
    if (!r.k || Rational(static_cast<std::int64_t>(*r.k)) > fitted_bound(fit, r, t.is_perm())) bad.push_back(r);
  return bad;
}

}  // namespace ultralat

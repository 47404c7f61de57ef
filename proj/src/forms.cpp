#include "ultralat/forms.hpp"

#include <random>

#include "ultralat/error.hpp"

namespace ultralat {

std::string to_string(FormKind kind) {
  switch (kind) {
    case FormKind::Linear: return "linear";
    case FormKind::Alternating: return "alternating";
    case FormKind::Hermitian: return "hermitian";
    case FormKind::Symmetric: return "symmetric";
    case FormKind::Quadratic: return "quadratic";
  }
  return "?";
}

FormSpace::FormSpace(FormKind kind, FieldPtr field, Matrix gram, std::optional<Matrix> quad)
    : kind_(kind), field_(std::move(field)), gram_(std::move(gram)), quad_(std::move(quad)) {
  require(gram_.square(), "Gram matrix must be square");
  require(kind_ != FormKind::Quadratic || quad_.has_value(), "quadratic form needs coefficients");
  require(kind_ != FormKind::Hermitian || field_->has_conj(), "hermitian form needs an even-degree field");
  if (kind_ == FormKind::Quadratic) {
    const Matrix& c = *quad_;
    gram_ = c + c.transpose();
  }
}

Elem FormSpace::form(const Vec& u, const Vec& v) const {
  require(kind_ != FormKind::Linear, "no form on a linear space");
  const std::size_t n = dim();
  require(u.size() == n && v.size() == n, "vector dimension mismatch in form evaluation");
  const Field& f = *field_;
  const bool herm = kind_ == FormKind::Hermitian;
  Elem total{0};
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].v == 0) continue;
    Elem row{0};
    for (std::size_t j = 0; j < n; ++j) {
      const Elem g = gram_(i, j);
      if (g.v == 0 || v[j].v == 0) continue;
      row = f.add(row, f.mul(g, herm ? f.conj(v[j]) : v[j]));
    }
    total = f.add(total, f.mul(u[i], row));
  }
  return total;
}

Elem FormSpace::quad_form(const Vec& v) const {
  require(kind_ == FormKind::Quadratic, "quadratic form requested on a non-quadratic space");
  const std::size_t n = dim();
  require(v.size() == n, "vector dimension mismatch in quadratic form");
  const Field& f = *field_;
  const Matrix& c = *quad_;
  Elem total{0};
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].v == 0) continue;
    for (std::size_t j = i; j < n; ++j) {
      if (c(i, j).v == 0 || v[j].v == 0) continue;
      total = f.add(total, f.mul(c(i, j), f.mul(v[i], v[j])));
    }
  }
  return total;
}

Matrix FormSpace::restricted_gram(const std::vector<Vec>& basis) const {
  Matrix g(field_, basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = form(basis[i], basis[j]);
  return g;
}

bool FormSpace::preserves(const Matrix& g) const {
  require(g.square() && g.rows() == dim(), "matrix dimension does not match the space");
  require(g.field_ptr() == field_, "matrix over the wrong field");
  switch (kind_) {
    case FormKind::Linear:
      return det(g).v != 0;
    case FormKind::Alternating:
    case FormKind::Symmetric:
      return g.transpose() * gram_ * g == gram_;
    case FormKind::Hermitian:
      return g.transpose() * gram_ * g.conjugated() == gram_;
    case FormKind::Quadratic: {
      if (!(g.transpose() * gram_ * g == gram_)) return false;
      for (std::size_t i = 0; i < dim(); ++i) {
        Vec e(dim(), Elem{0});
        e[i] = Elem{1};
        if (quad_form(g * e) != quad_form(e)) return false;
      }
      return true;
    }
  }
  return false;
}

FormSpace standard_space(const GroupDescriptor& d) {
  validate(d);
  require(!d.is_alt(), "alternating groups have no form space");
  const auto field = Field::get(d.field_p(), d.field_k());
  const Field& f = *field;
  const std::size_t n = d.n;
  switch (d.family) {
    case Family::SL:
      return FormSpace(FormKind::Linear, field, Matrix::identity(field, n));
    case Family::Sp: {
      Matrix g(field, n, n);
      const std::size_t m = n / 2;
      for (std::size_t i = 0; i < m; ++i) {
        g(i, m + i) = f.one();
        g(m + i, i) = f.neg(f.one());
      }
      return FormSpace(FormKind::Alternating, field, g);
    }
    case Family::SU:
      return FormSpace(FormKind::Hermitian, field, Matrix::identity(field, n));
    case Family::OmegaOdd:
    case Family::OmegaPlus:
    case Family::OmegaMinus:
      break;
    case Family::Alt:
      break;
  }
  const bool plus = d.family == Family::OmegaPlus;
  if (f.p() != 2) {
    Elem nonsquare{0};
    for (const Elem x : f.nonzero()) {
      if (f.square_class(x) == 1) {
        nonsquare = x;
        break;
      }
    }
    Elem last = f.one();
    if (d.family == Family::OmegaOdd) {
      if (d.nonsquare_disc) last = nonsquare;
    } else {
      // Type + iff (-1)^m * disc is a square.
      const Elem sign = (n / 2) % 2 == 0 ? f.one() : f.neg(f.one());
      const bool square_with_one = f.is_square(sign);
      last = (square_with_one == plus) ? f.one() : nonsquare;
    }
    Vec diag(n, f.one());
    diag[n - 1] = last;
    FormSpace s(FormKind::Symmetric, field, Matrix::diag(field, diag));
    s.witt_type_ = d.family == Family::OmegaOdd ? 0 : (plus ? 1 : -1);
    s.nonsquare_disc_ = f.is_square(last) ? false : true;
    return s;
  }
  const std::size_t m = n / 2;
  Matrix c(field, n, n);
  for (std::size_t i = 0; i < m; ++i) c(i, m + i) = f.one();
  if (!plus) {
    // Least b with x^2 + x + b irreducible, i.e. b outside {t^2 + t}.
    Elem b{0};
    for (const Elem cand : f.nonzero()) {
      bool hit = false;
      for (const Elem t : f.elements()) hit = hit || f.add(f.mul(t, t), t) == cand;
      if (!hit) {
        b = cand;
        break;
      }
    }
    c(m - 1, m - 1) = f.one();
    c(n - 1, n - 1) = b;
  }
  FormSpace s(FormKind::Quadratic, field, Matrix(field, n, n), c);
  s.witt_type_ = plus ? 1 : -1;
  return s;
}

Subspace perp(const FormSpace& s, const Subspace& u) {
  require(s.kind() != FormKind::Linear, "perp needs a form");
  require(u.ambient() == s.dim(), "subspace dimension does not match the space");
  const Field& f = s.field();
  if (u.dim() == 0) return Subspace::full(s.field_ptr(), s.dim());
  // f(u, v) = (u^T G) s(v): the perp is s applied to ker(B G).
  const Matrix rows = u.basis_matrix() * s.gram();
  const Subspace k = kernel(rows);
  if (s.kind() != FormKind::Hermitian) return k;
  std::vector<Vec> conj_basis;
  for (auto v : k.basis()) {
    for (auto& x : v) x = f.conj(x);
    conj_basis.push_back(std::move(v));
  }
  return Subspace::span(s.field_ptr(), s.dim(), conj_basis);
}

bool is_nonsingular(const FormSpace& s, const Subspace& u) {
  require(s.kind() != FormKind::Linear, "non-singularity needs a form");
  if (u.dim() == 0) return true;
  return det(s.restricted_gram(u.basis())).v != 0;
}

namespace {

Vec axpy(const Field& f, const Vec& x, Elem a, const Vec& y) {
  Vec out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(out[i], f.mul(a, y[i]));
  return out;
}

bool has_anisotropic_kind(FormKind kind) {
  return kind == FormKind::Symmetric || kind == FormKind::Hermitian;
}

// A non-isotropic vector of span(vs), or nullopt.
std::optional<Vec> find_anisotropic(const FormSpace& s, const std::vector<Vec>& vs) {
  const Field& f = s.field();
  for (const auto& v : vs)
    if (s.form(v, v).v != 0) return v;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      for (const Elem a : f.nonzero()) {
        Vec w = axpy(f, vs[i], a, vs[j]);
        if (s.form(w, w).v != 0) return w;
      }
  return std::nullopt;
}

// A pair (a, b) in span(vs) with f(a, b) = 1, or nullopt.
std::optional<std::pair<Vec, Vec>> find_pair(const FormSpace& s, const std::vector<Vec>& vs) {
  const Field& f = s.field();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i == j) continue;
      const Elem c = s.form(vs[i], vs[j]);
      if (c.v == 0) continue;
      // f(a, t b) = s(t) f(a, b): scale b so the value is exactly 1.
      Elem t = f.inv(c);
      if (s.kind() == FormKind::Hermitian) t = f.conj(t);
      Vec b = vs[j];
      for (auto& x : b) x = f.mul(x, t);
      return std::make_pair(vs[i], b);
    }
  return std::nullopt;
}

// Basis of {x in span(vs) : f(x, w) = 0 for all w in ws}.
std::vector<Vec> complement_within(const FormSpace& s, const std::vector<Vec>& vs, const std::vector<Vec>& ws) {
  if (vs.empty()) return {};
  Matrix m(s.field_ptr(), ws.size(), vs.size());
  for (std::size_t t = 0; t < ws.size(); ++t)
    for (std::size_t i = 0; i < vs.size(); ++i) m(t, i) = s.form(vs[i], ws[t]);
  const Subspace k = kernel(m);
  const Field& f = s.field();
  std::vector<Vec> out;
  for (const auto& c : k.basis()) {
    Vec x(s.dim(), Elem{0});
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (c[i].v != 0) x = axpy(f, x, c[i], vs[i]);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Vec> all_combinations(const Field& f, const std::vector<Vec>& region, std::size_t n) {
  std::vector<Vec> out;
  for_each_vector(f, region.size(), [&](const Vec& c) {
    Vec x(n, Elem{0});
    for (std::size_t i = 0; i < region.size(); ++i)
      if (c[i].v != 0) x = axpy(f, x, c[i], region[i]);
    out.push_back(std::move(x));
  });
  return out;
}

bool is_zero(const Vec& v) {
  for (const Elem x : v)
    if (x.v != 0) return false;
  return true;
}

}  // namespace

std::vector<FormPiece> decompose(const FormSpace& s, const Subspace& u) {
  require(s.kind() != FormKind::Linear, "decomposition needs a form");
  std::vector<FormPiece> pieces;
  std::vector<Vec> rest = u.basis();
  while (!rest.empty()) {
    FormPiece piece;
    std::optional<Vec> aniso;
    if (has_anisotropic_kind(s.kind())) aniso = find_anisotropic(s, rest);
    if (aniso) {
      piece.vectors = {*aniso};
    } else {
      auto pair = find_pair(s, rest);
      require(pair.has_value(), "subspace is singular");
      piece.vectors = {pair->first, pair->second};
    }
    auto next = complement_within(s, rest, piece.vectors);
    require(next.size() + piece.vectors.size() == rest.size(), "subspace is singular");
    rest = std::move(next);
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

Vec LinearMap::apply(const FieldPtr& field, const Vec& v) const {
  require(!source.empty(), "empty linear map");
  const Matrix a = Matrix::from_columns(field, v.size(), source);
  Vec c;
  require(solve(a, v, c), "vector outside the domain of the map");
  const Field& f = *field;
  Vec out(images.front().size(), Elem{0});
  for (std::size_t i = 0; i < images.size(); ++i) out = axpy(f, out, c[i], images[i]);
  return out;
}

std::optional<std::vector<Vec>> embed_pieces(const FormSpace& s, const std::vector<FormPiece>& pieces,
                                             const Subspace& x) {
  const Field& f = s.field();
  const std::size_t n = s.dim();
  Subspace cur = x;
  std::vector<Vec> images;
  for (const auto& piece : pieces) {
    // Search region: all of cur when small, otherwise a non-singular block of
    // dimension about four taken from its canonical decomposition.
    std::vector<Vec> region;
    if (cur.dim() <= 4) {
      region = cur.basis();
    } else {
      for (const auto& p : decompose(s, cur)) {
        if (region.size() >= 4) break;
        region.insert(region.end(), p.vectors.begin(), p.vectors.end());
      }
    }
    const auto cands = all_combinations(f, region, n);
    std::vector<Vec> found;
    if (piece.vectors.size() == 1) {
      const Elem target = s.form(piece.vectors[0], piece.vectors[0]);
      for (const auto& c : cands) {
        if (s.form(c, c) == target) {
          found = {c};
          break;
        }
      }
    } else {
      const bool quad = s.kind() == FormKind::Quadratic;
      const Elem target = s.form(piece.vectors[0], piece.vectors[1]);
      const Elem qa = quad ? s.quad_form(piece.vectors[0]) : Elem{0};
      const Elem qb = quad ? s.quad_form(piece.vectors[1]) : Elem{0};
      for (const auto& a : cands) {
        if (is_zero(a) || (quad && s.quad_form(a) != qa)) continue;
        for (const auto& b : cands) {
          if (s.form(a, b) != target) continue;
          if (quad && s.quad_form(b) != qb) continue;
          // Symmetric and hermitian pairs also need matching diagonal values.
          if (has_anisotropic_kind(s.kind()) &&
              (s.form(a, a) != s.form(piece.vectors[0], piece.vectors[0]) ||
               s.form(b, b) != s.form(piece.vectors[1], piece.vectors[1])))
            continue;
          found = {a, b};
          break;
        }
        if (!found.empty()) break;
      }
    }
    if (found.empty()) return std::nullopt;
    images.insert(images.end(), found.begin(), found.end());
    cur = intersect(cur, perp(s, Subspace::span(s.field_ptr(), n, found)));
  }
  return images;
}

std::optional<LinearMap> isometry_between(const FormSpace& s, const Subspace& u, const Subspace& w) {
  require(u.dim() == w.dim(), "isometry between subspaces of different dimension");
  require(is_nonsingular(s, u) && is_nonsingular(s, w), "isometry_between needs non-singular subspaces");
  if (u.dim() == 0) return LinearMap{};
  if (u == w) return LinearMap{u.basis(), u.basis()};
  const auto pieces = decompose(s, u);
  auto images = embed_pieces(s, pieces, w);
  if (!images) return std::nullopt;
  LinearMap map;
  for (const auto& p : pieces) map.source.insert(map.source.end(), p.vectors.begin(), p.vectors.end());
  map.images = std::move(*images);
  return map;
}

Subspace extract_nonsingular(const FormSpace& s, const Subspace& u) {
  require(s.kind() != FormKind::Linear, "extraction needs a form");
  const std::size_t n = s.dim();
  std::vector<Vec> chosen;
  while (true) {
    const Subspace w = Subspace::span(s.field_ptr(), n, chosen);
    const Subspace c = intersect(perp(s, w), u);
    if (c.dim() == 0) break;
    if (has_anisotropic_kind(s.kind())) {
      if (auto v = find_anisotropic(s, c.basis())) {
        chosen.push_back(*v);
        continue;
      }
    }
    if (auto pair = find_pair(s, c.basis())) {
      chosen.push_back(pair->first);
      chosen.push_back(pair->second);
      continue;
    }
    break;
  }
  return Subspace::span(s.field_ptr(), n, chosen);
}

Subspace random_nonsingular(const FormSpace& s, std::size_t dim, std::uint64_t seed, std::uint64_t index) {
  require(dim >= 1 && dim <= s.dim(), "subspace dimension out of range");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  const std::uint32_t q = s.field().q();
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Vec> vs(dim, Vec(s.dim()));
    for (auto& v : vs)
      for (auto& x : v) x = Elem{static_cast<std::uint16_t>(rng() % q)};
    const Subspace u = Subspace::span(s.field_ptr(), s.dim(), vs);
    if (u.dim() == dim && is_nonsingular(s, u)) return u;
  }
  fail("no non-singular subspace of dimension " + std::to_string(dim) + " found");
}

}  // namespace ultralat

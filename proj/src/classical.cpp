#include "ultralat/classical.hpp"

#include <algorithm>

#include "ultralat/error.hpp"

namespace ultralat {

namespace {

FieldPtr field_of(const GroupDescriptor& d) { return Field::get(d.field_p(), d.field_k()); }

void check_matrix(const GroupDescriptor& d, const Matrix& g) {
  require(!d.is_alt(), "matrix operations need a classical descriptor");
  require(g.square() && g.rows() == d.n, d.to_string() + ": matrix must be " + std::to_string(d.n) + "x" +
                                             std::to_string(d.n));
  require(g.field_ptr() == field_of(d), d.to_string() + ": matrix over the wrong field");
}

// Row vector r with f(x, v) = sum_j x_j r_j.
Vec form_row(const FormSpace& s, const Vec& v) {
  const Field& f = s.field();
  const bool herm = s.kind() == FormKind::Hermitian;
  Vec r(s.dim(), Elem{0});
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const Elem g = s.gram()(i, j);
      if (g.v == 0 || v[j].v == 0) continue;
      r[i] = f.add(r[i], f.mul(g, herm ? f.conj(v[j]) : v[j]));
    }
  return r;
}

// x -> x + c f(x, v) w.
Matrix rank_one_update(const FormSpace& s, const Vec& w, Elem c, const Vec& v) {
  const Field& f = s.field();
  const Vec r = form_row(s, v);
  Matrix m = Matrix::identity(s.field_ptr(), s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (w[i].v == 0) continue;
    const Elem wi = f.mul(c, w[i]);
    for (std::size_t j = 0; j < s.dim(); ++j) m(i, j) = f.add(m(i, j), f.mul(wi, r[j]));
  }
  return m;
}

// Fixes v^perp pointwise and sends v to eps v (v non-isotropic).
Matrix scale_along(const FormSpace& s, const Vec& v, Elem eps) {
  const Field& f = s.field();
  const Elem c = f.div(f.sub(eps, f.one()), s.form(v, v));
  return rank_one_update(s, v, c, v);
}

std::vector<Vec> span_vectors(const Subspace& u) {
  const Field& f = u.field();
  std::vector<Vec> out;
  for_each_vector(f, u.dim(), [&](const Vec& c) {
    Vec x(u.ambient(), Elem{0});
    for (std::size_t i = 0; i < u.dim(); ++i)
      if (c[i].v != 0)
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = f.add(x[j], f.mul(c[i], u.basis()[i][j]));
    out.push_back(std::move(x));
  });
  return out;
}

bool is_zero(const Vec& v) {
  for (const Elem x : v)
    if (x.v != 0) return false;
  return true;
}

// Projective representatives: nonzero vectors whose first nonzero coordinate is 1.
std::vector<Vec> projective_points(const Field& f, std::size_t n) {
  std::vector<Vec> out;
  for_each_vector(f, n, [&](const Vec& v) {
    for (const Elem x : v) {
      if (x.v == 0) continue;
      if (x == f.one()) out.push_back(v);
      return;
    }
  });
  return out;
}

bool anisotropic(const FormSpace& s, const Vec& v) {
  if (s.kind() == FormKind::Quadratic) return s.quad_form(v).v != 0;
  return s.form(v, v).v != 0;
}

}  // namespace

Matrix reflection(const FormSpace& s, const Vec& v) {
  const Field& f = s.field();
  if (s.kind() == FormKind::Quadratic) {
    const Elem qv = s.quad_form(v);
    require(qv.v != 0, "reflection in a singular vector");
    return rank_one_update(s, v, f.neg(f.inv(qv)), v);
  }
  require(s.kind() == FormKind::Symmetric, "reflections need a symmetric or quadratic form");
  require(s.form(v, v).v != 0, "reflection in an isotropic vector");
  return scale_along(s, v, f.neg(f.one()));
}

int spinor_norm(const FormSpace& s, const Matrix& g) {
  require(s.kind() == FormKind::Symmetric, "spinor norm needs a symmetric form over odd q");
  require(s.preserves(g), "spinor norm of a non-isometry");
  const Field& f = s.field();
  require(det(g) == f.one(), "spinor norm needs determinant one");
  const std::size_t n = s.dim();
  // Wall form on U = im(g - 1): [u, v] = B(x, v) where (g - 1)x = u. The choice of x
  // only matters up to the fixed space, which is orthogonal to U. The square class of
  // its determinant is the spinor norm; im(g - 1) has even dimension, so the factor
  // -1/2 relating this to products of reflection norms is a square.
  const Matrix d = g - Matrix::identity(s.field_ptr(), n);
  const Subspace u = image(d, Subspace::full(s.field_ptr(), n));
  const std::size_t m = u.dim();
  if (m == 0) return 0;
  std::vector<Vec> pre(m);
  for (std::size_t i = 0; i < m; ++i)
    if (!solve(d, u.basis()[i], pre[i])) internal_fail("image vector without a preimage");
  Matrix w(s.field_ptr(), m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) w(i, j) = s.form(pre[i], u.basis()[j]);
  const Elem dw = det(w);
  if (dw.v == 0) internal_fail("degenerate Wall form");
  return f.square_class(dw);
}

int spinor_norm(const GroupDescriptor& d, const Matrix& g) {
  require(d.is_orthogonal(), "spinor norm needs an orthogonal family");
  require(d.field_p() != 2, "spinor norm needs odd q");
  check_matrix(d, g);
  return spinor_norm(standard_space(d), g);
}

int dickson_invariant(const GroupDescriptor& d, const Matrix& g) {
  require(d.is_orthogonal(), "Dickson invariant needs an orthogonal family");
  require(d.field_p() == 2, "Dickson invariant needs even q");
  check_matrix(d, g);
  require(standard_space(d).preserves(g), "Dickson invariant of a non-isometry");
  return static_cast<int>(rank(g - Matrix::identity(g.field_ptr(), d.n)) % 2);
}

bool contains(const GroupDescriptor& d, const Matrix& g, Level level) {
  validate(d);
  check_matrix(d, g);
  const Field& f = g.field();
  switch (d.family) {
    case Family::SL:
      return level == Level::Full ? det(g).v != 0 : det(g) == f.one();
    case Family::Sp:
      return standard_space(d).preserves(g);
    case Family::SU:
      return standard_space(d).preserves(g) && (level == Level::Full || det(g) == f.one());
    case Family::Alt:
      break;
    default: {
      const FormSpace s = standard_space(d);
      if (!s.preserves(g)) return false;
      if (level == Level::Full) return true;
      if (f.p() == 2) {
        if (level == Level::Special) return true;
        return rank(g - Matrix::identity(g.field_ptr(), d.n)) % 2 == 0;
      }
      if (det(g) != f.one()) return false;
      if (level == Level::Special) return true;
      return spinor_norm(s, g) == 0;
    }
  }
  fail("membership needs a classical descriptor");
}

std::vector<Elem> quasiscalars(const GroupDescriptor& d) {
  validate(d);
  require(!d.is_alt(), "quasiscalars need a classical descriptor");
  const auto field = field_of(d);
  const Field& f = *field;
  std::vector<Elem> out;
  switch (d.family) {
    case Family::SL:
      return f.nonzero();
    case Family::SU:
      for (const Elem x : f.nonzero())
        if (f.pow(x, static_cast<std::int64_t>(d.q) + 1) == f.one()) out.push_back(x);
      return out;
    default:
      out.push_back(f.one());
      if (f.neg(f.one()) != f.one()) out.push_back(f.neg(f.one()));
      return out;
  }
}

Matrix quasiscalar_witness(const GroupDescriptor& d, Elem lambda) {
  const auto s = quasiscalars(d);
  require(std::find(s.begin(), s.end(), lambda) != s.end(), d.to_string() + ": scalar is not a quasiscalar");
  const auto field = field_of(d);
  const Field& f = *field;
  const std::size_t n = d.n;
  if (lambda == f.one()) return Matrix::identity(field, n);
  Vec diag(n, lambda);
  switch (d.family) {
    case Family::SL:
    case Family::SU:
      diag[n - 1] = f.pow(lambda, -static_cast<std::int64_t>(n - 1));
      break;
    case Family::Sp:
      break;
    case Family::OmegaOdd:
      diag[n - 1] = f.one();
      break;
    default:
      diag[n - 2] = f.one();
      diag[n - 1] = f.one();
      break;
  }
  Matrix h = Matrix::diag(field, diag);
  if (!contains(d, h)) internal_fail(d.to_string() + ": quasiscalar witness is not a member");
  return h;
}

SwapWitness swap_element(const GroupDescriptor& d, const Subspace& u) {
  validate(d);
  require(!d.is_alt() && d.family != Family::SL, "swap_element needs a family with a form");
  const FormSpace s = standard_space(d);
  const Field& f = s.field();
  const std::size_t n = d.n;
  const std::size_t l = u.dim();
  require(u.ambient() == n, "subspace dimension does not match the group");
  require(l >= 2 && 2 * l < n, "swap_element needs 2 <= dim U < n/2");
  require(is_nonsingular(s, u), "swap_element needs a non-singular subspace");

  const auto pieces = decompose(s, u);
  std::vector<Vec> src;
  for (const auto& p : pieces) src.insert(src.end(), p.vectors.begin(), p.vectors.end());
  const Subspace up = perp(s, u);
  const auto img = embed_pieces(s, pieces, up);
  if (!img) internal_fail("no isometric copy of U inside its perp");
  const Subspace w1 = Subspace::span(s.field_ptr(), n, *img);
  const Subspace w2 = intersect(up, perp(s, w1));

  // h1 swaps src[i] <-> img[i] and fixes W2.
  std::vector<Vec> from = src, to = *img;
  from.insert(from.end(), img->begin(), img->end());
  to.insert(to.end(), src.begin(), src.end());
  for (const auto& w : w2.basis()) {
    from.push_back(w);
    to.push_back(w);
  }
  const Matrix h1 = basis_change(s.field_ptr(), to) * inverse(basis_change(s.field_ptr(), from));

  // Corrections act on U only and fix U^perp, so they keep the swap property.
  Matrix h = h1;
  const auto u_vectors = span_vectors(u);
  switch (d.family) {
    case Family::Sp:
      break;
    case Family::SU: {
      const Elem dt = det(h);
      if (dt != f.one()) {
        const Vec& v = pieces.front().vectors.front();
        h = h * scale_along(s, v, f.inv(dt));
      }
      break;
    }
    default:
      if (f.p() != 2) {
        if (det(h) != f.one()) h = h * reflection(s, pieces.front().vectors.front());
        if (spinor_norm(s, h) != 0) {
          const Vec* sq = nullptr;
          const Vec* nsq = nullptr;
          for (const auto& v : u_vectors) {
            const Elem fv = s.form(v, v);
            if (fv.v == 0) continue;
            if (!sq && f.square_class(fv) == 0) sq = &v;
            if (!nsq && f.square_class(fv) == 1) nsq = &v;
          }
          if (!sq || !nsq) internal_fail("U lacks vectors of both square classes");
          h = h * reflection(s, *sq) * reflection(s, *nsq);
        }
      } else if (rank(h - Matrix::identity(s.field_ptr(), n)) % 2 != 0) {
        const Vec* v = nullptr;
        for (const auto& x : u_vectors)
          if (s.quad_form(x).v != 0) {
            v = &x;
            break;
          }
        if (!v) internal_fail("U has no non-singular vector");
        h = h * reflection(s, *v);
      }
      break;
  }
  if (!contains(d, h)) internal_fail(d.to_string() + ": swap witness is not a member");
  return SwapWitness{h, h1, w1, w2};
}

std::optional<Elem> projective_scalar(const GroupDescriptor& d, const Matrix& g) {
  check_matrix(d, g);
  const Field& f = g.field();
  std::optional<Elem> found;
  for (const Elem lambda : f.nonzero()) {
    if (4 * rank(g - Matrix::scalar(g.field_ptr(), d.n, lambda)) < d.n) {
      if (found) internal_fail("two scalars with rank length below 1/4");
      found = lambda;
    }
  }
  return found;
}

std::vector<Matrix> standard_generators(const GroupDescriptor& d, Level level) {
  validate(d);
  require(!d.is_alt(), "matrix generators need a classical descriptor");
  const auto field = field_of(d);
  const Field& f = *field;
  const std::size_t n = d.n;
  std::vector<Matrix> gens;
  if (d.family == Family::SL) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (const Elem a : f.additive_basis()) {
          Matrix m = Matrix::identity(field, n);
          m(i, j) = a;
          gens.push_back(std::move(m));
        }
      }
    return gens;
  }
  const FormSpace s = standard_space(d);
  if (d.family == Family::Sp) {
    for_each_vector(f, n, [&](const Vec& w) {
      for (const Elem x : w)
        if (x.v > 1) return;
      if (is_zero(w)) return;
      for (const Elem a : f.additive_basis()) gens.push_back(rank_one_update(s, w, a, w));
    });
    return gens;
  }
  if (d.family == Family::SU) {
    std::vector<Elem> traceless;
    for (const Elem a : f.nonzero())
      if (f.rel_trace(a).v == 0) traceless.push_back(a);
    for (const auto& w : projective_points(f, n)) {
      if (s.form(w, w).v != 0) continue;
      for (const Elem a : traceless) gens.push_back(rank_one_update(s, w, a, w));
    }
    return gens;
  }
  std::vector<Vec> aniso;
  for (const auto& v : projective_points(f, n))
    if (anisotropic(s, v)) aniso.push_back(v);
  if (level == Level::Full || (f.p() == 2 && level == Level::Special)) {
    for (const auto& v : aniso) gens.push_back(reflection(s, v));
    return gens;
  }
  auto cls = [&](const Vec& v) { return f.p() == 2 ? 0 : f.square_class(s.form(v, v)); };
  const Vec* base[2] = {nullptr, nullptr};
  for (const auto& v : aniso)
    if (!base[cls(v)]) base[cls(v)] = &v;
  for (const auto& v : aniso) {
    const int c = level == Level::Special ? 0 : cls(v);
    const Vec* a = level == Level::Special ? base[0] : base[c];
    if (a == nullptr || a == &v) continue;
    gens.push_back(reflection(s, *a) * reflection(s, v));
  }
  return gens;
}

}  // namespace ultralat

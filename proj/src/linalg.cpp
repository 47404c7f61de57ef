#include "ultralat/linalg.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "ultralat/error.hpp"

namespace ultralat {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Elem{0}) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  return scalar(std::move(field), n, Elem{1});
}

Matrix Matrix::scalar(FieldPtr field, std::size_t n, Elem lambda) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = lambda;
  return m;
}

Matrix Matrix::diag(FieldPtr field, const Vec& entries) {
  Matrix m(std::move(field), entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<Vec>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(FieldPtr field, std::size_t n, const std::vector<Vec>& cols) {
  Matrix m(std::move(field), n, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require(cols[c].size() == n, "column length mismatch");
    for (std::size_t r = 0; r < n; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  require(cols_ == other.rows_, "matrix product dimension mismatch");
  require(field_ == other.field_, "matrix product over different fields");
  const Field& f = *field_;
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t l = 0; l < cols_; ++l) {
      const Elem a = (*this)(i, l);
      if (a.v == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out(i, j) = f.add(out(i, j), f.mul(a, other(l, j)));
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix sum dimension mismatch");
  require(field_ == other.field_, "matrix sum over different fields");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], other.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix difference dimension mismatch");
  require(field_ == other.field_, "matrix difference over different fields");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->sub(data_[i], other.data_[i]);
  return out;
}

Vec Matrix::operator*(const Vec& v) const {
  require(v.size() == cols_, "matrix-vector dimension mismatch");
  const Field& f = *field_;
  Vec out(rows_, Elem{0});
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem s{0};
    for (std::size_t j = 0; j < cols_; ++j) s = f.add(s, f.mul((*this)(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

Matrix Matrix::scaled(Elem s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_->mul(x, s);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::conjugated() const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_->conj(x);
  return out;
}

bool Matrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j).v != (i == j ? 1 : 0)) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j).v != 0) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).v == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Elem s = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).v == 0) continue;
      const Elem factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return row_reduce(copy).size();
}

Subspace kernel(const Matrix& m) {
  Matrix red = m;
  const auto pivots = row_reduce(red);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  const Field& f = m.field();
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), Elem{0});
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(red(r, free));
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field_ptr(), m.cols(), basis);
}

Elem det(const Matrix& m) {
  require(m.square(), "determinant of a non-square matrix");
  const Field& f = m.field();
  Matrix a = m;
  Elem d = f.one();
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).v == 0) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      d = f.neg(d);
    }
    d = f.mul(d, a(c, c));
    const Elem s = f.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).v == 0) continue;
      const Elem factor = f.mul(a(i, c), s);
      for (std::size_t j = c; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(c, j)));
    }
  }
  return d;
}

Matrix inverse(const Matrix& m) {
  require(m.square(), "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field_ptr(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  const auto pivots = row_reduce(aug);
  require(pivots.size() >= n && pivots[n - 1] == n - 1, "matrix is singular");
  Matrix out(m.field_ptr(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

bool solve(const Matrix& a, const Vec& b, Vec& x) {
  require(b.size() == a.rows(), "right-hand side length mismatch");
  Matrix aug(a.field_ptr(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return false;
  x.assign(a.cols(), Elem{0});
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return true;
}

Subspace eigenspace(const Matrix& g, Elem lambda) {
  require(g.square(), "eigenspace of a non-square matrix");
  return kernel(g - Matrix::scalar(g.field_ptr(), g.rows(), lambda));
}

ShiftRank min_shift_rank(const Matrix& g, const std::vector<Elem>& candidates) {
  require(g.square(), "shift rank of a non-square matrix");
  require(!candidates.empty(), "empty scalar set");
  ShiftRank best{candidates.front(), g.rows() + 1};
  for (const Elem mu : candidates) {
    const std::size_t r = rank(g - Matrix::scalar(g.field_ptr(), g.rows(), mu));
    if (r < best.rank || (r == best.rank && mu < best.shift)) best = {mu, r};
  }
  return best;
}

Matrix block_embed(const std::vector<Matrix>& parts) {
  require(!parts.empty(), "no blocks to embed");
  std::size_t n = 0;
  for (const auto& p : parts) {
    require(p.square(), "blocks must be square");
    require(p.field_ptr() == parts.front().field_ptr(), "blocks over mixed fields");
    n += p.rows();
  }
  Matrix out(parts.front().field_ptr(), n, n);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) out(off + i, off + j) = p(i, j);
    off += p.rows();
  }
  return out;
}

Matrix basis_change(FieldPtr field, const std::vector<Vec>& basis) {
  require(!basis.empty(), "empty basis");
  return Matrix::from_columns(std::move(field), basis.front().size(), basis);
}

// --- Subspace ---------------------------------------------------------------

Subspace::Subspace(FieldPtr field, std::size_t n) : field_(std::move(field)), n_(n) {}

Subspace Subspace::span(FieldPtr field, std::size_t n, const std::vector<Vec>& vectors) {
  Subspace s(field, n);
  if (vectors.empty()) return s;
  Matrix m(field, vectors.size(), n);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    require(vectors[r].size() == n, "vector length mismatch in span");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = vectors[r][c];
  }
  const auto pivots = row_reduce(m);
  for (std::size_t r = 0; r < pivots.size(); ++r) s.basis_.push_back(m.row(r));
  return s;
}

Subspace Subspace::full(FieldPtr field, std::size_t n) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) {
    Vec v(n, Elem{0});
    v[i] = Elem{1};
    basis.push_back(std::move(v));
  }
  return span(std::move(field), n, basis);
}

Subspace Subspace::row_space(const Matrix& m) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return span(m.field_ptr(), m.cols(), rows);
}

bool Subspace::contains(const Vec& v) const {
  require(v.size() == n_, "vector length mismatch");
  const Field& f = *field_;
  Vec rest = v;
  for (const auto& b : basis_) {
    std::size_t piv = 0;
    while (b[piv].v == 0) ++piv;
    const Elem c = rest[piv];
    if (c.v == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) rest[j] = f.sub(rest[j], f.mul(c, b[j]));
  }
  for (const Elem x : rest)
    if (x.v != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis()) {
    if (!contains(v)) return false;
  }
  return true;
}

Matrix Subspace::basis_matrix() const {
  Matrix m(field_, basis_.size(), n_);
  for (std::size_t r = 0; r < basis_.size(); ++r)
    for (std::size_t c = 0; c < n_; ++c) m(r, c) = basis_[r][c];
  return m;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require(a.ambient() == b.ambient(), "subspace sum in different ambient spaces");
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field_ptr(), a.ambient(), all);
}

namespace {

// Annihilator under the standard dot product.
Subspace annihilator(const Subspace& u) {
  if (u.dim() == 0) return Subspace::full(u.field_ptr(), u.ambient());
  return kernel(u.basis_matrix());
}

}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
  require(a.ambient() == b.ambient(), "subspace intersection in different ambient spaces");
  return annihilator(sum(annihilator(a), annihilator(b)));
}

Subspace image(const Matrix& m, const Subspace& u) {
  std::vector<Vec> vs;
  for (const auto& v : u.basis()) vs.push_back(m * v);
  return Subspace::span(m.field_ptr(), m.rows(), vs);
}

void for_each_vector(const Field& field, std::size_t n, const std::function<void(const Vec&)>& visit) {
  Vec v(n, Elem{0});
  const std::uint32_t q = field.q();
  while (true) {
    visit(v);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (v[i].v + 1u < q) {
        v[i].v = static_cast<std::uint16_t>(v[i].v + 1);
        break;
      }
      v[i].v = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

void for_each_subspace(const FieldPtr& field, std::size_t n, std::size_t dim,
                       const std::function<void(const Subspace&)>& visit) {
  require(dim <= n, "subspace dimension exceeds ambient dimension");
  if (dim == 0) {
    visit(Subspace(field, n));
    return;
  }
  std::vector<std::size_t> pivots(dim);
  for (std::size_t i = 0; i < dim; ++i) pivots[i] = i;
  while (true) {
    // Free positions: (row r, column c) with c > pivots[r] and c not a pivot.
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = pivots[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(r, c);
    for_each_vector(*field, free.size(), [&](const Vec& vals) {
      std::vector<Vec> rows(dim, Vec(n, Elem{0}));
      for (std::size_t r = 0; r < dim; ++r) rows[r][pivots[r]] = Elem{1};
      for (std::size_t i = 0; i < free.size(); ++i) rows[free[i].first][free[i].second] = vals[i];
      visit(Subspace::span(field, n, rows));
    });
    // Next combination of pivot columns.
    std::size_t i = dim;
    while (i > 0 && pivots[i - 1] == n - dim + (i - 1)) --i;
    if (i == 0) return;
    ++pivots[i - 1];
    for (std::size_t j = i; j < dim; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

// --- text format ------------------------------------------------------------

void write_matrix(std::ostream& out, const Matrix& m) {
  const Field& f = m.field();
  out << f.p() << ' ' << f.k() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << f.format(m(i, j));
    }
    out << '\n';
  }
}

Matrix read_matrix(std::istream& in) {
  std::uint32_t p = 0, k = 0;
  std::size_t rows = 0, cols = 0;
  if (!(in >> p >> k >> rows >> cols)) fail("malformed matrix header; expected 'p k rows cols'");
  const auto field = Field::get(p, k);
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::string tok;
      if (!(in >> tok)) fail("matrix data ended early");
      m(i, j) = field->parse(tok);
    }
  }
  return m;
}

std::string to_text(const Matrix& m) {
  std::ostringstream ss;
  write_matrix(ss, m);
  return ss.str();
}

Matrix from_text(const std::string& text) {
  std::istringstream ss(text);
  return read_matrix(ss);
}

}  // namespace ultralat

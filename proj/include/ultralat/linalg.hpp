#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ultralat/gf.hpp"

namespace ultralat {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a finite field.
class Matrix {
public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix scalar(FieldPtr field, std::size_t n, Elem lambda);
  static Matrix diag(FieldPtr field, const Vec& entries);
  static Matrix from_rows(FieldPtr field, const std::vector<Vec>& rows);
  static Matrix from_columns(FieldPtr field, std::size_t n, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  std::span<const Elem> data() const { return data_; }

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Vec operator*(const Vec& v) const;
  Matrix scaled(Elem s) const;
  Matrix transpose() const;
  /// Entrywise x -> x^(p^(k/2)).
  Matrix conjugated() const;

  bool is_identity() const;
  bool is_diagonal() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  Vec data_;
};

/// A subspace of F^n, stored by its reduced row echelon basis so that equal subspaces
/// have equal representations.
class Subspace {
public:
  Subspace() = default;
  Subspace(FieldPtr field, std::size_t n);  // the zero subspace

  static Subspace span(FieldPtr field, std::size_t n, const std::vector<Vec>& vectors);
  static Subspace full(FieldPtr field, std::size_t n);
  static Subspace row_space(const Matrix& m);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Basis rows as a dim x n matrix.
  Matrix basis_matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

private:
  FieldPtr field_;
  std::size_t n_ = 0;
  std::vector<Vec> basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// {M v : v in U}.
Subspace image(const Matrix& m, const Subspace& u);

/// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(const Matrix& m);
Subspace kernel(const Matrix& m);
Elem det(const Matrix& m);
/// Throws on singular input.
Matrix inverse(const Matrix& m);
/// Solves A x = b; returns false when inconsistent.
bool solve(const Matrix& a, const Vec& b, Vec& x);

/// ker(g - lambda I).
Subspace eigenspace(const Matrix& g, Elem lambda);

struct ShiftRank {
  Elem shift;
  std::size_t rank = 0;
};

/// min over mu in candidates of rank(g - mu I); ties resolved to the least mu.
ShiftRank min_shift_rank(const Matrix& g, const std::vector<Elem>& candidates);

/// Block-diagonal matrix with the given square parts.
Matrix block_embed(const std::vector<Matrix>& parts);

/// Change of basis: the matrix of the map that sends standard column j to basis[j].
Matrix basis_change(FieldPtr field, const std::vector<Vec>& basis);

/// Calls visit(U) for every subspace of F^n of the given dimension, generated from
/// echelon forms. Test-oracle helper; cost grows like q^(dim (n - dim)).
void for_each_subspace(const FieldPtr& field, std::size_t n, std::size_t dim,
                       const std::function<void(const Subspace&)>& visit);

/// Calls visit(v) for every vector of F^n in lexicographic order of coordinates.
void for_each_vector(const Field& field, std::size_t n, const std::function<void(const Vec&)>& visit);

/// Text format: "p k rows cols" then one line per row of space-separated elements.
void write_matrix(std::ostream& out, const Matrix& m);
Matrix read_matrix(std::istream& in);
std::string to_text(const Matrix& m);
Matrix from_text(const std::string& text);

}  // namespace ultralat

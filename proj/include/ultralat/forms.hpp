#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ultralat/descriptor.hpp"
#include "ultralat/linalg.hpp"

namespace ultralat {

enum class FormKind { Linear, Alternating, Hermitian, Symmetric, Quadratic };

std::string to_string(FormKind kind);

/// The natural module of a classical group together with its form.
///
/// f(u, v) = sum_ij u_i G_ij s(v_j), where s is the field conjugation for hermitian
/// forms and the identity otherwise. For the quadratic kind the coefficients
/// Q(x) = sum_{i <= j} c_ij x_i x_j are primary and G is their polarization, so f and Q
/// cannot disagree.
class FormSpace {
public:
  FormSpace(FormKind kind, FieldPtr field, Matrix gram, std::optional<Matrix> quad = std::nullopt);

  FormKind kind() const { return kind_; }
  std::size_t dim() const { return gram_.rows(); }
  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  const Matrix& gram() const { return gram_; }
  /// Upper-triangular quadratic coefficients; only for the quadratic kind.
  const Matrix& quad() const { return *quad_; }

  /// +1 or -1 for even-dimensional orthogonal spaces (the Witt type), 0 otherwise.
  int witt_type() const { return witt_type_; }
  bool nonsquare_disc() const { return nonsquare_disc_; }

  Elem form(const Vec& u, const Vec& v) const;
  /// Q(v). Only for the quadratic kind.
  Elem quad_form(const Vec& v) const;

  /// Gram matrix of f restricted to the given basis rows.
  Matrix restricted_gram(const std::vector<Vec>& basis) const;

  /// Whether the matrix preserves f (and Q for the quadratic kind). For the linear kind,
  /// whether it is invertible.
  bool preserves(const Matrix& g) const;

private:
  friend FormSpace standard_space(const GroupDescriptor& d);

  FormKind kind_;
  FieldPtr field_;
  Matrix gram_;
  std::optional<Matrix> quad_;
  int witt_type_ = 0;
  bool nonsquare_disc_ = false;
};

/// Standard form space for a descriptor:
///  - SL: no form;
///  - Sp(2m): f(e_i, e_{m+i}) = 1 = -f(e_{m+i}, e_i);
///  - SU: orthonormal hermitian basis over GF(q^2);
///  - orthogonal, q odd: diagonal Gram diag(1,...,1,d) with d a square or a fixed
///    non-square, chosen by the ":d" flag (odd n) or the Witt type (even n);
///  - orthogonal, q even: Q = sum x_i x_{m+i} (plus x_m^2 + b x_{2m}^2 with x^2+x+b
///    irreducible for the minus type).
FormSpace standard_space(const GroupDescriptor& d);

Subspace perp(const FormSpace& s, const Subspace& u);
bool is_nonsingular(const FormSpace& s, const Subspace& u);

/// Greedy maximal non-singular W <= U: grow by single non-isotropic vectors of
/// W^perp ∩ U, then by pairs with f(u, v) != 0. Guarantees dim W >= 2 dim U - n.
Subspace extract_nonsingular(const FormSpace& s, const Subspace& u);

/// An orthogonal piece of a non-singular subspace: one non-isotropic vector, or a pair
/// (a, b) with f(a, b) = 1 for the alternating and quadratic kinds.
struct FormPiece {
  std::vector<Vec> vectors;
};

/// Splits a non-singular subspace into mutually orthogonal pieces whose vectors form a
/// basis of it. Throws when the subspace is singular.
std::vector<FormPiece> decompose(const FormSpace& s, const Subspace& u);

/// A linear map given on a basis.
struct LinearMap {
  std::vector<Vec> source;
  std::vector<Vec> images;

  Vec apply(const FieldPtr& field, const Vec& v) const;
};

/// Finds vectors in the non-singular subspace X spanning a copy of the given pieces with
/// identical form data (and Q values). Returns nullopt if no copy exists.
std::optional<std::vector<Vec>> embed_pieces(const FormSpace& s, const std::vector<FormPiece>& pieces,
                                             const Subspace& x);

/// Isometry U -> W built by matching canonical decompositions; nullopt iff U and W are
/// not isometric. Both must be non-singular and of equal dimension.
std::optional<LinearMap> isometry_between(const FormSpace& s, const Subspace& u, const Subspace& w);

/// A uniformly drawn non-singular subspace of the given dimension (rejection sampling on
/// spans of random vectors), reproducible from (seed, index).
Subspace random_nonsingular(const FormSpace& s, std::size_t dim, std::uint64_t seed, std::uint64_t index);

}  // namespace ultralat

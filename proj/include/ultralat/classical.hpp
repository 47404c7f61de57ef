#pragma once

#include <optional>
#include <vector>

#include "ultralat/descriptor.hpp"
#include "ultralat/forms.hpp"
#include "ultralat/linalg.hpp"

namespace ultralat {

/// Membership in the group of the given level. Level::Group is the quasisimple member of
/// the family (SL, SU, Sp, or Omega). For orthogonal families Special is SO and Full is
/// the full isometry group GO. Throws on dimension or field mismatch.
bool contains(const GroupDescriptor& d, const Matrix& g, Level level = Level::Group);

/// Reflection in an anisotropic vector: x - 2 f(x,v)/f(v,v) v for symmetric forms, or the
/// orthogonal transvection x - B(x,v)/Q(v) v for quadratic forms.
Matrix reflection(const FormSpace& s, const Vec& v);

/// Square-class bit (0 trivial) of an isometry of determinant one, q odd.
int spinor_norm(const FormSpace& s, const Matrix& g);
int spinor_norm(const GroupDescriptor& d, const Matrix& g);

/// rank(g - 1) mod 2 for isometries of a quadratic form in characteristic 2.
int dickson_invariant(const GroupDescriptor& d, const Matrix& g);

/// Scalars compatible with the form of the family, in increasing element order.
std::vector<Elem> quasiscalars(const GroupDescriptor& d);

/// A diagonal member of the group with at least n - 2 entries equal to lambda.
Matrix quasiscalar_witness(const GroupDescriptor& d, Elem lambda);

struct SwapWitness {
  Matrix h;   // corrected element of the group
  Matrix h1;  // the uncorrected involution exchanging U and W1
  Subspace w1;
  Subspace w2;
};

/// An element of the group interchanging a non-singular U (2 <= dim U < n/2) with an
/// isometric W1 <= U^perp and fixing W2 = (U + W1)^perp pointwise.
SwapWitness swap_element(const GroupDescriptor& d, const Subspace& u);

/// The unique scalar lambda with rank(g - lambda) < n/4, if any.
std::optional<Elem> projective_scalar(const GroupDescriptor& d, const Matrix& g);

/// Fixed generating set of the group at the given level. Alternating groups are not
/// handled here.
std::vector<Matrix> standard_generators(const GroupDescriptor& d, Level level = Level::Group);

}  // namespace ultralat

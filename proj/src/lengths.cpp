#include "ultralat/lengths.hpp"

#include <cmath>

#include "ultralat/classical.hpp"
#include "ultralat/error.hpp"

namespace ultralat {

Rational rank_length(const Matrix& g) {
  require(g.square() && g.rows() > 0, "rank length needs a non-empty square matrix");
  const auto n = static_cast<std::int64_t>(g.rows());
  return Rational(static_cast<std::int64_t>(rank(g - Matrix::identity(g.field_ptr(), g.rows()))), n);
}

Rational rank_length(const GroupDescriptor& d, const Matrix& g) {
  require(contains(d, g), d.to_string() + ": element is not in the group");
  return rank_length(g);
}

Rational projective_rank_length(const Matrix& g) {
  require(g.square() && g.rows() > 0, "rank length needs a non-empty square matrix");
  std::size_t best = g.rows();
  for (const Elem lambda : g.field().nonzero())
    best = std::min(best, rank(g - Matrix::scalar(g.field_ptr(), g.rows(), lambda)));
  return Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(g.rows()));
}

Rational projective_rank_length(const GroupDescriptor& d, const Matrix& g) {
  require(contains(d, g), d.to_string() + ": element is not in the group");
  return projective_rank_length(g);
}

Rational hamming_length(const Permutation& sigma) {
  require(sigma.degree() > 0, "hamming length of an empty permutation");
  return Rational(static_cast<std::int64_t>(sigma.support().size()), static_cast<std::int64_t>(sigma.degree()));
}

double ClassLength::value() const {
  if (group_order <= 1) return 0.0;
  return std::log(static_cast<double>(class_size)) / std::log(static_cast<double>(group_order));
}

bool ClassLength::sum_bound(const ClassLength& a, const ClassLength& b, const ClassLength& c) {
  require(a.group_order == b.group_order && b.group_order == c.group_order, "lengths from different groups");
  return static_cast<unsigned __int128>(a.class_size) <=
         static_cast<unsigned __int128>(b.class_size) * c.class_size;
}

ClassLength conjugacy_length(const GroupTable& t, std::size_t element) {
  require(element < t.size(), "element index outside the table");
  return ClassLength{t.class_size(t.class_of(element)), t.size()};
}

}  // namespace ultralat

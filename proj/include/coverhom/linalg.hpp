#pragma once

#include <optional>
#include <vector>

#include "coverhom/rational.hpp"

namespace coverhom {

// Exact rational vectors/matrices.  Everything here is arbitrary precision;
// there is no floating point in this module.

RatVec rat_vec(const std::vector<long long>& v);
RatVec mat_apply(const std::vector<std::vector<long long>>& m, const RatVec& v);
RatVec mat_apply(const RatMat& m, const RatVec& v);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatMat mat_add(const RatMat& a, const RatMat& b);
RatMat mat_scale(const Rat& c, const RatMat& m);
RatMat mat_identity(size_t n);
bool mat_equal(const RatMat& a, const RatMat& b);
size_t mat_rank(RatMat m);
Rat mat_trace(const RatMat& m);
// Inverse of a square matrix; throws if singular.
RatMat mat_inverse(const RatMat& m);

// Reduced row echelon form with deterministic leftmost-pivot rule; zero rows
// dropped.  The result is the canonical basis of the row span.
RatMat rref(RatMat rows);

// Exact rational subspace given by its canonical RREF basis.
class Subspace {
 public:
  explicit Subspace(size_t ambient) : ambient_(ambient) {}  // zero subspace
  static Subspace span(size_t ambient, const RatMat& vectors);

  size_t ambient() const { return ambient_; }
  size_t dim() const { return basis_.size(); }
  const RatMat& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  bool contains(const RatVec& v) const;
  // Coordinates of v in the RREF basis; nullopt if v is outside.
  std::optional<RatVec> coordinates(const RatVec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  bool equal(const Subspace& other) const;   // canonical bases compared
  bool contains_subspace(const Subspace& other) const;

 private:
  size_t ambient_;
  RatMat basis_;
  std::vector<size_t> pivots_;
};

// Positive rational multiple of v with coprime integer coordinates, first
// nonzero coordinate positive.  Throws on the zero vector.
IntVec make_indivisible(const RatVec& v);
bool is_integral(const RatVec& v);
Int content_gcd(const IntVec& v);

}  // namespace coverhom

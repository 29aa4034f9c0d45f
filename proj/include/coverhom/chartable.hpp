#pragma once

#include <memory>
#include <vector>

#include "coverhom/cyclotomic.hpp"
#include "coverhom/group.hpp"

namespace coverhom {

// Class function on a FiniteGroup: one exact cyclotomic value per conjugacy
// class, in the group's class order.
struct ClassFunction {
  GroupPtr group;
  std::vector<Cyclotomic> values;

  const Cyclotomic& at_class(int c) const { return values[c]; }
  const Cyclotomic& at_element(int g) const { return values[group->class_of(g)]; }
  Cyclotomic degree() const { return values[0]; }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction scaled(const Rat& c) const;
  bool operator==(const ClassFunction& o) const;
};

ClassFunction trivial_character(GroupPtr g);
ClassFunction regular_character(GroupPtr g);
ClassFunction class_function_from_rationals(GroupPtr g, const RatVec& values);

// <chi, psi> = (1/|G|) sum_g chi(g) psi(g^{-1}).
Cyclotomic inner_product(const ClassFunction& chi, const ClassFunction& psi);

// Character of Ind_H^G(C_triv): number of left cosets of H fixed by g.
ClassFunction perm_character(const Subgroup& h);

// Full table of irreducible characters via Burnside-Dixon: class-algebra
// structure constants, simultaneous eigenspaces over F_p with
// p = 1 (mod exponent) and p > 2 sqrt(|G|), eigenvalues lifted to
// cyclotomics of conductor exponent(G) through discrete logarithms.
class CharTable {
 public:
  static CharTable build(GroupPtr g);

  const GroupPtr& group() const { return group_; }
  size_t size() const { return irreducibles_.size(); }        // = k(G)
  const ClassFunction& irreducible(size_t i) const { return irreducibles_[i]; }
  const std::vector<ClassFunction>& irreducibles() const { return irreducibles_; }
  long long degree(size_t i) const;

  // Partition of irreducible indices into Galois orbits (zeta -> zeta^t).
  std::vector<std::vector<size_t>> galois_orbits() const;

 private:
  GroupPtr group_;
  std::vector<ClassFunction> irreducibles_;
};

// dim V^K = (1/|K|) sum_{k in K} chi_V(k); exact nonnegative integer.
long long fixed_space_dim(const ClassFunction& chi, const Subgroup& k);

// Sound lower/upper approximations of Irr^comm(phi, G): indices into the
// table.  lower: some enumerated primitive commutator's image has a fixed
// vector.  upper: some commutator of a pair inside a generating n-tuple has
// a fixed vector (every primitive commutator image is of this shape).
struct IrrCommBounds {
  std::vector<size_t> lower;
  std::vector<size_t> upper;
};
IrrCommBounds irr_comm_bounds(const Epimorphism& phi, const CharTable& table, int depth,
                              int len_cap = 0);

// Per-irreducible multiplicity ceiling from the upper Irr^comm set:
// (n-1) dim(V) for nontrivial members, 0 otherwise.
struct CommMultiplicityBound {
  std::vector<long long> ceiling;   // per irreducible, multiplicity bound
  long long total_dimension;        // sum (n-1) dim(V)^2 over admitted V
};
CommMultiplicityBound multiplicity_bound_comm(const Epimorphism& phi, const CharTable& table,
                                              const IrrCommBounds& bounds);

}  // namespace coverhom

#pragma once

#include "coverhom/chartable.hpp"
#include "coverhom/cover.hpp"
#include "coverhom/linalg.hpp"

namespace coverhom {

// Span_{C[G]}{v}: column span of the orbit {rho(g) v}.  Invariant under the
// action by construction; the zero vector yields the zero subspace.
Subspace span_under_action(const RatVec& v, const DeckAction& rho);
Subspace span_under_action(const std::vector<RatVec>& vs, const DeckAction& rho);

// chi(g) = trace of rho(g) restricted to an invariant subspace; throws if
// the subspace is not invariant.  Values are rational for integer actions.
ClassFunction character_on(const Subspace& sub, const DeckAction& rho);

// (1/|H|) sum_{h in H} rho(h) for a subgroup H of the deck group (given by
// its element indices); idempotent.
RatMat fixed_projector(const DeckAction& rho, const std::vector<int>& subgroup_elements);
RatMat fixed_projector(const DeckAction& rho);  // full deck group

// Isotypic projector of an abelian-or-rational irreducible character of a
// subgroup N of the deck group, summed over its Galois orbit so the matrix
// is rational.  `sub` maps N to deck element indices.
RatMat isotypic_projector(const DeckAction& rho, const Subgroup::AsGroup& sub,
                          const CharTable& table_of_n, const std::vector<size_t>& galois_orbit);

// Same, for the full deck group: table must be built on the deck group
// itself.
RatMat isotypic_projector(const DeckAction& rho, const CharTable& table_of_deck,
                          const std::vector<size_t>& galois_orbit);

// Component of v in the isotypic block; components over all orbits sum to v.
RatVec homogeneous_component(const RatVec& v, const DeckAction& rho,
                             const Subgroup::AsGroup& sub, const CharTable& table_of_n,
                             const std::vector<size_t>& galois_orbit);

// ker p_* and im p_# as exact subspaces of the cycle lattice.
Subspace kernel_of_projection(const CoverGraph& cover);
Subspace image_of_transfer(const CoverGraph& cover);

}  // namespace coverhom

#include "coverhom/repspace.hpp"

#include <stdexcept>

namespace coverhom {

Subspace span_under_action(const RatVec& v, const DeckAction& rho) {
  return span_under_action(std::vector<RatVec>{v}, rho);
}

Subspace span_under_action(const std::vector<RatVec>& vs, const DeckAction& rho) {
  size_t m = rho.matrices.empty() ? 0 : rho.matrices[0].size();
  RatMat orbit;
  for (const auto& v : vs) {
    if (v.size() != m) throw std::invalid_argument("span_under_action: dimension mismatch");
    for (size_t g = 0; g < rho.matrices.size(); ++g) orbit.push_back(rho.apply((int)g, v));
  }
  return Subspace::span(m, orbit);
}

ClassFunction character_on(const Subspace& sub, const DeckAction& rho) {
  GroupPtr g = rho.cover->deck();
  // Invariance under the generators implies invariance under the group.
  for (int gi : g->generator_indices())
    for (const auto& b : sub.basis())
      if (!sub.contains(rho.apply(gi, b)))
        throw std::invalid_argument("character_on: subspace not invariant");
  RatVec values;
  for (size_t c = 0; c < g->class_count(); ++c) {
    int rep = g->class_representative((int)c);
    Rat trace(0);
    for (size_t j = 0; j < sub.dim(); ++j) {
      auto coords = sub.coordinates(rho.apply(rep, sub.basis()[j]));
      if (!coords) throw std::invalid_argument("character_on: subspace not invariant");
      trace += (*coords)[j];
    }
    values.push_back(trace);
  }
  return class_function_from_rationals(g, values);
}

RatMat fixed_projector(const DeckAction& rho, const std::vector<int>& subgroup_elements) {
  size_t m = rho.matrices.empty() ? 0 : rho.matrices[0].size();
  RatMat sum(m, RatVec(m, Rat(0)));
  for (int g : subgroup_elements)
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j)
        if (rho.matrices[g][i][j] != 0) sum[i][j] += rho.matrices[g][i][j];
  return mat_scale(Rat(1, (long long)subgroup_elements.size()), sum);
}

RatMat fixed_projector(const DeckAction& rho) {
  std::vector<int> all(rho.matrices.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = (int)i;
  return fixed_projector(rho, all);
}

RatMat isotypic_projector(const DeckAction& rho, const Subgroup::AsGroup& sub,
                          const CharTable& table_of_n, const std::vector<size_t>& galois_orbit) {
  size_t m = rho.matrices.empty() ? 0 : rho.matrices[0].size();
  const auto& n_grp = *table_of_n.group();
  long long deg = table_of_n.degree(galois_orbit[0]);
  RatMat sum(m, RatVec(m, Rat(0)));
  for (size_t h = 0; h < n_grp.order(); ++h) {
    // Orbit-summed coefficient chi(h^{-1}); rational by construction.
    Cyclotomic coeff;
    int h_inv = n_grp.inv((int)h);
    for (size_t i : galois_orbit) coeff += table_of_n.irreducible(i).at_element(h_inv);
    auto c = coeff.as_rational();
    if (!c) throw std::logic_error("isotypic_projector: orbit sum not rational");
    if (*c == 0) continue;
    int parent_elt = sub.to_parent[h];
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j)
        if (rho.matrices[parent_elt][i][j] != 0) sum[i][j] += *c * rho.matrices[parent_elt][i][j];
  }
  return mat_scale(Rat(deg, (long long)n_grp.order()), sum);
}

RatMat isotypic_projector(const DeckAction& rho, const CharTable& table_of_deck,
                          const std::vector<size_t>& galois_orbit) {
  size_t m = rho.matrices.empty() ? 0 : rho.matrices[0].size();
  const auto& g = *table_of_deck.group();
  long long deg = table_of_deck.degree(galois_orbit[0]);
  RatMat sum(m, RatVec(m, Rat(0)));
  for (size_t h = 0; h < g.order(); ++h) {
    Cyclotomic coeff;
    int h_inv = g.inv((int)h);
    for (size_t i : galois_orbit) coeff += table_of_deck.irreducible(i).at_element(h_inv);
    auto c = coeff.as_rational();
    if (!c) throw std::logic_error("isotypic_projector: orbit sum not rational");
    if (*c == 0) continue;
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j)
        if (rho.matrices[h][i][j] != 0) sum[i][j] += *c * rho.matrices[h][i][j];
  }
  return mat_scale(Rat(deg, (long long)g.order()), sum);
}

RatVec homogeneous_component(const RatVec& v, const DeckAction& rho,
                             const Subgroup::AsGroup& sub, const CharTable& table_of_n,
                             const std::vector<size_t>& galois_orbit) {
  return mat_apply(isotypic_projector(rho, sub, table_of_n, galois_orbit), v);
}

Subspace kernel_of_projection(const CoverGraph& cover) {
  // Kernel of the n x m matrix p_*: solve by row reducing and reading the
  // free columns.
  auto p = cover.projection_matrix();
  size_t n = p.size(), m = cover.cycle_rank();
  RatMat rows(n, RatVec(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) rows[i][j] = p[i][j];
  rows = rref(std::move(rows));
  std::vector<int> pivot_of_col(m, -1);
  for (size_t r = 0; r < rows.size(); ++r) {
    size_t c = 0;
    while (rows[r][c] == 0) ++c;
    pivot_of_col[c] = (int)r;
  }
  RatMat basis;
  for (size_t c = 0; c < m; ++c) {
    if (pivot_of_col[c] != -1) continue;
    RatVec v(m, Rat(0));
    v[c] = 1;
    for (size_t cc = 0; cc < m; ++cc)
      if (pivot_of_col[cc] != -1) v[cc] = -rows[pivot_of_col[cc]][c];
    basis.push_back(std::move(v));
  }
  return Subspace::span(m, basis);
}

Subspace image_of_transfer(const CoverGraph& cover) {
  auto t = cover.transfer_matrix();
  size_t m = cover.cycle_rank();
  RatMat cols(cover.rank(), RatVec(m));
  for (int i = 0; i < cover.rank(); ++i)
    for (size_t j = 0; j < m; ++j) cols[i][j] = t[j][i];
  return Subspace::span(m, cols);
}

}  // namespace coverhom

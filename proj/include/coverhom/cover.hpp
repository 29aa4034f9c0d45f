#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coverhom/group.hpp"
#include "coverhom/linalg.hpp"
#include "coverhom/word.hpp"

namespace coverhom {

class CoverGraph;

// Homology class in the cycle-basis coordinates of a cover.
struct HomologyClass {
  const CoverGraph* cover = nullptr;
  RatVec coordinates;

  bool integral() const { return is_integral(coordinates); }
  bool operator==(const HomologyClass& o) const { return coordinates == o.coordinates; }
};

// Deck-group action on cycle coordinates: one integer m x m matrix per
// group element, rho(1) = I, rho(gh) = rho(g) rho(h).
struct DeckAction {
  const CoverGraph* cover = nullptr;
  std::vector<std::vector<std::vector<long long>>> matrices;  // [g][row][col]

  RatVec apply(int g, const RatVec& v) const { return mat_apply(matrices[g], v); }
};

// Regular cover of the wedge of n circles determined by an epimorphism
// F_n -> G.  Vertices are deck-group element indices (basepoint = identity);
// the i-edge at v runs v -> v * phi(x_i).  The spanning tree is the BFS tree
// from the basepoint, generators in index order, forward edges before
// backward; the cycle basis is the list of non-tree edges.
class CoverGraph {
 public:
  explicit CoverGraph(Epimorphism phi);

  const Epimorphism& phi() const { return phi_; }
  const GroupPtr& deck() const { return phi_.target(); }
  int rank() const { return phi_.rank(); }
  size_t vertex_count() const { return deck()->order(); }
  size_t edge_count() const { return rank() * vertex_count(); }
  size_t cycle_rank() const { return cycle_edges_.size(); }  // m = (n-1)|G| + 1

  // Edge id = vertex * n + generator.
  int edge_id(int vertex, int gen) const { return vertex * rank() + gen; }
  int edge_source(int e) const { return e / rank(); }
  int edge_label(int e) const { return e % rank(); }
  int edge_target(int e) const;
  bool is_tree_edge(int e) const { return tree_edge_[e]; }
  int cycle_index(int e) const { return cycle_index_[e]; }   // -1 for tree edges
  const std::vector<int>& cycle_edges() const { return cycle_edges_; }
  const std::vector<int>& bfs_order() const { return bfs_order_; }

  // Basis cycle j as a closed edge path (edge id, +-1 sign) at the basepoint,
  // and the same path read off as a word in F_n.
  const std::vector<std::pair<int, int>>& cycle_path(int j) const { return cycle_paths_[j]; }
  const Word& cycle_word(int j) const { return cycle_words_[j]; }

  // Cycle coordinates of the closed path tracing w repeated `repeat` times
  // from the basepoint; w^repeat must lie in ker(phi).
  RatVec trace_coordinates(const Word& w, long long repeat = 1) const;

  // k(w) = |phi(w)| and the class of the lift of w^k at the basepoint.
  std::pair<long long, HomologyClass> preferred_elevation_class(const Word& w) const;

  DeckAction deck_action() const;
  std::vector<std::vector<long long>> projection_matrix() const;  // p_*, n x m
  std::vector<std::vector<long long>> transfer_matrix() const;    // p_#, m x n

  // Schreier generators of ker(phi) <= F_n, one per non-tree edge, in cycle
  // order (tree path + edge + reverse tree path).  A free basis of pi_1(Y).
  std::vector<Word> schreier_basis() const { return cycle_words_; }

  std::string dot() const;

 private:
  Epimorphism phi_;
  std::vector<int> gen_img_;       // element index of phi(x_i)
  std::vector<int> gen_img_inv_;
  std::vector<char> tree_edge_;
  std::vector<int> cycle_index_;
  std::vector<int> cycle_edges_;
  std::vector<int> bfs_order_;
  // Path from basepoint to each vertex along tree edges, as (edge, sign).
  std::vector<std::vector<std::pair<int, int>>> tree_path_;
  std::vector<std::vector<std::pair<int, int>>> cycle_paths_;
  std::vector<Word> cycle_words_;
};

// Label-preserving based isomorphism between two covers of the same wedge
// (equality of the associated subgroups of F_n).
bool covers_based_isomorphic(const CoverGraph& a, const CoverGraph& b);

// Composition of covers: inner cover Z -> X with deck Q, and an epimorphism
// of pi_1(Z) onto an abelian group N.  The outer map may be given directly on
// the Schreier basis, or on an explicit free basis of ker(phi_1) supplied as
// words (solved for the Schreier images through the abelianized unimodular
// basis change).
struct OuterMapSpec {
  AbelianGroup target;
  // Either: images in Schreier-basis order (size = cycle rank of inner)...
  std::vector<int> schreier_images;
  // ...or an explicit basis with images.
  std::vector<Word> basis_words;
  std::vector<int> basis_images;
};

struct ComposedCover {
  std::shared_ptr<CoverGraph> total;        // Y -> X with composite deck G
  const CoverGraph* inner = nullptr;        // Z -> X
  // q_*: cycle coordinates of the total cover -> cycle coordinates of Z.
  std::vector<std::vector<long long>> projection_to_inner;
  // The normal subgroup N <= G (fiber of G -> Q) as element indices.
  std::vector<int> normal_subgroup;
};

struct CompositionFailure {
  std::string reason;
};

// Returns the composed cover, or a diagnostic if the composite is not
// regular (monodromy not simply transitive on the fiber).
std::variant<ComposedCover, CompositionFailure> compose_covers(const CoverGraph& inner,
                                                               const OuterMapSpec& outer);

}  // namespace coverhom

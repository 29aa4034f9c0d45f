#pragma once

#include <optional>
#include <vector>

#include "coverhom/cover.hpp"
#include "coverhom/word.hpp"

namespace coverhom {

// Core graph of the subgroup of F_rank generated by a word list, obtained by
// folding the wedge of subdivided loops to a fixed point.  After folding,
// every vertex has at most one outgoing and one incoming edge per label.
class FoldedGraph {
 public:
  FoldedGraph(int rank, const std::vector<Word>& words);

  int rank() const { return rank_; }
  size_t vertex_count() const { return vertex_count_; }
  size_t edge_count() const { return edge_count_; }
  long long subgroup_rank() const { return (long long)edge_count_ - (long long)vertex_count_ + 1; }
  int basepoint() const { return base_; }

  // Partial deterministic transitions; -1 when absent.
  int step(int vertex, int letter) const;  // letter signed 1-based

  // Trace a word from the basepoint.  nullopt if the path falls off the
  // graph; otherwise the end vertex.
  std::optional<int> trace(const Word& w) const;
  // Membership certificate for the generated subgroup; complete (not just
  // sound) when the folded graph is the full cover of a finite-index
  // subgroup, e.g. when it matches a CoverGraph.
  bool accepts(const Word& w) const;

  bool based_isomorphic_to(const CoverGraph& cover) const;
  bool based_isomorphic_to(const FoldedGraph& other) const;

 private:
  int find(int v);
  int rank_;
  int base_ = 0;
  size_t vertex_count_ = 0;
  size_t edge_count_ = 0;
  // out_[v][i] / in_[v][i]: neighbor along generator i+1, after folding.
  std::vector<std::vector<int>> out_, in_;
  std::vector<int> uf_;
};

}  // namespace coverhom

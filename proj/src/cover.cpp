#include "coverhom/cover.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace coverhom {

CoverGraph::CoverGraph(Epimorphism phi) : phi_(std::move(phi)) {
  const auto& g = *deck();
  const int n = rank();
  for (int img : phi_.images()) {
    gen_img_.push_back(img);
    gen_img_inv_.push_back(g.inv(img));
  }

  const size_t V = g.order();
  tree_edge_.assign(n * V, 0);
  cycle_index_.assign(n * V, -1);
  tree_path_.resize(V);
  std::vector<char> visited(V, 0);
  visited[0] = 1;
  bfs_order_.push_back(0);
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    // Forward edges before backward, generators in index order.
    for (int i = 0; i < n; ++i) {
      int t = g.mul(v, gen_img_[i]);
      if (!visited[t]) {
        visited[t] = 1;
        int e = edge_id(v, i);
        tree_edge_[e] = 1;
        tree_path_[t] = tree_path_[v];
        tree_path_[t].emplace_back(e, +1);
        bfs_order_.push_back(t);
        q.push(t);
      }
    }
    for (int i = 0; i < n; ++i) {
      int u = g.mul(v, gen_img_inv_[i]);  // edge u -(i)-> v
      if (!visited[u]) {
        visited[u] = 1;
        int e = edge_id(u, i);
        tree_edge_[e] = 1;
        tree_path_[u] = tree_path_[v];
        tree_path_[u].emplace_back(e, -1);
        bfs_order_.push_back(u);
        q.push(u);
      }
    }
  }
  if (bfs_order_.size() != V) throw std::logic_error("CoverGraph: cover not connected");

  // Non-tree edges in BFS vertex order, generator index ascending.
  for (int v : bfs_order_)
    for (int i = 0; i < n; ++i) {
      int e = edge_id(v, i);
      if (!tree_edge_[e]) {
        cycle_index_[e] = (int)cycle_edges_.size();
        cycle_edges_.push_back(e);
      }
    }

  for (int e : cycle_edges_) {
    int u = edge_source(e);
    int w = edge_target(e);
    std::vector<std::pair<int, int>> path = tree_path_[u];
    path.emplace_back(e, +1);
    for (auto it = tree_path_[w].rbegin(); it != tree_path_[w].rend(); ++it)
      path.emplace_back(it->first, -it->second);
    std::vector<int> letters;
    for (auto [edge, sign] : path) {
      int l = edge_label(edge) + 1;
      letters.push_back(sign > 0 ? l : -l);
    }
    cycle_words_.push_back(reduce(n, letters));
    cycle_paths_.push_back(std::move(path));
  }
}

int CoverGraph::edge_target(int e) const {
  return deck()->mul(edge_source(e), gen_img_[edge_label(e)]);
}

RatVec CoverGraph::trace_coordinates(const Word& w, long long repeat) const {
  RatVec coords(cycle_rank(), Rat(0));
  const auto& g = *deck();
  int pos = 0;
  for (long long r = 0; r < repeat; ++r) {
    for (int l : w.letters()) {
      int i = std::abs(l) - 1;
      if (l > 0) {
        int e = edge_id(pos, i);
        if (cycle_index_[e] != -1) coords[cycle_index_[e]] += 1;
        pos = g.mul(pos, gen_img_[i]);
      } else {
        int prev = g.mul(pos, gen_img_inv_[i]);
        int e = edge_id(prev, i);
        if (cycle_index_[e] != -1) coords[cycle_index_[e]] -= 1;
        pos = prev;
      }
    }
  }
  if (pos != 0) throw std::invalid_argument("trace_coordinates: path does not close up");
  return coords;
}

std::pair<long long, HomologyClass> CoverGraph::preferred_elevation_class(const Word& w) const {
  if (w.is_identity()) throw std::invalid_argument("preferred_elevation_class: trivial word");
  long long k = deck()->element_order(phi_.evaluate(w));
  return {k, HomologyClass{this, trace_coordinates(w, k)}};
}

DeckAction CoverGraph::deck_action() const {
  DeckAction action;
  action.cover = this;
  const auto& g = *deck();
  size_t m = cycle_rank();
  action.matrices.resize(g.order());
  for (size_t gi = 0; gi < g.order(); ++gi) {
    auto& mat = action.matrices[gi];
    mat.assign(m, std::vector<long long>(m, 0));
    for (size_t j = 0; j < m; ++j)
      for (auto [e, sign] : cycle_paths_[j]) {
        int image = edge_id(g.mul((int)gi, edge_source(e)), edge_label(e));
        if (cycle_index_[image] != -1) mat[cycle_index_[image]][j] += sign;
      }
  }
  return action;
}

std::vector<std::vector<long long>> CoverGraph::projection_matrix() const {
  std::vector<std::vector<long long>> p(rank(), std::vector<long long>(cycle_rank(), 0));
  for (size_t j = 0; j < cycle_rank(); ++j) {
    auto ab = cycle_words_[j].abelianize();
    for (int i = 0; i < rank(); ++i) p[i][j] = ab[i];
  }
  return p;
}

std::vector<std::vector<long long>> CoverGraph::transfer_matrix() const {
  std::vector<std::vector<long long>> t(cycle_rank(), std::vector<long long>(rank(), 0));
  for (size_t j = 0; j < cycle_rank(); ++j) t[j][edge_label(cycle_edges_[j])] = 1;
  return t;
}

std::string CoverGraph::dot() const {
  std::ostringstream out;
  out << "digraph cover {\n  rankdir=LR;\n";
  for (size_t v = 0; v < vertex_count(); ++v)
    out << "  v" << v << " [label=\"" << v << (v == 0 ? " *" : "") << "\"];\n";
  for (size_t e = 0; e < edge_count(); ++e) {
    out << "  v" << edge_source((int)e) << " -> v" << edge_target((int)e) << " [label=\""
        << char('a' + edge_label((int)e)) << "\"";
    if (!tree_edge_[e]) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

bool covers_based_isomorphic(const CoverGraph& a, const CoverGraph& b) {
  if (a.rank() != b.rank() || a.vertex_count() != b.vertex_count()) return false;
  // Both are complete deterministic labeled graphs; follow edges in parallel.
  std::vector<int> map_ab(a.vertex_count(), -1);
  std::vector<int> map_ba(b.vertex_count(), -1);
  map_ab[0] = 0;
  map_ba[0] = 0;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    int w = map_ab[v];
    for (int i = 0; i < a.rank(); ++i) {
      int vt = a.edge_target(a.edge_id(v, i));
      int wt = b.edge_target(b.edge_id(w, i));
      if (map_ab[vt] == -1 && map_ba[wt] == -1) {
        map_ab[vt] = wt;
        map_ba[wt] = vt;
        q.push(vt);
      } else if (map_ab[vt] != wt) {
        return false;
      }
    }
  }
  return true;
}

std::variant<ComposedCover, CompositionFailure> compose_covers(const CoverGraph& inner,
                                                               const OuterMapSpec& outer) {
  const size_t m = inner.cycle_rank();
  const auto& n_grp = outer.target;

  // Images of the Schreier generators in N.
  std::vector<int> schreier_images;
  if (!outer.schreier_images.empty()) {
    if (outer.schreier_images.size() != m)
      return CompositionFailure{"schreier_images has wrong length"};
    schreier_images = outer.schreier_images;
  } else {
    if (outer.basis_words.size() != m)
      return CompositionFailure{"basis must have one word per non-tree edge"};
    // Abelianized basis change M: row j = Schreier exponent vector of b_j.
    RatMat basis_change;
    for (const auto& b : outer.basis_words) basis_change.push_back(inner.trace_coordinates(b));
    RatMat inv;
    try {
      inv = mat_inverse(basis_change);
    } catch (const std::exception&) {
      return CompositionFailure{"basis words are not a basis (abelianized change singular)"};
    }
    for (const auto& row : inv)
      if (!is_integral(row))
        return CompositionFailure{"basis change is not unimodular"};
    // Solve x_e = sum_j inv[e][j] * tuple(v_j) in N.
    for (size_t e = 0; e < m; ++e) {
      std::vector<long long> tuple(n_grp.invariants.size(), 0);
      for (size_t j = 0; j < m; ++j) {
        if (inv[e][j] == 0) continue;
        long long c = (long long)Int(boost::multiprecision::numerator(inv[e][j]));
        auto vj = n_grp.tuple_of(outer.basis_images[j]);
        for (size_t t = 0; t < tuple.size(); ++t) tuple[t] += c * vj[t];
      }
      schreier_images.push_back(n_grp.index_of_tuple(tuple));
    }
  }

  // Monodromy on the fiber (inner vertex, N element) via the Schreier
  // cocycle: tree edges contribute the identity, non-tree edge e contributes
  // the image of its Schreier generator.
  const size_t fiber = inner.vertex_count() * n_grp.group->order();
  const int nN = (int)n_grp.group->order();
  std::vector<Permutation> step;  // path-step permutation per generator
  for (int i = 0; i < inner.rank(); ++i) {
    std::vector<int> img(fiber);
    for (size_t q = 0; q < inner.vertex_count(); ++q) {
      int e = inner.edge_id((int)q, i);
      int qt = inner.edge_target(e);
      int c = inner.cycle_index(e) == -1 ? 0 : schreier_images[inner.cycle_index(e)];
      for (int nu = 0; nu < nN; ++nu)
        img[q * nN + nu] = qt * nN + n_grp.group->mul(nu, c);
    }
    step.emplace_back((int)fiber, std::move(img));
  }
  // A word lifts closed iff its left-to-right product of the inverse step
  // permutations is the identity, so those are the epimorphism images.
  std::vector<Permutation> images;
  for (const auto& s : step) images.push_back(s.inverse());

  GroupPtr comp;
  try {
    comp = FiniteGroup::from_generators(images);
  } catch (const std::exception& e) {
    return CompositionFailure{std::string("monodromy enumeration failed: ") + e.what()};
  }
  // Regular iff the monodromy acts simply transitively on the fiber.
  std::vector<char> orbit(fiber, 0);
  std::vector<int> stack{0};
  orbit[0] = 1;
  size_t orbit_size = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& s : step) {
      for (int y : {s(x), s.inverse()(x)})
        if (!orbit[y]) { orbit[y] = 1; ++orbit_size; stack.push_back(y); }
    }
  }
  if (orbit_size != fiber)
    return CompositionFailure{"composite cover disconnected (monodromy not transitive)"};
  if (comp->order() != fiber)
    return CompositionFailure{
        "composite not regular: basepoint stabilizer of order " +
        std::to_string(comp->order() / fiber) + " is not trivial"};

  ComposedCover out;
  std::vector<int> img_idx;
  for (const auto& p : images) img_idx.push_back(comp->index_of(p));
  out.total = std::make_shared<CoverGraph>(Epimorphism(inner.rank(), comp, img_idx));
  out.inner = &inner;

  // q_*: express each total basis cycle, read as a word in F_n, in the inner
  // cycle coordinates.
  out.projection_to_inner.assign(m, std::vector<long long>(out.total->cycle_rank(), 0));
  for (size_t j = 0; j < out.total->cycle_rank(); ++j) {
    RatVec c = inner.trace_coordinates(out.total->cycle_word((int)j));
    for (size_t r = 0; r < m; ++r)
      out.projection_to_inner[r][j] = (long long)Int(boost::multiprecision::numerator(c[r]));
  }

  // N <= G: elements whose action preserves the inner vertex coordinate.
  for (size_t gi = 0; gi < comp->order(); ++gi)
    if (comp->element((int)gi)(0) / nN == 0) out.normal_subgroup.push_back((int)gi);
  return out;
}

}  // namespace coverhom

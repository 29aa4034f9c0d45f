#include "coverhom/stallings.hpp"

#include <map>
#include <queue>
#include <stdexcept>

namespace coverhom {

namespace {
// Edge list representation used during folding: (source, label 0-based, target).
struct RawEdge {
  int src, label, dst;
};
}  // namespace

FoldedGraph::FoldedGraph(int rank, const std::vector<Word>& words) : rank_(rank) {
  if (words.empty()) throw std::invalid_argument("FoldedGraph: need at least one word");
  std::vector<RawEdge> edges;
  int next_vertex = 1;  // 0 is the basepoint
  for (const auto& w : words) {
    if (w.rank() != rank) throw std::invalid_argument("FoldedGraph: rank mismatch");
    int at = 0;
    for (size_t i = 0; i < w.letters().size(); ++i) {
      int to = i + 1 == w.letters().size() ? 0 : next_vertex++;
      int l = w.letters()[i];
      if (l > 0) edges.push_back({at, l - 1, to});
      else edges.push_back({to, -l - 1, at});
      at = to;
    }
  }

  uf_.resize(next_vertex);
  for (int i = 0; i < next_vertex; ++i) uf_[i] = i;
  out_.assign(next_vertex, std::vector<int>(rank, -1));
  in_.assign(next_vertex, std::vector<int>(rank, -1));

  // Iterative folding: insert edges one at a time; a clash at a vertex
  // merges the two endpoints and re-inserts the edges of the absorbed class.
  std::queue<RawEdge> pending;
  for (const auto& e : edges) pending.push(e);
  std::vector<std::vector<RawEdge>> incident(next_vertex);
  while (!pending.empty()) {
    RawEdge e = pending.front();
    pending.pop();
    e.src = find(e.src);
    e.dst = find(e.dst);
    int existing_out = out_[e.src][e.label];
    if (existing_out != -1) existing_out = find(existing_out);
    int existing_in = in_[e.dst][e.label];
    if (existing_in != -1) existing_in = find(existing_in);

    auto merge = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a == b) return;
      if (a > b) std::swap(a, b);  // keep the smaller id (so 0 stays the basepoint)
      uf_[b] = a;
      for (int i = 0; i < rank_; ++i) {
        if (out_[b][i] != -1) {
          pending.push({b, i, out_[b][i]});
          out_[b][i] = -1;
        }
        if (in_[b][i] != -1) {
          pending.push({in_[b][i], i, b});
          in_[b][i] = -1;
        }
      }
    };

    if (existing_out != -1 && existing_out != e.dst) {
      merge(existing_out, e.dst);
      pending.push(e);
      continue;
    }
    if (existing_in != -1 && existing_in != e.src) {
      merge(existing_in, e.src);
      pending.push(e);
      continue;
    }
    out_[e.src][e.label] = e.dst;
    in_[e.dst][e.label] = e.src;
  }

  // Compact to class representatives.
  std::map<int, int> relabel;
  for (int v = 0; v < next_vertex; ++v)
    if (find(v) == v) {
      int id = (int)relabel.size();
      relabel[v] = id;
    }
  std::vector<std::vector<int>> out(relabel.size(), std::vector<int>(rank, -1));
  std::vector<std::vector<int>> in(relabel.size(), std::vector<int>(rank, -1));
  edge_count_ = 0;
  for (int v = 0; v < next_vertex; ++v) {
    if (find(v) != v) continue;
    for (int i = 0; i < rank_; ++i)
      if (out_[v][i] != -1) {
        out[relabel[v]][i] = relabel[find(out_[v][i])];
        in[relabel[find(out_[v][i])]][i] = relabel[v];
        ++edge_count_;
      }
  }
  base_ = relabel[find(0)];
  out_ = std::move(out);
  in_ = std::move(in);
  vertex_count_ = relabel.size();
  uf_.clear();
}

int FoldedGraph::find(int v) {
  while (uf_[v] != v) {
    uf_[v] = uf_[uf_[v]];
    v = uf_[v];
  }
  return v;
}

int FoldedGraph::step(int vertex, int letter) const {
  if (letter > 0) return out_[vertex][letter - 1];
  return in_[vertex][-letter - 1];
}

std::optional<int> FoldedGraph::trace(const Word& w) const {
  int at = base_;
  for (int l : w.letters()) {
    at = step(at, l);
    if (at == -1) return std::nullopt;
  }
  return at;
}

bool FoldedGraph::accepts(const Word& w) const {
  auto end = trace(w);
  return end && *end == base_;
}

bool FoldedGraph::based_isomorphic_to(const CoverGraph& cover) const {
  if (vertex_count_ != cover.vertex_count() || edge_count_ != cover.edge_count() ||
      rank_ != cover.rank())
    return false;
  std::vector<int> map_fc(vertex_count_, -1);
  std::vector<int> map_cf(cover.vertex_count(), -1);
  map_fc[base_] = 0;
  map_cf[0] = base_;
  std::queue<int> q;
  q.push(base_);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int i = 0; i < rank_; ++i) {
      int vt = out_[v][i];
      if (vt == -1) return false;  // cover graphs are complete
      int wt = cover.edge_target(cover.edge_id(map_fc[v], i));
      if (map_fc[vt] == -1 && map_cf[wt] == -1) {
        map_fc[vt] = wt;
        map_cf[wt] = vt;
        q.push(vt);
      } else if (map_fc[vt] != wt) {
        return false;
      }
    }
  }
  for (int v : map_fc)
    if (v == -1) return false;
  return true;
}

bool FoldedGraph::based_isomorphic_to(const FoldedGraph& other) const {
  if (vertex_count_ != other.vertex_count_ || edge_count_ != other.edge_count_ ||
      rank_ != other.rank_)
    return false;
  std::vector<int> map_ab(vertex_count_, -1), map_ba(other.vertex_count_, -1);
  map_ab[base_] = other.base_;
  map_ba[other.base_] = base_;
  std::queue<int> q;
  q.push(base_);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int i = -rank_; i <= rank_; ++i) {
      if (i == 0) continue;
      int vt = step(v, i);
      int wt = other.step(map_ab[v], i);
      if ((vt == -1) != (wt == -1)) return false;
      if (vt == -1) continue;
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

}  // namespace coverhom

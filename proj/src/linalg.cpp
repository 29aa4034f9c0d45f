#include "coverhom/linalg.hpp"

#include <stdexcept>

namespace coverhom {

RatVec rat_vec(const std::vector<long long>& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

RatVec mat_apply(const std::vector<std::vector<long long>>& m, const RatVec& v) {
  RatVec out(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0 && v[j] != 0) out[i] += Rat(m[i][j]) * v[j];
  return out;
}

RatVec mat_apply(const RatMat& m, const RatVec& v) {
  RatVec out(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0 && v[j] != 0) out[i] += m[i][j] * v[j];
  return out;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat out(n, RatVec(m, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j)
        if (b[l][j] != 0) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

RatMat mat_add(const RatMat& a, const RatMat& b) {
  RatMat out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
  return out;
}

RatMat mat_scale(const Rat& c, const RatMat& m) {
  RatMat out = m;
  for (auto& row : out)
    for (auto& x : row) x *= c;
  return out;
}

RatMat mat_identity(size_t n) {
  RatMat out(n, RatVec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

bool mat_equal(const RatMat& a, const RatMat& b) { return a == b; }

Rat mat_trace(const RatMat& m) {
  Rat t(0);
  for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

RatMat rref(RatMat rows) {
  size_t cols = rows.empty() ? 0 : rows[0].size();
  size_t row = 0;
  std::vector<size_t> pivots;
  for (size_t col = 0; col < cols && row < rows.size(); ++col) {
    size_t sel = row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[row], rows[sel]);
    Rat p = rows[row][col];
    for (auto& x : rows[row]) x /= p;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == row || rows[r][col] == 0) continue;
      Rat f = rows[r][col];
      for (size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  rows.resize(row);
  return rows;
}

size_t mat_rank(RatMat m) { return rref(std::move(m)).size(); }

RatMat mat_inverse(const RatMat& m) {
  size_t n = m.size();
  RatMat aug = m;
  for (size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, Rat(0));
    aug[i][n + i] = 1;
  }
  aug = rref(std::move(aug));
  if (aug.size() != n) throw std::invalid_argument("mat_inverse: singular matrix");
  RatMat out(n, RatVec(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (aug[i][j] != (i == j ? 1 : 0)) throw std::invalid_argument("mat_inverse: singular matrix");
      out[i][j] = aug[i][n + j];
    }
  }
  return out;
}

Subspace Subspace::span(size_t ambient, const RatMat& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw std::invalid_argument("Subspace::span: dimension mismatch");
  Subspace s(ambient);
  s.basis_ = rref(vectors);
  for (const auto& row : s.basis_) {
    size_t c = 0;
    while (row[c] == 0) ++c;
    s.pivots_.push_back(c);
  }
  return s;
}

bool Subspace::contains(const RatVec& v) const { return coordinates(v).has_value(); }

std::optional<RatVec> Subspace::coordinates(const RatVec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace: dimension mismatch");
  RatVec coords(basis_.size());
  RatVec rem = v;
  for (size_t i = 0; i < basis_.size(); ++i) {
    coords[i] = rem[pivots_[i]];
    if (coords[i] != 0)
      for (size_t c = 0; c < ambient_; ++c) rem[c] -= coords[i] * basis_[i][c];
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace::sum: dimension mismatch");
  RatMat all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("Subspace::intersect: dimension mismatch");
  // Zassenhaus: row reduce [A|A ; B|0]; rows with zero left half carry the
  // intersection in the right half.
  size_t n = ambient_;
  RatMat block;
  for (const auto& a : basis_) {
    RatVec row = a;
    row.insert(row.end(), a.begin(), a.end());
    block.push_back(std::move(row));
  }
  for (const auto& b : other.basis_) {
    RatVec row = b;
    row.resize(2 * n, Rat(0));
    block.push_back(std::move(row));
  }
  block = rref(std::move(block));
  RatMat inter;
  for (const auto& row : block) {
    bool left_zero = true;
    for (size_t c = 0; c < n; ++c)
      if (row[c] != 0) { left_zero = false; break; }
    if (left_zero) inter.push_back(RatVec(row.begin() + n, row.end()));
  }
  return span(n, inter);
}

bool Subspace::equal(const Subspace& other) const {
  return ambient_ == other.ambient_ && basis_ == other.basis_;
}

bool Subspace::contains_subspace(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

bool is_integral(const RatVec& v) {
  for (const auto& x : v)
    if (boost::multiprecision::denominator(x) != 1) return false;
  return true;
}

Int content_gcd(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g < 0 ? Int(-g) : g;
}

IntVec make_indivisible(const RatVec& v) {
  Int den = 1;
  bool nonzero = false;
  for (const auto& x : v) {
    if (x != 0) nonzero = true;
    den = lcm(den, boost::multiprecision::denominator(x));
  }
  if (!nonzero) throw std::invalid_argument("make_indivisible: zero vector");
  IntVec scaled(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    scaled[i] = boost::multiprecision::numerator(v[i]) * (den / boost::multiprecision::denominator(v[i]));
  Int g = content_gcd(scaled);
  int sign = 1;
  for (const auto& x : scaled) {
    if (x != 0) { sign = x > 0 ? 1 : -1; break; }
  }
  for (auto& x : scaled) x = x * sign / g;
  return scaled;
}

}  // namespace coverhom

#include "coverhom/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace coverhom {

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  if (group != o.group) throw std::invalid_argument("ClassFunction: group mismatch");
  ClassFunction out = *this;
  for (size_t i = 0; i < values.size(); ++i) out.values[i] += o.values[i];
  return out;
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  if (group != o.group) throw std::invalid_argument("ClassFunction: group mismatch");
  ClassFunction out = *this;
  for (size_t i = 0; i < values.size(); ++i) out.values[i] -= o.values[i];
  return out;
}

ClassFunction ClassFunction::scaled(const Rat& c) const {
  ClassFunction out = *this;
  Cyclotomic f{c};
  for (auto& v : out.values) v *= f;
  return out;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  return group == o.group && values == o.values;
}

ClassFunction trivial_character(GroupPtr g) {
  ClassFunction f{g, std::vector<Cyclotomic>(g->class_count(), Cyclotomic(Rat(1)))};
  return f;
}

ClassFunction regular_character(GroupPtr g) {
  std::vector<Cyclotomic> v(g->class_count(), Cyclotomic(Rat(0)));
  v[0] = Cyclotomic(Rat((long long)g->order()));
  return {g, std::move(v)};
}

ClassFunction class_function_from_rationals(GroupPtr g, const RatVec& values) {
  if (values.size() != g->class_count())
    throw std::invalid_argument("class_function_from_rationals: wrong length");
  std::vector<Cyclotomic> v;
  for (const auto& r : values) v.emplace_back(r);
  return {g, std::move(v)};
}

Cyclotomic inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  if (chi.group != psi.group) throw std::invalid_argument("inner_product: group mismatch");
  const auto& g = *chi.group;
  Cyclotomic sum;
  for (size_t c = 0; c < g.class_count(); ++c) {
    Cyclotomic term = chi.values[c] * psi.values[g.inverse_class((int)c)];
    sum += term * Cyclotomic(Rat((long long)g.classes()[c].size()));
  }
  return sum * Cyclotomic(Rat(1, (long long)g.order()));
}

ClassFunction perm_character(const Subgroup& h) {
  GroupPtr g = h.parent();
  auto reps = h.coset_representatives();
  std::vector<Cyclotomic> values;
  for (size_t c = 0; c < g->class_count(); ++c) {
    int x = g->class_representative((int)c);
    long long fixed = 0;
    for (int a : reps)
      if (h.contains(g->mul(g->inv(a), g->mul(x, a)))) ++fixed;
    values.emplace_back(Rat(fixed));
  }
  return {g, std::move(values)};
}

namespace {

// Small prime-field helpers for the Dixon lift.
struct Fp {
  long long p;
  long long add(long long a, long long b) const { return (a + b) % p; }
  long long sub(long long a, long long b) const { return ((a - b) % p + p) % p; }
  long long mul(long long a, long long b) const { return (__int128)a * b % p; }
  long long pow(long long a, long long e) const {
    long long r = 1; a %= p;
    while (e > 0) { if (e & 1) r = mul(r, a); a = mul(a, a); e >>= 1; }
    return r;
  }
  long long inv(long long a) const { return pow(((a % p) + p) % p, p - 2); }
};

using FpVec = std::vector<long long>;
using FpMat = std::vector<FpVec>;

// Row-reduce in place; returns rank.
size_t fp_rref(const Fp& f, FpMat& m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    long long piv = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, piv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      long long fac = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(fac, m[r][j]));
    }
    ++r;
  }
  return r;
}

// Basis of the kernel of m (columns = unknowns).
FpMat fp_kernel(const Fp& f, FpMat m) {
  size_t cols = m.empty() ? 0 : m[0].size();
  size_t rank = fp_rref(f, m);
  std::vector<int> pivot_of_col(cols, -1);
  {
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rank; ++c)
      if (m[r][c] == 1 && [&] {  // confirm c is this row's pivot
            for (size_t cc = 0; cc < c; ++cc)
              if (m[r][cc] != 0) return false;
            return true;
          }()) pivot_of_col[c] = (int)r, ++r;
  }
  FpMat basis;
  for (size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] != -1) continue;
    FpVec v(cols, 0);
    v[c] = 1;
    for (size_t cc = 0; cc < cols; ++cc)
      if (pivot_of_col[cc] != -1) v[cc] = f.sub(0, m[pivot_of_col[cc]][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

FpVec fp_mat_apply(const Fp& f, const FpMat& m, const FpVec& v) {
  FpVec out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    long long acc = 0;
    for (size_t j = 0; j < v.size(); ++j)
      if (m[i][j] && v[j]) acc = f.add(acc, f.mul(m[i][j], v[j]));
    out[i] = acc;
  }
  return out;
}

// Coordinates of target in the span of basis (must be solvable).
FpVec fp_solve_in_span(const Fp& f, const FpMat& basis, const FpVec& target) {
  size_t n = target.size(), d = basis.size();
  FpMat aug(n, FpVec(d + 1, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < d; ++j) aug[i][j] = basis[j][i];
    aug[i][d] = target[i];
  }
  fp_rref(f, aug);
  FpVec coeff(d, 0);
  for (size_t r = 0; r < aug.size(); ++r) {
    size_t c = 0;
    while (c <= d && aug[r][c] == 0) ++c;
    if (c == d) throw std::logic_error("fp_solve_in_span: inconsistent system");
    if (c < d) coeff[c] = aug[r][d];
  }
  return coeff;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

CharTable CharTable::build(GroupPtr g) {
  const size_t k = g->class_count();
  const long long order = (long long)g->order();
  const long long exponent = g->exponent();

  // Class-algebra structure constants a[i][j][l]: for representatives z of
  // C_l, the number of x in C_i with x^{-1} z in C_j.
  std::vector<std::vector<std::vector<long long>>> a(
      k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
  for (size_t i = 0; i < k; ++i)
    for (size_t l = 0; l < k; ++l) {
      int z = g->class_representative((int)l);
      for (int x : g->classes()[i]) {
        int y = g->mul(g->inv(x), z);
        a[i][g->class_of(y)][l] += 1;
      }
    }

  // Prime p = 1 (mod exponent), p > 2 sqrt(|G|).
  long long p = exponent + 1;
  while (p <= (long long)(2.0 * std::sqrt((double)order)) || !is_prime(p) ||
         (p - 1) % exponent != 0)
    p += exponent == 1 ? 1 : exponent;
  Fp f{p};

  // Class-sum multiplication matrices: (M_i)_{l,j} = a[i][j][l].
  std::vector<FpMat> class_mats(k, FpMat(k, FpVec(k, 0)));
  for (size_t i = 0; i < k; ++i)
    for (size_t l = 0; l < k; ++l)
      for (size_t j = 0; j < k; ++j) class_mats[i][l][j] = a[i][j][l] % p;

  // Split the class algebra into common one-dimensional eigenspaces.
  std::vector<FpMat> spaces;
  {
    FpMat whole;
    for (size_t i = 0; i < k; ++i) {
      FpVec e(k, 0);
      e[i] = 1;
      whole.push_back(std::move(e));
    }
    spaces.push_back(std::move(whole));
  }
  for (size_t i = 1; i < k; ++i) {
    std::vector<FpMat> next;
    for (auto& space : spaces) {
      if (space.size() == 1) { next.push_back(std::move(space)); continue; }
      // Restricted action A: M_i * b_j = sum A[j'][j] b_j'.
      size_t d = space.size();
      FpMat action(d, FpVec(d, 0));
      for (size_t j = 0; j < d; ++j) {
        FpVec img = fp_mat_apply(f, class_mats[i], space[j]);
        FpVec coeff = fp_solve_in_span(f, space, img);
        for (size_t j2 = 0; j2 < d; ++j2) action[j2][j] = coeff[j2];
      }
      size_t found = 0;
      for (long long lambda = 0; lambda < p && found < d; ++lambda) {
        FpMat shifted = action;
        for (size_t j = 0; j < d; ++j) shifted[j][j] = f.sub(shifted[j][j], lambda);
        FpMat ker = fp_kernel(f, shifted);
        if (ker.empty()) continue;
        found += ker.size();
        FpMat sub;
        for (const auto& coeff : ker) {
          FpVec v(k, 0);
          for (size_t j = 0; j < d; ++j)
            if (coeff[j])
              for (size_t c = 0; c < k; ++c) v[c] = f.add(v[c], f.mul(coeff[j], space[j][c]));
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
      if (found != d) throw std::runtime_error("CharTable: eigenspace split failed");
    }
    spaces = std::move(next);
    bool all_one = std::all_of(spaces.begin(), spaces.end(),
                               [](const FpMat& s) { return s.size() == 1; });
    if (all_one) break;
  }
  if (spaces.size() != k) throw std::runtime_error("CharTable: could not split class algebra");

  // Each eigenvector, normalized at the identity class, carries the central
  // character omega_i = |C_i| chi(g_i) / chi(1) mod p.
  long long root = 0;  // element of multiplicative order = exponent
  for (long long cand = 2; cand < p; ++cand) {
    long long w = f.pow(cand, (p - 1) / exponent);
    bool primitive = true;
    for (long long e = 1; e < exponent; ++e)
      if (exponent % e == 0 && e < exponent && f.pow(w, e) == 1) { primitive = false; break; }
    if (w != 1 && primitive) { root = w; break; }
  }
  if (exponent == 1) root = 1;

  std::vector<ClassFunction> irreducibles;
  for (const auto& space : spaces) {
    // omega_i is the eigenvalue of the i-th class-sum matrix on this
    // one-dimensional common eigenspace: omega_i = |C_i| chi(g_i) / chi(1).
    const FpVec& v = space[0];
    size_t pivot = 0;
    while (pivot < k && v[pivot] == 0) ++pivot;
    long long pivot_inv = f.inv(v[pivot]);
    FpVec omega(k, 0);
    for (size_t i = 0; i < k; ++i)
      omega[i] = f.mul(fp_mat_apply(f, class_mats[i], v)[pivot], pivot_inv);

    // Degree from sum_i omega_i omega_{i'} / |C_i| = |G| / d^2.
    long long s = 0;
    for (size_t i = 0; i < k; ++i) {
      long long classes_inv = f.inv((long long)g->classes()[i].size() % p);
      s = f.add(s, f.mul(f.mul(omega[i], omega[g->inverse_class((int)i)]), classes_inv));
    }
    long long d2 = f.mul(order % p, f.inv(s));
    long long deg = 0;
    for (long long d = 1; d * d <= order; ++d)
      if (order % d == 0 && f.mul(d % p, d % p) == d2) { deg = d; break; }
    if (deg == 0) throw std::runtime_error("CharTable: degree recovery failed");

    // chi(g_i) mod p.
    FpVec chi_p(k);
    for (size_t i = 0; i < k; ++i)
      chi_p[i] = f.mul(f.mul(deg % p, omega[i]), f.inv((long long)g->classes()[i].size() % p));

    // Lift each value through root-of-unity multiplicities.
    std::vector<Cyclotomic> values(k);
    for (size_t i = 0; i < k; ++i) {
      int rep = g->class_representative((int)i);
      long long o = g->element_order(rep);
      long long w_o = f.pow(root, exponent / o);
      Cyclotomic val;
      long long o_inv = f.inv(o % p);
      for (long long u = 0; u < o; ++u) {
        long long cu = 0;
        for (long long v = 0; v < o; ++v) {
          long long chi_gv = chi_p[g->class_of(g->power(rep, v))];
          long long tw = f.pow(f.inv(w_o), (u * v) % o);
          cu = f.add(cu, f.mul(chi_gv, tw));
        }
        cu = f.mul(cu, o_inv);  // multiplicity, a small nonnegative integer
        if (cu != 0)
          val += Cyclotomic(Rat(cu)) * Cyclotomic::zeta(exponent, u * (exponent / o));
      }
      values[i] = val;
    }
    irreducibles.push_back({g, std::move(values)});
  }

  // Deterministic order: trivial first, then by degree, then by values.
  auto deg_of = [](const ClassFunction& c) { return *c.values[0].as_rational(); };
  std::sort(irreducibles.begin(), irreducibles.end(),
            [&](const ClassFunction& x, const ClassFunction& y) {
              Rat dx = deg_of(x), dy = deg_of(y);
              if (dx != dy) return dx < dy;
              return std::lexicographical_compare(x.values.begin(), x.values.end(),
                                                  y.values.begin(), y.values.end());
            });
  auto triv = trivial_character(g);
  auto it = std::find(irreducibles.begin(), irreducibles.end(), triv);
  if (it == irreducibles.end()) throw std::runtime_error("CharTable: trivial character missing");
  std::rotate(irreducibles.begin(), it, it + 1);

  CharTable table;
  table.group_ = g;
  table.irreducibles_ = std::move(irreducibles);

  // Exact verification: row and column orthogonality, degree sum.
  Rat degree_sq_sum(0);
  for (size_t i = 0; i < k; ++i) {
    Rat di = *table.irreducibles_[i].values[0].as_rational();
    degree_sq_sum += di * di;
    for (size_t j = 0; j < k; ++j) {
      Cyclotomic ip = inner_product(table.irreducibles_[i], table.irreducibles_[j]);
      if (ip != Cyclotomic(Rat(i == j ? 1 : 0)))
        throw std::runtime_error("CharTable: row orthogonality failed");
    }
  }
  if (degree_sq_sum != Rat(order)) throw std::runtime_error("CharTable: degree sum failed");
  for (size_t c1 = 0; c1 < k; ++c1)
    for (size_t c2 = 0; c2 < k; ++c2) {
      Cyclotomic s;
      for (size_t i = 0; i < k; ++i)
        s += table.irreducibles_[i].values[c1] *
             table.irreducibles_[i].values[g->inverse_class((int)c2)];
      Rat expected = c1 == c2 ? Rat(order, (long long)g->classes()[c1].size()) : Rat(0);
      if (s != Cyclotomic(expected))
        throw std::runtime_error("CharTable: column orthogonality failed");
    }
  return table;
}

long long CharTable::degree(size_t i) const {
  Rat d = *irreducibles_[i].values[0].as_rational();
  return (long long)Int(boost::multiprecision::numerator(d));
}

std::vector<std::vector<size_t>> CharTable::galois_orbits() const {
  long long e = group_->exponent();
  std::vector<std::vector<size_t>> orbits;
  std::vector<char> done(irreducibles_.size(), 0);
  for (size_t i = 0; i < irreducibles_.size(); ++i) {
    if (done[i]) continue;
    std::vector<size_t> orbit;
    for (long long t = 1; t < std::max<long long>(e, 2); ++t) {
      if (std::gcd(t, e) != 1) continue;
      std::vector<Cyclotomic> mapped;
      for (const auto& v : irreducibles_[i].values) mapped.push_back(v.galois(t));
      for (size_t j = 0; j < irreducibles_.size(); ++j)
        if (!done[j] && irreducibles_[j].values == mapped) {
          done[j] = 1;
          orbit.push_back(j);
        }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

long long fixed_space_dim(const ClassFunction& chi, const Subgroup& k) {
  Cyclotomic sum;
  for (int h : k.elements()) sum += chi.at_element(h);
  sum *= Cyclotomic(Rat(1, (long long)k.order()));
  auto r = sum.as_rational();
  if (!r || boost::multiprecision::denominator(*r) != 1 || *r < 0)
    throw std::runtime_error("fixed_space_dim: input is not a character");
  return (long long)Int(boost::multiprecision::numerator(*r));
}

IrrCommBounds irr_comm_bounds(const Epimorphism& phi, const CharTable& table, int depth,
                              int len_cap) {
  if (phi.rank() < 2) throw std::invalid_argument("irr_comm_bounds: rank < 2");
  GroupPtr g = phi.target();
  IrrCommBounds out;

  std::vector<char> in_lower(table.size(), 0), in_upper(table.size(), 0);
  for (const auto& pc : enumerate_primitive_commutators(phi.rank(), depth, len_cap)) {
    int img = phi.evaluate(pc.word);
    auto cyc = g->subgroup({img});
    for (size_t i = 0; i < table.size(); ++i)
      if (!in_lower[i] && fixed_space_dim(table.irreducible(i), *cyc) > 0) in_lower[i] = 1;
  }
  // Upper bound: bases of F_n map onto generating n-tuples, so every
  // primitive-commutator image is a commutator of two entries of some
  // generating tuple.
  for (const auto& tuple : g->generating_tuples(phi.rank())) {
    for (size_t a = 0; a < tuple.size(); ++a)
      for (size_t b = 0; b < tuple.size(); ++b) {
        if (a == b) continue;
        int comm = g->mul(g->mul(tuple[a], tuple[b]),
                          g->mul(g->inv(tuple[a]), g->inv(tuple[b])));
        auto cyc = g->subgroup({comm});
        for (size_t i = 0; i < table.size(); ++i)
          if (!in_upper[i] && fixed_space_dim(table.irreducible(i), *cyc) > 0) in_upper[i] = 1;
      }
  }
  for (size_t i = 0; i < table.size(); ++i) {
    if (in_lower[i]) out.lower.push_back(i);
    if (in_upper[i]) out.upper.push_back(i);
  }
  return out;
}

CommMultiplicityBound multiplicity_bound_comm(const Epimorphism& phi, const CharTable& table,
                                              const IrrCommBounds& bounds) {
  CommMultiplicityBound out;
  out.ceiling.assign(table.size(), 0);
  out.total_dimension = 0;
  long long n = phi.rank();
  for (size_t i : bounds.upper) {
    if (i == 0) continue;  // trivial excluded
    long long d = table.degree(i);
    out.ceiling[i] = (n - 1) * d;
    out.total_dimension += (n - 1) * d * d;
  }
  return out;
}

}  // namespace coverhom

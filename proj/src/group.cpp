#include "coverhom/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include <json.hpp>

namespace coverhom {

Permutation::Permutation(int degree) : degree_(degree), images_(degree) {
  if (degree < 1) throw std::invalid_argument("Permutation: degree must be positive");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(int degree, std::vector<int> images)
    : degree_(degree), images_(std::move(images)) {
  if (degree < 1 || (int)images_.size() != degree)
    throw std::invalid_argument("Permutation: bad image list");
  std::vector<char> seen(degree, 0);
  for (int v : images_) {
    if (v < 0 || v >= degree || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::parse(int degree, const std::string& cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  size_t pos = 0;
  while (pos < cycles.size()) {
    while (pos < cycles.size() && (cycles[pos] == ' ' || cycles[pos] == ',')) ++pos;
    if (pos >= cycles.size()) break;
    if (cycles[pos] != '(') throw std::invalid_argument("Permutation::parse: expected '('");
    size_t close = cycles.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("Permutation::parse: unbalanced");
    std::istringstream in(cycles.substr(pos + 1, close - pos - 1));
    std::vector<int> cycle;
    int point;
    while (in >> point) {
      if (point < 1 || point > degree)
        throw std::out_of_range("Permutation::parse: point out of range");
      cycle.push_back(point - 1);
      if (in.peek() == ',') in.get();
    }
    for (size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
  }
  return Permutation(degree, std::move(img));
}

std::string Permutation::cycle_str() const {
  std::string out;
  std::vector<char> done(degree_, 0);
  for (int i = 0; i < degree_; ++i) {
    if (done[i] || images_[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    do {
      if (!first) out += " ";
      out += std::to_string(j + 1);
      done[j] = 1;
      j = images_[j];
      first = false;
    } while (j != i);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree_ != other.degree_) throw std::invalid_argument("Permutation: degree mismatch");
  std::vector<int> img(degree_);
  for (int i = 0; i < degree_; ++i) img[i] = images_[other.images_[i]];
  return Permutation(degree_, std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(degree_);
  for (int i = 0; i < degree_; ++i) img[images_[i]] = i;
  return Permutation(degree_, std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i)
    if (images_[i] != i) return false;
  return true;
}

GroupPtr FiniteGroup::from_generators(std::vector<Permutation> generators, size_t order_cap) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->degree_ = generators.empty() ? 1 : generators[0].degree();
  for (const auto& p : generators)
    if (p.degree() != g->degree_) throw std::invalid_argument("FiniteGroup: degree mismatch");
  g->generators_ = std::move(generators);
  g->enumerate(order_cap);
  g->finalize();
  return g;
}

GroupPtr FiniteGroup::trivial() { return from_generators({}); }

void FiniteGroup::enumerate(size_t order_cap) {
  Permutation id(degree_);
  elements_.push_back(id);
  index_[id.images()] = 0;
  // BFS closure in deterministic generator order.
  for (size_t head = 0; head < elements_.size(); ++head) {
    for (const auto& gen : generators_) {
      Permutation next = elements_[head] * gen;
      if (index_.emplace(next.images(), (int)elements_.size()).second) {
        elements_.push_back(std::move(next));
        if (elements_.size() > order_cap)
          throw std::runtime_error("FiniteGroup: order cap exceeded");
      }
    }
  }
  for (const auto& gen : generators_) generator_indices_.push_back(index_of(gen));
}

void FiniteGroup::finalize() {
  size_t n = elements_.size();
  if (n <= kCayleyCap) {
    cayley_.assign(n, std::vector<int>(n));
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) cayley_[a][b] = index_of(elements_[a] * elements_[b]);
  }
  inverse_.resize(n);
  for (size_t a = 0; a < n; ++a) inverse_[a] = index_of(elements_[a].inverse());

  orders_.resize(n);
  for (size_t a = 0; a < n; ++a) {
    int o = 1, x = (int)a;
    while (x != 0) { x = mul(x, (int)a); ++o; }
    orders_[a] = (int)a == 0 ? 1 : o;
  }

  class_of_.assign(n, -1);
  for (size_t a = 0; a < n; ++a) {
    if (class_of_[a] != -1) continue;
    int c = (int)classes_.size();
    std::vector<int> cls;
    std::queue<int> q;
    q.push((int)a);
    class_of_[a] = c;
    while (!q.empty()) {
      int x = q.front(); q.pop();
      cls.push_back(x);
      for (int gi : generator_indices_) {
        int y = conj(x, gi);
        if (class_of_[y] == -1) { class_of_[y] = c; q.push(y); }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

int FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p.images());
  if (it == index_.end()) throw std::out_of_range("FiniteGroup: permutation not in group");
  return it->second;
}

int FiniteGroup::mul(int a, int b) const {
  if (!cayley_.empty()) return cayley_[a][b];
  return index_of(elements_[a] * elements_[b]);
}

int FiniteGroup::inv(int a) const { return inverse_[a]; }

int FiniteGroup::power(int a, long long e) const {
  int o = orders_[a];
  e %= o;
  if (e < 0) e += o;
  int out = 0;
  for (long long i = 0; i < e; ++i) out = mul(out, a);
  return out;
}

long long FiniteGroup::exponent() const {
  long long e = 1;
  for (int o : orders_) e = std::lcm(e, (long long)o);
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (int a : generator_indices_)
    for (int b : generator_indices_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::shared_ptr<Subgroup> FiniteGroup::subgroup(std::vector<int> generator_indices) const {
  return std::make_shared<Subgroup>(shared_from_this(), std::move(generator_indices));
}

std::vector<std::vector<int>> FiniteGroup::generating_tuples(int n, size_t work_cap) const {
  size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= order();
    if (total > work_cap) throw std::runtime_error("generating_tuples: cap exceeded");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(n, 0);
  for (size_t code = 0; code < total; ++code) {
    size_t c = code;
    for (int i = 0; i < n; ++i) { tuple[i] = (int)(c % order()); c /= order(); }
    Subgroup h(shared_from_this(), tuple);
    if (h.order() == order()) out.push_back(tuple);
  }
  return out;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> generator_indices)
    : parent_(std::move(parent)), generators_(std::move(generator_indices)) {
  for (int g : generators_)
    if (g < 0 || (size_t)g >= parent_->order()) throw std::out_of_range("Subgroup: bad index");
  member_.assign(parent_->order(), 0);
  std::vector<int> frontier{0};
  member_[0] = 1;
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int g : generators_) {
      int y = parent_->mul(x, g);
      if (!member_[y]) { member_[y] = 1; frontier.push_back(y); }
    }
  }
  for (size_t i = 0; i < member_.size(); ++i)
    if (member_[i]) elements_.push_back((int)i);
}

size_t Subgroup::index() const { return parent_->order() / order(); }

bool Subgroup::contains(int element) const { return member_[element]; }

bool Subgroup::is_normal() const {
  for (int g : parent_->generator_indices())
    for (int h : generators_)
      if (!member_[parent_->conj(h, g)]) return false;
  return true;
}

std::vector<std::vector<int>> Subgroup::left_cosets() const {
  std::vector<char> assigned(parent_->order(), 0);
  std::vector<std::vector<int>> cosets;
  for (size_t g = 0; g < parent_->order(); ++g) {
    if (assigned[g]) continue;
    std::vector<int> coset;
    for (int h : elements_) {
      int x = parent_->mul((int)g, h);
      assigned[x] = 1;
      coset.push_back(x);
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

std::vector<int> Subgroup::coset_representatives() const {
  std::vector<int> reps;
  for (const auto& c : left_cosets()) reps.push_back(c[0]);
  return reps;
}

Subgroup::AsGroup Subgroup::as_group() const {
  std::vector<Permutation> gens;
  for (int g : generators_) gens.push_back(parent_->element(g));
  AsGroup out;
  out.group = FiniteGroup::from_generators(gens);
  out.to_parent.resize(out.group->order());
  for (size_t i = 0; i < out.group->order(); ++i) {
    int p = parent_->index_of(out.group->element((int)i));
    out.to_parent[i] = p;
    out.to_sub[p] = (int)i;
  }
  return out;
}

std::vector<long long> AbelianGroup::tuple_of(int element) const {
  // Decompose via the distinguished generators by lex index of the regular
  // action; element indices are not lex codes, so walk the tuple directly.
  std::vector<long long> tuple(invariants.size(), 0);
  int x = element;
  // Peel off factors: subtract generator until the coordinate pattern matches.
  // The regular action point moved from the identity point 0 encodes the lex
  // code of the element.
  int code = group->element(x)(0);
  for (size_t i = invariants.size(); i-- > 0;) {
    tuple[i] = code % invariants[i];
    code /= (int)invariants[i];
  }
  return tuple;
}

int AbelianGroup::index_of_tuple(const std::vector<long long>& tuple) const {
  int x = 0;
  for (size_t i = 0; i < invariants.size(); ++i) {
    long long e = ((tuple[i] % invariants[i]) + invariants[i]) % invariants[i];
    for (long long k = 0; k < e; ++k) x = group->mul(x, factor_generators[i]);
  }
  return x;
}

AbelianGroup regular_abelian(const std::vector<long long>& invariants, size_t order_cap) {
  long long order = 1;
  for (long long m : invariants) {
    if (m < 1) throw std::invalid_argument("regular_abelian: invariants must be >= 1");
    order *= m;
    if ((size_t)order > order_cap) throw std::runtime_error("regular_abelian: order cap exceeded");
  }
  int deg = (int)order;
  // Points are lex codes of exponent tuples; generator i adds 1 to slot i.
  auto shift = [&](int code, size_t slot) {
    std::vector<long long> t(invariants.size());
    int c = code;
    for (size_t i = invariants.size(); i-- > 0;) { t[i] = c % invariants[i]; c /= (int)invariants[i]; }
    t[slot] = (t[slot] + 1) % invariants[slot];
    int out = 0;
    for (size_t i = 0; i < invariants.size(); ++i) out = out * (int)invariants[i] + (int)t[i];
    return out;
  };
  std::vector<Permutation> gens;
  for (size_t slot = 0; slot < invariants.size(); ++slot) {
    std::vector<int> img(deg);
    for (int p = 0; p < deg; ++p) img[p] = shift(p, slot);
    gens.emplace_back(deg, std::move(img));
  }
  AbelianGroup out;
  out.group = FiniteGroup::from_generators(gens, order_cap);
  out.invariants = invariants;
  out.factor_generators = out.group->generator_indices();
  return out;
}

Epimorphism::Epimorphism(int rank, GroupPtr target, std::vector<int> images)
    : rank_(rank), target_(std::move(target)), images_(std::move(images)) {
  if (rank < 1) throw std::invalid_argument("Epimorphism: rank must be positive");
  if ((int)images_.size() != rank) throw std::invalid_argument("Epimorphism: need rank images");
  Subgroup generated(target_, images_);
  if (generated.order() != target_->order())
    throw std::invalid_argument("Epimorphism: images do not generate the target");
}

int Epimorphism::evaluate(const Word& w) const {
  if (w.rank() != rank_) throw std::invalid_argument("Epimorphism::evaluate: rank mismatch");
  int x = 0;
  for (int l : w.letters()) {
    int img = images_[std::abs(l) - 1];
    x = target_->mul(x, l > 0 ? img : target_->inv(img));
  }
  return x;
}

bool cyclic_intersection_trivial(const FiniteGroup& g, int a, int b) {
  std::vector<char> in_a(g.order(), 0);
  int x = 0;
  do { in_a[x] = 1; x = g.mul(x, a); } while (x != 0);
  int y = 0;
  do {
    if (in_a[y] && y != 0) return false;
    y = g.mul(y, b);
  } while (y != 0);
  return true;
}

GroupSpec group_from_json(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  GroupSpec out;
  if (j.contains("abelian_invariants")) {
    std::vector<long long> inv = j["abelian_invariants"].get<std::vector<long long>>();
    auto ab = regular_abelian(inv);
    out.group = ab.group;
    out.preferred_generators = ab.factor_generators;
    return out;
  }
  if (j.contains("perm_generators")) {
    std::vector<std::string> specs;
    for (const auto& item : j["perm_generators"]) {
      if (item.is_string()) specs.push_back(item.get<std::string>());
      else {
        std::string joined;
        for (const auto& part : item) joined += part.get<std::string>();
        specs.push_back(joined);
      }
    }
    int degree = 1;
    for (const auto& s : specs)
      for (size_t i = 0; i < s.size();) {
        if (std::isdigit((unsigned char)s[i])) {
          size_t end = i;
          while (end < s.size() && std::isdigit((unsigned char)s[end])) ++end;
          degree = std::max(degree, std::stoi(s.substr(i, end - i)));
          i = end;
        } else ++i;
      }
    std::vector<Permutation> gens;
    for (const auto& s : specs) gens.push_back(Permutation::parse(degree, s));
    out.group = FiniteGroup::from_generators(gens);
    out.preferred_generators = out.group->generator_indices();
    return out;
  }
  throw std::invalid_argument("group_from_json: need perm_generators or abelian_invariants");
}

}  // namespace coverhom

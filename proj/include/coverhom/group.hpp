#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coverhom/word.hpp"

namespace coverhom {

// Bijection of {0, ..., degree-1} (1-based in cycle notation / JSON).
class Permutation {
 public:
  explicit Permutation(int degree);             // identity
  Permutation(int degree, std::vector<int> images);

  // "(1 2 3)(4 5)"; fixed points may be omitted.
  static Permutation parse(int degree, const std::string& cycles);
  std::string cycle_str() const;

  int degree() const { return degree_; }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& other) const;  // (p*q)(x) = p(q(x))
  Permutation inverse() const;
  bool is_identity() const;
  bool operator==(const Permutation& o) const = default;
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  int degree_;
  std::vector<int> images_;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Subgroup of an enumerated FiniteGroup: closed element subset with
// membership, index, cosets.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<int> generator_indices);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }    // ascending
  const std::vector<int>& generators() const { return generators_; }
  size_t order() const { return elements_.size(); }
  size_t index() const;
  bool contains(int element) const;
  bool is_normal() const;
  // Left cosets gH, as lists of element indices; coset 0 is H itself, reps in
  // ascending order of their minimal element.
  std::vector<std::vector<int>> left_cosets() const;
  std::vector<int> coset_representatives() const;

  // Materialize as a standalone FiniteGroup together with the index maps in
  // both directions (sub index <-> parent index).
  struct AsGroup {
    GroupPtr group;
    std::vector<int> to_parent;   // sub element index -> parent index
    std::map<int, int> to_sub;    // parent index -> sub element index
  };
  AsGroup as_group() const;

 private:
  GroupPtr parent_;
  std::vector<int> generators_;
  std::vector<int> elements_;
  std::vector<char> member_;
};

// Finite group realized by permutations, fully enumerated.  Element identity
// is the index in a deterministic BFS enumeration (identity at index 0).
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  static constexpr size_t kDefaultOrderCap = 1'000'000;
  static constexpr size_t kCayleyCap = 4096;

  static GroupPtr from_generators(std::vector<Permutation> generators,
                                  size_t order_cap = kDefaultOrderCap);
  static GroupPtr trivial();

  int degree() const { return degree_; }
  size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<int>& generator_indices() const { return generator_indices_; }
  const Permutation& element(int i) const { return elements_[i]; }
  int index_of(const Permutation& p) const;

  int mul(int a, int b) const;
  int inv(int a) const;
  int conj(int a, int by) const { return mul(mul(by, a), inv(by)); }
  int power(int a, long long e) const;
  int element_order(int a) const { return orders_[a]; }
  long long exponent() const;
  bool is_abelian() const;

  // Conjugacy classes, ordered by minimal member; class 0 = {identity}.
  size_t class_count() const { return classes_.size(); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int element) const { return class_of_[element]; }
  int class_representative(int c) const { return classes_[c][0]; }
  int inverse_class(int c) const { return class_of_[inv(classes_[c][0])]; }

  std::shared_ptr<Subgroup> subgroup(std::vector<int> generator_indices) const;

  // Exhaustive list of n-tuples generating the whole group.
  std::vector<std::vector<int>> generating_tuples(int n, size_t work_cap = 20'000'000) const;

 private:
  FiniteGroup() = default;
  void enumerate(size_t order_cap);
  void finalize();

  int degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<int> generator_indices_;
  std::vector<Permutation> elements_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<int>> cayley_;   // empty above kCayleyCap
  std::vector<int> inverse_;
  std::vector<int> orders_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

// (Z/m_1) x ... x (Z/m_k) in its regular permutation action, with one
// distinguished generator per factor and the index <-> exponent-tuple maps.
struct AbelianGroup {
  GroupPtr group;
  std::vector<long long> invariants;
  std::vector<int> factor_generators;   // element index of each unit vector
  std::vector<long long> tuple_of(int element) const;
  int index_of_tuple(const std::vector<long long>& tuple) const;
};
AbelianGroup regular_abelian(const std::vector<long long>& invariants,
                             size_t order_cap = FiniteGroup::kDefaultOrderCap);

// Surjective homomorphism F_n -> G given by generator images.
class Epimorphism {
 public:
  Epimorphism(int rank, GroupPtr target, std::vector<int> images);

  int rank() const { return rank_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<int>& images() const { return images_; }
  int evaluate(const Word& w) const;

 private:
  int rank_;
  GroupPtr target_;
  std::vector<int> images_;
};

bool cyclic_intersection_trivial(const FiniteGroup& g, int a, int b);

// JSON group spec: {"perm_generators": [...]} or {"abelian_invariants": [...]}.
// Each perm generator is a cycle-notation string; degree is inferred.
struct GroupSpec {
  GroupPtr group;
  // For abelian specs, the distinguished factor generators (else the
  // permutation generators' indices).
  std::vector<int> preferred_generators;
};
GroupSpec group_from_json(const std::string& json_text);

}  // namespace coverhom

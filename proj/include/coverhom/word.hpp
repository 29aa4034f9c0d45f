#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coverhom {

// A freely reduced word in the free group F_rank.  Letters are signed
// 1-based generator indices: +i is x_i, -i is x_i^{-1}.
class Word {
 public:
  Word() : rank_(1) {}
  explicit Word(int rank) : rank_(rank) { check_rank(rank); }
  Word(int rank, std::vector<int> letters);

  static Word identity(int rank) { return Word(rank); }
  static Word generator(int rank, int index, int sign = +1);

  // Parse "abAB" style: 'a'..'z' are x_1..x_26, capitals their inverses.
  static Word parse(int rank, const std::string& text);
  std::string str() const;

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  size_t length() const { return letters_.size(); }

  Word inverse() const;
  Word operator*(const Word& other) const;
  Word pow(int exponent) const;
  Word conjugate(const Word& by) const;  // by * this * by^{-1}

  bool operator==(const Word& o) const { return rank_ == o.rank_ && letters_ == o.letters_; }
  bool operator<(const Word& o) const {
    if (rank_ != o.rank_) return rank_ < o.rank_;
    if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
    return letters_ < o.letters_;
  }

  std::vector<long long> abelianize() const;

 private:
  static void check_rank(int rank);
  int rank_;
  std::vector<int> letters_;
};

Word reduce(int rank, const std::vector<int>& raw_letters);
Word commutator(const Word& w, const Word& v);

// Exponent vector is a signed unit vector or has gcd 1 over its nonzero
// entries.  Necessary for primitivity of the underlying word.
bool indivisible_abelianization(const Word& w);

// Elementary Nielsen moves on a free basis (x_1, ..., x_n).
struct NielsenMove {
  enum Kind { Invert, Swap, MultiplyRight, MultiplyLeft };
  Kind kind;
  int i = 0;       // 1-based target generator
  int j = 0;       // 1-based other generator (Swap/Multiply)
  int sign = +1;   // exponent of x_j in Multiply moves

  std::string str() const;
};

// All elementary moves for the given rank, in a fixed deterministic order.
std::vector<NielsenMove> elementary_moves(int rank);

// An automorphism of F_rank recorded as a composition of elementary Nielsen
// moves, which guarantees it is an automorphism by construction.
class FreeAutomorphism {
 public:
  explicit FreeAutomorphism(int rank);  // identity

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const std::vector<NielsenMove>& provenance() const { return moves_; }

  FreeAutomorphism then(const NielsenMove& move) const;
  Word apply(const Word& w) const;

 private:
  int rank_;
  std::vector<Word> images_;
  std::vector<NielsenMove> moves_;
};

// Apply a move to a basis tuple in place.
void apply_move(std::vector<Word>& images, const NielsenMove& move);

// {alpha(x_1) : alpha a composition of <= depth elementary Nielsen moves},
// deduplicated after free reduction.  Sound: every output is primitive.
// Words longer than len_cap are pruned during the search; len_cap <= 0 means
// the default 2*depth + 2.
std::set<Word> enumerate_primitives(int rank, int depth, int len_cap = 0);

// Primitive commutators [alpha(x_1), alpha(x_2)] with the witnessing basis
// pair attached, for alpha of <= depth elementary moves.
struct PrimitiveCommutator {
  Word word;
  Word basis_first;
  Word basis_second;
  bool operator<(const PrimitiveCommutator& o) const { return word < o.word; }
};
std::set<PrimitiveCommutator> enumerate_primitive_commutators(int rank, int depth,
                                                              int len_cap = 0);

}  // namespace coverhom

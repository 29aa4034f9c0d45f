#include "coverhom/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace coverhom {

void Word::check_rank(int rank) {
  if (rank < 1) throw std::invalid_argument("Word: rank must be positive");
  if (rank > 26) throw std::invalid_argument("Word: rank > 26 not representable as letters");
}

Word::Word(int rank, std::vector<int> letters) : rank_(rank), letters_(std::move(letters)) {
  check_rank(rank);
  for (size_t i = 0; i < letters_.size(); ++i) {
    int l = letters_[i];
    if (l == 0 || std::abs(l) > rank_) throw std::out_of_range("Word: letter index out of range");
    if (i > 0 && letters_[i - 1] == -l) throw std::invalid_argument("Word: not freely reduced");
  }
}

Word Word::generator(int rank, int index, int sign) {
  if (index < 1 || index > rank) throw std::out_of_range("Word::generator: index out of range");
  Word w(rank);
  w.letters_.push_back(sign >= 0 ? index : -index);
  return w;
}

Word Word::parse(int rank, const std::string& text) {
  std::vector<int> raw;
  raw.reserve(text.size());
  for (char c : text) {
    if (c >= 'a' && c <= 'z') raw.push_back(c - 'a' + 1);
    else if (c >= 'A' && c <= 'Z') raw.push_back(-(c - 'A' + 1));
    else if (c == ' ' || c == '1') continue;  // "1" spells the identity
    else throw std::invalid_argument(std::string("Word::parse: bad character '") + c + "'");
  }
  return reduce(rank, raw);
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int l : letters_) out += l > 0 ? char('a' + l - 1) : char('A' - l - 1);
  return out;
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

Word Word::operator*(const Word& other) const {
  if (rank_ != other.rank_) throw std::invalid_argument("Word: rank mismatch");
  std::vector<int> raw = letters_;
  raw.insert(raw.end(), other.letters_.begin(), other.letters_.end());
  return reduce(rank_, raw);
}

Word Word::pow(int exponent) const {
  Word base = exponent >= 0 ? *this : inverse();
  int e = std::abs(exponent);
  Word out(rank_);
  for (int i = 0; i < e; ++i) out = out * base;
  return out;
}

Word Word::conjugate(const Word& by) const { return by * *this * by.inverse(); }

std::vector<long long> Word::abelianize() const {
  std::vector<long long> v(rank_, 0);
  for (int l : letters_) v[std::abs(l) - 1] += l > 0 ? 1 : -1;
  return v;
}

Word reduce(int rank, const std::vector<int>& raw_letters) {
  std::vector<int> stack;
  stack.reserve(raw_letters.size());
  for (int l : raw_letters) {
    if (l == 0 || std::abs(l) > rank) throw std::out_of_range("reduce: letter index out of range");
    if (!stack.empty() && stack.back() == -l) stack.pop_back();
    else stack.push_back(l);
  }
  return Word(rank, std::move(stack));
}

Word commutator(const Word& w, const Word& v) {
  if (w.rank() != v.rank()) throw std::invalid_argument("commutator: rank mismatch");
  return w * v * w.inverse() * v.inverse();
}

bool indivisible_abelianization(const Word& w) {
  auto v = w.abelianize();
  long long g = 0;
  for (long long c : v) g = std::gcd(g, std::abs(c));
  return g == 1;
}

std::string NielsenMove::str() const {
  switch (kind) {
    case Invert: return "inv(" + std::to_string(i) + ")";
    case Swap: return "swap(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case MultiplyRight:
      return "rmul(" + std::to_string(i) + "," + std::to_string(sign > 0 ? j : -j) + ")";
    case MultiplyLeft:
      return "lmul(" + std::to_string(i) + "," + std::to_string(sign > 0 ? j : -j) + ")";
  }
  return "?";
}

std::vector<NielsenMove> elementary_moves(int rank) {
  std::vector<NielsenMove> moves;
  for (int i = 1; i <= rank; ++i) moves.push_back({NielsenMove::Invert, i, 0, +1});
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 1; j <= rank; ++j) moves.push_back({NielsenMove::Swap, i, j, +1});
  for (int i = 1; i <= rank; ++i)
    for (int j = 1; j <= rank; ++j) {
      if (i == j) continue;
      moves.push_back({NielsenMove::MultiplyRight, i, j, +1});
      moves.push_back({NielsenMove::MultiplyRight, i, j, -1});
      moves.push_back({NielsenMove::MultiplyLeft, i, j, +1});
      moves.push_back({NielsenMove::MultiplyLeft, i, j, -1});
    }
  return moves;
}

void apply_move(std::vector<Word>& images, const NielsenMove& move) {
  switch (move.kind) {
    case NielsenMove::Invert:
      images[move.i - 1] = images[move.i - 1].inverse();
      break;
    case NielsenMove::Swap:
      std::swap(images[move.i - 1], images[move.j - 1]);
      break;
    case NielsenMove::MultiplyRight: {
      Word other = move.sign > 0 ? images[move.j - 1] : images[move.j - 1].inverse();
      images[move.i - 1] = images[move.i - 1] * other;
      break;
    }
    case NielsenMove::MultiplyLeft: {
      Word other = move.sign > 0 ? images[move.j - 1] : images[move.j - 1].inverse();
      images[move.i - 1] = other * images[move.i - 1];
      break;
    }
  }
}

FreeAutomorphism::FreeAutomorphism(int rank) : rank_(rank) {
  for (int i = 1; i <= rank; ++i) images_.push_back(Word::generator(rank, i));
}

FreeAutomorphism FreeAutomorphism::then(const NielsenMove& move) const {
  FreeAutomorphism out = *this;
  apply_move(out.images_, move);
  out.moves_.push_back(move);
  return out;
}

Word FreeAutomorphism::apply(const Word& w) const {
  if (w.rank() != rank_) throw std::invalid_argument("FreeAutomorphism::apply: rank mismatch");
  std::vector<int> raw;
  for (int l : w.letters()) {
    const Word& img = l > 0 ? images_[l - 1] : images_[-l - 1];
    if (l > 0) raw.insert(raw.end(), img.letters().begin(), img.letters().end());
    else {
      Word inv = img.inverse();
      raw.insert(raw.end(), inv.letters().begin(), inv.letters().end());
    }
  }
  return reduce(rank_, raw);
}

namespace {

// BFS over basis tuples reached by <= depth elementary moves, pruning tuples
// with a word longer than len_cap.
template <typename Visit>
void basis_tuple_bfs(int rank, int depth, int len_cap, Visit visit) {
  if (len_cap <= 0) len_cap = 2 * depth + 2;
  auto moves = elementary_moves(rank);
  std::vector<Word> start;
  for (int i = 1; i <= rank; ++i) start.push_back(Word::generator(rank, i));
  std::set<std::vector<Word>> seen;
  std::vector<std::vector<Word>> frontier{start};
  seen.insert(start);
  visit(start);
  for (int d = 0; d < depth; ++d) {
    std::vector<std::vector<Word>> next;
    for (const auto& tuple : frontier) {
      for (const auto& move : moves) {
        auto image = tuple;
        apply_move(image, move);
        bool too_long = false;
        for (const auto& w : image)
          if ((int)w.length() > len_cap) { too_long = true; break; }
        if (too_long) continue;
        if (seen.insert(image).second) {
          visit(image);
          next.push_back(std::move(image));
        }
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace

std::set<Word> enumerate_primitives(int rank, int depth, int len_cap) {
  if (depth < 0) throw std::invalid_argument("enumerate_primitives: depth < 0");
  std::set<Word> out;
  basis_tuple_bfs(rank, depth, len_cap,
                  [&](const std::vector<Word>& tuple) { out.insert(tuple[0]); });
  return out;
}

std::set<PrimitiveCommutator> enumerate_primitive_commutators(int rank, int depth, int len_cap) {
  if (rank < 2) throw std::invalid_argument("enumerate_primitive_commutators: rank < 2");
  if (depth < 0) throw std::invalid_argument("enumerate_primitive_commutators: depth < 0");
  std::set<PrimitiveCommutator> out;
  basis_tuple_bfs(rank, depth, len_cap, [&](const std::vector<Word>& tuple) {
    // Any two distinct members of a common basis, in either order.
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) {
        if (i == j) continue;
        Word c = commutator(tuple[i], tuple[j]);
        if (!c.is_identity()) out.insert({c, tuple[i], tuple[j]});
      }
  });
  return out;
}

}  // namespace coverhom

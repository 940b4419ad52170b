#pragma once

#include "affgr/cartan.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace affgr {

using Coord = std::int64_t;

// An element w of the affine Weyl group, stored as
//   V_j = <w^{-1}(theta), alpha_j^vee>,  theta = sum of fundamental weights,
// together with its length and one reduced word.
//
// theta is regular dominant of positive level, so its orbit is free and V is
// a complete invariant. Right multiplication by s_i is one move of the
// numbers game; s_i is a right descent exactly when V_i < 0.
//
// Entries grow linearly with length. Arithmetic is checked and throws
// ResourceLimit instead of wrapping.
class GroupElement {
 public:
  explicit GroupElement(AffineType t);  // identity
  // Product of the letters, left to right. The letters need not form a
  // reduced word; the stored word is always reduced.
  static GroupElement from_word(AffineType t, std::span<const int> letters);
  static GroupElement from_word(AffineType t, std::initializer_list<int> letters) {
    return from_word(t, std::span<const int>(letters.begin(), letters.size()));
  }

  // nullopt when the letters do not form a reduced word.
  static std::optional<GroupElement> from_reduced_word(AffineType t, std::vector<int> letters);

  AffineType type() const noexcept { return data_->type(); }
  const CartanData& data() const noexcept { return *data_; }
  std::span<const Coord> inv_vector() const noexcept { return v_; }
  std::span<const int> word() const noexcept { return word_; }
  int length() const noexcept { return static_cast<int>(word_.size()); }
  bool is_identity() const noexcept { return word_.empty(); }
  bool is_right_descent(int i) const { return v_.at(i) < 0; }
  bool is_left_descent(int i) const;
  // No right descent among s_1..s_n.
  bool is_min_rep() const noexcept;

  GroupElement right_multiply(int i) const;
  GroupElement left_multiply(int i) const;
  // s_i * w when that is longer than w, nullopt otherwise. Skips the word
  // recomputation that a length drop would need.
  std::optional<GroupElement> left_ascent(int i) const;
  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;

  std::size_t hash() const noexcept;
  friend bool operator==(const GroupElement& a, const GroupElement& b) noexcept {
    return a.data_ == b.data_ && a.v_ == b.v_;
  }

  std::string word_string() const;  // "s0s2s1", "id" for the identity

 private:
  GroupElement(const CartanData* data, std::vector<Coord> v, std::vector<int> word)
      : data_(data), v_(std::move(v)), word_(std::move(word)) {}
  void check_generator(int i) const;

  const CartanData* data_;
  std::vector<Coord> v_;
  std::vector<int> word_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& w) const noexcept { return w.hash(); }
};

// Numbers-game primitives on a raw vector.
void fire(const CartanData& c, std::span<Coord> v, int i);
std::vector<Coord> identity_vector(const CartanData& c);
// A reduced word read off the vector alone, peeling the smallest right
// descent each time. Cost O(length * n).
std::vector<int> canonical_word(const CartanData& c, std::vector<Coord> v);

GroupElement right_multiply(const GroupElement& w, int i);
GroupElement left_multiply(const GroupElement& w, int i);
bool is_min_rep(const GroupElement& w);
std::vector<int> support(const GroupElement& w);
// Lexicographically smallest reduced word (greedy on left descents).
std::vector<int> lex_min_word(const GroupElement& w);
bool left_weak_leq(const GroupElement& u, const GroupElement& w);
std::string word_to_string(std::span<const int> word);
std::vector<int> parse_word(std::string_view text);

using QuotientLayers = std::vector<std::vector<GroupElement>>;

// All minimal length coset representatives of length <= max_len, by
// length. Breadth first by left multiplication; the quotient is a lower
// ideal for the left weak order.
QuotientLayers enumerate_quotient(AffineType t, int max_len, std::size_t layer_cap = 2'000'000);

// Bruhat order by the lifting recursion. Every step of the recursion
// removes one right descent of w, so a query costs O(length(w) * n).
bool bruhat_leq(const GroupElement& v, const GroupElement& w);

// bruhat_leq with a memo table on (V(v), V(w)). Not thread safe; use one
// per worker. Every pair visited along a query shares that query's answer
// and is recorded.
class BruhatOracle {
 public:
  bool leq(const GroupElement& v, const GroupElement& w);
  void clear() { memo_.clear(); }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::unordered_map<std::string, bool> memo_;
};

}  // namespace affgr

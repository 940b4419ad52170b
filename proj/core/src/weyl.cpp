#include "affgr/weyl.hpp"

#include "affgr/errors.hpp"

#include <algorithm>
#include <cctype>
#include <string_view>
#include <unordered_set>

namespace affgr {

namespace {

Coord checked_update(Coord vj, int cij, Coord vi) {
  Coord prod = 0;
  Coord out = 0;
  if (__builtin_mul_overflow(static_cast<Coord>(cij), vi, &prod) || __builtin_sub_overflow(vj, prod, &out))
    throw ResourceLimit("numbers game overflow");
  return out;
}

std::string vector_key(std::span<const Coord> a, std::span<const Coord> b) {
  std::string key(reinterpret_cast<const char*>(a.data()), a.size_bytes());
  key.append(reinterpret_cast<const char*>(b.data()), b.size_bytes());
  return key;
}

}  // namespace

void fire(const CartanData& c, std::span<Coord> v, int i) {
  const Coord vi = v[i];
  const int n = c.size();
  for (int j = 0; j < n; ++j) {
    const int cij = c(i, j);
    if (cij != 0) v[j] = checked_update(v[j], cij, vi);
  }
}

std::vector<Coord> identity_vector(const CartanData& c) { return std::vector<Coord>(c.size(), 1); }

std::vector<int> canonical_word(const CartanData& c, std::vector<Coord> v) {
  std::vector<int> word;
  for (;;) {
    auto it = std::find_if(v.begin(), v.end(), [](Coord x) { return x < 0; });
    if (it == v.end()) break;
    const int j = static_cast<int>(it - v.begin());
    fire(c, v, j);
    word.push_back(j);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

GroupElement::GroupElement(AffineType t) : data_(&cartan(t)), v_(identity_vector(*data_)) {}

void GroupElement::check_generator(int i) const {
  if (i < 0 || i >= data_->size())
    throw InvalidInput("generator index " + std::to_string(i) + " out of range for " + type().name());
}

GroupElement GroupElement::from_word(AffineType t, std::span<const int> letters) {
  GroupElement w(t);
  for (int i : letters) w = w.right_multiply(i);
  return w;
}

std::optional<GroupElement> GroupElement::from_reduced_word(AffineType t, std::vector<int> letters) {
  const CartanData* c = &cartan(t);
  std::vector<Coord> v = identity_vector(*c);
  for (int i : letters) {
    if (i < 0 || i >= c->size()) throw InvalidInput("generator index out of range");
    if (v[i] < 0) return std::nullopt;
    fire(*c, v, i);
  }
  return GroupElement(c, std::move(v), std::move(letters));
}

bool GroupElement::is_min_rep() const noexcept {
  for (std::size_t i = 1; i < v_.size(); ++i)
    if (v_[i] < 0) return false;
  return true;
}

GroupElement GroupElement::right_multiply(int i) const {
  check_generator(i);
  std::vector<Coord> v = v_;
  const bool up = v[i] > 0;
  fire(*data_, v, i);
  std::vector<int> word = word_;
  if (up) {
    word.push_back(i);
  } else if (!word.empty() && word.back() == i) {
    word.pop_back();
  } else {
    word = canonical_word(*data_, v);
  }
  return GroupElement(data_, std::move(v), std::move(word));
}

namespace {

// Replays s_i followed by the word; returns the vector and the length.
std::pair<std::vector<Coord>, int> replay_prepended(const CartanData& c, int i, std::span<const int> word) {
  std::vector<Coord> v = identity_vector(c);
  fire(c, v, i);
  int len = 1;
  for (int a : word) {
    len += v[a] > 0 ? 1 : -1;
    fire(c, v, a);
  }
  return {std::move(v), len};
}

}  // namespace

GroupElement GroupElement::left_multiply(int i) const {
  check_generator(i);
  auto [v, len] = replay_prepended(*data_, i, word_);
  std::vector<int> word;
  if (len == length() + 1) {
    word.reserve(word_.size() + 1);
    word.push_back(i);
    word.insert(word.end(), word_.begin(), word_.end());
  } else {
    word = canonical_word(*data_, v);
  }
  return GroupElement(data_, std::move(v), std::move(word));
}

std::optional<GroupElement> GroupElement::left_ascent(int i) const {
  check_generator(i);
  auto [v, len] = replay_prepended(*data_, i, word_);
  if (len != length() + 1) return std::nullopt;
  std::vector<int> word;
  word.reserve(word_.size() + 1);
  word.push_back(i);
  word.insert(word.end(), word_.begin(), word_.end());
  return GroupElement(data_, std::move(v), std::move(word));
}

bool GroupElement::is_left_descent(int i) const {
  check_generator(i);
  return inverse().is_right_descent(i);
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (data_ != o.data_) throw TypeMismatch("product of elements of different types");
  GroupElement w = *this;
  for (int i : o.word_) w = w.right_multiply(i);
  return w;
}

GroupElement GroupElement::inverse() const {
  std::vector<int> rev(word_.rbegin(), word_.rend());
  return from_word(type(), rev);
}

std::size_t GroupElement::hash() const noexcept {
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(v_.data()), v_.size() * sizeof(Coord)));
}

std::string GroupElement::word_string() const { return word_to_string(word_); }

GroupElement right_multiply(const GroupElement& w, int i) { return w.right_multiply(i); }
GroupElement left_multiply(const GroupElement& w, int i) { return w.left_multiply(i); }
bool is_min_rep(const GroupElement& w) { return w.is_min_rep(); }

std::vector<int> support(const GroupElement& w) {
  std::vector<int> s(w.word().begin(), w.word().end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<int> lex_min_word(const GroupElement& w) {
  const CartanData& c = w.data();
  const GroupElement inv = w.inverse();
  std::vector<Coord> u(inv.inv_vector().begin(), inv.inv_vector().end());
  std::vector<int> word;
  for (;;) {
    auto it = std::find_if(u.begin(), u.end(), [](Coord x) { return x < 0; });
    if (it == u.end()) break;
    const int j = static_cast<int>(it - u.begin());
    fire(c, u, j);
    word.push_back(j);
  }
  return word;
}

bool left_weak_leq(const GroupElement& u, const GroupElement& w) {
  if (u.length() > w.length()) return false;
  return (w * u.inverse()).length() == w.length() - u.length();
}

std::string word_to_string(std::span<const int> word) {
  if (word.empty()) return "id";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

std::vector<int> parse_word(std::string_view text) {
  std::vector<int> out;
  const bool has_sep = text.find_first_of("s ,.") != std::string_view::npos;
  if (text == "id" || text == "e" || text.empty()) return out;
  if (!has_sep) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw InvalidInput("bad word '" + std::string(text) + "'");
      out.push_back(ch - '0');
    }
    return out;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ' ' || ch == ',' || ch == '.' || ch == 's' || ch == 'S') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw InvalidInput("bad word '" + std::string(text) + "'");
    int value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) value = value * 10 + (text[i++] - '0');
    out.push_back(value);
  }
  return out;
}

QuotientLayers enumerate_quotient(AffineType t, int max_len, std::size_t layer_cap) {
  if (max_len < 0) throw InvalidInput("max_len must be nonnegative");
  QuotientLayers layers;
  layers.push_back({GroupElement(t)});
  const int gens = t.nodes();
  for (int len = 0; len < max_len; ++len) {
    std::vector<GroupElement> next;
    std::unordered_set<GroupElement, GroupElementHash> seen;
    for (const GroupElement& w : layers.back()) {
      for (int i = 0; i < gens; ++i) {
        auto u = w.left_ascent(i);
        if (!u || !u->is_min_rep()) continue;
        if (seen.insert(*u).second) {
          next.push_back(std::move(*u));
          if (next.size() > layer_cap)
            throw ResourceLimit("quotient layer " + std::to_string(len + 1) + " exceeds cap " +
                                std::to_string(layer_cap));
        }
      }
    }
    layers.push_back(std::move(next));
  }
  return layers;
}

namespace {

template <class Memo>
bool lifting(const GroupElement& v, const GroupElement& w, Memo&& memo) {
  if (v.length() > w.length()) return false;
  const CartanData& c = w.data();
  std::vector<Coord> a(v.inv_vector().begin(), v.inv_vector().end());
  std::vector<Coord> b(w.inv_vector().begin(), w.inv_vector().end());
  int la = v.length();
  int lb = w.length();
  for (;;) {
    if (la > lb) return memo.finish(false);
    if (la == lb) return memo.finish(a == b);
    if (la == 0) return memo.finish(true);
    if (auto hit = memo.visit(a, b)) return memo.finish(*hit);
    const int i = static_cast<int>(std::find_if(b.begin(), b.end(), [](Coord x) { return x < 0; }) - b.begin());
    if (a[i] < 0) {
      fire(c, a, i);
      --la;
    }
    fire(c, b, i);
    --lb;
  }
}

struct NoMemo {
  std::optional<bool> visit(const std::vector<Coord>&, const std::vector<Coord>&) { return std::nullopt; }
  bool finish(bool r) { return r; }
};

struct TableMemo {
  std::unordered_map<std::string, bool>& table;
  std::vector<std::string> path;
  std::optional<bool> visit(const std::vector<Coord>& a, const std::vector<Coord>& b) {
    std::string key = vector_key(a, b);
    if (auto it = table.find(key); it != table.end()) return it->second;
    path.push_back(std::move(key));
    return std::nullopt;
  }
  bool finish(bool r) {
    for (auto& k : path) table.emplace(std::move(k), r);
    return r;
  }
};

}  // namespace

bool bruhat_leq(const GroupElement& v, const GroupElement& w) {
  if (v.type() != w.type()) throw TypeMismatch("Bruhat comparison across types");
  return lifting(v, w, NoMemo{});
}

bool BruhatOracle::leq(const GroupElement& v, const GroupElement& w) {
  if (v.type() != w.type()) throw TypeMismatch("Bruhat comparison across types");
  return lifting(v, w, TableMemo{memo_, {}});
}

}  // namespace affgr

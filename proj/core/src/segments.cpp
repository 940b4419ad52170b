#include "affgr/segments.hpp"

#include "affgr/errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_set>

namespace affgr {

// ---------------------------------------------------------------- partitions

int ColoredPartition::size() const {
  int s = 0;
  for (const auto& p : parts) s += p.value;
  return s;
}

std::string ColoredPartition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i].value);
    if (parts[i].color != 0) s += "^" + std::to_string(parts[i].color);
  }
  return s;
}

ColoredPartition parse_partition(std::string_view text) {
  ColoredPartition out;
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '(' && ch != ')' && ch != '[' && ch != ']') s += ch;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    ColoredPart p;
    const auto caret = tok.find('^');
    const std::string value = tok.substr(0, caret);
    try {
      std::size_t used = 0;
      p.value = std::stoi(value, &used);
      if (used != value.size() || p.value <= 0) throw InvalidInput("");
      if (caret != std::string::npos) {
        const std::string color = tok.substr(caret + 1);
        if (color == "b") {
          p.color = 0;
        } else if (color == "c") {
          p.color = 1;
        } else {
          p.color = std::stoi(color, &used);
          if (used != color.size() || p.color < 0) throw InvalidInput("");
        }
      }
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse partition '" + std::string(text) + "'");
    }
    out.parts.push_back(p);
  }
  for (std::size_t i = 1; i < out.parts.size(); ++i)
    if (out.parts[i].value > out.parts[i - 1].value)
      throw InvalidInput("partition parts must be weakly decreasing: '" + std::string(text) + "'");
  return out;
}

ColoredPartition uncolored(std::initializer_list<int> values) {
  ColoredPartition out;
  for (int v : values) out.parts.push_back({v, 0});
  return out;
}

bool canonical_less(const ColoredPartition& a, const ColoredPartition& b) {
  const int sa = a.size();
  const int sb = b.size();
  if (sa != sb) return sa < sb;
  return a.parts < b.parts;
}

// ---------------------------------------------------------------- tables

namespace {

std::vector<int> up(int a, int b) {
  std::vector<int> w;
  for (int i = a; i <= b; ++i) w.push_back(i);
  return w;
}

std::vector<int> down(int a, int b) {
  std::vector<int> w;
  for (int i = a; i >= b; --i) w.push_back(i);
  return w;
}

std::vector<int> cat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

Segment make_segment(AffineType t, int color, std::optional<int> parity, std::vector<int> word) {
  GroupElement g = GroupElement::from_word(t, word);
  if (g.length() != static_cast<int>(word.size()))
    throw InternalError("segment word " + word_to_string(word) + " is not reduced in " + t.name());
  return Segment{g.length(), color, parity, std::move(word), std::move(g)};
}

// s_0 <-> s_1 for B; additionally s_{n-1} <-> s_n for D.
int swap_letter(AffineType t, int i) {
  const int n = t.rank();
  if (i == 0) return 1;
  if (i == 1) return 0;
  if (t.family() == Family::D) {
    if (i == n - 1) return n;
    if (i == n) return n - 1;
  }
  return i;
}

std::vector<int> swap_word(AffineType t, std::vector<int> w) {
  for (int& i : w) i = swap_letter(t, i);
  return w;
}

std::vector<Segment> table_b(AffineType t) {
  const int n = t.rank();
  std::vector<Segment> out;
  for (int j = 1; j <= 2 * n - 1; ++j) {
    std::vector<int> one = j <= n ? down(j, 1) : cat({up(2 * n - j, n), down(n - 1, 1)});
    std::vector<int> zero;
    if (j == 1) {
      zero = {0};
    } else if (j <= n) {
      zero = cat({down(j, 2), {0}});
    } else if (j <= 2 * n - 2) {
      zero = cat({up(2 * n - j, n), down(n - 1, 2), {0}});
    } else {
      zero = cat({{0}, up(2, n), down(n - 1, 2), {0}});
    }
    out.push_back(make_segment(t, 0, 0, std::move(zero)));
    out.push_back(make_segment(t, 0, 1, std::move(one)));
  }
  return out;
}

std::vector<Segment> table_c(AffineType t) {
  const int n = t.rank();
  std::vector<Segment> out;
  for (int j = 1; j <= 2 * n; ++j) {
    std::vector<int> w = j <= n + 1 ? cat({down(j - 1, 1), {0}}) : cat({up(2 * n - j + 1, n), down(n - 1, 1), {0}});
    out.push_back(make_segment(t, 0, std::nullopt, std::move(w)));
  }
  return out;
}

std::vector<Segment> table_d(AffineType t) {
  const int n = t.rank();
  std::vector<std::pair<int, std::vector<int>>> ones;  // (color, word)
  for (int j = 1; j <= 2 * n - 2; ++j) {
    if (j <= n - 2) {
      ones.push_back({0, down(j, 1)});
    } else if (j == n - 1) {
      ones.push_back({0, down(n - 1, 1)});
      ones.push_back({1, cat({{n}, down(n - 2, 1)})});
    } else {
      ones.push_back({0, cat({up(2 * n - j - 1, n - 2), {n - 1, n}, down(n - 2, 1)})});
    }
  }
  std::vector<Segment> out;
  for (auto& [color, w] : ones) {
    out.push_back(make_segment(t, color, 0, swap_word(t, w)));
    out.push_back(make_segment(t, color, 1, std::move(w)));
  }
  return out;
}

std::vector<Segment> table_literal(AffineType t, const std::vector<std::pair<int, const char*>>& rows) {
  std::vector<Segment> out;
  for (const auto& [color, word] : rows) out.push_back(make_segment(t, color, std::nullopt, parse_word(word)));
  return out;
}

std::vector<Segment> table_g2(AffineType t) {
  return table_literal(t, {{0, "s0"},
                           {0, "s1s0"},
                           {0, "s2s1s0"},
                           {0, "s1s2s1s0"},
                           {0, "s2s1s2s1s0"},
                           {0, "s1s2s1s2s1s0"}});
}

std::vector<Segment> table_f4(AffineType t) {
  return table_literal(t, {{0, "s0"},
                           {0, "s1s0"},
                           {0, "s2s1s0"},
                           {0, "s3s2s1s0"},
                           {0, "s2s3s2s1s0"},
                           {1, "s4s3s2s1s0"},
                           {0, "s1s2s3s2s1s0"},
                           {1, "s2s4s3s2s1s0"},
                           {0, "s1s2s4s3s2s1s0"},
                           {1, "s3s2s4s3s2s1s0"},
                           {0, "s1s3s2s4s3s2s1s0"},
                           {1, "s2s3s2s4s3s2s1s0"},
                           {0, "s1s2s3s2s4s3s2s1s0"},
                           {1, "s2s1s3s2s4s3s2s1s0"},
                           {0, "s2s1s2s3s2s4s3s2s1s0"},
                           {1, "s3s2s1s3s2s4s3s2s1s0"},
                           {0, "s3s2s1s2s3s2s4s3s2s1s0"},
                           {1, "s4s3s2s1s3s2s4s3s2s1s0"},
                           {0, "s2s3s2s1s2s3s2s4s3s2s1s0"},
                           {1, "s4s3s2s1s2s3s2s4s3s2s1s0"},
                           {0, "s2s4s3s2s1s2s3s2s4s3s2s1s0"},
                           {0, "s3s2s4s3s2s1s2s3s2s4s3s2s1s0"},
                           {0, "s2s3s2s4s3s2s1s2s3s2s4s3s2s1s0"},
                           {0, "s1s2s3s2s4s3s2s1s2s3s2s4s3s2s1s0"}});
}

std::vector<Segment> table_a(AffineType t) {
  const int n = t.rank();
  std::vector<Segment> out;
  for (int i = 0; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.push_back(make_segment(t, i, std::nullopt, type_a_segment_word(n, i, j)));
  return out;
}

// Minimal representatives of W_gens / W_J, by breadth first search inside
// the parabolic subgroup generated by gens.
std::vector<GroupElement> parabolic_quotient(AffineType t, const std::vector<int>& gens, const std::vector<int>& J) {
  std::vector<GroupElement> all{GroupElement(t)};
  std::vector<GroupElement> layer = all;
  while (!layer.empty()) {
    std::vector<GroupElement> next;
    std::unordered_set<GroupElement, GroupElementHash> seen;
    for (const auto& w : layer) {
      for (int i : gens) {
        auto u = w.left_ascent(i);
        if (!u) continue;
        bool minimal = true;
        for (int j : J)
          if (u->is_right_descent(j)) minimal = false;
        if (minimal && seen.insert(*u).second) next.push_back(std::move(*u));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
    if (all.size() > 100'000) throw ResourceLimit("finite parabolic quotient too large");
  }
  return all;
}

// Colors by lexicographically smallest reduced word within each length.
void assign_colors(std::vector<Segment>& segs) {
  std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.word < b.word;
  });
  for (std::size_t i = 0; i < segs.size(); ++i)
    segs[i].color = (i > 0 && segs[i - 1].length == segs[i].length) ? segs[i - 1].color + 1 : 0;
}

}  // namespace

std::vector<int> type_a_segment_word(int n, int i, int j) {
  if (i < 0 || i > n || j < 1 || j > n) throw InvalidInput("type A segment index out of range");
  return cat({down(i, 1), up(n - j + 2, n), {0}});
}

std::vector<Segment> segments_table(AffineType t) {
  switch (t.family()) {
    case Family::B: return table_b(t);
    case Family::C: return table_c(t);
    case Family::D: return table_d(t);
    case Family::G2: return table_g2(t);
    case Family::F4: return table_f4(t);
    default: throw UnsupportedFamily("no literal segment table for " + t.name());
  }
}

std::vector<Segment> segments_compute(AffineType t) {
  const int n = t.rank();
  const std::vector<int> J = commuting_with_s0(t);
  std::vector<Segment> out;
  if (typeclass(t) == TypeClass::TypeI) {
    for (const auto& frag : parabolic_quotient(t, up(1, n), J)) {
      GroupElement g = frag.right_multiply(0);
      if (g.length() != frag.length() + 1 || !g.is_min_rep())
        throw InternalError("fragment times s0 is not a minimal representative");
      out.push_back(Segment{g.length(), 0, std::nullopt, lex_min_word(g), g});
    }
    assign_colors(out);
    return out;
  }
  std::vector<Segment> ones;
  for (const auto& g : parabolic_quotient(t, up(1, n), J))
    if (!g.is_identity()) ones.push_back(Segment{g.length(), 0, 1, lex_min_word(g), g});
  assign_colors(ones);
  std::unordered_set<GroupElement, GroupElementHash> zeros;
  std::vector<int> sprime = cat({{0}, up(2, n)});
  for (const auto& g : parabolic_quotient(t, sprime, J))
    if (!g.is_identity()) zeros.insert(g);
  for (const auto& s : ones) {
    Segment z = make_segment(t, s.color, 0, swap_word(t, s.word));
    if (!zeros.count(z.element)) throw InternalError("diagram swap does not carry 1-segments to 0-segments");
    out.push_back(std::move(z));
  }
  if (zeros.size() != ones.size()) throw InternalError("0-segment and 1-segment counts differ");
  out.insert(out.end(), ones.begin(), ones.end());
  return out;
}

bool allowed_pair(const Segment& a, const Segment& b) {
  if (a.element.type() != b.element.type()) throw TypeMismatch("allowed_pair across types");
  const bool two = typeclass(a.element.type()) == TypeClass::TypeII;
  if (two != a.parity.has_value() || two != b.parity.has_value())
    throw TypeMismatch("segment parity does not match the type class");
  if (two && *a.parity == *b.parity) throw TypeMismatch("stacked Type II segments must alternate parity");
  GroupElement prod = a.element * b.element;
  if (prod.length() != a.length + b.length) return false;
  if (!two || *b.parity == 0) return prod.is_min_rep();
  // minimal for the parabolic generated by s_0, s_2, ..., s_n
  auto v = prod.inv_vector();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != 1 && v[i] < 0) return false;
  return true;
}

// ---------------------------------------------------------------- system

SegmentSystem::SegmentSystem(AffineType t) : type_(t), type_two_(typeclass(t) == TypeClass::TypeII) {
  std::vector<Segment> all;
  switch (t.family()) {
    case Family::A: all = table_a(t); break;
    case Family::E6:
    case Family::E7:
    case Family::E8: all = segments_compute(t); break;
    default: all = segments_table(t); break;
  }
  for (auto& s : all) by_parity_[s.parity.value_or(0)].push_back(std::move(s));
  for (auto& list : by_parity_)
    std::sort(list.begin(), list.end(), [](const Segment& a, const Segment& b) { return a.part() < b.part(); });
  for (const auto& s : by_parity_[0]) parts_.push_back(s.part());
  if (type_two_) {
    if (by_parity_[1].size() != parts_.size()) throw InternalError("parity lists differ in size");
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (by_parity_[1][i].part() != parts_[i]) throw InternalError("parity lists carry different parts");
  }
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] == parts_[i - 1]) throw InternalError("duplicate colored part in segment set");
  for (int p = 0; p < (type_two_ ? 2 : 1); ++p)
    for (int id = 0; id < part_count(); ++id)
      if (!lookup_[p].emplace(by_parity_[p][id].element, id).second)
        throw InternalError("two segments share an element");

  const int m = part_count();
  allowed_.assign(static_cast<std::size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) allowed_[a * m + b] = allowed_pair(segment(a, type_two_ ? 1 : 0), segment(b, 0));

  lower_covers_.resize(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (parts_[b].value + 1 == parts_[a].value && left_weak_leq(segment(b).element, segment(a).element))
        lower_covers_[a].push_back(b);
}

const SegmentSystem& SegmentSystem::get(AffineType t) {
  static std::mutex mu;
  static std::map<AffineType, std::unique_ptr<SegmentSystem>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(t); it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<SegmentSystem>(t);
  std::lock_guard lock(mu);
  auto& slot = cache[t];
  if (!slot) slot = std::move(built);
  return *slot;
}

std::optional<int> SegmentSystem::part_id(ColoredPart p) const {
  auto it = std::lower_bound(parts_.begin(), parts_.end(), p);
  if (it == parts_.end() || *it != p) return std::nullopt;
  return static_cast<int>(it - parts_.begin());
}

const Segment& SegmentSystem::segment(int id, int parity) const {
  if (parity != 0 && !type_two_) throw InvalidInput("Type I segments have no parity");
  return by_parity_[parity].at(id);
}

std::optional<int> SegmentSystem::find(const GroupElement& g, int parity) const {
  auto it = lookup_[parity].find(g);
  if (it == lookup_[parity].end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<int, int>> SegmentSystem::factor_ids(const GroupElement& w) const {
  if (w.type() != type_) throw TypeMismatch("factor: element of another type");
  if (!w.is_min_rep()) throw InvalidInput("not a minimal length coset representative: " + w.word_string());
  const CartanData& c = w.data();
  const int n = type_.rank();
  std::vector<Coord> v(w.inv_vector().begin(), w.inv_vector().end());
  int len = w.length();
  std::vector<std::pair<int, int>> out;  // right to left while peeling
  int parity = 0;
  auto in_strip_set = [&](int i) {
    if (!type_two_) return i >= 1;
    return parity == 0 ? i != 1 : i != 0;
  };
  while (len > 0) {
    std::vector<int> peeled;
    if (!type_two_) {
      if (v[0] >= 0) throw InternalError("s0 is not a right descent of a nonidentity minimal representative");
      fire(c, v, 0);
      --len;
      peeled.push_back(0);
    }
    for (;;) {
      int i = -1;
      for (int k = 0; k <= n; ++k)
        if (in_strip_set(k) && v[k] < 0) {
          i = k;
          break;
        }
      if (i < 0) break;
      fire(c, v, i);
      --len;
      peeled.push_back(i);
    }
    if (peeled.empty()) throw InternalError("empty factor while peeling");
    std::reverse(peeled.begin(), peeled.end());
    GroupElement seg = GroupElement::from_word(type_, peeled);
    auto id = find(seg, parity);
    if (!id) throw InternalError("peeled factor " + seg.word_string() + " is not a known segment of " + type_.name());
    out.push_back({*id, parity});
    if (type_two_) parity ^= 1;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Segment> factor(const GroupElement& w) {
  const SegmentSystem& sys = SegmentSystem::get(w.type());
  std::vector<Segment> out;
  for (auto [id, parity] : sys.factor_ids(w)) out.push_back(sys.segment(id, parity));
  return out;
}

ColoredPartition pi(const GroupElement& w) {
  const SegmentSystem& sys = SegmentSystem::get(w.type());
  auto ids = sys.factor_ids(w);
  ColoredPartition lambda;
  for (auto it = ids.rbegin(); it != ids.rend(); ++it) lambda.parts.push_back(sys.part(it->first));
  return lambda;
}

bool is_affine_partition(AffineType t, const ColoredPartition& lambda) {
  const SegmentSystem& sys = SegmentSystem::get(t);
  std::optional<int> prev;
  for (const auto& p : lambda.parts) {
    auto id = sys.part_id(p);
    if (!id) return false;
    if (prev && !sys.allowed(*id, *prev)) return false;
    prev = id;
  }
  return true;
}

GroupElement pi_inv(AffineType t, const ColoredPartition& lambda) {
  if (!is_affine_partition(t, lambda))
    throw NotAffinePartition("(" + lambda.to_string() + ") is not an affine partition of " + t.name());
  const SegmentSystem& sys = SegmentSystem::get(t);
  std::vector<int> word;
  const int f = static_cast<int>(lambda.parts.size());
  for (int k = f - 1; k >= 0; --k) {
    const int parity = sys.type_two() ? k % 2 : 0;
    const auto& w = sys.segment(*sys.part_id(lambda.parts[k]), parity).word;
    word.insert(word.end(), w.begin(), w.end());
  }
  GroupElement g = GroupElement::from_word(t, word);
  if (g.length() != lambda.size() || !g.is_min_rep())
    throw InternalError("product of allowed segments is not a reduced minimal representative");
  return g;
}

std::vector<ColoredPartition> gyl_lower_covers(AffineType t, const ColoredPartition& lambda) {
  const SegmentSystem& sys = SegmentSystem::get(t);
  std::set<ColoredPartition> out;
  const std::size_t f = lambda.parts.size();
  for (std::size_t k = 0; k < f; ++k) {
    auto id = sys.part_id(lambda.parts[k]);
    if (!id) throw NotAffinePartition("unknown part in (" + lambda.to_string() + ")");
    if (lambda.parts[k].value == 1) {
      if (k + 1 == f) {
        ColoredPartition mu = lambda;
        mu.parts.pop_back();
        out.insert(std::move(mu));
      }
      continue;
    }
    for (int q : sys.lower_covers(*id)) {
      ColoredPartition mu = lambda;
      mu.parts[k] = sys.part(q);
      if (is_affine_partition(t, mu)) out.insert(std::move(mu));
    }
  }
  return {out.begin(), out.end()};
}

bool gyl_covers(AffineType t, const ColoredPartition& lambda, const ColoredPartition& mu) {
  if (!is_affine_partition(t, lambda) || !is_affine_partition(t, mu)) return false;
  if (lambda.size() != mu.size() + 1) return false;
  for (const auto& c : gyl_lower_covers(t, lambda))
    if (c == mu) return true;
  return false;
}

std::vector<ColoredPartition> gyl_lower_interval(AffineType t, const ColoredPartition& lambda) {
  std::set<ColoredPartition> seen{lambda};
  std::vector<ColoredPartition> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<ColoredPartition> next;
    for (const auto& x : frontier)
      for (auto& y : gyl_lower_covers(t, x))
        if (seen.insert(y).second) next.push_back(std::move(y));
    frontier = std::move(next);
  }
  std::vector<ColoredPartition> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<int> p_removable_corners(AffineType t, const ColoredPartition& lambda) {
  std::vector<int> out;
  for (const auto& mu : gyl_lower_covers(t, lambda)) {
    for (std::size_t k = 0; k < lambda.parts.size(); ++k) {
      if (k >= mu.parts.size() || mu.parts[k] != lambda.parts[k]) {
        out.push_back(static_cast<int>(k));
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace affgr

#include "checks.hpp"

#include "affgr/errors.hpp"
#include "affgr/identities.hpp"
#include "affgr/poset.hpp"
#include "affgr/smoothness.hpp"
#include "affgr/typea.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace affgr::checks {

void merge(Failures& a, const Failures& b) { a.insert(a.end(), b.begin(), b.end()); }

namespace {

std::string str(const GroupElement& g) { return g.word_string(); }

GroupElement word(AffineType t, std::string_view text) { return GroupElement::from_word(t, parse_word(text)); }

GroupElement gen(AffineType t, int i) { return GroupElement::from_word(t, {i}); }

std::vector<GroupElement> flatten(const QuotientLayers& layers) {
  std::vector<GroupElement> out;
  for (const auto& l : layers) out.insert(out.end(), l.begin(), l.end());
  return out;
}

// Segment of the given colored length and parity; length 0 is the identity.
GroupElement seg(AffineType t, int len, int color = 0, int parity = 0) {
  if (len == 0) return GroupElement(t);
  const SegmentSystem& sys = SegmentSystem::get(t);
  auto id = sys.part_id({len, color});
  if (!id) throw InvalidInput("no segment " + std::to_string(len) + "^" + std::to_string(color) + " in " + t.name());
  return sys.segment(*id, parity).element;
}

// Elements below w in left weak order, w excluded, identity excluded.
std::vector<GroupElement> left_weak_below(const GroupElement& w) {
  std::vector<GroupElement> out;
  std::unordered_set<GroupElement, GroupElementHash> seen;
  std::vector<GroupElement> frontier{w};
  const int n = w.type().rank();
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& u : frontier)
      for (int i = 0; i <= n; ++i) {
        if (!u.is_left_descent(i)) continue;
        GroupElement v = u.left_multiply(i);
        if (!v.is_identity() && seen.insert(v).second) {
          out.push_back(v);
          next.push_back(v);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

std::string poly(const IntPolynomial& p) { return p.to_string(); }

IntPolynomial ones(int degree) {
  std::vector<long long> c(degree + 1, 1);
  return IntPolynomial::from_ints(c);
}

}  // namespace

// ---------------------------------------------------------------- oracles

AffinePerm AffinePerm::identity(int n) {
  AffinePerm p;
  for (int i = 1; i <= n + 1; ++i) p.window.push_back(i);
  return p;
}

void AffinePerm::apply_right(int i) {
  const long long N = static_cast<long long>(window.size());
  if (i == 0) {
    const long long first = window.front();
    window.front() = window.back() - N;
    window.back() = first + N;
  } else {
    std::swap(window[i - 1], window[i]);
  }
}

long long AffinePerm::length() const {
  const long long N = static_cast<long long>(window.size());
  auto floor_div = [](long long a, long long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
  long long len = 0;
  for (std::size_t i = 0; i < window.size(); ++i)
    for (std::size_t j = i + 1; j < window.size(); ++j) len += std::llabs(floor_div(window[j] - window[i], N));
  return len;
}

std::vector<GroupElement> subword_products(const GroupElement& w) {
  const auto letters = w.word();
  const std::size_t L = letters.size();
  std::unordered_set<GroupElement, GroupElementHash> seen;
  std::vector<GroupElement> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << L); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < L; ++k)
      if (mask >> k & 1) sub.push_back(letters[k]);
    GroupElement g = GroupElement::from_word(w.type(), sub);
    if (seen.insert(g).second) out.push_back(std::move(g));
  }
  return out;
}

int matrix_rank(std::vector<std::vector<long long>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) pivot = r;
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const long long a = m[rank][c], b = m[r][c];
      for (int k = 0; k < cols; ++k) m[r][k] = m[r][k] * a - m[rank][k] * b;
      long long g = 0;
      for (long long x : m[r]) g = std::gcd(g, x);
      if (g > 1)
        for (long long& x : m[r]) x /= g;
    }
    ++rank;
  }
  return rank;
}

StrictLattice strict_lattice_below(const std::vector<int>& lambda) {
  StrictLattice out;
  // all strict partitions mu with mu_k <= lambda_k
  std::vector<int> cur;
  std::function<void(std::size_t, int)> grow = [&](std::size_t k, int cap) {
    out.elements.push_back(cur);
    if (k >= lambda.size()) return;
    for (int v = std::min(cap, lambda[k]); v >= 1; --v) {
      cur.push_back(v);
      grow(k + 1, v - 1);
      cur.pop_back();
    }
  };
  grow(0, lambda.empty() ? 0 : lambda[0]);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < out.elements.size(); ++i) index[out.elements[i]] = static_cast<int>(i);
  out.down.resize(out.elements.size());
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    const auto& mu = out.elements[i];
    for (std::size_t k = 0; k < mu.size(); ++k) {
      std::vector<int> nu = mu;
      if (--nu[k] == 0) nu.erase(nu.begin() + static_cast<std::ptrdiff_t>(k));
      if (auto it = index.find(nu); it != index.end()) out.down[i].push_back(it->second);
    }
  }
  return out;
}

std::vector<ColoredPartition> described_partitions(AffineType t, int N) {
  const int n = t.rank();
  int max_part = 0, strict_below = 0;
  switch (t.family()) {
    case Family::B: max_part = 2 * n - 1; strict_below = n - 1; break;
    case Family::C: max_part = 2 * n; strict_below = n; break;
    case Family::D: max_part = 2 * n - 2; strict_below = n - 2; break;
    default: throw UnsupportedFamily("no verbal description for " + t.name());
  }
  std::vector<ColoredPartition> out;
  ColoredPartition cur;
  std::function<void(int, int)> grow = [&](int cap, int room) {
    out.push_back(cur);
    for (int v = std::min(cap, room); v >= 1; --v) {
      if (!cur.empty() && v == cur.parts.back().value && v <= strict_below) continue;
      std::vector<int> colors{0};
      if (t.family() == Family::D && v == n - 1) {
        // one color for all parts of length n-1
        bool has = false;
        int c = 0;
        for (const auto& p : cur.parts)
          if (p.value == n - 1) has = true, c = p.color;
        colors = has ? std::vector<int>{c} : std::vector<int>{0, 1};
      }
      for (int c : colors) {
        cur.parts.push_back({v, c});
        grow(v, room - v);
        cur.parts.pop_back();
      }
    }
  };
  grow(max_part, N);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// ---------------------------------------------------------------- cartan / weyl

Failures cartan_invariants(AffineType t) {
  Failures f;
  const CartanData& c = cartan(t);
  const int m = c.size();
  const std::string name = t.name();
  std::vector<std::vector<long long>> mat(m, std::vector<long long>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      mat[i][j] = c(i, j);
      if (i == j && c(i, j) != 2) f.push_back(name + ": diagonal entry is not 2");
      if (i != j && c(i, j) > 0) f.push_back(name + ": positive off-diagonal entry");
      if ((c(i, j) == 0) != (c(j, i) == 0)) f.push_back(name + ": zero pattern not symmetric");
      if (i != j) {
        static const int order_of[] = {2, 3, 4, 6};
        const int prod = c(i, j) * c(j, i);
        const int expect = (t.family() == Family::A && t.rank() == 1) ? 0 : (prod <= 3 ? order_of[prod] : -1);
        if (c.bond_order(i, j) != expect) f.push_back(name + ": bond order disagrees with pairing at " +
                                                      std::to_string(i) + "," + std::to_string(j));
      }
    }
  if (matrix_rank(mat) != m - 1) f.push_back(name + ": Cartan matrix does not have corank 1");
  if (static_cast<int>(c.exponents().size()) != t.rank()) f.push_back(name + ": wrong number of exponents");

  const int n = t.rank();
  std::vector<int> expect;
  switch (t.family()) {
    case Family::A:
      for (int i = 1; i <= n; ++i) expect.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= 2 * n - 1; i += 2) expect.push_back(i);
      break;
    case Family::D:
      for (int i = 1; i <= 2 * n - 3; i += 2) expect.push_back(i);
      expect.push_back(n - 1);
      break;
    case Family::G2: expect = {1, 5}; break;
    case Family::F4: expect = {1, 5, 7, 11}; break;
    default: break;
  }
  if (!expect.empty()) {
    auto have = c.exponents();
    std::sort(have.begin(), have.end());
    std::sort(expect.begin(), expect.end());
    if (have != expect) f.push_back(name + ": exponents differ from the expected list");
  }
  // |W| = product of degrees (exponent + 1)
  static const std::map<Family, long long> orders{{Family::E6, 51840},      {Family::E7, 2903040},
                                                  {Family::E8, 696729600}, {Family::F4, 1152},
                                                  {Family::G2, 12}};
  if (auto it = orders.find(t.family()); it != orders.end()) {
    long long prod = 1;
    for (int e : c.exponents()) prod *= e + 1;
    if (prod != it->second) f.push_back(name + ": product of degrees is not the Weyl group order");
  }
  return f;
}

Failures relation_orders(AffineType t) {
  Failures f;
  const CartanData& c = cartan(t);
  for (int i = 0; i < c.size(); ++i) {
    if (!(gen(t, i) * gen(t, i)).is_identity()) f.push_back(t.name() + ": s_i^2 != id");
    for (int j = i + 1; j < c.size(); ++j) {
      const int m = c.bond_order(i, j);
      if (m == 0) continue;
      const GroupElement st = gen(t, i) * gen(t, j);
      GroupElement p(t);
      for (int k = 1; k <= m; ++k) {
        p = p * st;
        if (k < m && p.is_identity())
          f.push_back(t.name() + ": (s" + std::to_string(i) + " s" + std::to_string(j) + ") has order below m_ij");
      }
      if (!p.is_identity())
        f.push_back(t.name() + ": (s" + std::to_string(i) + " s" + std::to_string(j) + ")^m != id");
    }
  }
  return f;
}

Failures layers_bott_partitions(AffineType t, int L) {
  Failures f;
  const QuotientLayers layers = enumerate_quotient(t, L);
  const auto bott = bott_series(t, L).to_ints();
  const auto parts = partition_series(t, L).to_ints();
  const auto chains = chain_sum_genfun(t, L).to_ints();
  for (int k = 0; k <= L; ++k) {
    const long long have = k < static_cast<int>(layers.size()) ? static_cast<long long>(layers[k].size()) : 0;
    if (have != bott[k] || parts[k] != bott[k] || chains[k] != bott[k]) {
      std::ostringstream s;
      s << t.name() << " degree " << k << ": layer " << have << " Bott " << bott[k] << " partitions " << parts[k]
        << " chains " << chains[k];
      f.push_back(s.str());
    }
  }
  return f;
}

Failures type_a_permutation_agreement(int n, int words, int max_word_len, unsigned seed) {
  Failures f;
  const AffineType t(Family::A, n);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> letter(0, n), len(0, max_word_len);
  std::map<std::vector<Coord>, std::vector<long long>> by_v;
  std::map<std::vector<long long>, std::vector<Coord>> by_perm;
  for (int k = 0; k < words; ++k) {
    std::vector<int> w(len(rng));
    for (int& x : w) x = letter(rng);
    AffinePerm p = AffinePerm::identity(n);
    for (int x : w) p.apply_right(x);
    const GroupElement g = GroupElement::from_word(t, w);
    if (g.length() != p.length())
      f.push_back(t.name() + ": length " + std::to_string(g.length()) + " vs permutation length " +
                  std::to_string(p.length()) + " for " + word_to_string(w));
    std::vector<Coord> v(g.inv_vector().begin(), g.inv_vector().end());
    auto [it, fresh] = by_v.emplace(v, p.window);
    if (!fresh && it->second != p.window) f.push_back(t.name() + ": equal V for different elements");
    auto [jt, fresh2] = by_perm.emplace(p.window, v);
    if (!fresh2 && jt->second != v) f.push_back(t.name() + ": different V for equal elements");
  }
  return f;
}

Failures braid_replay(AffineType t, int words, int max_word_len, unsigned seed) {
  Failures f;
  const CartanData& c = cartan(t);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> letter(0, t.rank()), len(1, max_word_len);
  for (int k = 0; k < words; ++k) {
    std::vector<int> w(len(rng));
    for (int& x : w) x = letter(rng);
    const GroupElement g = GroupElement::from_word(t, w);
    // rewrite with every applicable braid move and with an inserted s_i s_i
    for (std::size_t p = 0; p < w.size(); ++p) {
      for (std::size_t q = p + 1; q < w.size(); ++q) {
        const int a = w[p], b = w[q];
        if (a == b) break;
        const int m = c.bond_order(a, b);
        if (m == 0 || p + m > w.size()) continue;
        bool alternating = true;
        for (int r = 0; r < m; ++r)
          if (w[p + r] != (r % 2 ? b : a)) alternating = false;
        if (!alternating) continue;
        std::vector<int> moved = w;
        for (int r = 0; r < m; ++r) moved[p + r] = r % 2 ? a : b;
        if (!(GroupElement::from_word(t, moved) == g))
          f.push_back(t.name() + ": braid move changes " + word_to_string(w));
        break;
      }
      std::vector<int> padded = w;
      padded.insert(padded.begin() + static_cast<std::ptrdiff_t>(p), {w[p], w[p]});
      if (!(GroupElement::from_word(t, padded) == g))
        f.push_back(t.name() + ": inserting s_i s_i changes " + word_to_string(w));
    }
    // the stored word replays to the same element
    const std::vector<int> stored(g.word().begin(), g.word().end());
    if (!(GroupElement::from_word(t, stored) == g)) f.push_back(t.name() + ": stored word replays differently");
    if (!(GroupElement::from_word(t, canonical_word(c, {g.inv_vector().begin(), g.inv_vector().end()})) == g))
      f.push_back(t.name() + ": canonical word replays differently");
  }
  return f;
}

Failures deletion_property(AffineType t, int L) {
  Failures f;
  for (const auto& w : flatten(enumerate_quotient(t, L))) {
    const auto letters = w.word();
    for (std::size_t k = 0; k < letters.size(); ++k) {
      std::vector<int> shorter;
      for (std::size_t i = 0; i < letters.size(); ++i)
        if (i != k) shorter.push_back(letters[i]);
      const GroupElement v = GroupElement::from_word(t, shorter);
      const int drop = w.length() - v.length();
      if (drop < 1 || drop % 2 == 0) f.push_back(t.name() + ": deletion from " + str(w) + " has wrong length");
      if (!bruhat_leq(v, w)) f.push_back(t.name() + ": subword element not below " + str(w));
      if (drop == 1 && v.is_min_rep()) {
        auto covers = bruhat_lower_covers(w);
        if (std::find(covers.begin(), covers.end(), v) == covers.end())
          f.push_back(t.name() + ": one-letter deletion of " + str(w) + " missing from the covers");
      }
    }
  }
  return f;
}

Failures bruhat_axioms(AffineType t, int L) {
  Failures f;
  const auto all = flatten(enumerate_quotient(t, L));
  const std::size_t m = all.size();
  std::vector<char> leq(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) leq[a * m + b] = bruhat_leq(all[a], all[b]);
  for (std::size_t a = 0; a < m; ++a) {
    if (!leq[a * m + a]) f.push_back(t.name() + ": not reflexive at " + str(all[a]));
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !leq[a * m + b]) continue;
      if (leq[b * m + a]) f.push_back(t.name() + ": not antisymmetric");
      if (all[a].length() >= all[b].length()) f.push_back(t.name() + ": order does not refine length");
      for (std::size_t c = 0; c < m; ++c)
        if (leq[b * m + c] && !leq[a * m + c]) f.push_back(t.name() + ": not transitive");
    }
  }
  return f;
}

Failures bruhat_vs_subwords(AffineType t, int L) {
  Failures f;
  const auto all = flatten(enumerate_quotient(t, L));
  BruhatOracle oracle;
  for (const auto& w : all) {
    const auto below = subword_products(w);
    std::unordered_set<GroupElement, GroupElementHash> set(below.begin(), below.end());
    std::unordered_set<GroupElement, GroupElementHash> quotient_part;
    for (const auto& v : below)
      if (v.is_min_rep()) quotient_part.insert(v);
    for (const auto& v : all) {
      const bool in = set.count(v) > 0;
      if (bruhat_leq(v, w) != in) f.push_back(t.name() + ": lifting recursion disagrees with subwords at " + str(v) +
                                              " <= " + str(w));
      if (oracle.leq(v, w) != in) f.push_back(t.name() + ": memoized order disagrees at " + str(v) + " <= " + str(w));
    }
    const auto interval = lower_interval(w);
    std::unordered_set<GroupElement, GroupElementHash> got(interval.begin(), interval.end());
    if (got != quotient_part) f.push_back(t.name() + ": lower interval of " + str(w) + " is wrong");
  }
  return f;
}

// ---------------------------------------------------------------- segments

Failures segment_tables_agree(AffineType t) {
  Failures f;
  auto key = [](const Segment& s) {
    std::vector<Coord> v(s.element.inv_vector().begin(), s.element.inv_vector().end());
    v.push_back(s.parity.value_or(-1));
    return v;
  };
  std::set<std::vector<Coord>> table, computed;
  for (const auto& s : segments_table(t)) {
    table.insert(key(s));
    if (s.element.length() != s.length || static_cast<int>(s.word.size()) != s.length)
      f.push_back(t.name() + ": table segment " + word_to_string(s.word) + " is not reduced");
  }
  for (const auto& s : segments_compute(t)) computed.insert(key(s));
  if (table != computed)
    f.push_back(t.name() + ": table has " + std::to_string(table.size()) + " segments, computation " +
                std::to_string(computed.size()) + ", sets differ");
  return f;
}

namespace {

bool rule_allowed(AffineType t, ColoredPart lower, ColoredPart upper) {
  const int n = t.rank();
  const int j = lower.value, k = upper.value;
  switch (t.family()) {
    case Family::B: return j < k || (n <= j && j == k);
    case Family::C: return j < k || (n < j && j == k);
    case Family::D:
      if (j == k && j == n - 1) return lower.color == upper.color;
      return j < k || (n - 1 <= j && j == k);
    default: throw UnsupportedFamily("no pair rule");
  }
}

}  // namespace

Failures allowed_pairs_rule(AffineType t) {
  Failures f;
  const SegmentSystem& sys = SegmentSystem::get(t);
  for (int a = 0; a < sys.part_count(); ++a)
    for (int b = 0; b < sys.part_count(); ++b)
      if (sys.allowed(a, b) != rule_allowed(t, sys.part(a), sys.part(b)))
        f.push_back(t.name() + ": pair (" + ColoredPartition{{sys.part(a)}}.to_string() + "," +
                    ColoredPartition{{sys.part(b)}}.to_string() + ") disagrees with the stated rule");
  return f;
}

namespace {

Failures pair_list_matches(AffineType t, const std::set<std::pair<ColoredPart, ColoredPart>>& listed) {
  Failures f;
  const SegmentSystem& sys = SegmentSystem::get(t);
  std::set<std::pair<ColoredPart, ColoredPart>> have;
  for (int a = 0; a < sys.part_count(); ++a)
    for (int b = 0; b < sys.part_count(); ++b)
      if (sys.allowed(a, b)) have.insert({sys.part(a), sys.part(b)});
  auto show = [](const std::pair<ColoredPart, ColoredPart>& p) {
    return "(" + ColoredPartition{{p.first}}.to_string() + "." + ColoredPartition{{p.second}}.to_string() + ")";
  };
  for (const auto& p : listed)
    if (!have.count(p)) f.push_back(t.name() + ": listed pair " + show(p) + " is not allowed");
  for (const auto& p : have)
    if (!listed.count(p)) f.push_back(t.name() + ": allowed pair " + show(p) + " is not listed");
  return f;
}

ColoredPart parse_part(const std::string& s) { return parse_partition(s).parts.at(0); }

}  // namespace

Failures g2_pair_list() {
  const std::set<std::pair<ColoredPart, ColoredPart>> listed{
      {{1, 0}, {4, 0}}, {{1, 0}, {5, 0}}, {{1, 0}, {6, 0}}, {{2, 0}, {5, 0}}, {{2, 0}, {6, 0}}, {{3, 0}, {5, 0}},
      {{3, 0}, {6, 0}}, {{4, 0}, {5, 0}}, {{4, 0}, {6, 0}}, {{5, 0}, {5, 0}}, {{5, 0}, {6, 0}}, {{6, 0}, {6, 0}}};
  return pair_list_matches(AffineType(Family::G2, 2), listed);
}

Failures f4_pattern_list() {
  static const char* text = R"(
 (16.16)
 (15.16) (15.15)
 (14.16) (14.15) (14.14)
 (13.16) (13.15) (13.14)
 (12.16) (12.15) (12.14)
 (12^1.16) (12^1.15) (12^1.14) (12^1.13)
 (11.16) (11.15) (11.14) (11.13)
 (11^1.16) (11^1.15) (11^1.14) (11^1.13) (11^1.12^1) (11^1.11^1)
 (10.16) (10.15) (10.14) (10.13)
 (10^1.16) (10^1.15) (10^1.14) (10^1.13) (10^1.12^1) (10^1.11^1)
 (9.16) (9.15) (9.14) (9.13) (9.12)
 (9^1.16) (9^1.15) (9^1.14) (9^1.13) (9^1.12^1) (9^1.11^1)
 (8.16) (8.15) (8.14) (8.13) (8.12^1) (8.11^1)
 (8^1.16) (8^1.15) (8^1.14) (8^1.13) (8^1.12)
 (7.16) (7.15) (7.14) (7.13) (7.12^1) (7.11^1)
 (7^1.16) (7^1.15) (7^1.14) (7^1.13) (7^1.12) (7^1.12^1) (7^1.11^1)
 (6.16) (6.15) (6.14) (6.13) (6.12^1) (6.11^1)
 (6^1.16) (6^1.15) (6^1.14) (6^1.13) (6^1.12) (6^1.12^1) (6^1.11^1)
 (5.16) (5.15) (5.14) (5.13) (5.12) (5.12^1) (5.11^1)
 (5^1.16) (5^1.15) (5^1.14) (5^1.13) (5^1.12) (5^1.12^1) (5^1.11) (5^1.11^1) (5^1.10^1)
 (4.16) (4.15) (4.14) (4.13) (4.12) (4.12^1) (4.11) (4.11^1) (4.10^1)
 (3.16) (3.15) (3.14) (3.13) (3.12) (3.12^1) (3.11) (3.11^1) (3.10^1)
 (2.16) (2.15) (2.14) (2.13) (2.12) (2.12^1) (2.11) (2.11^1) (2.10) (2.10^1) (2.9^1)
 (1.16) (1.15) (1.14) (1.13) (1.12) (1.12^1) (1.11) (1.11^1) (1.10) (1.10^1) (1.9) (1.9^1) (1.8) (1.7) (1.6)
)";
  std::set<std::pair<ColoredPart, ColoredPart>> listed;
  std::string s(text);
  for (std::size_t open = s.find('('); open != std::string::npos; open = s.find('(', open + 1)) {
    const std::size_t close = s.find(')', open);
    const std::string body = s.substr(open + 1, close - open - 1);
    const std::size_t dot = body.find('.');
    listed.insert({parse_part(body.substr(0, dot)), parse_part(body.substr(dot + 1))});
  }
  Failures f;
  if (listed.size() != 144) f.push_back("F4 pattern list transcribed with " + std::to_string(listed.size()) + " pairs");
  merge(f, pair_list_matches(AffineType(Family::F4, 4), listed));
  return f;
}

Failures pairs_lemma(AffineType t) {
  Failures f;
  const SegmentSystem& sys = SegmentSystem::get(t);
  const int low_parity = sys.type_two() ? 1 : 0;
  for (int a = 0; a < sys.part_count(); ++a) {
    const ColoredPart pa = sys.part(a);
    const auto below = left_weak_below(sys.segment(a, low_parity).element);
    for (int b = 0; b < sys.part_count(); ++b) {
      if (!sys.allowed(a, b)) continue;
      const ColoredPart pb = sys.part(b);
      const std::string pair = "(" + ColoredPartition{{pa}}.to_string() + "," + ColoredPartition{{pb}}.to_string() + ")";
      for (int p = 0; p < (sys.type_two() ? 2 : 1); ++p)
        if (!left_weak_leq(sys.segment(a, p).element, sys.segment(b, p).element))
          f.push_back(t.name() + ": allowed pair " + pair + " not ordered in left weak order");
      if (pa.value > pb.value || (pa.value == pb.value && pa.color != pb.color))
        f.push_back(t.name() + ": allowed pair " + pair + " has a larger first part");
      for (const auto& u : below) {
        auto id = sys.find(u, low_parity);
        if (!id) {
          f.push_back(t.name() + ": " + str(u) + " below a segment is not a segment");
          continue;
        }
        if (!sys.allowed(*id, b)) f.push_back(t.name() + ": smaller segment " + str(u) + " breaks pair " + pair);
      }
    }
  }
  return f;
}

Failures products_corollary(AffineType t) {
  Failures f;
  const SegmentSystem& sys = SegmentSystem::get(t);
  const int m = sys.part_count();
  const bool two = sys.type_two();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        // left to right a, b, c; c rightmost with parity 0
        const GroupElement prod = sys.segment(a, 0).element * sys.segment(b, two ? 1 : 0).element *
                                  sys.segment(c, 0).element;
        const int len = sys.part(a).value + sys.part(b).value + sys.part(c).value;
        const bool expect = sys.allowed(a, b) && sys.allowed(b, c);
        bool is_r = prod.length() == len && prod.is_min_rep();
        if (is_r) {
          const auto ids = sys.factor_ids(prod);
          is_r = ids.size() == 3 && ids[0].first == a && ids[1].first == b && ids[2].first == c;
        }
        if (is_r != expect)
          f.push_back(t.name() + ": product of parts " + std::to_string(sys.part(a).value) + "," +
                      std::to_string(sys.part(b).value) + "," + std::to_string(sys.part(c).value) +
                      (expect ? " should" : " should not") + " be a canonical factorization");
      }
  return f;
}

namespace {

// One rule of a commutation lemma: when `applies`, s_i * lhs == rhs.
struct RuleCheck {
  AffineType t;
  Failures* f;
  std::string lemma;
  int covered = 0;
  void expect(bool applies, const GroupElement& lhs, const GroupElement& rhs, const std::string& what) {
    if (!applies) return;
    ++covered;
    if (!(lhs == rhs)) f->push_back(t.name() + " " + lemma + ": " + what + " (" + str(lhs) + " vs " + str(rhs) + ")");
  }
};

// Arguments are only evaluated when the case applies; out of range segments
// are never built.
#define RULE(r, cond, lhs, rhs, what)             \
  do {                                            \
    if (cond) (r).expect(true, (lhs), (rhs), what); \
  } while (0)

std::string ij(int i, int j) { return "i=" + std::to_string(i) + " j=" + std::to_string(j); }

}  // namespace

Failures commutation_B(int n) {
  Failures f;
  const AffineType t(Family::B, n);
  RuleCheck r{t, &f, "commutation"};
  const int top = 2 * n - 1;
  for (int p : {1, 0}) {
    // parity 0 rules: swap s_0 and s_1
    auto sig = [&](int i) { return p == 1 ? i : (i == 0 ? 1 : i == 1 ? 0 : i); };
    auto S = [&](int j) { return seg(t, j, 0, p); };
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= top; ++j) {
        const GroupElement lhs = gen(t, sig(i)) * S(j);
        RULE(r, (1 <= j && j < i - 1) || (2 * n - i < j && j <= top), lhs, S(j) * gen(t, sig(i)), ij(i, j) + " commute");
        RULE(r, (j == i - 1 || j == 2 * n - i - 1) && j + 1 <= top, lhs, S(j + 1), ij(i, j) + " grows");
        RULE(r, j == i || j == 2 * n - i, lhs, S(j - 1), ij(i, j) + " shrinks");
        RULE(r, i < j && j < 2 * n - i - 1, lhs, S(j) * gen(t, sig(i + 1)), ij(i, j) + " shifts");
      }
  }
  RULE(r, true, gen(t, 0) * seg(t, 1, 0, 1), seg(t, 1, 0, 1) * gen(t, 0), "s0 s1 = s1 s0");
  return f;
}

Failures commutation_C(int n) {
  Failures f;
  const AffineType t(Family::C, n);
  RuleCheck r{t, &f, "commutation"};
  const int top = 2 * n;
  auto S = [&](int j) { return seg(t, j); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= top; ++j) {
      const GroupElement lhs = gen(t, i) * S(j);
      RULE(r, (1 <= j && j < i) || (2 * n - i + 1 < j && j <= top), lhs, S(j) * gen(t, i), ij(i, j) + " commute");
      RULE(r, (j == i || j == 2 * n - i) && j + 1 <= top, lhs, S(j + 1), ij(i, j) + " grows");
      RULE(r, j == i + 1 || j == 2 * n - i + 1, lhs, S(j - 1), ij(i, j) + " shrinks");
      RULE(r, i + 1 < j && j < 2 * n - i, lhs, S(j) * gen(t, i + 1), ij(i, j) + " shifts");
    }
  return f;
}

Failures commutation_D(int n) {
  Failures f;
  const AffineType t(Family::D, n);
  RuleCheck r{t, &f, "commutation"};
  const int top = 2 * n - 2;
  for (int p : {1, 0}) {
    auto sig = [&](int i) {
      if (p == 1) return i;
      if (i == 0) return 1;
      if (i == 1) return 0;
      if (i == n - 1) return n;
      if (i == n) return n - 1;
      return i;
    };
    auto S = [&](int j, int z) { return seg(t, j, j == n - 1 ? z : 0, p); };
    for (int z : {0, 1}) {
      for (int i = 1; i <= n - 2; ++i)
        for (int j = 1; j <= top; ++j) {
          const GroupElement lhs = gen(t, sig(i)) * S(j, z);
          RULE(r, (1 <= j && j < i - 1) || (2 * n - i - 1 < j && j <= top), lhs, S(j, z) * gen(t, sig(i)),
                   ij(i, j) + " commute");
          RULE(r, j == i - 1 || j == 2 * n - i - 2, lhs, S(j + 1, z), ij(i, j) + " grows");
          RULE(r, j == i || j == 2 * n - i - 1, lhs, S(j - 1, z), ij(i, j) + " shrinks");
          // the c colored n-1 segment starts with s_n, so s_{n-2} comes out as s_n
          const bool c_corner = i == n - 2 && j == n - 1 && z == 1;
          RULE(r, i < j && j < 2 * n - i - 2 && !c_corner, lhs, S(j, z) * gen(t, sig(i + 1)), ij(i, j) + " shifts");
          RULE(r, c_corner, lhs, S(j, z) * gen(t, sig(n)), ij(i, j) + " shifts past the c corner");
        }
      // i = n-1, and i = n with b <-> c and s_{n-1} <-> s_n
      for (int which : {n - 1, n}) {
        const int b = which == n - 1 ? 0 : 1;
        const int c = 1 - b;
        const int other = which == n - 1 ? n : n - 1;
        for (int j = 1; j <= top; ++j) {
          const GroupElement lhs = gen(t, sig(which)) * S(j, z);
          const std::string at = ij(which, j) + " z=" + std::to_string(z);
          RULE(r, 1 <= j && j < n - 2, lhs, S(j, z) * gen(t, sig(which)), at + " commute");
          RULE(r, j == n - 2, lhs, S(n - 1, b), at + " grows to n-1");
          RULE(r, j == n - 1 && z == c, lhs, S(n, 0), at + " grows to n");
          RULE(r, j == n - 1 && z == b, lhs, S(n - 2, 0), at + " shrinks to n-2");
          RULE(r, j == n, lhs, S(n - 1, c), at + " shrinks to n-1");
          RULE(r, n < j && j <= top, lhs, S(j, z) * gen(t, sig(other)), at + " shifts");
        }
      }
    }
  }
  RULE(r, true, seg(t, 1, 0, 0) * seg(t, 1, 0, 1), seg(t, 1, 0, 1) * seg(t, 1, 0, 0), "s0 s1 = s1 s0");
  return f;
}

Failures product_rules_B(int n) {
  Failures f;
  const AffineType t(Family::B, n);
  RuleCheck r{t, &f, "product rule"};
  const int top = 2 * n - 1;
  for (int p : {1, 0}) {
    const int q = 1 - p;
    auto U = [&](int j) { return seg(t, j, 0, p); };
    auto L = [&](int j) { return seg(t, j, 0, q); };
    const GroupElement last = gen(t, p);  // s_1 when the left factor has parity 1
    for (int j = 1; j < n; ++j) RULE(r, true, U(j) * L(j), U(j - 1) * L(j) * last, "rule 1 j=" + std::to_string(j));
    for (int j = n; j < top; ++j) RULE(r, true, U(j + 1) * L(j), U(j) * L(j) * last, "rule 2 j=" + std::to_string(j));
    for (int j = 1; j <= top; ++j)
      for (int k = j; k <= top; ++k) {
        if (k == j && j >= n) continue;  // allowed
        const std::string at = "pair k=" + std::to_string(k) + " j=" + std::to_string(j);
        RULE(r, j <= k && k < 2 * n - j, U(k) * L(j), U(j - 1) * L(k) * last, at);
        RULE(r, (n <= j && j < k) || (j < 2 * n - j && 2 * n - j <= k), U(k) * L(j), U(j) * L(k - 1) * last, at);
      }
  }
  return f;
}

Failures product_rules_C(int n) {
  Failures f;
  const AffineType t(Family::C, n);
  RuleCheck r{t, &f, "product rule"};
  auto S = [&](int j) { return seg(t, j); };
  const GroupElement s1 = gen(t, 1);
  // at j = 1 the left side s0 s0 is the identity; the rule starts at 2
  for (int j = 2; j <= n; ++j) RULE(r, true, S(j) * S(j), S(j - 1) * S(j) * s1, "rule 1 j=" + std::to_string(j));
  for (int j = n + 1; j < 2 * n; ++j) RULE(r, true, S(j + 1) * S(j), S(j) * S(j) * s1, "rule 2 j=" + std::to_string(j));
  return f;
}

Failures product_rules_D(int n) {
  Failures f;
  const AffineType t(Family::D, n);
  RuleCheck r{t, &f, "product rule"};
  for (int p : {1, 0}) {
    const int q = 1 - p;
    auto U = [&](int j, int z = 0) { return seg(t, j, z, p); };
    auto L = [&](int j, int z = 0) { return seg(t, j, z, q); };
    const GroupElement last = gen(t, p);
    for (int j = 1; j < n - 1; ++j) RULE(r, true, U(j) * L(j), U(j - 1) * L(j) * last, "rule 1 j=" + std::to_string(j));
    RULE(r, true, U(n - 1, 0) * L(n - 1, 1), U(n - 2) * L(n - 1, 1) * last, "rule 2 bc");
    RULE(r, true, U(n - 1, 1) * L(n - 1, 0), U(n - 2) * L(n - 1, 0) * last, "rule 2 cb");
    for (int j = n; j < 2 * n - 2; ++j)
      RULE(r, true, U(j + 1) * L(j), U(j) * L(j) * last, "rule 3 j=" + std::to_string(j));
  }
  return f;
}

Failures labeling_examples() {
  Failures f;
  struct Example {
    const char* type;
    const char* partition;
    const char* word;
  };
  const Example examples[] = {
      {"B4", "7,5,5,3,1", "s0 s3s2s1 s3s4s3s2s0 s3s4s3s2s1 s0s2s3s4s3s2s0"},
      {"C4", "7,5,5,3,1", "s0 s2s1s0 s4s3s2s1s0 s4s3s2s1s0 s2s3s4s3s2s1s0"},
      {"D6", "7,5^b,5^b,3,1", "s0 s3s2s1 s6s4s3s2s0 s5s4s3s2s1 s4s6s5s4s3s2s0"},
  };
  for (const auto& ex : examples) {
    const AffineType t = AffineType::parse(ex.type);
    std::string w = ex.word;
    std::erase(w, ' ');
    const GroupElement g = word(t, w);
    const ColoredPartition lambda = parse_partition(ex.partition);
    if (g.length() != lambda.size()) f.push_back(std::string(ex.type) + ": example word is not reduced");
    if (!is_affine_partition(t, lambda)) f.push_back(std::string(ex.type) + ": example partition not affine");
    if (!(pi_inv(t, lambda) == g)) f.push_back(std::string(ex.type) + ": pi_inv does not give the example word");
    if (pi(g) != lambda) f.push_back(std::string(ex.type) + ": pi gives (" + pi(g).to_string() + ")");
    std::vector<int> lengths;
    for (const auto& s : factor(g)) lengths.push_back(s.length);
    if (lengths != std::vector<int>{1, 3, 5, 5, 7}) f.push_back(std::string(ex.type) + ": factor lengths differ");
  }
  const AffineType b4 = AffineType::parse("B4");
  const GroupElement top = pi_inv(b4, uncolored({5, 2, 1}));
  const GroupElement bottom = pi_inv(b4, uncolored({7}));
  if (!(top == word(b4, "s0s2s1s3s4s3s2s0"))) f.push_back("B4: (5,2,1) has an unexpected word " + str(top));
  if (!(bottom == word(b4, "s0s2s3s4s3s2s0"))) f.push_back("B4: (7) has an unexpected word " + str(bottom));
  const auto covers = bruhat_lower_covers(top);
  if (!bruhat_leq(bottom, top) || std::find(covers.begin(), covers.end(), bottom) == covers.end())
    f.push_back("B4: (5,2,1) does not cover (7) in Bruhat order");
  if (gyl_covers(b4, uncolored({5, 2, 1}), uncolored({7})))
    f.push_back("B4: (5,2,1) covers (7) in the generalized Young lattice");
  return f;
}

Failures gyl_covers_are_bruhat_covers(AffineType t, int L) {
  Failures f;
  for (const auto& w : flatten(enumerate_quotient(t, L))) {
    const ColoredPartition lambda = pi(w);
    const auto covers = bruhat_lower_covers(w);
    for (const auto& mu : gyl_lower_covers(t, lambda)) {
      if (mu.size() + 1 != lambda.size()) f.push_back(t.name() + ": cover changes size by more than one");
      if (!gyl_covers(t, lambda, mu)) f.push_back(t.name() + ": gyl_covers disagrees with gyl_lower_covers");
      if (std::find(covers.begin(), covers.end(), pi_inv(t, mu)) == covers.end())
        f.push_back(t.name() + ": (" + lambda.to_string() + ") over (" + mu.to_string() + ") is not a Bruhat cover");
    }
  }
  return f;
}

Failures young_covers_are_bruhat_covers(AffineType t, int L) {
  Failures f;
  for (const auto& w : flatten(enumerate_quotient(t, L))) {
    const ColoredPartition lambda = pi(w);
    const auto covers = bruhat_lower_covers(w);
    for (std::size_t k = 0; k < lambda.parts.size(); ++k) {
      if (k + 1 < lambda.parts.size() && lambda.parts[k + 1].value == lambda.parts[k].value) continue;
      ColoredPartition mu = lambda;
      if (--mu.parts[k].value == 0) mu.parts.erase(mu.parts.begin() + static_cast<std::ptrdiff_t>(k));
      if (!is_affine_partition(t, mu)) continue;
      if (std::find(covers.begin(), covers.end(), pi_inv(t, mu)) == covers.end())
        f.push_back(t.name() + ": Young cover (" + lambda.to_string() + ") > (" + mu.to_string() +
                    ") is not a Bruhat cover");
    }
  }
  return f;
}

Failures bijection_round_trip(AffineType t, int L) {
  Failures f;
  std::set<ColoredPartition> images;
  std::size_t total = 0;
  for (const auto& w : flatten(enumerate_quotient(t, L))) {
    ++total;
    const ColoredPartition lambda = pi(w);
    if (lambda.size() != w.length()) f.push_back(t.name() + ": pi changes size at " + str(w));
    if (!is_affine_partition(t, lambda)) f.push_back(t.name() + ": pi leaves the allowed set at " + str(w));
    if (!(pi_inv(t, lambda) == w)) f.push_back(t.name() + ": pi_inv(pi(w)) != w at " + str(w));
    images.insert(lambda);
  }
  if (images.size() != total) f.push_back(t.name() + ": pi is not injective");
  const auto counts = partition_series(t, L).to_ints();
  if (static_cast<long long>(total) != std::accumulate(counts.begin(), counts.end(), 0LL))
    f.push_back(t.name() + ": image is not all affine partitions up to size L");
  if (t.family() == Family::B || t.family() == Family::C || t.family() == Family::D) {
    const auto described = described_partitions(t, L);
    if (std::set<ColoredPartition>(described.begin(), described.end()) != images)
      f.push_back(t.name() + ": image differs from the verbal description of the partitions");
  }
  return f;
}

// ---------------------------------------------------------------- type A

namespace {

struct Cell {
  int row, col;
};

std::vector<Cell> addable(const std::vector<int>& rows) {
  std::vector<Cell> out;
  for (std::size_t r = 0; r <= rows.size(); ++r) {
    const int len = r < rows.size() ? rows[r] : 0;
    if (r == 0 || rows[r - 1] > len) out.push_back({static_cast<int>(r) + 1, len + 1});
  }
  return out;
}

std::vector<Cell> removable(const std::vector<int>& rows) {
  std::vector<Cell> out;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (r + 1 == rows.size() || rows[r + 1] < rows[r]) out.push_back({static_cast<int>(r) + 1, rows[r]});
  return out;
}

GroupElement C(int n, int i, int j) { return GroupElement::from_word(AffineType(Family::A, n), type_a_segment_word(n, i, j)); }

}  // namespace

Failures core_facts(int n, int L) {
  Failures f;
  const AffineType t(Family::A, n);
  const int N = n + 1;
  for (const auto& w : flatten(enumerate_quotient(t, L))) {
    const CorePartition lambda = c_map(w);
    const std::string at = t.name() + " " + str(w);
    if (!is_core(lambda)) f.push_back(at + ": image is not a core");
    if (std::accumulate(lambda.rows.begin(), lambda.rows.end(), 0) < w.length()) f.push_back(at + ": core too small");
    // the same core along the lexicographically smallest reduced word
    CorePartition again{n, {}};
    const auto lex = lex_min_word(w);
    for (auto it = lex.rbegin(); it != lex.rend(); ++it) again = r_op(again, *it);
    if (!(again == lambda)) f.push_back(at + ": core depends on the reduced word");
    for (int i = 0; i <= n; ++i) {
      std::vector<int> add_diag, rem_diag;
      for (auto c : addable(lambda.rows))
        if (content(n, c.row, c.col) == i) add_diag.push_back(c.col - c.row);
      for (auto c : removable(lambda.rows))
        if (content(n, c.row, c.col) == i) rem_diag.push_back(c.col - c.row);
      if (!add_diag.empty() && !rem_diag.empty()) f.push_back(at + ": addable and removable of one content");
      for (auto* d : {&add_diag, &rem_diag}) {
        std::sort(d->begin(), d->end());
        for (std::size_t k = 1; k < d->size(); ++k)
          if ((*d)[k] - (*d)[k - 1] != N) f.push_back(at + ": cells of one content on non-consecutive diagonals");
      }
      const GroupElement s = w.left_multiply(i);
      const CorePartition moved = r_op(lambda, i);
      if (!add_diag.empty()) {
        if (!s.is_min_rep() || s.length() != w.length() + 1 || !(c_map(s) == moved) ||
            !contains(moved.rows, lambda.rows))
          f.push_back(at + ": adding content " + std::to_string(i) + " disagrees with s_i w");
      } else if (!rem_diag.empty()) {
        if (!s.is_min_rep() || s.length() != w.length() - 1 || !(c_map(s) == moved))
          f.push_back(at + ": removing content " + std::to_string(i) + " disagrees with s_i w");
      } else {
        if (s.is_min_rep()) f.push_back(at + ": s_i w is a minimal rep with no cell of content " + std::to_string(i));
        if (!(moved == lambda)) f.push_back(at + ": r_op moved a core with nothing to add or remove");
      }
      if (!(moved == lambda) && !(r_op(moved, i) == lambda)) f.push_back(at + ": r_op is not an involution");
      if (!is_core(moved)) f.push_back(at + ": r_op leaves the cores");
    }
  }
  return f;
}

Failures relations_An(int n) {
  Failures f;
  const AffineType t(Family::A, n);
  RuleCheck r{t, &f, "relations"};
  auto ok = [&](int i, int j) { return 0 <= i && i <= n && 1 <= j && j <= n; };
  for (int a = 1; a <= n; ++a)
    for (int i = 0; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const GroupElement lhs = gen(t, a) * C(n, i, j);
        const std::string at = "a=" + std::to_string(a) + " C" + std::to_string(i) + "," + std::to_string(j);
        auto rhs = [&](bool when, int ii, int jj, int right, const char* tag) {
          if (!when || !ok(ii, jj)) return;
          GroupElement g = C(n, ii, jj);
          if (right > 0) g = g * gen(t, right);
          RULE(r, true, lhs, g, at + " " + tag);
        };
        rhs(a < i && a < n - j, i, j, a + 1, "1");
        rhs(a < i && a == n - j, i, j + 1, 0, "2");
        rhs(a < i && a == n - j + 1, i, j - 1, 0, "3");
        rhs(a < i && a >= n - j + 2, i, j, a, "4");
        rhs(a == i, i - 1, j, 0, "5");
        rhs(a == i + 1, i + 1, j, 0, "6");
        rhs(a > i + 1 && a <= n - j, i, j, a, "7");
        rhs(a > i + 1 && a == n - j + 1, i, j + 1, 0, "8");
        rhs(a > i + 1 && a == n - j + 2, i, j - 1, 0, "9");
        rhs(a > i + 1 && a > n - j + 2, i, j, a - 1, "10");
      }
  return f;
}

Failures left_order_A(int n) {
  // Covers: the product of chains [n+1] x [n], without C_{i,j} < C_{i,j+1}
  // when i+j = n. Compare the closure with the weak order itself.
  Failures f;
  const int rows = n + 1, cols = n, m = rows * cols;
  auto id = [&](int i, int j) { return i * cols + (j - 1); };
  std::vector<char> reach(m * m, 0);
  for (int i = 0; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      reach[id(i, j) * m + id(i, j)] = 1;
      if (i < n) reach[id(i, j) * m + id(i + 1, j)] = 1;
      if (j < n && i + j != n) reach[id(i, j) * m + id(i, j + 1)] = 1;
    }
  for (int k = 0; k < m; ++k)
    for (int a = 0; a < m; ++a)
      if (reach[a * m + k])
        for (int b = 0; b < m; ++b)
          if (reach[k * m + b]) reach[a * m + b] = 1;
  for (int i = 0; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 0; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          if (left_weak_leq(C(n, i, j), C(n, k, l)) != static_cast<bool>(reach[id(i, j) * m + id(k, l)]))
            f.push_back("A" + std::to_string(n) + ": weak order C" + std::to_string(i) + "," + std::to_string(j) +
                        " vs C" + std::to_string(k) + "," + std::to_string(l));
  return f;
}

Failures allowed_pairs_A(int n) {
  Failures f;
  const AffineType t(Family::A, n);
  const SegmentSystem& sys = SegmentSystem::get(t);
  for (int i = 0; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 0; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          const GroupElement prod = C(n, i, j) * C(n, k, l);
          const bool arithmetic = prod.length() == i + j + k + l && prod.is_min_rep();
          const bool table = sys.allowed(*sys.part_id({i + j, i}), *sys.part_id({k + l, k}));
          if (allowed_pair_A(n, i, j, k, l) != arithmetic || table != arithmetic)
            f.push_back(t.name() + ": pair C" + std::to_string(i) + "," + std::to_string(j) + " C" + std::to_string(k) +
                        "," + std::to_string(l));
        }
  return f;
}

Failures abc_identity(int n, int L) {
  Failures f;
  for (const auto& w : flatten(enumerate_quotient(AffineType(Family::A, n), L))) {
    const BoundedPartition mu = b_map(c_map(w));
    if (!is_bounded(mu)) f.push_back("A" + std::to_string(n) + ": b(c(w)) not bounded at " + str(w));
    if (std::accumulate(mu.rows.begin(), mu.rows.end(), 0) != w.length())
      f.push_back("A" + std::to_string(n) + ": |b(c(w))| != length at " + str(w));
    if (!(a_map(mu) == w)) f.push_back("A" + std::to_string(n) + ": a(b(c(w))) != w at " + str(w));
  }
  return f;
}

Failures lascoux(int n, int L) {
  Failures f;
  const auto all = flatten(enumerate_quotient(AffineType(Family::A, n), L));
  std::vector<std::vector<int>> cores;
  for (const auto& w : all) cores.push_back(c_map(w).rows);
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b) {
      const bool order = bruhat_leq(all[a], all[b]);
      if (core_leq(all[a], all[b]) != order || contains(cores[b], cores[a]) != order)
        f.push_back("A" + std::to_string(n) + ": core containment disagrees at " + str(all[a]) + " <= " + str(all[b]));
    }
  return f;
}

Failures central_hooks(int n, int L) {
  Failures f;
  for (const auto& w : flatten(enumerate_quotient(AffineType(Family::A, n), L))) {
    const CorePartition lambda = c_map(w);
    const auto hooks = central_hook_factor(lambda);
    const auto segs = factor(w);
    bool same = hooks.size() == segs.size();
    for (std::size_t k = 0; same && k < hooks.size(); ++k)
      same = hooks[k].i == segs[k].color && hooks[k].length() == segs[k].length;
    if (!same) f.push_back("A" + std::to_string(n) + ": central hooks disagree with factor() at " + str(w));
    int diagonal = 0;
    for (std::size_t r = 0; r < lambda.rows.size(); ++r)
      if (lambda.rows[r] > static_cast<int>(r)) ++diagonal;
    if (static_cast<int>(hooks.size()) != diagonal)
      f.push_back("A" + std::to_string(n) + ": hook count != diagonal length at " + str(w));
  }
  return f;
}

Failures involution(int n, int L) {
  Failures f;
  for (const auto& w : flatten(enumerate_quotient(AffineType(Family::A, n), L))) {
    const GroupElement v = diagram_involution(w);
    const std::string at = "A" + std::to_string(n) + " " + str(w);
    if (!(diagram_involution(v) == w)) f.push_back(at + ": involution is not an involution");
    if (c_map(v).rows != conjugate(c_map(w).rows)) f.push_back(at + ": core is not transposed");
    const auto a = factor(w);
    const auto b = factor(v);
    bool mapped = a.size() == b.size();
    for (std::size_t k = 0; mapped && k < a.size(); ++k) {
      const int i = a[k].color, j = a[k].length - a[k].color;
      // C_{j-1,i+1} would leave the index range once i+j > n
      const int ii = i + j <= n ? j - 1 : j;
      const int jj = i + j <= n ? i + 1 : i;
      mapped = b[k].color == ii && b[k].length - b[k].color == jj;
    }
    if (!mapped) f.push_back(at + ": factors do not map as expected");
  }
  return f;
}

Failures spirals(int max_n, int max_k) {
  Failures f;
  for (int n = 2; n <= max_n; ++n)
    for (int k = 1; k <= max_k; ++k) {
      const IntPolynomial expect = t_binomial(n + k, k);
      std::vector<GroupElement> seen;
      for (auto dir : {SpiralDirection::Ccw, SpiralDirection::Cw}) {
        const GroupElement w = spiral(n, k, dir);
        const std::string at = "A" + std::to_string(n) + " k=" + std::to_string(k) +
                               (dir == SpiralDirection::Ccw ? " ccw" : " cw");
        if (w.length() != n * k || !w.is_min_rep()) f.push_back(at + ": wrong length or not minimal");
        const IntPolynomial p = poincare(w);
        if (!(p == expect)) f.push_back(at + ": Poincare " + poly(p) + " != " + poly(expect));
        seen.push_back(w);
      }
      // the bounded partition (n^k) reads off one of the two spirals
      BoundedPartition box{n, std::vector<int>(k, n)};
      const GroupElement a = a_map(box);
      if (!(a == seen[0]) && !(a == seen[1]))
        f.push_back("A" + std::to_string(n) + " k=" + std::to_string(k) + ": a(n^k) is not a spiral");
    }
  return f;
}

// ---------------------------------------------------------------- smoothness

Failures b3_polynomial() {
  Failures f;
  const AffineType t = AffineType::parse("B3");
  const GroupElement w = word(t, "s3s2s0s3s2s1s3s2s0");
  if (w.length() != 9) f.push_back("B3: example word is not reduced");
  if (pi(w) != uncolored({3, 3, 3})) f.push_back("B3: example is (" + pi(w).to_string() + "), not (3,3,3)");
  const IntPolynomial p = poincare(w);
  const IntPolynomial expect = IntPolynomial::from_ints({1, 1, 1, 2, 2, 2, 2, 1, 1, 1});
  if (!(p == expect)) f.push_back("B3: Poincare " + poly(p));
  if (yb_nice(w)) f.push_back("B3: (3,3,3) should not be YB-nice");
  // the interval: affine partitions inside (3,3,3), plus (4) and (5)
  std::set<ColoredPartition> interval, expected{uncolored({4}), uncolored({5})};
  for (const auto& v : lower_interval(w)) interval.insert(pi(v));
  for (const auto& mu : described_partitions(t, 9)) {
    bool inside = mu.parts.size() <= 3;
    for (const auto& part : mu.parts) inside = inside && part.value <= 3;
    if (inside) expected.insert(mu);
  }
  if (interval != expected) f.push_back("B3: interval below (3,3,3) differs from the expected shapes");
  return f;
}

Failures staircases(AffineType t) {
  Failures f;
  const int n = t.rank();
  const int top = t.family() == Family::B ? n - 1 : n;
  for (int k = 1; k <= top; ++k) {
    ColoredPartition lambda;
    IntPolynomial expect = IntPolynomial::one();
    for (int v = k; v >= 1; --v) lambda.parts.push_back({v, 0});
    for (int j = 1; j <= k; ++j) expect *= IntPolynomial::one_plus(j);
    const GroupElement w = pi_inv(t, lambda);
    const IntPolynomial p = poincare(w);
    if (!(p == expect)) f.push_back(t.name() + ": staircase " + std::to_string(k) + " gives " + poly(p));
    if (!yb_nice(w)) f.push_back(t.name() + ": staircase " + std::to_string(k) + " is not YB-nice");
  }
  return f;
}

Failures d_single_row(int n) {
  Failures f;
  const AffineType t(Family::D, n);
  for (int j = 1; j <= 2 * n - 2; ++j) {
    for (int c : {0, 1}) {
      if (c == 1 && j != n - 1) continue;
      const ColoredPartition lambda{{{j, c}}};
      const GroupElement w = pi_inv(t, lambda);
      const IntPolynomial p = poincare(w);
      IntPolynomial expect = ones(j);
      if (j >= n) expect += IntPolynomial::monomial(n - 1);
      if (!(p == expect)) f.push_back(t.name() + ": row (" + lambda.to_string() + ") gives " + poly(p));
      if (!isomorphic(bruhat_interval_poset(w), gyl_interval_poset(t, lambda)))
        f.push_back(t.name() + ": row (" + lambda.to_string() + ") interval differs from the colored Young interval");
    }
  }
  return f;
}

namespace {

Failures special_polynomial(AffineType t, const std::vector<const char*>& parts, const IntPolynomial& expect) {
  Failures f;
  for (const char* text : parts) {
    const ColoredPartition lambda = parse_partition(text);
    const IntPolynomial p = poincare(pi_inv(t, lambda));
    if (!(p == expect)) f.push_back(t.name() + ": (" + lambda.to_string() + ") gives " + poly(p));
  }
  return f;
}

}  // namespace

Failures e6_special() {
  const IntPolynomial expect = IntPolynomial::from_ints({1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1}) *
                               IntPolynomial::from_ints({1, 0, 0, 1, 0, 0, 1});
  return special_polynomial(AffineType::parse("E6"), {"11^4,5^2", "11^5,5^1"}, expect);
}

Failures e7_special() {
  std::vector<long long> c(22, 0);
  for (int e : {0, 5, 7, 9, 12, 14, 16, 21}) c[e] = 1;
  const IntPolynomial expect = IntPolynomial::from_ints(c) * ones(6);
  return special_polynomial(AffineType::parse("E7"), {"17^6,9,1"}, expect);
}

Failures strict_young_intervals(AffineType t) {
  Failures f;
  const int n = t.rank();
  int bound = 0;
  switch (t.family()) {
    case Family::B: bound = n - 1; break;
    case Family::C: bound = n; break;
    case Family::D: bound = n - 1; break;
    default: throw UnsupportedFamily("strict Young intervals are for B, C, D");
  }
  // every strict partition with parts <= bound
  std::vector<int> stair;
  for (int v = bound; v >= 1; --v) stair.push_back(v);
  for (const auto& shape : strict_lattice_below(stair).elements) {
    for (int color : {0, 1}) {
      const bool colored = t.family() == Family::D && !shape.empty() && shape[0] == n - 1;
      if (color == 1 && !colored) continue;
      ColoredPartition lambda;
      for (int v : shape) lambda.parts.push_back({v, v == n - 1 && colored ? color : 0});
      const StrictLattice lat = strict_lattice_below(shape);
      RankedPoset young;
      for (const auto& e : lat.elements) young.rank.push_back(std::accumulate(e.begin(), e.end(), 0));
      young.down = lat.down;
      if (!isomorphic(bruhat_interval_poset(pi_inv(t, lambda)), young))
        f.push_back(t.name() + ": (" + lambda.to_string() + ") interval is not the strict Young interval");
    }
  }
  return f;
}

Failures row_chains(AffineType t) {
  Failures f;
  const SegmentSystem& sys = SegmentSystem::get(t);
  for (int id = 0; id < sys.part_count(); ++id) {
    const ColoredPart part = sys.part(id);
    const bool expect_chain = t.family() != Family::D || part.value <= t.rank() - 1;
    if (is_chain(pi_inv(t, ColoredPartition{{part}})) != expect_chain)
      f.push_back(t.name() + ": row (" + ColoredPartition{{part}}.to_string() + ") chain status unexpected");
  }
  return f;
}

Failures palindromy_matches(AffineType t, int L) {
  Failures f;
  std::vector<ColoredPartition> found;
  for (const auto& r : classify_all(t, L)) {
    if (r.palindromic) found.push_back(r.partition);
    if ((r.asymmetry_depth == 0) != r.palindromic) f.push_back(t.name() + ": depth and palindromy disagree");
  }
  std::sort(found.begin(), found.end(), canonical_less);
  const auto predicted = predicted_palindromics(t, L);
  if (found != predicted) {
    std::string s = t.name() + ": found";
    for (const auto& p : found) s += " (" + p.to_string() + ")";
    s += "; predicted";
    for (const auto& p : predicted) s += " (" + p.to_string() + ")";
    f.push_back(s);
  }
  return f;
}

Failures gyl_characterization(AffineType t, int L) {
  Failures f;
  for (const auto& r : classify_all(t, L, true)) {
    const bool sym = gyl_rank_symmetric(t, r.partition);
    if (r.palindromic != (r.yb_nice && sym))
      f.push_back(t.name() + ": (" + r.partition.to_string() + ") palindromic=" + std::to_string(r.palindromic) +
                  " yb_nice=" + std::to_string(r.yb_nice) + " symmetric=" + std::to_string(sym));
    if ((t.family() == Family::G2 || t.family() == Family::F4) && r.palindromic != r.chain)
      f.push_back(t.name() + ": palindromic and chain differ at (" + r.partition.to_string() + ")");
    if (r.palindromic && !is_extra_thin(t, r.partition))
      f.push_back(t.name() + ": palindromic but not extra thin: (" + r.partition.to_string() + ")");
    if (is_thin(t, r.partition) && !r.partition.empty()) {
      ColoredPartition tail = r.partition;
      tail.parts.erase(tail.parts.begin());
      if (!is_thin(t, tail)) f.push_back(t.name() + ": thin (" + r.partition.to_string() + ") has a tail that is not");
      if (is_extra_thin(t, r.partition) && !is_extra_thin(t, tail))
        f.push_back(t.name() + ": extra thin (" + r.partition.to_string() + ") has a tail that is not");
    }
  }
  return f;
}

Failures exceptional_observations(AffineType t) {
  Failures f;
  const auto thin = extra_thin_partitions(t, 7);
  std::vector<ColoredPartition> seven;
  for (const auto& p : thin)
    if (p.parts.size() == 7) seven.push_back(p);
  const bool should_have = t.family() == Family::G2 || t.family() == Family::E6 || t.family() == Family::E7;
  if (seven.empty() == should_have) f.push_back(t.name() + ": extra thin partitions with 7 parts: " +
                                                std::to_string(seven.size()));
  const SegmentSystem& sys = SegmentSystem::get(t);
  const int b = branching_number(t).value();
  std::set<ColoredPart> repeated;
  for (const auto& p : seven) {
    const ColoredPart j = p.parts[0];
    if (!(p.parts[1] == j && p.parts[2] == j && p.parts[3] == j))
      f.push_back(t.name() + ": (" + p.to_string() + ") does not start with four equal parts");
    repeated.insert(j);
  }
  for (const ColoredPart j : repeated) {
    const int jid = *sys.part_id(j);
    for (int k = 0; k < sys.part_count(); ++k) {
      if (!sys.allowed(jid, k) || k == jid) continue;
      const ColoredPartition pair{{sys.part(k), j}};
      if (p_removable_corners(t, pair).size() < 2)
        f.push_back(t.name() + ": (" + pair.to_string() + ") has fewer than two removable corners");
    }
    const ColoredPartition four{{j, j, j, j}};
    const GroupElement top = sys.segment(jid).element;
    bool found = false;
    for (const auto& v : lower_interval(pi_inv(t, four))) {
      if (v.length() <= 4 * j.value - b) continue;
      const ColoredPartition lambda = pi(v);
      bool all_larger = true;
      for (const auto& part : lambda.parts)
        all_larger = all_larger && left_weak_leq(top, sys.segment(*sys.part_id(part)).element);
      if (all_larger && lambda != four) found = true;
    }
    if (!found) f.push_back(t.name() + ": no witness below (" + four.to_string() + ")");
  }
  return f;
}

// ---------------------------------------------------------------- series

Failures closed_identity(AffineType t) {
  Failures f;
  const IdentityResult r = [&] {
    switch (t.family()) {
      case Family::B: return closed_form_B(t.rank());
      case Family::C: return closed_form_C(t.rank());
      case Family::D: return closed_form_D(t.rank());
      case Family::G2: return closed_form_G2();
      case Family::F4: return f4_identity();
      default: return truncated_identity(t, 60);
    }
  }();
  if (!r.holds) f.push_back(t.name() + ": " + r.detail);
  return f;
}

Failures f4_appendix() {
  Failures f;
  const F4AppendixReport r = f4_appendix_data();
  if (r.nr.size() != 132) f.push_back("F4: |NR| = " + std::to_string(r.nr.size()));
  if (r.nre.size() != 96) f.push_back("F4: |NRE| = " + std::to_string(r.nre.size()));
  if (r.nr_max_size != 40 || r.nr_maximizers != std::vector<ColoredPartition>{parse_partition("13,12^1,10^1,5^1")})
    f.push_back("F4: NR maximum is not 40 at (13,12^1,10^1,5^1) alone");
  if (std::find(r.nre.begin(), r.nre.end(), parse_partition("13,12^1,10^1,5^1")) == r.nre.end())
    f.push_back("F4: (13,12^1,10^1,5^1) missing from NRE");
  const std::vector<long long> nr{1, 1, 1, 1, 1, 2, 2, 3, 3, 3, 4, 4, 5, 5, 5, 5, 4, 5, 5, 6, 6,
                                  6, 6, 6, 5, 5, 4, 4, 3, 2, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1};
  const std::vector<long long> nre{1, 1, 1, 1, 1, 2, 2, 3, 2, 2, 2, 2, 2, 3, 3, 3, 2, 3, 4, 5, 5,
                                   4, 4, 4, 3, 3, 3, 3, 2, 1, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1};
  if (r.nr_vector != nr) f.push_back("F4: NR size vector differs");
  if (r.nre_vector != nre) f.push_back("F4: NRE size vector differs");
  // repeatable parts are exactly 11^1, 14, 15, 16
  const SegmentSystem& sys = SegmentSystem::get(AffineType(Family::F4, 4));
  std::vector<ColoredPart> rep;
  for (int id = 0; id < sys.part_count(); ++id)
    if (sys.repeatable(id)) rep.push_back(sys.part(id));
  if (rep != std::vector<ColoredPart>{{11, 1}, {14, 0}, {15, 0}, {16, 0}}) f.push_back("F4: repeatable parts differ");
  merge(f, closed_identity(AffineType(Family::F4, 4)));
  return f;
}

}  // namespace affgr::checks

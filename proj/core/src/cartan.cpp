#include "affgr/cartan.hpp"

#include "affgr/errors.hpp"

#include <charconv>
#include <map>
#include <memory>
#include <mutex>

namespace affgr {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::A, "A"},   {Family::B, "B"},   {Family::C, "C"},   {Family::D, "D"},  {Family::E6, "E"},
    {Family::E7, "E"},  {Family::E8, "E"},  {Family::F4, "F"},  {Family::G2, "G"},
};

bool rank_ok(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 3;
    case Family::C: return n >= 2;
    case Family::D: return n >= 4;
    case Family::E6: return n == 6;
    case Family::E7: return n == 7;
    case Family::E8: return n == 8;
    case Family::F4: return n == 4;
    case Family::G2: return n == 2;
  }
  return false;
}

// Builds the pairing from the diagram: simple edges, plus multiple bonds
// listed as (long node, short node, multiplicity). For a multiple bond
// <alpha_long, alpha_short^vee> = -multiplicity and the reverse entry is -1.
class DiagramBuilder {
 public:
  explicit DiagramBuilder(int size) : size_(size), c_(size * size, 0) {
    for (int i = 0; i < size; ++i) c_[i * size + i] = 2;
  }
  DiagramBuilder& edge(int i, int j) {
    c_[i * size_ + j] = -1;
    c_[j * size_ + i] = -1;
    return *this;
  }
  DiagramBuilder& bond(int long_node, int short_node, int mult) {
    c_[long_node * size_ + short_node] = -mult;
    c_[short_node * size_ + long_node] = -1;
    return *this;
  }
  DiagramBuilder& set(int i, int j, int value) {
    c_[i * size_ + j] = value;
    return *this;
  }
  DiagramBuilder& chain(int from, int to) {
    for (int i = from; i < to; ++i) edge(i, i + 1);
    return *this;
  }
  std::vector<int> take() { return std::move(c_); }

 private:
  int size_;
  std::vector<int> c_;
};

std::vector<int> odd_exponents(int count) {
  std::vector<int> e;
  for (int i = 0; i < count; ++i) e.push_back(2 * i + 1);
  return e;
}

std::unique_ptr<CartanData> build(AffineType t) {
  const int n = t.rank();
  DiagramBuilder g(n + 1);
  std::vector<int> exps;
  switch (t.family()) {
    case Family::A:
      if (n == 1) {
        g.set(0, 1, -2).set(1, 0, -2);
      } else {
        g.chain(0, n).edge(n, 0);
      }
      for (int i = 1; i <= n; ++i) exps.push_back(i);
      break;
    case Family::B:
      g.edge(0, 2).edge(1, 2).chain(2, n - 1).bond(n - 1, n, 2);
      exps = odd_exponents(n);
      break;
    case Family::C:
      g.bond(0, 1, 2).chain(1, n - 1).bond(n, n - 1, 2);
      exps = odd_exponents(n);
      break;
    case Family::D:
      g.edge(0, 2).edge(1, 2).chain(2, n - 2).edge(n - 2, n - 1).edge(n - 2, n);
      exps = odd_exponents(n - 1);
      exps.push_back(n - 1);
      break;
    case Family::E6:
      g.chain(0, 4).edge(2, 5).edge(5, 6);
      exps = {1, 4, 5, 7, 8, 11};
      break;
    case Family::E7:
      g.chain(0, 6).edge(3, 7);
      exps = {1, 5, 7, 9, 11, 13, 17};
      break;
    case Family::E8:
      g.chain(0, 7).edge(5, 8);
      exps = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case Family::F4:
      g.chain(0, 2).bond(2, 3, 2).edge(3, 4);
      exps = {1, 5, 7, 11};
      break;
    case Family::G2:
      g.edge(0, 1).bond(1, 2, 3);
      exps = {1, 5};
      break;
  }
  return std::make_unique<CartanData>(t, g.take(), std::move(exps));
}

}  // namespace

AffineType::AffineType(Family family, int rank) : family_(family), rank_(rank) {
  if (!rank_ok(family, rank)) throw InvalidInput("invalid rank " + std::to_string(rank) + " for this family");
}

AffineType AffineType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidInput("cannot parse affine type '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw InvalidInput("cannot parse affine type '" + std::string(text) + "'");
  switch (letter) {
    case 'A': return {Family::A, rank};
    case 'B': return {Family::B, rank};
    case 'C': return {Family::C, rank};
    case 'D': return {Family::D, rank};
    case 'E':
      if (rank == 6) return {Family::E6, 6};
      if (rank == 7) return {Family::E7, 7};
      if (rank == 8) return {Family::E8, 8};
      break;
    case 'F': return {Family::F4, rank};
    case 'G': return {Family::G2, rank};
    default: break;
  }
  throw InvalidInput("unknown affine type '" + std::string(text) + "'");
}

std::string AffineType::name() const {
  for (const auto& f : kFamilies)
    if (f.family == family_) return f.name + std::to_string(rank_);
  return "?";
}

CartanData::CartanData(AffineType t, std::vector<int> pairing, std::vector<int> exponents)
    : type_(t), size_(t.nodes()), pairing_(std::move(pairing)), exponents_(std::move(exponents)) {}

int CartanData::bond_order(int i, int j) const {
  if (i == j) return 1;
  switch ((*this)(i, j) * (*this)(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

const CartanData& cartan(AffineType t) {
  static std::mutex mu;
  static std::map<AffineType, std::unique_ptr<CartanData>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[t];
  if (!slot) slot = build(t);
  return *slot;
}

TypeClass typeclass(AffineType t) {
  return t.family() == Family::B || t.family() == Family::D ? TypeClass::TypeII : TypeClass::TypeI;
}

std::vector<int> commuting_with_s0(AffineType t) {
  std::vector<int> j;
  if (typeclass(t) == TypeClass::TypeII) {
    for (int i = 2; i <= t.rank(); ++i) j.push_back(i);
    return j;
  }
  const CartanData& c = cartan(t);
  for (int i = 1; i <= t.rank(); ++i)
    if (c.bond_order(0, i) == 2) j.push_back(i);
  return j;
}

TruncatedSeries bott_series(AffineType t, int N) {
  TruncatedSeries s = TruncatedSeries::one(N);
  for (int e : cartan(t).exponents()) s.divide_one_minus(e);
  return s;
}

}  // namespace affgr

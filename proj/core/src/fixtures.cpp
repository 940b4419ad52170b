#include "affgr/smoothness.hpp"

namespace affgr {

// Palindromic elements of the exceptional types, as affine partitions.
// Regenerate with `affgr regen-fixtures`.
const PalindromicFixtures& shipped_palindromic_fixtures() {
  static const PalindromicFixtures fixtures = [] {
    PalindromicFixtures f;
    auto add = [&](const char* type, std::initializer_list<const char*> parts) {
      auto& list = f[type];
      for (const char* p : parts) list.push_back(parse_partition(p));
    };
    add("G2", {"", "1", "2", "3", "4", "4,1", "5", "6"});
    add("F4", {"", "1", "2", "3", "4", "5", "5^1", "6", "6,1"});
    add("E6", {"", "1", "2", "3", "4", "4^1", "5^1", "5^2", "7,1", "11^4,5^2", "11^5,5^1"});
    add("E7", {"", "1", "2", "3", "4", "5", "5^1", "6^1", "7^2", "9,1", "17^6,9,1"});
    add("E8", {"", "1", "2", "3", "4", "5", "6", "7", "7^1", "8^1", "13,1"});
    return f;
  }();
  return fixtures;
}

}  // namespace affgr

#include <algorithm>

#include "hampower/calculus.hpp"

namespace hampower {

namespace {

struct Entry {
  int k;
  int m_lo;
  int m_hi;
  long num;
  long den;
  Nature nature;
  const char* source;
};

constexpr Nature O = Nature::ordinary;
constexpr Nature V = Nature::over;

// Reciprocals of the known exponents (ordinary) and over-exponents (over).
// k = 2, m = 19 is open and deliberately missing.
constexpr Entry kTable[] = {
    {1, 2, 2, 1, 1, O, "prior"},    {1, 3, 3, 1, 1, O, "prior"},
    {1, 4, 4, 3, 2, O, "prior"},    {1, 5, 5, 2, 1, V, "prior"},
    {1, 6, 6, 9, 4, V, "prior"},    {1, 7, 7, 13, 5, V, "prior"},
    {1, 8, 8, 3, 1, O, "prior"},    {1, 9, 9, 7, 2, V, "prior"},

    {2, 3, 5, 1, 1, O, "prior"},    {2, 6, 7, 3, 2, O, "prior"},
    {2, 8, 8, 2, 1, V, "new"},      {2, 9, 9, 2, 1, O, "prior"},
    {2, 10, 10, 9, 4, V, "new"},    {2, 11, 11, 5, 2, O, "new"},
    {2, 12, 12, 13, 5, V, "new"},   {2, 13, 13, 3, 1, O, "new"},
    {2, 14, 14, 3, 1, O, "prior"},  {2, 15, 15, 7, 2, V, "new"},
    {2, 16, 16, 7, 2, O, "new"},    {2, 17, 17, 27, 7, V, "new"},
    {2, 18, 18, 4, 1, O, "new"},    {2, 20, 20, 9, 2, O, "new"},

    {3, 4, 7, 1, 1, O, "prior"},    {3, 8, 10, 3, 2, O, "prior"},
    {3, 11, 11, 2, 1, V, "new"},    {3, 12, 13, 2, 1, O, "prior"},
    {3, 14, 14, 9, 4, V, "new"},    {3, 15, 15, 5, 2, O, "new"},
    {3, 16, 16, 5, 2, O, "prior"},  {3, 17, 17, 13, 5, V, "new"},
    {3, 18, 18, 3, 1, O, "new"},    {3, 19, 19, 3, 1, O, "new"},
    {3, 20, 20, 3, 1, O, "prior"},
};

std::vector<KnownResult> expand() {
  std::vector<KnownResult> out;
  for (const Entry& e : kTable) {
    for (int m = e.m_lo; m <= e.m_hi; ++m) {
      out.push_back({e.k, m, Rational(e.num, e.den), e.nature, e.source});
    }
  }
  return out;
}

}  // namespace

const std::vector<KnownResult>& known_results() {
  static const std::vector<KnownResult> table = expand();
  return table;
}

std::optional<KnownResult> known_lookup(int k, int m) {
  if (k == 1 && m >= 10) {
    return KnownResult{k, m, f_value(1, m, ell_argmin(1, m)), Nature::over, "k1-general"};
  }
  const auto& table = known_results();
  auto it = std::find_if(table.begin(), table.end(),
                         [&](const KnownResult& r) { return r.k == k && r.m == m; });
  if (it == table.end()) return std::nullopt;
  return *it;
}

}  // namespace hampower

#include "weyl/multi_index.hpp"

namespace weyl {

bool lex_less(const MultiIndex& a, const MultiIndex& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("lex_less: arity mismatch");
  for (int i = 0; i < a.arity(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
  const int da = a.sum();
  const int db = b.sum();
  if (da != db) return da < db;
  return lex_less(a, b);
}

std::vector<MultiIndex> all_upto(const MultiIndex& bound) {
  std::vector<MultiIndex> out;
  for_each_upto(bound, [&](const MultiIndex& g) { out.push_back(g); });
  return out;
}

}  // namespace weyl

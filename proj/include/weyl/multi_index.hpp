#pragma once

#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace weyl {

/// Exponent vector: fixed arity, non-negative integer entries.
class MultiIndex {
 public:
  explicit MultiIndex(int arity) : e_(check_arity(arity), 0) {}
  MultiIndex(std::initializer_list<int> entries) : e_(entries) { validate(); }
  explicit MultiIndex(std::vector<int> entries) : e_(std::move(entries)) { validate(); }

  /// epsilon_slot: the unit vector with a single 1 in position slot.
  static MultiIndex unit(int arity, int slot) {
    MultiIndex m(arity);
    m.set(slot, 1);
    return m;
  }

  int arity() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_.at(static_cast<size_t>(i)); }
  void set(int i, int v) {
    if (v < 0) throw std::invalid_argument("MultiIndex: negative entry");
    e_.at(static_cast<size_t>(i)) = v;
  }

  /// ||alpha|| = sum of entries.
  int sum() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_zero() const {
    for (int v : e_)
      if (v != 0) return false;
    return true;
  }

  /// Componentwise <=.
  bool leq(const MultiIndex& o) const {
    match(o);
    for (int i = 0; i < arity(); ++i)
      if (e_[static_cast<size_t>(i)] > o.e_[static_cast<size_t>(i)]) return false;
    return true;
  }

  MultiIndex plus(const MultiIndex& o) const {
    match(o);
    MultiIndex r(*this);
    for (int i = 0; i < arity(); ++i) r.e_[static_cast<size_t>(i)] += o.e_[static_cast<size_t>(i)];
    return r;
  }

  /// Componentwise difference; requires o.leq(*this).
  MultiIndex minus(const MultiIndex& o) const {
    match(o);
    MultiIndex r(*this);
    for (int i = 0; i < arity(); ++i) {
      r.e_[static_cast<size_t>(i)] -= o.e_[static_cast<size_t>(i)];
      if (r.e_[static_cast<size_t>(i)] < 0)
        throw std::invalid_argument("MultiIndex::minus: negative result");
    }
    return r;
  }

  MultiIndex min_with(const MultiIndex& o) const {
    match(o);
    MultiIndex r(*this);
    for (int i = 0; i < arity(); ++i)
      if (o.e_[static_cast<size_t>(i)] < r.e_[static_cast<size_t>(i)])
        r.e_[static_cast<size_t>(i)] = o.e_[static_cast<size_t>(i)];
    return r;
  }

  const std::vector<int>& entries() const { return e_; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  static int check_arity(int arity) {
    if (arity < 0) throw std::invalid_argument("MultiIndex: negative arity");
    return arity;
  }
  void validate() const {
    for (int v : e_)
      if (v < 0) throw std::invalid_argument("MultiIndex: negative entry");
  }
  void match(const MultiIndex& o) const {
    if (e_.size() != o.e_.size()) throw std::invalid_argument("MultiIndex: arity mismatch");
  }

  std::vector<int> e_;
};

bool lex_less(const MultiIndex& a, const MultiIndex& b);
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return graded_lex_less(a, b); }
};

/// Visit every g with 0 <= g <= bound componentwise (odometer order).
template <typename F>
void for_each_upto(const MultiIndex& bound, F&& visit) {
  MultiIndex g(bound.arity());
  for (;;) {
    visit(static_cast<const MultiIndex&>(g));
    int i = 0;
    while (i < bound.arity()) {
      if (g[i] < bound[i]) {
        g.set(i, g[i] + 1);
        break;
      }
      g.set(i, 0);
      ++i;
    }
    if (i == bound.arity()) return;
  }
}

/// All multi-indices 0 <= g <= bound, in odometer order.
std::vector<MultiIndex> all_upto(const MultiIndex& bound);

}  // namespace weyl

#include "cluscat/quiver.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cluscat {

IceQuiver::IceQuiver(int n_mutable, int n_frozen)
    : n_(n_mutable), m_(n_frozen), b_(size_t(n_mutable + n_frozen) * (n_mutable + n_frozen), 0) {
  assert(n_mutable >= 0 && n_frozen >= 0);
}

void IceQuiver::set_b(int i, int j, int value) {
  assert(i != j || value == 0);
  if (is_frozen(i) && is_frozen(j)) value = 0;
  b_[size_t(i) * total() + j] = value;
  b_[size_t(j) * total() + i] = -value;
}

IceQuiver IceQuiver::mutated(int k) const {
  if (is_frozen(k)) throw std::invalid_argument("cannot mutate a frozen vertex");
  IceQuiver q(n_, m_);
  const int t = total();
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      int v;
      if (i == k || j == k) {
        v = -b(i, j);
      } else {
        const int bik = b(i, k), bkj = b(k, j);
        const int sgn = bik > 0 ? 1 : bik < 0 ? -1 : 0;
        v = b(i, j) + sgn * std::max(0, bik * bkj);
      }
      if (q.is_frozen(i) && q.is_frozen(j)) v = 0;
      q.b_[size_t(i) * t + j] = v;
    }
  // skew-symmetry is preserved by the rule; check cheaply in debug builds
#ifndef NDEBUG
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) assert(q.b(i, j) == -q.b(j, i));
#endif
  return q;
}

bool IceQuiver::has_mutable_loops_or_two_cycles() const {
  for (int i = 0; i < n_; ++i)
    if (b(i, i) != 0) return true;
  // With the skew matrix encoding a 2-cycle cannot be represented; loops are
  // excluded above, so nothing further to check.
  return false;
}

std::vector<std::tuple<int, int, int>> IceQuiver::arrows() const {
  std::vector<std::tuple<int, int, int>> out;
  const int t = total();
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      if (b(i, j) > 0) out.emplace_back(i, j, b(i, j));
  return out;
}

std::string IceQuiver::to_dot(const std::vector<std::string>& names_in) const {
  std::vector<std::string> names = names_in;
  if (names.empty()) {
    for (int i = 0; i < n_; ++i) names.push_back("x" + std::to_string(i + 1));
    for (int i = 0; i < m_; ++i) names.push_back("p" + std::to_string(i + 1));
  }
  if (int(names.size()) != total()) throw std::invalid_argument("to_dot: wrong number of names");
  std::string s = "digraph {\n";
  for (int v = 0; v < total(); ++v) {
    s += "  \"" + names[v] + "\"";
    if (is_frozen(v)) s += " [shape=box]";
    s += ";\n";
  }
  for (const auto& [i, j, mult] : arrows())
    for (int c = 0; c < mult; ++c) s += "  \"" + names[i] + "\" -> \"" + names[j] + "\";\n";
  s += "}\n";
  return s;
}

IceQuiver IceQuiver::permuted(const std::vector<int>& perm) const {
  assert(int(perm.size()) == total());
  IceQuiver q(n_, m_);
  for (int i = 0; i < total(); ++i)
    for (int j = 0; j < total(); ++j) q.b_[size_t(i) * total() + j] = b(perm[i], perm[j]);
#ifndef NDEBUG
  for (int i = 0; i < total(); ++i) {
    // frozen status must be preserved by the permutation
    assert(is_frozen(perm[i]) == q.is_frozen(i));
  }
#endif
  return q;
}

}  // namespace cluscat

#include "cluscat/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cluscat {

int ivec_height(const IVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

IVec ivec_add(const IVec& a, const IVec& b) {
  assert(a.size() == b.size());
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IVec ivec_sub(const IVec& a, const IVec& b) {
  assert(a.size() == b.size());
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IVec ivec_neg(const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool ivec_is_zero(const IVec& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

std::optional<Family> family_from_letter(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return Family::A;
    case 'D': return Family::D;
    case 'E': return Family::E;
    default: return std::nullopt;
  }
}

DynkinDiagram DynkinDiagram::make(Family family, int rank) {
  DynkinDiagram d;
  d.family = family;
  d.rank = rank;
  auto edge = [&d](int i, int j) { d.edges.emplace_back(std::min(i, j), std::max(i, j)); };
  switch (family) {
    case Family::A:
      if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
      for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1);
      break;
    case Family::D:
      if (rank < 3) throw std::invalid_argument("type D needs rank >= 3");
      for (int i = 0; i + 1 < rank - 2; ++i) edge(i, i + 1);
      edge(rank - 3, rank - 2);
      edge(rank - 3, rank - 1);
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw std::invalid_argument("type E needs rank 6, 7 or 8");
      edge(0, 2);
      for (int i = 2; i + 1 < rank; ++i) edge(i, i + 1);
      edge(1, 3);
      break;
  }
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

bool DynkinDiagram::adjacent(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::vector<int> DynkinDiagram::neighbors(int i) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == i) out.push_back(b);
    if (b == i) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int DynkinDiagram::coxeter_number() const {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::D: return 2 * rank - 2;
    case Family::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
  }
  return 0;
}

std::vector<std::vector<int>> DynkinDiagram::automorphisms() const {
  std::vector<int> perm(rank);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (const auto& [a, b] : edges)
      if (!adjacent(perm[a], perm[b])) { ok = false; break; }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

// Canonical root order: by height, then reverse-lexicographic on the
// coefficient vector so roots supported on lower-index simples come first.
bool root_order(const IVec& a, const IVec& b) {
  const int ha = ivec_height(a), hb = ivec_height(b);
  if (ha != hb) return ha < hb;
  return a > b;
}

}  // namespace

RootSystem::RootSystem(DynkinDiagram diagram) : diagram_(std::move(diagram)) {
  const int n = diagram_.rank;
  std::set<IVec> closure;
  for (int i = 0; i < n; ++i) closure.insert(simple(i));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IVec> current(closure.begin(), closure.end());
    for (const IVec& r : current)
      for (int i = 0; i < n; ++i) {
        IVec s = simple_reflection(i, r);
        if (std::all_of(s.begin(), s.end(), [](int x) { return x >= 0; }) &&
            closure.insert(s).second)
          grew = true;
      }
  }
  positive_.assign(closure.begin(), closure.end());
  std::sort(positive_.begin(), positive_.end(), root_order);
  almost_positive_ = positive_;
  for (int i = 0; i < n; ++i) almost_positive_.push_back(ivec_neg(simple(i)));
}

IVec RootSystem::simple(int i) const {
  IVec e(diagram_.rank, 0);
  e[i] = 1;
  return e;
}

int RootSystem::pairing_with_simple(const IVec& a, int i) const {
  int p = 2 * a[i];
  for (int j : diagram_.neighbors(i)) p -= a[j];
  return p;
}

IVec RootSystem::simple_reflection(int i, const IVec& a) const {
  IVec r = a;
  r[i] -= pairing_with_simple(a, i);
  return r;
}

bool RootSystem::is_positive_root(const IVec& a) const {
  return std::binary_search(positive_.begin(), positive_.end(), a,
                            [](const IVec& x, const IVec& y) { return root_order(x, y); });
}

bool RootSystem::is_almost_positive(const IVec& a) const {
  return almost_positive_index(a) >= 0;
}

int RootSystem::almost_positive_index(const IVec& a) const {
  for (size_t k = 0; k < almost_positive_.size(); ++k)
    if (almost_positive_[k] == a) return int(k);
  return -1;
}

std::string RootSystem::root_string(const IVec& a) const {
  // negative simple
  for (int i = 0; i < diagram_.rank; ++i)
    if (a == ivec_neg(simple(i))) return "-a" + std::to_string(i + 1);
  std::string s;
  for (int i = 0; i < diagram_.rank; ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (a[i] != 1) s += std::to_string(a[i]);
    s += "a" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

std::optional<IVec> RootSystem::parse_root(const std::string& input) const {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) return std::nullopt;
  IVec a(diagram_.rank, 0);
  bool negative = false;
  size_t pos = 0;
  if (s[0] == '-') {
    negative = true;
    pos = 1;
  }
  while (pos < s.size()) {
    int mult = 1;
    size_t d0 = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > d0) mult = std::stoi(s.substr(d0, pos - d0));
    if (pos >= s.size() || s[pos] != 'a') return std::nullopt;
    ++pos;
    size_t i0 = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == i0) return std::nullopt;
    int idx = std::stoi(s.substr(i0, pos - i0));
    if (idx < 1 || idx > diagram_.rank) return std::nullopt;
    a[idx - 1] += mult;
    if (pos < s.size()) {
      if (s[pos] != '+') return std::nullopt;
      ++pos;
      if (pos == s.size()) return std::nullopt;
    }
  }
  if (negative) a = ivec_neg(a);
  if (!is_almost_positive(a)) return std::nullopt;
  return a;
}

DynkinQuiver DynkinQuiver::bipartite_default(DynkinDiagram diagram) {
  const int n = diagram.rank;
  std::vector<int> color(n, 0);
  color[0] = 1;
  // BFS over the tree
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : diagram.neighbors(v))
      if (color[w] == 0) {
        color[w] = -color[v];
        stack.push_back(w);
      }
  }
  DynkinQuiver q;
  q.arrows.reserve(diagram.edges.size());
  for (const auto& [i, j] : diagram.edges)
    q.arrows.emplace_back(color[i] == 1 ? i : j, color[i] == 1 ? j : i);
  q.diagram = std::move(diagram);
  return q;
}

std::optional<DynkinQuiver> DynkinQuiver::from_arrow_list(
    DynkinDiagram diagram, const std::vector<std::pair<int, int>>& arrows) {
  if (arrows.size() != diagram.edges.size()) return std::nullopt;
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : arrows) {
    if (a < 0 || b < 0 || a >= diagram.rank || b >= diagram.rank) return std::nullopt;
    if (!diagram.adjacent(a, b)) return std::nullopt;
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) return std::nullopt;
  }
  DynkinQuiver q;
  q.diagram = std::move(diagram);
  q.arrows = arrows;
  std::sort(q.arrows.begin(), q.arrows.end());
  return q;
}

bool DynkinQuiver::is_source(int v) const {
  return std::none_of(arrows.begin(), arrows.end(),
                      [v](const auto& a) { return a.second == v; });
}

bool DynkinQuiver::is_sink(int v) const {
  return std::none_of(arrows.begin(), arrows.end(),
                      [v](const auto& a) { return a.first == v; });
}

bool DynkinQuiver::is_bipartite() const {
  for (int v = 0; v < diagram.rank; ++v)
    if (!is_source(v) && !is_sink(v)) return false;
  return true;
}

std::vector<int> DynkinQuiver::eps() const {
  if (!is_bipartite()) throw std::invalid_argument("orientation is not bipartite");
  std::vector<int> e(diagram.rank);
  for (int v = 0; v < diagram.rank; ++v) e[v] = is_source(v) ? 1 : -1;
  return e;
}

DynkinQuiver DynkinQuiver::reversed() const {
  DynkinQuiver q;
  q.diagram = diagram;
  for (const auto& [a, b] : arrows) q.arrows.emplace_back(b, a);
  std::sort(q.arrows.begin(), q.arrows.end());
  return q;
}

std::vector<int> DynkinQuiver::out_neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : arrows)
    if (a == v) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> DynkinQuiver::in_neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : arrows)
    if (b == v) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> DynkinQuiver::topo_order() const {
  const int n = diagram.rank;
  std::vector<int> indeg(n, 0);
  for (const auto& [a, b] : arrows) {
    (void)a;
    ++indeg[b];
  }
  std::vector<int> order, ready;
  for (int v = n - 1; v >= 0; --v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), std::greater<int>());
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int w : out_neighbors(v))
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (int(order.size()) != n) throw std::logic_error("orientation has a cycle");
  return order;
}

IVec tau_eps(const RootSystem& rs, const DynkinQuiver& q, int eps_choice, const IVec& a) {
  if (eps_choice != 1 && eps_choice != -1)
    throw std::invalid_argument("eps_choice must be +1 or -1");
  if (!rs.is_almost_positive(a))
    throw std::invalid_argument("tau_eps needs an almost-positive root");
  const std::vector<int> e = q.eps();  // throws on non-bipartite
  for (int j = 0; j < rs.rank(); ++j)
    if (a == ivec_neg(rs.simple(j)) && e[j] == -eps_choice) return a;
  IVec r = a;
  for (int k = 0; k < rs.rank(); ++k)
    if (e[k] == eps_choice) r = rs.simple_reflection(k, r);
  if (!rs.is_almost_positive(r)) throw std::logic_error("tau_eps left the almost-positive roots");
  return r;
}

IVec tau_root(const RootSystem& rs, const DynkinQuiver& q, const IVec& a) {
  return tau_eps(rs, q, -1, tau_eps(rs, q, +1, a));
}

IVec tau_root_inverse(const RootSystem& rs, const DynkinQuiver& q, const IVec& a) {
  return tau_eps(rs, q, +1, tau_eps(rs, q, -1, a));
}

std::vector<std::vector<IVec>> tau_orbits(const RootSystem& rs, const DynkinQuiver& q) {
  std::vector<std::vector<IVec>> orbits;
  std::set<IVec> seen;
  for (const IVec& start : rs.almost_positive()) {
    if (seen.count(start)) continue;
    std::vector<IVec> orbit;
    IVec cur = start;
    do {
      orbit.push_back(cur);
      seen.insert(cur);
      cur = tau_root(rs, q, cur);
    } while (cur != start);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace cluscat

#pragma once
// ADE Dynkin diagrams, root systems, almost-positive roots, and the
// piecewise involutions tau_plus / tau_minus on them.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cluscat {

using IVec = std::vector<int>;

int ivec_height(const IVec& v);
IVec ivec_add(const IVec& a, const IVec& b);
IVec ivec_sub(const IVec& a, const IVec& b);
IVec ivec_neg(const IVec& a);
bool ivec_is_zero(const IVec& a);

enum class Family { A, D, E };

char family_letter(Family f);
std::optional<Family> family_from_letter(char c);

// Vertex numbering: A_n is the path 1-2-...-n. D_n is the chain 1-...-(n-2)
// with both n-1 and n attached to n-2. E_n is the chain 1-3-4-5-6(-7-8) with
// 2 attached to 4. All vertices are 0-indexed internally; strings and JSON
// use 1-based names.
struct DynkinDiagram {
  Family family;
  int rank;
  std::vector<std::pair<int, int>> edges;  // unordered, stored with first < second

  static DynkinDiagram make(Family family, int rank);
  bool adjacent(int i, int j) const;
  std::vector<int> neighbors(int i) const;
  int coxeter_number() const;
  // All permutations of the vertices preserving the edge set.
  std::vector<std::vector<int>> automorphisms() const;
};

// A root is its coefficient vector over the simple roots. Almost-positive
// means a positive root or the negative -alpha_i of a simple.
class RootSystem {
 public:
  explicit RootSystem(DynkinDiagram diagram);

  const DynkinDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank; }
  const std::vector<IVec>& positive_roots() const { return positive_; }
  const std::vector<IVec>& almost_positive() const { return almost_positive_; }

  IVec simple(int i) const;
  // Cartan pairing (a, alpha_i): 2*a_i - sum of a_j over neighbors j.
  int pairing_with_simple(const IVec& a, int i) const;
  // s_i(a) = a - (a, alpha_i) alpha_i
  IVec simple_reflection(int i, const IVec& a) const;

  bool is_positive_root(const IVec& a) const;
  bool is_almost_positive(const IVec& a) const;
  // Index in almost_positive(), -1 if absent.
  int almost_positive_index(const IVec& a) const;

  std::string root_string(const IVec& a) const;
  std::optional<IVec> parse_root(const std::string& s) const;

 private:
  DynkinDiagram diagram_;
  std::vector<IVec> positive_;
  std::vector<IVec> almost_positive_;
};

// An orientation of a Dynkin diagram: every diagram edge directed one way.
struct DynkinQuiver {
  DynkinDiagram diagram;
  std::vector<std::pair<int, int>> arrows;  // (from, to)

  // Two-color the tree starting with + at vertex 0; arrows run + -> -, so
  // every + vertex is a source and every - vertex a sink.
  static DynkinQuiver bipartite_default(DynkinDiagram diagram);
  static std::optional<DynkinQuiver> from_arrow_list(
      DynkinDiagram diagram, const std::vector<std::pair<int, int>>& arrows);

  bool is_source(int v) const;
  bool is_sink(int v) const;
  // Bipartite means every vertex is a source or a sink.
  bool is_bipartite() const;
  // Signs: +1 at sources, -1 at sinks. Only valid for bipartite orientations.
  std::vector<int> eps() const;
  DynkinQuiver reversed() const;
  std::vector<int> out_neighbors(int v) const;
  std::vector<int> in_neighbors(int v) const;
  // Vertices ordered so every arrow goes forward.
  std::vector<int> topo_order() const;
};

// tau_eps on almost-positive roots: -alpha_j with eps(j) = -eps_choice is
// fixed; everything else gets the product of the same-sign simple
// reflections (they commute).
IVec tau_eps(const RootSystem& rs, const DynkinQuiver& q, int eps_choice, const IVec& a);
// tau = tau_minus after tau_plus.
IVec tau_root(const RootSystem& rs, const DynkinQuiver& q, const IVec& a);
IVec tau_root_inverse(const RootSystem& rs, const DynkinQuiver& q, const IVec& a);
// Orbits of tau on almost_positive, each listed in cyclic order starting at
// the earliest root in the canonical order.
std::vector<std::vector<IVec>> tau_orbits(const RootSystem& rs, const DynkinQuiver& q);

}  // namespace cluscat

#pragma once
// Finite windows of the repetition quiver ZQ and its framed version, the
// sigma/tau maps on vertices and arrows, and mesh-category hom spaces by
// direct path enumeration modulo mesh relators.

#include <optional>
#include <string>
#include <vector>

#include "cluscat/exact.hpp"
#include "cluscat/root_system.hpp"

namespace cluscat {

struct RQVertex {
  int i = 0;      // diagram vertex
  int p = 0;      // repetition degree
  bool frozen = false;

  bool operator==(const RQVertex& o) const { return i == o.i && p == o.p && frozen == o.frozen; }
  bool operator!=(const RQVertex& o) const { return !(*this == o); }
  bool operator<(const RQVertex& o) const {
    if (p != o.p) return p < o.p;
    if (frozen != o.frozen) return !frozen;
    return i < o.i;
  }
  std::string to_string() const {
    return "(" + std::to_string(i + 1) + (frozen ? "'" : "") + "," + std::to_string(p) + ")";
  }
};

enum class ArrowKind { Slice, Sigma, Frame, SigmaFrame };

struct RQArrow {
  RQVertex src, dst;
  ArrowKind kind;
  int ref;  // underlying orientation arrow for Slice/Sigma, diagram vertex for the frame kinds
};

// The window p_min <= p <= p_max of ZQ (or of the framed quiver). Arrows:
//   Slice      (i,p) -> (j,p)    per orientation arrow i -> j
//   Sigma      (j,p-1) -> (i,p)  per orientation arrow i -> j
//   Frame      (i,p) -> (i',p)
//   SigmaFrame (i',p-1) -> (i,p)
// Between any ordered pair of vertices there is at most one arrow.
class TranslationQuiver {
 public:
  TranslationQuiver(DynkinQuiver orientation, int p_min, int p_max, bool framed);

  const DynkinQuiver& orientation() const { return q_; }
  int p_min() const { return p_min_; }
  int p_max() const { return p_max_; }
  bool framed() const { return framed_; }

  const std::vector<RQVertex>& vertices() const { return vertices_; }
  const std::vector<RQArrow>& arrows() const { return arrows_; }
  bool contains(const RQVertex& v) const;
  int vertex_index(const RQVertex& v) const;  // -1 if absent
  const std::vector<int>& out_arrows(const RQVertex& v) const;
  const std::vector<int>& in_arrows(const RQVertex& v) const;
  std::optional<int> arrow_between(const RQVertex& u, const RQVertex& v) const;

  // sigma on vertices: (i,n) -> (i',n-1), (i',n) -> (i,n); inverse likewise.
  static RQVertex sigma(const RQVertex& v);
  static RQVertex sigma_inverse(const RQVertex& v);
  static RQVertex tau(const RQVertex& v) { return {v.i, v.p - 1, v.frozen}; }
  static RQVertex tau_inverse(const RQVertex& v) { return {v.i, v.p + 1, v.frozen}; }

  // sigma on arrows: Slice -> Sigma (same p), Sigma -> Slice (p-1),
  // Frame -> SigmaFrame (same p), SigmaFrame -> Frame (p-1). Returns the
  // arrow index, or nullopt when the image leaves the window.
  std::optional<int> sigma_arrow(int arrow) const;

  std::string to_dot() const;

 private:
  DynkinQuiver q_;
  int p_min_, p_max_;
  bool framed_;
  std::vector<RQVertex> vertices_;
  std::vector<RQArrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
};

// All directed paths u -> v, each a list of arrow indices in order of
// traversal; includes the empty path when u == v. Deterministic order.
std::vector<std::vector<int>> enumerate_paths(const TranslationQuiver& t, const RQVertex& u,
                                              const RQVertex& v);

struct MeshHom {
  std::vector<std::vector<int>> paths;  // all directed paths x -> y
  int dim = 0;                          // paths modulo the mesh relator span
  std::vector<int> basis_paths;         // canonical representatives (indices into paths)
};

// Hom space in the mesh category (relators at non-frozen vertices; the
// regular Nakajima category when the window is framed). When relate_at_frozen
// is set, relators are also imposed at frozen vertices. Direct path
// enumeration; exponential in the window size, fine for small windows and an
// independent check on HomPropagation.
MeshHom mesh_hom(const TranslationQuiver& t, const RQVertex& x, const RQVertex& y,
                 bool relate_at_frozen = false);
int mesh_hom_dim(const TranslationQuiver& t, const RQVertex& x, const RQVertex& y,
                 bool relate_at_frozen = false);

// Hom(x,-) over the mesh quotient, knitted slice by slice in topological
// order. Each space is presented as a quotient of the direct sum of the
// spaces at the tails of the incoming arrows (plus a seed summand at x), the
// mesh relation at v killing the image of the space at tau(v). Every basis
// class keeps one path representative. kill marks vertices whose identity is
// collapsed to zero: their space is forced to zero after the quotient step,
// so nothing factors through them (the quotient by the ideal those identities
// generate).
class HomPropagation {
 public:
  HomPropagation(TranslationQuiver t, const RQVertex& x, bool relate_at_frozen = false,
                 const std::vector<char>* kill = nullptr);

  const TranslationQuiver& window() const { return t_; }
  const RQVertex& source() const { return x_; }

  int dim(const RQVertex& v) const;  // 0 when v is outside the window
  // basis class representatives at v, as arrow index lists (paths x -> v)
  const std::vector<std::vector<int>>& representatives(const RQVertex& v) const;
  // class of the path with the given arrow list, in the basis at its target
  RatVec path_class(const std::vector<int>& arrows) const;
  // the map S(src) -> S(dst) given by composing with the arrow
  const QMat& arrow_map(int arrow) const { return maps_[arrow]; }

 private:
  TranslationQuiver t_;
  RQVertex x_;
  std::vector<int> dim_;                             // by vertex index
  std::vector<std::vector<std::vector<int>>> reps_;  // by vertex index
  std::vector<QMat> maps_;                           // by arrow index
};

}  // namespace cluscat

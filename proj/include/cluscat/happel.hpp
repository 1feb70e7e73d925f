#pragma once
// The coordinate system on ZQ identifying vertices with shifted indecomposable
// modules: knitting of dimension vectors from the projective slice, the
// Nakayama map nu located through injectives, the suspension Sigma, the orbit
// map F(n) = Sigma^n tau^{-1}, and derived-category hom dimensions.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cluscat/quiver_rep.hpp"
#include "cluscat/translation_quiver.hpp"

namespace cluscat {

struct DerivedPoint {
  IVec root;  // positive root = dimension vector of the module
  int shift;  // suspension degree

  bool operator==(const DerivedPoint& o) const { return root == o.root && shift == o.shift; }
};

class HappelModel {
 public:
  // Window p_min <= p <= p_max of the unframed ZQ; must contain the
  // projective slice p = 0.
  HappelModel(const DynkinQuiver& q, int p_min, int p_max);

  const DynkinQuiver& cluster_quiver() const { return q_; }
  const DynkinQuiver& module_orientation() const { return model_; }
  const RootSystem& roots() const { return rs_; }
  const TranslationQuiver& window() const { return zq_; }

  const DerivedPoint& point(const RQVertex& v) const;
  // The window vertex carrying a given point, if inside.
  std::optional<RQVertex> vertex_of(const DerivedPoint& d) const;
  RQVertex projective_vertex(int i) const { return {i, 0, false}; }

  // nu(vertex of P(i)) = vertex of I(i), extended tau-equivariantly; Sigma =
  // tau^{-1} nu; F(n) = Sigma^n tau^{-1}. All partial at window edges: the
  // returned vertex may fall outside the window (check with window().contains).
  RQVertex nu(const RQVertex& v) const;
  RQVertex nu_inverse(const RQVertex& v) const;
  RQVertex suspension(const RQVertex& v) const;  // Sigma
  RQVertex suspension_inverse(const RQVertex& v) const;
  RQVertex orbit_map(const RQVertex& v, int f_power = 1) const;  // F(n) = Sigma^n tau^{-1}
  RQVertex orbit_map_inverse(const RQVertex& v, int f_power = 1) const;

  // dim Hom_D(H(x), H(y)): hom of the modules at equal shift, ext^1 at shift
  // difference one, zero otherwise.
  int hom_dim_DQ(const RQVertex& x, const RQVertex& y) const;

  const QuiverRep& module_at(const IVec& root) const;  // cached indecomposables

 private:
  DynkinQuiver q_, model_;
  RootSystem rs_;
  TranslationQuiver zq_;
  std::vector<DerivedPoint> points_;            // by window vertex index
  std::map<std::pair<IVec, int>, RQVertex> by_point_;
  std::vector<int> nu_row_, nu_off_;            // nu(i,p) = (nu_row[i], p + nu_off[i])
  mutable std::map<IVec, QuiverRep> module_cache_;
};

}  // namespace cluscat

#pragma once
// Admissible configurations of frozen vertices, hom spaces in the quotient of
// the regular Nakajima category by the dropped frozen identities, the orbit
// quiver under F = Sigma^n tau^{-1}, and hom dimensions in the completed
// orbit category.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cluscat/happel.hpp"

namespace cluscat {

// A set C of non-frozen vertices of ZQ, invariant under F: either all of
// them, or finitely many F-orbits given by representatives.
struct Configuration {
  bool full = true;
  std::vector<RQVertex> reps;  // non-frozen orbit representatives when !full

  static Configuration all() { return {}; }
  static Configuration orbits(std::vector<RQVertex> r) { return {false, std::move(r)}; }
};

struct AdmissibilityWitness {
  RQVertex vertex;  // non-frozen orbit representative
  RQVertex target;  // member of C with a nonzero unframed mesh hom from vertex
};

struct AdmissibilityReport {
  bool admissible = false;
  std::vector<AdmissibilityWitness> witnesses;
  std::optional<RQVertex> failing;  // first orbit representative with no witness
};

struct OrbitVertex {
  bool frozen = false;
  RQVertex rep;              // member with the smallest window index
  std::optional<IVec> root;  // label in Phi_{>=-1}; set when f_power == 1
  std::string label;         // "X(a1+a2)", "P(-a1)"; positional for higher powers
};

struct OrbitArrow {
  int src = 0, dst = 0, mult = 0;
};

struct OrbitQuiver {
  std::vector<OrbitVertex> vertices;
  std::vector<OrbitArrow> arrows;
  int non_frozen = 0;

  int index_of_label(const std::string& label) const;  // -1 if absent
  int arrow_mult(int src, int dst) const;
  std::string to_dot() const;
};

// Basis element of an orbit hom space Hom(a,b): lives in the component
// Hom(a.rep, F^l(b.rep)) and carries a path representative.
struct OrbitHomElem {
  int l = 0;
  std::vector<int> path;
};

// Window truncation of prod_l Hom(a.rep, F^l(b.rep)). The completed orbit
// category is Hom-infinite in general; certified means an all-zero slice
// above the source proves the remaining translates vanish, so the truncation
// is the whole space.
struct OrbitHom {
  std::vector<OrbitHomElem> basis;  // nonzero blocks concatenated, l ascending
  std::vector<int> l_values;        // l of each nonzero block (ascending)
  std::vector<int> block_offset;    // offset of each block in basis
  bool certified = false;
  int dim() const { return int(basis.size()); }
};

class ConfigCategory {
 public:
  ConfigCategory(const DynkinQuiver& q, Configuration c, int f_power = 1);

  const DynkinQuiver& cluster_quiver() const { return q_; }
  const HappelModel& model() const { return model_; }
  const TranslationQuiver& window() const { return framed_; }
  const TranslationQuiver& unframed_window() const { return unframed_; }
  int f_power() const { return f_power_; }
  const Configuration& configuration() const { return config_; }
  const AdmissibilityReport& admissibility() const { return adm_; }

  bool in_config(const RQVertex& v) const;  // non-frozen member of C
  bool kept(const RQVertex& v) const;       // vertex of the configuration quiver

  // F on window vertices and paths; frozen vertices travel with their
  // sigma-partners (prime coordinates map like the plain ones)
  RQVertex f_vertex(const RQVertex& v, int power = 1) const;
  std::vector<int> f_path(const std::vector<int>& arrows, int power) const;

  // Hom in the quotient of the regular Nakajima category by the identities
  // of the dropped frozen vertices
  int hom_dim_rc(const RQVertex& x, const RQVertex& y) const;
  const HomPropagation& hom_from(const RQVertex& x) const;  // cached

  const OrbitQuiver& orbit_quiver() const { return orbit_; }
  int orbit_of(const RQVertex& v) const;  // orbit index, -1 when not kept
  int orbit_by_label(const std::string& label) const { return orbit_.index_of_label(label); }
  std::string config_quiver_dot() const;  // window restricted to kept vertices

  // Window truncation of the completed orbit category hom; certified when an
  // all-zero slice above the source proves the tail vanishes.
  const OrbitHom& orbit_hom(int a, int b) const;  // cached
  // Total dimension; throws when the sum is not certifiably finite.
  int orbit_hom_dim(int a, int b) const;
  // Smallest p above x whose whole slice carries a zero hom space (zero
  // propagates to all later slices), if any exists inside the window.
  std::optional<int> hom_vanishing_slice(const RQVertex& x) const;
  // class of g after f, projected onto the recorded blocks of Hom(a,c);
  // f in Hom(a,b), g in Hom(b,c)
  RatVec compose(int a, int b, int c, const OrbitHomElem& f, const OrbitHomElem& g) const;

  // Stable-model homs: F-orbit sums of derived hom dimensions, always finite.
  // Both arguments non-frozen; zero if either is frozen.
  int cluster_hom_dim(int a, int b) const;
  int suspension_orbit(int b) const;  // orbit of Sigma(rep), b non-frozen
  int ext1_dim(int a, int b) const;   // cluster hom into the suspension

  SweepReport check_two_cy() const;
  SweepReport check_mesh_exactness() const;

 private:
  void build_orbits();
  void label_orbits();
  void check_admissibility();

  DynkinQuiver q_;
  int f_power_;
  Configuration config_;
  HappelModel model_;
  TranslationQuiver framed_, unframed_;

  std::vector<char> member_;  // framed window index -> non-frozen member of C
  std::vector<char> kill_;    // framed window index -> dropped frozen vertex
  std::vector<int> orbit_id_; // framed window index -> orbit index or -1
  OrbitQuiver orbit_;
  AdmissibilityReport adm_;

  mutable std::map<int, std::unique_ptr<HomPropagation>> prop_cache_;
  mutable std::map<int, std::optional<int>> zero_slice_cache_;
  mutable std::map<std::pair<int, int>, OrbitHom> ohom_cache_;
};

}  // namespace cluscat

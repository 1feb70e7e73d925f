#pragma once
// Seeds with tropical coefficients, seed mutation with exchange relations,
// finite-type exchange-graph closure, the universal-coefficients seed, and
// coefficient specialization.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cluscat/laurent.hpp"
#include "cluscat/quiver.hpp"
#include "cluscat/root_system.hpp"

namespace cluscat {

struct Seed {
  IceQuiver ice;
  std::vector<Laurent> cluster;  // n variables, Laurent in the initial cluster
  std::vector<IVec> y;           // n tropical exponent vectors over the m frozen gens

  int n() const { return ice.n(); }
  int m() const { return ice.m(); }
  // y recomputed from the frozen rows of the ice quiver; must equal y.
  std::vector<IVec> y_from_ice() const;
};

// One factor list of an exchange monomial: the mutable factors are recorded
// by value (the cluster variable as a Laurent polynomial), frozen factors by
// frozen slot index.
struct ExchangeMonomial {
  std::vector<std::pair<Laurent, int>> x_factors;  // (variable, multiplicity)
  std::vector<std::pair<int, int>> p_factors;      // (frozen slot, multiplicity)
  Laurent value(int nx, int np) const;
};

struct ExchangeRelation {
  int vertex;  // the mutated vertex
  Laurent old_var, new_var;
  ExchangeMonomial m_in;   // product over arrows into the vertex
  ExchangeMonomial m_out;  // product over arrows out of the vertex
};

// Renders "x(-a2)*x(a2) = p(-a2)*x(-a1) + p(a2)*p(a1+a2)". var_namer maps a
// cluster variable to its display name, frozen_names the frozen slots.
std::string relation_string(const ExchangeRelation& rel,
                            const std::function<std::string(const Laurent&)>& var_namer,
                            const std::vector<std::string>& frozen_names);

// Seed mutation; throws on frozen vertex or non-exact exchange division, and
// verifies the tropical y-dynamics against the mutated frozen rows.
Seed mutate_seed(const Seed& s, int k, ExchangeRelation* relation = nullptr);

// The universal-coefficients seed of a bipartite ADE orientation: one frozen
// vertex per almost-positive root (canonical order), frozen row entries
// eps(j) * [alpha : alpha_j].
Seed universal_seed(const RootSystem& rs, const DynkinQuiver& q);
// Frozen display names for it: "p(a1)", "p(-a2)", ...
std::vector<std::string> universal_frozen_names(const RootSystem& rs);
// Same mutable part with principal coefficients (identity frozen block).
Seed principal_seed(const RootSystem& rs, const DynkinQuiver& q);
// Same mutable part, no frozen vertices at all.
Seed trivial_seed(const RootSystem& rs, const DynkinQuiver& q);

// Root label of a cluster variable through its denominator vector: -alpha_i
// for the initial variable x_i, the positive root d for denominator d.
std::optional<IVec> variable_root_label(const RootSystem& rs, const Laurent& var);
// "x(a1+a2)" style name via variable_root_label.
std::string variable_name(const RootSystem& rs, const Laurent& var);

struct ExchangeGraph {
  std::vector<Seed> seeds;                  // BFS discovery order, start first
  std::vector<std::array<int, 3>> edges;    // (from seed, vertex, to seed), from < to once each
  std::vector<ExchangeRelation> relations;  // one per undirected edge, discovery order
  std::vector<Laurent> variables;           // distinct cluster variables, discovery order
};

// Breadth-first closure under mutation; seeds deduplicated by the unordered
// set of cluster variables. Throws std::runtime_error when the closure
// exceeds the seed budget.
ExchangeGraph exchange_graph(const Seed& start, size_t seed_budget = 100000);

struct SpecializationReport {
  bool ok = false;
  bool unique = false;
  // exponent vector over the target frozen generators, one per universal gen
  std::vector<IVec> generator_map;
  std::string failure;  // first violated condition when !ok
};

// Searches for the coefficient specialization from the universal seed to the
// target seed (same mutable quiver): a monomial map on generators making
// phi(y) = ybar and phi(y (+) 1) = ybar (+) 1 hold at every seed of the
// exchange graph, walking both graphs in lockstep.
SpecializationReport check_specialization(const Seed& universal, const Seed& target,
                                          size_t seed_budget = 100000);

}  // namespace cluscat

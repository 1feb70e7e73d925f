#pragma once
// Quiver representations over exact rationals: indecomposables via reflection
// functors, Hom bases by linear solve, Ext^1 through the Euler form, and the
// Coxeter-functor and tau-ext sweeps.

#include <string>
#include <vector>

#include "cluscat/exact.hpp"
#include "cluscat/root_system.hpp"

namespace cluscat {

// Right modules over the path algebra of q are modelled as representations of
// the reversed orientation, with linear maps directed along the reversed
// arrows. This is the single place the convention lives.
DynkinQuiver model_orientation(const DynkinQuiver& q);

struct QuiverRep {
  DynkinQuiver orientation;
  std::vector<int> dims;   // one per vertex
  std::vector<QMat> maps;  // maps[a]: dims[tail] -> dims[head], per orientation.arrows[a]

  bool is_zero() const;
  IVec dim_vector() const { return IVec(dims.begin(), dims.end()); }
  std::string to_string() const;  // debug dump with exact fractions
};

QuiverRep zero_rep(const DynkinQuiver& o);
QuiverRep simple_rep(const DynkinQuiver& o, int i);
// Paths out of i (projective cover of the simple at i); on a tree all
// dimensions are 0 or 1 and the maps are identities along reachable arrows.
QuiverRep projective_rep(const DynkinQuiver& o, int i);
// Paths into i (injective envelope of the simple at i).
QuiverRep injective_rep(const DynkinQuiver& o, int i);
QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);

struct HomSolution {
  int dimension = 0;
  // basis[k][v]: the vertex-v component of the k-th basis intertwiner,
  // a dims(N)[v] x dims(M)[v] matrix
  std::vector<std::vector<QMat>> basis;
};

// Solves f_head . M_a = N_a . f_tail over all arrows.
HomSolution hom_space(const QuiverRep& m, const QuiverRep& n);
int hom_dim(const QuiverRep& m, const QuiverRep& n);

// <d, e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j
Int euler_form(const IVec& d, const IVec& e, const DynkinQuiver& o);

// dim Ext^1 = dim Hom - <dim M, dim N>; asserts non-negativity.
int ext1_dim(const QuiverRep& m, const QuiverRep& n);

// BGP reflection at a sink (kernel construction) or source (cokernel
// construction) of m's orientation; the result lives over the orientation
// reversed at i. Throws std::invalid_argument otherwise.
QuiverRep reflection_functor(int i, const QuiverRep& m);

// The unique indecomposable with dimension vector alpha, built by a chain of
// reflection functors from a simple. Throws std::logic_error if the chain
// fails to terminate at alpha.
QuiverRep build_indecomposable(const DynkinQuiver& o, const IVec& alpha);

// Same dims, both bricks, one-dimensional Hom: isomorphism test adequate for
// rigid ADE indecomposables.
bool isomorphic_rigid(const QuiverRep& m, const QuiverRep& n);

struct SweepReport {
  int checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// For each sign eps and every positive non-simple alpha: the composite of
// reflection functors over the eps-colored vertices sends M_alpha to a
// representation with dimension vector tau_eps(alpha), and the double
// composite returns M_alpha up to isomorphism. Simples of color eps are
// annihilated by the composite. Representations live over the reversed
// orientation; eps colors refer to q itself.
SweepReport verify_coxeter_lemma(const RootSystem& rs, const DynkinQuiver& q);

// For every positive alpha and source i of q (sink i of q respectively):
//   [tau_+(alpha) : alpha_i] = ext1(M_alpha, S_i) - hom(M_alpha, S_i)
//   [tau_-(alpha) : alpha_i] = ext1(S_i, M_alpha) - hom(S_i, M_alpha)
// over the reversed orientation. The hom term vanishes unless alpha = alpha_i,
// where it corrects the sign of the lost simple.
SweepReport verify_tau_ext(const RootSystem& rs, const DynkinQuiver& q);

}  // namespace cluscat

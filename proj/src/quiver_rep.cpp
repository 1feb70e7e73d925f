#include "cluscat/quiver_rep.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace cluscat {

DynkinQuiver model_orientation(const DynkinQuiver& q) { return q.reversed(); }

bool QuiverRep::is_zero() const {
  for (int d : dims)
    if (d != 0) return false;
  return true;
}

std::string QuiverRep::to_string() const {
  std::ostringstream os;
  os << "dims (";
  for (size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << ")";
  for (size_t a = 0; a < orientation.arrows.size(); ++a) {
    const auto [s, t] = orientation.arrows[a];
    os << "\n  " << s + 1 << "->" << t + 1 << ":";
    const QMat& m = maps[a];
    for (int r = 0; r < m.rows(); ++r) {
      os << " [";
      for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c).get_str();
      os << "]";
    }
  }
  return os.str();
}

namespace {

QuiverRep make_rep(const DynkinQuiver& o, std::vector<int> dims) {
  QuiverRep r;
  r.orientation = o;
  r.dims = std::move(dims);
  for (const auto& [s, t] : o.arrows) r.maps.emplace_back(r.dims[t], r.dims[s]);
  return r;
}

// Orientation of o with every arrow at vertex i flipped.
DynkinQuiver reversed_at(const DynkinQuiver& o, int i) {
  DynkinQuiver r = o;
  for (auto& [s, t] : r.arrows)
    if (s == i || t == i) std::swap(s, t);
  return r;
}

}  // namespace

QuiverRep zero_rep(const DynkinQuiver& o) {
  return make_rep(o, std::vector<int>(o.diagram.rank, 0));
}

QuiverRep simple_rep(const DynkinQuiver& o, int i) {
  std::vector<int> dims(o.diagram.rank, 0);
  dims[i] = 1;
  return make_rep(o, std::move(dims));
}

namespace {

// 0/1 dimension vector of directed reachability from i (forward or backward);
// on a tree the reachable arrows carry identity maps.
QuiverRep path_closure_rep(const DynkinQuiver& o, int i, bool forward) {
  const int n = o.diagram.rank;
  std::vector<int> dims(n, 0);
  dims[i] = 1;
  std::vector<int> stack{i};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : forward ? o.out_neighbors(v) : o.in_neighbors(v))
      if (!dims[w]) {
        dims[w] = 1;
        stack.push_back(w);
      }
  }
  QuiverRep r = make_rep(o, std::move(dims));
  for (size_t a = 0; a < o.arrows.size(); ++a) {
    const auto [s, t] = o.arrows[a];
    if (r.dims[s] && r.dims[t]) r.maps[a].at(0, 0) = 1;
  }
  return r;
}

}  // namespace

QuiverRep projective_rep(const DynkinQuiver& o, int i) { return path_closure_rep(o, i, true); }
QuiverRep injective_rep(const DynkinQuiver& o, int i) { return path_closure_rep(o, i, false); }

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
  assert(a.orientation.arrows == b.orientation.arrows);
  std::vector<int> dims(a.dims.size());
  for (size_t v = 0; v < dims.size(); ++v) dims[v] = a.dims[v] + b.dims[v];
  QuiverRep r = make_rep(a.orientation, std::move(dims));
  for (size_t k = 0; k < r.maps.size(); ++k) {
    const QMat &ma = a.maps[k], &mb = b.maps[k];
    for (int i = 0; i < ma.rows(); ++i)
      for (int j = 0; j < ma.cols(); ++j) r.maps[k].at(i, j) = ma.at(i, j);
    for (int i = 0; i < mb.rows(); ++i)
      for (int j = 0; j < mb.cols(); ++j)
        r.maps[k].at(ma.rows() + i, ma.cols() + j) = mb.at(i, j);
  }
  return r;
}

HomSolution hom_space(const QuiverRep& m, const QuiverRep& n) {
  assert(m.orientation.arrows == n.orientation.arrows);
  const int nv = int(m.dims.size());

  // unknowns: f_v entry (r, c), vertex blocks in order
  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
  const int ncols = offset[nv];
  int nrows = 0;
  for (const auto& [s, t] : m.orientation.arrows) nrows += n.dims[t] * m.dims[s];

  QMat phi(nrows, ncols);
  int row = 0;
  for (size_t a = 0; a < m.orientation.arrows.size(); ++a) {
    const auto [s, t] = m.orientation.arrows[a];
    // (f_t . M_a - N_a . f_s)[r, c] = 0
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < m.dims[s]; ++c, ++row) {
        for (int k = 0; k < m.dims[t]; ++k)
          phi.at(row, offset[t] + r * m.dims[t] + k) += m.maps[a].at(k, c);
        for (int k = 0; k < n.dims[s]; ++k)
          phi.at(row, offset[s] + k * m.dims[s] + c) -= n.maps[a].at(r, k);
      }
  }
  assert(row == nrows);

  HomSolution sol;
  const QMat ker = phi.kernel();
  sol.dimension = ker.cols();
  for (int k = 0; k < ker.cols(); ++k) {
    std::vector<QMat> f;
    for (int v = 0; v < nv; ++v) {
      QMat fv(n.dims[v], m.dims[v]);
      for (int r = 0; r < n.dims[v]; ++r)
        for (int c = 0; c < m.dims[v]; ++c)
          fv.at(r, c) = ker.at(offset[v] + r * m.dims[v] + c, k);
      f.push_back(std::move(fv));
    }
    sol.basis.push_back(std::move(f));
  }
  return sol;
}

int hom_dim(const QuiverRep& m, const QuiverRep& n) { return hom_space(m, n).dimension; }

Int euler_form(const IVec& d, const IVec& e, const DynkinQuiver& o) {
  Int v = 0;
  for (size_t i = 0; i < d.size(); ++i) v += Int(d[i]) * Int(e[i]);
  for (const auto& [s, t] : o.arrows) v -= Int(d[s]) * Int(e[t]);
  return v;
}

int ext1_dim(const QuiverRep& m, const QuiverRep& n) {
  const Int e = Int(hom_dim(m, n)) - euler_form(m.dim_vector(), n.dim_vector(), m.orientation);
  if (e < 0) throw std::logic_error("negative Ext^1 dimension; orientation convention bug");
  return int(e.get_si());
}

QuiverRep reflection_functor(int i, const QuiverRep& m) {
  const DynkinQuiver& o = m.orientation;
  const int nv = int(m.dims.size());
  if (i < 0 || i >= nv) throw std::invalid_argument("reflection vertex out of range");
  const bool sink = o.is_sink(i), source = o.is_source(i);
  if (!sink && !source) throw std::invalid_argument("reflection vertex is neither sink nor source");

  // arrows at i, with their offsets in the stacked neighbour space
  std::vector<size_t> at_i;
  std::vector<int> block(o.arrows.size(), -1);
  int edim = 0;
  for (size_t a = 0; a < o.arrows.size(); ++a) {
    const auto [s, t] = o.arrows[a];
    if (s == i || t == i) {
      block[a] = edim;
      edim += m.dims[s == i ? t : s];
      at_i.push_back(a);
    }
  }

  std::vector<int> dims = m.dims;
  QuiverRep r;
  r.orientation = reversed_at(o, i);

  if (sink) {
    // new space = ker( stacked neighbours -> M_i )
    QMat g(m.dims[i], edim);
    for (size_t a : at_i) {
      const QMat& ma = m.maps[a];
      for (int rr = 0; rr < ma.rows(); ++rr)
        for (int cc = 0; cc < ma.cols(); ++cc) g.at(rr, block[a] + cc) = ma.at(rr, cc);
    }
    const QMat ker = g.kernel();
    dims[i] = ker.cols();
    r.dims = dims;
    for (size_t a = 0; a < o.arrows.size(); ++a) {
      const auto [s, t] = o.arrows[a];
      if (block[a] < 0) {
        r.maps.push_back(m.maps[a]);
        continue;
      }
      // reversed arrow i -> s carries the block row of the kernel inclusion
      QMat f(m.dims[s], ker.cols());
      for (int rr = 0; rr < m.dims[s]; ++rr)
        for (int cc = 0; cc < ker.cols(); ++cc) f.at(rr, cc) = ker.at(block[a] + rr, cc);
      r.maps.push_back(std::move(f));
      (void)t;
    }
  } else {
    // new space = coker( M_i -> stacked neighbours )
    std::vector<RatVec> relations;
    for (int c = 0; c < m.dims[i]; ++c) {
      RatVec v(edim);
      for (size_t a : at_i) {
        const QMat& ma = m.maps[a];
        for (int rr = 0; rr < ma.rows(); ++rr) v[block[a] + rr] = ma.at(rr, c);
      }
      relations.push_back(std::move(v));
    }
    QuotientSpace quot(edim, relations);
    dims[i] = quot.dim();
    r.dims = dims;
    for (size_t a = 0; a < o.arrows.size(); ++a) {
      const auto [s, t] = o.arrows[a];
      if (block[a] < 0) {
        r.maps.push_back(m.maps[a]);
        continue;
      }
      // reversed arrow t -> i carries inclusion-then-project
      QMat f(quot.dim(), m.dims[t]);
      for (int cc = 0; cc < m.dims[t]; ++cc) {
        RatVec v(edim);
        v[block[a] + cc] = 1;
        RatVec p = quot.project(v);
        for (int rr = 0; rr < quot.dim(); ++rr) f.at(rr, cc) = p[rr];
      }
      r.maps.push_back(std::move(f));
      (void)s;
    }
  }
  return r;
}

QuiverRep build_indecomposable(const DynkinQuiver& o, const IVec& alpha) {
  const int n = o.diagram.rank;
  RootSystem rs(o.diagram);
  if (!rs.is_positive_root(alpha))
    throw std::invalid_argument("dimension vector is not a positive root");

  // admissible sink word: reverse topological order, repeated cyclically
  std::vector<int> pass = o.topo_order();
  std::reverse(pass.begin(), pass.end());
  const int limit = n * (o.diagram.coxeter_number() + 1);

  // find t with s_{w1}...s_{w(t-1)}(e_{wt}) = alpha
  std::vector<int> word;
  {
    IVec target = alpha;  // peel reflections off the left instead
    int steps = 0;
    bool found = false;
    while (steps < limit && !found) {
      for (int v : pass) {
        word.push_back(v);
        ++steps;
        if (target == rs.simple(v)) {
          found = true;
          break;
        }
        target = rs.simple_reflection(v, target);
        if (!rs.is_positive_root(target))
          throw std::logic_error("reflection chain left the positive roots");
        if (steps >= limit) break;
      }
    }
    if (!found) throw std::logic_error("reflection chain failed to reach a simple root");
  }

  // orientation after the first t-1 reversals
  DynkinQuiver cur = o;
  for (size_t j = 0; j + 1 < word.size(); ++j) cur = reversed_at(cur, word[j]);
  QuiverRep m = simple_rep(cur, word.back());
  for (size_t j = word.size() - 1; j-- > 0;) {
    assert(m.orientation.is_source(word[j]));
    m = reflection_functor(word[j], m);
  }

  if (m.dim_vector() != alpha)
    throw std::logic_error("reflection chain terminated with the wrong dimension vector");
  if (hom_dim(m, m) != 1) throw std::logic_error("constructed representation is not a brick");
  return m;
}

bool isomorphic_rigid(const QuiverRep& m, const QuiverRep& n) {
  if (m.dims != n.dims) return false;
  if (m.is_zero()) return true;
  return hom_dim(m, m) == 1 && hom_dim(n, n) == 1 && hom_dim(m, n) >= 1;
}

SweepReport verify_coxeter_lemma(const RootSystem& rs, const DynkinQuiver& q) {
  SweepReport rep;
  const std::vector<int> eps = q.eps();
  const DynkinQuiver model = model_orientation(q);

  for (int sign : {+1, -1}) {
    std::vector<int> verts;
    for (int v = 0; v < rs.rank(); ++v)
      if (eps[v] == sign) verts.push_back(v);

    for (const IVec& alpha : rs.positive_roots()) {
      if (ivec_height(alpha) == 1) {
        // color-eps simples are annihilated by the composite
        int v = -1;
        for (int j = 0; j < rs.rank(); ++j)
          if (alpha[j] == 1) v = j;
        if (eps[v] != sign) continue;
        QuiverRep m = simple_rep(model, v);
        for (int w : verts) m = reflection_functor(w, m);
        ++rep.checked;
        if (!m.is_zero())
          rep.violations.push_back("composite does not annihilate the color-" +
                                   std::string(sign > 0 ? "plus" : "minus") + " simple at " +
                                   std::to_string(v + 1));
        continue;
      }

      QuiverRep m = build_indecomposable(model, alpha);
      QuiverRep once = m;
      for (int w : verts) once = reflection_functor(w, once);
      const IVec want = tau_eps(rs, q, sign, alpha);
      ++rep.checked;
      if (once.dim_vector() != want) {
        rep.violations.push_back("composite dims differ from tau at " + rs.root_string(alpha));
        continue;
      }
      QuiverRep twice = once;
      for (int w : verts) twice = reflection_functor(w, twice);
      ++rep.checked;
      if (!isomorphic_rigid(twice, m))
        rep.violations.push_back("double composite not isomorphic at " + rs.root_string(alpha));
    }
  }
  return rep;
}

SweepReport verify_tau_ext(const RootSystem& rs, const DynkinQuiver& q) {
  SweepReport rep;
  const std::vector<int> eps = q.eps();
  const DynkinQuiver model = model_orientation(q);

  for (const IVec& alpha : rs.positive_roots()) {
    const QuiverRep m = build_indecomposable(model, alpha);
    for (int i = 0; i < rs.rank(); ++i) {
      const QuiverRep s = simple_rep(model, i);
      int got;
      IVec tau;
      if (eps[i] == +1) {
        tau = tau_eps(rs, q, +1, alpha);
        got = ext1_dim(m, s) - hom_dim(m, s);
      } else {
        tau = tau_eps(rs, q, -1, alpha);
        got = ext1_dim(s, m) - hom_dim(s, m);
      }
      ++rep.checked;
      if (tau[i] != got)
        rep.violations.push_back("tau-ext mismatch at " + rs.root_string(alpha) + ", vertex " +
                                 std::to_string(i + 1));
    }
  }
  return rep;
}

}  // namespace cluscat

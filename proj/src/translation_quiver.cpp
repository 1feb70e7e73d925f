#include "cluscat/translation_quiver.hpp"

#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cluscat {

TranslationQuiver::TranslationQuiver(DynkinQuiver orientation, int p_min, int p_max, bool framed)
    : q_(std::move(orientation)), p_min_(p_min), p_max_(p_max), framed_(framed) {
  if (p_min > p_max) throw std::invalid_argument("empty repetition window");
  const int n = q_.diagram.rank;
  for (int p = p_min; p <= p_max; ++p) {
    for (int i = 0; i < n; ++i) vertices_.push_back({i, p, false});
    if (framed)
      for (int i = 0; i < n; ++i) vertices_.push_back({i, p, true});
  }

  auto push = [&](RQVertex src, RQVertex dst, ArrowKind kind, int ref) {
    if (!contains(src) || !contains(dst)) return;
    arrows_.push_back({src, dst, kind, ref});
  };
  for (int p = p_min; p <= p_max; ++p) {
    for (size_t a = 0; a < q_.arrows.size(); ++a) {
      const auto [i, j] = q_.arrows[a];
      push({i, p, false}, {j, p, false}, ArrowKind::Slice, int(a));
    }
    for (size_t a = 0; a < q_.arrows.size(); ++a) {
      const auto [i, j] = q_.arrows[a];
      push({j, p - 1, false}, {i, p, false}, ArrowKind::Sigma, int(a));
    }
    if (framed)
      for (int i = 0; i < n; ++i) {
        push({i, p, false}, {i, p, true}, ArrowKind::Frame, i);
        push({i, p - 1, true}, {i, p, false}, ArrowKind::SigmaFrame, i);
      }
  }

  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  std::map<std::pair<int, int>, int> seen;
  for (size_t k = 0; k < arrows_.size(); ++k) {
    const int s = vertex_index(arrows_[k].src), d = vertex_index(arrows_[k].dst);
    out_[s].push_back(int(k));
    in_[d].push_back(int(k));
    if (!seen.emplace(std::make_pair(s, d), int(k)).second)
      throw std::logic_error("parallel arrows in the repetition quiver window");
  }
}

bool TranslationQuiver::contains(const RQVertex& v) const {
  return v.p >= p_min_ && v.p <= p_max_ && v.i >= 0 && v.i < q_.diagram.rank &&
         (!v.frozen || framed_);
}

int TranslationQuiver::vertex_index(const RQVertex& v) const {
  if (!contains(v)) return -1;
  const int n = q_.diagram.rank;
  const int per_slice = framed_ ? 2 * n : n;
  return (v.p - p_min_) * per_slice + (v.frozen ? n : 0) + v.i;
}

const std::vector<int>& TranslationQuiver::out_arrows(const RQVertex& v) const {
  const int k = vertex_index(v);
  if (k < 0) throw std::invalid_argument("vertex outside the window");
  return out_[k];
}

const std::vector<int>& TranslationQuiver::in_arrows(const RQVertex& v) const {
  const int k = vertex_index(v);
  if (k < 0) throw std::invalid_argument("vertex outside the window");
  return in_[k];
}

std::optional<int> TranslationQuiver::arrow_between(const RQVertex& u, const RQVertex& v) const {
  const int s = vertex_index(u);
  if (s < 0) return std::nullopt;
  for (int a : out_[s])
    if (arrows_[a].dst == v) return a;
  return std::nullopt;
}

RQVertex TranslationQuiver::sigma(const RQVertex& v) {
  if (v.frozen) return {v.i, v.p, false};
  return {v.i, v.p - 1, true};
}

RQVertex TranslationQuiver::sigma_inverse(const RQVertex& v) {
  if (v.frozen) return {v.i, v.p + 1, false};
  return {v.i, v.p, true};
}

std::optional<int> TranslationQuiver::sigma_arrow(int arrow) const {
  const RQArrow& a = arrows_[arrow];
  RQVertex src, dst;
  switch (a.kind) {
    case ArrowKind::Slice: {  // (i,p)->(j,p)  =>  (j,p-1)->(i,p)
      src = {a.dst.i, a.dst.p - 1, false};
      dst = {a.src.i, a.src.p, false};
      break;
    }
    case ArrowKind::Sigma: {  // (j,p-1)->(i,p)  =>  (i,p-1)->(j,p-1)
      src = {a.dst.i, a.dst.p - 1, false};
      dst = {a.src.i, a.src.p, false};
      break;
    }
    case ArrowKind::Frame: {  // (i,p)->(i',p)  =>  (i',p-1)->(i,p)
      src = {a.ref, a.src.p - 1, true};
      dst = {a.ref, a.src.p, false};
      break;
    }
    case ArrowKind::SigmaFrame: {  // (i',p-1)->(i,p)  =>  (i,p-1)->(i',p-1)
      src = {a.ref, a.src.p, false};
      dst = {a.ref, a.src.p, true};
      break;
    }
  }
  auto found = arrow_between(src, dst);
  assert(!found || (arrows_[*found].ref == a.ref));
  return found;
}

std::string TranslationQuiver::to_dot() const {
  std::ostringstream os;
  os << "digraph {\n  rankdir=LR;\n";
  for (const RQVertex& v : vertices_) {
    os << "  \"" << v.to_string() << "\"";
    if (v.frozen) os << " [shape=box]";
    os << ";\n";
  }
  for (const RQArrow& a : arrows_)
    os << "  \"" << a.src.to_string() << "\" -> \"" << a.dst.to_string() << "\";\n";
  os << "}\n";
  return os.str();
}

std::vector<std::vector<int>> enumerate_paths(const TranslationQuiver& t, const RQVertex& u,
                                              const RQVertex& v) {
  if (!t.contains(u) || !t.contains(v)) throw std::invalid_argument("vertex outside the window");
  std::vector<std::vector<int>> paths;
  std::vector<int> cur;
  // p never decreases along arrows, so recursion depth is bounded
  auto dfs = [&](auto&& self, const RQVertex& at) -> void {
    if (at == v) paths.push_back(cur);
    if (at.p > v.p) return;
    for (int a : t.out_arrows(at)) {
      const RQArrow& ar = t.arrows()[a];
      if (ar.dst.p > v.p) continue;
      cur.push_back(a);
      self(self, ar.dst);
      cur.pop_back();
    }
  };
  dfs(dfs, u);
  return paths;
}

MeshHom mesh_hom(const TranslationQuiver& t, const RQVertex& x, const RQVertex& y,
                 bool relate_at_frozen) {
  MeshHom result;
  result.paths = enumerate_paths(t, x, y);
  const int np = int(result.paths.size());
  std::map<std::vector<int>, int> path_index;
  for (int k = 0; k < np; ++k) path_index.emplace(result.paths[k], k);

  // u . r_z . v for every mesh vertex z with x -> tau(z) reachable;
  // rows are sparse (one entry per relator term) and stream into an
  // incremental rref
  SparseRowSpan span;
  for (const RQVertex& z : t.vertices()) {
    if (z.frozen && !relate_at_frozen) continue;
    if (z.p <= x.p || z.p > y.p) continue;
    if (!t.contains(TranslationQuiver::tau(z))) continue;
    const auto front = enumerate_paths(t, x, TranslationQuiver::tau(z));
    if (front.empty()) continue;
    const auto back = enumerate_paths(t, z, y);
    if (back.empty()) continue;
    // relator: sum over in-arrows beta of z of beta . sigma(beta)
    std::vector<std::pair<int, int>> terms;  // (sigma(beta), beta)
    for (int b : t.in_arrows(z)) {
      auto sb = t.sigma_arrow(b);
      if (!sb) throw std::logic_error("mesh relator leaves the window");
      terms.emplace_back(*sb, b);
    }
    for (const auto& v : front)
      for (const auto& u : back) {
        std::map<int, Rat> row;
        for (const auto& [sb, b] : terms) {
          std::vector<int> whole = v;
          whole.push_back(sb);
          whole.push_back(b);
          whole.insert(whole.end(), u.begin(), u.end());
          auto it = path_index.find(whole);
          if (it == path_index.end()) throw std::logic_error("relator term is not a path");
          row[it->second] += 1;
        }
        span.add(std::move(row));
      }
  }

  result.dim = np - span.dim();
  std::vector<int> basis;
  const std::vector<int> piv = span.pivots();
  for (int k = 0, pk = 0; k < np; ++k) {
    if (pk < int(piv.size()) && piv[pk] == k) {
      ++pk;
    } else {
      basis.push_back(k);
    }
  }
  result.basis_paths = std::move(basis);
  return result;
}

int mesh_hom_dim(const TranslationQuiver& t, const RQVertex& x, const RQVertex& y,
                 bool relate_at_frozen) {
  if (t.vertex_index(x) < 0 || t.vertex_index(y) < 0) return 0;
  return HomPropagation(t, x, relate_at_frozen).dim(y);
}

HomPropagation::HomPropagation(TranslationQuiver t, const RQVertex& x, bool relate_at_frozen,
                               const std::vector<char>* kill)
    : t_(std::move(t)), x_(x) {
  const int nv = int(t_.vertices().size());
  if (t_.vertex_index(x_) < 0) throw std::invalid_argument("source vertex outside the window");
  if (kill && int(kill->size()) != nv) throw std::invalid_argument("kill mask size mismatch");
  dim_.assign(nv, 0);
  reps_.assign(nv, {});
  maps_.assign(t_.arrows().size(), QMat());

  // slice by slice; within a slice non-frozen vertices in topological order
  // of the orientation, then frozen ones (their only incoming arrows are the
  // frame arrows from the same slice)
  const std::vector<int> topo = t_.orientation().topo_order();
  for (int p = t_.p_min(); p <= t_.p_max(); ++p) {
    std::vector<RQVertex> slice;
    for (int i : topo) slice.push_back({i, p, false});
    if (t_.framed())
      for (int i = 0; i < t_.orientation().diagram.rank; ++i) slice.push_back({i, p, true});

    for (const RQVertex& v : slice) {
      const int vi = t_.vertex_index(v);
      const std::vector<int>& in = t_.in_arrows(v);

      // direct sum of the spaces at the tails, plus a seed line at x
      std::vector<int> offset(in.size() + 1, 0);
      for (size_t a = 0; a < in.size(); ++a)
        offset[a + 1] = offset[a] + dim_[t_.vertex_index(t_.arrows()[in[a]].src)];
      const bool seed = (v == x_);
      const int total = offset[in.size()] + (seed ? 1 : 0);

      // mesh relation at v: the image of S(tau v) under (sigma beta)_beta
      std::vector<RatVec> relations;
      if (!v.frozen || relate_at_frozen) {
        const RQVertex tv = TranslationQuiver::tau(v);
        const int tvi = t_.vertex_index(tv);
        if (tvi >= 0 && dim_[tvi] > 0) {
          for (int k = 0; k < dim_[tvi]; ++k) {
            RatVec row(total);
            for (size_t a = 0; a < in.size(); ++a) {
              auto sb = t_.sigma_arrow(in[a]);
              if (!sb) throw std::logic_error("mesh relator leaves the window");
              const QMat& m = maps_[*sb];
              for (int r = 0; r < m.rows(); ++r) row[offset[a] + r] += m.at(r, k);
            }
            relations.push_back(std::move(row));
          }
        }
      }

      QuotientSpace quot(total, relations);
      const bool dead = kill && (*kill)[vi];
      dim_[vi] = dead ? 0 : quot.dim();

      if (!dead) {
        for (int f : quot.free_cols()) {
          if (seed && f == offset[in.size()]) {
            reps_[vi].push_back({});
            continue;
          }
          size_t a = 0;
          while (a + 1 < in.size() && offset[a + 1] <= f) ++a;
          std::vector<int> rep = reps_[t_.vertex_index(t_.arrows()[in[a]].src)][f - offset[a]];
          rep.push_back(in[a]);
          reps_[vi].push_back(std::move(rep));
        }
      }

      for (size_t a = 0; a < in.size(); ++a) {
        const int sdim = dim_[t_.vertex_index(t_.arrows()[in[a]].src)];
        QMat m(dim_[vi], sdim);
        for (int j = 0; j < sdim; ++j) {
          RatVec e(total);
          e[offset[a] + j] = 1;
          RatVec c = quot.project(std::move(e));
          if (!dead)
            for (int r = 0; r < dim_[vi]; ++r) m.at(r, j) = c[r];
        }
        maps_[in[a]] = std::move(m);
      }
    }
  }
}

int HomPropagation::dim(const RQVertex& v) const {
  const int vi = t_.vertex_index(v);
  return vi < 0 ? 0 : dim_[vi];
}

const std::vector<std::vector<int>>& HomPropagation::representatives(const RQVertex& v) const {
  const int vi = t_.vertex_index(v);
  if (vi < 0) throw std::invalid_argument("vertex outside the window");
  return reps_[vi];
}

RatVec HomPropagation::path_class(const std::vector<int>& arrows) const {
  RQVertex at = x_;
  RatVec c(dim(x_));
  if (c.empty()) throw std::logic_error("source space is zero");
  c[0] = 1;
  for (int a : arrows) {
    const RQArrow& arr = t_.arrows()[a];
    if (arr.src != at) throw std::invalid_argument("arrow list is not a path from the source");
    c = maps_[a].apply(c);
    at = arr.dst;
  }
  return c;
}

}  // namespace cluscat

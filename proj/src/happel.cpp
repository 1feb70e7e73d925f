#include "cluscat/happel.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cluscat {

HappelModel::HappelModel(const DynkinQuiver& q, int p_min, int p_max)
    : q_(q),
      model_(model_orientation(q)),
      rs_(q.diagram),
      zq_(q, p_min, p_max, false) {
  if (p_min > 0 || p_max < 0)
    throw std::invalid_argument("window must contain the projective slice p = 0");
  const int n = q.diagram.rank;
  const std::vector<int> topo = q.topo_order();

  // signed classes: +dim at even shift, -dim at odd shift
  std::vector<IVec> kappa(zq_.vertices().size());
  std::vector<int> shift(zq_.vertices().size(), 0);
  auto at = [&](int i, int p) -> size_t { return size_t(zq_.vertex_index({i, p, false})); };

  for (int i = 0; i < n; ++i) kappa[at(i, 0)] = projective_rep(model_, i).dim_vector();

  auto classify = [&](const IVec& k) -> std::pair<IVec, bool> {
    if (rs_.is_positive_root(k)) return {k, true};
    const IVec neg = ivec_neg(k);
    if (rs_.is_positive_root(neg)) return {neg, false};
    throw std::logic_error("mesh propagation left the root system");
  };

  // forward: c(j,p) = sum_{l->j} c(l,p) + sum_{j->k} c(k,p-1) - c(j,p-1)
  for (int p = 1; p <= p_max; ++p)
    for (int j : topo) {
      IVec v = ivec_neg(kappa[at(j, p - 1)]);
      for (int l : q.in_neighbors(j)) v = ivec_add(v, kappa[at(l, p)]);
      for (int k : q.out_neighbors(j)) v = ivec_add(v, kappa[at(k, p - 1)]);
      kappa[at(j, p)] = v;
      const bool pos_now = classify(v).second;
      const bool pos_prev = classify(kappa[at(j, p - 1)]).second;
      shift[at(j, p)] = shift[at(j, p - 1)] + (pos_now == pos_prev ? 0 : 1);
    }
  // backward: c(j,p) = sum_{l->j} c(l,p+1) + sum_{j->k} c(k,p) - c(j,p+1)
  for (int p = -1; p >= p_min; --p)
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      const int j = *it;
      IVec v = ivec_neg(kappa[at(j, p + 1)]);
      for (int l : q.in_neighbors(j)) v = ivec_add(v, kappa[at(l, p + 1)]);
      for (int k : q.out_neighbors(j)) v = ivec_add(v, kappa[at(k, p)]);
      kappa[at(j, p)] = v;
      const bool pos_now = classify(v).second;
      const bool pos_next = classify(kappa[at(j, p + 1)]).second;
      shift[at(j, p)] = shift[at(j, p + 1)] - (pos_now == pos_next ? 0 : 1);
    }

  points_.resize(zq_.vertices().size());
  for (size_t k = 0; k < zq_.vertices().size(); ++k) {
    auto [root, positive] = classify(kappa[k]);
    if (positive != (shift[k] % 2 == 0))
      throw std::logic_error("sign of the propagated class disagrees with the shift parity");
    points_[k] = {root, shift[k]};
    if (!by_point_.emplace(std::make_pair(root, shift[k]), zq_.vertices()[k]).second)
      throw std::logic_error("two window vertices carry the same derived point");
  }

  // nu: the vertex of P(i) goes to the vertex of I(i)
  nu_row_.resize(n);
  nu_off_.resize(n);
  for (int i = 0; i < n; ++i) {
    const IVec inj = injective_rep(model_, i).dim_vector();
    auto v = vertex_of({inj, 0});
    if (!v) throw std::logic_error("injective module outside the window");
    nu_row_[i] = v->i;
    nu_off_[i] = v->p;
  }
}

const DerivedPoint& HappelModel::point(const RQVertex& v) const {
  const int k = zq_.vertex_index(v);
  if (k < 0) throw std::invalid_argument("vertex outside the window");
  return points_[k];
}

std::optional<RQVertex> HappelModel::vertex_of(const DerivedPoint& d) const {
  auto it = by_point_.find(std::make_pair(d.root, d.shift));
  if (it == by_point_.end()) return std::nullopt;
  return it->second;
}

RQVertex HappelModel::nu(const RQVertex& v) const {
  assert(!v.frozen);
  return {nu_row_[v.i], v.p + nu_off_[v.i], false};
}

RQVertex HappelModel::nu_inverse(const RQVertex& v) const {
  assert(!v.frozen);
  for (int i = 0; i < int(nu_row_.size()); ++i)
    if (nu_row_[i] == v.i) return {i, v.p - nu_off_[i], false};
  throw std::logic_error("nu is not surjective on rows");
}

RQVertex HappelModel::suspension(const RQVertex& v) const {
  return TranslationQuiver::tau_inverse(nu(v));
}

RQVertex HappelModel::suspension_inverse(const RQVertex& v) const {
  return nu_inverse(TranslationQuiver::tau(v));
}

RQVertex HappelModel::orbit_map(const RQVertex& v, int f_power) const {
  RQVertex r = TranslationQuiver::tau_inverse(v);
  for (int k = 0; k < f_power; ++k) r = suspension(r);
  return r;
}

RQVertex HappelModel::orbit_map_inverse(const RQVertex& v, int f_power) const {
  RQVertex r = v;
  for (int k = 0; k < f_power; ++k) r = suspension_inverse(r);
  return TranslationQuiver::tau(r);
}

const QuiverRep& HappelModel::module_at(const IVec& root) const {
  auto it = module_cache_.find(root);
  if (it == module_cache_.end())
    it = module_cache_.emplace(root, build_indecomposable(model_, root)).first;
  return it->second;
}

int HappelModel::hom_dim_DQ(const RQVertex& x, const RQVertex& y) const {
  const DerivedPoint &a = point(x), &b = point(y);
  if (b.shift == a.shift) return hom_dim(module_at(a.root), module_at(b.root));
  if (b.shift == a.shift + 1) return ext1_dim(module_at(a.root), module_at(b.root));
  return 0;
}

}  // namespace cluscat

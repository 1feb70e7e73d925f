#include "cluscat/config_cat.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cluscat {

namespace {

int window_top(const DynkinQuiver& q) { return 4 * q.diagram.coxeter_number() + 12; }

}  // namespace

int OrbitQuiver::index_of_label(const std::string& label) const {
  for (size_t k = 0; k < vertices.size(); ++k)
    if (vertices[k].label == label) return int(k);
  return -1;
}

int OrbitQuiver::arrow_mult(int src, int dst) const {
  for (const OrbitArrow& a : arrows)
    if (a.src == src && a.dst == dst) return a.mult;
  return 0;
}

std::string OrbitQuiver::to_dot() const {
  std::ostringstream out;
  out << "digraph orbit_quiver {\n";
  for (const OrbitVertex& v : vertices) {
    out << "  \"" << v.label << "\"";
    if (v.frozen) out << " [shape=box]";
    out << ";\n";
  }
  for (const OrbitArrow& a : arrows)
    for (int k = 0; k < a.mult; ++k)
      out << "  \"" << vertices[a.src].label << "\" -> \"" << vertices[a.dst].label << "\";\n";
  out << "}\n";
  return out.str();
}

ConfigCategory::ConfigCategory(const DynkinQuiver& q, Configuration c, int f_power)
    : q_(q),
      f_power_(f_power),
      config_(std::move(c)),
      model_(q_, -1, window_top(q_)),
      framed_(q_, -1, window_top(q_), true),
      unframed_(q_, -1, window_top(q_), false) {
  if (f_power_ < 1) throw std::invalid_argument("the orbit map power must be positive");

  const int nv = int(framed_.vertices().size());
  member_.assign(nv, 0);
  if (config_.full) {
    for (int k = 0; k < nv; ++k)
      if (!framed_.vertices()[k].frozen) member_[k] = 1;
  } else {
    for (RQVertex r : config_.reps) {
      if (r.frozen) throw std::invalid_argument("configuration members must be non-frozen");
      if (r.i < 0 || r.i >= q_.diagram.rank)
        throw std::invalid_argument("configuration vertex out of range");
      while (r.p < framed_.p_min()) r = f_vertex(r);
      while (r.p > framed_.p_max()) r = f_vertex(r, -1);
      if (framed_.vertex_index(r) < 0)
        throw std::invalid_argument("configuration representative cannot be normalized");
      for (RQVertex w = r; framed_.vertex_index(w) >= 0; w = f_vertex(w))
        member_[framed_.vertex_index(w)] = 1;
      for (RQVertex w = f_vertex(r, -1); framed_.vertex_index(w) >= 0; w = f_vertex(w, -1))
        member_[framed_.vertex_index(w)] = 1;
    }
  }

  kill_.assign(nv, 0);
  for (int k = 0; k < nv; ++k) {
    const RQVertex& v = framed_.vertices()[k];
    if (!v.frozen) continue;
    const int partner = framed_.vertex_index({v.i, v.p, false});
    if (partner < 0 || !member_[partner]) kill_[k] = 1;
  }

  build_orbits();
  label_orbits();
  check_admissibility();
}

bool ConfigCategory::in_config(const RQVertex& v) const {
  const int k = framed_.vertex_index(v);
  return k >= 0 && !v.frozen && member_[k];
}

bool ConfigCategory::kept(const RQVertex& v) const {
  const int k = framed_.vertex_index(v);
  return k >= 0 && !kill_[k];
}

RQVertex ConfigCategory::f_vertex(const RQVertex& v, int power) const {
  RQVertex w = v.frozen ? RQVertex{v.i, v.p, false} : v;
  for (int s = 0; s < power; ++s) w = model_.orbit_map(w, f_power_);
  for (int s = 0; s > power; --s) w = model_.orbit_map_inverse(w, f_power_);
  if (v.frozen) w.frozen = true;
  return w;
}

std::vector<int> ConfigCategory::f_path(const std::vector<int>& arrows, int power) const {
  std::vector<int> out;
  out.reserve(arrows.size());
  for (int a : arrows) {
    const RQArrow& arr = framed_.arrows()[a];
    auto mapped = framed_.arrow_between(f_vertex(arr.src, power), f_vertex(arr.dst, power));
    if (!mapped) throw std::runtime_error("translated path leaves the window");
    out.push_back(*mapped);
  }
  return out;
}

void ConfigCategory::build_orbits() {
  const int nv = int(framed_.vertices().size());
  std::vector<int> uf(nv);
  for (int k = 0; k < nv; ++k) uf[k] = k;
  auto find = [&](int k) {
    while (uf[k] != k) k = uf[k] = uf[uf[k]];
    return k;
  };

  for (int k = 0; k < nv; ++k) {
    if (kill_[k]) continue;
    const RQVertex w = f_vertex(framed_.vertices()[k]);
    const int wk = framed_.vertex_index(w);
    if (wk < 0) continue;
    if (kill_[wk]) throw std::logic_error("orbit map leaves the configuration quiver");
    uf[find(k)] = find(wk);
  }

  // orbit ids: non-frozen orbits first, then frozen, each by smallest member
  orbit_id_.assign(nv, -1);
  std::map<int, int> root_to_orbit;
  for (bool frozen : {false, true})
    for (int k = 0; k < nv; ++k) {
      if (kill_[k] || framed_.vertices()[k].frozen != frozen) continue;
      const int r = find(k);
      if (!root_to_orbit.count(r)) {
        root_to_orbit[r] = int(orbit_.vertices.size());
        orbit_.vertices.push_back({frozen, framed_.vertices()[k], std::nullopt, ""});
        if (!frozen) ++orbit_.non_frozen;
      }
      orbit_id_[k] = root_to_orbit[r];
    }

  std::map<std::pair<int, int>, int> mult;
  for (const OrbitVertex& ov : orbit_.vertices)
    for (int a : framed_.out_arrows(ov.rep)) {
      const RQVertex& head = framed_.arrows()[a].dst;
      if (!kept(head)) continue;
      ++mult[{orbit_id_[framed_.vertex_index(ov.rep)], orbit_id_[framed_.vertex_index(head)]}];
    }
  for (const auto& [sd, m] : mult) orbit_.arrows.push_back({sd.first, sd.second, m});
}

void ConfigCategory::label_orbits() {
  const RootSystem& rs = model_.roots();
  const int nv = int(framed_.vertices().size());

  if (f_power_ == 1 && q_.is_bipartite()) {
    std::map<IVec, int> projective_of;
    for (int i = 0; i < q_.diagram.rank; ++i)
      projective_of[projective_rep(model_.module_orientation(), i).dim_vector()] = i;

    // non-frozen orbits meet the fundamental domain {modules} u {P(i)[1]}
    // exactly once
    for (int k = 0; k < nv; ++k) {
      const RQVertex& v = framed_.vertices()[k];
      if (v.frozen || orbit_id_[k] < 0) continue;
      const DerivedPoint& pt = model_.point({v.i, v.p, false});
      std::optional<IVec> cand;
      if (pt.shift == 0) {
        cand = pt.root;
      } else if (pt.shift == 1 && projective_of.count(pt.root)) {
        IVec neg(q_.diagram.rank, 0);
        neg[projective_of[pt.root]] = -1;
        cand = neg;
      }
      if (!cand) continue;
      OrbitVertex& ov = orbit_.vertices[orbit_id_[k]];
      if (ov.root && *ov.root != *cand)
        throw std::logic_error("orbit meets the fundamental domain twice");
      ov.root = cand;
    }
    for (int a = 0; a < int(orbit_.vertices.size()); ++a) {
      OrbitVertex& ov = orbit_.vertices[a];
      if (ov.frozen) continue;
      if (!ov.root) throw std::logic_error("orbit misses the fundamental domain");
      ov.label = "X(" + rs.root_string(*ov.root) + ")";
    }
    if (orbit_.non_frozen != int(rs.almost_positive().size()))
      throw std::logic_error("non-frozen orbit count differs from the almost positive roots");

    // frozen labels: tau_minus of the sigma-partner label, cross-checked
    // against tau_plus of the sigma-inverse partner
    for (int a = 0; a < int(orbit_.vertices.size()); ++a) {
      OrbitVertex& ov = orbit_.vertices[a];
      if (!ov.frozen) continue;
      const RQVertex partner = TranslationQuiver::sigma(RQVertex{ov.rep.i, ov.rep.p + 1, false});
      if (partner != ov.rep) throw std::logic_error("sigma bookkeeping is inconsistent");
      const int down = orbit_of({ov.rep.i, ov.rep.p, false});
      const int up = orbit_of({ov.rep.i, ov.rep.p + 1, false});
      if (down < 0 || up < 0) throw std::logic_error("sigma partner escapes the window");
      const IVec want = tau_eps(rs, q_, -1, *orbit_.vertices[down].root);
      const IVec check = tau_eps(rs, q_, +1, *orbit_.vertices[up].root);
      if (want != check) throw std::logic_error("frozen label conventions disagree");
      ov.root = want;
      ov.label = "P(" + rs.root_string(want) + ")";
    }

    std::set<std::string> seen;
    for (const OrbitVertex& ov : orbit_.vertices)
      if (!seen.insert(ov.label).second) throw std::logic_error("duplicate orbit label");
  } else {
    for (OrbitVertex& ov : orbit_.vertices)
      ov.label = (ov.frozen ? "P" : "X") + ov.rep.to_string();
  }
}

void ConfigCategory::check_admissibility() {
  adm_.admissible = true;
  for (const OrbitVertex& ov : orbit_.vertices) {
    if (ov.frozen) continue;
    const RQVertex x = ov.rep;
    HomPropagation prop(unframed_, x);
    bool found = false;
    for (int k = 0; k < int(framed_.vertices().size()) && !found; ++k) {
      if (!member_[k]) continue;
      const RQVertex& c = framed_.vertices()[k];
      if (prop.dim(c) > 0) {
        adm_.witnesses.push_back({x, c});
        found = true;
      }
    }
    if (!found) {
      adm_.admissible = false;
      adm_.failing = x;
      return;
    }
  }
}

int ConfigCategory::hom_dim_rc(const RQVertex& x, const RQVertex& y) const {
  if (framed_.vertex_index(y) < 0) return 0;
  return hom_from(x).dim(y);
}

const HomPropagation& ConfigCategory::hom_from(const RQVertex& x) const {
  const int k = framed_.vertex_index(x);
  if (k < 0) throw std::invalid_argument("hom source outside the window");
  auto it = prop_cache_.find(k);
  if (it == prop_cache_.end())
    it = prop_cache_.emplace(k, std::make_unique<HomPropagation>(framed_, x, false, &kill_)).first;
  return *it->second;
}

int ConfigCategory::orbit_of(const RQVertex& v) const {
  const int k = framed_.vertex_index(v);
  return k < 0 ? -1 : orbit_id_[k];
}

std::string ConfigCategory::config_quiver_dot() const {
  std::ostringstream out;
  out << "digraph config_quiver {\n  rankdir=LR;\n";
  for (const RQVertex& v : framed_.vertices()) {
    if (!kept(v)) continue;
    out << "  \"" << v.to_string() << "\"";
    if (v.frozen) out << " [shape=box]";
    out << ";\n";
  }
  for (const RQArrow& a : framed_.arrows()) {
    if (!kept(a.src) || !kept(a.dst)) continue;
    out << "  \"" << a.src.to_string() << "\" -> \"" << a.dst.to_string() << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::optional<int> ConfigCategory::hom_vanishing_slice(const RQVertex& x) const {
  const int xi = framed_.vertex_index(x);
  if (xi < 0) throw std::invalid_argument("hom source outside the window");
  auto it = zero_slice_cache_.find(xi);
  if (it != zero_slice_cache_.end()) return it->second;

  const HomPropagation& prop = hom_from(x);
  std::optional<int> found;
  for (int p = x.p + 1; p <= framed_.p_max() && !found; ++p) {
    bool all_zero = true;
    for (const RQVertex& v : framed_.vertices()) {
      if (v.p != p || !kept(v)) continue;
      if (prop.dim(v) > 0) {
        all_zero = false;
        break;
      }
    }
    // a fully zero slice stays zero: every later space is knitted from the
    // slices after it
    if (all_zero) found = p;
  }
  zero_slice_cache_[xi] = found;
  return found;
}

const OrbitHom& ConfigCategory::orbit_hom(int a, int b) const {
  if (!adm_.admissible) throw std::invalid_argument("configuration is not admissible");
  auto it = ohom_cache_.find({a, b});
  if (it != ohom_cache_.end()) return it->second;

  const RQVertex x = orbit_.vertices[a].rep;
  const RQVertex y = orbit_.vertices[b].rep;
  const HomPropagation& prop = hom_from(x);

  // reps enter the window at l = 0; negative translates sit below it, where
  // homs vanish by directedness
  if (framed_.vertex_index(f_vertex(y, -1)) >= 0)
    throw std::logic_error("orbit representative is not the first window member");

  OrbitHom result;
  RQVertex t = y;
  int l = 0;
  while (framed_.vertex_index(t) >= 0) {
    if (prop.dim(t) > 0) {
      result.l_values.push_back(l);
      result.block_offset.push_back(int(result.basis.size()));
      for (const auto& rep_path : prop.representatives(t)) result.basis.push_back({l, rep_path});
    }
    t = f_vertex(t);
    ++l;
  }
  result.certified = hom_vanishing_slice(x).has_value();

  return ohom_cache_.emplace(std::make_pair(a, b), std::move(result)).first->second;
}

int ConfigCategory::orbit_hom_dim(int a, int b) const {
  const OrbitHom& h = orbit_hom(a, b);
  if (!h.certified)
    throw std::runtime_error("orbit hom sum is not certifiably finite (Hom-infinite direction)");
  return h.dim();
}

RatVec ConfigCategory::compose(int a, int b, int c, const OrbitHomElem& f,
                               const OrbitHomElem& g) const {
  if (!g.path.empty() && framed_.arrows()[g.path.front()].src != orbit_.vertices[b].rep)
    throw std::invalid_argument("middle object does not match the second factor");
  const OrbitHom& target = orbit_hom(a, c);
  RatVec out(target.dim());

  const int l = f.l + g.l;
  const RQVertex end = f_vertex(orbit_.vertices[c].rep, l);
  if (framed_.vertex_index(end) < 0) return out;  // truncated away (zero when certified)

  std::vector<int> whole = f.path;
  const std::vector<int> tail = f_path(g.path, f.l);
  whole.insert(whole.end(), tail.begin(), tail.end());
  const RatVec cls = hom_from(orbit_.vertices[a].rep).path_class(whole);

  const auto pos = std::lower_bound(target.l_values.begin(), target.l_values.end(), l);
  if (pos == target.l_values.end() || *pos != l) {
    if (!cls.empty()) throw std::logic_error("nonzero composite in an unrecorded block");
    return out;
  }
  const int off = target.block_offset[pos - target.l_values.begin()];
  for (size_t k = 0; k < cls.size(); ++k) out[off + int(k)] = cls[k];
  return out;
}

int ConfigCategory::cluster_hom_dim(int a, int b) const {
  if (orbit_.vertices[a].frozen || orbit_.vertices[b].frozen) return 0;
  const RQVertex x = orbit_.vertices[a].rep;
  RQVertex t = orbit_.vertices[b].rep;
  int total = 0;
  RQVertex last = t;
  for (RQVertex d = f_vertex(t, -1); unframed_.contains(d); d = f_vertex(d, -1)) {
    total += model_.hom_dim_DQ(x, d);
    // the window bottom certifies this side: below it p drops under p(x)
  }
  while (unframed_.contains(t)) {
    total += model_.hom_dim_DQ(x, t);
    last = t;
    t = f_vertex(t);
  }
  // above the window the suspension degree keeps growing, so derived homs
  // stay zero; make sure the window was deep enough to see that
  if (model_.point(last).shift < model_.point(x).shift + 2)
    throw std::logic_error("window too small to certify the stable hom sum");
  return total;
}

int ConfigCategory::suspension_orbit(int b) const {
  if (orbit_.vertices[b].frozen)
    throw std::invalid_argument("suspension orbit needs a non-frozen orbit");
  const RQVertex s = model_.suspension(orbit_.vertices[b].rep);
  const int o = orbit_of(s);
  if (o < 0) throw std::logic_error("suspension leaves the window");
  return o;
}

int ConfigCategory::ext1_dim(int a, int b) const {
  if (orbit_.vertices[a].frozen || orbit_.vertices[b].frozen) return 0;
  return cluster_hom_dim(a, suspension_orbit(b));
}

SweepReport ConfigCategory::check_two_cy() const {
  SweepReport report;
  const int no = int(orbit_.vertices.size());
  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b) {
      if (orbit_.vertices[b].frozen) continue;
      if (!orbit_.vertices[a].frozen) {
        if (a > b) continue;  // symmetric pair handled once
        ++report.checked;
        const int ab = ext1_dim(a, b), ba = ext1_dim(b, a);
        if (ab != ba)
          report.violations.push_back("ext1 asymmetry " + orbit_.vertices[a].label + " / " +
                                      orbit_.vertices[b].label + ": " + std::to_string(ab) +
                                      " vs " + std::to_string(ba));
      } else {
        ++report.checked;
        const int d = ext1_dim(a, b);
        if (d != 0)
          report.violations.push_back("nonzero ext1 out of frozen " + orbit_.vertices[a].label +
                                      " into " + orbit_.vertices[b].label);
      }
    }
  return report;
}

SweepReport ConfigCategory::check_mesh_exactness() const {
  SweepReport report;
  for (int z = 0; z < int(orbit_.vertices.size()); ++z) {
    if (orbit_.vertices[z].frozen) continue;
    RQVertex m = orbit_.vertices[z].rep;
    if (framed_.vertex_index(TranslationQuiver::tau(m)) < 0) m = f_vertex(m);
    const RQVertex tm = TranslationQuiver::tau(m);
    if (framed_.vertex_index(m) < 0 || framed_.vertex_index(tm) < 0)
      throw std::logic_error("no orbit member with an in-window mesh");

    std::map<int, int> heads, tails;
    for (int arr : framed_.in_arrows(m)) {
      const RQVertex& u = framed_.arrows()[arr].src;
      if (kept(u)) ++tails[orbit_of(u)];
    }
    for (int arr : framed_.out_arrows(tm)) {
      const RQVertex& u = framed_.arrows()[arr].dst;
      if (kept(u)) ++heads[orbit_of(u)];
    }
    ++report.checked;
    if (heads != tails)
      report.violations.push_back("mesh mismatch at " + orbit_.vertices[z].label);
  }
  if (report.checked != orbit_.non_frozen)
    report.violations.push_back("relation count differs from the non-frozen orbit count");
  return report;
}

}  // namespace cluscat

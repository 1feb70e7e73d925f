#include "cluscat/seed.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace cluscat {

std::vector<IVec> Seed::y_from_ice() const {
  std::vector<IVec> out(n());
  for (int j = 0; j < n(); ++j) {
    IVec e(m());
    for (int t = 0; t < m(); ++t) e[t] = ice.b(n() + t, j);
    out[j] = std::move(e);
  }
  return out;
}

Laurent ExchangeMonomial::value(int nx, int np) const {
  Laurent v = Laurent::one(nx, np);
  for (const auto& [var, mult] : x_factors) v = v * var.pow(mult);
  for (const auto& [slot, mult] : p_factors) v = v * Laurent::variable_p(nx, np, slot).pow(mult);
  return v;
}

std::string relation_string(const ExchangeRelation& rel,
                            const std::function<std::string(const Laurent&)>& var_namer,
                            const std::vector<std::string>& frozen_names) {
  auto mono = [&](const ExchangeMonomial& m) {
    std::string s;
    auto emit = [&s](const std::string& name, int mult) {
      if (!s.empty()) s += "*";
      s += name;
      if (mult != 1) s += "^" + std::to_string(mult);
    };
    for (const auto& [slot, mult] : m.p_factors) emit(frozen_names[slot], mult);
    for (const auto& [var, mult] : m.x_factors) emit(var_namer(var), mult);
    if (s.empty()) s = "1";
    return s;
  };
  return var_namer(rel.old_var) + "*" + var_namer(rel.new_var) + " = " + mono(rel.m_in) +
         " + " + mono(rel.m_out);
}

Seed mutate_seed(const Seed& s, int k, ExchangeRelation* relation) {
  const int n = s.n(), m = s.m();
  if (k < 0 || k >= n) throw std::invalid_argument("mutation vertex out of range");

  ExchangeMonomial m_in, m_out;
  for (int i = 0; i < n; ++i) {
    if (s.ice.b(i, k) > 0) m_in.x_factors.emplace_back(s.cluster[i], s.ice.b(i, k));
    if (s.ice.b(k, i) > 0) m_out.x_factors.emplace_back(s.cluster[i], s.ice.b(k, i));
  }
  for (int t = 0; t < m; ++t) {
    if (s.ice.b(n + t, k) > 0) m_in.p_factors.emplace_back(t, s.ice.b(n + t, k));
    if (s.ice.b(k, n + t) > 0) m_out.p_factors.emplace_back(t, s.ice.b(k, n + t));
  }

  const Laurent numerator = m_in.value(n, m) + m_out.value(n, m);
  const Laurent new_var = numerator.divided_exact(s.cluster[k]);

  Seed out;
  out.ice = s.ice.mutated(k);
  out.cluster = s.cluster;
  out.cluster[k] = new_var;

  // tropical y-dynamics, then cross-check against the mutated frozen rows
  out.y.resize(n);
  const IVec& yk = s.y[k];
  const IVec yk_min = trop_oplus_one(yk);
  for (int j = 0; j < n; ++j) {
    if (j == k) {
      out.y[j] = ivec_neg(yk);
      continue;
    }
    const int bkj = s.ice.b(k, j);
    IVec e = s.y[j];
    for (int t = 0; t < m; ++t) e[t] += std::max(bkj, 0) * yk[t] - bkj * yk_min[t];
    out.y[j] = std::move(e);
  }
  if (out.y != out.y_from_ice())
    throw std::logic_error("y-dynamics disagree with the mutated frozen rows");

  if (relation) {
    relation->vertex = k;
    relation->old_var = s.cluster[k];
    relation->new_var = new_var;
    relation->m_in = std::move(m_in);
    relation->m_out = std::move(m_out);
  }
  return out;
}

Seed universal_seed(const RootSystem& rs, const DynkinQuiver& q) {
  const std::vector<int> e = q.eps();  // rejects non-bipartite orientations
  const int n = rs.rank();
  const auto& roots = rs.almost_positive();
  const int m = int(roots.size());

  Seed s;
  s.ice = IceQuiver(n, m);
  for (const auto& [a, b] : q.arrows) s.ice.set_b(a, b, 1);
  for (int t = 0; t < m; ++t)
    for (int j = 0; j < n; ++j) s.ice.set_b(n + t, j, e[j] * roots[t][j]);
  for (int i = 0; i < n; ++i) s.cluster.push_back(Laurent::variable_x(n, m, i));
  s.y = s.y_from_ice();
  return s;
}

std::vector<std::string> universal_frozen_names(const RootSystem& rs) {
  std::vector<std::string> names;
  for (const IVec& a : rs.almost_positive()) names.push_back("p(" + rs.root_string(a) + ")");
  return names;
}

Seed principal_seed(const RootSystem& rs, const DynkinQuiver& q) {
  const int n = rs.rank();
  Seed s;
  s.ice = IceQuiver(n, n);
  for (const auto& [a, b] : q.arrows) s.ice.set_b(a, b, 1);
  for (int i = 0; i < n; ++i) s.ice.set_b(n + i, i, 1);
  for (int i = 0; i < n; ++i) s.cluster.push_back(Laurent::variable_x(n, n, i));
  s.y = s.y_from_ice();
  return s;
}

Seed trivial_seed(const RootSystem& rs, const DynkinQuiver& q) {
  const int n = rs.rank();
  Seed s;
  s.ice = IceQuiver(n, 0);
  for (const auto& [a, b] : q.arrows) s.ice.set_b(a, b, 1);
  for (int i = 0; i < n; ++i) s.cluster.push_back(Laurent::variable_x(n, 0, i));
  s.y.assign(n, IVec{});
  return s;
}

std::optional<IVec> variable_root_label(const RootSystem& rs, const Laurent& var) {
  const IVec d = var.denominator_x();
  if (rs.is_almost_positive(d)) return d;
  return std::nullopt;
}

std::string variable_name(const RootSystem& rs, const Laurent& var) {
  auto label = variable_root_label(rs, var);
  if (!label) throw std::logic_error("cluster variable denominator is not an almost-positive root");
  return "x(" + rs.root_string(*label) + ")";
}

namespace {

std::string seed_key(const Seed& s) {
  std::vector<std::string> vars;
  for (const Laurent& v : s.cluster) vars.push_back(v.to_string());
  std::sort(vars.begin(), vars.end());
  std::string key;
  for (const auto& v : vars) key += v + ";";
  return key;
}

// The permutation matching new cluster variables to existing ones; verifies
// that ice quiver and coefficients agree under it.
void check_seed_collision(const Seed& existing, const Seed& candidate) {
  const int n = existing.n();
  std::vector<int> perm(existing.ice.total());
  for (int i = 0; i < n; ++i) {
    int match = -1;
    for (int j = 0; j < n; ++j)
      if (existing.cluster[j] == candidate.cluster[i]) { match = j; break; }
    if (match < 0) throw std::logic_error("seed dedup: variable multiset mismatch");
    perm[i] = match;
  }
  for (int t = n; t < existing.ice.total(); ++t) perm[t] = t;
  if (!(existing.ice.permuted(perm) == candidate.ice))
    throw std::logic_error("seed dedup: same cluster, different quiver");
  for (int i = 0; i < n; ++i)
    if (existing.y[perm[i]] != candidate.y[i])
      throw std::logic_error("seed dedup: same cluster, different coefficients");
}

}  // namespace

ExchangeGraph exchange_graph(const Seed& start, size_t seed_budget) {
  ExchangeGraph g;
  std::map<std::string, int> index_of;
  std::set<std::string> seen_vars;

  auto add_seed = [&](const Seed& s) -> int {
    const std::string key = seed_key(s);
    auto it = index_of.find(key);
    if (it != index_of.end()) {
      check_seed_collision(g.seeds[it->second], s);
      return it->second;
    }
    if (g.seeds.size() >= seed_budget)
      throw std::runtime_error(
          "exchange graph exceeded the seed budget (" + std::to_string(seed_budget) +
          "); input is unlikely to be of finite type");
    const int idx = int(g.seeds.size());
    g.seeds.push_back(s);
    index_of.emplace(key, idx);
    for (const Laurent& v : s.cluster) {
      if (seen_vars.insert(v.to_string()).second) g.variables.push_back(v);
    }
    return idx;
  };

  add_seed(start);
  for (size_t cur = 0; cur < g.seeds.size(); ++cur) {
    const Seed s = g.seeds[cur];  // copy: g.seeds may reallocate
    for (int k = 0; k < s.n(); ++k) {
      ExchangeRelation rel;
      Seed next = mutate_seed(s, k, &rel);
      const int t = add_seed(next);
      if (int(cur) < t) {
        g.edges.push_back({int(cur), k, t});
        g.relations.push_back(std::move(rel));
      }
    }
  }
  return g;
}

SpecializationReport check_specialization(const Seed& universal, const Seed& target,
                                          size_t seed_budget) {
  SpecializationReport rep;
  const int n = universal.n();
  if (target.n() != n) {
    rep.failure = "mutable ranks differ";
    return rep;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (universal.ice.b(i, j) != target.ice.b(i, j)) {
        rep.failure = "mutable quivers differ";
        return rep;
      }
  const int mu = universal.m(), mt = target.m();

  // lockstep closure keyed by the universal seed
  std::vector<std::pair<Seed, Seed>> pairs{{universal, target}};
  std::map<std::string, int> index_of{{seed_key(universal), 0}};
  for (size_t cur = 0; cur < pairs.size(); ++cur) {
    const auto [us, ts] = pairs[cur];  // copies
    for (int k = 0; k < n; ++k) {
      Seed un = mutate_seed(us, k);
      const std::string key = seed_key(un);
      if (index_of.count(key)) continue;
      if (pairs.size() >= seed_budget) throw std::runtime_error("specialization walk exceeded budget");
      index_of.emplace(key, int(pairs.size()));
      pairs.emplace_back(std::move(un), mutate_seed(ts, k));
    }
  }

  // Condition 1 rows: for every visited seed pair and every mutable j,
  // phi(y_j) = ybar_j as exponent vectors over the target generators.
  QMat a(int(pairs.size()) * n, mu);
  QMat b(int(pairs.size()) * n, mt);
  int r = 0;
  for (const auto& [us, ts] : pairs)
    for (int j = 0; j < n; ++j, ++r) {
      for (int t = 0; t < mu; ++t) a.at(r, t) = us.y[j][t];
      for (int t = 0; t < mt; ++t) b.at(r, t) = ts.y[j][t];
    }

  rep.generator_map.assign(mu, IVec(mt, 0));
  for (int col = 0; col < mt; ++col) {
    RatVec rhs(a.rows());
    for (int i = 0; i < a.rows(); ++i) rhs[i] = b.at(i, col);
    auto sol = a.solve(rhs);
    if (!sol) {
      rep.failure = "phi(y) = ybar has no monomial solution";
      return rep;
    }
    for (int t = 0; t < mu; ++t) {
      const Rat& v = (*sol)[t];
      if (v.get_den() != 1) {
        rep.failure = "phi(y) = ybar forces a non-integral exponent";
        return rep;
      }
      rep.generator_map[t][col] = int(v.get_num().get_si());
    }
  }
  rep.unique = (mt == 0) || (a.rank() == mu);

  // Condition 2 at every seed: phi(y_j (+) 1) = ybar_j (+) 1.
  r = 0;
  for (const auto& [us, ts] : pairs) {
    (void)ts;
    for (int j = 0; j < n; ++j, ++r) {
      const IVec ymin = trop_oplus_one(us.y[j]);
      for (int col = 0; col < mt; ++col) {
        long lhs = 0;
        for (int t = 0; t < mu; ++t) lhs += long(ymin[t]) * rep.generator_map[t][col];
        long rhs = std::min(long(b.at(r, col).get_num().get_si()), 0L);
        if (lhs != rhs) {
          rep.failure = "phi(y (+) 1) = ybar (+) 1 fails at a seed";
          return rep;
        }
      }
    }
  }

  rep.ok = true;
  return rep;
}

}  // namespace cluscat

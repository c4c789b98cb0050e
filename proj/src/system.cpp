#include "permclass/system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace permclass {

namespace {

struct QueryMasks {
  Profile all = 0;
  Profile hereditary = 0;
};

QueryMasks query_masks(const Universe& universe,
                       const std::vector<Property>& query) {
  QueryMasks m;
  for (const Property& q : query) {
    int idx = universe.index_of(q);
    if (idx < 0) {
      throw std::invalid_argument("query property missing from universe: " +
                                  q.str());
    }
    m.all |= Profile{1} << idx;
    if (q.hereditary()) m.hereditary |= Profile{1} << idx;
  }
  return m;
}

// Runs fn on every tuple in {0,...,size-1}^arity.
template <typename Fn>
void for_each_tuple(int arity, int size, Fn&& fn) {
  if (size == 0) return;
  std::vector<int> idx(arity, 0);
  while (true) {
    fn(idx);
    int pos = arity - 1;
    while (pos >= 0 && ++idx[pos] == size) idx[pos--] = 0;
    if (pos < 0) break;
  }
}

struct SkeletonSet {
  bool has_singleton = false;
  bool use12 = false;
  bool use21 = false;
  std::vector<Perm> longs;  // length >= 4
};

SkeletonSet classify_simples(const std::vector<Perm>& simples,
                             std::vector<Perm>* kept) {
  SkeletonSet s;
  for (const Perm& p : simples) {
    if (!is_simple(p)) {
      throw std::invalid_argument("system skeleton is not simple: " + p.str());
    }
    if (p.size() == 1) {
      // The singleton is the x term, not a skeleton.  Without it no
      // decomposition tree has leaves, so the closure is empty.
      s.has_singleton = true;
      continue;
    }
    if (p.size() == 2) {
      (p[1] == 1 ? s.use21 : s.use12) = true;
    } else {
      s.longs.push_back(p);
    }
    if (kept) kept->push_back(p);
  }
  return s;
}

}  // namespace

int AlgebraicSystem::index_of_unknown(Profile r) const {
  auto it = std::lower_bound(unknowns.begin(), unknowns.end(), r);
  if (it == unknowns.end() || *it != r) return -1;
  return static_cast<int>(it - unknowns.begin());
}

std::string AlgebraicSystem::str() const {
  std::vector<std::string> names(num_vars());
  names[var_x()] = "x";
  for (int j = 0; j < params; ++j) {
    names[var_param(j)] = "p" + profile_str(param_profiles[j], universe);
  }
  const std::string head = params > 0 ? "h" : "g";
  for (int i = 0; i < static_cast<int>(unknowns.size()); ++i) {
    names[var_unknown(i)] = head + profile_str(unknowns[i], universe);
  }
  std::string out;
  for (int i = 0; i < static_cast<int>(unknowns.size()); ++i) {
    out += names[var_unknown(i)] + " = " +
           (rhs[i].is_zero() ? "0" : rhs[i].str(names)) + "\n";
  }
  return out;
}

AlgebraicSystem build_system(const std::vector<Perm>& simples,
                             const Universe& universe,
                             const std::vector<Property>& query) {
  AlgebraicSystem sys;
  sys.universe = universe;
  const QueryMasks masks = query_masks(universe, query);
  sys.query_mask = masks.all;
  const SkeletonSet skel = classify_simples(simples, &sys.simples);

  TransferEngine eng(universe);
  sys.start = profile_of(Perm::parse("1"), universe);

  const int sum_idx = universe.index_of(Property::plain(PropertyKind::SumIndec));
  const int skew_idx =
      universe.index_of(Property::plain(PropertyKind::SkewIndec));
  const Perm p12 = Perm::parse("12");
  const Perm p21 = Perm::parse("21");

  auto in_branch = [&](Profile r) {
    return (r & masks.hereditary) == masks.hereditary;
  };

  std::set<Profile> known;
  if (skel.has_singleton && in_branch(sys.start)) known.insert(sys.start);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Profile> list(known.begin(), known.end());
    auto add = [&](Profile r) {
      if (in_branch(r) && known.insert(r).second) grew = true;
    };
    for (Profile s : list) {
      if (skel.use12 && profile_has(s, sum_idx)) {
        for (Profile t : list) add(eng.transfer(p12, {s, t}));
      }
      if (skel.use21 && profile_has(s, skew_idx)) {
        for (Profile t : list) add(eng.transfer(p21, {s, t}));
      }
    }
    for (const Perm& sigma : skel.longs) {
      std::vector<Profile> children(sigma.size());
      for_each_tuple(static_cast<int>(sigma.size()),
                     static_cast<int>(list.size()), [&](const std::vector<int>& idx) {
                       for (size_t i = 0; i < idx.size(); ++i) {
                         children[i] = list[idx[i]];
                       }
                       add(eng.transfer(sigma, children));
                     });
    }
  }
  sys.unknowns.assign(known.begin(), known.end());

  const int nv = sys.num_vars();
  sys.rhs.assign(sys.unknowns.size(), Poly(nv));
  auto emit = [&](Profile target, const std::vector<int>& factor_unknowns) {
    const int ti = sys.index_of_unknown(target);
    if (ti < 0) return;  // outside the hereditary branch
    Mono m(nv, 0);
    for (int u : factor_unknowns) ++m[sys.var_unknown(u)];
    sys.rhs[ti].add_term(m, 1);
  };

  const int n_unknowns = static_cast<int>(sys.unknowns.size());
  if (const int si = sys.index_of_unknown(sys.start); si >= 0) {
    sys.rhs[si] += Poly::var(sys.var_x(), nv);
  }
  for (int i = 0; i < n_unknowns; ++i) {
    const Profile s = sys.unknowns[i];
    if (skel.use12 && profile_has(s, sum_idx)) {
      for (int j = 0; j < n_unknowns; ++j) {
        emit(eng.transfer(p12, {s, sys.unknowns[j]}), {i, j});
      }
    }
    if (skel.use21 && profile_has(s, skew_idx)) {
      for (int j = 0; j < n_unknowns; ++j) {
        emit(eng.transfer(p21, {s, sys.unknowns[j]}), {i, j});
      }
    }
  }
  for (const Perm& sigma : skel.longs) {
    std::vector<Profile> children(sigma.size());
    for_each_tuple(
        static_cast<int>(sigma.size()), n_unknowns,
        [&](const std::vector<int>& idx) {
          for (size_t i = 0; i < idx.size(); ++i) {
            children[i] = sys.unknowns[idx[i]];
          }
          emit(eng.transfer(sigma, children), idx);
        });
  }
  return sys;
}

InvolutionSystem build_involution_system(const std::vector<Perm>& simples,
                                         const Universe& universe,
                                         const std::vector<Property>& query) {
  if (!universe.is_inverse_closed()) {
    throw std::invalid_argument(
        "involution systems need an inverse-closed universe");
  }
  // An involution's decomposition pairs each block with the inverse of its
  // partner, so every block lies in the class intersected with its inverse;
  // that intersection is generated by the inverse-closed core of the simples.
  std::set<Perm> given(simples.begin(), simples.end());
  std::vector<Perm> core;
  for (const Perm& p : simples) {
    if (given.count(inverse(p))) core.push_back(p);
  }

  InvolutionSystem out;
  out.plain = build_system(core, universe, query);
  AlgebraicSystem& inv = out.invol;
  inv.universe = universe;
  const QueryMasks masks = query_masks(universe, query);
  inv.query_mask = masks.all;
  SkeletonSet skel = classify_simples(core, &inv.simples);
  std::erase_if(skel.longs, [](const Perm& p) { return inverse(p) != p; });

  inv.params = static_cast<int>(out.plain.unknowns.size());
  inv.param_profiles = out.plain.unknowns;

  TransferEngine eng(universe);
  inv.start = profile_of(Perm::parse("1"), universe);
  const int sum_idx = universe.index_of(Property::plain(PropertyKind::SumIndec));
  const int skew_idx =
      universe.index_of(Property::plain(PropertyKind::SkewIndec));
  const Perm p12 = Perm::parse("12");
  const Perm p21 = Perm::parse("21");
  const Perm p321 = Perm::parse("321");

  auto in_branch = [&](Profile r) {
    return (r & masks.hereditary) == masks.hereditary;
  };
  const std::vector<Profile>& plain_unknowns = out.plain.unknowns;
  std::vector<Profile> skew_plain;  // valid outer parts of a skew chain
  for (Profile s : plain_unknowns) {
    if (profile_has(s, skew_idx)) skew_plain.push_back(s);
  }

  // For each involution skeleton: positions fixed by it take an involution
  // block (h factor); the lower index of each 2-cycle takes an arbitrary
  // block (p factor) and its partner gets the inverted profile.
  struct CyclePattern {
    Perm sigma;
    std::vector<int> fixed;   // 1-based positions with sigma(j) == j
    std::vector<int> lowers;  // 1-based positions with sigma(j) > j
  };
  std::vector<CyclePattern> cycles;
  for (const Perm& sigma : skel.longs) {
    CyclePattern c{sigma, {}, {}};
    for (int j = 1; j <= static_cast<int>(sigma.size()); ++j) {
      if (sigma[j] == j) c.fixed.push_back(j);
      else if (sigma[j] > j) c.lowers.push_back(j);
    }
    cycles.push_back(std::move(c));
  }

  std::set<Profile> known;
  if (skel.has_singleton && in_branch(inv.start)) known.insert(inv.start);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Profile> hlist(known.begin(), known.end());
    auto add = [&](Profile r) {
      if (in_branch(r) && known.insert(r).second) grew = true;
    };
    if (skel.use12) {
      for (Profile s : hlist) {
        if (!profile_has(s, sum_idx)) continue;
        for (Profile t : hlist) add(eng.transfer(p12, {s, t}));
      }
    }
    if (skel.use21) {
      for (Profile s : skew_plain) {
        add(eng.transfer(p21, {s, invert_profile(s, universe)}));
        for (Profile t : hlist) {
          add(eng.transfer(p321, {s, t, invert_profile(s, universe)}));
        }
      }
    }
    for (const CyclePattern& c : cycles) {
      const int nf = static_cast<int>(c.fixed.size());
      const int nl = static_cast<int>(c.lowers.size());
      std::vector<Profile> children(c.sigma.size());
      for_each_tuple(nf + nl,
                     std::max(static_cast<int>(hlist.size()),
                              static_cast<int>(plain_unknowns.size())),
                     [&](const std::vector<int>& idx) {
                       for (int i = 0; i < nf; ++i) {
                         if (idx[i] >= static_cast<int>(hlist.size())) return;
                         children[c.fixed[i] - 1] = hlist[idx[i]];
                       }
                       for (int i = 0; i < nl; ++i) {
                         const int k = idx[nf + i];
                         if (k >= static_cast<int>(plain_unknowns.size())) return;
                         const Profile s = plain_unknowns[k];
                         children[c.lowers[i] - 1] = s;
                         children[c.sigma[c.lowers[i]] - 1] =
                             invert_profile(s, universe);
                       }
                       add(eng.transfer(c.sigma, children));
                     });
    }
  }
  inv.unknowns.assign(known.begin(), known.end());

  const int nv = inv.num_vars();
  inv.rhs.assign(inv.unknowns.size(), Poly(nv));
  // factors: (var index already laid out in inv's numbering, multiplicity)
  auto emit = [&](Profile target, const Mono& mono) {
    const int ti = inv.index_of_unknown(target);
    if (ti < 0) return;
    inv.rhs[ti].add_term(mono, 1);
  };
  auto pvar = [&](Profile s) {
    return inv.var_param(out.plain.index_of_unknown(s));
  };

  const int n_h = static_cast<int>(inv.unknowns.size());
  if (const int si = inv.index_of_unknown(inv.start); si >= 0) {
    inv.rhs[si] += Poly::var(inv.var_x(), nv);
  }
  if (skel.use12) {
    for (int i = 0; i < n_h; ++i) {
      if (!profile_has(inv.unknowns[i], sum_idx)) continue;
      for (int j = 0; j < n_h; ++j) {
        Mono m(nv, 0);
        ++m[inv.var_unknown(i)];
        ++m[inv.var_unknown(j)];
        emit(eng.transfer(p12, {inv.unknowns[i], inv.unknowns[j]}), m);
      }
    }
  }
  if (skel.use21) {
    for (Profile s : skew_plain) {
      const Profile si = invert_profile(s, universe);
      {
        Mono m(nv, 0);
        ++m[pvar(s)];
        emit(eng.transfer(p21, {s, si}), m);
      }
      for (int j = 0; j < n_h; ++j) {
        Mono m(nv, 0);
        ++m[pvar(s)];
        ++m[inv.var_unknown(j)];
        emit(eng.transfer(p321, {s, inv.unknowns[j], si}), m);
      }
    }
  }
  for (const CyclePattern& c : cycles) {
    const int nf = static_cast<int>(c.fixed.size());
    const int nl = static_cast<int>(c.lowers.size());
    std::vector<Profile> children(c.sigma.size());
    for_each_tuple(
        nf + nl, std::max(n_h, static_cast<int>(plain_unknowns.size())),
        [&](const std::vector<int>& idx) {
          Mono m(nv, 0);
          for (int i = 0; i < nf; ++i) {
            if (idx[i] >= n_h) return;
            children[c.fixed[i] - 1] = inv.unknowns[idx[i]];
            ++m[inv.var_unknown(idx[i])];
          }
          for (int i = 0; i < nl; ++i) {
            const int k = idx[nf + i];
            if (k >= static_cast<int>(plain_unknowns.size())) return;
            const Profile s = plain_unknowns[k];
            children[c.lowers[i] - 1] = s;
            children[c.sigma[c.lowers[i]] - 1] = invert_profile(s, universe);
            ++m[pvar(s)];
          }
          emit(eng.transfer(c.sigma, children), m);
        });
  }
  return out;
}

bool is_proper(const AlgebraicSystem& sys) {
  for (const Poly& p : sys.rhs) {
    for (const auto& [mono, coeff] : p.terms()) {
      const int a = mono[sys.var_x()];
      int b = 0;
      for (int j = 0; j < sys.params; ++j) b += mono[sys.var_param(j)];
      int c = 0;
      for (size_t i = 0; i < sys.unknowns.size(); ++i) {
        c += mono[sys.var_unknown(static_cast<int>(i))];
      }
      if (a + b + c == 0) return false;  // constant term
      if (c == 1 && a == 0 && b == 0) return false;  // bare linear unknown
    }
  }
  return true;
}

}  // namespace permclass

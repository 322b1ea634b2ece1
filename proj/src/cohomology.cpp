#include "cohomology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace nabelh1 {

namespace {

bool table_map_continuous(const Group& G, const Group& A, const std::vector<Elem>& f) {
  for (int x = 0; x < G.order(); ++x) {
    Elem fx_inv = A.inv(f[x]);
    for (Elem n : G.open_subgroup())
      if (!A.open_contains(A.mul(fx_inv, f[G.mul(x, n)]))) return false;
  }
  return true;
}

void require_at_least_partial(const Bimodule& B, const char* what) {
  if (B.level == CrossLevel::Precrossed)
    throw ComputeError("LevelTooLow", std::string(what) + " requires the partial Peiffer law");
}

// seed-based partition; items are pre-sorted so each class representative
// (its first member) is the lexicographically least member
template <typename T, typename Rel>
void partition(const std::vector<T>& items, Rel rel, std::vector<int>& class_of,
               std::vector<std::vector<int>>& classes, std::vector<int>& rep) {
  class_of.assign(items.size(), -1);
  classes.clear();
  for (size_t i = 0; i < items.size(); ++i) {
    if (class_of[i] >= 0) continue;
    int c = (int)classes.size();
    classes.push_back({(int)i});
    class_of[i] = c;
    for (size_t j = i + 1; j < items.size(); ++j) {
      if (class_of[j] >= 0) continue;
      if (rel(items[i], items[j])) {
        class_of[j] = c;
        classes[c].push_back((int)j);
      }
    }
  }
  rep.resize(classes.size());
  for (size_t c = 0; c < classes.size(); ++c) rep[c] = classes[c][0];
}

}  // namespace

bool crossed_hom_identity_holds(const Group& G, const Group& A, const GroupAction& act,
                                const std::vector<Elem>& alpha) {
  if (alpha[Group::id] != Group::id) return false;
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      if (alpha[G.mul(g, h)] != A.mul(alpha[g], act(g, alpha[h]))) return false;
  return true;
}

std::vector<std::vector<Elem>> enumerate_crossed_homs(const Group& G, const Group& A,
                                                      const GroupAction& act,
                                                      bool continuous_only,
                                                      const SizeGuard& guard) {
  std::vector<Elem> gens = G.minimal_generating_sequence();
  guard.require(saturating_pow(A.order(), gens.size()), "crossed-hom enumeration");

  std::vector<std::vector<Elem>> out;
  std::vector<Elem> alpha(G.order(), -1);
  std::vector<Elem> known;
  alpha[Group::id] = Group::id;
  known.push_back(Group::id);

  // assign alpha(x) = v, then propagate over all products with known elements
  auto close = [&](Elem x, Elem v) -> bool {
    alpha[x] = v;
    known.push_back(x);
    for (size_t qi = known.size() - 1; qi < known.size(); ++qi) {
      Elem u = known[qi];
      for (size_t wi = 0; wi < known.size(); ++wi) {
        Elem w = known[wi];
        Elem t1 = G.mul(u, w);
        Elem v1 = A.mul(alpha[u], act(u, alpha[w]));
        if (alpha[t1] < 0) {
          alpha[t1] = v1;
          known.push_back(t1);
        } else if (alpha[t1] != v1) {
          return false;
        }
        Elem t2 = G.mul(w, u);
        Elem v2 = A.mul(alpha[w], act(w, alpha[u]));
        if (alpha[t2] < 0) {
          alpha[t2] = v2;
          known.push_back(t2);
        } else if (alpha[t2] != v2) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<void(size_t)> rec = [&](size_t gi) {
    if (gi == gens.size()) {
      // generators span G, so every value is set; re-verify the identity in full
      std::vector<Elem> full = alpha;
      if (crossed_hom_identity_holds(G, A, act, full)) out.push_back(std::move(full));
      return;
    }
    Elem g = gens[gi];
    if (alpha[g] >= 0) {  // defensive; the generating sequence avoids this
      rec(gi + 1);
      return;
    }
    size_t mark = known.size();
    for (Elem v = 0; v < A.order(); ++v) {
      if (close(g, v)) rec(gi + 1);
      for (size_t k = mark; k < known.size(); ++k) alpha[known[k]] = -1;
      known.resize(mark);
    }
  };
  rec(0);

  if (continuous_only) {
    std::vector<std::vector<Elem>> kept;
    for (auto& al : out)
      if (table_map_continuous(G, A, al)) kept.push_back(std::move(al));
    out = std::move(kept);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DerPair> enumerate_der(const Bimodule& B, bool continuous_only,
                                   const SizeGuard& guard) {
  auto homs = enumerate_crossed_homs(*B.G, *B.A, B.g_on_a, continuous_only, guard);
  const Group& R = *B.R;
  std::vector<DerPair> out;
  for (const auto& al : homs)
    for (Elem r = 0; r < R.order(); ++r) {
      bool ok = true;
      for (int g = 0; g < B.G->order() && ok; ++g)
        ok = B.mu(al[g]) == R.mul(r, R.inv(B.act_gr(g, r)));
      if (ok) out.push_back(DerPair{al, r});
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool derpair_valid(const Bimodule& B, const DerPair& p, bool continuous) {
  if ((int)p.alpha.size() != B.G->order() || p.r < 0 || p.r >= B.R->order()) return false;
  if (!crossed_hom_identity_holds(*B.G, *B.A, B.g_on_a, p.alpha)) return false;
  for (int g = 0; g < B.G->order(); ++g)
    if (B.mu(p.alpha[g]) != B.R->mul(p.r, B.R->inv(B.act_gr(g, p.r)))) return false;
  if (continuous && !table_map_continuous(*B.G, *B.A, p.alpha)) return false;
  return true;
}

DerPair trivial_der_pair(const Bimodule& B) {
  return DerPair{std::vector<Elem>(B.G->order(), Group::id), Group::id};
}

DerPair star_product(const DerPair& p, const DerPair& q, const Bimodule& B) {
  require_at_least_partial(B, "star product");
  DerPair out;
  out.alpha.resize(B.G->order());
  for (int g = 0; g < B.G->order(); ++g)
    out.alpha[g] = B.A->mul(B.act_ra(p.r, q.alpha[g]), p.alpha[g]);
  out.r = B.R->mul(p.r, q.r);
  if (!derpair_valid(B, out, false))
    throw ComputeError("NotADerPair", "star product left the derivation set");
  return out;
}

DerGroup der_group(const Bimodule& B, bool continuous_only, const SizeGuard& guard) {
  require_at_least_partial(B, "derivation group");
  DerGroup dg;
  dg.elems = enumerate_der(B, continuous_only, guard);
  const int n = (int)dg.elems.size();
  auto index_of = [&](const DerPair& p) {
    auto it = std::lower_bound(dg.elems.begin(), dg.elems.end(), p);
    if (it == dg.elems.end() || *it != p)
      throw ComputeError("StarNotClosed", "product left the enumerated derivation set");
    return (int)(it - dg.elems.begin());
  };
  dg.table.assign(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      dg.table[i][j] = index_of(star_product(dg.elems[i], dg.elems[j], B));
  dg.identity = index_of(trivial_der_pair(B));
  dg.inverse.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (dg.table[i][j] == dg.identity && dg.table[j][i] == dg.identity) {
        dg.inverse[i] = j;
        break;
      }
    if (dg.inverse[i] < 0)
      throw ComputeError("InternalAssertionFailed", "derivation pair without star inverse");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (dg.table[dg.table[i][j]][k] != dg.table[i][dg.table[j][k]])
          throw ComputeError("InternalAssertionFailed", "star product not associative");
  return dg;
}

std::optional<EquivalenceWitness> equivalent(const DerPair& p, const DerPair& q,
                                             const Bimodule& B) {
  const Group& G = *B.G;
  const Group& A = *B.A;
  const Group& R = *B.R;
  ElemSet h0r = h0_set(B.g_on_r);
  for (Elem a = 0; a < A.order(); ++a) {
    bool ok = true;
    for (int g = 0; g < G.order() && ok; ++g)
      ok = q.alpha[g] == A.mul(A.inv(a), A.mul(p.alpha[g], B.act_ga(g, a)));
    if (!ok) continue;
    Elem z = R.mul(R.inv(p.r), R.mul(B.mu(a), q.r));
    if (set_contains(h0r, z)) return EquivalenceWitness{a, z};
  }
  return std::nullopt;
}

bool companion_condition_redundant(const Bimodule& B, bool continuous_only,
                                   const SizeGuard& guard, std::string* witness) {
  auto ders = enumerate_der(B, continuous_only, guard);
  const Group& G = *B.G;
  const Group& A = *B.A;
  const Group& R = *B.R;
  ElemSet h0r = h0_set(B.g_on_r);
  for (const auto& p : ders)
    for (const auto& q : ders)
      for (Elem a = 0; a < A.order(); ++a) {
        bool conj_ok = true;
        for (int g = 0; g < G.order() && conj_ok; ++g)
          conj_ok = q.alpha[g] == A.mul(A.inv(a), A.mul(p.alpha[g], B.act_ga(g, a)));
        if (!conj_ok) continue;
        Elem z = R.mul(R.inv(p.r), R.mul(B.mu(a), q.r));
        if (!set_contains(h0r, z)) {
          if (witness)
            *witness = "a=" + std::to_string(a) + " links the pair but z=" + std::to_string(z) +
                       " is not fixed";
          return false;
        }
      }
  return true;
}

int H1Set::find(const DerPair& p) const {
  auto it = std::lower_bound(der.begin(), der.end(), p);
  if (it == der.end() || *it != p) return -1;
  return (int)(it - der.begin());
}

int H1Set::class_of_pair(const DerPair& p) const {
  int i = find(p);
  if (i < 0) throw ComputeError("NotADerPair", "pair is not in the enumerated derivation set");
  return class_of[i];
}

H1Set compute_h1(const Bimodule& B, bool continuous_only, const SizeGuard& guard) {
  require_at_least_partial(B, "first cohomology");
  H1Set h;
  h.der = enumerate_der(B, continuous_only, guard);
  partition(h.der, [&](const DerPair& p, const DerPair& q) { return equivalent(p, q, B).has_value(); },
            h.class_of, h.classes, h.rep);
  int triv = h.find(trivial_der_pair(B));
  if (triv < 0)
    throw ComputeError("InternalAssertionFailed", "trivial derivation pair missing");
  h.distinguished = h.class_of[triv];
  return h;
}

int PlainH1::find(const std::vector<Elem>& alpha) const {
  auto it = std::lower_bound(homs.begin(), homs.end(), alpha);
  if (it == homs.end() || *it != alpha) return -1;
  return (int)(it - homs.begin());
}

int PlainH1::class_of_hom(const std::vector<Elem>& alpha) const {
  int i = find(alpha);
  if (i < 0)
    throw ComputeError("NotADerPair", "map is not in the enumerated crossed-hom set");
  return class_of[i];
}

std::optional<Elem> plain_equivalent(const Group& G, const Group& A, const GroupAction& act,
                                     const std::vector<Elem>& alpha,
                                     const std::vector<Elem>& beta) {
  for (Elem a = 0; a < A.order(); ++a) {
    bool ok = true;
    for (int g = 0; g < G.order() && ok; ++g)
      ok = beta[g] == A.mul(A.inv(a), A.mul(alpha[g], act(g, a)));
    if (ok) return a;
  }
  return std::nullopt;
}

PlainH1 plain_h1(const Group& G, const Group& A, const GroupAction& act, bool continuous_only,
                 const SizeGuard& guard) {
  PlainH1 p;
  p.homs = enumerate_crossed_homs(G, A, act, continuous_only, guard);
  partition(p.homs,
            [&](const std::vector<Elem>& x, const std::vector<Elem>& y) {
              return plain_equivalent(G, A, act, x, y).has_value();
            },
            p.class_of, p.classes, p.rep);
  int triv = p.find(std::vector<Elem>(G.order(), Group::id));
  if (triv < 0) throw ComputeError("InternalAssertionFailed", "trivial crossed hom missing");
  p.distinguished = p.class_of[triv];
  return p;
}

Bimodule conjugation_bimodule_of(const Bimodule& B) {
  return make_conjugation_bimodule(B.G, B.A, B.g_on_a);
}

H1Set bar_h1(GroupPtr G, GroupPtr A, const GroupAction& act, bool continuous_only,
             const SizeGuard& guard) {
  return compute_h1(make_conjugation_bimodule(std::move(G), std::move(A), act),
                    continuous_only, guard);
}

ZetaResult zeta_embedding(const Bimodule& B, const H1Set& h1, const PlainH1& plain) {
  (void)B;
  ZetaResult z;
  z.class_map.resize(h1.class_count());
  for (int c = 0; c < h1.class_count(); ++c) {
    int pc = plain.class_of_hom(h1.representative(c).alpha);
    for (int m : h1.classes[c])
      if (plain.class_of_hom(h1.der[m].alpha) != pc)
        throw ComputeError("WellDefinednessViolated",
                           "zeta image depends on the class representative");
    z.class_map[c] = pc;
  }
  std::set<int> image(z.class_map.begin(), z.class_map.end());
  z.injective = (int)image.size() == h1.class_count();
  z.surjective = (int)image.size() == plain.class_count();
  return z;
}

std::vector<int> mu1_class_map(const Bimodule& B, const PlainH1& plainA, const PlainH1& plainR) {
  std::vector<int> map(plainA.class_count());
  for (int c = 0; c < plainA.class_count(); ++c) {
    int target = -1;
    for (int m : plainA.classes[c]) {
      std::vector<Elem> comp(B.G->order());
      for (int g = 0; g < B.G->order(); ++g) comp[g] = B.mu(plainA.homs[m][g]);
      int pc = plainR.class_of_hom(comp);
      if (target < 0) target = pc;
      else if (target != pc)
        throw ComputeError("WellDefinednessViolated",
                           "mu-induced class map depends on the representative");
    }
    map[c] = target;
  }
  return map;
}

bool mu1_trivial(const Bimodule& B, const PlainH1& plainA, const PlainH1& plainR) {
  for (int c : mu1_class_map(B, plainA, plainR))
    if (c != plainR.distinguished) return false;
  return true;
}

std::vector<DerPair> inn_pairs(const Bimodule& B) {
  if (B.level != CrossLevel::Crossed)
    throw ComputeError("LevelTooLow", "inner pairs require the full Peiffer law");
  const Group& A = *B.A;
  const Group& R = *B.R;
  ElemSet h0r = h0_set(B.g_on_r);
  std::set<DerPair> out;
  for (Elem a = 0; a < A.order(); ++a) {
    std::vector<Elem> alpha(B.G->order());
    for (int g = 0; g < B.G->order(); ++g) alpha[g] = A.mul(a, B.act_ga(g, A.inv(a)));
    for (Elem z : h0r) out.insert(DerPair{alpha, R.mul(B.mu(a), z)});
  }
  return {out.begin(), out.end()};
}

InnNormality inn_normality(const Bimodule& B, bool continuous_only, const SizeGuard& guard) {
  DerGroup dg = der_group(B, continuous_only, guard);
  std::vector<DerPair> inn = inn_pairs(B);
  std::set<int> inn_idx;
  for (const auto& p : inn) {
    auto it = std::lower_bound(dg.elems.begin(), dg.elems.end(), p);
    if (it == dg.elems.end() || *it != p)
      throw ComputeError("NotADerPair", "inner pair missing from the derivation set");
    inn_idx.insert((int)(it - dg.elems.begin()));
  }

  InnNormality out;
  out.direct = true;
  for (int d = 0; d < (int)dg.elems.size() && out.direct; ++d)
    for (int i : inn_idx) {
      int conj = dg.table[dg.table[d][i]][dg.inverse[d]];
      if (!inn_idx.count(conj)) {
        out.direct = false;
        break;
      }
    }

  const Group& A = *B.A;
  const Group& R = *B.R;
  ElemSet h0r = h0_set(B.g_on_r);
  out.criterion = true;
  for (const auto& p : dg.elems) {
    for (Elem z : h0r) {
      Elem rz = R.conj(p.r, z);
      std::vector<Elem> m(B.G->order());
      for (int g = 0; g < B.G->order(); ++g)
        m[g] = A.mul(B.act_ra(rz, A.inv(p.alpha[g])), p.alpha[g]);
      bool inner = false;
      for (Elem a = 0; a < A.order() && !inner; ++a) {
        bool eq = true;
        for (int g = 0; g < B.G->order() && eq; ++g)
          eq = m[g] == A.mul(a, B.act_ga(g, A.inv(a)));
        inner = eq;
      }
      if (!inner) {
        out.criterion = false;
        break;
      }
    }
    if (!out.criterion) break;
  }
  return out;
}

H0ClassAction h0_action_on_h1(const Bimodule& B, const H1Set& h1) {
  const Group& A = *B.A;
  const Group& R = *B.R;
  H0ClassAction out;
  out.h0 = h0_set(B.g_on_r);
  for (Elem z : out.h0)
    for (int g = 0; g < B.G->order(); ++g)
      for (Elem a = 0; a < A.order(); ++a)
        if (B.act_ra(z, B.act_ga(g, a)) != B.act_ga(g, B.act_ra(z, a)))
          throw ComputeError("ActionsDoNotCommute",
                             "fixed-point action does not commute with the G-action");
  out.perm.assign(out.h0.size(), std::vector<Elem>(h1.class_count(), -1));
  for (size_t zi = 0; zi < out.h0.size(); ++zi) {
    Elem z = out.h0[zi];
    for (size_t di = 0; di < h1.der.size(); ++di) {
      DerPair img;
      img.alpha.resize(B.G->order());
      for (int g = 0; g < B.G->order(); ++g) img.alpha[g] = B.act_ra(z, h1.der[di].alpha[g]);
      img.r = R.conj(z, h1.der[di].r);
      int cls = h1.class_of_pair(img);
      int& slot = out.perm[zi][h1.class_of[di]];
      if (slot < 0) slot = cls;
      else if (slot != cls)
        throw ComputeError("WellDefinednessViolated",
                           "fixed-point action on classes depends on the representative");
    }
  }
  return out;
}

H1GroupResult h1_group_structure(const Bimodule& B, const H1Set& h1) {
  const Group& A = *B.A;
  const Group& R = *B.R;
  ElemSet h0r = h0_set(B.g_on_r);
  ElemSet ker = kernel_of(B.mu);

  H1GroupResult res;
  res.condition_fixed_normal = R.is_normal(h0r);
  res.condition_kernel_witness = true;
  for (Elem c : h0r) {
    for (const auto& d : h1.der) {
      bool found = false;
      for (Elem a : ker) {
        bool eq = true;
        for (int g = 0; g < B.G->order() && eq; ++g)
          eq = B.act_ra(c, d.alpha[g]) ==
               A.mul(A.inv(a), A.mul(d.alpha[g], B.act_ga(g, a)));
        if (eq) {
          found = true;
          break;
        }
      }
      if (!found) {
        res.condition_kernel_witness = false;
        break;
      }
    }
    if (!res.condition_kernel_witness) break;
  }

  const int K = h1.class_count();
  Table t(K, std::vector<Elem>(K, -1));
  bool congruent = true;
  std::string viol;
  for (size_t i = 0; i < h1.der.size() && congruent; ++i)
    for (size_t j = 0; j < h1.der.size() && congruent; ++j) {
      int cls = h1.class_of_pair(star_product(h1.der[i], h1.der[j], B));
      int& slot = t[h1.class_of[i]][h1.class_of[j]];
      if (slot < 0) slot = cls;
      else if (slot != cls) {
        congruent = false;
        viol = "classes (" + std::to_string(h1.class_of[i]) + "," +
               std::to_string(h1.class_of[j]) + ") have representative-dependent products";
      }
    }

  if (res.condition_fixed_normal && res.condition_kernel_witness) {
    if (!congruent)
      throw ComputeError("InternalAssertionFailed",
                         "absorption conditions hold but the star product does not descend: " + viol);
    res.status = H1GroupStatus::ViaConditions;
  } else if (congruent) {
    res.status = H1GroupStatus::Unconditional;
  } else {
    res.status = H1GroupStatus::NotAGroup;
    res.violation = viol;
    return res;
  }
  try {
    Group::validate(t, h1.distinguished, {});
  } catch (const ValidationError& e) {
    throw ComputeError("InternalAssertionFailed",
                       std::string("descended product is not a group: ") + e.what());
  }
  res.table = std::move(t);
  return res;
}

namespace {

void require_retraction(const Bimodule& B, const GroupMap& rho) {
  if (rho.dom != B.R || rho.cod != B.A)
    throw ValidationError("NotARetraction", "retraction must map R into A");
  if (!rho.is_homomorphism)
    throw ValidationError("NotARetraction", "retraction must be a homomorphism");
  if (!is_continuous_map(rho))
    throw ValidationError("NotARetraction", "retraction must be continuous");
  for (int r = 0; r < B.R->order(); ++r) {
    if (B.mu(rho(r)) != r)
      throw ValidationError("NotARetraction", "mu o rho is not the identity at " + std::to_string(r));
    for (int g = 0; g < B.G->order(); ++g)
      if (rho(B.act_gr(g, r)) != B.act_ga(g, rho(r)))
        throw ValidationError("NotARetraction",
                              "retraction not G-equivariant at (" + std::to_string(g) + "," +
                                  std::to_string(r) + ")");
  }
}

}  // namespace

RetractionReport retraction_split_check(const Bimodule& B, const GroupMap& rho,
                                        bool continuous_only, const SizeGuard& guard) {
  require_retraction(B, rho);
  H1Set h1 = compute_h1(B, continuous_only, guard);
  PlainH1 plainA = plain_h1(*B.G, *B.A, B.g_on_a, continuous_only, guard);
  PlainH1 plainR = plain_h1(*B.G, *B.R, B.g_on_r, continuous_only, guard);
  ZetaResult z = zeta_embedding(B, h1, plainA);
  std::vector<int> mu1 = mu1_class_map(B, plainA, plainR);

  RetractionReport rep;
  rep.zeta_injective = z.injective;
  std::set<int> image(z.class_map.begin(), z.class_map.end());
  std::set<int> kernel;
  for (int c = 0; c < plainA.class_count(); ++c)
    if (mu1[c] == plainR.distinguished) kernel.insert(c);
  rep.image_matches_kernel = image == kernel;
  std::set<int> mu1_image(mu1.begin(), mu1.end());
  rep.mu1_surjective = (int)mu1_image.size() == plainR.class_count();
  if (!rep.exact()) {
    rep.witness = "image size " + std::to_string(image.size()) + ", kernel size " +
                  std::to_string(kernel.size()) + ", mu1 image " +
                  std::to_string(mu1_image.size()) + "/" + std::to_string(plainR.class_count());
  }
  return rep;
}

DirectSumReport direct_sum_check(const Bimodule& B, const GroupMap& rho, bool continuous_only,
                                 const SizeGuard& guard) {
  DirectSumReport out;
  if (!B.A->is_abelian() || !B.R->is_abelian()) {
    out.detail = "requires abelian A and R";
    return out;
  }
  try {
    require_retraction(B, rho);
  } catch (const ValidationError& e) {
    out.detail = e.what();
    return out;
  }
  H1Set h1 = compute_h1(B, continuous_only, guard);
  ElemSet ker = kernel_of(B.mu);
  for (Elem r = 0; r < B.R->order(); ++r)
    for (const auto& d : h1.der) {
      bool found = false;
      for (Elem a : ker) {
        bool eq = true;
        for (int g = 0; g < B.G->order() && eq; ++g)
          eq = B.act_ra(r, d.alpha[g]) ==
               B.A->mul(B.A->inv(a), B.A->mul(d.alpha[g], B.act_ga(g, a)));
        if (eq) {
          found = true;
          break;
        }
      }
      if (!found) {
        out.detail = "no kernel witness absorbs the action of r=" + std::to_string(r);
        return out;
      }
    }
  out.hypotheses_hold = true;

  PlainH1 plainA = plain_h1(*B.G, *B.A, B.g_on_a, continuous_only, guard);
  PlainH1 plainR = plain_h1(*B.G, *B.R, B.g_on_r, continuous_only, guard);
  out.counts_match =
      plainA.class_count() == h1.class_count() * plainR.class_count();

  std::set<int> hit;
  bool ok = out.counts_match;
  for (int i = 0; i < h1.class_count() && ok; ++i)
    for (int j = 0; j < plainR.class_count() && ok; ++j) {
      std::vector<Elem> prod(B.G->order());
      for (int g = 0; g < B.G->order(); ++g)
        prod[g] = B.A->mul(h1.representative(i).alpha[g], rho(plainR.representative(j)[g]));
      int c = plainA.class_of_hom(prod);
      ok = hit.insert(c).second;
      if (!ok) out.detail = "pairing is not injective at class " + std::to_string(c);
    }
  out.bijection = ok && (int)hit.size() == plainA.class_count();
  if (out.bijection) out.detail = "";
  else if (out.detail.empty()) out.detail = "pairing does not cover every class";
  return out;
}

TauResult tau_comparison(GroupPtr G, GroupPtr A, const GroupAction& act, bool continuous_only,
                         const SizeGuard& guard) {
  if (!A->is_abelian())
    throw ValidationError("NotAbelian", "tau comparison requires abelian coefficients");
  GroupPtr R = trivial_group();
  Bimodule bim = assemble_bimodule(G, R, A, trivial_map(A, R), act,
                                   trivial_action(G, R), trivial_action(R, A));
  TauResult t{std::move(bim), {}, {}, {}, false, false};
  t.h1 = compute_h1(t.bim, continuous_only, guard);
  t.plain = plain_h1(*G, *A, act, continuous_only, guard);

  t.map.resize(t.plain.class_count());
  for (int c = 0; c < t.plain.class_count(); ++c) {
    int target = -1;
    for (int m : t.plain.classes[c]) {
      int cls = t.h1.class_of_pair(DerPair{t.plain.homs[m], Group::id});
      if (target < 0) target = cls;
      else if (target != cls)
        throw ComputeError("WellDefinednessViolated", "tau depends on the representative");
    }
    t.map[c] = target;
  }
  std::set<int> image(t.map.begin(), t.map.end());
  t.bijection = (int)image.size() == t.plain.class_count() &&
                t.plain.class_count() == t.h1.class_count();

  // compare group structures: pointwise product of crossed homs vs star
  H1GroupResult hg = h1_group_structure(t.bim, t.h1);
  if (hg.table) {
    t.group_homomorphism = true;
    for (int c1 = 0; c1 < t.plain.class_count() && t.group_homomorphism; ++c1)
      for (int c2 = 0; c2 < t.plain.class_count() && t.group_homomorphism; ++c2) {
        std::vector<Elem> prod(G->order());
        for (int g = 0; g < G->order(); ++g)
          prod[g] = A->mul(t.plain.representative(c1)[g], t.plain.representative(c2)[g]);
        int lhs = t.map[t.plain.class_of_hom(prod)];
        int rhs = (*hg.table)[t.map[c1]][t.map[c2]];
        t.group_homomorphism = lhs == rhs;
      }
  }
  return t;
}

bool tau_naturality(GroupPtr G, GroupPtr A, GroupPtr B, const GroupAction& actA,
                    const GroupAction& actB, const GroupMap& f, bool continuous_only,
                    const SizeGuard& guard) {
  if (f.dom != A || f.cod != B)
    throw ValidationError("GroupMismatch", "naturality square needs f: A -> B");
  if (!f.is_homomorphism || !is_continuous_map(f))
    throw ValidationError("NotAHomomorphism", "f must be a continuous homomorphism");
  for (int g = 0; g < G->order(); ++g)
    for (int a = 0; a < A->order(); ++a)
      if (f(actA(g, a)) != actB(g, f(a)))
        throw ValidationError("DiagramDoesNotCommute", "f is not G-equivariant");

  TauResult tA = tau_comparison(G, A, actA, continuous_only, guard);
  TauResult tB = tau_comparison(G, B, actB, continuous_only, guard);

  auto push_hom = [&](const std::vector<Elem>& alpha) {
    std::vector<Elem> out(G->order());
    for (int g = 0; g < G->order(); ++g) out[g] = f(alpha[g]);
    return out;
  };
  for (int c = 0; c < tA.plain.class_count(); ++c) {
    int via_plain = tB.map[tB.plain.class_of_hom(push_hom(tA.plain.representative(c)))];
    int via_pairs = tB.h1.class_of_pair(
        DerPair{push_hom(tA.h1.representative(tA.map[c]).alpha), Group::id});
    if (via_plain != via_pairs) return false;
  }
  return true;
}

}  // namespace nabelh1

#include "change_of_groups.hpp"

#include <set>

namespace nabelh1 {

void validate_change(const Bimodule& src, const Bimodule& tgt, const ChangeTriple& t) {
  if (t.phi.dom != tgt.G || t.phi.cod != src.G)
    throw ValidationError("GroupMismatch", "phi must map the target group into the source group");
  if (t.varphi.dom != src.R || t.varphi.cod != tgt.R)
    throw ValidationError("GroupMismatch", "varphi must map the source R into the target R");
  if (t.psi.dom != src.A || t.psi.cod != tgt.A)
    throw ValidationError("GroupMismatch", "psi must map the source module into the target module");
  for (const GroupMap* m : {&t.phi, &t.varphi, &t.psi}) {
    if (!m->is_homomorphism)
      throw ValidationError("NotAHomomorphism", "change-of-groups maps must be homomorphisms");
    if (!is_continuous_map(*m))
      throw ValidationError("NotContinuous", "change-of-groups maps must be continuous");
  }
  const Group& Gp = *tgt.G;
  for (int gp = 0; gp < Gp.order(); ++gp) {
    Elem g = t.phi(gp);
    for (int a = 0; a < src.A->order(); ++a)
      if (t.psi(src.act_ga(g, a)) != tgt.act_ga(gp, t.psi(a)))
        throw ValidationError("DiagramDoesNotCommute",
                              "psi does not intertwine the group actions at (" +
                                  std::to_string(gp) + "," + std::to_string(a) + ")");
    for (int r = 0; r < src.R->order(); ++r)
      if (t.varphi(src.act_gr(g, r)) != tgt.act_gr(gp, t.varphi(r)))
        throw ValidationError("DiagramDoesNotCommute",
                              "varphi does not intertwine the actions on R at (" +
                                  std::to_string(gp) + "," + std::to_string(r) + ")");
  }
  for (int r = 0; r < src.R->order(); ++r)
    for (int a = 0; a < src.A->order(); ++a)
      if (t.psi(src.act_ra(r, a)) != tgt.act_ra(t.varphi(r), t.psi(a)))
        throw ValidationError("DiagramDoesNotCommute",
                              "psi does not intertwine the R-module structures at (" +
                                  std::to_string(r) + "," + std::to_string(a) + ")");
  for (int a = 0; a < src.A->order(); ++a)
    if (tgt.mu(t.psi(a)) != t.varphi(src.mu(a)))
      throw ValidationError("DiagramDoesNotCommute",
                            "structure maps do not commute with (varphi, psi) at " +
                                std::to_string(a));
}

std::vector<int> induced_class_map(const Bimodule& src, const Bimodule& tgt,
                                   const ChangeTriple& t, const H1Set& h1_src,
                                   const H1Set& h1_tgt) {
  (void)src;
  std::vector<int> map(h1_src.class_count(), -1);
  const Group& Gp = *tgt.G;
  for (size_t di = 0; di < h1_src.der.size(); ++di) {
    const DerPair& p = h1_src.der[di];
    DerPair img;
    img.alpha.resize(Gp.order());
    for (int gp = 0; gp < Gp.order(); ++gp) img.alpha[gp] = t.psi(p.alpha[t.phi(gp)]);
    img.r = t.varphi(p.r);
    if (!derpair_valid(tgt, img, false))
      throw ComputeError("NotADerPair", "induced image is not a derivation pair");
    int cls = h1_tgt.class_of_pair(img);
    int& slot = map[h1_src.class_of[di]];
    if (slot < 0) slot = cls;
    else if (slot != cls)
      throw ComputeError("WellDefinednessViolated",
                         "induced class map depends on the representative");
  }
  return map;
}

Restriction restriction(const Bimodule& B, const ElemSet& N) {
  Restriction out;
  out.restricted = restrict_bimodule(B, N);
  out.triple = ChangeTriple{out.restricted.inclusion, identity_map(B.R), identity_map(B.A)};
  return out;
}

Inflation inflation(const Bimodule& B, const ElemSet& N) {
  Inflation out;
  out.fixed = fixed_bimodule(B, N);
  out.triple = ChangeTriple{out.fixed.proj_G, out.fixed.incl_R, out.fixed.incl_A};
  return out;
}

QuotientActionH1N quotient_action_on_h1n(const Bimodule& B, const ElemSet& N,
                                         bool continuous_only, const SizeGuard& guard) {
  if (!B.G->is_normal(N))
    throw ValidationError("SubgroupNotNormal", "the quotient action needs a normal subgroup");
  QuotientActionH1N q;
  q.N = N;
  q.restricted = restrict_bimodule(B, N);
  q.h1n = compute_h1(q.restricted.bim, continuous_only, guard);

  const Group& G = *B.G;
  const Group& Sub = *q.restricted.bim.G;
  std::vector<int> idx(G.order(), -1);
  for (int i = 0; i < Sub.order(); ++i) idx[q.restricted.inclusion(i)] = i;

  const int K = q.h1n.class_count();
  q.perm.assign(G.order(), std::vector<Elem>(K, -1));
  for (int g = 0; g < G.order(); ++g) {
    for (size_t di = 0; di < q.h1n.der.size(); ++di) {
      const DerPair& p = q.h1n.der[di];
      DerPair img;
      img.alpha.resize(Sub.order());
      for (int i = 0; i < Sub.order(); ++i) {
        Elem moved = G.mul(G.mul(G.inv(g), q.restricted.inclusion(i)), g);
        int mi = idx[moved];
        if (mi < 0)
          throw ComputeError("InternalAssertionFailed", "conjugate left the normal subgroup");
        img.alpha[i] = B.act_ga(g, p.alpha[mi]);
      }
      img.r = B.act_gr(g, p.r);
      int cls = q.h1n.class_of_pair(img);
      int& slot = q.perm[g][q.h1n.class_of[di]];
      if (slot < 0) slot = cls;
      else if (slot != cls)
        throw ComputeError("WellDefinednessViolated",
                           "quotient action on classes depends on the representative");
    }
  }

  q.genuine_action = true;
  for (int c = 0; c < K && q.genuine_action; ++c)
    q.genuine_action = q.perm[Group::id][c] == c;
  for (int g = 0; g < G.order() && q.genuine_action; ++g)
    for (int h = 0; h < G.order() && q.genuine_action; ++h)
      for (int c = 0; c < K && q.genuine_action; ++c)
        q.genuine_action = q.perm[G.mul(g, h)][c] == q.perm[g][q.perm[h][c]];

  q.n_acts_trivially = true;
  for (Elem n : N)
    for (int c = 0; c < K && q.n_acts_trivially; ++c)
      q.n_acts_trivially = q.perm[n][c] == c;

  for (int c = 0; c < K; ++c) {
    bool fixed = true;
    for (int g = 0; g < G.order() && fixed; ++g) fixed = q.perm[g][c] == c;
    if (fixed) q.fixed_classes.push_back(c);
  }
  return q;
}

InfResReport inf_res_exactness(const Bimodule& B, const ElemSet& N, bool continuous_only,
                               const SizeGuard& guard) {
  InfResReport rep;
  rep.N = N;

  Inflation inf = inflation(B, N);
  validate_change(inf.fixed.bim, B, inf.triple);
  QuotientActionH1N qa = quotient_action_on_h1n(B, N, continuous_only, guard);
  ChangeTriple res_triple{qa.restricted.inclusion, identity_map(B.R), identity_map(B.A)};
  validate_change(B, qa.restricted.bim, res_triple);

  H1Set h1q = compute_h1(inf.fixed.bim, continuous_only, guard);
  H1Set h1g = compute_h1(B, continuous_only, guard);
  rep.quotient_classes = h1q.class_count();
  rep.full_classes = h1g.class_count();
  rep.subgroup_classes = qa.h1n.class_count();

  rep.inf_map = induced_class_map(inf.fixed.bim, B, inf.triple, h1q, h1g);
  rep.res_map = induced_class_map(B, qa.restricted.bim, res_triple, h1g, qa.h1n);

  std::set<int> image(rep.inf_map.begin(), rep.inf_map.end());
  rep.inf_injective = image.size() == rep.inf_map.size();
  std::set<int> kernel;
  for (int c = 0; c < h1g.class_count(); ++c)
    if (rep.res_map[c] == qa.h1n.distinguished) kernel.insert(c);
  rep.kernel_equals_image = kernel == image;

  std::set<int> fixed(qa.fixed_classes.begin(), qa.fixed_classes.end());
  rep.res_into_fixed = true;
  for (int c : rep.res_map)
    if (!fixed.count(c)) {
      rep.res_into_fixed = false;
      break;
    }

  if (!rep.exact())
    rep.detail = "inflation image " + std::to_string(image.size()) + ", restriction kernel " +
                 std::to_string(kernel.size()) + ", fixed classes " +
                 std::to_string(fixed.size());
  return rep;
}

}  // namespace nabelh1

#include "bimodule.hpp"

#include <algorithm>

namespace nabelh1 {

const char* level_name(CrossLevel level) {
  switch (level) {
    case CrossLevel::Precrossed: return "precrossed";
    case CrossLevel::PartiallyCrossed: return "partially_crossed";
    case CrossLevel::Crossed: return "crossed";
  }
  return "?";
}

std::optional<CrossLevel> ClassifyReport::level() const {
  if (crossed) return CrossLevel::Crossed;
  if (partially_crossed) return CrossLevel::PartiallyCrossed;
  if (precrossed) return CrossLevel::Precrossed;
  return std::nullopt;
}

ClassifyReport classify_bimodule(const Bimodule& B) {
  const Group& G = *B.G;
  const Group& R = *B.R;
  const Group& A = *B.A;
  ClassifyReport rep;
  auto violate = [&](const std::string& law, std::vector<Elem> w) {
    rep.violations.push_back(LawViolation{law, std::move(w)});
  };

  bool base = true;
  if (!is_continuous_map(B.mu)) {
    base = false;
    violate("mu-continuous", {});
  }
  if (!is_continuous_action(B.g_on_a)) {
    base = false;
    violate("G-action-on-A-continuous", {});
  }
  if (!is_continuous_action(B.g_on_r)) {
    base = false;
    violate("G-action-on-R-continuous", {});
  }
  if (!is_continuous_action(B.r_on_a)) {
    base = false;
    violate("R-action-on-A-continuous", {});
  }

  // mu(^r a) = r mu(a) r^-1
  for (int r = 0; r < R.order(); ++r)
    for (int a = 0; a < A.order(); ++a)
      if (B.mu(B.act_ra(r, a)) != R.conj(r, B.mu(a))) {
        base = false;
        violate("mu-R-equivariant", {r, a});
        r = R.order();
        break;
      }
  // mu(^g a) = ^g mu(a)
  for (int g = 0; g < G.order(); ++g)
    for (int a = 0; a < A.order(); ++a)
      if (B.mu(B.act_ga(g, a)) != B.act_gr(g, B.mu(a))) {
        base = false;
        violate("mu-G-equivariant", {g, a});
        g = G.order();
        break;
      }
  // ^(^g r) a = ^g(^r(^(g^-1) a))
  {
    bool ok = true;
    for (int g = 0; g < G.order() && ok; ++g)
      for (int r = 0; r < R.order() && ok; ++r)
        for (int a = 0; a < A.order() && ok; ++a)
          if (B.act_ra(B.act_gr(g, r), a) !=
              B.act_ga(g, B.act_ra(r, B.act_ga(G.inv(g), a)))) {
            ok = false;
            base = false;
            violate("mixed-action-law", {g, r, a});
          }
  }
  rep.precrossed = base;

  ElemSet commR = R.commutator_subgroup();
  std::optional<std::pair<Elem, Elem>> full_fail, partial_fail;
  for (int a = 0; a < A.order(); ++a) {
    bool mu_in_comm = set_contains(commR, B.mu(a));
    for (int b = 0; b < A.order(); ++b) {
      if (B.act_ra(B.mu(a), b) == A.conj(a, b)) continue;
      if (!full_fail) full_fail = {a, b};
      if (mu_in_comm && !partial_fail) partial_fail = {a, b};
    }
  }
  if (partial_fail) violate("partial-peiffer-law", {partial_fail->first, partial_fail->second});
  if (full_fail) violate("peiffer-law", {full_fail->first, full_fail->second});
  rep.partially_crossed = base && !partial_fail;
  rep.crossed = base && !full_fail;
  return rep;
}

Bimodule assemble_bimodule(GroupPtr G, GroupPtr R, GroupPtr A, GroupMap mu,
                           GroupAction g_on_a, GroupAction g_on_r, GroupAction r_on_a) {
  if (mu.dom != A || mu.cod != R)
    throw ValidationError("GroupMismatch", "mu must map A into R");
  if (!mu.is_homomorphism)
    throw ValidationError("NotAHomomorphism", "mu must be a homomorphism");
  if (g_on_a.actor != G || g_on_a.space != A)
    throw ValidationError("GroupMismatch", "G-on-A action components do not match");
  if (g_on_r.actor != G || g_on_r.space != R)
    throw ValidationError("GroupMismatch", "G-on-R action components do not match");
  if (r_on_a.actor != R || r_on_a.space != A)
    throw ValidationError("GroupMismatch", "R-on-A action components do not match");

  Bimodule B{std::move(G), std::move(R), std::move(A), std::move(mu),
             std::move(g_on_a), std::move(g_on_r), std::move(r_on_a),
             CrossLevel::Precrossed};
  ClassifyReport rep = classify_bimodule(B);
  auto lvl = rep.level();
  if (!lvl) {
    std::string msg = "not precrossed:";
    for (const auto& v : rep.violations) {
      msg += " " + v.law;
      if (!v.witness.empty()) {
        msg += "(";
        for (size_t i = 0; i < v.witness.size(); ++i)
          msg += (i ? "," : "") + std::to_string(v.witness[i]);
        msg += ")";
      }
    }
    throw ValidationError("NotPrecrossed", msg);
  }
  B.level = *lvl;
  return B;
}

Bimodule make_conjugation_bimodule(GroupPtr G, GroupPtr A, const GroupAction& g_on_a) {
  if (g_on_a.actor != G || g_on_a.space != A)
    throw ValidationError("GroupMismatch", "action components do not match");
  Quotient q = quotient_by(A, A->center());
  GroupPtr R = q.group;

  const int nr = R->order(), na = A->order(), ng = G->order();
  Table ra(nr, std::vector<Elem>(na));
  for (int r = 0; r < nr; ++r)
    for (int a = 0; a < na; ++a) ra[r][a] = A->conj(q.coset_rep[r], a);
  Table gr(ng, std::vector<Elem>(nr));
  for (int g = 0; g < ng; ++g)
    for (int r = 0; r < nr; ++r) gr[g][r] = q.projection(g_on_a(g, q.coset_rep[r]));

  Bimodule B = assemble_bimodule(G, R, A, q.projection, g_on_a,
                                 validate_action(G, R, std::move(gr)),
                                 validate_action(R, A, std::move(ra)));
  if (B.level != CrossLevel::Crossed)
    throw ComputeError("InternalAssertionFailed", "conjugation bimodule must be crossed");
  return B;
}

Bimodule as_selfbimodule(GroupPtr R, GroupPtr A, const GroupMap& mu,
                         const GroupAction& r_on_a) {
  return assemble_bimodule(R, R, A, mu, r_on_a, conjugation_action(R), r_on_a);
}

void validate_bimodule_morphism(const Bimodule& src, const Bimodule& tgt, const GroupMap& f) {
  if (src.G != tgt.G || src.R != tgt.R)
    throw ValidationError("GroupMismatch", "morphism requires the same G and R");
  if (f.dom != src.A || f.cod != tgt.A)
    throw ValidationError("GroupMismatch", "morphism must map source A to target A");
  if (!f.is_homomorphism)
    throw ValidationError("NotAHomomorphism", "morphism must be a homomorphism");
  if (!is_continuous_map(f))
    throw ValidationError("NotContinuous", "morphism must be continuous");
  for (int a = 0; a < src.A->order(); ++a) {
    if (tgt.mu(f(a)) != src.mu(a))
      throw ValidationError("DiagramDoesNotCommute",
                            "structure maps disagree at " + std::to_string(a));
    for (int g = 0; g < src.G->order(); ++g)
      if (f(src.act_ga(g, a)) != tgt.act_ga(g, f(a)))
        throw ValidationError("DiagramDoesNotCommute",
                              "morphism not G-equivariant at (" + std::to_string(g) + "," +
                                  std::to_string(a) + ")");
    for (int r = 0; r < src.R->order(); ++r)
      if (f(src.act_ra(r, a)) != tgt.act_ra(r, f(a)))
        throw ValidationError("DiagramDoesNotCommute",
                              "morphism not R-equivariant at (" + std::to_string(r) + "," +
                                  std::to_string(a) + ")");
  }
}

RestrictedBimodule restrict_bimodule(const Bimodule& B, const ElemSet& N) {
  SubgroupEmbedding s = subgroup_as_group(B.G, N);
  const int k = s.group->order();
  Table ga(k), gr(k);
  for (int i = 0; i < k; ++i) {
    ga[i] = B.g_on_a.table[s.inclusion(i)];
    gr[i] = B.g_on_r.table[s.inclusion(i)];
  }
  Bimodule out = assemble_bimodule(s.group, B.R, B.A, B.mu,
                                   validate_action(s.group, B.A, std::move(ga)),
                                   validate_action(s.group, B.R, std::move(gr)), B.r_on_a);
  return RestrictedBimodule{std::move(out), std::move(s.inclusion)};
}

ElemSet kernel_of(const GroupMap& f) {
  ElemSet ker;
  for (int x = 0; x < f.dom->order(); ++x)
    if (f(x) == Group::id) ker.push_back(x);
  return ker;
}

ElemSet h0_set(const GroupAction& act) { return fixed_points(act).elements; }

namespace {

// fixed points of the N-restriction of act, as a subgroup embedding
SubgroupEmbedding fixed_sub(const GroupAction& act, const ElemSet& N) {
  ElemSet fix;
  for (int a = 0; a < act.space->order(); ++a) {
    bool ok = true;
    for (Elem n : N) ok = ok && act(n, a) == a;
    if (ok) fix.push_back(a);
  }
  return subgroup_as_group(act.space, fix);
}

}  // namespace

FixedBimodule fixed_bimodule(const Bimodule& B, const ElemSet& N) {
  Quotient q = quotient_by(B.G, N);
  SubgroupEmbedding fa = fixed_sub(B.g_on_a, N);
  SubgroupEmbedding fr = fixed_sub(B.g_on_r, N);
  const int na = fa.group->order(), nr = fr.group->order(), nq = q.group->order();

  std::vector<Elem> mu_im(na);
  for (int i = 0; i < na; ++i) {
    Elem t = fr.index_in_sub[B.mu(fa.inclusion(i))];
    if (t < 0)
      throw ComputeError("InternalAssertionFailed", "mu does not preserve fixed points");
    mu_im[i] = t;
  }

  auto restricted_action = [&](const GroupAction& act, const SubgroupEmbedding& sub,
                               int nsub) {
    Table t(nq, std::vector<Elem>(nsub));
    for (int c = 0; c < nq; ++c)
      for (int i = 0; i < nsub; ++i) {
        Elem img = sub.index_in_sub[act(q.coset_rep[c], sub.inclusion(i))];
        if (img < 0)
          throw ComputeError("ActionNotWellDefined", "coset action leaves the fixed subgroup");
        t[c][i] = img;
      }
    // well-definedness across every member of each coset
    for (int g = 0; g < B.G->order(); ++g) {
      int c = q.projection(g);
      for (int i = 0; i < nsub; ++i)
        if (sub.index_in_sub[act(g, sub.inclusion(i))] != t[c][i])
          throw ComputeError("ActionNotWellDefined",
                             "coset action depends on the representative at g=" +
                                 std::to_string(g));
    }
    return t;
  };

  Table qa = restricted_action(B.g_on_a, fa, na);
  Table qr = restricted_action(B.g_on_r, fr, nr);
  Table ra(nr, std::vector<Elem>(na));
  for (int r = 0; r < nr; ++r)
    for (int i = 0; i < na; ++i) {
      Elem img = fa.index_in_sub[B.act_ra(fr.inclusion(r), fa.inclusion(i))];
      if (img < 0)
        throw ComputeError("ActionNotWellDefined", "fixed R-action leaves the fixed subgroup");
      ra[r][i] = img;
    }

  Bimodule out = assemble_bimodule(
      q.group, fr.group, fa.group, validate_map(fa.group, fr.group, std::move(mu_im), true),
      validate_action(q.group, fa.group, std::move(qa)),
      validate_action(q.group, fr.group, std::move(qr)),
      validate_action(fr.group, fa.group, std::move(ra)));
  return FixedBimodule{std::move(out), std::move(q.projection), std::move(fa.inclusion),
                       std::move(fr.inclusion)};
}

}  // namespace nabelh1

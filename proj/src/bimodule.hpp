// Topological G-R-bimodules: a group A with a structure map mu: A -> R and
// compatible continuous actions of G on A, G on R, and R on A.  Classified by
// how much of the Peiffer law holds.
#pragma once

#include "group.hpp"

namespace nabelh1 {

enum class CrossLevel { Precrossed = 0, PartiallyCrossed = 1, Crossed = 2 };
const char* level_name(CrossLevel level);

struct Bimodule {
  GroupPtr G, R, A;
  GroupMap mu;          // A -> R
  GroupAction g_on_a;   // G x A -> A
  GroupAction g_on_r;   // G x R -> R
  GroupAction r_on_a;   // R x A -> A
  CrossLevel level = CrossLevel::Precrossed;

  Elem act_ga(Elem g, Elem a) const { return g_on_a(g, a); }
  Elem act_gr(Elem g, Elem r) const { return g_on_r(g, r); }
  Elem act_ra(Elem r, Elem a) const { return r_on_a(r, a); }
};

struct LawViolation {
  std::string law;
  std::vector<Elem> witness;
};

struct ClassifyReport {
  bool precrossed = false;
  bool partially_crossed = false;  // precrossed laws plus the partial Peiffer law
  bool crossed = false;            // precrossed laws plus the full Peiffer law
  std::vector<LawViolation> violations;  // every violated law, with a witness each
  std::optional<CrossLevel> level() const;
};

// Checks every law and reports all violations; never throws on law failure.
ClassifyReport classify_bimodule(const Bimodule& candidate);

// Validates component shapes, classifies, and stamps the strongest level.
// Throws NotPrecrossed (message lists every violated law) if below Precrossed.
Bimodule assemble_bimodule(GroupPtr G, GroupPtr R, GroupPtr A, GroupMap mu,
                           GroupAction g_on_a, GroupAction g_on_r, GroupAction r_on_a);

// R = A / Z(A) with the quotient topology, mu the projection, R acting by
// conjugation through coset representatives.  Always classifies Crossed.
Bimodule make_conjugation_bimodule(GroupPtr G, GroupPtr A, const GroupAction& g_on_a);

// View an R-module (A, mu) as a bimodule over G = R acting on itself by
// conjugation.
Bimodule as_selfbimodule(GroupPtr R, GroupPtr A, const GroupMap& mu,
                         const GroupAction& r_on_a);

// Morphism of bimodules over the same (G, R): continuous homomorphism
// f: A -> B commuting with both actions, with nu o f = mu.
void validate_bimodule_morphism(const Bimodule& src, const Bimodule& tgt, const GroupMap& f);

struct RestrictedBimodule {
  Bimodule bim;        // over the subgroup with its subspace topology
  GroupMap inclusion;  // bim.G -> original G
};
RestrictedBimodule restrict_bimodule(const Bimodule& B, const ElemSet& N);

struct FixedBimodule {
  Bimodule bim;      // (A^N, mu) over (G/N, R^N)
  GroupMap proj_G;   // G -> bim.G
  GroupMap incl_A;   // bim.A -> A
  GroupMap incl_R;   // bim.R -> R
};
FixedBimodule fixed_bimodule(const Bimodule& B, const ElemSet& N);  // N normal in G

ElemSet kernel_of(const GroupMap& f);
ElemSet h0_set(const GroupAction& act);  // fixed points as a sorted list

}  // namespace nabelh1

// Crossed homomorphisms, derivation pairs (alpha, r), their star product, and
// the first cohomology of a bimodule as the quotient of the continuous
// derivation pairs by the conjugation + companion relation.
#pragma once

#include "bimodule.hpp"

#include <compare>

namespace nabelh1 {

struct DerPair {
  std::vector<Elem> alpha;  // indexed by G
  Elem r = 0;
  auto operator<=>(const DerPair&) const = default;
};

// alpha(gh) = alpha(g) * ^g alpha(h); enumerated by backtracking over a
// minimal generating sequence with closure propagation.
std::vector<std::vector<Elem>> enumerate_crossed_homs(const Group& G, const Group& A,
                                                      const GroupAction& act,
                                                      bool continuous_only,
                                                      const SizeGuard& guard);
bool crossed_hom_identity_holds(const Group& G, const Group& A, const GroupAction& act,
                                const std::vector<Elem>& alpha);

// pairs with mu(alpha(g)) = r * (^g r)^-1 for all g
std::vector<DerPair> enumerate_der(const Bimodule& B, bool continuous_only,
                                   const SizeGuard& guard);
bool derpair_valid(const Bimodule& B, const DerPair& p, bool continuous);
DerPair trivial_der_pair(const Bimodule& B);

// (alpha, r) * (beta, s) = (g -> ^r beta(g) * alpha(g), rs); needs the partial
// Peiffer law, so gated on level >= PartiallyCrossed.
DerPair star_product(const DerPair& p, const DerPair& q, const Bimodule& B);

struct DerGroup {
  std::vector<DerPair> elems;
  Table table;
  std::vector<int> inverse;
  int identity = 0;
};
DerGroup der_group(const Bimodule& B, bool continuous_only, const SizeGuard& guard);

// (alpha, r) ~ (beta, s) iff some a has beta(g) = a^-1 alpha(g) ^g a for all g
// and s = mu(a)^-1 r z for some fixed point z of the G-action on R.
struct EquivalenceWitness {
  Elem a;
  Elem z;
};
std::optional<EquivalenceWitness> equivalent(const DerPair& p, const DerPair& q,
                                             const Bimodule& B);

// true iff whenever the conjugation condition holds with witness a, the
// companion condition holds automatically for the same a
bool companion_condition_redundant(const Bimodule& B, bool continuous_only,
                                   const SizeGuard& guard, std::string* witness = nullptr);

struct H1Set {
  std::vector<DerPair> der;  // sorted lexicographically
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;
  std::vector<int> rep;  // lex-least member index per class
  int distinguished = 0;

  int class_count() const { return (int)classes.size(); }
  const DerPair& representative(int cls) const { return der[rep[cls]]; }
  int find(const DerPair& p) const;          // index in der, -1 if absent
  int class_of_pair(const DerPair& p) const; // throws ComputeError if absent
};
H1Set compute_h1(const Bimodule& B, bool continuous_only = true, const SizeGuard& guard = {});

// classes of continuous crossed homs under beta(g) = a^-1 alpha(g) ^g a alone
struct PlainH1 {
  std::vector<std::vector<Elem>> homs;
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;
  std::vector<int> rep;
  int distinguished = 0;

  int class_count() const { return (int)classes.size(); }
  const std::vector<Elem>& representative(int cls) const { return homs[rep[cls]]; }
  int find(const std::vector<Elem>& alpha) const;
  int class_of_hom(const std::vector<Elem>& alpha) const;
};
PlainH1 plain_h1(const Group& G, const Group& A, const GroupAction& act,
                 bool continuous_only = true, const SizeGuard& guard = {});
std::optional<Elem> plain_equivalent(const Group& G, const Group& A, const GroupAction& act,
                                     const std::vector<Elem>& alpha,
                                     const std::vector<Elem>& beta);

Bimodule conjugation_bimodule_of(const Bimodule& B);  // from (G, A, g_on_a)
H1Set bar_h1(GroupPtr G, GroupPtr A, const GroupAction& act, bool continuous_only,
             const SizeGuard& guard);

struct ZetaResult {
  std::vector<int> class_map;  // h1 class -> plain class
  bool injective = false;
  bool surjective = false;
};
ZetaResult zeta_embedding(const Bimodule& B, const H1Set& h1, const PlainH1& plain);

std::vector<int> mu1_class_map(const Bimodule& B, const PlainH1& plainA, const PlainH1& plainR);
bool mu1_trivial(const Bimodule& B, const PlainH1& plainA, const PlainH1& plainR);

// inner pairs (a ^g a^-1, mu(a) z); requires level Crossed
std::vector<DerPair> inn_pairs(const Bimodule& B);
struct InnNormality {
  bool direct = false;     // d * i * d^-1 stays inner for all d, i
  bool criterion = false;  // g -> ^(^r z)(alpha(g)^-1) alpha(g) is inner for all (alpha,r), z
};
InnNormality inn_normality(const Bimodule& B, bool continuous_only, const SizeGuard& guard);

struct H0ClassAction {
  ElemSet h0;
  Table perm;  // h0 position x class -> class
};
H0ClassAction h0_action_on_h1(const Bimodule& B, const H1Set& h1);

enum class H1GroupStatus { ViaConditions, Unconditional, NotAGroup };
struct H1GroupResult {
  H1GroupStatus status = H1GroupStatus::NotAGroup;
  bool condition_fixed_normal = false;    // fixed points of G on R normal in R
  bool condition_kernel_witness = false;  // ^c alpha absorbed by a kernel element
  std::optional<Table> table;
  std::string violation;
};
H1GroupResult h1_group_structure(const Bimodule& B, const H1Set& h1);

struct RetractionReport {
  bool zeta_injective = false;
  bool image_matches_kernel = false;
  bool mu1_surjective = false;
  std::string witness;
  bool exact() const { return zeta_injective && image_matches_kernel && mu1_surjective; }
};
// rho: R -> A continuous G-homomorphism with mu o rho = id
RetractionReport retraction_split_check(const Bimodule& B, const GroupMap& rho,
                                        bool continuous_only, const SizeGuard& guard);

struct DirectSumReport {
  bool hypotheses_hold = false;
  bool counts_match = false;
  bool bijection = false;
  std::string detail;
};
DirectSumReport direct_sum_check(const Bimodule& B, const GroupMap& rho, bool continuous_only,
                                 const SizeGuard& guard);

// A abelian, viewed over the one-point R: classes of crossed homs coincide
// with classes of pairs (alpha, e)
struct TauResult {
  Bimodule bim;
  H1Set h1;
  PlainH1 plain;
  std::vector<int> map;  // plain class -> h1 class
  bool bijection = false;
  bool group_homomorphism = false;  // vs pointwise product when both sides are groups
};
TauResult tau_comparison(GroupPtr G, GroupPtr A, const GroupAction& act, bool continuous_only,
                         const SizeGuard& guard);
// square tau_B o f1 = f1 o tau_A for a G-map f: A -> B of abelian modules
bool tau_naturality(GroupPtr G, GroupPtr A, GroupPtr B, const GroupAction& actA,
                    const GroupAction& actB, const GroupMap& f, bool continuous_only,
                    const SizeGuard& guard);

}  // namespace nabelh1

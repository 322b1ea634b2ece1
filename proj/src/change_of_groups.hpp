// Functoriality: a triple (phi, varphi, psi) between bimodules over different
// group pairs induces a map on first cohomology.  Restriction to an open or
// plain normal subgroup and inflation from the quotient are the two stock
// instances, and they fit into an exact sequence.
#pragma once

#include "cohomology.hpp"

namespace nabelh1 {

// source over (G, R) with module A, target over (G', R') with module A';
// phi: G' -> G, varphi: R -> R', psi: A -> A', all continuous homomorphisms
struct ChangeTriple {
  GroupMap phi;
  GroupMap varphi;
  GroupMap psi;
};

// throws GroupMismatch / NotAHomomorphism / NotContinuous /
// DiagramDoesNotCommute with a witness in the message
void validate_change(const Bimodule& src, const Bimodule& tgt, const ChangeTriple& t);

// [(alpha, r)] -> [(psi o alpha o phi, varphi(r))], one entry per src class
std::vector<int> induced_class_map(const Bimodule& src, const Bimodule& tgt,
                                   const ChangeTriple& t, const H1Set& h1_src,
                                   const H1Set& h1_tgt);

struct Restriction {
  RestrictedBimodule restricted;
  ChangeTriple triple;  // inclusion, identity, identity
};
Restriction restriction(const Bimodule& B, const ElemSet& N);

struct Inflation {
  FixedBimodule fixed;  // (A^N, mu) over (G/N, R^N)
  ChangeTriple triple;  // projection, inclusion, inclusion
};
Inflation inflation(const Bimodule& B, const ElemSet& N);

// G acts on derivation pairs of the restricted bimodule by
// ^g (alpha, r) = (n -> ^g alpha(g^-1 n g), ^g r); descends to classes.
struct QuotientActionH1N {
  ElemSet N;
  RestrictedBimodule restricted;
  H1Set h1n;
  Table perm;               // G element x class -> class
  bool genuine_action = false;    // identity trivial and compatible with products
  bool n_acts_trivially = false;  // members of N fix every class
  std::vector<int> fixed_classes;
};
QuotientActionH1N quotient_action_on_h1n(const Bimodule& B, const ElemSet& N,
                                         bool continuous_only, const SizeGuard& guard);

struct InfResReport {
  ElemSet N;
  int quotient_classes = 0;  // H1 of (A^N over G/N)
  int full_classes = 0;      // H1 over G
  int subgroup_classes = 0;  // H1 over N
  std::vector<int> inf_map;
  std::vector<int> res_map;
  bool inf_injective = false;
  bool kernel_equals_image = false;  // ker(res) == im(inf) as class sets
  bool res_into_fixed = false;       // im(res) inside the fixed classes
  std::string detail;
  bool exact() const { return inf_injective && kernel_equals_image && res_into_fixed; }
};
InfResReport inf_res_exactness(const Bimodule& B, const ElemSet& N, bool continuous_only,
                               const SizeGuard& guard);

}  // namespace nabelh1

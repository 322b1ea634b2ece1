// Principal homogeneous spaces over a bimodule: a finite right A-set with a
// compatible G-action and a twisted-equivariant map into R, carrying the
// topology transported from A.  Classified by first cohomology.
#pragma once

#include "cohomology.hpp"

namespace nabelh1 {

struct Torsor {
  Table g_action;        // |G| x |P|
  Table a_action;        // |P| x |A|, right action p.a
  std::vector<Elem> f;   // P -> R
  int points() const { return (int)f.size(); }
};

// div[p][x] = the unique a with p.a = x; throws NotATorsor if the action is
// not simply transitive
Table torsor_division(const Torsor& T, const Group& A);

// checks every torsor law including continuity of the G-action and of f with
// respect to the transported topology; throws MalformedTable / NotATorsor
void validate_torsor(const Bimodule& B, const Torsor& T);

// P = A, g.a = alpha(g) * ^g a, right translation, f(a) = mu(a)^-1 * r
Torsor twisted_torsor(const Bimodule& B, const DerPair& p);
Torsor trivial_torsor(const Bimodule& B);  // twisted by the trivial pair

// the derivation pair (alpha_p, f(p)) with ^g p = p . alpha_p(g)
DerPair lambda_pair(const Torsor& T, const Bimodule& B, Elem p);
// class of lambda_pair; asserted equal over every basepoint
int lambda_class(const Torsor& T, const Bimodule& B, const H1Set& h1);

// builds the twisted torsor of the class representative and asserts the
// member torsors are all isomorphic to it
Torsor gamma(const Bimodule& B, const H1Set& h1, int cls);

// nu: P1 -> P2 compatible with both actions, with f1 = (f2 o nu) * z for one
// uniform fixed point z; the A-action pins nu once nu(0) is chosen
std::optional<std::vector<Elem>> torsor_iso(const Torsor& T1, const Torsor& T2,
                                            const Bimodule& B);

struct TorsorClassification {
  std::vector<DerPair> models;  // twisted models, one per continuous der pair
  std::vector<int> iso_class;
  std::vector<std::vector<int>> classes;
  std::vector<int> lambda_of;  // model -> h1 class
  bool bijection = false;      // iso classes correspond one-to-one to h1 classes

  int class_count() const { return (int)classes.size(); }
};
TorsorClassification classify_torsors(const Bimodule& B, bool continuous_only,
                                      const SizeGuard& guard);

// twisted model of the star product of the two basepoint pairs; requires the
// class product to be well defined; throws ComputeError("NoGroupStructure")
Torsor torsor_product(const Torsor& T1, const Torsor& T2, Elem p1, Elem p2, const Bimodule& B,
                      const H1Set& h1);

}  // namespace nabelh1

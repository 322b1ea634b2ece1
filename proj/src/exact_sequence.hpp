// Proper extensions of bimodules over a fixed (G, R) with continuous
// normalized sections, the two connecting maps out of fixed points and first
// cohomology, factor sets, second cohomology for abelian coefficients, and the
// seven-term exactness verifier.
#pragma once

#include "cohomology.hpp"

namespace nabelh1 {

struct Extension {
  Bimodule a_bim, b_bim, c_bim;  // same G and R throughout; mu of A trivial
  GroupMap iota;                 // A -> B, homeomorphic embedding onto ker pi
  GroupMap pi;                   // B -> C, continuous open surjection
  std::vector<Elem> section;     // C -> B, continuous, pi o s = id, s(e) = e
  std::vector<Elem> iota_inv;    // B -> A, -1 off the image
};

// Checks exactness, the commuting diagrams, the embedding and properness
// conditions, and the section; searches for a lexicographically least
// continuous normalized section when none is supplied.
// Throws NotExact / NotProper / NoContinuousSection / DiagramDoesNotCommute.
Extension validate_extension(Bimodule a_bim, Bimodule b_bim, Bimodule c_bim, GroupMap iota,
                             GroupMap pi, std::optional<std::vector<Elem>> section,
                             const SizeGuard& guard = {});

// every continuous normalized section, lexicographic order
std::vector<std::vector<Elem>> enumerate_continuous_sections(const Extension& E,
                                                             const SizeGuard& guard);

struct FactorSet {
  Table table;  // (g, h) -> A
  bool normalized = false;
};

// validates the cocycle identity ^g f(h,k) * f(g,hk) = f(gh,k) * f(g,h) and
// two-variable continuity; throws ComputeError("NotAFactorSet") with a witness
FactorSet make_factor_set(const Group& G, const Group& A, const GroupAction& act, Table t);

// kappa continuous with kappa(e) = e; the factor set (g,h) -> ^g kappa(h) * kappa(gh)^-1 * kappa(g)
FactorSet coboundary_1(const Group& G, const Group& A, const GroupAction& act,
                       const std::vector<Elem>& kappa);

// g -> iota^-1(b^-1 * ^g b) for any lift b of c; throws NotFixed
std::vector<Elem> delta0_hom(const Extension& E, Elem c);
// asserts the class is the same over every lift
int delta0_class(const Extension& E, Elem c, const PlainH1& plain_a);

// tilde table (g,h) -> iota^-1(s gamma(g) * ^g(s gamma(h)) * (s gamma(gh))^-1)
Table delta1_raw_table(const Extension& E, const std::vector<Elem>& gamma);

// first continuous normalized kappa with f = coboundary of kappa, lex order
std::optional<std::vector<Elem>> is_coboundary(const Group& G, const Group& A,
                                               const GroupAction& act, const Table& f,
                                               const SizeGuard& guard);

struct H2Group {
  std::vector<Table> cocycles;  // normalized continuous, sorted
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;
  std::vector<int> rep;
  int distinguished = 0;
  Table table;  // class product

  int class_count() const { return (int)classes.size(); }
  int class_of_table(const Table& t) const;  // throws ComputeError if absent
};
H2Group compute_h2(const Group& G, const Group& A, const GroupAction& act,
                   const SizeGuard& guard = {});

struct Delta1Result {
  FactorSet tilde;
  int h2_class = -1;  // set when an H2Group is supplied
  bool representative_independent = false;
  bool section_independent = false;
  int sections_checked = 0;  // 0 when the sweep was skipped by the size guard
};
Delta1Result delta1(const Extension& E, const H1Set& h1c, int cls, const H2Group* h2,
                    const SizeGuard& guard = {});

// z(g) = iota^-1(beta(g)^-1 * s pi beta(g)) turns tilde of pi beta into a
// coboundary pointwise, for every derivation pair of B
bool forward_inclusion_witness_check(const Extension& E, const H1Set& h1b, std::string* detail);

struct SevenTermReport {
  ElemSet h0a, h0b, h0c;
  int plain_a_classes = 0;
  int b_classes = 0;
  int c_classes = 0;
  int h2_classes = -1;  // -1 when A is not abelian
  std::vector<int> delta0_map;       // h0c position -> plain A class
  std::vector<int> iota1_map;        // plain A class -> H1(B) class
  std::vector<int> pi1_map;          // H1(B) class -> H1(C) class
  std::vector<char> delta1_vanishes; // H1(C) class -> tilde is a coboundary
  std::vector<int> delta1_map;       // H1(C) class -> H2 class; empty if no H2
  bool h0_injective = false;
  bool exact_at_h0b = false;
  bool exact_at_h0c = false;
  bool exact_at_h1a = false;
  bool exact_at_h1b = false;
  bool exact_at_h1c = false;
  std::string detail;
  bool all_exact() const {
    return h0_injective && exact_at_h0b && exact_at_h0c && exact_at_h1a && exact_at_h1b &&
           exact_at_h1c;
  }
};
SevenTermReport seven_term_check(const Extension& E, bool continuous_only = true,
                                 const SizeGuard& guard = {});

}  // namespace nabelh1

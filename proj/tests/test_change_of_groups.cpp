#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "change_of_groups.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace nabelh1;

namespace {

// the order-6 symmetric group over a trivial order-2 module, with its
// order-3 normal subgroup
Bimodule t5_bimodule() {
  return th::trivial_target_bimodule(th::sym3(), th::cyclic(2));
}
const ElemSet kN{0, 4, 5};

// homomorphisms from G to an order-2 group with trivial action, counted by
// brute force; the conjugation relation is trivial for an abelian target
int hom_count(const Group& G) {
  int count = 0;
  std::vector<Elem> f(G.order(), 0);
  while (true) {
    bool ok = f[0] == 0;
    for (int g = 0; g < G.order() && ok; ++g)
      for (int h = 0; h < G.order() && ok; ++h) ok = f[G.mul(g, h)] == (f[g] + f[h]) % 2;
    if (ok) ++count;
    int i = 0;
    while (i < G.order() && f[i] == 1) f[i++] = 0;
    if (i == G.order()) break;
    ++f[i];
  }
  return count;
}

}  // namespace

TEST_CASE("triple validation rejects mismatched components") {
  Bimodule b = t5_bimodule();
  Restriction r = restriction(b, kN);
  validate_change(b, r.restricted.bim, r.triple);

  // a non-homomorphism phi is refused
  ChangeTriple broken = r.triple;
  broken.phi = validate_map(r.restricted.bim.G, b.G, {0, 1, 5}, false);
  CHECK_THROWS_AS(validate_change(b, r.restricted.bim, broken), ValidationError);

  // psi must intertwine the structure maps
  Bimodule p = th::partial_only_bimodule();
  ChangeTriple t{identity_map(p.G), identity_map(p.R),
                 validate_map(p.A, p.A, {0, 2, 0, 2}, true)};
  CHECK_THROWS_AS(validate_change(p, p, t), ValidationError);
}

TEST_CASE("restriction to the order-3 subgroup kills the classes") {
  Bimodule b = t5_bimodule();
  Restriction r = restriction(b, kN);
  CHECK(r.restricted.bim.G->order() == 3);
  H1Set full = compute_h1(b);
  H1Set sub = compute_h1(r.restricted.bim);
  // no nontrivial homs from an order-3 group into an order-2 module
  CHECK(hom_count(*r.restricted.bim.G) == 1);
  CHECK(sub.class_count() == 1);
  CHECK(hom_count(*b.G) == 2);
  CHECK(full.class_count() == 2);
  std::vector<int> res = induced_class_map(b, r.restricted.bim, r.triple, full, sub);
  for (int c : res) CHECK(c == sub.distinguished);
}

TEST_CASE("inflation from the order-2 quotient is injective") {
  Bimodule b = t5_bimodule();
  Inflation inf = inflation(b, kN);
  CHECK(inf.fixed.bim.G->order() == 2);
  CHECK(inf.fixed.bim.A->order() == 2);
  H1Set quot = compute_h1(inf.fixed.bim);
  H1Set full = compute_h1(b);
  CHECK(hom_count(*inf.fixed.bim.G) == 2);
  CHECK(quot.class_count() == 2);
  std::vector<int> im = induced_class_map(inf.fixed.bim, b, inf.triple, quot, full);
  std::set<int> distinct(im.begin(), im.end());
  CHECK(distinct.size() == im.size());
}

TEST_CASE("the quotient acts on the classes of the restriction") {
  Bimodule b = t5_bimodule();
  QuotientActionH1N qa = quotient_action_on_h1n(b, kN, true, {});
  CHECK(qa.genuine_action);
  CHECK(qa.n_acts_trivially);
  CHECK(qa.h1n.class_count() == 1);
  CHECK(qa.fixed_classes == std::vector<int>{0});
  for (const auto& row : qa.perm) CHECK(row == std::vector<Elem>{0});
}

TEST_CASE("inflation-restriction is exact over the symmetric group") {
  Bimodule b = t5_bimodule();
  InfResReport rep = inf_res_exactness(b, kN, true, {});
  CHECK(rep.quotient_classes == 2);
  CHECK(rep.full_classes == 2);
  CHECK(rep.subgroup_classes == 1);
  CHECK(rep.inf_injective);
  CHECK(rep.kernel_equals_image);
  CHECK(rep.res_into_fixed);
  CHECK(rep.exact());
  // every class restricts to the sole subgroup class
  std::set<int> res_im(rep.res_map.begin(), rep.res_map.end());
  CHECK(res_im.size() == 1);
}

TEST_CASE("exactness across every normal subgroup of the klein group") {
  GroupPtr G = th::klein4();
  GroupPtr A = th::cyclic(2);
  Bimodule b = th::trivial_target_bimodule(G, A);
  for (const ElemSet& N : G->normal_subgroups()) {
    InfResReport rep = inf_res_exactness(b, N, true, {});
    CHECK(rep.exact());
  }
}

TEST_CASE("restriction respects the subspace topology in the sequence") {
  // indiscrete order-2 group: restriction to the whole group keeps indiscreteness,
  // so continuous derivations stay constant
  GroupPtr G = th::cyclic(2, {0, 1});
  Bimodule b = th::trivial_target_bimodule(G, th::cyclic(2));
  InfResReport rep = inf_res_exactness(b, {0, 1}, true, {});
  CHECK(rep.quotient_classes == 1);  // quotient collapses
  CHECK(rep.subgroup_classes == 1);  // indiscrete subgroup: only constants
  CHECK(rep.full_classes == 1);
  CHECK(rep.exact());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>

using namespace nabelh1;

namespace {

// independent permutation arithmetic for the order-6 symmetric group
using Perm = std::array<int, 3>;
const std::array<Perm, 6> kPerms = {
    Perm{0, 1, 2}, Perm{1, 0, 2}, Perm{2, 1, 0}, Perm{0, 2, 1}, Perm{1, 2, 0}, Perm{2, 0, 1}};

int perm_index(const Perm& p) {
  for (int i = 0; i < 6; ++i)
    if (kPerms[i] == p) return i;
  return -1;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  return {a[b[0]], a[b[1]], a[b[2]]};
}

Perm perm_inv(const Perm& a) {
  Perm out{};
  for (int x = 0; x < 3; ++x) out[a[x]] = x;
  return out;
}

}  // namespace

TEST_CASE("multiplication and inverses match permutation arithmetic") {
  GroupPtr S = th::sym3();
  for (int a = 0; a < 6; ++a) {
    CHECK(perm_index(perm_inv(kPerms[a])) == S->inv(a));
    for (int b = 0; b < 6; ++b) {
      CHECK(perm_index(perm_mul(kPerms[a], kPerms[b])) == S->mul(a, b));
      CHECK(perm_index(perm_mul(perm_mul(kPerms[a], kPerms[b]), perm_inv(kPerms[a]))) ==
            S->conj(a, b));
    }
  }
}

TEST_CASE("validation rejects broken tables") {
  try {
    Group::validate({{0, 1}, {1, 1}}, std::nullopt, {});
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.kind == "NoInverse");
  }
  // non-associative magma with a two-sided identity at 0
  Table magma = {{0, 1, 2, 3, 4},
                 {1, 4, 0, 2, 3},
                 {2, 3, 4, 0, 1},
                 {3, 0, 1, 4, 2},
                 {4, 2, 3, 1, 0}};
  try {
    Group::validate(magma, std::nullopt, {});
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.kind == "NotAssociative");
  }
  try {
    Group::validate({{0, 1}, {1, 0}, {0, 1}}, std::nullopt, {});
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.kind == "MalformedTable");
  }
}

TEST_CASE("identity is moved to position zero") {
  // order-2 table with the identity at raw index 1
  GroupPtr g = Group::validate({{1, 0}, {0, 1}}, std::nullopt, {});
  CHECK(g->order() == 2);
  CHECK(g->mul(0, 0) == 0);
  CHECK(g->mul(1, 1) == 0);
  CHECK(g->reindexing() == std::vector<Elem>{1, 0});
}

TEST_CASE("open subgroup must be closed and normal") {
  try {
    th::cyclic(4, {0, 1});
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.kind == "SubgroupNotClosed");
  }
  try {
    th::sym3({0, 1});  // order-2 subgroup, not normal
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.kind == "SubgroupNotNormal");
  }
  GroupPtr fine = th::sym3({0, 4, 5});
  CHECK(fine->open_contains(4));
  CHECK_FALSE(fine->open_contains(1));
  CHECK_FALSE(fine->discrete());
  CHECK_FALSE(fine->indiscrete());
  CHECK(th::cyclic(2)->discrete());
  CHECK(th::cyclic(2, {0, 1})->indiscrete());
}

TEST_CASE("structure queries") {
  GroupPtr S = th::sym3();
  CHECK_FALSE(S->is_abelian());
  CHECK(th::klein4()->is_abelian());
  CHECK(S->center() == ElemSet{0});
  CHECK(th::cyclic(4)->center() == ElemSet{0, 1, 2, 3});
  CHECK(S->commutator_subgroup() == ElemSet{0, 4, 5});
  CHECK(S->subgroup_generated({1}) == ElemSet{0, 1});
  CHECK(S->subgroup_generated({4}) == ElemSet{0, 4, 5});
  CHECK(S->subgroup_generated({1, 2}) == ElemSet{0, 1, 2, 3, 4, 5});
  CHECK(S->all_subgroups().size() == 6);
  std::vector<ElemSet> normals = S->normal_subgroups();
  CHECK(normals.size() == 3);
  CHECK(S->is_normal({0, 4, 5}));
  CHECK_FALSE(S->is_normal({0, 1}));
  CHECK(S->minimal_generating_sequence().size() == 2);
  CHECK(th::cyclic(4)->minimal_generating_sequence().size() == 1);
}

TEST_CASE("maps validate and compose") {
  GroupPtr S = th::sym3();
  GroupPtr C2 = th::cyclic(2);
  GroupMap sign = validate_map(S, C2, {0, 1, 1, 1, 0, 0}, true);
  CHECK(sign(4) == 0);
  CHECK_THROWS_AS(validate_map(S, C2, {0, 1, 1, 1, 0, 1}, true), ValidationError);
  GroupMap dbl = compose(sign, identity_map(S));
  CHECK(dbl.images == sign.images);
  CHECK(pointwise_inverse(identity_map(C2)).images == std::vector<Elem>{0, 1});
}

TEST_CASE("continuity of maps follows the coset model") {
  GroupPtr disc = th::cyclic(2);
  GroupPtr indisc = th::cyclic(2, {0, 1});
  GroupMap id_di = validate_map(disc, indisc, {0, 1}, true);
  GroupMap id_in = validate_map(indisc, disc, {0, 1}, true);
  CHECK(is_continuous_map(id_di));        // into the indiscrete side: always
  CHECK_FALSE(is_continuous_map(id_in));  // indiscrete to discrete: only constants
  GroupMap c = validate_map(indisc, disc, {0, 0}, false);
  CHECK(is_continuous_map(c));
}

TEST_CASE("continuity of actions follows the coset model") {
  GroupPtr indisc = th::cyclic(2, {0, 1});
  GroupPtr c3 = th::cyclic(3);
  // inversion through the nontrivial element of an indiscrete actor
  GroupAction flip = validate_action(indisc, c3, {{0, 1, 2}, {0, 2, 1}});
  CHECK_FALSE(is_continuous_action(flip));
  GroupAction triv = trivial_action(indisc, c3);
  CHECK(is_continuous_action(triv));
  CHECK(is_continuous_action(conjugation_action(th::sym3())));
  CHECK_THROWS_AS(validate_action(indisc, c3, {{0, 1, 2}, {1, 2, 0}}), ValidationError);
}

TEST_CASE("fixed points of conjugation are the center") {
  GroupPtr S = th::sym3();
  FixedPoints fp = fixed_points(conjugation_action(S));
  CHECK(fp.elements == S->center());
  CHECK(fp.subgroup);
}

TEST_CASE("quotients and subgroups") {
  GroupPtr S = th::sym3();
  Quotient q = quotient_by(S, {0, 4, 5});
  CHECK(q.group->order() == 2);
  CHECK(q.projection(1) == q.projection(2));
  CHECK(q.projection(0) == 0);
  CHECK_THROWS_AS(quotient_by(S, {0, 1}), ValidationError);

  SubgroupEmbedding sub = subgroup_as_group(S, {0, 4, 5});
  CHECK(sub.group->order() == 3);
  CHECK(sub.inclusion(1) == 4);
  CHECK(sub.index_in_sub[5] == 2);
  CHECK(sub.index_in_sub[1] == -1);

  // quotient by the open subgroup is discrete
  GroupPtr half_open = th::sym3({0, 4, 5});
  CHECK(quotient_by(half_open, half_open->open_subgroup()).group->discrete());
}

TEST_CASE("subgroup carries the subspace topology") {
  GroupPtr half_open = th::sym3({0, 4, 5});
  SubgroupEmbedding sub = subgroup_as_group(half_open, {0, 4, 5});
  CHECK(sub.group->indiscrete());
  SubgroupEmbedding two = subgroup_as_group(half_open, {0, 1});
  CHECK(two.group->discrete());
}

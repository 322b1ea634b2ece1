#include "group.hpp"

#include <algorithm>
#include <set>

namespace nabelh1 {

void SizeGuard::require(std::uint64_t candidates, const std::string& what) const {
  if (candidates > cap) {
    throw SizeGuardError(candidates, what + ": " + std::to_string(candidates) +
                                         " candidates exceed cap " + std::to_string(cap));
  }
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  const std::uint64_t lim = UINT64_MAX;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > lim / base) return lim;
    out *= base;
  }
  return out;
}

ElemSet sorted_unique(ElemSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool set_contains(const ElemSet& s, Elem x) {
  return std::binary_search(s.begin(), s.end(), x);
}

namespace {

std::string tup(std::initializer_list<Elem> xs) {
  std::string out = "(";
  bool first = true;
  for (Elem x : xs) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + ")";
}

}  // namespace

GroupPtr Group::validate(const Table& raw, std::optional<Elem> identity_hint,
                         const ElemSet& open_subgroup) {
  const int n = (int)raw.size();
  if (n == 0) throw ValidationError("NoIdentity", "empty multiplication table");
  for (int i = 0; i < n; ++i) {
    if ((int)raw[i].size() != n)
      throw ValidationError("MalformedTable", "row " + std::to_string(i) + " is not length " +
                                                  std::to_string(n));
    for (int j = 0; j < n; ++j)
      if (raw[i][j] < 0 || raw[i][j] >= n)
        throw ValidationError("MalformedTable",
                              "entry at " + tup({i, j}) + " out of range: " +
                                  std::to_string(raw[i][j]));
  }

  auto neutral = [&](Elem e) {
    for (int x = 0; x < n; ++x)
      if (raw[e][x] != x || raw[x][e] != x) return false;
    return true;
  };
  Elem e = -1;
  if (identity_hint) {
    if (*identity_hint < 0 || *identity_hint >= n || !neutral(*identity_hint))
      throw ValidationError("NoIdentity",
                            "hinted identity " + std::to_string(identity_hint.value_or(-1)) +
                                " is not neutral");
    e = *identity_hint;
  } else {
    for (int c = 0; c < n && e < 0; ++c)
      if (neutral(c)) e = c;
    if (e < 0) throw ValidationError("NoIdentity", "no two-sided identity element");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (raw[raw[a][b]][c] != raw[a][raw[b][c]])
          throw ValidationError("NotAssociative", "associativity fails at " + tup({a, b, c}));

  std::vector<Elem> raw_inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (raw[a][b] == e && raw[b][a] == e) {
        raw_inv[a] = b;
        break;
      }
    if (raw_inv[a] < 0)
      throw ValidationError("NoInverse", "element " + std::to_string(a) + " has no inverse");
  }

  ElemSet open_raw = open_subgroup.empty() ? ElemSet{e} : sorted_unique(open_subgroup);
  for (Elem x : open_raw)
    if (x < 0 || x >= n)
      throw ValidationError("SubgroupNotClosed",
                            "open subgroup index out of range: " + std::to_string(x));
  auto in_open_raw = [&](Elem x) { return std::binary_search(open_raw.begin(), open_raw.end(), x); };
  if (!in_open_raw(e))
    throw ValidationError("SubgroupNotClosed", "open subgroup misses the identity");
  for (Elem x : open_raw) {
    if (!in_open_raw(raw_inv[x]))
      throw ValidationError("SubgroupNotClosed",
                            "open subgroup not closed under inverse at " + std::to_string(x));
    for (Elem y : open_raw)
      if (!in_open_raw(raw[x][y]))
        throw ValidationError("SubgroupNotClosed",
                              "open subgroup not closed under product at " + tup({x, y}));
  }
  for (int g = 0; g < n; ++g)
    for (Elem x : open_raw) {
      Elem c = raw[raw[g][x]][raw_inv[g]];
      if (!in_open_raw(c))
        throw ValidationError("SubgroupNotNormal",
                              "open subgroup not normal: conjugate of " + std::to_string(x) +
                                  " by " + std::to_string(g) + " escapes");
    }

  // move the identity to index 0 by swapping labels 0 <-> e
  std::vector<Elem> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  if (e != 0) {
    perm[e] = 0;
    perm[0] = e;
  }

  Group g;
  g.order_ = n;
  g.cayley_.assign(n, std::vector<Elem>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.cayley_[perm[a]][perm[b]] = perm[raw[a][b]];
  g.inverse_.assign(n, 0);
  for (int a = 0; a < n; ++a) g.inverse_[perm[a]] = perm[raw_inv[a]];
  ElemSet open_new;
  open_new.reserve(open_raw.size());
  for (Elem x : open_raw) open_new.push_back(perm[x]);
  g.open_ = sorted_unique(std::move(open_new));
  g.open_mask_.assign(n, 0);
  for (Elem x : g.open_) g.open_mask_[x] = 1;
  g.reindex_ = perm;
  return std::make_shared<const Group>(std::move(g));
}

bool Group::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

ElemSet Group::center() const {
  ElemSet z;
  for (int a = 0; a < order_; ++a) {
    bool central = true;
    for (int b = 0; b < order_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

ElemSet Group::commutator_subgroup() const {
  ElemSet comms;
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      comms.push_back(mul(mul(a, b), mul(inv(a), inv(b))));
  return subgroup_generated(sorted_unique(std::move(comms)));
}

ElemSet Group::subgroup_generated(const ElemSet& gens) const {
  std::vector<char> in(order_, 0);
  std::vector<Elem> members{id};
  in[id] = 1;
  for (Elem g : gens)
    if (!in[g]) {
      in[g] = 1;
      members.push_back(g);
    }
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      Elem p = mul(members[i], members[j]);
      if (!in[p]) {
        in[p] = 1;
        members.push_back(p);
      }
    }
  return sorted_unique(std::move(members));
}

bool Group::is_subgroup(const ElemSet& s) const {
  if (s.empty() || !set_contains(s, id)) return false;
  for (Elem x : s) {
    if (x < 0 || x >= order_ || !set_contains(s, inv(x))) return false;
    for (Elem y : s)
      if (!set_contains(s, mul(x, y))) return false;
  }
  return true;
}

bool Group::is_normal(const ElemSet& s) const {
  if (!is_subgroup(s)) return false;
  for (int g = 0; g < order_; ++g)
    for (Elem x : s)
      if (!set_contains(s, conj(g, x))) return false;
  return true;
}

std::vector<ElemSet> Group::all_subgroups() const {
  std::set<ElemSet> subs;
  std::vector<ElemSet> cyc;
  for (int g = 0; g < order_; ++g) cyc.push_back(subgroup_generated({g}));
  std::vector<ElemSet> frontier;
  for (const auto& c : cyc)
    if (subs.insert(c).second) frontier.push_back(c);
  for (size_t i = 0; i < frontier.size(); ++i)
    for (const auto& c : cyc) {
      ElemSet un = frontier[i];
      un.insert(un.end(), c.begin(), c.end());
      ElemSet join = subgroup_generated(sorted_unique(std::move(un)));
      if (subs.insert(join).second) frontier.push_back(join);
    }
  return {subs.begin(), subs.end()};
}

std::vector<ElemSet> Group::normal_subgroups() const {
  std::vector<ElemSet> out;
  for (auto& s : all_subgroups())
    if (is_normal(s)) out.push_back(s);
  return out;
}

std::vector<Elem> Group::minimal_generating_sequence() const {
  std::vector<Elem> gens;
  ElemSet span{id};
  while ((int)span.size() < order_) {
    Elem best = -1;
    size_t best_size = 0;
    for (int g = 0; g < order_; ++g) {
      if (set_contains(span, g)) continue;
      ElemSet cand = gens;
      cand.push_back(g);
      size_t sz = subgroup_generated(sorted_unique(std::move(cand))).size();
      if (sz > best_size) {
        best_size = sz;
        best = g;
      }
    }
    gens.push_back(best);
    ElemSet cand = gens;
    span = subgroup_generated(sorted_unique(std::move(cand)));
  }
  return gens;
}

GroupMap validate_map(GroupPtr dom, GroupPtr cod, std::vector<Elem> images,
                      bool is_homomorphism) {
  if ((int)images.size() != dom->order())
    throw ValidationError("MalformedTable", "map image list has wrong length");
  for (Elem y : images)
    if (y < 0 || y >= cod->order())
      throw ValidationError("MalformedTable", "map image out of range: " + std::to_string(y));
  if (is_homomorphism) {
    for (int x = 0; x < dom->order(); ++x)
      for (int y = 0; y < dom->order(); ++y)
        if (images[dom->mul(x, y)] != cod->mul(images[x], images[y]))
          throw ValidationError("NotAHomomorphism",
                                "f(xy) != f(x)f(y) at " + tup({x, y}));
  }
  return GroupMap{std::move(dom), std::move(cod), std::move(images), is_homomorphism};
}

GroupAction validate_action(GroupPtr actor, GroupPtr space, Table table) {
  const int n = actor->order(), m = space->order();
  if ((int)table.size() != n)
    throw ValidationError("MalformedTable", "action table has wrong number of rows");
  for (int g = 0; g < n; ++g) {
    if ((int)table[g].size() != m)
      throw ValidationError("MalformedTable", "action row " + std::to_string(g) + " wrong length");
    for (int a = 0; a < m; ++a)
      if (table[g][a] < 0 || table[g][a] >= m)
        throw ValidationError("MalformedTable", "action entry out of range at " + tup({g, a}));
  }
  for (int a = 0; a < m; ++a)
    if (table[Group::id][a] != a)
      throw ValidationError("NotAnAction", "identity does not act trivially at " + std::to_string(a));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int a = 0; a < m; ++a)
        if (table[actor->mul(g, h)][a] != table[g][table[h][a]])
          throw ValidationError("NotAnAction", "^(gh)a != ^g(^h a) at " + tup({g, h, a}));
  for (int g = 0; g < n; ++g) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (table[g][space->mul(a, b)] != space->mul(table[g][a], table[g][b]))
          throw ValidationError("NotByAutomorphisms",
                                "^g(ab) != (^g a)(^g b) at " + tup({g, a, b}));
  }
  return GroupAction{std::move(actor), std::move(space), std::move(table)};
}

bool is_continuous_map(const GroupMap& f) {
  const Group& D = *f.dom;
  const Group& C = *f.cod;
  for (int x = 0; x < D.order(); ++x) {
    Elem fx_inv = C.inv(f(x));
    for (Elem n : D.open_subgroup())
      if (!C.open_contains(C.mul(fx_inv, f(D.mul(x, n))))) return false;
  }
  return true;
}

bool is_continuous_action(const GroupAction& act) {
  const Group& G = *act.actor;
  const Group& A = *act.space;
  for (int g = 0; g < G.order(); ++g)
    for (int a = 0; a < A.order(); ++a) {
      Elem base_inv = A.inv(act(g, a));
      for (Elem n : G.open_subgroup()) {
        Elem gn = G.mul(g, n);
        for (Elem m : A.open_subgroup())
          if (!A.open_contains(A.mul(base_inv, act(gn, A.mul(a, m))))) return false;
      }
    }
  return true;
}

FixedPoints fixed_points(const GroupAction& act) {
  ElemSet fixed;
  for (int a = 0; a < act.space->order(); ++a) {
    bool fix = true;
    for (int g = 0; g < act.actor->order() && fix; ++g) fix = act(g, a) == a;
    if (fix) fixed.push_back(a);
  }
  return FixedPoints{fixed, act.space->is_subgroup(fixed)};
}

Quotient quotient_by(GroupPtr G, const ElemSet& N) {
  if (!G->is_normal(N))
    throw ValidationError("NotNormal", "quotient requires a normal subgroup");
  const int n = G->order();
  std::vector<Elem> rep_of(n);  // element -> least member of its coset
  for (int g = 0; g < n; ++g) {
    Elem least = g;
    for (Elem x : N) least = std::min(least, G->mul(g, x));
    rep_of[g] = least;
  }
  std::vector<Elem> reps;
  for (int g = 0; g < n; ++g)
    if (rep_of[g] == g) reps.push_back(g);
  std::vector<int> index_of(n, -1);
  for (int i = 0; i < (int)reps.size(); ++i) index_of[reps[i]] = i;

  const int k = (int)reps.size();
  Table qt(k, std::vector<Elem>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) qt[i][j] = index_of[rep_of[G->mul(reps[i], reps[j])]];
  ElemSet qopen;
  for (Elem x : G->open_subgroup()) qopen.push_back(index_of[rep_of[x]]);
  GroupPtr Q = Group::validate(qt, 0, sorted_unique(std::move(qopen)));

  std::vector<Elem> proj(n);
  for (int g = 0; g < n; ++g) proj[g] = index_of[rep_of[g]];
  GroupMap pr = validate_map(G, Q, std::move(proj), true);
  return Quotient{Q, std::move(pr), std::move(reps)};
}

SubgroupEmbedding subgroup_as_group(GroupPtr G, const ElemSet& elements) {
  if (!G->is_subgroup(elements))
    throw ValidationError("NotSubgroup", "element set is not a subgroup");
  const int k = (int)elements.size();
  std::vector<int> index_in_sub(G->order(), -1);
  for (int i = 0; i < k; ++i) index_in_sub[elements[i]] = i;
  Table st(k, std::vector<Elem>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) st[i][j] = index_in_sub[G->mul(elements[i], elements[j])];
  ElemSet sopen;
  for (Elem x : elements)
    if (G->open_contains(x)) sopen.push_back(index_in_sub[x]);
  GroupPtr S = Group::validate(st, 0, sorted_unique(std::move(sopen)));
  GroupMap incl = validate_map(S, G, elements, true);
  return SubgroupEmbedding{S, std::move(incl), std::move(index_in_sub)};
}

GroupAction conjugation_action(GroupPtr G) {
  const int n = G->order();
  Table t(n, std::vector<Elem>(n));
  for (int g = 0; g < n; ++g)
    for (int a = 0; a < n; ++a) t[g][a] = G->conj(g, a);
  return GroupAction{G, G, std::move(t)};
}

GroupAction trivial_action(GroupPtr actor, GroupPtr space) {
  Table t(actor->order());
  for (auto& row : t) {
    row.resize(space->order());
    for (int a = 0; a < space->order(); ++a) row[a] = a;
  }
  return GroupAction{std::move(actor), std::move(space), std::move(t)};
}

GroupMap identity_map(GroupPtr G) {
  std::vector<Elem> im(G->order());
  for (int i = 0; i < G->order(); ++i) im[i] = i;
  return GroupMap{G, G, std::move(im), true};
}

GroupMap trivial_map(GroupPtr dom, GroupPtr cod) {
  std::vector<Elem> im(dom->order(), Group::id);
  return GroupMap{std::move(dom), std::move(cod), std::move(im), true};
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  std::vector<Elem> im(inner.dom->order());
  for (int x = 0; x < inner.dom->order(); ++x) im[x] = outer(inner(x));
  return GroupMap{inner.dom, outer.cod, std::move(im),
                  inner.is_homomorphism && outer.is_homomorphism};
}

GroupMap pointwise_inverse(const GroupMap& f) {
  std::vector<Elem> im(f.dom->order());
  for (int x = 0; x < f.dom->order(); ++x) im[x] = f.cod->inv(f(x));
  return GroupMap{f.dom, f.cod, std::move(im), false};
}

GroupPtr trivial_group() { return Group::validate({{0}}, 0, {0}); }

}  // namespace nabelh1

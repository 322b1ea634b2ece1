#include "exact_sequence.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

namespace nabelh1 {

namespace {

// all continuous normalized sections in lexicographic order; stops after the
// first when all = false
std::vector<std::vector<Elem>> search_sections(const GroupMap& pi, const Group& B,
                                               const Group& C, bool all,
                                               const SizeGuard& guard) {
  std::vector<std::vector<Elem>> fiber(C.order());
  for (int b = 0; b < B.order(); ++b) fiber[pi(b)].push_back(b);
  std::uint64_t fiber_size = fiber.empty() ? 1 : (std::uint64_t)fiber[0].size();
  guard.require(saturating_pow(fiber_size, C.order() > 0 ? C.order() - 1 : 0),
                "continuous section search");

  // coset-continuity constraints s(x m) in s(x) N_B, keyed by the
  // later-assigned position; (q, true) means s(p) in s(q) N_B
  std::vector<std::vector<std::pair<Elem, bool>>> cons(C.order());
  for (int x = 0; x < C.order(); ++x)
    for (Elem m : C.open_subgroup()) {
      Elem y = C.mul(x, m);
      if (x == y) continue;
      if (y > x) cons[y].push_back({x, true});
      else cons[x].push_back({y, false});
    }

  std::vector<std::vector<Elem>> out;
  std::vector<Elem> s(C.order(), -1);
  s[Group::id] = Group::id;  // pinned; search starts past it
  bool done = false;
  std::function<void(int)> rec = [&](int c) {
    if (done) return;
    if (c == C.order()) {
      out.push_back(s);
      if (!all) done = true;
      return;
    }
    for (Elem b : fiber[c]) {
      s[c] = b;
      bool ok = true;
      for (auto [q, q_is_source] : cons[c]) {
        Elem src = q_is_source ? s[q] : s[c];
        Elem dst = q_is_source ? s[c] : s[q];
        if (!B.open_contains(B.mul(B.inv(src), dst))) {
          ok = false;
          break;
        }
      }
      if (ok) rec(c + 1);
      s[c] = -1;
    }
  };
  rec(1);
  return out;
}

Table raw_coboundary(const Group& G, const Group& A, const GroupAction& act,
                     const std::vector<Elem>& kappa) {
  Table t(G.order(), std::vector<Elem>(G.order()));
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      t[g][h] = A.mul(act(g, kappa[h]), A.mul(A.inv(kappa[G.mul(g, h)]), kappa[g]));
  return t;
}

bool table_map_continuous(const Group& G, const Group& A, const std::vector<Elem>& f) {
  for (int x = 0; x < G.order(); ++x)
    for (Elem n : G.open_subgroup())
      if (!A.open_contains(A.mul(A.inv(f[x]), f[G.mul(x, n)]))) return false;
  return true;
}

}  // namespace

Extension validate_extension(Bimodule a_bim, Bimodule b_bim, Bimodule c_bim, GroupMap iota,
                             GroupMap pi, std::optional<std::vector<Elem>> section,
                             const SizeGuard& guard) {
  for (int a = 0; a < a_bim.A->order(); ++a)
    if (a_bim.mu(a) != Group::id)
      throw ValidationError("DiagramDoesNotCommute",
                            "the kernel bimodule must carry the trivial structure map");
  validate_bimodule_morphism(a_bim, b_bim, iota);
  validate_bimodule_morphism(b_bim, c_bim, pi);

  const Group& A = *a_bim.A;
  const Group& B = *b_bim.A;
  const Group& C = *c_bim.A;

  std::vector<Elem> iota_inv(B.order(), -1);
  for (int a = 0; a < A.order(); ++a) {
    if (iota_inv[iota(a)] >= 0)
      throw ValidationError("NotExact", "the kernel map is not injective at " + std::to_string(a));
    iota_inv[iota(a)] = a;
  }
  ElemSet image;
  for (int a = 0; a < A.order(); ++a) image.push_back(iota(a));
  image = sorted_unique(std::move(image));
  ElemSet kernel;
  for (int b = 0; b < B.order(); ++b)
    if (pi(b) == Group::id) kernel.push_back(b);
  if (image != kernel)
    throw ValidationError("NotExact", "the image of the kernel map differs from ker of the projection");
  std::vector<char> hit(C.order(), 0);
  for (int b = 0; b < B.order(); ++b) hit[pi(b)] = 1;
  for (int c = 0; c < C.order(); ++c)
    if (!hit[c])
      throw ValidationError("NotExact", "the projection misses " + std::to_string(c));

  ElemSet embedded;  // iota(N_A)
  for (Elem n : A.open_subgroup()) embedded.push_back(iota(n));
  embedded = sorted_unique(std::move(embedded));
  ElemSet meet;  // N_B intersected with the image
  for (Elem n : B.open_subgroup())
    if (iota_inv[n] >= 0) meet.push_back(n);
  if (embedded != meet)
    throw ValidationError("NotProper", "the kernel map is not a homeomorphic embedding");
  ElemSet pushed;  // pi(N_B)
  for (Elem n : B.open_subgroup()) pushed.push_back(pi(n));
  pushed = sorted_unique(std::move(pushed));
  if (pushed != C.open_subgroup())
    throw ValidationError("NotProper", "the projection is not open onto the quotient topology");

  Extension E{std::move(a_bim), std::move(b_bim), std::move(c_bim), std::move(iota),
              std::move(pi), {}, std::move(iota_inv)};

  if (section) {
    std::vector<Elem>& s = *section;
    if ((int)s.size() != C.order())
      throw ValidationError("DiagramDoesNotCommute", "section has the wrong length");
    for (int c = 0; c < C.order(); ++c) {
      if (s[c] < 0 || s[c] >= B.order())
        throw ValidationError("DiagramDoesNotCommute", "section value out of range");
      if (E.pi(s[c]) != c)
        throw ValidationError("DiagramDoesNotCommute",
                              "section is not a right inverse at " + std::to_string(c));
    }
    if (s[Group::id] != Group::id)
      throw ValidationError("DiagramDoesNotCommute", "section is not normalized");
    if (!table_map_continuous(C, B, s))
      throw ValidationError("NoContinuousSection", "the supplied section is not continuous");
    E.section = std::move(s);
  } else {
    auto found = search_sections(E.pi, B, C, false, guard);
    if (found.empty())
      throw ValidationError("NoContinuousSection", "no continuous normalized section exists");
    E.section = std::move(found[0]);
  }
  return E;
}

std::vector<std::vector<Elem>> enumerate_continuous_sections(const Extension& E,
                                                             const SizeGuard& guard) {
  return search_sections(E.pi, *E.b_bim.A, *E.c_bim.A, true, guard);
}

FactorSet make_factor_set(const Group& G, const Group& A, const GroupAction& act, Table t) {
  if ((int)t.size() != G.order())
    throw ComputeError("NotAFactorSet", "table has the wrong shape");
  for (const auto& row : t) {
    if ((int)row.size() != G.order())
      throw ComputeError("NotAFactorSet", "table has the wrong shape");
    for (Elem v : row)
      if (v < 0 || v >= A.order()) throw ComputeError("NotAFactorSet", "value out of range");
  }
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      for (int k = 0; k < G.order(); ++k) {
        Elem lhs = A.mul(act(g, t[h][k]), t[g][G.mul(h, k)]);
        Elem rhs = A.mul(t[G.mul(g, h)][k], t[g][h]);
        if (lhs != rhs)
          throw ComputeError("NotAFactorSet",
                             "cocycle identity fails at (" + std::to_string(g) + "," +
                                 std::to_string(h) + "," + std::to_string(k) + ")");
      }
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      for (Elem m : G.open_subgroup())
        for (Elem n : G.open_subgroup())
          if (!A.open_contains(A.mul(A.inv(t[g][h]), t[G.mul(g, m)][G.mul(h, n)])))
            throw ComputeError("NotAFactorSet",
                               "not continuous at (" + std::to_string(g) + "," +
                                   std::to_string(h) + ")");
  FactorSet f;
  f.normalized = true;
  for (int g = 0; g < G.order() && f.normalized; ++g)
    f.normalized = t[Group::id][g] == Group::id && t[g][Group::id] == Group::id;
  f.table = std::move(t);
  return f;
}

FactorSet coboundary_1(const Group& G, const Group& A, const GroupAction& act,
                       const std::vector<Elem>& kappa) {
  if ((int)kappa.size() != G.order() || kappa[Group::id] != Group::id)
    throw ValidationError("NotNormalized", "one-cochain must send the identity to the identity");
  if (!table_map_continuous(G, A, kappa))
    throw ValidationError("NotContinuous", "one-cochain must be continuous");
  return make_factor_set(G, A, act, raw_coboundary(G, A, act, kappa));
}

namespace {

std::vector<Elem> delta0_hom_for_lift(const Extension& E, Elem b) {
  const Group& G = *E.b_bim.G;
  const Group& B = *E.b_bim.A;
  std::vector<Elem> hom(G.order());
  for (int g = 0; g < G.order(); ++g) {
    Elem v = B.mul(B.inv(b), E.b_bim.act_ga(g, b));
    if (E.iota_inv[v] < 0)
      throw ComputeError("InternalAssertionFailed", "connecting value left the kernel");
    hom[g] = E.iota_inv[v];
  }
  return hom;
}

void require_fixed(const Extension& E, Elem c) {
  const Group& G = *E.c_bim.G;
  for (int g = 0; g < G.order(); ++g)
    if (E.c_bim.act_ga(g, c) != c)
      throw ValidationError("NotFixed", "element " + std::to_string(c) + " is moved by " +
                                            std::to_string(g));
}

}  // namespace

std::vector<Elem> delta0_hom(const Extension& E, Elem c) {
  require_fixed(E, c);
  for (int b = 0; b < E.b_bim.A->order(); ++b)
    if (E.pi(b) == c) return delta0_hom_for_lift(E, b);
  throw ComputeError("InternalAssertionFailed", "no lift found for a fixed point");
}

int delta0_class(const Extension& E, Elem c, const PlainH1& plain_a) {
  require_fixed(E, c);
  int cls = -1;
  for (int b = 0; b < E.b_bim.A->order(); ++b) {
    if (E.pi(b) != c) continue;
    int this_cls = plain_a.class_of_hom(delta0_hom_for_lift(E, b));
    if (cls < 0) cls = this_cls;
    else if (cls != this_cls)
      throw ComputeError("WellDefinednessViolated", "connecting class depends on the lift");
  }
  return cls;
}

Table delta1_raw_table(const Extension& E, const std::vector<Elem>& gamma) {
  const Group& G = *E.b_bim.G;
  const Group& B = *E.b_bim.A;
  Table t(G.order(), std::vector<Elem>(G.order()));
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) {
      Elem v = B.mul(B.mul(E.section[gamma[g]], E.b_bim.act_ga(g, E.section[gamma[h]])),
                     B.inv(E.section[gamma[G.mul(g, h)]]));
      if (E.iota_inv[v] < 0)
        throw ComputeError("InternalAssertionFailed", "obstruction value left the kernel");
      t[g][h] = E.iota_inv[v];
    }
  return t;
}

std::optional<std::vector<Elem>> is_coboundary(const Group& G, const Group& A,
                                               const GroupAction& act, const Table& f,
                                               const SizeGuard& guard) {
  const int n = G.order();
  guard.require(saturating_pow(A.order(), n > 0 ? n - 1 : 0), "coboundary witness search");
  std::vector<Elem> kappa(n, -1);
  kappa[Group::id] = Group::id;

  auto consistent_at = [&](int p) {
    // verify every constraint that position p completes
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        Elem gh = G.mul(g, h);
        if (g > p || h > p || gh > p) continue;
        if (g != p && h != p && gh != p) continue;
        if (f[g][h] != A.mul(act(g, kappa[h]), A.mul(A.inv(kappa[gh]), kappa[g])))
          return false;
      }
    for (int x = 0; x <= p; ++x)
      for (Elem m : G.open_subgroup()) {
        Elem y = G.mul(x, m);
        if (y > p || (x != p && y != p)) continue;
        if (!A.open_contains(A.mul(A.inv(kappa[x]), kappa[y]))) return false;
      }
    return true;
  };

  std::optional<std::vector<Elem>> found;
  std::function<void(int)> rec = [&](int p) {
    if (found) return;
    if (p == n) {
      found = kappa;
      return;
    }
    for (Elem v = 0; v < A.order(); ++v) {
      kappa[p] = v;
      if (consistent_at(p)) rec(p + 1);
      kappa[p] = -1;
    }
  };
  if (n > 0 && !consistent_at(Group::id)) return std::nullopt;
  rec(1);
  return found;
}

int H2Group::class_of_table(const Table& t) const {
  auto it = std::lower_bound(cocycles.begin(), cocycles.end(), t);
  if (it == cocycles.end() || *it != t)
    throw ComputeError("NotAFactorSet", "table is not among the enumerated cocycles");
  return class_of[it - cocycles.begin()];
}

H2Group compute_h2(const Group& G, const Group& A, const GroupAction& act,
                   const SizeGuard& guard) {
  if (!A.is_abelian())
    throw ValidationError("NotAbelian", "second cohomology needs abelian coefficients");
  const int n = G.order();
  guard.require(saturating_pow(A.order(), (std::uint64_t)(n - 1) * (std::uint64_t)(n - 1)),
                "second cohomology enumeration");

  H2Group h2;
  Table t(n, std::vector<Elem>(n, Group::id));
  const int cells = (n - 1) * (n - 1);
  auto cell_pos = [&](int g, int h) { return (g - 1) * (n - 1) + (h - 1); };

  // triples with g,h,k all nonidentity, grouped by the last cell they touch
  std::vector<std::vector<std::array<int, 3>>> triples(cells > 0 ? cells : 1);
  for (int g = 1; g < n; ++g)
    for (int h = 1; h < n; ++h)
      for (int k = 1; k < n; ++k) {
        int last = std::max(cell_pos(h, k), cell_pos(g, h));
        Elem hk = G.mul(h, k), gh = G.mul(g, h);
        if (hk != Group::id) last = std::max(last, cell_pos(g, hk));
        if (gh != Group::id) last = std::max(last, cell_pos(gh, k));
        triples[last].push_back({g, h, k});
      }

  auto cocycle_at = [&](int g, int h, int k) {
    return A.mul(act(g, t[h][k]), t[g][G.mul(h, k)]) == A.mul(t[G.mul(g, h)][k], t[g][h]);
  };
  auto continuous = [&]() {
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        for (Elem m : G.open_subgroup())
          for (Elem nn : G.open_subgroup())
            if (!A.open_contains(A.mul(A.inv(t[g][h]), t[G.mul(g, m)][G.mul(h, nn)])))
              return false;
    return true;
  };

  std::function<void(int)> rec = [&](int p) {
    if (p == cells) {
      if (continuous()) h2.cocycles.push_back(t);
      return;
    }
    int g = p / (n - 1) + 1, h = p % (n - 1) + 1;
    for (Elem v = 0; v < A.order(); ++v) {
      t[g][h] = v;
      bool ok = true;
      for (const auto& tr : triples[p])
        if (!cocycle_at(tr[0], tr[1], tr[2])) {
          ok = false;
          break;
        }
      if (ok) rec(p + 1);
    }
    t[g][h] = Group::id;
  };
  if (cells == 0) {
    if (continuous()) h2.cocycles.push_back(t);
  } else {
    rec(0);
  }
  std::sort(h2.cocycles.begin(), h2.cocycles.end());

  // normalized continuous coboundaries
  std::set<Table> cob;
  guard.require(saturating_pow(A.order(), n > 0 ? n - 1 : 0), "coboundary enumeration");
  std::vector<Elem> kappa(n, Group::id);
  std::function<void(int)> build = [&](int p) {
    if (p == n) {
      if (table_map_continuous(G, A, kappa)) cob.insert(raw_coboundary(G, A, act, kappa));
      return;
    }
    for (Elem v = 0; v < A.order(); ++v) {
      kappa[p] = v;
      build(p + 1);
    }
    kappa[p] = Group::id;
  };
  build(1);

  const int m = (int)h2.cocycles.size();
  h2.class_of.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    if (h2.class_of[i] >= 0) continue;
    int c = (int)h2.classes.size();
    h2.classes.push_back({i});
    h2.class_of[i] = c;
    for (int j = i + 1; j < m; ++j) {
      if (h2.class_of[j] >= 0) continue;
      Table d(n, std::vector<Elem>(n));
      for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
          d[g][h] = A.mul(h2.cocycles[i][g][h], A.inv(h2.cocycles[j][g][h]));
      if (cob.count(d)) {
        h2.class_of[j] = c;
        h2.classes[c].push_back(j);
      }
    }
  }
  h2.rep.resize(h2.classes.size());
  for (size_t c = 0; c < h2.classes.size(); ++c) h2.rep[c] = h2.classes[c][0];
  h2.distinguished = h2.class_of_table(Table(n, std::vector<Elem>(n, Group::id)));

  const int K = h2.class_count();
  h2.table.assign(K, std::vector<Elem>(K));
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) {
      Table prod(n, std::vector<Elem>(n));
      for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
          prod[g][h] =
              A.mul(h2.cocycles[h2.rep[i]][g][h], h2.cocycles[h2.rep[j]][g][h]);
      h2.table[i][j] = h2.class_of_table(prod);
    }
  return h2;
}

Delta1Result delta1(const Extension& E, const H1Set& h1c, int cls, const H2Group* h2,
                    const SizeGuard& guard) {
  const Group& G = *E.a_bim.G;
  const Group& A = *E.a_bim.A;
  const Group& B = *E.b_bim.A;
  const GroupAction& act = E.a_bim.g_on_a;

  Delta1Result out;
  const DerPair& rep = h1c.representative(cls);
  Table tilde_raw = delta1_raw_table(E, rep.alpha);
  out.tilde = make_factor_set(G, A, act, tilde_raw);
  if (h2) out.h2_class = h2->class_of_table(out.tilde.table);

  out.representative_independent = true;
  for (int m : h1c.classes[cls]) {
    Table mt = delta1_raw_table(E, h1c.der[m].alpha);
    Table d(G.order(), std::vector<Elem>(G.order()));
    for (int g = 0; g < G.order(); ++g)
      for (int h = 0; h < G.order(); ++h)
        d[g][h] = A.mul(mt[g][h], A.inv(tilde_raw[g][h]));
    if (!is_coboundary(G, A, act, d, guard)) {
      out.representative_independent = false;
      break;
    }
  }

  std::vector<std::vector<Elem>> sections;
  try {
    sections = enumerate_continuous_sections(E, guard);
  } catch (const SizeGuardError&) {
    sections.clear();
  }
  out.sections_checked = (int)sections.size();
  out.section_independent = true;
  for (const auto& s : sections) {
    Extension other = E;
    other.section = s;
    Table bar = delta1_raw_table(other, rep.alpha);
    std::vector<Elem> kappa(G.order());
    bool ok = true;
    for (int g = 0; g < G.order() && ok; ++g) {
      Elem v = B.mul(s[rep.alpha[g]], B.inv(E.section[rep.alpha[g]]));
      if (E.iota_inv[v] < 0) ok = false;
      else kappa[g] = E.iota_inv[v];
    }
    if (ok) {
      Table dk = raw_coboundary(G, A, act, kappa);
      for (int g = 0; g < G.order() && ok; ++g)
        for (int h = 0; h < G.order() && ok; ++h)
          ok = bar[g][h] == A.mul(dk[g][h], tilde_raw[g][h]);
    }
    if (!ok) {
      out.section_independent = false;
      break;
    }
  }
  return out;
}

bool forward_inclusion_witness_check(const Extension& E, const H1Set& h1b,
                                     std::string* detail) {
  const Group& G = *E.b_bim.G;
  const Group& A = *E.a_bim.A;
  const Group& B = *E.b_bim.A;
  const GroupAction& act = E.a_bim.g_on_a;
  for (const auto& p : h1b.der) {
    std::vector<Elem> gamma(G.order());
    for (int g = 0; g < G.order(); ++g) gamma[g] = E.pi(p.alpha[g]);
    Table tilde = delta1_raw_table(E, gamma);
    std::vector<Elem> z(G.order());
    for (int g = 0; g < G.order(); ++g) {
      Elem v = B.mul(B.inv(p.alpha[g]), E.section[gamma[g]]);
      if (E.iota_inv[v] < 0) {
        if (detail) *detail = "witness value left the kernel at g=" + std::to_string(g);
        return false;
      }
      z[g] = E.iota_inv[v];
    }
    if (z[Group::id] != Group::id || !table_map_continuous(G, A, z)) {
      if (detail) *detail = "witness map is not a normalized continuous cochain";
      return false;
    }
    Table dz = raw_coboundary(G, A, act, z);
    for (int g = 0; g < G.order(); ++g)
      for (int h = 0; h < G.order(); ++h)
        if (tilde[g][h] != dz[g][h]) {
          if (detail)
            *detail = "obstruction differs from the witness coboundary at (" +
                      std::to_string(g) + "," + std::to_string(h) + ")";
          return false;
        }
  }
  return true;
}

SevenTermReport seven_term_check(const Extension& E, bool continuous_only,
                                 const SizeGuard& guard) {
  const Group& G = *E.a_bim.G;
  const Group& A = *E.a_bim.A;
  SevenTermReport rep;
  rep.h0a = h0_set(E.a_bim.g_on_a);
  rep.h0b = h0_set(E.b_bim.g_on_a);
  rep.h0c = h0_set(E.c_bim.g_on_a);

  PlainH1 plain_a = plain_h1(G, A, E.a_bim.g_on_a, continuous_only, guard);
  H1Set h1b = compute_h1(E.b_bim, continuous_only, guard);
  H1Set h1c = compute_h1(E.c_bim, continuous_only, guard);
  rep.plain_a_classes = plain_a.class_count();
  rep.b_classes = h1b.class_count();
  rep.c_classes = h1c.class_count();

  auto note = [&](const std::string& s) {
    if (!rep.detail.empty()) rep.detail += "; ";
    rep.detail += s;
  };

  // leading node: fixed points inject
  rep.h0_injective = true;
  for (Elem a : rep.h0a)
    if (!set_contains(rep.h0b, E.iota(a))) {
      rep.h0_injective = false;
      note("a fixed point of A is not carried to a fixed point of B");
      break;
    }

  std::set<Elem> im0;
  for (Elem a : rep.h0a) im0.insert(E.iota(a));
  std::set<Elem> ker0;
  for (Elem b : rep.h0b)
    if (E.pi(b) == Group::id) ker0.insert(b);
  rep.exact_at_h0b = im0 == ker0;
  if (!rep.exact_at_h0b)
    note("fixed points of B: kernel " + std::to_string(ker0.size()) + " vs image " +
         std::to_string(im0.size()));

  rep.delta0_map.resize(rep.h0c.size());
  for (size_t i = 0; i < rep.h0c.size(); ++i)
    rep.delta0_map[i] = delta0_class(E, rep.h0c[i], plain_a);
  std::set<Elem> im_pi0;
  for (Elem b : rep.h0b) im_pi0.insert(E.pi(b));
  std::set<Elem> ker_d0;
  for (size_t i = 0; i < rep.h0c.size(); ++i)
    if (rep.delta0_map[i] == plain_a.distinguished) ker_d0.insert(rep.h0c[i]);
  rep.exact_at_h0c = im_pi0 == ker_d0;
  if (!rep.exact_at_h0c)
    note("fixed points of C: kernel " + std::to_string(ker_d0.size()) + " vs image " +
         std::to_string(im_pi0.size()));

  rep.iota1_map.assign(plain_a.class_count(), -1);
  for (size_t i = 0; i < plain_a.homs.size(); ++i) {
    DerPair img;
    img.alpha.resize(G.order());
    for (int g = 0; g < G.order(); ++g) img.alpha[g] = E.iota(plain_a.homs[i][g]);
    img.r = Group::id;
    int cls = h1b.class_of_pair(img);
    int& slot = rep.iota1_map[plain_a.class_of[i]];
    if (slot < 0) slot = cls;
    else if (slot != cls)
      throw ComputeError("WellDefinednessViolated",
                         "kernel-induced class map depends on the representative");
  }
  std::set<int> im_d0(rep.delta0_map.begin(), rep.delta0_map.end());
  std::set<int> ker_i1;
  for (int c = 0; c < plain_a.class_count(); ++c)
    if (rep.iota1_map[c] == h1b.distinguished) ker_i1.insert(c);
  rep.exact_at_h1a = im_d0 == ker_i1;
  if (!rep.exact_at_h1a)
    note("first cohomology of A: kernel " + std::to_string(ker_i1.size()) + " vs image " +
         std::to_string(im_d0.size()));

  rep.pi1_map.assign(h1b.class_count(), -1);
  for (size_t i = 0; i < h1b.der.size(); ++i) {
    DerPair img;
    img.alpha.resize(G.order());
    for (int g = 0; g < G.order(); ++g) img.alpha[g] = E.pi(h1b.der[i].alpha[g]);
    img.r = h1b.der[i].r;
    int cls = h1c.class_of_pair(img);
    int& slot = rep.pi1_map[h1b.class_of[i]];
    if (slot < 0) slot = cls;
    else if (slot != cls)
      throw ComputeError("WellDefinednessViolated",
                         "projection-induced class map depends on the representative");
  }
  std::set<int> im_i1(rep.iota1_map.begin(), rep.iota1_map.end());
  std::set<int> ker_p1;
  for (int c = 0; c < h1b.class_count(); ++c)
    if (rep.pi1_map[c] == h1c.distinguished) ker_p1.insert(c);
  rep.exact_at_h1b = im_i1 == ker_p1;
  if (!rep.exact_at_h1b)
    note("first cohomology of B: kernel " + std::to_string(ker_p1.size()) + " vs image " +
         std::to_string(im_i1.size()));

  rep.delta1_vanishes.assign(h1c.class_count(), 0);
  for (int c = 0; c < h1c.class_count(); ++c) {
    Table tilde = delta1_raw_table(E, h1c.representative(c).alpha);
    rep.delta1_vanishes[c] =
        is_coboundary(G, A, E.a_bim.g_on_a, tilde, guard).has_value() ? 1 : 0;
  }
  std::set<int> im_p1(rep.pi1_map.begin(), rep.pi1_map.end());
  std::set<int> ker_d1;
  for (int c = 0; c < h1c.class_count(); ++c)
    if (rep.delta1_vanishes[c]) ker_d1.insert(c);
  rep.exact_at_h1c = im_p1 == ker_d1;
  if (!rep.exact_at_h1c)
    note("first cohomology of C: kernel " + std::to_string(ker_d1.size()) + " vs image " +
         std::to_string(im_p1.size()));

  if (A.is_abelian()) {
    try {
      H2Group h2 = compute_h2(G, A, E.a_bim.g_on_a, guard);
      rep.h2_classes = h2.class_count();
      rep.delta1_map.assign(h1c.class_count(), -1);
      for (int c = 0; c < h1c.class_count(); ++c) {
        Delta1Result d = delta1(E, h1c, c, &h2, guard);
        rep.delta1_map[c] = d.h2_class;
        bool via_class = d.h2_class == h2.distinguished;
        if (via_class != (rep.delta1_vanishes[c] != 0))
          note("obstruction class and witness search disagree at class " + std::to_string(c));
        if (!d.representative_independent)
          note("obstruction depends on the representative at class " + std::to_string(c));
        if (!d.section_independent)
          note("obstruction depends on the section at class " + std::to_string(c));
      }
    } catch (const SizeGuardError&) {
      rep.h2_classes = -1;
    }
  }
  return rep;
}

}  // namespace nabelh1

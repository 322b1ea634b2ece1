#include "torsor.hpp"

#include <algorithm>

namespace nabelh1 {

Table torsor_division(const Torsor& T, const Group& A) {
  const int P = T.points();
  Table div(P, std::vector<Elem>(P, -1));
  for (int p = 0; p < P; ++p)
    for (int a = 0; a < A.order(); ++a) {
      Elem x = T.a_action[p][a];
      if (div[p][x] >= 0)
        throw ValidationError("NotATorsor", "right action is not free at point " +
                                                std::to_string(p));
      div[p][x] = a;
    }
  for (int p = 0; p < P; ++p)
    for (int x = 0; x < P; ++x)
      if (div[p][x] < 0)
        throw ValidationError("NotATorsor",
                              "right action is not transitive from point " + std::to_string(p));
  return div;
}

void validate_torsor(const Bimodule& B, const Torsor& T) {
  const Group& G = *B.G;
  const Group& A = *B.A;
  const Group& R = *B.R;
  const int P = T.points();
  if (P != A.order())
    throw ValidationError("NotATorsor", "a torsor has exactly one point per module element");
  auto shape = [&](const Table& t, int rows, int cols, int range, const char* name) {
    if ((int)t.size() != rows)
      throw ValidationError("MalformedTable", std::string(name) + " has the wrong shape");
    for (const auto& row : t) {
      if ((int)row.size() != cols)
        throw ValidationError("MalformedTable", std::string(name) + " has the wrong shape");
      for (Elem v : row)
        if (v < 0 || v >= range)
          throw ValidationError("MalformedTable", std::string(name) + " value out of range");
    }
  };
  shape(T.g_action, G.order(), P, P, "group action");
  shape(T.a_action, P, A.order(), P, "right action");
  if ((int)T.f.size() != P)
    throw ValidationError("MalformedTable", "structure map has the wrong shape");
  for (Elem v : T.f)
    if (v < 0 || v >= R.order())
      throw ValidationError("MalformedTable", "structure map value out of range");

  for (int p = 0; p < P; ++p) {
    if (T.a_action[p][Group::id] != p)
      throw ValidationError("NotATorsor", "right action by the identity moves " +
                                              std::to_string(p));
    for (int a = 0; a < A.order(); ++a)
      for (int b = 0; b < A.order(); ++b)
        if (T.a_action[T.a_action[p][a]][b] != T.a_action[p][A.mul(a, b)])
          throw ValidationError("NotATorsor", "right action is not associative at (" +
                                                  std::to_string(p) + "," + std::to_string(a) +
                                                  "," + std::to_string(b) + ")");
  }
  Table div = torsor_division(T, A);

  for (int p = 0; p < P; ++p)
    if (T.g_action[Group::id][p] != p)
      throw ValidationError("NotATorsor", "identity acts nontrivially at " + std::to_string(p));
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      for (int p = 0; p < P; ++p)
        if (T.g_action[G.mul(g, h)][p] != T.g_action[g][T.g_action[h][p]])
          throw ValidationError("NotATorsor", "group action is not associative at (" +
                                                  std::to_string(g) + "," + std::to_string(h) +
                                                  "," + std::to_string(p) + ")");
  for (int g = 0; g < G.order(); ++g)
    for (int p = 0; p < P; ++p)
      for (int a = 0; a < A.order(); ++a)
        if (T.g_action[g][T.a_action[p][a]] !=
            T.a_action[T.g_action[g][p]][B.act_ga(g, a)])
          throw ValidationError("NotATorsor", "the two actions are incompatible at (" +
                                                  std::to_string(g) + "," + std::to_string(p) +
                                                  "," + std::to_string(a) + ")");
  for (int g = 0; g < G.order(); ++g)
    for (int p = 0; p < P; ++p)
      if (T.f[T.g_action[g][p]] != B.act_gr(g, T.f[p]))
        throw ValidationError("NotATorsor", "structure map is not equivariant at (" +
                                                std::to_string(g) + "," + std::to_string(p) +
                                                ")");
  for (int p = 0; p < P; ++p)
    for (int a = 0; a < A.order(); ++a)
      if (T.f[T.a_action[p][a]] != R.mul(R.inv(B.mu(a)), T.f[p]))
        throw ValidationError("NotATorsor", "structure map is not twisted-equivariant at (" +
                                                std::to_string(p) + "," + std::to_string(a) +
                                                ")");

  // continuity against the transported topology: blocks are the orbits of the
  // open subgroup of A under the right action
  for (int g = 0; g < G.order(); ++g)
    for (Elem n : G.open_subgroup())
      for (int p = 0; p < P; ++p)
        for (Elem m : A.open_subgroup())
          if (!A.open_contains(
                  div[T.g_action[g][p]][T.g_action[G.mul(g, n)][T.a_action[p][m]]]))
            throw ValidationError("NotATorsor", "group action is not continuous at (" +
                                                    std::to_string(g) + "," +
                                                    std::to_string(p) + ")");
  for (int p = 0; p < P; ++p)
    for (Elem m : A.open_subgroup())
      if (!R.open_contains(R.mul(R.inv(T.f[p]), T.f[T.a_action[p][m]])))
        throw ValidationError("NotATorsor",
                              "structure map is not continuous at " + std::to_string(p));
}

Torsor twisted_torsor(const Bimodule& B, const DerPair& p) {
  if (B.level == CrossLevel::Precrossed)
    throw ComputeError("LevelTooLow", "torsors require the partial Peiffer law");
  const Group& G = *B.G;
  const Group& A = *B.A;
  const Group& R = *B.R;
  Torsor T;
  T.g_action.assign(G.order(), std::vector<Elem>(A.order()));
  T.a_action.assign(A.order(), std::vector<Elem>(A.order()));
  T.f.resize(A.order());
  for (int g = 0; g < G.order(); ++g)
    for (int a = 0; a < A.order(); ++a)
      T.g_action[g][a] = A.mul(p.alpha[g], B.act_ga(g, a));
  for (int a = 0; a < A.order(); ++a)
    for (int b = 0; b < A.order(); ++b) T.a_action[a][b] = A.mul(a, b);
  for (int a = 0; a < A.order(); ++a) T.f[a] = R.mul(R.inv(B.mu(a)), p.r);
  validate_torsor(B, T);
  return T;
}

Torsor trivial_torsor(const Bimodule& B) { return twisted_torsor(B, trivial_der_pair(B)); }

DerPair lambda_pair(const Torsor& T, const Bimodule& B, Elem p) {
  const Group& G = *B.G;
  Table div = torsor_division(T, *B.A);
  DerPair out;
  out.alpha.resize(G.order());
  for (int g = 0; g < G.order(); ++g) out.alpha[g] = div[p][T.g_action[g][p]];
  out.r = T.f[p];
  if (!derpair_valid(B, out, true))
    throw ComputeError("InternalAssertionFailed",
                       "basepoint pair is not a continuous derivation pair");
  return out;
}

int lambda_class(const Torsor& T, const Bimodule& B, const H1Set& h1) {
  int cls = -1;
  for (int p = 0; p < T.points(); ++p) {
    int this_cls = h1.class_of_pair(lambda_pair(T, B, p));
    if (cls < 0) cls = this_cls;
    else if (cls != this_cls)
      throw ComputeError("WellDefinednessViolated", "torsor class depends on the basepoint");
  }
  return cls;
}

Torsor gamma(const Bimodule& B, const H1Set& h1, int cls) {
  Torsor T = twisted_torsor(B, h1.representative(cls));
  for (int m : h1.classes[cls]) {
    Torsor other = twisted_torsor(B, h1.der[m]);
    if (!torsor_iso(T, other, B))
      throw ComputeError("WellDefinednessViolated",
                         "equivalent pairs produced non-isomorphic torsors");
  }
  return T;
}

std::optional<std::vector<Elem>> torsor_iso(const Torsor& T1, const Torsor& T2,
                                            const Bimodule& B) {
  const Group& G = *B.G;
  const Group& A = *B.A;
  const Group& R = *B.R;
  const int P = T1.points();
  if (P != T2.points()) return std::nullopt;
  Table div1 = torsor_division(T1, A);
  ElemSet h0r = h0_set(B.g_on_r);

  for (int q = 0; q < P; ++q) {
    // nu(0 . a) = q . a
    std::vector<Elem> nu(P);
    for (int x = 0; x < P; ++x) nu[x] = T2.a_action[q][div1[0][x]];
    bool ok = true;
    for (int x = 0; x < P && ok; ++x)
      for (int a = 0; a < A.order() && ok; ++a)
        ok = nu[T1.a_action[x][a]] == T2.a_action[nu[x]][a];
    for (int g = 0; g < G.order() && ok; ++g)
      for (int x = 0; x < P && ok; ++x) ok = nu[T1.g_action[g][x]] == T2.g_action[g][nu[x]];
    if (!ok) continue;
    Elem z = R.mul(R.inv(T2.f[nu[0]]), T1.f[0]);
    if (!set_contains(h0r, z)) continue;
    for (int x = 0; x < P && ok; ++x) ok = T1.f[x] == R.mul(T2.f[nu[x]], z);
    if (ok) return nu;
  }
  return std::nullopt;
}

TorsorClassification classify_torsors(const Bimodule& B, bool continuous_only,
                                      const SizeGuard& guard) {
  H1Set h1 = compute_h1(B, continuous_only, guard);
  TorsorClassification out;
  out.models = h1.der;

  std::vector<Torsor> torsors;
  torsors.reserve(out.models.size());
  for (const auto& p : out.models) torsors.push_back(twisted_torsor(B, p));

  const int n = (int)out.models.size();
  out.iso_class.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (out.iso_class[i] >= 0) continue;
    int c = (int)out.classes.size();
    out.classes.push_back({i});
    out.iso_class[i] = c;
    for (int j = i + 1; j < n; ++j) {
      if (out.iso_class[j] >= 0) continue;
      if (torsor_iso(torsors[i], torsors[j], B)) {
        out.iso_class[j] = c;
        out.classes[c].push_back(j);
      }
    }
  }

  out.lambda_of.resize(n);
  for (int i = 0; i < n; ++i) out.lambda_of[i] = lambda_class(torsors[i], B, h1);

  // iso classes and h1 classes must determine each other
  out.bijection = out.class_count() == h1.class_count();
  std::vector<int> iso_to_h1(out.class_count(), -1);
  for (int i = 0; i < n && out.bijection; ++i) {
    int& slot = iso_to_h1[out.iso_class[i]];
    if (slot < 0) slot = out.lambda_of[i];
    else if (slot != out.lambda_of[i]) out.bijection = false;
  }
  if (out.bijection) {
    std::vector<char> seen(h1.class_count(), 0);
    for (int c : iso_to_h1) {
      if (c < 0 || seen[c]) {
        out.bijection = false;
        break;
      }
      seen[c] = 1;
    }
  }
  return out;
}

Torsor torsor_product(const Torsor& T1, const Torsor& T2, Elem p1, Elem p2, const Bimodule& B,
                      const H1Set& h1) {
  if (h1_group_structure(B, h1).status == H1GroupStatus::NotAGroup)
    throw ComputeError("NoGroupStructure",
                       "the torsor product needs the class product to be well defined");
  DerPair a1 = lambda_pair(T1, B, p1);
  DerPair a2 = lambda_pair(T2, B, p2);
  Torsor prod = twisted_torsor(B, star_product(a1, a2, B));

  int expect = h1.class_of_pair(
      star_product(h1.representative(h1.class_of_pair(a1)),
                   h1.representative(h1.class_of_pair(a2)), B));
  if (lambda_class(prod, B, h1) != expect)
    throw ComputeError("InternalAssertionFailed",
                       "product torsor does not realize the product class");

  for (int q1 = 0; q1 < T1.points(); ++q1)
    for (int q2 = 0; q2 < T2.points(); ++q2) {
      Torsor other = twisted_torsor(
          B, star_product(lambda_pair(T1, B, q1), lambda_pair(T2, B, q2), B));
      if (!torsor_iso(prod, other, B))
        throw ComputeError("WellDefinednessViolated",
                           "product torsor class depends on the basepoints");
    }
  return prod;
}

}  // namespace nabelh1

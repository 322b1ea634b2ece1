// Shared builders for the test suite.  Expected values in the tests are frozen
// from independent brute-force computations, never from the code under test.
#pragma once

#include "bimodule.hpp"
#include "fixture.hpp"

#include <fstream>
#include <sstream>

namespace th {

using namespace nabelh1;

inline Table cyclic_table(int n) {
  Table t((size_t)n, std::vector<Elem>((size_t)n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

inline Table klein4_table() {
  return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
}

// order-6 symmetric group: 0=e, 1..3 the order-2 elements, 4..5 the 3-cycles
inline Table sym3_table() {
  return {{0, 1, 2, 3, 4, 5}, {1, 0, 5, 4, 3, 2}, {2, 4, 0, 5, 1, 3},
          {3, 5, 4, 0, 2, 1}, {4, 2, 3, 1, 5, 0}, {5, 3, 1, 2, 0, 4}};
}

// conjugation table of the same group: t[g][a] = g a g^-1
inline Table sym3_conj_table() {
  return {{0, 1, 2, 3, 4, 5}, {0, 1, 3, 2, 5, 4}, {0, 3, 2, 1, 5, 4},
          {0, 2, 1, 3, 5, 4}, {0, 3, 1, 2, 4, 5}, {0, 2, 3, 1, 4, 5}};
}

inline GroupPtr cyclic(int n, ElemSet open = {}) {
  return Group::validate(cyclic_table(n), 0, open);
}

inline GroupPtr klein4() { return Group::validate(klein4_table(), 0, {}); }

inline GroupPtr sym3(ElemSet open = {}) { return Group::validate(sym3_table(), 0, open); }

inline Table trivial_action_table(int actor, int space) {
  Table t((size_t)actor, std::vector<Elem>((size_t)space));
  for (int g = 0; g < actor; ++g)
    for (int a = 0; a < space; ++a) t[g][a] = a;
  return t;
}

// module A over G with everything trivial: R is the one-element group
inline Bimodule trivial_target_bimodule(GroupPtr G, GroupPtr A,
                                        std::optional<Table> g_on_a = std::nullopt) {
  GroupPtr R = cyclic(1);
  Table ga = g_on_a ? *g_on_a : trivial_action_table(G->order(), A->order());
  return assemble_bimodule(
      G, R, A, trivial_map(A, R), validate_action(G, A, std::move(ga)),
      validate_action(G, R, trivial_action_table(G->order(), 1)),
      validate_action(R, A, trivial_action_table(1, A->order())));
}

// order-2 group inverting an order-4 module, structure map = parity:
// satisfies the partial law but not the full one
inline Bimodule partial_only_bimodule() {
  GroupPtr G = cyclic(2);
  GroupPtr R = cyclic(2);
  GroupPtr A = cyclic(4);
  Table inv4 = {{0, 1, 2, 3}, {0, 3, 2, 1}};
  return assemble_bimodule(G, R, A, validate_map(A, R, {0, 1, 0, 1}, true),
                           validate_action(G, A, inv4),
                           validate_action(G, R, trivial_action_table(2, 2)),
                           validate_action(R, A, inv4));
}

// order-6 module with parity structure map into an order-2 target: the partial
// law fails on the kernel (conjugation by a 3-cycle is not trivial)
inline Bimodule precrossed_only_bimodule() {
  GroupPtr G = cyclic(1);
  GroupPtr R = cyclic(2);
  GroupPtr A = sym3();
  std::vector<Elem> sign = {0, 1, 1, 1, 0, 0};
  return assemble_bimodule(G, R, A, validate_map(A, R, sign, true),
                           validate_action(G, A, trivial_action_table(1, 6)),
                           validate_action(G, R, trivial_action_table(1, 2)),
                           validate_action(R, A, trivial_action_table(2, 6)));
}

// the group over itself: identity structure map, conjugation everywhere
inline Bimodule self_bimodule(GroupPtr S, const Table& conj) {
  GroupAction c = validate_action(S, S, conj);
  return assemble_bimodule(S, S, S, identity_map(S), c, c, c);
}

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

inline Document load_fixture(const std::string& name) {
  return load_document_file(fixture_path(name));
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace th

// Finite topological groups as Cayley tables with a distinguished open normal
// subgroup; open sets are unions of its cosets.  Elements are dense indices
// 0..order-1 with the identity at 0 (validation re-indexes if needed).
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nabelh1 {

using Elem = int;
using Table = std::vector<std::vector<Elem>>;
using ElemSet = std::vector<Elem>;  // sorted, duplicate-free

struct Error : std::runtime_error {
  std::string kind;
  Error(std::string kind_, const std::string& what_)
      : std::runtime_error(what_), kind(std::move(kind_)) {}
};

struct ValidationError : Error { using Error::Error; };
struct ReferenceError : ValidationError { using ValidationError::ValidationError; };
struct ParseError : ValidationError { using ValidationError::ValidationError; };
struct ComputeError : Error { using Error::Error; };

struct SizeGuardError : ComputeError {
  std::uint64_t required;
  SizeGuardError(std::uint64_t required_, const std::string& what_)
      : ComputeError("SizeGuardExceeded", what_), required(required_) {}
};

// Cap on exhaustive-search candidate counts; overridable per call.
struct SizeGuard {
  std::uint64_t cap = 10'000'000;
  void require(std::uint64_t candidates, const std::string& what) const;
};

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);
ElemSet sorted_unique(ElemSet v);
bool set_contains(const ElemSet& s, Elem x);

class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Group {
public:
  static constexpr Elem id = 0;

  int order() const { return order_; }
  Elem mul(Elem a, Elem b) const { return cayley_[a][b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem conj(Elem a, Elem b) const { return mul(mul(a, b), inv(a)); }  // ^a b
  const Table& cayley() const { return cayley_; }
  const ElemSet& open_subgroup() const { return open_; }
  bool open_contains(Elem x) const { return open_mask_[x] != 0; }
  bool discrete() const { return open_.size() == 1; }
  bool indiscrete() const { return (int)open_.size() == order_; }
  // raw index -> validated index (identity moved to 0)
  const std::vector<Elem>& reindexing() const { return reindex_; }

  bool is_abelian() const;
  ElemSet center() const;
  ElemSet commutator_subgroup() const;
  ElemSet subgroup_generated(const ElemSet& gens) const;
  bool is_subgroup(const ElemSet& s) const;
  bool is_normal(const ElemSet& s) const;
  std::vector<ElemSet> all_subgroups() const;
  std::vector<ElemSet> normal_subgroups() const;
  // greedy: each generator maximizes the span of the subgroup generated so far
  std::vector<Elem> minimal_generating_sequence() const;

  // Throws ValidationError (NotAssociative / NoIdentity / NoInverse /
  // MalformedTable / SubgroupNotClosed / SubgroupNotNormal).  Witnesses in the
  // messages use raw indices.  Empty open subgroup means discrete.
  static GroupPtr validate(const Table& cayley, std::optional<Elem> identity_hint,
                           const ElemSet& open_subgroup);

private:
  Group() = default;
  int order_ = 0;
  Table cayley_;
  std::vector<Elem> inverse_;
  ElemSet open_;
  std::vector<char> open_mask_;
  std::vector<Elem> reindex_;
};

struct GroupMap {
  GroupPtr dom, cod;
  std::vector<Elem> images;
  bool is_homomorphism = true;
  Elem operator()(Elem x) const { return images[x]; }
};

// Left action by automorphisms: table[g][a] = ^g a.
struct GroupAction {
  GroupPtr actor, space;
  Table table;
  Elem operator()(Elem g, Elem a) const { return table[g][a]; }
};

GroupMap validate_map(GroupPtr dom, GroupPtr cod, std::vector<Elem> images,
                      bool is_homomorphism);
GroupAction validate_action(GroupPtr actor, GroupPtr space, Table table);

// f is continuous iff f(x * N_dom) lies in f(x) * N_cod for every x.
bool is_continuous_map(const GroupMap& f);
// continuous iff ^(g n)(a m) lies in (^g a) * N_space for all g,a,n,m.
bool is_continuous_action(const GroupAction& act);

struct FixedPoints {
  ElemSet elements;
  bool subgroup;
};
FixedPoints fixed_points(const GroupAction& act);

struct Quotient {
  GroupPtr group;
  GroupMap projection;
  std::vector<Elem> coset_rep;  // quotient index -> least element of the coset
};
Quotient quotient_by(GroupPtr G, const ElemSet& N);  // throws NotNormal

struct SubgroupEmbedding {
  GroupPtr group;
  GroupMap inclusion;
  std::vector<Elem> index_in_sub;  // ambient elem -> subgroup index, -1 outside
};
SubgroupEmbedding subgroup_as_group(GroupPtr G, const ElemSet& elements);  // throws NotSubgroup

GroupAction conjugation_action(GroupPtr G);
GroupAction trivial_action(GroupPtr actor, GroupPtr space);
GroupMap identity_map(GroupPtr G);
GroupMap trivial_map(GroupPtr dom, GroupPtr cod);
GroupMap compose(const GroupMap& outer, const GroupMap& inner);
GroupMap pointwise_inverse(const GroupMap& f);  // x -> f(x)^-1
GroupPtr trivial_group();

}  // namespace nabelh1

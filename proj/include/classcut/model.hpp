#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "classcut/errors.hpp"

namespace classcut {

enum class MemberKind { Method, Field };

// Index into a ClassGraph's member list. Dense, declaration order.
struct MemberId {
  std::uint32_t index{};
  auto operator<=>(const MemberId &) const = default;
};

struct Member {
  MemberId id;
  std::string name;
  MemberKind kind;
};

struct MemberDecl {
  std::string name;
  MemberKind kind;
};

// Edge relations keyed by method name; targets are member names.
using EdgeMap = std::map<std::string, std::vector<std::string>>;

// A class's members plus the two intra-class dependency relations
// (method-uses-field and method-calls-method). Immutable once built.
class ClassGraph {
public:
  static ClassGraph build(std::string class_name, std::vector<MemberDecl> members,
                          const EdgeMap &field_refs, const EdgeMap &calls);

  const std::string &name() const { return name_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<Member> &members() const { return members_; }
  const Member &member(MemberId id) const;
  const Member *find(std::string_view member_name) const;

  bool is_method(MemberId id) const { return member(id).kind == MemberKind::Method; }
  bool is_field(MemberId id) const { return member(id).kind == MemberKind::Field; }

  // Fields referenced by a method.
  const std::set<MemberId> &uses(MemberId method) const;
  // Methods called by a method (self-calls are dropped at build time).
  const std::set<MemberId> &calls(MemberId method) const;
  // Methods referencing a field.
  const std::set<MemberId> &users(MemberId field) const;
  // Methods calling a method.
  const std::set<MemberId> &callers(MemberId method) const;

  bool operator==(const ClassGraph &other) const;

private:
  std::string name_;
  std::vector<Member> members_;
  std::vector<std::set<MemberId>> uses_;    // indexed by method
  std::vector<std::set<MemberId>> calls_;   // indexed by method
  std::vector<std::set<MemberId>> users_;   // indexed by field
  std::vector<std::set<MemberId>> callers_; // indexed by method
};

struct Cluster {
  std::uint32_t id{};
  std::set<MemberId> members;

  bool operator==(const Cluster &) const = default;
};

struct Partition {
  std::vector<Cluster> clusters;
  std::size_t member_count{};

  // Disjointness and exact coverage of 0..member_count-1.
  bool is_valid() const;

  bool operator==(const Partition &) const = default;
};

std::set<MemberId> methods_of(const Cluster &cluster, const ClassGraph &graph);
std::set<MemberId> fields_of(const Cluster &cluster, const ClassGraph &graph);

} // namespace classcut

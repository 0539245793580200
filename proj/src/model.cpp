#include "classcut/model.hpp"

#include <algorithm>

namespace classcut {

ClassGraph ClassGraph::build(std::string class_name, std::vector<MemberDecl> members,
                             const EdgeMap &field_refs, const EdgeMap &calls) {
  ClassGraph g;
  g.name_ = std::move(class_name);
  std::map<std::string, MemberId, std::less<>> index;
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto &decl = members[i];
    if (decl.name.empty())
      throw Error(ErrorCode::InvalidArgument, "empty member name");
    MemberId id{static_cast<std::uint32_t>(i)};
    if (!index.emplace(decl.name, id).second)
      throw Error(ErrorCode::DuplicateMember, "duplicate member '" + decl.name + "'");
    g.members_.push_back({id, decl.name, decl.kind});
  }
  auto n = g.members_.size();
  g.uses_.resize(n);
  g.calls_.resize(n);
  g.users_.resize(n);
  g.callers_.resize(n);

  auto resolve = [&](const std::string &name) {
    auto it = index.find(name);
    if (it == index.end())
      throw Error(ErrorCode::UnknownMember, "unknown member '" + name + "'");
    return it->second;
  };

  for (auto &[from, targets] : field_refs) {
    MemberId m = resolve(from);
    if (g.members_[m.index].kind != MemberKind::Method)
      throw Error(ErrorCode::KindMismatch, "'" + from + "' is a field; only methods reference fields");
    for (auto &to : targets) {
      MemberId f = resolve(to);
      if (g.members_[f.index].kind != MemberKind::Field)
        throw Error(ErrorCode::KindMismatch,
                    "'" + from + "' uses '" + to + "', which is not a field");
      g.uses_[m.index].insert(f);
      g.users_[f.index].insert(m);
    }
  }
  for (auto &[from, targets] : calls) {
    MemberId m = resolve(from);
    if (g.members_[m.index].kind != MemberKind::Method)
      throw Error(ErrorCode::KindMismatch, "'" + from + "' is a field; fields cannot call");
    for (auto &to : targets) {
      MemberId callee = resolve(to);
      if (g.members_[callee.index].kind != MemberKind::Method)
        throw Error(ErrorCode::KindMismatch,
                    "'" + from + "' calls '" + to + "', which is not a method");
      if (callee == m)
        continue; // self-calls dropped
      g.calls_[m.index].insert(callee);
      g.callers_[callee.index].insert(m);
    }
  }
  return g;
}

const Member &ClassGraph::member(MemberId id) const {
  if (id.index >= members_.size())
    throw Error(ErrorCode::UnknownMember, "member index out of range");
  return members_[id.index];
}

const Member *ClassGraph::find(std::string_view member_name) const {
  for (auto &m : members_)
    if (m.name == member_name)
      return &m;
  return nullptr;
}

const std::set<MemberId> &ClassGraph::uses(MemberId method) const {
  member(method);
  return uses_[method.index];
}

const std::set<MemberId> &ClassGraph::calls(MemberId method) const {
  member(method);
  return calls_[method.index];
}

const std::set<MemberId> &ClassGraph::users(MemberId field) const {
  member(field);
  return users_[field.index];
}

const std::set<MemberId> &ClassGraph::callers(MemberId method) const {
  member(method);
  return callers_[method.index];
}

bool ClassGraph::operator==(const ClassGraph &other) const {
  if (name_ != other.name_ || members_.size() != other.members_.size())
    return false;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].name != other.members_[i].name ||
        members_[i].kind != other.members_[i].kind)
      return false;
  }
  return uses_ == other.uses_ && calls_ == other.calls_;
}

bool Partition::is_valid() const {
  std::set<MemberId> seen;
  std::size_t total = 0;
  for (auto &c : clusters) {
    if (c.members.empty())
      return false;
    total += c.members.size();
    seen.insert(c.members.begin(), c.members.end());
  }
  if (total != member_count || seen.size() != member_count)
    return false;
  for (auto &id : seen)
    if (id.index >= member_count)
      return false;
  return true;
}

std::set<MemberId> methods_of(const Cluster &cluster, const ClassGraph &graph) {
  std::set<MemberId> out;
  for (auto id : cluster.members)
    if (graph.is_method(id))
      out.insert(id);
  return out;
}

std::set<MemberId> fields_of(const Cluster &cluster, const ClassGraph &graph) {
  std::set<MemberId> out;
  for (auto id : cluster.members)
    if (graph.is_field(id))
      out.insert(id);
  return out;
}

} // namespace classcut

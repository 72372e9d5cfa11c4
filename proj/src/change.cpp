#include "argdyn/change.hpp"

namespace argdyn {

namespace {

Framework apply_add_attack(const Framework& f, const AddAttack& c) {
  if (!f.contains(c.source))
    throw DomainError("dangling endpoint '" + c.source.name() + "'");
  if (!f.contains(c.target))
    throw DomainError("dangling endpoint '" + c.target.name() + "'");
  if (f.has_attack(c.source, c.target))
    throw DomainError("duplicate attack (" + c.source.name() + "," +
                      c.target.name() + ")");
  AttackSet attacks = f.attacks();
  attacks.emplace(c.source, c.target);
  return Framework(f.arguments(), std::move(attacks));
}

Framework apply_remove_attack(const Framework& f, const RemoveAttack& c) {
  if (!f.contains(c.source))
    throw DomainError("dangling endpoint '" + c.source.name() + "'");
  if (!f.contains(c.target))
    throw DomainError("dangling endpoint '" + c.target.name() + "'");
  if (!f.has_attack(c.source, c.target))
    throw DomainError("missing attack (" + c.source.name() + "," +
                      c.target.name() + ")");
  AttackSet attacks = f.attacks();
  attacks.erase({c.source, c.target});
  return Framework(f.arguments(), std::move(attacks));
}

Framework apply_add_argument(const Framework& f, const AddArgument& c) {
  if (f.contains(c.z))
    throw DomainError("duplicate argument '" + c.z.name() + "'");
  if (c.interactions.empty())
    throw DomainError("interaction set must be non-empty");
  for (const auto& [from, to] : c.interactions) {
    if (from == c.z && to == c.z)
      throw DomainError("self-interaction (" + c.z.name() + "," +
                        c.z.name() + ") not allowed");
    if (from != c.z && to != c.z)
      throw DomainError("interaction (" + from.name() + "," + to.name() +
                        ") does not involve '" + c.z.name() + "'");
    const ArgumentId& other = from == c.z ? to : from;
    if (!f.contains(other))
      throw DomainError("dangling endpoint '" + other.name() + "'");
  }
  ArgSet arguments = f.arguments();
  arguments.insert(c.z);
  AttackSet attacks = f.attacks();
  attacks.insert(c.interactions.begin(), c.interactions.end());
  return Framework(std::move(arguments), std::move(attacks));
}

Framework apply_remove_argument(const Framework& f, const RemoveArgument& c) {
  if (!f.contains(c.z))
    throw DomainError("unknown argument '" + c.z.name() + "'");
  if (f.size() < 2)
    throw DomainError("cannot remove the last argument '" + c.z.name() + "'");
  ArgSet arguments = f.arguments();
  arguments.erase(c.z);
  AttackSet attacks;
  for (const Attack& a : f.attacks())
    if (a.first != c.z && a.second != c.z)
      attacks.insert(a);
  return Framework(std::move(arguments), std::move(attacks));
}

}  // namespace

Framework apply(const Framework& f, const Change& c) {
  return std::visit(
      [&](const auto& op) { return [&] {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, AddAttack>)
          return apply_add_attack(f, op);
        else if constexpr (std::is_same_v<T, RemoveAttack>)
          return apply_remove_attack(f, op);
        else if constexpr (std::is_same_v<T, AddArgument>)
          return apply_add_argument(f, op);
        else
          return apply_remove_argument(f, op);
      }(); },
      c);
}

Change record_removal(const Framework& f, const ArgumentId& z) {
  if (!f.contains(z))
    throw DomainError("unknown argument '" + z.name() + "'");
  AttackSet incident;
  for (const Attack& a : f.attacks())
    if (a.first == z || a.second == z)
      incident.insert(a);
  return RemoveArgument{z, std::move(incident)};
}

Change inverse(const Change& c, const Framework& after) {
  (void)after;
  if (const auto* add = std::get_if<AddAttack>(&c))
    return RemoveAttack{add->source, add->target};
  if (const auto* rem = std::get_if<RemoveAttack>(&c))
    return AddAttack{rem->source, rem->target};
  if (const auto* add = std::get_if<AddArgument>(&c))
    return record_removal(after, add->z);
  const auto& rem = std::get<RemoveArgument>(c);
  if (!rem.removed_incident)
    throw DomainError("cannot invert removal of '" + rem.z.name() +
                      "': incident attacks were not recorded");
  return AddArgument{rem.z, *rem.removed_incident};
}

const ArgumentId* added_argument(const Change& c) {
  if (const auto* add = std::get_if<AddArgument>(&c))
    return &add->z;
  return nullptr;
}

}  // namespace argdyn

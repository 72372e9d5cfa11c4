#pragma once

#include <optional>
#include <variant>

#include "argdyn/framework.hpp"

namespace argdyn {

/// Add one attack between two existing arguments.
struct AddAttack {
  ArgumentId source;
  ArgumentId target;
  friend bool operator==(const AddAttack&, const AddAttack&) = default;
};

/// Remove one existing attack.
struct RemoveAttack {
  ArgumentId source;
  ArgumentId target;
  friend bool operator==(const RemoveAttack&, const RemoveAttack&) = default;
};

/// Add one fresh argument z together with its non-empty interaction set.
/// Every interaction is (z, x) or (x, z) with x an existing argument;
/// (z, z) is not allowed.
struct AddArgument {
  ArgumentId z;
  AttackSet interactions;
  friend bool operator==(const AddArgument&, const AddArgument&) = default;
};

/// Remove one argument together with every attack incident to it. The
/// removed incident attacks may be recorded so the change stays
/// invertible; `record_removal` fills them in.
struct RemoveArgument {
  ArgumentId z;
  std::optional<AttackSet> removed_incident;
  friend bool operator==(const RemoveArgument&, const RemoveArgument&) = default;
};

using Change = std::variant<AddAttack, RemoveAttack, AddArgument, RemoveArgument>;

/// Applies the change, returning a new framework. The input is never
/// mutated. Each violated precondition is reported distinctly:
/// duplicate attack, missing attack, duplicate argument, dangling
/// endpoint, or last-argument removal.
Framework apply(const Framework& f, const Change& c);

/// RemoveArgument(z) with the incident attacks of z recorded, so the
/// change can later be inverted.
Change record_removal(const Framework& f, const ArgumentId& z);

/// The change undoing c, given the framework c produced. Inverting a
/// RemoveArgument requires its recorded incident set; without it the
/// information is gone and a DomainError is raised.
Change inverse(const Change& c, const Framework& after);

/// The added argument if c is an AddArgument, nullptr otherwise.
const ArgumentId* added_argument(const Change& c);

}  // namespace argdyn

#pragma once

#include <string>
#include <vector>

#include "argdyn/framework.hpp"

namespace argdyn {

enum class SemanticsKind { Grounded, Preferred, Stable };

std::string to_string(SemanticsKind k);
SemanticsKind semantics_from_string(const std::string& s);

enum class ArgumentStatus { SkepticallyAccepted, CredulouslyOnlyAccepted, Rejected };

/// The outcome of a framework under a semantics. An empty `extensions`
/// vector means "no extension at all" (possible only under the stable
/// semantics) and is distinct from a single empty extension.
///
/// Canonical form: members of each extension are sorted by name and the
/// extensions themselves are sorted lexicographically, so equality is
/// plain structural equality.
struct ExtensionSet {
  SemanticsKind semantics;
  std::vector<ArgSet> extensions;

  bool no_extension() const { return extensions.empty(); }
  bool single_empty() const {
    return extensions.size() == 1 && extensions.front().empty();
  }
  ArgSet union_of() const;
  /// Intersection over no extensions is defined as the empty set,
  /// matching the convention that nothing is skeptically accepted when
  /// no extension exists.
  ArgSet intersection_of() const;

  friend bool operator==(const ExtensionSet&, const ExtensionSet&) = default;
};

/// Builds a canonical ExtensionSet from an arbitrary list of extensions.
ExtensionSet make_extension_set(SemanticsKind k, std::vector<ArgSet> exts);

/// The set of arguments s defends: every attacker of a member of the
/// result is attacked by s. Unattacked arguments are always included.
ArgSet characteristic(const Framework& f, const ArgSet& s);

/// Least fixed point of the characteristic function, iterated from the
/// empty set (stabilizes within |arguments| steps).
ExtensionSet grounded(const Framework& f);

/// All conflict-free, self-defending sets, in canonical order.
std::vector<ArgSet> admissible_sets(const Framework& f);

/// Inclusion-maximal admissible sets. Never empty as a set of extensions.
ExtensionSet preferred(const Framework& f);

/// Conflict-free sets attacking every outside argument. May be empty.
ExtensionSet stable(const Framework& f);

ExtensionSet extensions(const Framework& f, SemanticsKind k);

ArgumentStatus status(const Framework& f, const ArgumentId& a, SemanticsKind k);

/// Direct admissibility test: conflict-free and defends each member.
bool is_admissible(const Framework& f, const ArgSet& s);

}  // namespace argdyn

#pragma once

#include <map>
#include <optional>
#include <string>

#include "argdyn/change.hpp"
#include "argdyn/semantics.hpp"

namespace argdyn {

/// Mutually exclusive labels comparing the extension sets before and
/// after a change. Unclassified covers the one (n = p) corner the
/// definitions leave unnamed: equal counts, every before-extension kept,
/// but not every after-extension a strict superset.
enum class StructuralProperty {
  Decisive,
  Restrictive,
  Questioning,
  Destructive,
  Expansive,
  Conservative,
  Altering,
  Unclassified,
};

std::string to_string(StructuralProperty p);
StructuralProperty structural_from_string(const std::string& s);

struct ClassificationReport {
  StructuralProperty structural;
  bool monotony;
  bool credulous_monotony;
  bool skeptical_monotony;
  std::map<ArgumentId, bool> partial_monotony;
  /// Present only for AddArgument changes.
  std::optional<bool> priority_to_recency;
};

/// Exactly one label per pair; both sets must come from the same
/// semantics.
StructuralProperty classify_structural(const ExtensionSet& before,
                                       const ExtensionSet& after);

/// Every extension of `before` is included in some extension of `after`.
bool check_monotony(const ExtensionSet& before, const ExtensionSet& after);

/// Union of before-extensions included in union of after-extensions.
bool check_credulous_monotony(const ExtensionSet& before,
                              const ExtensionSet& after);

/// Intersection of before-extensions included in intersection of
/// after-extensions (intersection over no extensions = empty set).
bool check_skeptical_monotony(const ExtensionSet& before,
                              const ExtensionSet& after);

/// If x belongs to some before-extension, it belongs to some
/// after-extension.
bool check_partial_monotony(const ExtensionSet& before,
                            const ExtensionSet& after, const ArgumentId& x);

/// At least one after-extension exists and z belongs to all of them.
/// Meaningful only for AddArgument changes.
bool check_priority_to_recency(const ExtensionSet& after, const ArgumentId& z);

/// Full report for a change: structural label, the three monotony
/// flags, partial monotony for every argument of the before-framework,
/// and Priority to Recency when the change added an argument.
ClassificationReport classify(const Framework& before_framework,
                              const ExtensionSet& before,
                              const ExtensionSet& after, const Change& change);

}  // namespace argdyn

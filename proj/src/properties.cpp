#include "argdyn/properties.hpp"

#include <algorithm>

namespace argdyn {

std::string to_string(StructuralProperty p) {
  switch (p) {
    case StructuralProperty::Decisive: return "decisive";
    case StructuralProperty::Restrictive: return "restrictive";
    case StructuralProperty::Questioning: return "questioning";
    case StructuralProperty::Destructive: return "destructive";
    case StructuralProperty::Expansive: return "expansive";
    case StructuralProperty::Conservative: return "conservative";
    case StructuralProperty::Altering: return "altering";
    case StructuralProperty::Unclassified: return "unclassified";
  }
  throw DomainError("bad structural property");
}

StructuralProperty structural_from_string(const std::string& s) {
  for (auto p : {StructuralProperty::Decisive, StructuralProperty::Restrictive,
                 StructuralProperty::Questioning, StructuralProperty::Destructive,
                 StructuralProperty::Expansive, StructuralProperty::Conservative,
                 StructuralProperty::Altering, StructuralProperty::Unclassified})
    if (to_string(p) == s)
      return p;
  throw DomainError("unknown structural property '" + s + "'");
}

namespace {
void require_same_semantics(const ExtensionSet& a, const ExtensionSet& b) {
  if (a.semantics != b.semantics)
    throw DomainError("extension sets come from different semantics");
}

bool subset(const ArgSet& a, const ArgSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
}  // namespace

StructuralProperty classify_structural(const ExtensionSet& before,
                                       const ExtensionSet& after) {
  require_same_semantics(before, after);
  const auto& e = before.extensions;
  const auto& ep = after.extensions;

  if (e == ep)
    return StructuralProperty::Conservative;
  if ((before.no_extension() || before.single_empty() || e.size() >= 2) &&
      ep.size() == 1 && !after.single_empty())
    return StructuralProperty::Decisive;
  if (!before.no_extension() && !before.single_empty() &&
      (after.no_extension() || after.single_empty()))
    return StructuralProperty::Destructive;
  if (e.size() > ep.size() && ep.size() >= 2)
    return StructuralProperty::Restrictive;
  if (ep.size() >= 2 && (before.no_extension() || ep.size() > e.size()))
    return StructuralProperty::Questioning;
  if (e.size() == ep.size()) {
    bool expansive = std::all_of(ep.begin(), ep.end(), [&](const ArgSet& ej) {
      return std::any_of(e.begin(), e.end(), [&](const ArgSet& ei) {
        return ei != ej && subset(ei, ej);
      });
    });
    if (expansive)
      return StructuralProperty::Expansive;
    bool altering = std::any_of(e.begin(), e.end(), [&](const ArgSet& ei) {
      return std::none_of(ep.begin(), ep.end(),
                          [&](const ArgSet& ej) { return subset(ei, ej); });
    });
    if (altering)
      return StructuralProperty::Altering;
  }
  return StructuralProperty::Unclassified;
}

bool check_monotony(const ExtensionSet& before, const ExtensionSet& after) {
  require_same_semantics(before, after);
  return std::all_of(
      before.extensions.begin(), before.extensions.end(),
      [&](const ArgSet& ei) {
        return std::any_of(after.extensions.begin(), after.extensions.end(),
                           [&](const ArgSet& ej) { return subset(ei, ej); });
      });
}

bool check_credulous_monotony(const ExtensionSet& before,
                              const ExtensionSet& after) {
  require_same_semantics(before, after);
  return subset(before.union_of(), after.union_of());
}

bool check_skeptical_monotony(const ExtensionSet& before,
                              const ExtensionSet& after) {
  require_same_semantics(before, after);
  return subset(before.intersection_of(), after.intersection_of());
}

bool check_partial_monotony(const ExtensionSet& before,
                            const ExtensionSet& after, const ArgumentId& x) {
  require_same_semantics(before, after);
  bool in_before = std::any_of(before.extensions.begin(),
                               before.extensions.end(),
                               [&](const ArgSet& e) { return e.count(x); });
  if (!in_before)
    return true;
  return std::any_of(after.extensions.begin(), after.extensions.end(),
                     [&](const ArgSet& e) { return e.count(x); });
}

bool check_priority_to_recency(const ExtensionSet& after, const ArgumentId& z) {
  if (after.no_extension())
    return false;
  return std::all_of(after.extensions.begin(), after.extensions.end(),
                     [&](const ArgSet& e) { return e.count(z) != 0; });
}

ClassificationReport classify(const Framework& before_framework,
                              const ExtensionSet& before,
                              const ExtensionSet& after, const Change& change) {
  ClassificationReport report;
  report.structural = classify_structural(before, after);
  report.monotony = check_monotony(before, after);
  report.credulous_monotony = check_credulous_monotony(before, after);
  report.skeptical_monotony = check_skeptical_monotony(before, after);
  for (const ArgumentId& a : before_framework.arguments())
    report.partial_monotony.emplace(a, check_partial_monotony(before, after, a));
  if (const ArgumentId* z = added_argument(change))
    report.priority_to_recency = check_priority_to_recency(after, *z);
  return report;
}

}  // namespace argdyn

#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "argdyn/properties.hpp"

namespace argdyn {

/// Outcome of evaluating the sufficient (CS) and necessary (CN)
/// conditions for an add-argument change under one semantics.
///
/// A property lands in `guaranteed` when one of its CS fired, and in
/// `excluded` when one of its CN failed (contrapositive use). A CN that
/// holds guarantees nothing and is reported nowhere. Property names are
/// stable lowercase strings ("decisive", "monotony",
/// "partial_monotony(x)", ...), proposition ids are stable short
/// strings ("P9-iff", "C3", ...).
struct ConditionReport {
  SemanticsKind semantics;
  std::set<std::pair<std::string, std::string>> fired_cs;
  std::set<std::pair<std::string, std::string>> failed_cn;
  std::set<std::string> guaranteed;
  std::set<std::string> excluded;
};

/// A proposition whose implication failed on a concrete instance.
/// Never expected to be produced; any occurrence is an engine bug.
struct Violation {
  std::string proposition_id;
  Framework framework;
  Change change;
  std::string expected;
  std::string observed;
};

/// CS/CN evaluation under the grounded semantics. The change must be an
/// AddArgument applicable to f.
ConditionReport evaluate_grounded_conditions(const Framework& f,
                                             const Change& c);

/// CS/CN evaluation under the preferred semantics.
ConditionReport evaluate_preferred_conditions(const Framework& f,
                                              const Change& c);

/// Runs every applicable proposition, corollary and lemma as a runtime
/// assertion on (f, c) under semantics k and reports the failures.
/// The expected result is always an empty sequence.
std::vector<Violation> verify_propositions(const Framework& f, const Change& c,
                                           SemanticsKind k);

/// Closed-form grounded extension of apply(f, c) when the hypotheses of
/// the empty-extension case (grounded extension empty, z unattacked) or
/// the monotone case (extension non-empty, z does not attack it, it
/// defends z) hold; absent otherwise.
std::optional<ArgSet> grounded_closed_forms(const Framework& f,
                                            const Change& c);

}  // namespace argdyn

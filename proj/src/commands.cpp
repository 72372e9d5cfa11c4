#include "argdyn/commands.hpp"

#include <algorithm>
#include <sstream>

namespace argdyn {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

void append_classification(std::ostringstream& out,
                           const ClassificationReport& report) {
  out << "structural: " << to_string(report.structural) << "\n";
  out << "monotony: " << bool_str(report.monotony) << "\n";
  out << "credulous_monotony: " << bool_str(report.credulous_monotony) << "\n";
  out << "skeptical_monotony: " << bool_str(report.skeptical_monotony) << "\n";
  out << "partial_monotony:\n";
  for (const auto& [arg, ok] : report.partial_monotony)
    out << "  " << arg.name() << ": " << bool_str(ok) << "\n";
  if (report.priority_to_recency)
    out << "priority_to_recency: " << bool_str(*report.priority_to_recency)
        << "\n";
}

}  // namespace

std::string report_extensions(const Framework& f, SemanticsKind k) {
  ExtensionSet e = extensions(f, k);
  std::ostringstream out;
  out << "semantics: " << to_string(k) << "\n";
  out << "extensions: " << format_extension_set(e) << "\n";
  out << "count: " << e.extensions.size() << "\n";
  return out.str();
}

std::string report_classify(const Framework& f, const Change& c,
                            SemanticsKind k) {
  Framework after = apply(f, c);
  ExtensionSet before_e = extensions(f, k);
  ExtensionSet after_e = extensions(after, k);
  ClassificationReport report = classify(f, before_e, after_e, c);

  std::ostringstream out;
  out << "semantics: " << to_string(k) << "\n";
  out << "change: " << format_change(c) << "\n";
  out << "before: " << format_extension_set(before_e) << "\n";
  out << "after: " << format_extension_set(after_e) << "\n";
  append_classification(out, report);
  return out.str();
}

namespace {

bool property_materialized(const std::string& property,
                           const ClassificationReport& report) {
  if (property == "monotony")
    return report.monotony;
  if (property == "skeptical_monotony")
    return report.skeptical_monotony;
  if (property == "priority_to_recency")
    return report.priority_to_recency.value_or(false);
  if (property.starts_with("partial_monotony(")) {
    std::string name = property.substr(17, property.size() - 18);
    auto it = report.partial_monotony.find(ArgumentId(name));
    return it != report.partial_monotony.end() && it->second;
  }
  return to_string(report.structural) == property;
}

}  // namespace

std::string report_conditions(const Framework& f, const Change& c,
                              SemanticsKind k) {
  ConditionReport cond;
  if (k == SemanticsKind::Grounded)
    cond = evaluate_grounded_conditions(f, c);
  else if (k == SemanticsKind::Preferred)
    cond = evaluate_preferred_conditions(f, c);
  else
    throw DomainError("conditions are available for grounded and preferred only");

  Framework after = apply(f, c);
  ExtensionSet before_e = extensions(f, k);
  ExtensionSet after_e = extensions(after, k);
  ClassificationReport report = classify(f, before_e, after_e, c);

  std::ostringstream out;
  out << "semantics: " << to_string(k) << "\n";
  out << "change: " << format_change(c) << "\n";
  out << "fired_cs:\n";
  for (const auto& [prop, id] : cond.fired_cs)
    out << "  " << prop << ": " << id << "\n";
  out << "failed_cn:\n";
  for (const auto& [prop, id] : cond.failed_cn)
    out << "  " << prop << ": " << id << "\n";
  out << "guaranteed:";
  for (const std::string& p : cond.guaranteed)
    out << " " << p;
  out << "\nexcluded:";
  for (const std::string& p : cond.excluded)
    out << " " << p;
  out << "\n";
  out << "before: " << format_extension_set(before_e) << "\n";
  out << "after: " << format_extension_set(after_e) << "\n";
  append_classification(out, report);

  std::vector<std::string> broken;
  for (const std::string& p : cond.guaranteed)
    if (!property_materialized(p, report))
      broken.push_back(p);
  if (broken.empty()) {
    out << "consistency: ok\n";
  } else {
    out << "consistency: BROKEN\n";
    for (const std::string& p : broken)
      out << "  guaranteed-but-missing: " << p << "\n";
  }
  return out.str();
}

bool change_satisfies_target(const Framework& f, const Change& c,
                             SemanticsKind k, const std::string& target) {
  Framework after = apply(f, c);
  ExtensionSet before_e = extensions(f, k);
  ExtensionSet after_e = extensions(after, k);
  ClassificationReport report = classify(f, before_e, after_e, c);
  if (target == "monotony")
    return report.monotony;
  if (target == "credulous_monotony")
    return report.credulous_monotony;
  if (target == "skeptical_monotony")
    return report.skeptical_monotony;
  if (target == "priority_to_recency")
    return report.priority_to_recency.value_or(false);
  return report.structural == structural_from_string(target);
}

std::vector<AddArgument> whatif_candidates(const Framework& f, SemanticsKind k,
                                           const WhatIfOptions& opts) {
  if (f.contains(opts.z))
    throw DomainError("what-if argument '" + opts.z.name() +
                      "' already exists");
  // Candidate incident pairs in canonical order: minimal interaction
  // sets come first in the result.
  std::vector<Attack> pairs;
  for (const ArgumentId& a : f.arguments()) {
    pairs.emplace_back(opts.z, a);
    pairs.emplace_back(a, opts.z);
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<AddArgument> hits;
  std::vector<std::size_t> combo;
  auto enumerate = [&](auto&& self, std::size_t start, std::size_t want)
      -> void {
    if (combo.size() == want) {
      AttackSet interactions;
      for (std::size_t i : combo)
        interactions.insert(pairs[i]);
      AddArgument candidate{opts.z, std::move(interactions)};
      if (change_satisfies_target(f, Change{candidate}, k, opts.target))
        hits.push_back(std::move(candidate));
      return;
    }
    for (std::size_t i = start; i + (want - combo.size()) <= pairs.size();
         ++i) {
      combo.push_back(i);
      self(self, i + 1, want);
      combo.pop_back();
    }
  };
  for (std::size_t size = 1;
       size <= opts.budget && size <= pairs.size(); ++size)
    enumerate(enumerate, 0, size);
  return hits;
}

std::string report_whatif(const Framework& f, SemanticsKind k,
                          const WhatIfOptions& opts) {
  std::vector<AddArgument> hits = whatif_candidates(f, k, opts);
  std::ostringstream out;
  out << "semantics: " << to_string(k) << "\n";
  out << "target: " << opts.target << "\n";
  out << "budget: " << opts.budget << "\n";
  out << "candidates:\n";
  for (const AddArgument& c : hits)
    out << "  " << format_change(Change{c}) << "\n";
  out << "count: " << hits.size() << "\n";
  return out.str();
}

VerifySummary run_verify(const VerifyOptions& opts) {
  VerifySummary summary;
  oracle::SplitMix64 seeds(opts.seed);
  const double probabilities[] = {0.1, 0.3, 0.6};
  for (std::size_t i = 0; i < opts.count; ++i) {
    oracle::GeneratorConfig cfg;
    cfg.argument_count = 1 + i % opts.max_arguments;
    cfg.attack_probability = probabilities[i % 3];
    cfg.allow_self_attacks = (i % 5 == 4);
    cfg.seed = seeds.next();
    Framework f = oracle::random_framework(cfg);
    Change c = oracle::random_change(f, oracle::ChangeKind::AddArgument,
                                     seeds.next());
    ++summary.instances;
    for (SemanticsKind k : {SemanticsKind::Grounded, SemanticsKind::Preferred,
                            SemanticsKind::Stable}) {
      auto violations = verify_propositions(f, c, k);
      summary.violations.insert(summary.violations.end(), violations.begin(),
                                violations.end());
    }
  }
  return summary;
}

std::string report_verify(const VerifySummary& summary,
                          const VerifyOptions& opts) {
  std::ostringstream out;
  out << "seed: " << opts.seed << "\n";
  out << "instances: " << summary.instances << "\n";
  out << "violations: " << summary.violations.size() << "\n";
  for (const Violation& v : summary.violations) {
    out << "violation: " << v.proposition_id << "\n";
    out << "  framework: " << format_arg_set(v.framework.arguments());
    out << " attacks={";
    bool first = true;
    for (const Attack& att : v.framework.attacks()) {
      if (!first)
        out << ",";
      out << att.first.name() << ">" << att.second.name();
      first = false;
    }
    out << "}\n";
    out << "  change: " << format_change(v.change) << "\n";
    out << "  expected: " << v.expected << "\n";
    out << "  observed: " << v.observed << "\n";
  }
  return out.str();
}

OracleCheckSummary run_oracle_check(const OracleCheckOptions& opts) {
  OracleCheckSummary summary;
  oracle::SplitMix64 seeds(opts.seed);
  const double probabilities[] = {0.1, 0.3, 0.6};
  for (std::size_t i = 0; i < opts.count; ++i) {
    oracle::GeneratorConfig cfg;
    cfg.argument_count = 1 + i % opts.max_arguments;
    cfg.attack_probability = probabilities[i % 3];
    cfg.allow_self_attacks = (i % 5 == 4);
    cfg.seed = seeds.next();
    Framework f = oracle::random_framework(cfg);
    ++summary.instances;
    for (SemanticsKind k : {SemanticsKind::Grounded, SemanticsKind::Preferred,
                            SemanticsKind::Stable}) {
      ExtensionSet engine = extensions(f, k);
      ExtensionSet expected = oracle::brute_force_extensions(f, k);
      if (engine.extensions != expected.extensions)
        summary.mismatches.push_back(
            "instance " + std::to_string(i) + " " + to_string(k) +
            ": engine=" + format_extension_set(engine) +
            " oracle=" + format_extension_set(expected));
    }
  }
  return summary;
}

std::string report_oracle_check(const OracleCheckSummary& summary,
                                const OracleCheckOptions& opts) {
  std::ostringstream out;
  out << "seed: " << opts.seed << "\n";
  out << "instances: " << summary.instances << "\n";
  out << "mismatches: " << summary.mismatches.size() << "\n";
  for (const std::string& m : summary.mismatches)
    out << "  " << m << "\n";
  return out.str();
}

}  // namespace argdyn

// Acceptance gate: one pass/fail line per criterion, nonzero exit on
// any failure. Every check recomputes its data from scratch with fixed
// seeds so a failure reproduces in isolation.

#include <algorithm>
#include <bit>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "argdyn/commands.hpp"
#include "helpers.hpp"

using namespace argdyn;
using namespace argdyn::test;

namespace {

int failures = 0;

void report(const char* name, bool ok) {
  std::printf("%s: %s\n", ok ? "PASS" : "FAIL", name);
  if (!ok)
    ++failures;
}

bool example_one_reproduction() {
  Framework f = fw(
      "arg(A).arg(B).arg(C).arg(D).arg(F)."
      "att(A,B).att(B,A).att(B,C).att(C,D).att(D,F).att(F,C).");
  std::vector<ArgSet> adm{S({}), S({"A"}), S({"B"}), S({"B", "D"})};
  return admissible_sets(f) == adm &&
         preferred(f) ==
             E(SemanticsKind::Preferred, {S({"A"}), S({"B", "D"})}) &&
         grounded(f) == E(SemanticsKind::Grounded, {S({})}) &&
         stable(f) == E(SemanticsKind::Stable, {S({"B", "D"})});
}

struct GoldenFixture {
  const char* apx;
  Change change;
  SemanticsKind semantics;
  ExtensionSet before, after;
  StructuralProperty label;
  bool monotony;
  std::optional<StructuralProperty> inverse_label;
  std::optional<bool> inverse_monotony;
};

bool golden_suite() {
  using P = StructuralProperty;
  auto G = SemanticsKind::Grounded;
  auto Pr = SemanticsKind::Preferred;
  std::vector<GoldenFixture> fixtures = {
      {"arg(A).arg(B).arg(C).att(A,B).att(B,C).att(C,A).",
       AddAttack{"A", "C"}, Pr, E(Pr, {S({})}), E(Pr, {S({"A"})}), P::Decisive,
       true, P::Destructive, false},
      {"arg(A).arg(B).arg(C).att(A,B).att(B,C).", AddAttack{"C", "A"}, G,
       E(G, {S({"A", "C"})}), E(G, {S({})}), P::Destructive, false,
       P::Decisive, true},
      {"arg(A).arg(B).arg(C).att(A,B).att(B,C).", AddAttack{"A", "C"}, G,
       E(G, {S({"A", "C"})}), E(G, {S({"A"})}), P::Altering, false,
       P::Expansive, true},
      {"arg(A).arg(B).arg(C).att(A,B).", AddAttack{"C", "B"}, G,
       E(G, {S({"A", "C"})}), E(G, {S({"A", "C"})}), P::Conservative, true,
       P::Conservative, true},
      {"arg(A).arg(B).arg(C).arg(D).att(A,B).att(B,A).att(B,C).att(D,C).",
       AddAttack{"C", "D"}, Pr, E(Pr, {S({"A", "D"}), S({"B", "D"})}),
       E(Pr, {S({"A", "D"}), S({"B", "D"}), S({"A", "C"})}), P::Questioning,
       true, P::Restrictive, false},
      {"arg(A).arg(B).arg(C).arg(D)."
       "att(A,B).att(B,A).att(B,C).att(D,C).att(C,D).",
       AddAttack{"A", "D"}, Pr,
       E(Pr, {S({"A", "D"}), S({"B", "D"}), S({"A", "C"})}),
       E(Pr, {S({"B", "D"}), S({"A", "C"})}), P::Restrictive, false,
       P::Questioning, true},
      {"arg(A).arg(B).arg(C).att(A,B).att(B,C).", RemoveAttack{"A", "B"}, G,
       E(G, {S({"A", "C"})}), E(G, {S({"A", "B"})}), P::Altering, false,
       std::nullopt, std::nullopt},
      {"arg(A).arg(B).arg(C).arg(D).att(A,B).att(B,C).att(C,A).",
       AddAttack{"D", "A"}, G, E(G, {S({"D"})}), E(G, {S({"B", "D"})}),
       P::Expansive, true, std::nullopt, std::nullopt},
  };
  for (const GoldenFixture& fx : fixtures) {
    Framework f = fw(fx.apx);
    Framework g = argdyn::apply(f, fx.change);
    ExtensionSet before = extensions(f, fx.semantics);
    ExtensionSet after = extensions(g, fx.semantics);
    if (before != fx.before || after != fx.after)
      return false;
    if (classify_structural(before, after) != fx.label)
      return false;
    if (check_monotony(before, after) != fx.monotony)
      return false;
    if (fx.inverse_label) {
      Change inv = inverse(fx.change, g);
      if (argdyn::apply(g, inv) != f)
        return false;
      if (classify_structural(after, before) != *fx.inverse_label)
        return false;
      if (check_monotony(after, before) != *fx.inverse_monotony)
        return false;
    }
  }
  return true;
}

bool oracle_equivalence() {
  OracleCheckOptions opts; // seed 1, 500 instances, |A| <= 12, p in {.1,.3,.6}
  OracleCheckSummary summary = run_oracle_check(opts);
  return summary.instances >= 500 && summary.mismatches.empty();
}

bool proposition_suite() {
  VerifyOptions opts; // seed 1, 10000 instances, |A| <= 8
  VerifySummary summary = run_verify(opts);
  return summary.instances >= 10000 && summary.violations.empty();
}

// Shared instance stream for the closed-form and exclusivity criteria.
template <typename Fn>
bool over_random_changes(std::uint64_t seed, int count, Fn&& check) {
  oracle::SplitMix64 seeds(seed);
  const double probs[] = {0.1, 0.3, 0.6};
  const oracle::ChangeKind kinds[] = {
      oracle::ChangeKind::AddAttack, oracle::ChangeKind::RemoveAttack,
      oracle::ChangeKind::AddArgument, oracle::ChangeKind::RemoveArgument};
  for (int i = 0; i < count; ++i) {
    oracle::GeneratorConfig cfg;
    cfg.argument_count = 1 + i % 8;
    cfg.attack_probability = probs[i % 3];
    cfg.allow_self_attacks = (i % 5 == 4);
    cfg.seed = seeds.next();
    Framework f = oracle::random_framework(cfg);
    std::optional<Change> c;
    try {
      c = oracle::random_change(f, kinds[i % 4], seeds.next());
    } catch (const DomainError&) {
      continue;
    }
    if (!check(f, *c))
      return false;
  }
  return true;
}

bool closed_form_check() {
  int defined = 0;
  bool ok = over_random_changes(11, 4000, [&](const Framework& f,
                                              const Change& c) {
    if (!added_argument(c))
      return true;
    auto closed = grounded_closed_forms(f, c);
    if (!closed)
      return true;
    ++defined;
    return *closed == grounded(argdyn::apply(f, c)).extensions.front();
  });
  return ok && defined > 25; // the hypotheses must actually fire
}

bool table_exclusivity() {
  return over_random_changes(12, 3000, [](const Framework& f,
                                          const Change& c) {
    Framework g = argdyn::apply(f, c);
    for (SemanticsKind k : {SemanticsKind::Grounded, SemanticsKind::Preferred,
                            SemanticsKind::Stable}) {
      ExtensionSet before = extensions(f, k);
      ExtensionSet after = extensions(g, k);
      auto hits = matching_definitions(before, after);
      if (hits.size() > 1)
        return false;
      StructuralProperty label = classify_structural(before, after);
      if (hits.size() == 1 && label != hits.front())
        return false;
      if (hits.empty() && label != StructuralProperty::Unclassified)
        return false;
      if (before.no_extension() && after.single_empty())
        return false;
      if (before.single_empty() && after.no_extension())
        return false;
    }
    return true;
  });
}

bool semantics_invariants() {
  oracle::SplitMix64 seeds(13);
  const double probs[] = {0.1, 0.3, 0.6};
  auto subset = [](const ArgSet& a, const ArgSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (int i = 0; i < 1500; ++i) {
    oracle::GeneratorConfig cfg;
    cfg.argument_count = 1 + i % 10;
    cfg.attack_probability = probs[i % 3];
    cfg.allow_self_attacks = (i % 5 == 4);
    cfg.seed = seeds.next();
    Framework f = oracle::random_framework(cfg);
    ExtensionSet gr = grounded(f), pr = preferred(f), st = stable(f);
    const ArgSet& ge = gr.extensions.front();

    // 1. Every admissible set is contained in a preferred extension.
    for (const ArgSet& s : admissible_sets(f)) {
      bool covered = false;
      for (const ArgSet& p : pr.extensions)
        covered = covered || subset(s, p);
      if (!covered)
        return false;
    }
    // 2. Stable extensions are preferred extensions.
    for (const ArgSet& s : st.extensions)
      if (std::count(pr.extensions.begin(), pr.extensions.end(), s) != 1)
        return false;
    // 3. Grounded is contained in every preferred extension.
    for (const ArgSet& p : pr.extensions)
      if (!subset(ge, p))
        return false;
    // 4. Unattacked arguments sit in the grounded extension, which sits
    //    in every stable extension.
    if (!subset(f.unattacked(), ge))
      return false;
    for (const ArgSet& s : st.extensions)
      if (!subset(ge, s))
        return false;
    // 5. Acyclic: preferred = stable = {grounded}.
    if (!f.has_cycle() &&
        (pr.extensions != std::vector<ArgSet>{ge} ||
         st.extensions != std::vector<ArgSet>{ge}))
      return false;
    // 6. A unique empty preferred extension needs an odd cycle.
    if (pr.single_empty() && !f.has_odd_cycle())
      return false;
    // 7. No stable extension needs an odd cycle.
    if (st.no_extension() && !f.has_odd_cycle())
      return false;
    // 8. No odd cycle: preferred and stable coincide.
    if (!f.has_odd_cycle() && pr.extensions != st.extensions)
      return false;
    // 9. No even cycle: a single preferred extension.
    if (!f.has_even_cycle() && pr.extensions.size() != 1)
      return false;
  }
  return true;
}

bool whatif_exhaustive() {
  // Every framework on <= 5 arguments from a seeded sample, budget <= 2,
  // against a mix of structural and status targets.
  oracle::SplitMix64 seeds(14);
  const double probs[] = {0.1, 0.3, 0.6};
  const char* targets[] = {"decisive", "conservative", "destructive",
                           "monotony", "priority_to_recency"};
  for (int i = 0; i < 40; ++i) {
    oracle::GeneratorConfig cfg;
    cfg.argument_count = 1 + i % 5;
    cfg.attack_probability = probs[i % 3];
    cfg.seed = seeds.next();
    Framework f = oracle::random_framework(cfg);
    std::vector<Attack> pairs;
    for (const ArgumentId& a : f.arguments()) {
      pairs.emplace_back(ArgumentId("z"), a);
      pairs.emplace_back(a, ArgumentId("z"));
    }
    for (SemanticsKind k :
         {SemanticsKind::Grounded, SemanticsKind::Preferred}) {
      const char* target = targets[i % 5];
      WhatIfOptions opts{ArgumentId("z"), target, 2};
      std::vector<AddArgument> hits = whatif_candidates(f, k, opts);
      // Independent enumeration of every interaction set within budget.
      for (std::size_t mask = 1; mask < (std::size_t{1} << pairs.size());
           ++mask) {
        if (std::popcount(mask) > 2)
          continue;
        AttackSet iz;
        for (std::size_t b = 0; b < pairs.size(); ++b)
          if (mask & (std::size_t{1} << b))
            iz.insert(pairs[b]);
        AddArgument cand{ArgumentId("z"), iz};
        Framework g = argdyn::apply(f, cand);
        ClassificationReport r =
            classify(f, extensions(f, k), extensions(g, k), Change{cand});
        bool satisfied;
        std::string t = target;
        if (t == "monotony")
          satisfied = r.monotony;
        else if (t == "priority_to_recency")
          satisfied = r.priority_to_recency.value_or(false);
        else
          satisfied = r.structural == structural_from_string(t);
        bool reported =
            std::find(hits.begin(), hits.end(), cand) != hits.end();
        if (satisfied != reported)
          return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  report("example-1 reproduction (admissible/preferred/grounded/stable)",
         example_one_reproduction());
  report("golden fixture suite (8 attack-change fixtures + inverses)",
         golden_suite());
  report("oracle equivalence (500 frameworks, |A|<=12, three semantics)",
         oracle_equivalence());
  report("proposition suite (10000 add-argument instances, |A|<=8)",
         proposition_suite());
  report("grounded closed forms match the fixpoint engine",
         closed_form_check());
  report("structural-label exclusivity and impossible cells",
         table_exclusivity());
  report("semantics invariant suite (nine invariants, 1500 frameworks)",
         semantics_invariants());
  report("whatif soundness and completeness (budget<=2, |A|<=5)",
         whatif_exhaustive());
  return failures == 0 ? 0 : 1;
}

#include "argdyn/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace argdyn {
namespace oracle {

namespace {

// All subsets of the framework's arguments, ordered by size then
// lexicographically over the sorted argument list.
std::vector<ArgSet> all_subsets(const Framework& f) {
  std::vector<ArgumentId> args(f.arguments().begin(), f.arguments().end());
  std::size_t n = args.size();
  std::vector<ArgSet> subsets;
  subsets.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    ArgSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i))
        s.insert(args[i]);
    subsets.push_back(std::move(s));
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const ArgSet& a, const ArgSet& b) {
                     if (a.size() != b.size())
                       return a.size() < b.size();
                     return a < b;
                   });
  return subsets;
}

bool conflict_free(const Framework& f, const ArgSet& s) {
  for (const ArgumentId& a : s)
    for (const ArgumentId& b : s)
      if (f.attacks().count({a, b}))
        return false;
  return true;
}

// Literal defense test: s attacks each argument which attacks a.
bool defends(const Framework& f, const ArgSet& s, const ArgumentId& a) {
  for (const Attack& att : f.attacks()) {
    if (att.second != a)
      continue;
    bool countered = false;
    for (const ArgumentId& x : s)
      if (f.attacks().count({x, att.first})) {
        countered = true;
        break;
      }
    if (!countered)
      return false;
  }
  return true;
}

bool admissible(const Framework& f, const ArgSet& s) {
  if (!conflict_free(f, s))
    return false;
  return std::all_of(s.begin(), s.end(),
                     [&](const ArgumentId& a) { return defends(f, s, a); });
}

}  // namespace

ExtensionSet brute_force_extensions(const Framework& f, SemanticsKind k) {
  if (f.size() > 20)
    throw DomainError("oracle refuses frameworks above 20 arguments (2^n enumeration)");

  if (k == SemanticsKind::Grounded) {
    // Repeated application of the defense test from the empty set.
    ArgSet current;
    for (;;) {
      ArgSet next;
      for (const ArgumentId& a : f.arguments())
        if (defends(f, current, a))
          next.insert(a);
      if (next == current)
        break;
      current = std::move(next);
    }
    return ExtensionSet{k, {current}};
  }

  std::vector<ArgSet> subsets = all_subsets(f);
  std::vector<ArgSet> result;

  if (k == SemanticsKind::Stable) {
    for (const ArgSet& s : subsets) {
      if (!conflict_free(f, s))
        continue;
      bool dominates = true;
      for (const ArgumentId& a : f.arguments()) {
        if (s.count(a))
          continue;
        if (!f.set_attacks(s, a)) {
          dominates = false;
          break;
        }
      }
      if (dominates)
        result.push_back(s);
    }
    return make_extension_set(k, std::move(result));
  }

  // Preferred: maximal admissible subsets.
  std::vector<ArgSet> adm;
  for (const ArgSet& s : subsets)
    if (admissible(f, s))
      adm.push_back(s);
  for (const ArgSet& s : adm) {
    bool maximal = true;
    for (const ArgSet& t : adm)
      if (t != s && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    if (maximal)
      result.push_back(s);
  }
  return make_extension_set(k, std::move(result));
}

Framework random_framework(const GeneratorConfig& cfg) {
  if (cfg.argument_count < 1)
    throw DomainError("argument_count must be positive");
  SplitMix64 rng(cfg.seed);
  ArgSet arguments;
  std::vector<ArgumentId> ordered;
  for (std::size_t i = 0; i < cfg.argument_count; ++i) {
    ArgumentId a("a" + std::to_string(i));
    arguments.insert(a);
    ordered.push_back(a);
  }
  AttackSet attacks;
  for (std::size_t i = 0; i < cfg.argument_count; ++i)
    for (std::size_t j = 0; j < cfg.argument_count; ++j) {
      if (i == j && !cfg.allow_self_attacks)
        continue;
      if (rng.next_unit() < cfg.attack_probability)
        attacks.emplace(ordered[i], ordered[j]);
    }
  return Framework(std::move(arguments), std::move(attacks));
}

Change random_change(const Framework& f, ChangeKind kind, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<ArgumentId> args(f.arguments().begin(), f.arguments().end());

  switch (kind) {
    case ChangeKind::AddAttack: {
      std::vector<Attack> candidates;
      for (const ArgumentId& a : args)
        for (const ArgumentId& b : args)
          if (!f.has_attack(a, b))
            candidates.emplace_back(a, b);
      if (candidates.empty())
        throw DomainError("no attack can be added: relation is complete");
      const Attack& pick = candidates[rng.below(candidates.size())];
      return AddAttack{pick.first, pick.second};
    }
    case ChangeKind::RemoveAttack: {
      if (f.attacks().empty())
        throw DomainError("no attack can be removed: relation is empty");
      std::vector<Attack> attacks(f.attacks().begin(), f.attacks().end());
      const Attack& pick = attacks[rng.below(attacks.size())];
      return RemoveAttack{pick.first, pick.second};
    }
    case ChangeKind::AddArgument: {
      std::string name = "z";
      for (int suffix = 0; f.contains(ArgumentId(name)); ++suffix)
        name = "z" + std::to_string(suffix);
      ArgumentId z(name);
      // 2n incident pair slots; sample a non-empty subset uniformly.
      std::size_t slots = 2 * args.size();
      if (slots >= 63)
        throw DomainError("framework too large for interaction sampling");
      std::uint64_t mask = 1 + rng.below((std::uint64_t{1} << slots) - 1);
      AttackSet interactions;
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (mask & (std::uint64_t{1} << (2 * i)))
          interactions.emplace(z, args[i]);
        if (mask & (std::uint64_t{1} << (2 * i + 1)))
          interactions.emplace(args[i], z);
      }
      return AddArgument{z, std::move(interactions)};
    }
    case ChangeKind::RemoveArgument: {
      if (f.size() < 2)
        throw DomainError("cannot remove the last argument");
      return record_removal(f, args[rng.below(args.size())]);
    }
  }
  throw DomainError("bad change kind");
}

}  // namespace oracle
}  // namespace argdyn

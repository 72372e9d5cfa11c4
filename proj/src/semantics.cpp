#include "argdyn/semantics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace argdyn {

std::string to_string(SemanticsKind k) {
  switch (k) {
    case SemanticsKind::Grounded: return "grounded";
    case SemanticsKind::Preferred: return "preferred";
    case SemanticsKind::Stable: return "stable";
  }
  throw DomainError("bad semantics kind");
}

SemanticsKind semantics_from_string(const std::string& s) {
  if (s == "grounded") return SemanticsKind::Grounded;
  if (s == "preferred") return SemanticsKind::Preferred;
  if (s == "stable") return SemanticsKind::Stable;
  throw DomainError("unknown semantics '" + s + "'");
}

ArgSet ExtensionSet::union_of() const {
  ArgSet u;
  for (const ArgSet& e : extensions)
    u.insert(e.begin(), e.end());
  return u;
}

ArgSet ExtensionSet::intersection_of() const {
  if (extensions.empty())
    return {};
  ArgSet inter = extensions.front();
  for (std::size_t i = 1; i < extensions.size() && !inter.empty(); ++i) {
    ArgSet next;
    std::set_intersection(inter.begin(), inter.end(), extensions[i].begin(),
                          extensions[i].end(),
                          std::inserter(next, next.begin()));
    inter = std::move(next);
  }
  return inter;
}

ExtensionSet make_extension_set(SemanticsKind k, std::vector<ArgSet> exts) {
  std::sort(exts.begin(), exts.end());
  exts.erase(std::unique(exts.begin(), exts.end()), exts.end());
  return ExtensionSet{k, std::move(exts)};
}

ArgSet characteristic(const Framework& f, const ArgSet& s) {
  for (const ArgumentId& x : s)
    (void)f.index_of(x);  // membership check
  ArgSet defended;
  for (const ArgumentId& a : f.arguments()) {
    bool ok = true;
    for (const ArgumentId& attacker : f.attackers(a)) {
      if (!f.set_attacks(s, attacker)) {
        ok = false;
        break;
      }
    }
    if (ok)
      defended.insert(a);
  }
  return defended;
}

ExtensionSet grounded(const Framework& f) {
  ArgSet current;
  for (std::size_t i = 0; i <= f.size(); ++i) {
    ArgSet next = characteristic(f, current);
    if (next == current)
      break;
    current = std::move(next);
  }
  return ExtensionSet{SemanticsKind::Grounded, {current}};
}

bool is_admissible(const Framework& f, const ArgSet& s) {
  if (!f.is_conflict_free(s))
    return false;
  for (const ArgumentId& a : s)
    for (const ArgumentId& attacker : f.attackers(a))
      if (!f.set_attacks(s, attacker))
        return false;
  return true;
}

namespace {

// Bitmask view of the attack relation for the enumeration engine.
// The canonical argument order of the framework doubles as bit order.
struct MaskEngine {
  const Framework& f;
  std::size_t n;
  std::vector<std::uint64_t> attackers_of;
  std::vector<std::uint64_t> targets_of;

  explicit MaskEngine(const Framework& fw) : f(fw), n(fw.size()) {
    if (n > 64)
      throw DomainError(
          "extension enumeration supports at most 64 arguments");
    attackers_of.assign(n, 0);
    targets_of.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j : f.out_edges()[i])
        targets_of[i] |= std::uint64_t{1} << j;
      for (std::size_t j : f.in_edges()[i])
        attackers_of[i] |= std::uint64_t{1} << j;
    }
  }

  std::uint64_t attacked_by(std::uint64_t s) const {
    std::uint64_t out = 0;
    for (std::uint64_t rest = s; rest;) {
      std::size_t i = std::countr_zero(rest);
      rest &= rest - 1;
      out |= targets_of[i];
    }
    return out;
  }

  bool admissible(std::uint64_t s) const {
    std::uint64_t counter = attacked_by(s);
    for (std::uint64_t rest = s; rest;) {
      std::size_t i = std::countr_zero(rest);
      rest &= rest - 1;
      if (attackers_of[i] & ~counter)
        return false;
    }
    return true;
  }

  // Enumerates all conflict-free sets by include/exclude recursion,
  // pruning any branch that would create an internal conflict.
  template <typename Visit>
  void each_conflict_free(Visit&& visit) const {
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t cur) -> void {
      if (i == n) {
        visit(cur);
        return;
      }
      self(self, i + 1, cur);
      std::uint64_t bit = std::uint64_t{1} << i;
      bool conflict = (targets_of[i] & (cur | bit)) != 0 ||
                      (attacked_by(cur) & bit) != 0;
      if (!conflict)
        self(self, i + 1, cur | bit);
    };
    rec(rec, 0, 0);
  }

  ArgSet to_set(std::uint64_t mask) const {
    ArgSet s;
    for (std::uint64_t rest = mask; rest;) {
      std::size_t i = std::countr_zero(rest);
      rest &= rest - 1;
      s.insert(f.argument_at(i));
    }
    return s;
  }
};

std::vector<std::uint64_t> admissible_masks(const MaskEngine& eng) {
  std::vector<std::uint64_t> result;
  eng.each_conflict_free([&](std::uint64_t s) {
    if (eng.admissible(s))
      result.push_back(s);
  });
  return result;
}

}  // namespace

std::vector<ArgSet> admissible_sets(const Framework& f) {
  MaskEngine eng(f);
  std::vector<ArgSet> out;
  for (std::uint64_t m : admissible_masks(eng))
    out.push_back(eng.to_set(m));
  std::sort(out.begin(), out.end());
  return out;
}

ExtensionSet preferred(const Framework& f) {
  MaskEngine eng(f);
  auto adm = admissible_masks(eng);
  std::vector<ArgSet> maximal;
  for (std::uint64_t s : adm) {
    bool is_max = true;
    for (std::uint64_t t : adm) {
      if (t != s && (s & ~t) == 0) {
        is_max = false;
        break;
      }
    }
    if (is_max)
      maximal.push_back(eng.to_set(s));
  }
  return make_extension_set(SemanticsKind::Preferred, std::move(maximal));
}

ExtensionSet stable(const Framework& f) {
  MaskEngine eng(f);
  std::uint64_t all = eng.n == 64 ? ~std::uint64_t{0}
                                  : (std::uint64_t{1} << eng.n) - 1;
  std::vector<ArgSet> result;
  eng.each_conflict_free([&](std::uint64_t s) {
    if ((s | eng.attacked_by(s)) == all)
      result.push_back(eng.to_set(s));
  });
  return make_extension_set(SemanticsKind::Stable, std::move(result));
}

ExtensionSet extensions(const Framework& f, SemanticsKind k) {
  switch (k) {
    case SemanticsKind::Grounded: return grounded(f);
    case SemanticsKind::Preferred: return preferred(f);
    case SemanticsKind::Stable: return stable(f);
  }
  throw DomainError("bad semantics kind");
}

ArgumentStatus status(const Framework& f, const ArgumentId& a, SemanticsKind k) {
  (void)f.index_of(a);
  ExtensionSet exts = extensions(f, k);
  if (exts.no_extension())
    return ArgumentStatus::Rejected;
  bool in_all = true;
  bool in_some = false;
  for (const ArgSet& e : exts.extensions) {
    if (e.count(a))
      in_some = true;
    else
      in_all = false;
  }
  if (in_all)
    return ArgumentStatus::SkepticallyAccepted;
  if (in_some)
    return ArgumentStatus::CredulouslyOnlyAccepted;
  return ArgumentStatus::Rejected;
}

}  // namespace argdyn

#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "argdyn/apx.hpp"
#include "argdyn/properties.hpp"

namespace argdyn::test {

// Fixture builder: allows several declarations on one line for
// compactness (the real grammar is one per line).
inline Framework fw(std::string_view apx) {
  std::string text;
  for (char c : apx) {
    text += c;
    if (c == '.')
      text += '\n';
  }
  return parse_framework(text);
}

inline ArgSet S(std::initializer_list<const char*> names) {
  ArgSet s;
  for (const char* n : names)
    s.insert(ArgumentId(n));
  return s;
}

inline ExtensionSet E(SemanticsKind k,
                      std::initializer_list<ArgSet> extensions) {
  return make_extension_set(k, std::vector<ArgSet>(extensions));
}

// The seven structural-property definitions transcribed independently
// of the classifier, for cross-checking labels and mutual exclusivity.
inline std::vector<StructuralProperty> matching_definitions(
    const ExtensionSet& before, const ExtensionSet& after) {
  const auto& e = before.extensions;
  const auto& ep = after.extensions;
  std::size_t n = e.size(), p = ep.size();
  std::vector<StructuralProperty> hits;

  bool decisive = (before.no_extension() || before.single_empty() || n >= 2) &&
                  p == 1 && !ep.front().empty();
  if (decisive)
    hits.push_back(StructuralProperty::Decisive);

  if (n >= 2 && p >= 2 && n > p)
    hits.push_back(StructuralProperty::Restrictive);

  if (p >= 2 && (before.no_extension() || (n >= 1 && p > n)))
    hits.push_back(StructuralProperty::Questioning);

  bool all_nonempty = n >= 1;
  for (const ArgSet& x : e)
    all_nonempty = all_nonempty && !x.empty();
  bool destructive =
      all_nonempty && (after.no_extension() || after.single_empty());
  if (destructive)
    hits.push_back(StructuralProperty::Destructive);

  // Transitions into or out of the "nothing accepted" states ({} / {{}})
  // are claimed by decisive/destructive; expansive and altering cover
  // the remaining same-count cells.
  if (n == p && n >= 1 && !decisive) {
    bool every_strict = true;
    for (const ArgSet& y : ep) {
      bool found = false;
      for (const ArgSet& x : e)
        found = found ||
                (x != y && std::includes(y.begin(), y.end(), x.begin(), x.end()));
      every_strict = every_strict && found;
    }
    if (every_strict && e != ep)
      hits.push_back(StructuralProperty::Expansive);
  }

  if (e == ep)
    hits.push_back(StructuralProperty::Conservative);

  if (n == p && !destructive) {
    bool orphan = false;
    for (const ArgSet& x : e) {
      bool in_some = false;
      for (const ArgSet& y : ep)
        in_some = in_some ||
                  std::includes(y.begin(), y.end(), x.begin(), x.end());
      orphan = orphan || !in_some;
    }
    if (orphan)
      hits.push_back(StructuralProperty::Altering);
  }
  return hits;
}

}  // namespace argdyn::test

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace argdyn {

/// Raised on any violated precondition of the attack-graph model
/// (unknown argument, dangling attack endpoint, inapplicable change, ...).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument is identified by its name: a non-empty token over
/// [a-zA-Z0-9_]. Names are case-sensitive; identity is name equality.
class ArgumentId {
public:
  explicit ArgumentId(std::string name);
  ArgumentId(const char* name) : ArgumentId(std::string(name)) {}

  const std::string& name() const { return name_; }

  friend auto operator<=>(const ArgumentId&, const ArgumentId&) = default;

private:
  std::string name_;
};

using ArgSet = std::set<ArgumentId>;
using Attack = std::pair<ArgumentId, ArgumentId>;
using AttackSet = std::set<Attack>;

/// Immutable attack graph: a finite non-empty set of arguments and a
/// binary attack relation over them. Self-attacks are allowed. All
/// member functions are const and safe to call concurrently.
class Framework {
public:
  Framework(ArgSet arguments, AttackSet attacks);

  const ArgSet& arguments() const { return argument_set_; }
  const AttackSet& attacks() const { return attack_set_; }
  std::size_t size() const { return names_.size(); }

  bool contains(const ArgumentId& a) const;
  bool has_attack(const ArgumentId& from, const ArgumentId& to) const;

  /// { x | (x, a) in R }
  ArgSet attackers(const ArgumentId& a) const;
  /// true iff some member of s attacks a.
  bool set_attacks(const ArgSet& s, const ArgumentId& a) const;
  /// true iff a attacks some member of s.
  bool arg_attacks_set(const ArgumentId& a, const ArgSet& s) const;
  /// true iff no two members of s (x = y included) attack each other.
  bool is_conflict_free(const ArgSet& s) const;

  /// Directed walk of odd length from a to b. Walks may repeat
  /// vertices; computed by parity reachability on the (node, parity)
  /// product graph. A direct attack is the length-1 case.
  bool indirectly_attacks(const ArgumentId& a, const ArgumentId& b) const;
  /// Directed walk of even, non-zero length from a to b.
  bool indirectly_defends(const ArgumentId& a, const ArgumentId& b) const;
  /// x both indirectly attacks and indirectly defends some argument.
  bool is_controversial(const ArgumentId& x) const;

  bool has_cycle() const;
  /// Odd directed simple cycle; a self-attack counts (length 1).
  /// Equivalent to the existence of an odd closed walk.
  bool has_odd_cycle() const;
  /// Even directed simple cycle. Unlike the odd case this cannot be
  /// reduced to closed-walk parity, so simple cycles are enumerated
  /// with early exit (exponential worst case, fine at desk scale).
  bool has_even_cycle() const;

  /// All directed simple cycles, each rotated so the smallest argument
  /// comes first. Exponential worst case; intended for small graphs.
  std::set<std::vector<ArgumentId>> simple_cycles() const;

  /// Arguments with no attacker.
  ArgSet unattacked() const;

  // Index view (arguments in sorted-name order) for the extension engine.
  std::size_t index_of(const ArgumentId& a) const;
  const ArgumentId& argument_at(std::size_t i) const { return names_[i]; }
  const std::vector<std::vector<std::size_t>>& out_edges() const { return out_; }
  const std::vector<std::vector<std::size_t>>& in_edges() const { return in_; }
  bool has_attack(std::size_t from, std::size_t to) const;

  friend bool operator==(const Framework& a, const Framework& b) {
    return a.argument_set_ == b.argument_set_ && a.attack_set_ == b.attack_set_;
  }

private:
  // (node, parity) reachability: bit p of result[v] set iff a walk of
  // length == p (mod 2), length >= 1, exists from `from` to v.
  std::vector<unsigned> parity_reach(std::size_t from) const;
  bool even_cycle_search(std::size_t start, std::size_t v, std::size_t depth,
                         std::vector<bool>& on_path) const;

  ArgSet argument_set_;
  AttackSet attack_set_;
  std::vector<ArgumentId> names_;              // sorted
  std::map<ArgumentId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::set<std::pair<std::size_t, std::size_t>> edge_set_;
};

}  // namespace argdyn

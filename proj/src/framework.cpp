#include "argdyn/framework.hpp"

#include <algorithm>
#include <deque>

namespace argdyn {

namespace {
bool valid_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}
}  // namespace

ArgumentId::ArgumentId(std::string name) : name_(std::move(name)) {
  if (name_.empty())
    throw DomainError("argument name must be non-empty");
  for (char c : name_)
    if (!valid_name_char(c))
      throw DomainError("invalid character in argument name '" + name_ + "'");
}

Framework::Framework(ArgSet arguments, AttackSet attacks)
    : argument_set_(std::move(arguments)), attack_set_(std::move(attacks)) {
  if (argument_set_.empty())
    throw DomainError("a framework needs at least one argument");
  names_.assign(argument_set_.begin(), argument_set_.end());
  for (std::size_t i = 0; i < names_.size(); ++i)
    index_.emplace(names_[i], i);
  out_.resize(names_.size());
  in_.resize(names_.size());
  for (const auto& [from, to] : attack_set_) {
    auto fi = index_.find(from);
    auto ti = index_.find(to);
    if (fi == index_.end())
      throw DomainError("attack endpoint '" + from.name() + "' not in framework");
    if (ti == index_.end())
      throw DomainError("attack endpoint '" + to.name() + "' not in framework");
    out_[fi->second].push_back(ti->second);
    in_[ti->second].push_back(fi->second);
    edge_set_.emplace(fi->second, ti->second);
  }
}

bool Framework::contains(const ArgumentId& a) const {
  return index_.count(a) != 0;
}

std::size_t Framework::index_of(const ArgumentId& a) const {
  auto it = index_.find(a);
  if (it == index_.end())
    throw DomainError("unknown argument '" + a.name() + "'");
  return it->second;
}

bool Framework::has_attack(const ArgumentId& from, const ArgumentId& to) const {
  return edge_set_.count({index_of(from), index_of(to)}) != 0;
}

bool Framework::has_attack(std::size_t from, std::size_t to) const {
  return edge_set_.count({from, to}) != 0;
}

ArgSet Framework::attackers(const ArgumentId& a) const {
  ArgSet result;
  for (std::size_t i : in_[index_of(a)])
    result.insert(names_[i]);
  return result;
}

bool Framework::set_attacks(const ArgSet& s, const ArgumentId& a) const {
  std::size_t target = index_of(a);
  for (const ArgumentId& x : s)
    if (edge_set_.count({index_of(x), target}))
      return true;
  return false;
}

bool Framework::arg_attacks_set(const ArgumentId& a, const ArgSet& s) const {
  std::size_t source = index_of(a);
  for (const ArgumentId& x : s)
    if (edge_set_.count({source, index_of(x)}))
      return true;
  return false;
}

bool Framework::is_conflict_free(const ArgSet& s) const {
  std::vector<std::size_t> members;
  members.reserve(s.size());
  for (const ArgumentId& x : s)
    members.push_back(index_of(x));
  for (std::size_t x : members)
    for (std::size_t y : members)
      if (edge_set_.count({x, y}))
        return false;
  return true;
}

std::vector<unsigned> Framework::parity_reach(std::size_t from) const {
  // BFS over (node, parity) states, seeded with the direct successors
  // of `from` at parity 1, so length 0 is never counted as reachable.
  std::vector<unsigned> reached(names_.size(), 0);
  std::deque<std::pair<std::size_t, unsigned>> queue;
  for (std::size_t v : out_[from]) {
    if (!(reached[v] & 2u)) {
      reached[v] |= 2u;  // bit 2: odd, bit 1: even
      queue.emplace_back(v, 1u);
    }
  }
  while (!queue.empty()) {
    auto [v, parity] = queue.front();
    queue.pop_front();
    unsigned next_bit = parity == 1u ? 1u : 2u;
    for (std::size_t w : out_[v]) {
      if (!(reached[w] & next_bit)) {
        reached[w] |= next_bit;
        queue.emplace_back(w, parity ^ 1u);
      }
    }
  }
  return reached;
}

bool Framework::indirectly_attacks(const ArgumentId& a, const ArgumentId& b) const {
  return (parity_reach(index_of(a))[index_of(b)] & 2u) != 0;
}

bool Framework::indirectly_defends(const ArgumentId& a, const ArgumentId& b) const {
  return (parity_reach(index_of(a))[index_of(b)] & 1u) != 0;
}

bool Framework::is_controversial(const ArgumentId& x) const {
  auto reach = parity_reach(index_of(x));
  for (unsigned bits : reach)
    if (bits == 3u)
      return true;
  return false;
}

bool Framework::has_cycle() const {
  // Iterative three-color DFS.
  enum { White, Gray, Black };
  std::vector<int> color(names_.size(), White);
  for (std::size_t root = 0; root < names_.size(); ++root) {
    if (color[root] != White)
      continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = Gray;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < out_[v].size()) {
        std::size_t w = out_[v][next++];
        if (color[w] == Gray)
          return true;
        if (color[w] == White) {
          color[w] = Gray;
          stack.emplace_back(w, 0);
        }
      } else {
        color[v] = Black;
        stack.pop_back();
      }
    }
  }
  return false;
}

bool Framework::has_odd_cycle() const {
  // An odd closed walk exists iff an odd simple cycle exists.
  for (std::size_t v = 0; v < names_.size(); ++v)
    if (parity_reach(v)[v] & 2u)
      return true;
  return false;
}

bool Framework::even_cycle_search(std::size_t start, std::size_t v,
                                  std::size_t depth,
                                  std::vector<bool>& on_path) const {
  for (std::size_t w : out_[v]) {
    if (w == start && depth % 2 == 0)
      return true;
    if (w > start && !on_path[w]) {
      on_path[w] = true;
      if (even_cycle_search(start, w, depth + 1, on_path))
        return true;
      on_path[w] = false;
    }
  }
  return false;
}

bool Framework::has_even_cycle() const {
  // Enumerate simple cycles whose minimal vertex is `start`, stopping
  // at the first one of even length.
  std::vector<bool> on_path(names_.size(), false);
  for (std::size_t start = 0; start < names_.size(); ++start) {
    on_path[start] = true;
    bool found = even_cycle_search(start, start, 1, on_path);
    on_path[start] = false;
    if (found)
      return true;
  }
  return false;
}

std::set<std::vector<ArgumentId>> Framework::simple_cycles() const {
  std::set<std::vector<ArgumentId>> cycles;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(names_.size(), false);

  auto dfs = [&](auto&& self, std::size_t start, std::size_t v) -> void {
    for (std::size_t w : out_[v]) {
      if (w == start) {
        std::vector<ArgumentId> cycle;
        cycle.reserve(path.size());
        for (std::size_t u : path)
          cycle.push_back(names_[u]);
        cycles.insert(std::move(cycle));
      } else if (w > start && !on_path[w]) {
        on_path[w] = true;
        path.push_back(w);
        self(self, start, w);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };

  for (std::size_t start = 0; start < names_.size(); ++start) {
    on_path[start] = true;
    path.assign(1, start);
    dfs(dfs, start, start);
    on_path[start] = false;
  }
  return cycles;
}

ArgSet Framework::unattacked() const {
  ArgSet result;
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (in_[i].empty())
      result.insert(names_[i]);
  return result;
}

}  // namespace argdyn

#include "argdyn/apx.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace argdyn {

namespace {

bool name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// Matches head "(" NAME {"," NAME} ")." with optional whitespace around
// every token; returns the names or nullopt when the line does not even
// start with `head`.
struct LineScanner {
  std::string_view rest;
  int line;

  void skip_ws() {
    while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t'))
      rest.remove_prefix(1);
  }
  void expect(char c) {
    skip_ws();
    if (rest.empty() || rest.front() != c)
      throw ParseError(std::string("malformed line (expected '") + c + "')",
                       line);
    rest.remove_prefix(1);
  }
  std::string name() {
    skip_ws();
    std::size_t len = 0;
    while (len < rest.size() && name_char(rest[len]))
      ++len;
    if (len == 0)
      throw ParseError("malformed line (expected a name)", line);
    std::string out(rest.substr(0, len));
    rest.remove_prefix(len);
    return out;
  }
  void end() {
    skip_ws();
    if (!rest.empty())
      throw ParseError("malformed line (trailing input)", line);
  }
};

}  // namespace

Framework parse_framework(std::string_view text) {
  struct PendingAttack {
    std::string from, to;
    int line;
  };
  ArgSet arguments;
  std::vector<PendingAttack> pending;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos
                                           : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    std::string_view line = strip(raw);
    if (!line.empty()) {
      std::size_t comment = line.find('%');
      if (comment != std::string_view::npos)
        line = strip(line.substr(0, comment));
    }
    if (line.empty())
      continue;

    LineScanner sc{line, line_no};
    if (line.starts_with("arg")) {
      sc.rest.remove_prefix(3);
      sc.expect('(');
      std::string name = sc.name();
      sc.expect(')');
      sc.expect('.');
      sc.end();
      ArgumentId id(name);
      if (arguments.count(id))
        throw ParseError("duplicate argument '" + name + "'", line_no);
      arguments.insert(std::move(id));
    } else if (line.starts_with("att")) {
      sc.rest.remove_prefix(3);
      sc.expect('(');
      std::string from = sc.name();
      sc.expect(',');
      std::string to = sc.name();
      sc.expect(')');
      sc.expect('.');
      sc.end();
      pending.push_back({std::move(from), std::move(to), line_no});
    } else {
      throw ParseError("malformed line", line_no);
    }
  }

  AttackSet attacks;
  for (const PendingAttack& att : pending) {
    ArgumentId from(att.from), to(att.to);
    if (!arguments.count(from))
      throw ParseError("undeclared argument '" + att.from + "'", att.line);
    if (!arguments.count(to))
      throw ParseError("undeclared argument '" + att.to + "'", att.line);
    attacks.emplace(std::move(from), std::move(to));
  }
  if (arguments.empty())
    throw ParseError("a framework needs at least one argument", 0);
  return Framework(std::move(arguments), std::move(attacks));
}

std::string serialize_framework(const Framework& f) {
  std::ostringstream out;
  for (const ArgumentId& a : f.arguments())
    out << "arg(" << a.name() << ").\n";
  for (const Attack& att : f.attacks())
    out << "att(" << att.first.name() << "," << att.second.name() << ").\n";
  return out.str();
}

namespace {

std::pair<std::string, std::string> split_edge(std::string_view item) {
  std::size_t pos = item.find('>');
  if (pos == std::string_view::npos)
    throw ParseError("malformed change item '" + std::string(item) +
                         "' (expected x>y)",
                     0);
  return {std::string(item.substr(0, pos)), std::string(item.substr(pos + 1))};
}

}  // namespace

Change parse_change(std::string_view spec) {
  auto bad = [&](const std::string& why) {
    return ParseError("malformed change '" + std::string(spec) + "': " + why, 0);
  };
  std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw bad("missing ':'");
  std::string_view kind = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);

  if (kind == "add-att" || kind == "del-att") {
    auto [from, to] = split_edge(rest);
    if (kind == "add-att")
      return AddAttack{ArgumentId(from), ArgumentId(to)};
    return RemoveAttack{ArgumentId(from), ArgumentId(to)};
  }
  if (kind == "del-arg")
    return RemoveArgument{ArgumentId(std::string(rest)), std::nullopt};
  if (kind == "add-arg") {
    std::size_t second = rest.find(':');
    if (second == std::string_view::npos)
      throw bad("add-arg needs z:SPEC");
    ArgumentId z{std::string(rest.substr(0, second))};
    std::string_view items = rest.substr(second + 1);
    AttackSet interactions;
    while (!items.empty()) {
      std::size_t comma = items.find(',');
      std::string_view item = items.substr(0, comma);
      auto [from, to] = split_edge(item);
      interactions.emplace(ArgumentId(from), ArgumentId(to));
      if (comma == std::string_view::npos)
        break;
      items.remove_prefix(comma + 1);
    }
    if (interactions.empty())
      throw bad("interaction list is empty");
    return AddArgument{std::move(z), std::move(interactions)};
  }
  throw bad("unknown change kind '" + std::string(kind) + "'");
}

std::string format_change(const Change& c) {
  if (const auto* add = std::get_if<AddAttack>(&c))
    return "add-att:" + add->source.name() + ">" + add->target.name();
  if (const auto* rem = std::get_if<RemoveAttack>(&c))
    return "del-att:" + rem->source.name() + ">" + rem->target.name();
  if (const auto* rem = std::get_if<RemoveArgument>(&c))
    return "del-arg:" + rem->z.name();
  const auto& add = std::get<AddArgument>(c);
  std::string out = "add-arg:" + add.z.name() + ":";
  bool first = true;
  for (const Attack& att : add.interactions) {
    if (!first)
      out += ",";
    out += att.first.name() + ">" + att.second.name();
    first = false;
  }
  return out;
}

std::string format_arg_set(const ArgSet& s) {
  std::string out = "[";
  bool first = true;
  for (const ArgumentId& a : s) {
    if (!first)
      out += ",";
    out += a.name();
    first = false;
  }
  return out + "]";
}

std::string format_extension_set(const ExtensionSet& e) {
  std::string out = "[";
  bool first = true;
  for (const ArgSet& x : e.extensions) {
    if (!first)
      out += ",";
    out += format_arg_set(x);
    first = false;
  }
  return out + "]";
}

}  // namespace argdyn

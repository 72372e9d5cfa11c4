#pragma once

#include <string>
#include <string_view>

#include "argdyn/change.hpp"
#include "argdyn/semantics.hpp"

namespace argdyn {

/// Parse failure with a 1-based input line number (0 when the error is
/// not tied to a line, e.g. malformed change syntax).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, int line)
      : std::runtime_error(line > 0 ? message + " at line " + std::to_string(line)
                                    : message),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// APX-style grammar:
///   line    := arg-decl | att-decl | comment | blank
///   arg-decl:= "arg(" NAME ")."
///   att-decl:= "att(" NAME "," NAME ")."
///   NAME    := [a-zA-Z0-9_]+
///   comment := "%" to end of line
/// Whitespace around tokens is ignored; attack endpoints must be
/// declared somewhere in the file (forward references allowed).
Framework parse_framework(std::string_view text);

/// Canonical serialization: arg lines sorted by name, then att lines in
/// sorted pair order. parse(serialize(f)) == f.
std::string serialize_framework(const Framework& f);

/// Change syntax:
///   add-att:x>y | del-att:x>y | del-arg:z | add-arg:z:SPEC
/// where SPEC is a comma-separated list of "z>x" / "x>z" items.
Change parse_change(std::string_view spec);

std::string format_change(const Change& c);

/// Renders extensions as e.g. [[a],[b,d]]: members sorted by name,
/// extensions sorted lexicographically. [] means "no extension";
/// [[]] one empty extension.
std::string format_extension_set(const ExtensionSet& e);
std::string format_arg_set(const ArgSet& s);

}  // namespace argdyn

// S-expression reader shared by proof files and diagram specs.
#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace llk {

struct SrcPos {
    int line = 1;
    int col = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, SrcPos p)
        : std::runtime_error(std::to_string(p.line) + ":" + std::to_string(p.col) + ": " + msg),
          pos(p) {}
    SrcPos pos;
};

struct Sexpr {
    enum class Kind { Atom, List };
    Kind kind = Kind::Atom;
    std::string atom;
    std::vector<Sexpr> items;
    SrcPos pos;

    bool is_atom() const { return kind == Kind::Atom; }
    bool is_list() const { return kind == Kind::List; }
    bool is_atom(const std::string& s) const { return is_atom() && atom == s; }
    // Head symbol of a list, or "" when the list is empty or starts with a list.
    const std::string& head() const;
    std::string str() const;
};

// Parses every top-level form. Comments run from ';' to end of line.
std::vector<Sexpr> parse_sexprs(const std::string& text);
// Exactly one top-level form.
Sexpr parse_sexpr(const std::string& text);

// Collapses whitespace and strips comments so two renderings of the same
// forms compare equal.
std::string normalize_whitespace(const std::string& text);

}  // namespace llk

#pragma once

#include "rewardtest/term.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rewardtest {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
    int line;
    int column;
};

struct ParseOptions {
    /** Leave unbound upper-case identifiers as variables instead of failing (axiom schemas). */
    bool allow_free_vars = false;
};

/**
 * Grammar, loosest to tightest:
 *   choice  := par ('+' par)*
 *   par     := post ('|' post)*
 *   post    := prefix ('\' '{' names '}' | '[' new/old, ... ']')*
 *   prefix  := action ('[' rational ']')? ('.' prefix)? | atom
 *   atom    := '0' | 'Omega' | Var | 'delta' '(' choice ')' | 'rec' Var '{' Var '=' choice (';' ...)* '}' | '(' choice ')'
 * Actions are lower-case identifiers, 'name for co-names, tau, omega. Variables start upper-case.
 * "--" starts a comment.
 */
Term parse(const std::string& text, const ParseOptions& opts = {});

/**
 * A definition file: one `name := term` per line. An upper-case name defined earlier may be used
 * as a constant in later terms. A file holding a single bare term is accepted as well.
 */
std::vector<std::pair<std::string, Term>> parse_definitions(const std::string& text);

/** The last definition of a file, or the bare term. */
Term parse_process_text(const std::string& text);

}  // namespace rewardtest

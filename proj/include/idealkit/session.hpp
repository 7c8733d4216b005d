/*
 * session.hpp
 * -----------
 * The input DSL: ring and ideal declarations.
 *
 *   ring R = QQ[x,y,z]/(x^2+y^5+z^5) dim 2
 *   ideal I = (x, y^3, y^2*z, y*z^2, z^3) in R
 *
 * Exponents use "^", multiplication between variables is an explicit
 * "*", whitespace is insignificant.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "idealkit/ring.hpp"

namespace idealkit {

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line(line),
        column(column) {}
};

struct IdealDecl {
  std::string ring_name;
  std::vector<Polynomial> gens;
};

struct SessionFile {
  std::map<std::string, RingPresentation> rings;
  std::map<std::string, IdealDecl> ideals;
  std::vector<std::string> ring_order;   // declaration order
  std::vector<std::string> ideal_order;

  const RingPresentation& ring(const std::string& name) const;
  const IdealDecl& ideal(const std::string& name) const;
};

SessionFile parse_session(const std::string& text);

std::string pretty_print(const SessionFile& s);

// Standalone polynomial parser over a fixed variable set.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars,
                            const Field& field);

}  // namespace idealkit

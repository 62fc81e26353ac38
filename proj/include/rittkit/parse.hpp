#ifndef RITTKIT_PARSE_HPP
#define RITTKIT_PARSE_HPP

#include <string>

#include "rittkit/poly.hpp"

namespace rittkit {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

/// Grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := atom ('^' uint)?; atom := rational | 'x' | 's' | '(' expr ')'.
/// 's' denotes sqrt(d) of the supplied field.
Poly parse_poly(const std::string& text, const FieldConfig& cfg = FieldConfig());

/// print(parse(text)) == print and parse(print(f)) == f, exactly.
std::string print_poly(const Poly& f);

}  // namespace rittkit

#endif

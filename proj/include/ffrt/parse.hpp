#ifndef FFRT_PARSE_HPP
#define FFRT_PARSE_HPP

#include <string>
#include <vector>

#include "ffrt/poly.hpp"

namespace ffrt {

/// Parse a polynomial expression: identifiers x1..xn (or x, y, z when the
/// ring has at most three variables), integer literals reduced mod p, the
/// operators + - * ^ and parentheses. Whitespace is ignored.
Poly parse_poly(const std::string& text, const RingPtr& ring);

/// Parse a comma-separated list of monomials, e.g. "x1^2, x1*x2".
std::vector<Monomial> parse_monomial_list(const std::string& text, const RingPtr& ring);

} // namespace ffrt

#endif

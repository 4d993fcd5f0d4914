#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "galorb/moebius.hpp"
#include "galorb/poly.hpp"

namespace galorb {

// Textual forms:
//   poly  := term (('+'|'-') term)*
//   term  := coeff ('*'? 'X' ('^' uint)?)? | 'X' ('^' uint)?
//   coeff := rat | '(' rat (('+'|'-') rat? '*'? 's')? ')' ('/' uint)?
//   rat   := '-'? uint ('/' uint)?
// where s stands for sqrt D. Whitespace is ignored. The parser also accepts a
// leading sign on the first term and a bare 's' inside parentheses.

std::string format_rational(const Rational& x);
std::string format_quadrat(const QuadRat& x);
std::string format_poly(const Poly& f);
std::string format_poly(const IntPoly& f);
std::string format_matrix(const Mat2& m);

// `line` is only used for error positions.
QuadRat parse_quadrat(std::string_view text, long d, int line = 1);
Poly parse_poly(std::string_view text, long d, int line = 1);
Mat2 parse_matrix(std::string_view text, long d, int line = 1);

struct FixtureLine {
  int line = 0;
  Poly poly;
};

// One polynomial per non-blank line; '#' starts a comment.
std::vector<FixtureLine> parse_fixture(std::string_view text, long d);
std::vector<FixtureLine> read_fixture_file(const std::string& path, long d);

}  // namespace galorb

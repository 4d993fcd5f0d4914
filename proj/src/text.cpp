#include "galorb/text.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "galorb/errors.hpp"

namespace galorb {

std::string format_rational(const Rational& x) { return x.get_str(); }

std::string format_quadrat(const QuadRat& x) {
  if (x.is_rational()) return format_rational(x.u());
  std::string s = "(" + format_rational(x.u());
  s += sgn(x.v()) < 0 ? "-" : "+";
  s += format_rational(abs(x.v())) + "*s)";
  return s;
}

namespace {

std::string monomial_text(int k) {
  if (k == 0) return "";
  if (k == 1) return "X";
  return "X^" + std::to_string(k);
}

std::string term_text(const QuadRat& c, int k) {
  if (k == 0) return format_quadrat(c);
  if (c.is_rational()) {
    if (c.u() == 1) return monomial_text(k);
    if (c.u() == -1) return "-" + monomial_text(k);
  }
  return format_quadrat(c) + "*" + monomial_text(k);
}

class Parser {
 public:
  Parser(std::string_view text, long d, int line) : text_(text), d_(d), line_(line) {}

  Poly poly() {
    Poly acc(d_);
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = get() == '-';
    for (;;) {
      Poly t = term();
      acc += negate ? -t : t;
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      get();
      negate = op == '-';
    }
    return acc;
  }

  QuadRat signed_coeff() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = get() == '-';
    QuadRat c = coeff();
    return negate ? -c : c;
  }

  void expect(char ch) {
    skip_ws();
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    get();
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, static_cast<int>(pos_) + 1);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Integer uint_token() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an unsigned integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Rational unsigned_rat() {
    Integer num = uint_token();
    skip_ws();
    if (peek() == '/') {
      get();
      Integer den = uint_token();
      if (den == 0) fail("zero denominator");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  bool starts_number() {
    skip_ws();
    return std::isdigit(static_cast<unsigned char>(peek())) != 0;
  }

  QuadRat sqrt_d() {
    if (d_ == 1) fail("'s' used but the field is Q (D = 1)");
    return QuadRat::sqrt_d(d_);
  }

  // Contents of '( ... )': a signed sum of rationals and rational multiples of s.
  QuadRat paren_body() {
    QuadRat acc = QuadRat(0).with_d(d_);
    bool first = true;
    for (;;) {
      skip_ws();
      bool negate = false;
      if (peek() == '+' || peek() == '-') {
        negate = get() == '-';
      } else if (!first) {
        break;
      }
      QuadRat part;
      skip_ws();
      if (peek() == 's') {
        get();
        part = sqrt_d();
      } else {
        Rational r = unsigned_rat();
        skip_ws();
        if (peek() == '*' || peek() == 's') {
          if (peek() == '*') get();
          skip_ws();
          if (peek() != 's') fail("expected 's'");
          get();
          part = QuadRat(r) * sqrt_d();
        } else {
          part = QuadRat(r).with_d(d_);
        }
      }
      acc += negate ? -part : part;
      first = false;
    }
    return acc;
  }

  QuadRat coeff() {
    skip_ws();
    if (peek() == '(') {
      get();
      QuadRat c = paren_body();
      expect(')');
      skip_ws();
      if (peek() == '/') {
        get();
        Integer den = uint_token();
        if (den == 0) fail("zero denominator");
        c /= QuadRat(Rational(den));
      }
      return c;
    }
    if (!starts_number()) fail("expected a coefficient");
    return QuadRat(unsigned_rat()).with_d(d_);
  }

  int exponent() {
    skip_ws();
    if (peek() != '^') return 1;
    get();
    Integer e = uint_token();
    if (e > 100000) fail("exponent too large");
    return static_cast<int>(e.get_si());
  }

  Poly term() {
    skip_ws();
    if (peek() == 'X' || peek() == 'x') {
      get();
      return Poly::monomial(QuadRat(1), exponent(), d_);
    }
    QuadRat c = coeff();
    skip_ws();
    size_t save = pos_;
    if (peek() == '*') {
      get();
      skip_ws();
      if (peek() != 'X' && peek() != 'x') {
        pos_ = save;
        fail("expected 'X' after '*'");
      }
    }
    if (peek() == 'X' || peek() == 'x') {
      get();
      return Poly::monomial(c, exponent(), d_);
    }
    return Poly::constant(c, d_);
  }

  std::string_view text_;
  size_t pos_ = 0;
  long d_;
  int line_;
};

}  // namespace

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const QuadRat& c = f.coeffs()[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    std::string t = term_text(c, k);
    if (!out.empty() && t.front() != '-') out += "+";
    out += t;
  }
  return out;
}

std::string format_poly(const IntPoly& f) { return format_poly(to_poly(f)); }

std::string format_matrix(const Mat2& m) {
  return format_quadrat(m.a) + "," + format_quadrat(m.b) + ";" + format_quadrat(m.c) + "," +
         format_quadrat(m.d);
}

QuadRat parse_quadrat(std::string_view text, long d, int line) {
  Parser p(text, d, line);
  QuadRat c = p.signed_coeff();
  if (!p.at_end()) p.fail("trailing characters");
  return c;
}

Poly parse_poly(std::string_view text, long d, int line) {
  Parser p(text, d, line);
  if (p.at_end()) p.fail("empty polynomial");
  return p.poly();
}

Mat2 parse_matrix(std::string_view text, long d, int line) {
  Parser p(text, d, line);
  Mat2 m;
  m.a = p.signed_coeff();
  p.expect(',');
  m.b = p.signed_coeff();
  p.expect(';');
  m.c = p.signed_coeff();
  p.expect(',');
  m.d = p.signed_coeff();
  if (!p.at_end()) p.fail("trailing characters after matrix");
  return m;
}

std::vector<FixtureLine> parse_fixture(std::string_view text, long d) {
  std::vector<FixtureLine> out;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
    if (!blank) out.push_back({line_no, parse_poly(line, d, line_no)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<FixtureLine> read_fixture_file(const std::string& path, long d) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fixture(ss.str(), d);
}

}  // namespace galorb

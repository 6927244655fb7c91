#include "dml/shell/parse.hpp"

#include "dml/error.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace dml {
namespace {

// Cursor over one line of input; positions are reported 1-based.
class Cursor {
 public:
  Cursor(std::string_view s, std::size_t line, std::size_t col0 = 0) : s_(s), line_(line), col0_(col0) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, line_, col0_ + pos_ + 1); }

  bool digit_next() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::size_t integer() {
    if (!digit_next()) fail("expected an integer");
    std::size_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      if (v > 1000000) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  std::string digits() {
    if (!digit_next()) fail("expected digits");
    std::string out;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) out += s_[pos_++];
    return out;
  }

  /// Unsigned rational literal p or p/q.
  Rational rational() {
    std::string text = digits();
    if (accept('/')) text += "/" + digits();
    try {
      return parse_rational(text);
    } catch (const std::exception&) {
      fail("invalid rational literal '" + text + "'");
    }
  }

  std::size_t pos() const { return pos_; }
  std::size_t column() const { return col0_ + pos_ + 1; }
  std::size_t line() const { return line_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col0_;
};

struct Line {
  std::string_view text;
  std::size_t number;
};

// Non-blank lines with comments removed.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view l = text.substr(start, end - start);
    if (auto h = l.find('#'); h != std::string_view::npos) l = l.substr(0, h);
    if (l.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back({l, number});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

// 1-based basis index after a prefix letter, range-checked.
std::size_t basis_index(Cursor& c, std::size_t n, const char* what) {
  const std::size_t col = c.column();
  const std::size_t i = c.integer();
  if (i == 0 || i > n)
    throw IndexOutOfRange(std::string(what) + std::to_string(i) + " at line " + std::to_string(c.line()) +
                          ", column " + std::to_string(col) + " is outside 1.." + std::to_string(n));
  return i - 1;
}

// Optional sign; `first` allows an absent sign.
std::optional<int> term_sign(Cursor& c, bool first) {
  if (c.accept('+')) return 1;
  if (c.accept('-')) return -1;
  if (first) return 1;
  return std::nullopt;
}

// [coef[*]]e<k> terms up to the end of the line.
Vec vector_terms(Cursor& c, std::size_t n) {
  Vec out(n, Rational(0));
  if (c.peek() == '0') {
    c.accept('0');
    if (!c.at_end()) c.fail("unexpected input after 0");
    return out;
  }
  bool first = true;
  while (!c.at_end()) {
    const auto sign = term_sign(c, first);
    if (!sign) c.fail("expected '+' or '-'");
    Rational coef = 1;
    if (c.digit_next()) {
      coef = c.rational();
      c.accept('*');
    }
    c.expect('e', "'e'");
    const std::size_t k = basis_index(c, n, "e");
    out[k] += *sign * coef;
    first = false;
  }
  if (first) c.fail("expected a term");
  return out;
}

// Monomial [coef][*][t[^[-]int]]; returns nullopt when no monomial starts here.
std::optional<TPoly> monomial(Cursor& c) {
  Rational coef = 1;
  bool any = false;
  if (c.digit_next()) {
    coef = c.rational();
    any = true;
    if (c.peek() == '*') {
      // Either "2*t" or "2*e3"; the caller handles the latter.
      c.accept('*');
      if (c.peek() != 't') return TPoly(coef);
    }
  }
  int exp = 0;
  if (c.accept('t')) {
    exp = 1;
    any = true;
    if (c.accept('^')) {
      const bool neg = c.accept('-');
      exp = static_cast<int>(c.integer());
      if (neg) exp = -exp;
    }
  }
  if (!any) return std::nullopt;
  return TPoly::monomial(coef, exp);
}

TPoly polynomial_factor(Cursor& c) {
  if (c.accept('(')) {
    TPoly sum;
    bool first = true;
    while (!c.accept(')')) {
      const auto sign = term_sign(c, first);
      if (!sign) c.fail("expected '+', '-' or ')'");
      const auto m = monomial(c);
      if (!m) c.fail("expected a monomial in t");
      sum += *sign > 0 ? *m : -*m;
      first = false;
      if (c.at_end()) c.fail("unterminated parenthesis");
    }
    if (first) c.fail("empty parenthesis");
    c.accept('*');
    return sum;
  }
  const auto m = monomial(c);
  if (!m) return TPoly(1);
  c.accept('*');
  return *m;
}

}  // namespace

Algebra parse_algebra(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw SyntaxError("empty input; expected 'dim N'", 1, 1);
  Cursor head(lines[0].text, lines[0].number);
  for (char ch : std::string_view("dim")) head.expect(ch, "'dim N' header");
  const std::size_t n = head.integer();
  if (!head.at_end()) head.fail("unexpected input after dimension");

  // Oriented values keyed by (min, max).
  std::map<std::pair<std::size_t, std::size_t>, Vec> seen;
  std::vector<ProductTerm> terms;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    Cursor c(lines[li].text, lines[li].number);
    c.expect('e', "'e'");
    const std::size_t i = basis_index(c, n, "e");
    c.expect('e', "'e'");
    const std::size_t j = basis_index(c, n, "e");
    c.expect('=', "'='");
    Vec v = vector_terms(c, n);
    if (i == j) {
      if (is_zero(v)) continue;
      throw SkewConflict("line " + std::to_string(lines[li].number) + ": e" + std::to_string(i + 1) + " e" +
                         std::to_string(i + 1) + " must be zero");
    }
    if (i > j)
      for (auto& x : v) x = -x;
    const auto key = std::minmax(i, j);
    if (auto it = seen.find(key); it != seen.end()) {
      if (it->second != v)
        throw SkewConflict("line " + std::to_string(lines[li].number) + ": e" + std::to_string(i + 1) + " e" +
                           std::to_string(j + 1) + " contradicts an earlier product");
      continue;
    }
    seen.emplace(key, v);
    for (std::size_t k = 0; k < n; ++k)
      if (!is_zero(v[k])) terms.push_back({key.first, key.second, k, v[k]});
  }
  return Algebra::from_products(n, terms);
}

std::string emit_algebra(const Algebra& a) {
  std::ostringstream os;
  os << "dim " << a.dim() << "\n";
  const auto prods = a.nonzero_products();
  for (std::size_t p = 0; p < prods.size();) {
    const std::size_t i = prods[p].i;
    const std::size_t j = prods[p].j;
    os << "e" << i + 1 << " e" << j + 1 << " =";
    bool first = true;
    for (; p < prods.size() && prods[p].i == i && prods[p].j == j; ++p) {
      const Rational& c = prods[p].coef;
      os << (sgn(c) < 0 ? (first ? " -" : " - ") : (first ? " " : " + "));
      if (abs(c) != 1) os << Rational(abs(c)).get_str() << "*";
      os << "e" << prods[p].k + 1;
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

SkewForm parse_cocycle(std::string_view text, std::size_t n) {
  Cursor c(text, 1);
  SkewForm f(n);
  if (c.at_end()) c.fail("empty cocycle expression");
  if (c.peek() == '0') {
    c.accept('0');
    if (!c.at_end()) c.fail("unexpected input after 0");
    return f;
  }
  bool first = true;
  while (!c.at_end()) {
    const auto sign = term_sign(c, first);
    if (!sign) c.fail("expected '+' or '-'");
    Rational coef = 1;
    if (c.digit_next()) {
      coef = c.rational();
      c.accept('*');
    }
    c.expect('[', "'['");
    if (!c.accept('d') && !c.accept('D')) c.fail("expected 'd'");
    const std::size_t col = c.column();
    std::size_t i = 0;
    std::size_t j = 0;
    const std::string d1 = c.digits();
    if (c.accept(',')) {
      i = std::stoul(d1);
      j = std::stoul(c.digits());
    } else {
      if (d1.size() != 2) throw SyntaxError("write [d<i>,<j>] when an index has several digits", 1, col);
      i = static_cast<std::size_t>(d1[0] - '0');
      j = static_cast<std::size_t>(d1[1] - '0');
    }
    c.expect(']', "']'");
    if (i == 0 || j == 0 || i > n || j > n)
      throw IndexOutOfRange("Delta index at column " + std::to_string(col) + " is outside 1.." + std::to_string(n));
    if (i == j) throw DiagonalDelta("[d" + std::to_string(i) + std::to_string(j) + "] is not a skew form");
    f.add(i - 1, j - 1, *sign * coef);
    first = false;
  }
  return f;
}

ParametricBasis parse_parametric_basis(std::string_view text, std::size_t n) {
  MatrixT rows = MatrixT::identity(n);
  std::vector<bool> given(n, false);
  for (const auto& line : content_lines(text)) {
    Cursor c(line.text, line.number);
    c.expect('E', "'E'");
    const std::size_t i = basis_index(c, n, "E");
    if (given[i]) c.fail("E" + std::to_string(i + 1) + " given twice");
    given[i] = true;
    c.expect('=', "'='");
    for (std::size_t j = 0; j < n; ++j) rows(i, j) = RatFunc(0);
    bool first = true;
    while (!c.at_end()) {
      const auto sign = term_sign(c, first);
      if (!sign) c.fail("expected '+' or '-'");
      TPoly p = polynomial_factor(c);
      c.expect('e', "'e'");
      const std::size_t j = basis_index(c, n, "e");
      if (*sign < 0) p = -p;
      rows(i, j) += RatFunc(p);
      first = false;
    }
    if (first) c.fail("expected a term");
  }
  return ParametricBasis(std::move(rows));
}

std::string emit_parametric_basis(const ParametricBasis& b) {
  std::ostringstream os;
  const std::size_t n = b.dim();
  for (std::size_t i = 0; i < n; ++i) {
    os << "E" << i + 1 << " =";
    bool first = true;
    for (std::size_t j = 0; j < n; ++j) {
      const RatFunc& f = b.rows()(i, j);
      if (f.is_zero()) continue;
      if (!f.is_polynomial()) throw Error("emit_parametric_basis: entry is not a Laurent polynomial");
      os << (first ? " " : " + ") << "(" << f.num().to_string() << ")*e" << j + 1;
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

MatrixQ parse_matrix(std::string_view text, std::size_t n) {
  MatrixQ m;
  for (const auto& line : content_lines(text)) {
    Cursor c(line.text, line.number);
    Vec row;
    while (!c.at_end()) {
      const int s = c.accept('-') ? -1 : 1;
      row.push_back(s * c.rational());
    }
    if (m.rows() > 0 && row.size() != m.cols())
      throw SyntaxError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(m.cols()),
                        line.number, 1);
    m.append_row(row);
  }
  if (m.rows() != m.cols() || (n != 0 && m.rows() != n))
    throw DimensionMismatch("matrix must be square" + (n ? " of size " + std::to_string(n) : std::string()));
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace dml

#include "exform/form_dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace exform {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Wedge, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int column = 0;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  Lexer(std::string_view text, int line, int column_offset)
      : text_(text), line_(line), offset_(column_offset) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const int col = column();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", col});
        return out;
      }
      const char c = text_[pos_];
      if (is_digit(c) || (c == '.' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]))) {
        out.push_back({Tok::Number, number(), col});
      } else if (is_ident_start(c)) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        out.push_back({Tok::Ident, std::string(text_.substr(start, pos_ - start)), col});
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\\') {
        pos_ += 2;
        out.push_back({Tok::Wedge, "/\\", col});
      } else if (text_.substr(pos_, 3) == "\xE2\x88\xA7") {
        pos_ += 3;
        out.push_back({Tok::Wedge, "/\\", col});
      } else {
        Tok kind;
        switch (c) {
          case '+': kind = Tok::Plus; break;
          case '-': kind = Tok::Minus; break;
          case '*': kind = Tok::Star; break;
          case '^': kind = Tok::Caret; break;
          case '(': kind = Tok::LParen; break;
          case ')': kind = Tok::RParen; break;
          case '/': throw ParseError("division is only allowed inside numeric literals", line_, col);
          default: throw ParseError(std::string("unexpected character '") + c + "'", line_, col);
        }
        ++pos_;
        out.push_back({kind, std::string(1, c), col});
      }
    }
  }

 private:
  int column() const { return offset_ + static_cast<int>(pos_) + 1; }

  std::string number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    } else if (pos_ + 1 < text_.size() && text_[pos_] == '/' && is_digit(text_[pos_ + 1])) {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int offset_;
};

class Parser {
 public:
  Parser(const std::vector<std::string>& coords, std::vector<Token> tokens, int line)
      : coords_(coords), tokens_(std::move(tokens)), line_(line) {}

  DiffForm parse_all() {
    DiffForm out = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek());
    return out;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, line_, at.column);
  }
  int n() const { return static_cast<int>(coords_.size()); }

  DiffForm add(const DiffForm& a, const DiffForm& b, bool subtract, const Token& op) const {
    if (a.degree() != b.degree()) {
      if (a.is_zero()) return subtract ? -b : b;
      if (b.is_zero()) return a;
      fail("mixed degree: cannot add a " + std::to_string(a.degree()) + "-form and a " + std::to_string(b.degree()) +
               "-form",
           op);
    }
    return subtract ? a - b : a + b;
  }

  DiffForm expr() {
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = take().kind == Tok::Minus;
    DiffForm acc = term();
    if (negate) acc = -acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = take();
      DiffForm rhs = term();
      acc = add(acc, rhs, op.kind == Tok::Minus, op);
    }
    return acc;
  }

  DiffForm term() {
    DiffForm acc = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Wedge) {
      const Token& op = take();
      DiffForm rhs = factor();
      if (op.kind == Tok::Star && acc.degree() > 0 && rhs.degree() > 0) {
        fail("'*' cannot multiply two forms of positive degree; use /\\", op);
      }
      if (acc.degree() + rhs.degree() > n()) fail("wedge product exceeds the number of coordinates", op);
      acc = wedge_d(acc, rhs);
    }
    return acc;
  }

  DiffForm factor() {
    const Token& tok = take();
    switch (tok.kind) {
      case Tok::Number: {
        Rational value;
        try {
          value = parse_rational(tok.text);
        } catch (const std::invalid_argument& e) {
          fail(e.what(), tok);
        }
        return DiffForm::function(coords_, ScalarExpr::constant(n(), value));
      }
      case Tok::LParen: {
        const Nesting guard(*this, tok);
        DiffForm inner = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'", peek());
        take();
        return inner;
      }
      case Tok::Ident: return identifier(tok);
      case Tok::End: fail("unexpected end of input", tok);
      default: fail("unexpected '" + tok.text + "'", tok);
    }
  }

  DiffForm identifier(const Token& tok) {
    const auto it = std::find(coords_.begin(), coords_.end(), tok.text);
    if (it != coords_.end()) {
      const int index = static_cast<int>(it - coords_.begin());
      int power = 1;
      if (peek().kind == Tok::Caret) {
        take();
        bool negative = false;
        if (peek().kind == Tok::Minus) {
          take();
          negative = true;
        }
        const Token& e = take();
        if (e.kind != Tok::Number || !std::all_of(e.text.begin(), e.text.end(), is_digit)) {
          fail("exponent must be an integer", e);
        }
        try {
          power = std::stoi(e.text);
        } catch (const std::exception&) {
          fail("exponent out of range", e);
        }
        if (power > kMaxExponent) fail("exponent out of range", e);
        if (negative) power = -power;
      }
      return DiffForm::function(coords_, ScalarExpr::power(n(), index, power));
    }
    if (tok.text == "exp" && peek().kind == Tok::LParen) {
      const Token& open = take();
      const Nesting guard(*this, open);
      DiffForm inner = expr();
      if (peek().kind != Tok::RParen) fail("expected ')'", peek());
      take();
      std::optional<Poly> poly;
      if (inner.degree() == 0) poly = inner.form().coefficient(0).as_poly();
      if (!poly) fail("exp() argument must be a polynomial in the coordinates", open);
      if (poly->nvars() != n()) poly = Poly(n());
      return DiffForm::function(coords_, ScalarExpr::exp(*poly));
    }
    if (tok.text.size() > 1 && tok.text[0] == 'd') {
      const std::string name = tok.text.substr(1);
      const auto d = std::find(coords_.begin(), coords_.end(), name);
      if (d == coords_.end()) fail("undeclared coordinate '" + name + "'", tok);
      if (peek().kind == Tok::Caret) fail("powers apply to coordinates, not differentials", peek());
      return DiffForm::differential(coords_, static_cast<int>(d - coords_.begin()));
    }
    fail("undeclared coordinate '" + tok.text + "'", tok);
  }

  struct Nesting {
    Nesting(Parser& p, const Token& at) : parser(p) {
      if (++parser.depth_ > kMaxNesting) parser.fail("parentheses nested too deeply", at);
    }
    ~Nesting() { --parser.depth_; }
    Parser& parser;
  };

  static constexpr int kMaxNesting = 256;
  static constexpr int kMaxExponent = 1000;

  const std::vector<std::string>& coords_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  int line_;
};

DiffForm parse_at(const std::vector<std::string>& coords, std::string_view body, int line, int column_offset) {
  Lexer lexer(body, line, column_offset);
  Parser parser(coords, lexer.run(), line);
  return parser.parse_all();
}

std::string rational_abs(const Rational& c) { return to_string(Rational(abs(c))); }

std::vector<std::string> monomial_factors(const Exponents& e, const std::vector<std::string>& coords) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    out.push_back(e[i] == 1 ? coords[i] : coords[i] + "^" + std::to_string(e[i]));
  }
  return out;
}

// |c| * factors, omitting a unit coefficient.
std::string product(const Rational& c, const std::vector<std::string>& factors) {
  std::string out;
  if (factors.empty()) return rational_abs(c);
  if (abs(c) != 1) out = rational_abs(c) + "*";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += factors[i];
  }
  return out;
}

void append_signed(std::string& out, bool first, int sign, const std::string& body) {
  if (first) {
    out += sign < 0 ? "-" + body : body;
  } else {
    out += sign < 0 ? " - " : " + ";
    out += body;
  }
}

std::string scalar_term(const ScalarExpr::Key& key, const Rational& c, const std::vector<std::string>& coords) {
  auto factors = monomial_factors(key.monomial, coords);
  if (!key.exponent.is_zero()) factors.push_back("exp(" + print_poly(key.exponent, coords) + ")");
  return product(c, factors);
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool valid_identifier(const std::string& s) {
  return !s.empty() && is_ident_start(s[0]) && std::all_of(s.begin(), s.end(), is_ident_char);
}

}  // namespace

DiffForm parse_form(const FormSource& src) {
  DiffForm out = parse_at(src.coords, src.body, 1, 0);
  if (out.is_zero() && src.zero_degree && *src.zero_degree != out.degree()) {
    return DiffForm(src.coords, *src.zero_degree);
  }
  return out;
}

ScalarExpr parse_scalar(const std::vector<std::string>& coords, std::string_view text) {
  DiffForm f = parse_at(coords, text, 1, 0);
  if (f.degree() != 0) throw ParseError("expected a function, got a " + std::to_string(f.degree()) + "-form", 1, 1);
  ScalarExpr s = f.form().coefficient(0);
  return s.is_zero() ? ScalarExpr(static_cast<int>(coords.size())) : s;
}

std::string print_poly(const Poly& p, const std::vector<std::string>& coords) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    append_signed(out, first, sgn(c), product(c, monomial_factors(e, coords)));
    first = false;
  }
  return out;
}

std::string print_scalar(const ScalarExpr& s, const std::vector<std::string>& coords) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : s.terms()) {
    append_signed(out, first, sgn(c), scalar_term(key, c, coords));
    first = false;
  }
  return out;
}

std::string print_form(const DiffForm& omega) {
  if (omega.is_zero()) return "0";
  const auto& coords = omega.coords();
  if (omega.degree() == 0) return print_scalar(omega.form().coefficient(0), coords);
  std::string out;
  bool first = true;
  for (const auto& [mask, coeff] : omega.form().terms()) {
    std::string wedge_text;
    for (int index : MultiIndex(mask).indices()) {
      if (!wedge_text.empty()) wedge_text += "/\\";
      wedge_text += "d" + coords[index - 1];
    }
    int sign = 1;
    std::string body;
    if (coeff.terms().size() == 1) {
      const auto& [key, c] = *coeff.terms().begin();
      sign = sgn(c);
      std::string scalar = scalar_term(key, c, coords);
      body = scalar == "1" ? wedge_text : scalar + "*" + wedge_text;
    } else {
      body = "(" + print_scalar(coeff, coords) + ")*" + wedge_text;
    }
    append_signed(out, first, sign, body);
    first = false;
  }
  return out;
}

std::vector<std::string> parse_coords(std::string_view list) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string name = trim(list.substr(start, comma - start));
    if (!valid_identifier(name)) throw ParseError("invalid coordinate name '" + name + "'", 1, static_cast<int>(start) + 1);
    if (name == "exp") throw ParseError("'exp' is reserved", 1, static_cast<int>(start) + 1);
    if (!seen.insert(name).second) throw ParseError("duplicate coordinate '" + name + "'", 1, static_cast<int>(start) + 1);
    out.push_back(name);
    start = comma + 1;
  }
  if (static_cast<int>(out.size()) > kMaxDim) throw ParseError("too many coordinates", 1, 1);
  return out;
}

const DiffForm* FormFile::find(const std::string& name) const {
  for (const auto& [key, form] : forms) {
    if (key == name) return &form;
  }
  return nullptr;
}

FormFile parse_form_file(std::string_view text) {
  FormFile file;
  bool have_coords = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    if (!have_coords) {
      const std::string prefix = "coords:";
      if (stripped.rfind(prefix, 0) != 0) throw ParseError("expected 'coords: <names>' header", line_no, 1);
      try {
        file.coords = parse_coords(std::string_view(stripped).substr(prefix.size()));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), line_no, static_cast<int>(prefix.size()) + e.column());
      }
      have_coords = true;
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected '<name> = <expression>'", line_no, 1);
    const std::string name = trim(line.substr(0, eq));
    if (!valid_identifier(name)) throw ParseError("invalid form name '" + name + "'", line_no, 1);
    if (file.find(name)) throw ParseError("duplicate form name '" + name + "'", line_no, 1);
    DiffForm form = parse_at(file.coords, line.substr(eq + 1), line_no, static_cast<int>(eq) + 1);
    file.forms.emplace_back(name, std::move(form));
    if (end == text.size()) break;
  }
  if (!have_coords) throw ParseError("missing 'coords:' header", line_no == 0 ? 1 : line_no, 1);
  return file;
}

std::string print_form_file(const FormFile& file) {
  std::ostringstream out;
  out << "coords: ";
  for (std::size_t i = 0; i < file.coords.size(); ++i) out << (i ? "," : "") << file.coords[i];
  out << "\n";
  for (const auto& [name, form] : file.forms) out << name << " = " << print_form(form) << "\n";
  return out.str();
}

}  // namespace exform

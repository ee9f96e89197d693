#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exform/diff_forms.hpp"

namespace exform {

/// Grammar (whitespace insensitive):
///   form     := ['+'|'-'] term (('+'|'-') term)*
///   term     := factor (('*' | '/\') factor)*
///   factor   := NUMBER | IDENT ['^' ['-'] INT] | 'd' IDENT | 'exp' '(' form ')' | '(' form ')'
/// NUMBER is an integer, a decimal, or p/q. '*' multiplies by a function,
/// '/\' (or U+2227) is the exterior product. exp() takes a polynomial.
struct FormSource {
  std::vector<std::string> coords;
  std::string body;
  /// Degree given to a zero result (the printer writes every zero form as "0").
  std::optional<int> zero_degree;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

DiffForm parse_form(const FormSource& src);

/// Parses a degree-0 expression and returns its coefficient.
ScalarExpr parse_scalar(const std::vector<std::string>& coords, std::string_view text);

/// Canonical text: multi-indices in lexicographic order, coefficient terms in
/// canonical order; "0" for any zero form.
std::string print_form(const DiffForm& omega);
std::string print_scalar(const ScalarExpr& s, const std::vector<std::string>& coords);
std::string print_poly(const Poly& p, const std::vector<std::string>& coords);

/// Splits "x1, x2,y1" into names; validates identifiers and uniqueness.
std::vector<std::string> parse_coords(std::string_view list);

/// A .form file: a "coords: a,b,..." header followed by "name = expr" lines.
/// Blank lines and lines starting with '#' are ignored.
struct FormFile {
  std::vector<std::string> coords;
  std::vector<std::pair<std::string, DiffForm>> forms;

  const DiffForm* find(const std::string& name) const;
};

FormFile parse_form_file(std::string_view text);
std::string print_form_file(const FormFile& file);

}  // namespace exform

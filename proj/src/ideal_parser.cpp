#include "lefschetz/ideal_parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  auto parse() -> IdealExpr {
    IdealExpr expr;
    keyword("vars");
    expect(':');
    expr.variables.push_back(identifier());
    while (accept(','))
      expr.variables.push_back(identifier());
    for (std::size_t i = 0; i < expr.variables.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (expr.variables[i] == expr.variables[j])
          fail("variable '" + expr.variables[i] + "' declared twice");
    expect(';');
    keyword("gens");
    expect(':');
    vars_ = &expr.variables;
    expr.generators.push_back(term());
    while (accept(','))
      expr.generators.push_back(term());
    accept(';');
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return expr;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError(ErrorCode::SyntaxError, pos_, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  auto accept(char c) -> bool {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  void keyword(std::string_view word) {
    skip_space();
    const std::size_t start = pos_;
    if (identifier_or_empty() != word) {
      pos_ = start;
      fail("expected '" + std::string(word) + "'");
    }
  }

  auto identifier_or_empty() -> std::string {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  auto identifier() -> std::string {
    std::string id = identifier_or_empty();
    if (id.empty())
      fail("expected an identifier");
    return id;
  }

  auto resolve(const std::string &name, std::size_t at) const -> std::size_t {
    const auto &vars = *vars_;
    if (auto it = std::find(vars.begin(), vars.end(), name); it != vars.end())
      return static_cast<std::size_t>(it - vars.begin());
    if (vars.size() == 3) {
      static const std::string kShort[3] = {"x", "y", "z"};
      static const std::string kIndexed[3] = {"x1", "x2", "x3"};
      for (std::size_t i = 0; i < 3; ++i)
        if (name == kShort[i] || name == kIndexed[i])
          return i;
    }
    throw ParseError(ErrorCode::UndeclaredVariable, at,
                     "variable '" + name + "' is not declared");
  }

  auto natural() -> unsigned {
    skip_space();
    const std::size_t start = pos_;
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (value > 1'000'000) {
        pos_ = start;
        fail("exponent too large");
      }
      ++pos_;
    }
    if (pos_ == start)
      fail("expected an exponent");
    if (value == 0) {
      pos_ = start;
      fail("exponent must be at least 1");
    }
    return static_cast<unsigned>(value);
  }

  auto term() -> Monomial {
    std::vector<unsigned> exps(vars_->size(), 0);
    do {
      skip_space();
      const std::size_t at = pos_;
      const std::size_t var = resolve(identifier(), at);
      const unsigned e = accept('^') ? natural() : 1;
      exps[var] += e;
    } while (accept('*'));
    return Monomial(std::move(exps));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const std::vector<std::string> *vars_ = nullptr;
};

} // namespace

auto IdealExpr::to_ideal() const -> MonomialIdeal {
  return {variables.size(), generators};
}

auto IdealExpr::to_string() const -> std::string {
  std::string out = "vars: ";
  for (std::size_t i = 0; i < variables.size(); ++i)
    out += (i ? ", " : "") + variables[i];
  out += "; gens: ";
  for (std::size_t i = 0; i < generators.size(); ++i)
    out += (i ? ", " : "") + generators[i].to_string(variables);
  return out;
}

auto parse_ideal(std::string_view text) -> IdealExpr { return Parser(text).parse(); }

} // namespace lefschetz

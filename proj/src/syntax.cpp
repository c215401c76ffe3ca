#include "smx/syntax.hpp"

#include <cctype>
#include <optional>
#include <utility>

#include "smx/errors.hpp"

namespace smx {

namespace {

enum class Tok {
  lbrace, rbrace, lbracket, rbracket, langle, rangle, lparen, rparen,
  comma, semicolon, equals, arrow, iff, ident, number, end
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      if (pos_ >= text_.size()) break;
      out.push_back(next());
    }
    out.push_back({Tok::end, "", text_.size()});
    return out;
  }

 private:
  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {  // comment to end of line
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  Token next() {
    const std::size_t start = pos_;
    char c = text_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      return Token{k, text_.substr(start, 1), start};
    };
    switch (c) {
      case '{': return single(Tok::lbrace);
      case '}': return single(Tok::rbrace);
      case '[': return single(Tok::lbracket);
      case ']': return single(Tok::rbracket);
      case '(': return single(Tok::lparen);
      case ')': return single(Tok::rparen);
      case ',': return single(Tok::comma);
      case ';': return single(Tok::semicolon);
      case '=': return single(Tok::equals);
      case '>': return single(Tok::rangle);
      case '<':
        if (text_.compare(pos_, 3, "<->") == 0) {
          pos_ += 3;
          return {Tok::iff, "<->", start};
        }
        return single(Tok::langle);
      case '-':
        if (text_.compare(pos_, 2, "->") == 0) {
          pos_ += 2;
          return {Tok::arrow, "->", start};
        }
        throw ParseError("stray '-'", start);
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[end]))) {
        ++end;
      }
      Token t{Tok::number, text_.substr(pos_, end - pos_), start};
      pos_ = end;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) ||
              text_[end] == '_')) {
        ++end;
      }
      Token t{Tok::ident, text_.substr(pos_, end - pos_), start};
      pos_ = end;
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

bool is_keyword(const std::string& s) {
  return s == "in" || s == "sub" || s == "and" || s == "or" || s == "not" ||
         s == "forall" || s == "exists" || s == "true" || s == "false";
}

std::optional<AppOp> app_op_from_name(const std::string& s) {
  if (s == "pair") return AppOp::pair;
  if (s == "union") return AppOp::union_family;
  if (s == "pow") return AppOp::power;
  if (s == "matset") return AppOp::matset;
  if (s == "cart") return AppOp::cart;
  if (s == "funspace") return AppOp::funspace;
  if (s == "succ") return AppOp::succ;
  return std::nullopt;
}

// Numerals build one node per unit, so an absurd literal would exhaust
// memory long before meaning anything; refuse early.
constexpr std::size_t kMaxNumeral = 100'000;

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  TermPtr term_only() {
    TermPtr t = term();
    expect(Tok::end, "end of input");
    return t;
  }

  FormulaPtr formula_only() {
    FormulaPtr f = formula();
    expect(Tok::end, "end of input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& advance() { return toks_[i_++]; }

  bool at(Tok k) const { return peek().kind == k; }

  bool at_ident(const char* word) const {
    return peek().kind == Tok::ident && peek().text == word;
  }

  const Token& expect(Tok k, const char* what) {
    if (!at(k)) {
      throw ParseError(std::string("expected ") + what, peek().pos);
    }
    return advance();
  }

  bool eat_ident(const char* word) {
    if (at_ident(word)) {
      advance();
      return true;
    }
    return false;
  }

  template <typename N>
  static TermPtr make_term(N&& n) {
    return std::make_shared<Term>(Term{Term::Node(std::forward<N>(n))});
  }

  template <typename N>
  static FormulaPtr make_formula(N&& n) {
    return std::make_shared<Formula>(
        Formula{Formula::Node(std::forward<N>(n))});
  }

  std::size_t parse_count(const Token& t) {
    std::size_t v = 0;
    for (char c : t.text) {
      v = v * 10 + static_cast<std::size_t>(c - '0');
      if (v > kMaxNumeral) {
        throw ParseError("numeral too large (max " +
                             std::to_string(kMaxNumeral) + ")",
                         t.pos);
      }
    }
    return v;
  }

  // --- terms ---

  TermPtr term() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::lbrace: return set_lit();
      case Tok::lbracket: return matrix_lit();
      case Tok::langle: return tuple_lit();
      case Tok::number: {
        advance();
        return make_term(Term::Numeral{parse_count(t)});
      }
      case Tok::ident: break;
      default:
        throw ParseError("expected a term", t.pos);
    }
    if (is_keyword(t.text)) {
      throw ParseError("keyword '" + t.text + "' cannot start a term", t.pos);
    }
    advance();
    // Only the closed operation names apply to arguments; any other
    // identifier is a variable, and a following '(' belongs to the
    // surrounding formula (e.g. a quantifier body).
    if (at(Tok::lparen) && app_op_from_name(t.text)) return app(t);
    return make_term(Term::Var{t.text});
  }

  TermPtr set_lit() {
    advance();  // {
    std::vector<TermPtr> items;
    if (!at(Tok::rbrace)) {
      items.push_back(term());
      while (at(Tok::comma)) {
        advance();
        items.push_back(term());
      }
    }
    expect(Tok::rbrace, "'}'");
    if (items.empty()) return make_term(Term::Empty{});
    return make_term(Term::SetLit{std::move(items)});
  }

  TermPtr matrix_lit() {
    advance();  // [
    if (at(Tok::rbracket)) {
      throw ParseError("matrix literal needs at least one entry", peek().pos);
    }
    std::vector<TermPtr> entries;
    std::size_t cols = 0, rows = 0, row_len = 0;
    while (true) {
      entries.push_back(term());
      ++row_len;
      if (at(Tok::semicolon) || at(Tok::rbracket)) {
        if (rows == 0) {
          cols = row_len;
        } else if (row_len != cols) {
          throw ParseError("matrix rows must have equal length", peek().pos);
        }
        ++rows;
        row_len = 0;
        if (at(Tok::rbracket)) {
          advance();
          break;
        }
        advance();  // ;
      }
    }
    return make_term(Term::MatrixLit{rows, cols, std::move(entries)});
  }

  TermPtr tuple_lit() {
    advance();  // <
    std::vector<TermPtr> items;
    items.push_back(term());
    while (at(Tok::comma)) {
      advance();
      items.push_back(term());
    }
    expect(Tok::rangle, "'>'");
    return make_term(Term::Tuple{std::move(items)});
  }

  TermPtr app(const Token& name) {
    auto op = app_op_from_name(name.text);
    advance();  // (
    Term::App a;
    a.op = *op;
    if (*op == AppOp::matset) {
      const Token& m = expect(Tok::number, "row count");
      expect(Tok::comma, "','");
      const Token& n = expect(Tok::number, "column count");
      expect(Tok::comma, "','");
      a.rows = parse_count(m);
      a.cols = parse_count(n);
      if (a.rows == 0 || a.cols == 0) {
        throw ParseError("matset dimensions must be positive", m.pos);
      }
      a.args.push_back(term());
    } else {
      a.args.push_back(term());
      while (at(Tok::comma)) {
        advance();
        a.args.push_back(term());
      }
      const std::size_t want =
          (*op == AppOp::pair || *op == AppOp::cart || *op == AppOp::funspace)
              ? 2
              : 1;
      if (a.args.size() != want) {
        throw ParseError("'" + name.text + "' expects " +
                             std::to_string(want) + " argument" +
                             (want == 1 ? "" : "s"),
                         name.pos);
      }
    }
    expect(Tok::rparen, "')'");
    return make_term(std::move(a));
  }

  // --- formulas ---

  FormulaPtr formula() { return iff(); }

  FormulaPtr iff() {
    FormulaPtr lhs = implies();
    while (at(Tok::iff)) {
      advance();
      FormulaPtr rhs = implies();
      lhs = make_formula(Formula::Iff{std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  FormulaPtr implies() {
    FormulaPtr lhs = disjunction();
    if (at(Tok::arrow)) {
      advance();
      FormulaPtr rhs = implies();  // right associative
      return make_formula(Formula::Implies{std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr lhs = conjunction();
    while (at_ident("or")) {
      advance();
      FormulaPtr rhs = conjunction();
      lhs = make_formula(Formula::Or{std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  FormulaPtr conjunction() {
    FormulaPtr lhs = unary();
    while (at_ident("and")) {
      advance();
      FormulaPtr rhs = unary();
      lhs = make_formula(Formula::And{std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  FormulaPtr unary() {
    if (eat_ident("not")) {
      return make_formula(Formula::Not{unary()});
    }
    if (at_ident("forall") || at_ident("exists")) return quantifier();
    return atom();
  }

  FormulaPtr quantifier() {
    const bool universal = peek().text == "forall";
    advance();
    const Token& v = expect(Tok::ident, "variable name");
    if (is_keyword(v.text)) {
      throw ParseError("keyword '" + v.text + "' cannot name a variable",
                       v.pos);
    }
    if (eat_ident("in")) {
      TermPtr domain = term();
      expect(Tok::lparen, "'('");
      FormulaPtr body = formula();
      expect(Tok::rparen, "')'");
      if (universal) {
        return make_formula(
            Formula::ForallIn{v.text, std::move(domain), std::move(body)});
      }
      return make_formula(
          Formula::ExistsIn{v.text, std::move(domain), std::move(body)});
    }
    expect(Tok::lparen, "'('");
    FormulaPtr body = formula();
    expect(Tok::rparen, "')'");
    if (universal) {
      return make_formula(Formula::ForallUniv{v.text, std::move(body)});
    }
    return make_formula(Formula::ExistsUniv{v.text, std::move(body)});
  }

  FormulaPtr atom() {
    if (at(Tok::lparen)) {
      advance();
      FormulaPtr f = formula();
      expect(Tok::rparen, "')'");
      return f;
    }
    if (eat_ident("true")) return make_formula(Formula::BoolLit{true});
    if (eat_ident("false")) return make_formula(Formula::BoolLit{false});
    TermPtr lhs = term();
    if (eat_ident("in")) {
      return make_formula(Formula::Member{std::move(lhs), term()});
    }
    if (eat_ident("sub")) {
      return make_formula(Formula::SubsetOf{std::move(lhs), term()});
    }
    if (at(Tok::equals)) {
      advance();
      return make_formula(Formula::Equal{std::move(lhs), term()});
    }
    throw ParseError("expected 'in', 'sub' or '=' after term", peek().pos);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

TermPtr parse_term(const std::string& text) {
  return Parser(Lexer(text).run()).term_only();
}

FormulaPtr parse_formula(const std::string& text) {
  return Parser(Lexer(text).run()).formula_only();
}

namespace {

void render_to(std::string& out, const Value& v) {
  if (v.is_set()) {
    out += '{';
    bool first = true;
    for (const Value& e : v.elements()) {
      if (!first) out += ", ";
      first = false;
      render_to(out, e);
    }
    out += '}';
    return;
  }
  out += '[';
  const auto& entries = v.entries();
  for (std::size_t r = 0; r < v.rows(); ++r) {
    if (r > 0) out += "; ";
    for (std::size_t c = 0; c < v.cols(); ++c) {
      if (c > 0) out += ' ';
      render_to(out, entries[r * v.cols() + c]);
    }
  }
  out += ']';
}

}  // namespace

std::string render(const Value& v) {
  std::string out;
  render_to(out, v);
  return out;
}

std::string render_shape(const Shape& s) {
  if (s.is_leaf()) return "set";
  std::string out = std::to_string(s.rows()) + "x" + std::to_string(s.cols());
  out += '(';
  bool first = true;
  for (const Shape& c : s.children()) {
    if (!first) out += ", ";
    first = false;
    out += render_shape(c);
  }
  out += ')';
  return out;
}

}  // namespace smx

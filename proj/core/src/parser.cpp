// Recursive-descent parser for the ASCII formula syntax.
//
//   formula := iff
//   iff     := impl ("<->" impl)*
//   impl    := disj ("->" impl)?
//   disj    := conj ("|" conj)*
//   conj    := unary ("&" unary)*
//   unary   := "~" unary | "[]" unary | "<>" unary | quant | atom | "(" formula ")"
//   quant   := ("exists" | "forall" | "exists1") VAR "." formula
//   atom    := PRED "(" term ("," term)* ")" | PRED | "true" | "false" | term "==" term
//   term    := VAR | CONST | "#" IDENT | "#@" NUM
//            | "<<" formula ">>" ("_{" varlist? "}")? ("^{" varlist? "}")?
//
// A quantifier's scope extends as far right as possible.

#include <cctype>
#include <charconv>

#include "ifol/error.hpp"
#include "ifol/syntax.hpp"

namespace ifol {
namespace {

enum class Tok {
  Ident,
  Element,
  Handle,
  LParen,
  RParen,
  Comma,
  Dot,
  And,
  Or,
  Not,
  Implies,
  Iff,
  EqEq,
  LAbs,
  RAbs,
  Sub,
  Sup,
  RBrace,
  BoxOp,
  DiamondOp,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto two = [&](char a, char b) { return src[i] == a && i + 1 < src.size() && src[i + 1] == b; };

  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), start});
      ++i;
    };
    switch (c) {
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case ',': single(Tok::Comma); continue;
      case '.': single(Tok::Dot); continue;
      case '&': single(Tok::And); continue;
      case '|': single(Tok::Or); continue;
      case '~': single(Tok::Not); continue;
      case '}': single(Tok::RBrace); continue;
      default: break;
    }
    if (two('-', '>')) {
      out.push_back({Tok::Implies, "->", start});
      i += 2;
    } else if (c == '<' && src.substr(i, 3) == "<->") {
      out.push_back({Tok::Iff, "<->", start});
      i += 3;
    } else if (two('<', '<')) {
      out.push_back({Tok::LAbs, "<<", start});
      i += 2;
    } else if (two('<', '>')) {
      out.push_back({Tok::DiamondOp, "<>", start});
      i += 2;
    } else if (two('>', '>')) {
      out.push_back({Tok::RAbs, ">>", start});
      i += 2;
    } else if (two('=', '=')) {
      out.push_back({Tok::EqEq, "==", start});
      i += 2;
    } else if (two('[', ']')) {
      out.push_back({Tok::BoxOp, "[]", start});
      i += 2;
    } else if (two('_', '{')) {
      out.push_back({Tok::Sub, "_{", start});
      i += 2;
    } else if (two('^', '{')) {
      out.push_back({Tok::Sup, "^{", start});
      i += 2;
    } else if (c == '#') {
      ++i;
      if (i < src.size() && src[i] == '@') {
        ++i;
        std::size_t j = i;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        if (j == i) throw SyntaxError("expected digits after '#@'", start);
        out.push_back({Tok::Handle, std::string(src.substr(i, j - i)), start});
        i = j;
      } else {
        std::size_t j = i;
        while (j < src.size() && ident_char(src[j])) ++j;
        if (j == i) throw SyntaxError("expected an element name after '#'", start);
        out.push_back({Tok::Element, std::string(src.substr(i, j - i)), start});
        i = j;
      }
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), start});
      i = j;
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "exists" || s == "forall" || s == "exists1" || s == "true" || s == "false";
}

class Parser {
 public:
  Parser(std::string_view src, const Signature& sig, Signature* mutable_sig)
      : tokens_(lex(src)), sig_(sig), infer_(mutable_sig) {}

  FormulaPtr formula_only() {
    FormulaPtr f = iff();
    expect(Tok::End, "end of input");
    return f;
  }

  Term term_only() {
    Term t = term();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) {
      throw SyntaxError(std::string("expected ") + what + ", found '" + peek().text + "'", peek().pos);
    }
    return next();
  }

  const Signature& sig() const { return infer_ ? *infer_ : sig_; }

  FormulaPtr iff() {
    FormulaPtr left = impl();
    while (accept(Tok::Iff)) left = make_equiv(left, impl());
    return left;
  }

  FormulaPtr impl() {
    FormulaPtr left = disj();
    if (accept(Tok::Implies)) return make_implies(left, impl());
    return left;
  }

  FormulaPtr disj() {
    FormulaPtr left = conj();
    while (accept(Tok::Or)) left = make_disj(left, conj());
    return left;
  }

  FormulaPtr conj() {
    FormulaPtr left = unary();
    while (accept(Tok::And)) left = make_conj(left, unary());
    return left;
  }

  FormulaPtr unary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Not:
        next();
        return make_neg(unary());
      case Tok::BoxOp:
        next();
        return make_box(unary());
      case Tok::DiamondOp:
        next();
        return make_diamond(unary());
      case Tok::LParen: {
        next();
        FormulaPtr f = iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident:
        return ident_led();
      case Tok::Element:
      case Tok::Handle:
      case Tok::LAbs:
        return identity_atom();
      default:
        throw SyntaxError("expected a formula, found '" + tok.text + "'", tok.pos);
    }
  }

  FormulaPtr ident_led() {
    const Token tok = peek();
    const std::string& name = tok.text;
    if (name == "exists" || name == "forall" || name == "exists1") {
      next();
      const Token& var = expect(Tok::Ident, "a variable");
      if (!sig().is_variable(var.text)) {
        throw SyntaxError("'" + var.text + "' is not a variable", var.pos);
      }
      std::string v = var.text;
      expect(Tok::Dot, "'.' after quantified variable");
      FormulaPtr body = iff();
      if (name == "exists") return make_exists(v, body);
      if (name == "forall") return make_forall(v, body);
      return make_exists_unique(v, body);
    }
    if (name == "true") {
      next();
      return make_truth();
    }
    if (name == "false") {
      next();
      return make_neg(make_truth());
    }
    if (peek(1).kind == Tok::LParen) return application();
    if (sig().is_variable(name) || sig().is_constant(name)) return identity_atom();
    if (sig().has_predicate(name, 0)) {
      next();
      return make_atom(PredicateSymbol{name, 0}, {});
    }
    if (sig().has_predicate_name(name)) {
      throw ArityError("predicate '" + name + "' used with 0 arguments; declared arities: " +
                       arity_list(name));
    }
    if (infer_) {
      if (peek(1).kind == Tok::EqEq) {
        infer_->add_constant(name);
        return identity_atom();
      }
      next();
      infer_->add_predicate(name, 0);
      return make_atom(PredicateSymbol{name, 0}, {});
    }
    throw SyntaxError("unknown symbol '" + name + "'", tok.pos);
  }

  std::string arity_list(const std::string& name) const {
    std::string out;
    for (std::size_t a : sig().arities(name)) {
      if (!out.empty()) out += ", ";
      out += std::to_string(a);
    }
    return out;
  }

  FormulaPtr application() {
    const Token tok = next();
    expect(Tok::LParen, "'('");
    std::vector<Term> args;
    args.push_back(term());
    while (accept(Tok::Comma)) args.push_back(term());
    expect(Tok::RParen, "')' after arguments");

    const std::string& name = tok.text;
    if (!sig().has_predicate(name, args.size())) {
      if (sig().has_predicate_name(name)) {
        throw ArityError("predicate '" + name + "' applied to " + std::to_string(args.size()) +
                         " arguments; declared arities: " + arity_list(name));
      }
      if (!infer_) throw SyntaxError("unknown predicate '" + name + "'", tok.pos);
      infer_->add_predicate(name, args.size());
    }
    PredicateSymbol p{name, args.size()};
    return make_atom(std::move(p), std::move(args));
  }

  FormulaPtr identity_atom() {
    Term left = term();
    expect(Tok::EqEq, "'==' after a term");
    Term right = term();
    return make_identity(std::move(left), std::move(right));
  }

  VarTuple var_list() {
    VarTuple vars;
    if (peek().kind == Tok::RBrace) {
      next();
      return vars;
    }
    while (true) {
      const Token& v = expect(Tok::Ident, "a variable");
      if (!sig().is_variable(v.text)) throw SyntaxError("'" + v.text + "' is not a variable", v.pos);
      vars.push_back(v.text);
      if (accept(Tok::RBrace)) return vars;
      expect(Tok::Comma, "',' or '}'");
    }
  }

  Term term() {
    const Token tok = next();
    switch (tok.kind) {
      case Tok::Element:
        return ElementRef{DomainElement::particular(tok.text)};
      case Tok::Handle: {
        std::uint32_t id = 0;
        auto [p, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), id);
        if (ec != std::errc()) throw SyntaxError("bad concept handle", tok.pos);
        return ElementRef{DomainElement::concept_handle(id)};
      }
      case Tok::LAbs: {
        FormulaPtr body = iff();
        expect(Tok::RAbs, "'>>' closing the abstraction");
        VarTuple alpha, beta;
        if (accept(Tok::Sub)) alpha = var_list();
        if (accept(Tok::Sup)) beta = var_list();
        return make_abstraction(std::move(body), std::move(alpha), std::move(beta));
      }
      case Tok::Ident: {
        if (is_keyword(tok.text)) throw SyntaxError("keyword '" + tok.text + "' used as a term", tok.pos);
        if (sig().is_variable(tok.text)) return Variable{tok.text};
        if (sig().is_constant(tok.text)) return Constant{tok.text};
        if (infer_ && !infer_->has_predicate_name(tok.text)) {
          infer_->add_constant(tok.text);
          return Constant{tok.text};
        }
        throw SyntaxError("unknown constant '" + tok.text + "'", tok.pos);
      }
      default:
        throw SyntaxError("expected a term, found '" + tok.text + "'", tok.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature& sig_;
  Signature* infer_;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text, const Signature& sig) {
  return Parser(text, sig, nullptr).formula_only();
}

Term parse_term(std::string_view text, const Signature& sig) {
  return Parser(text, sig, nullptr).term_only();
}

FormulaPtr parse_formula_inferring(std::string_view text, Signature& sig) {
  return Parser(text, sig, &sig).formula_only();
}

Term parse_term_inferring(std::string_view text, Signature& sig) {
  return Parser(text, sig, &sig).term_only();
}

}  // namespace ifol

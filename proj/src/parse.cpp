/*
 * Copyright 2026 The dialg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cctype>

#include "dialg/term.hpp"

namespace dialg {
namespace {

enum class Tok { Zero, Name, Tau, Nu, Dot, Plus, Bar, LParen, RParen, Lt, Gt, Tilde, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Parser {
 public:
  Parser(const std::string& text, Calculus calculus, bool allow_internal)
      : text_(text), calculus_(calculus), allow_internal_(allow_internal) {
    advance();
  }

  Term parse() {
    Term t = parse_par();
    if (tok_.kind != Tok::End) fail("unexpected '" + tok_.text + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, tok_.pos); }

  [[noreturn]] void mismatch(const std::string& what) const {
    throw CalculusMismatch(what + " is not " + std::string(to_string(calculus_)) +
                           " syntax at position " + std::to_string(tok_.pos));
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void advance() {
    while (at_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[at_]))) ++at_;
    std::size_t start = at_;
    if (at_ >= text_.size()) {
      tok_ = {Tok::End, "end of input", start};
      return;
    }
    char c = text_[at_];
    auto single = [&](Tok k) {
      ++at_;
      tok_ = {k, std::string(1, c), start};
    };
    switch (c) {
      case '.': return single(Tok::Dot);
      case '+': return single(Tok::Plus);
      case '|': return single(Tok::Bar);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '<': return single(Tok::Lt);
      case '>': return single(Tok::Gt);
      case '~': return single(Tok::Tilde);
      default: break;
    }
    if (c == '0') {
      ++at_;
      if (at_ < text_.size() && ident_char(text_[at_])) {
        tok_ = {Tok::Zero, "0", start};
        fail("malformed token");
      }
      tok_ = {Tok::Zero, "0", start};
      return;
    }
    if (c == '#') {
      std::size_t end = at_ + 1;
      while (end < text_.size() && ident_char(text_[end])) ++end;
      std::string word = text_.substr(at_, end - at_);
      tok_ = {Tok::Name, word, start};
      if (!allow_internal_) fail("internal name '" + word + "' not accepted in user input");
      if (!is_internal_name(word)) fail("malformed internal name '" + word + "'");
      at_ = end;
      return;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t end = at_;
      while (end < text_.size() && ident_char(text_[end])) ++end;
      std::string word = text_.substr(at_, end - at_);
      at_ = end;
      if (word == "tau") tok_ = {Tok::Tau, word, start};
      else if (word == "nu") tok_ = {Tok::Nu, word, start};
      else tok_ = {Tok::Name, word, start};
      return;
    }
    tok_ = {Tok::End, std::string(1, c), start};
    fail(std::string("unexpected character '") + c + "'");
  }

  void expect(Tok k, const char* what) {
    if (tok_.kind != k) fail(std::string("expected ") + what + ", found '" + tok_.text + "'");
    advance();
  }

  Name expect_name() {
    if (tok_.kind != Tok::Name) fail("expected a name, found '" + tok_.text + "'");
    Name n = tok_.text;
    advance();
    return n;
  }

  Term parse_par() {
    std::vector<Term> parts;
    parts.push_back(parse_sum());
    while (tok_.kind == Tok::Bar) {
      advance();
      parts.push_back(parse_sum());
    }
    return Term::par(std::move(parts));
  }

  Term parse_sum() {
    std::size_t first_pos = tok_.pos;
    Term first = parse_unit();
    if (tok_.kind != Tok::Plus) return first;
    std::vector<Summand> summands;
    auto take = [&](Term t, std::size_t pos) {
      if (t.kind() != Term::Kind::Sum) throw ParseError("unguarded operand of '+'", pos);
      for (const auto& s : t.summands()) summands.push_back(s);
    };
    take(std::move(first), first_pos);
    while (tok_.kind == Tok::Plus) {
      advance();
      std::size_t pos = tok_.pos;
      take(parse_unit(), pos);
    }
    return Term::sum(std::move(summands));
  }

  Term parse_unit() {
    switch (tok_.kind) {
      case Tok::Zero: advance(); return Term::nil();
      case Tok::LParen: {
        advance();
        Term t = parse_par();
        expect(Tok::RParen, "')'");
        return t;
      }
      case Tok::Nu: {
        advance();
        Name x = expect_name();
        expect(Tok::Dot, "'.'");
        return Term::nu(std::move(x), parse_par());
      }
      case Tok::Tau: {
        advance();
        expect(Tok::Dot, "'.'");
        return Term::prefixed(Prefix::tau(), parse_unit());
      }
      case Tok::Tilde: {
        if (calculus_ != Calculus::Ccs) mismatch("'~' output");
        advance();
        Name a = expect_name();
        expect(Tok::Dot, "'.'");
        return Term::prefixed(Prefix::ccs_out(std::move(a)), parse_unit());
      }
      case Tok::Name: {
        Name a = tok_.text;
        advance();
        Prefix p;
        if (tok_.kind == Tok::LParen || tok_.kind == Tok::Lt) {
          if (calculus_ != Calculus::Pi) mismatch("a pi prefix");
          bool input = tok_.kind == Tok::LParen;
          advance();
          Name x = expect_name();
          expect(input ? Tok::RParen : Tok::Gt, input ? "')'" : "'>'");
          p = input ? Prefix::pi_in(a, x) : Prefix::pi_out(a, x);
        } else {
          if (calculus_ != Calculus::Ccs) mismatch("a bare channel prefix");
          p = Prefix::ccs_in(a);
        }
        expect(Tok::Dot, "'.'");
        return Term::prefixed(std::move(p), parse_unit());
      }
      default: fail("expected a process, found '" + tok_.text + "'");
    }
  }

  const std::string& text_;
  Calculus calculus_;
  bool allow_internal_;
  std::size_t at_ = 0;
  Token tok_{Tok::End, "", 0};
};

}  // namespace

Term parse_term(const std::string& text, Calculus calculus, bool allow_internal) {
  return Parser(text, calculus, allow_internal).parse();
}

Term parse_any(const std::string& text, bool allow_internal) {
  try {
    return parse_term(text, Calculus::Ccs, allow_internal);
  } catch (const CalculusMismatch&) {
    return parse_term(text, Calculus::Pi, allow_internal);
  }
}

}  // namespace dialg

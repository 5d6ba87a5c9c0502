/*
   Copyright 2026 algebroid-kit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#ifndef ALGK_LEXER_HPP
#define ALGK_LEXER_HPP

#include <cctype>
#include <string>

#include "rational.hpp"

namespace algk::detail {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

// Tokenizer for the expression grammar. Whitespace insignificant; numbers are
// unsigned digit runs (signs are handled by the grammar).
class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  Tok tok() const { return tok_; }
  const std::string& value() const { return value_; }
  std::size_t pos() const { return tok_pos_; }

  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    tok_pos_ = i_;
    value_.clear();
    if (i_ >= text_.size()) {
      tok_ = Tok::End;
      return;
    }
    char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
        value_.push_back(text_[i_++]);
      tok_ = Tok::Number;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
        value_.push_back(text_[i_++]);
      tok_ = Tok::Ident;
      return;
    }
    ++i_;
    switch (c) {
      case '+': tok_ = Tok::Plus; return;
      case '-': tok_ = Tok::Minus; return;
      case '*': tok_ = Tok::Star; return;
      case '/': tok_ = Tok::Slash; return;
      case '^': tok_ = Tok::Caret; return;
      case '(': tok_ = Tok::LParen; return;
      case ')': tok_ = Tok::RParen; return;
      default:
        throw Error("SyntaxError",
                    "unexpected character '" + std::string(1, c) + "' at position " +
                        std::to_string(tok_pos_));
    }
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw Error("SyntaxError",
                "expected " + expected + " at position " + std::to_string(tok_pos_));
  }

 private:
  const std::string& text_;
  std::size_t i_ = 0;
  std::size_t tok_pos_ = 0;
  Tok tok_ = Tok::End;
  std::string value_;
};

}  // namespace algk::detail

#endif

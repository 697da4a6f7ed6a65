/* Copyright 2026 The ordproof Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "ordproof/sexp.hpp"

#include <cctype>

namespace ordproof {

namespace {

class Reader {
 public:
  explicit Reader(const std::string& s) : s_(s) {}

  void skip() {
    for (;;) {
      while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (pos_ < s_.size() && s_[pos_] == ';') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
        continue;
      }
      return;
    }
  }

  std::string where(std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
  }

  [[noreturn]] void fail(const std::string& why, std::size_t at) const {
    throw SexpError(why + " at " + where(at));
  }

  bool done() {
    skip();
    return pos_ >= s_.size();
  }

  Sexp read() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == ')') fail("unexpected ')'", pos_);
    Sexp e;
    if (c == '(') {
      std::size_t open = pos_++;
      e.list = true;
      for (;;) {
        skip();
        if (pos_ >= s_.size()) fail("unterminated list", open);
        if (s_[pos_] == ')') {
          ++pos_;
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (c == '"') {
      std::size_t close = s_.find('"', pos_ + 1);
      if (close == std::string::npos) fail("unterminated string", pos_);
      e.quoted = true;
      e.atom = s_.substr(pos_ + 1, close - pos_ - 1);
      pos_ = close + 1;
      return e;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
           s_[pos_] != '(' && s_[pos_] != ')' && s_[pos_] != ';')
      ++pos_;
    e.atom = s_.substr(start, pos_ - start);
    return e;
  }

  std::size_t pos() const { return pos_; }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

const std::string& Sexp::head() const {
  if (!list || items.empty() || items[0].list) {
    throw SexpError("expected a list with a symbol head: " + str());
  }
  return items[0].atom;
}

std::string Sexp::str() const {
  if (!list) return quoted ? "\"" + atom + "\"" : atom;
  std::string r = "(";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) r += ' ';
    r += items[i].str();
  }
  return r + ")";
}

Sexp parse_sexp(const std::string& text) {
  Reader r(text);
  Sexp e = r.read();
  if (!r.done()) r.fail("trailing input after expression", r.pos());
  return e;
}

std::vector<Sexp> parse_sexps(const std::string& text) {
  Reader r(text);
  std::vector<Sexp> out;
  while (!r.done()) out.push_back(r.read());
  return out;
}

}  // namespace ordproof

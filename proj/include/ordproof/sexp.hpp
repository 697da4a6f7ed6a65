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

#ifndef ORDPROOF_SEXP_HPP_
#define ORDPROOF_SEXP_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace ordproof {

class SexpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Sexp {
  bool list = false;
  bool quoted = false;
  std::string atom;
  std::vector<Sexp> items;

  bool is(const char* a) const { return !list && atom == a; }
  const std::string& head() const;
  std::string str() const;
};

// Parses a single expression; ';' starts a comment running to end of line and
// "..." reads a quoted atom.
Sexp parse_sexp(const std::string& text);
std::vector<Sexp> parse_sexps(const std::string& text);

}  // namespace ordproof

#endif  // ORDPROOF_SEXP_HPP_

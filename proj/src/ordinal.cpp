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

#include "ordproof/ordinal.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace ordproof {

Ordinal::Ordinal(int n) : Ordinal(BigInt(n)) {}

Ordinal::Ordinal(const BigInt& n) {
  if (n < 0) throw OrdinalError("negative natural");
  if (n > 0) terms.push_back(Summand{Ordinal(), n});
}

Ordinal Ordinal::omega() { return omega_pow(Ordinal(1)); }

Ordinal Ordinal::omega_pow(const Ordinal& e, const BigInt& coef) {
  Ordinal r;
  if (coef > 0) r.terms.push_back(Summand{e, coef});
  return r;
}

bool Ordinal::is_finite() const {
  return terms.empty() || (terms.size() == 1 && terms[0].exp.is_zero());
}

bool Ordinal::is_successor() const {
  return !terms.empty() && terms.back().exp.is_zero();
}

bool Ordinal::is_limit() const {
  return !terms.empty() && !terms.back().exp.is_zero();
}

BigInt Ordinal::nat() const {
  if (!is_finite()) throw OrdinalError("ordinal is not finite: " + str());
  return terms.empty() ? BigInt(0) : terms[0].coef;
}

Ordinal Ordinal::min_exponent() const {
  return terms.empty() ? Ordinal() : terms.back().exp;
}

Ordinal Ordinal::leading_exponent() const {
  return terms.empty() ? Ordinal() : terms.front().exp;
}

std::size_t Ordinal::depth() const {
  std::size_t d = 0;
  for (const Summand& t : terms) {
    if (!t.exp.is_zero()) d = std::max(d, 1 + t.exp.depth());
  }
  return d;
}

namespace {

void print_exponent(std::ostream& os, const Ordinal& e) {
  bool bare = e.is_finite() || (e.terms.size() == 1 && e.terms[0].coef == 1);
  if (bare) {
    os << e.str();
  } else {
    os << '(' << e.str() << ')';
  }
}

}  // namespace

std::string Ordinal::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << " + ";
    const Summand& t = terms[i];
    if (t.exp.is_zero()) {
      os << t.coef;
      continue;
    }
    os << 'w';
    if (!(t.exp == Ordinal(1))) {
      os << '^';
      print_exponent(os, t.exp);
    }
    if (t.coef != 1) os << '*' << t.coef;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) {
  return os << a.str();
}

Ordering ord_cmp(const Ordinal& a, const Ordinal& b) {
  std::size_t n = std::min(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    Ordering e = ord_cmp(a.terms[i].exp, b.terms[i].exp);
    if (e != Ordering::Equal) return e;
    if (a.terms[i].coef != b.terms[i].coef) {
      return a.terms[i].coef < b.terms[i].coef ? Ordering::Less
                                               : Ordering::Greater;
    }
  }
  if (a.terms.size() == b.terms.size()) return Ordering::Equal;
  return a.terms.size() < b.terms.size() ? Ordering::Less : Ordering::Greater;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  return ord_cmp(a, b) == Ordering::Equal;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  switch (ord_cmp(a, b)) {
    case Ordering::Less:
      return std::strong_ordering::less;
    case Ordering::Equal:
      return std::strong_ordering::equal;
    default:
      return std::strong_ordering::greater;
  }
}

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.terms.front().exp;
  Ordinal r;
  for (const Summand& t : a.terms) {
    Ordering c = ord_cmp(t.exp, lead);
    if (c == Ordering::Greater) {
      r.terms.push_back(t);
    } else if (c == Ordering::Equal) {
      r.terms.push_back(Summand{t.exp, t.coef + b.terms.front().coef});
      r.terms.insert(r.terms.end(), b.terms.begin() + 1, b.terms.end());
      return r;
    } else {
      break;
    }
  }
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  return r;
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) { return ord_add(a, b); }

Ordinal ord_mul_nat(const Ordinal& a, const BigInt& n) {
  if (n < 0) throw OrdinalError("negative multiplier");
  if (n == 0 || a.is_zero()) return Ordinal();
  Ordinal r = a;
  r.terms[0].coef *= n;
  return r;
}

Ordinal omega_exp(const Ordinal& a) { return Ordinal::omega_pow(a); }

bool meshes(const Ordinal& a, const Ordinal& g) {
  if (a.is_zero()) return true;
  return g < Ordinal::omega_pow(a.min_exponent() + Ordinal(1));
}

Ordinal three_pow(const Ordinal& a) {
  if (!(a < Ordinal::omega_pow(Ordinal(2)))) {
    throw OrdinalError("three_pow requires an argument below w^2: " + a.str());
  }
  BigInt p = 0;
  BigInt q = 0;
  for (const Summand& t : a.terms) {
    if (t.exp.is_zero()) {
      q = t.coef;
    } else {
      p = t.coef;
    }
  }
  if (q > 100000) throw OrdinalError("three_pow exponent too large");
  BigInt c = boost::multiprecision::pow(BigInt(3), q.convert_to<unsigned>());
  return Ordinal::omega_pow(Ordinal(p), c);
}

Ordinal fund_one(const Ordinal& a, const BigInt& n) {
  if (a.is_zero()) return a;
  Ordinal r = a;
  Summand last = r.terms.back();
  r.terms.pop_back();
  if (last.coef > 1) r.terms.push_back(Summand{last.exp, last.coef - 1});
  if (last.exp.is_zero()) return r;
  if (last.exp.is_successor()) {
    Ordinal pred = last.exp;
    pred.terms.back().coef -= 1;
    if (pred.terms.back().coef == 0) pred.terms.pop_back();
    return r + Ordinal::omega_pow(pred, n + 1);
  }
  return r + Ordinal::omega_pow(fund_one(last.exp, n));
}

Ordinal fund_iter(const Ordinal& a, const BigInt& n, const BigInt& x) {
  Ordinal cur = a;
  for (BigInt i = 0; i < x && !cur.is_zero(); ++i) cur = fund_one(cur, n);
  return cur;
}

std::optional<BigInt> steps_to_naive(const Ordinal& a, const BigInt& n,
                                     const Ordinal& target,
                                     std::uint64_t max_steps) {
  Ordinal cur = a;
  for (std::uint64_t x = 0;; ++x) {
    Ordering c = ord_cmp(cur, target);
    if (c == Ordering::Equal) return BigInt(x);
    if (c == Ordering::Less) return std::nullopt;
    if (x >= max_steps) {
      throw OrdinalError("steps_to exceeded its iteration guard");
    }
    cur = fund_one(cur, n);
  }
}

namespace {

// Steps from w^e to 0 at base n.
BigInt power_descent(Ordinal e, const BigInt& n) {
  BigInt add = 0;
  BigInt mul = 1;
  for (;;) {
    if (e.is_zero()) return add + mul;
    add += mul;
    if (e.is_successor()) {
      mul *= n + 1;
      e = fund_one(e, 0);
    } else {
      e = fund_one(e, n);
    }
  }
}

// Removes the longest shared summand prefix of x and y.
void strip_common(Ordinal& x, Ordinal& y) {
  std::size_t i = 0;
  while (i < x.terms.size() && i < y.terms.size() &&
         x.terms[i].exp == y.terms[i].exp) {
    if (x.terms[i].coef != y.terms[i].coef) break;
    ++i;
  }
  x.terms.erase(x.terms.begin(), x.terms.begin() + i);
  y.terms.erase(y.terms.begin(), y.terms.begin() + i);
  if (!x.terms.empty() && !y.terms.empty() &&
      x.terms[0].exp == y.terms[0].exp && y.terms[0].coef < x.terms[0].coef) {
    x.terms[0].coef -= y.terms[0].coef;
    y.terms.erase(y.terms.begin());
  }
}

}  // namespace

namespace {

struct Crossing {
  Ordinal z;
  std::optional<Ordinal> prev;
};

// First point on the path of x (base n) that is <= y, with its predecessor.
Crossing first_at_or_below(Ordinal x, Ordinal y, const BigInt& n) {
  Ordinal prefix;
  std::optional<Ordinal> prev;
  for (;;) {
    std::size_t i = 0;
    while (i < x.terms.size() && i < y.terms.size() &&
           x.terms[i].exp == y.terms[i].exp &&
           x.terms[i].coef == y.terms[i].coef) {
      prefix.terms.push_back(x.terms[i]);
      ++i;
    }
    x.terms.erase(x.terms.begin(), x.terms.begin() + i);
    y.terms.erase(y.terms.begin(), y.terms.begin() + i);
    if (!x.terms.empty() && !y.terms.empty() &&
        x.terms[0].exp == y.terms[0].exp && y.terms[0].coef < x.terms[0].coef) {
      prefix = prefix + Ordinal::omega_pow(y.terms[0].exp, y.terms[0].coef);
      x.terms[0].coef -= y.terms[0].coef;
      y.terms.erase(y.terms.begin());
    }
    if (x <= y) return {prefix + x, prev};
    if (y.is_zero()) return {prefix, prefix + Ordinal(1)};
    Crossing e = first_at_or_below(x.terms[0].exp, y.terms[0].exp, n);
    prev = prefix + Ordinal::omega_pow(*e.prev);
    x = fund_one(Ordinal::omega_pow(*e.prev), n);
  }
}

}  // namespace

bool reaches(const Ordinal& a, const BigInt& n, const Ordinal& target) {
  return first_at_or_below(a, target, n).z == target;
}

BigInt descent_length(const Ordinal& a, const BigInt& n) {
  BigInt total = 0;
  for (const Summand& t : a.terms) total += t.coef * power_descent(t.exp, n);
  return total;
}

std::optional<BigInt> steps_to(const Ordinal& a, const BigInt& n,
                               const Ordinal& target) {
  Ordinal x = a;
  Ordinal y = target;
  BigInt steps = 0;
  for (;;) {
    strip_common(x, y);
    Ordering c = ord_cmp(x, y);
    if (c == Ordering::Equal) return steps;
    if (c == Ordering::Less) return std::nullopt;
    Summand lead = x.terms.front();
    x.terms.erase(x.terms.begin());
    BigInt unit = power_descent(lead.exp, n);
    steps += descent_length(x, n) + (lead.coef - 1) * unit + 1;
    x = fund_one(Ordinal::omega_pow(lead.exp), n);
  }
}

BigInt num_bound(const Ordinal& a, const BigInt& n) {
  BigInt total = 0;
  for (const Summand& t : a.terms) {
    BigInt e = num_bound(t.exp, n);
    if (e > 1000000) throw OrdinalError("num_bound too large to materialize");
    total += boost::multiprecision::pow(n + 2, e.convert_to<unsigned>()) * t.coef;
  }
  return total;
}

Ordinal omega_tower(unsigned k) {
  Ordinal r(1);
  for (unsigned i = 0; i < k; ++i) r = Ordinal::omega_pow(r);
  return r;
}

namespace {

class OrdParser {
 public:
  OrdParser(const std::string& s, std::size_t cap, std::size_t pos = 0)
      : s_(s), cap_(cap), pos_(pos) {}

  Ordinal parse() {
    Ordinal r = sum(0);
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

  Ordinal prefix_product(std::size_t& pos) {
    Ordinal r = atom(0);
    for (;;) {
      std::size_t save = pos_;
      if (!eat("*") || !at_digit()) {
        pos_ = save;
        break;
      }
      r = ord_mul_nat(r, number());
    }
    pos = pos_;
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw OrdinalError("ordinal parse error at column " + std::to_string(pos_ + 1) +
                       ": " + why + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  BigInt number() {
    if (!at_digit()) fail("expected a natural number");
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    return BigInt(s_.substr(start, pos_ - start));
  }

  Ordinal sum(std::size_t depth) {
    Ordinal r = product(depth);
    while (eat("+")) r = r + product(depth);
    return r;
  }

  Ordinal product(std::size_t depth) {
    Ordinal r = atom(depth);
    while (eat("*")) r = ord_mul_nat(r, number());
    return r;
  }

  Ordinal atom(std::size_t depth) {
    if (depth > cap_) fail("nesting depth exceeds cap");
    if (at_digit()) return Ordinal(number());
    if (eat("(")) {
      Ordinal r = sum(depth);
      if (!eat(")")) fail("expected ')'");
      return r;
    }
    if (eat("w") || eat("\xcf\x89")) {
      if (eat("^")) return Ordinal::omega_pow(atom(depth + 1));
      return Ordinal::omega();
    }
    fail("expected an ordinal");
  }

  const std::string& s_;
  std::size_t cap_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(const std::string& text, std::size_t depth_cap) {
  Ordinal r = OrdParser(text, depth_cap).parse();
  if (r.depth() > depth_cap) throw OrdinalError("nesting depth exceeds cap");
  return r;
}

Ordinal parse_ordinal_product(const std::string& text, std::size_t& pos) {
  return OrdParser(text, kDefaultDepthCap, pos).prefix_product(pos);
}

}  // namespace ordproof

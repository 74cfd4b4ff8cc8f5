#include "dcrit/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "dcrit/errors.hpp"

namespace dcrit {

namespace {

class Parser {
 public:
  Parser(std::string_view src, VarList vars, const AmbientPtr* ambient = nullptr)
      : src_(src), vars_(std::move(vars)), ambient_(ambient) {}

  Poly poly_to_end() {
    Poly p = expr();
    expect_end();
    return p;
  }

  std::vector<Poly> poly_list_to_end() {
    std::vector<Poly> out;
    skip_ws();
    if (at_end()) return out;
    out.push_back(expr());
    while (accept(',')) out.push_back(expr());
    expect_end();
    return out;
  }

  ExtElt graded_to_end() {
    const AmbientPtr& amb = *ambient_;
    ExtElt total(amb);
    bool negate = false;
    skip_ws();
    if (accept('-')) negate = true;
    else accept('+');
    while (true) {
      ExtElt t = graded_term();
      total += negate ? -t : t;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else break;
    }
    expect_end();
    return total;
  }

 private:
  Poly expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Poly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (peek_is('*')) {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    while (accept('^')) {
      const auto e = natural();
      Poly r = Poly::constant(vars_, 1);
      for (std::uint64_t i = 0; i < e; ++i) r = r * base;
      base = std::move(r);
    }
    return base;
  }

  Poly atom() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(vars_, rational());
    if (is_ident_start(c)) {
      const auto start = pos_;
      const std::string name = identifier();
      for (std::size_t i = 0; i < vars_->size(); ++i)
        if ((*vars_)[i] == name) return Poly::variable(vars_, i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  // Generator chain or polynomial factors joined by '*'.
  ExtElt graded_term() {
    const AmbientPtr& amb = *ambient_;
    Poly coeff = Poly::constant(vars_, 1);
    std::optional<Mask> chain;
    int sign = 1;
    while (true) {
      skip_ws();
      if (auto g = try_generator()) {
        if (chain) fail("more than one generator chain in a term");
        Mask m = Mask{1} << *g;
        while (accept_str("/\\")) {
          skip_ws();
          auto h = try_generator();
          if (!h) fail("expected generator after '/\\'");
          const Mask next = Mask{1} << *h;
          sign *= merge_sign(m, next);
          m |= next;
        }
        chain = m;
      } else {
        coeff = coeff * factor();
      }
      if (!peek_is('*')) break;
      ++pos_;
    }
    ExtElt r(amb);
    if (sign == 0) return r;
    r.add(chain.value_or(0), sign > 0 ? coeff : -coeff);
    return r;
  }

  std::optional<std::size_t> try_generator() {
    if (!ambient_ || at_end()) return std::nullopt;
    const auto& basis = (*ambient_)->basis;
    const auto start = pos_;
    std::string tok;
    if (src_[pos_] == '@') {
      ++pos_;
      tok = "@" + (at_end() || !is_ident_start(src_[pos_]) ? std::string() : identifier());
    } else if (is_ident_start(src_[pos_])) {
      tok = identifier();
    } else {
      return std::nullopt;
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == tok) return i;
    if (tok.starts_with('@') || tok.starts_with("d_")) {
      // Looks like a generator but names no known variable.
      const bool is_var = std::find(vars_->begin(), vars_->end(), tok) != vars_->end();
      if (!is_var) {
        pos_ = start;
        fail("unknown generator '" + tok + "'");
      }
    }
    pos_ = start;
    return std::nullopt;
  }

  Rational rational() {
    const Integer num = integer();
    if (peek_is('/') && !peek_str("/\\")) {
      ++pos_;
      skip_ws();
      const auto at = pos_;
      const Integer den = integer();
      if (den == 0) {
        pos_ = at;
        fail("zero denominator");
      }
      return make_rational(num, den);
    }
    return Rational(num);
  }

  Integer integer() {
    skip_ws();
    const auto start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(src_.substr(start, pos_ - start)));
  }

  std::uint64_t natural() {
    skip_ws();
    const auto start = pos_;
    const Integer v = integer();
    if (!v.fits_ulong_p() || v > 100000) {
      pos_ = start;
      fail("exponent too large");
    }
    return v.get_ui();
  }

  std::string identifier() {
    const auto start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  bool peek_is(char c) {
    skip_ws();
    return !at_end() && src_[pos_] == c;
  }
  bool peek_str(std::string_view s) {
    skip_ws();
    return src_.substr(pos_).starts_with(s);
  }
  bool accept(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }
  bool accept_str(std::string_view s) {
    if (!peek_str(s)) return false;
    pos_ += s.size();
    return true;
  }
  void expect_end() {
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + src_[pos_] + "'");
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  std::string_view src_;
  VarList vars_;
  const AmbientPtr* ambient_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view src, const VarList& vars) { return Parser(src, vars).poly_to_end(); }

std::vector<Poly> parse_poly_list(std::string_view src, const VarList& vars) {
  return Parser(src, vars).poly_list_to_end();
}

VarList parse_vars(std::string_view src) {
  std::vector<std::string> names;
  std::string cur;
  std::size_t start = 0;
  auto flush = [&](std::size_t at) {
    if (cur.empty()) throw ParseError("empty variable name", at);
    names.push_back(cur);
    cur.clear();
  };
  bool any = false;
  for (std::size_t i = 0; i < src.size(); ++i) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    any = true;
    if (c == ',') {
      flush(i);
      start = i + 1;
      continue;
    }
    const bool ok = std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                    (!cur.empty() && std::isdigit(static_cast<unsigned char>(c)));
    if (!ok) throw ParseError(std::string("invalid character '") + c + "' in variable list", i);
    cur += c;
  }
  if (any) flush(start);
  return make_vars(std::move(names));
}

std::vector<unsigned> parse_weights(std::string_view src) {
  std::vector<unsigned> out;
  std::size_t i = 0;
  while (i < src.size()) {
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    const auto start = i;
    unsigned long v = 0;
    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
      v = v * 10 + static_cast<unsigned long>(src[i] - '0');
      if (v > 1000000) throw ParseError("weight too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected positive integer weight", i);
    if (v == 0) throw ParseError("weights must be positive", start);
    out.push_back(static_cast<unsigned>(v));
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    if (i < src.size()) {
      if (src[i] != ',') throw ParseError("expected ','", i);
      ++i;
    }
  }
  return out;
}

ExtElt parse_graded(std::string_view src, const AmbientPtr& ambient) {
  return Parser(src, ambient->vars, &ambient).graded_to_end();
}

}  // namespace dcrit

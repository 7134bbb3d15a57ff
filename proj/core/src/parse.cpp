#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "qm/errors.hpp"
#include "qm/poly.hpp"

namespace qm {
namespace {

constexpr int kMaxExponent = 64;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Poly parse() {
    Poly out;
    skip_ws();
    if (at_end()) throw SyntaxError("empty polynomial expression", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1.0 : 1.0;
        ++pos_;
      } else if (!first) {
        throw SyntaxError("expected '+' or '-'", pos_);
      }
      skip_ws();
      out.add(term(sign));
      first = false;
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  static bool is_var(char c) { return c == 'x' || c == 'y' || c == 'z'; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  HPoly term(double sign) {
    cplx coef = 1.0;
    bool have_coef = false;
    int e[3] = {0, 0, 0};
    bool have_factor = false;

    if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
      coef = number();
      have_coef = true;
    } else if (!at_end() && peek() == '(') {
      coef = complex_literal();
      have_coef = true;
    }
    skip_ws();
    if (have_coef && !at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      if (at_end() || !is_var(peek())) throw SyntaxError("expected variable after '*'", pos_);
    }
    while (!at_end() && is_var(peek())) {
      const int v = peek() - 'x';
      ++pos_;
      skip_ws();
      int exponent = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        exponent = unsigned_int();
      }
      e[v] += exponent;
      if (e[v] > kMaxExponent) throw SyntaxError("exponent too large", pos_);
      have_factor = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !is_var(peek())) throw SyntaxError("expected variable after '*'", pos_);
      }
    }
    if (!have_coef && !have_factor) throw SyntaxError("expected a term", pos_);
    return HPoly::monomial(e[0], e[1], e[2], sign * coef);
  }

  int unsigned_int() {
    const std::size_t start = pos_;
    int value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > kMaxExponent) throw SyntaxError("exponent too large", start);
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError("expected exponent", start);
    return value;
  }

  double number() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < s_.size() && (s_[look] == '+' || s_[look] == '-')) ++look;
      if (look < s_.size() && std::isdigit(static_cast<unsigned char>(s_[look]))) {
        pos_ = look;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
    }
    double value = 0.0;
    const char* first = s_.data() + start;
    const char* last = s_.data() + pos_;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last || !std::isfinite(value))
      throw SyntaxError("malformed number", start);
    return value;
  }

  cplx complex_literal() {
    const std::size_t open = pos_;
    ++pos_;
    double re = 0.0;
    double im = 0.0;
    bool have_re = false;
    bool have_im = false;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) throw SyntaxError("unterminated complex literal", open);
      if (peek() == ')') {
        if (first) throw SyntaxError("empty complex literal", pos_);
        ++pos_;
        break;
      }
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1.0 : 1.0;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw SyntaxError("expected '+' or '-' in complex literal", pos_);
      }
      const std::size_t part_start = pos_;
      double mag = 1.0;
      bool have_num = false;
      if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
        mag = number();
        have_num = true;
      }
      skip_ws();
      if (!at_end() && peek() == 'i') {
        ++pos_;
        if (have_im) throw SyntaxError("duplicate imaginary part", part_start);
        im = sign * mag;
        have_im = true;
      } else {
        if (!have_num) throw SyntaxError("expected number in complex literal", part_start);
        if (have_re) throw SyntaxError("duplicate real part", part_start);
        re = sign * mag;
        have_re = true;
      }
      first = false;
    }
    return {re, im};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_monomial(int i, int j, int k) {
  std::string out;
  const int e[3] = {i, j, k};
  const char names[3] = {'x', 'y', 'z'};
  for (int v = 0; v < 3; ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[v];
    if (e[v] > 1) out += '^' + std::to_string(e[v]);
  }
  return out;
}

void append_part(std::string& out, const HPoly& p) {
  const int d = p.degree();
  std::size_t idx = 0;
  for (int i = d; i >= 0; --i) {
    for (int j = d - i; j >= 0; --j, ++idx) {
      const cplx c = p[idx];
      if (c == cplx(0.0)) continue;
      const std::string mono = format_monomial(i, j, d - i - j);
      const bool first = out.empty();
      if (c.imag() == 0.0) {
        const double r = c.real();
        const double mag = std::abs(r);
        if (r < 0.0)
          out += '-';
        else if (!first)
          out += '+';
        if (mono.empty())
          out += format_number(mag);
        else if (mag == 1.0)
          out += mono;
        else
          out += format_number(mag) + '*' + mono;
      } else {
        if (!first) out += '+';
        out += '(' + format_number(c.real()) + (c.imag() < 0.0 ? '-' : '+') +
               format_number(std::abs(c.imag())) + "i)";
        if (!mono.empty()) out += '*' + mono;
      }
    }
  }
}

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string format_poly(const Poly& p) {
  std::string out;
  for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) append_part(out, *it);
  return out.empty() ? "0" : out;
}

std::string format_poly(const HPoly& p) {
  std::string out;
  append_part(out, p);
  return out.empty() ? "0" : out;
}

}  // namespace qm

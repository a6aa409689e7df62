#include "ptt/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace ptt {

namespace {

[[noreturn]] void fail(const std::string& text) {
  throw std::invalid_argument("cannot parse number: '" + text + "'");
}

// One factor: [number] [sqrtN | pi]  (e.g. "2", "sqrt3", "pi", "2pi", "0.5sqrt2")
double parse_factor(const std::string& tok, const std::string& whole) {
  if (tok.empty()) fail(whole);
  size_t pos = 0;
  double value = 1.0;
  bool have_number = false;
  if (std::isdigit(static_cast<unsigned char>(tok[0])) || tok[0] == '.') {
    value = std::stod(tok, &pos);
    have_number = true;
  }
  const std::string rest = tok.substr(pos);
  if (rest.empty()) {
    if (!have_number) fail(whole);
    return value;
  }
  if (rest == "pi") return value * kPi;
  if (rest.rfind("sqrt", 0) == 0) {
    const std::string arg = rest.substr(4);
    if (arg.empty()) fail(whole);
    size_t used = 0;
    const double a = std::stod(arg, &used);
    if (used != arg.size() || a < 0.0) fail(whole);
    return value * std::sqrt(a);
  }
  fail(whole);
}

}  // namespace

double parse_real(const std::string& text) {
  std::string s;
  for (const char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(text);

  double sign = 1.0;
  size_t start = 0;
  if (s[0] == '+' || s[0] == '-') {
    sign = (s[0] == '-') ? -1.0 : 1.0;
    start = 1;
  }
  s = s.substr(start);
  if (s.empty()) fail(text);

  // Fast path: plain decimal (also covers exponents like 1e-4).
  {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() + s.size()) return sign * v;
  }

  const size_t slash = s.find('/');
  if (slash == std::string::npos) return sign * parse_factor(s, text);
  const double num = parse_factor(s.substr(0, slash), text);
  const double den = parse_factor(s.substr(slash + 1), text);
  if (den == 0.0) fail(text);
  return sign * num / den;
}

Complex parse_complex(const std::string& text) {
  std::string s;
  for (const char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty complex number");

  const auto imag_part = [](const std::string& t) {
    if (t == "i" || t == "+i") return 1.0;
    if (t == "-i") return -1.0;
    return parse_real(t.substr(0, t.size() - 1));
  };
  if (s.back() == 'i') {
    // Either pure imaginary or re+im*i; split at the last +/- that is not an
    // exponent sign and not the leading sign.
    for (size_t pos = s.size() - 1; pos > 0; --pos) {
      if ((s[pos] == '+' || s[pos] == '-') &&
          s[pos - 1] != 'e' && s[pos - 1] != 'E') {
        return Complex(parse_real(s.substr(0, pos)), imag_part(s.substr(pos)));
      }
    }
    return Complex(0.0, imag_part(s));
  }
  return Complex(parse_real(s), 0.0);
}

Vec3 parse_state3(const std::string& text) {
  Vec3 v;
  size_t begin = 0;
  for (int i = 0; i < 3; ++i) {
    const size_t comma = text.find(',', begin);
    const bool last = (i == 2);
    if (last != (comma == std::string::npos))
      throw std::invalid_argument("state needs exactly 3 comma-separated parts");
    v[i] = parse_complex(last ? text.substr(begin)
                              : text.substr(begin, comma - begin));
    begin = comma + 1;
  }
  return v;
}

}  // namespace ptt

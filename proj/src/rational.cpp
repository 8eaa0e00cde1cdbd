#include "permtest/rational.hpp"

#include <cctype>
#include <cstdio>
#include <vector>

#include "permtest/errors.hpp"

namespace permtest {

Rational make_rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw ValidationError("rational with zero denominator");
  Rational q{mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator))};
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal_string(const Rational& value, int significant_digits) {
  mpf_class f(0, 256);
  f = value;
  std::vector<char> buffer(128);
  int written = gmp_snprintf(buffer.data(), buffer.size(), "%.*Fg", significant_digits, f.get_mpf_t());
  if (written >= static_cast<int>(buffer.size())) {
    buffer.resize(static_cast<std::size_t>(written) + 1);
    gmp_snprintf(buffer.data(), buffer.size(), "%.*Fg", significant_digits, f.get_mpf_t());
  }
  return std::string(buffer.data());
}

std::string to_display_string(const Rational& value) {
  return to_fraction_string(value) + " (" + to_decimal_string(value) + ")";
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw ParseError("empty rational", 0, 0);
  try {
    auto dot = s.find('.');
    if (dot == std::string::npos) {
      Rational q(s, 10);
      if (q.get_den() == 0) throw ValidationError("rational with zero denominator");
      q.canonicalize();
      return q;
    }
    bool negative = s[0] == '-';
    std::string body = (negative || s[0] == '+') ? s.substr(1) : s;
    dot = body.find('.');
    std::string digits = body.substr(0, dot) + body.substr(dot + 1);
    if (digits.empty()) throw ParseError("malformed decimal '" + s + "'", 0, 0);
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("malformed decimal '" + s + "'", 0, 0);
    }
    mpz_class numerator(digits, 10);
    mpz_class denominator;
    mpz_ui_pow_ui(denominator.get_mpz_t(), 10, body.size() - dot - 1);
    Rational q(numerator, denominator);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational '" + s + "'", 0, 0);
  }
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace permtest

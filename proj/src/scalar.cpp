#include "nlk/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "nlk/error.hpp"

namespace nlk {

std::string to_string(const Scalar& s) { return s.get_str(10); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  constexpr std::string_view unicode_minus = "\xE2\x88\x92";
  if (body.starts_with('-')) {
    negative = true;
    body.remove_prefix(1);
  } else if (body.starts_with(unicode_minus)) {
    negative = true;
    body.remove_prefix(unicode_minus.size());
  }

  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed scalar \"" + std::string(text) + "\"");
  }

  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in scalar \"" + std::string(text) + "\"");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (p != 0 && g != 1) throw ParseError("scalar \"" + std::string(text) + "\" is not reduced");
  if (p == 0 && (q != 1 || negative)) throw ParseError("zero must be written \"0\", got \"" + std::string(text) + "\"");

  Scalar out(negative ? mpz_class(-p) : p, q);
  out.canonicalize();
  return out;
}

}  // namespace nlk

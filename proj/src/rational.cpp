#include "chroma/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace chroma {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

Rat parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  bool neg = false;
  std::string_view body = s;
  if (body[0] == '+' || body[0] == '-') {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  auto fail = [&] { throw std::invalid_argument("bad rational literal: " + s); };

  Rat value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail();
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    value = Rat(n, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if (!all_digits(ip) || !all_digits(fp)) fail();
    mpz_class digits(std::string(ip) + std::string(fp), 10);
    mpz_class den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    value = Rat(digits, den);
  } else {
    if (!all_digits(body)) fail();
    value = Rat(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  return neg ? Rat(-value) : value;
}

std::string format_rational(const Rat& value) {
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  if (den == 1) return num.get_str();

  // Exact decimal exists iff den = 2^a * 5^b.
  mpz_class rest = den;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.get_str() + "/" + den.get_str();

  int places = std::max(twos, fives);
  mpz_class scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  mpz_class scaled = num * scale / den; // exact by construction
  bool neg = scaled < 0;
  std::string digits = mpz_class(abs(scaled)).get_str();
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return (neg ? "-" : "") + digits;
}

std::optional<long long> rational_to_int64(const Rat& value) {
  if (value.get_den() != 1) return std::nullopt;
  const mpz_class& num = value.get_num();
  if (!num.fits_slong_p()) return std::nullopt;
  long v = num.get_si();
  return static_cast<long long>(v);
}

} // namespace chroma

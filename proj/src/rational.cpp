#include "wolfkit/rational.hpp"

#include <cctype>

#include "wolfkit/errors.hpp"

namespace wolfkit {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw UsageError("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational RationalSampler::next() {
  std::uniform_int_distribution<int> num(-max_num_, max_num_);
  std::uniform_int_distribution<int> den(1, max_den_);
  Rational q(num(engine_), den(engine_));
  q.canonicalize();
  return q;
}

Rational RationalSampler::next_nonzero() {
  for (;;) {
    Rational q = next();
    if (q != 0) return q;
  }
}

std::uint64_t RationalSampler::next_index(std::uint64_t bound) {
  std::uniform_int_distribution<std::uint64_t> d(0, bound - 1);
  return d(engine_);
}

}  // namespace wolfkit

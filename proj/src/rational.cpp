#include "comsep/rational.hpp"

#include <algorithm>
#include <cctype>

namespace comsep {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
    throw Error("not an exact rational: '" + std::string(text) + "'");
  mpz_class p(std::string(num), 10), q(std::string(den), 10);
  if (q == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational out(p, q);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Sign sign_of(const Rational& q) {
  const int s = sgn(q);
  return s > 0 ? Sign::plus : s < 0 ? Sign::minus : Sign::zero;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace comsep

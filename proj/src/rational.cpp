#include "mw/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mw {

std::string to_string(const Rational& q) { return q.str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string to_string(const QVector& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v(i));
  }
  return out + ")";
}

QVector primitive(const QVector& v) {
  Integer lcm_den = 1;
  for (Index i = 0; i < v.size(); ++i)
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(v(i)));
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i)
    g = boost::multiprecision::gcd(g, numerator(v(i)) * (lcm_den / denominator(v(i))));
  if (g == 0) return v;
  QVector out(v.size());
  for (Index i = 0; i < v.size(); ++i)
    out(i) = Rational(numerator(v(i)) * (lcm_den / denominator(v(i))) / g);
  return out;
}

bool lex_less(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

QMatrix stack_rows(const std::vector<QVector>& rows, Index cols) {
  QMatrix m(static_cast<Index>(rows.size()), cols);
  for (Index i = 0; i < m.rows(); ++i) m.row(i) = rows[static_cast<std::size_t>(i)].transpose();
  return m;
}

}  // namespace mw

#include "coxart/numeric.hpp"

#include "coxart/errors.hpp"

#include <cctype>
#include <sstream>

namespace coxart {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational");
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) throw ParseError("malformed rational '" + text + "'");
    return Rational(BigInt(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw ParseError("malformed rational '" + text + "'");
  BigInt d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(BigInt(num), d);
}

std::vector<Rational> parse_point(const std::string& text) {
  std::string norm = text;
  for (char& c : norm)
    if (c == ',' || c == '(' || c == ')') c = ' ';
  std::istringstream in(norm);
  std::vector<Rational> point;
  std::string tok;
  while (in >> tok) point.push_back(parse_rational(tok));
  if (point.empty()) throw ParseError("empty point '" + text + "'");
  return point;
}

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

int integer_rank(const std::vector<std::vector<long long>>& rows, int cols) {
  try {
    RankTracker<long long> t(cols);
    for (const auto& r : rows) t.add(r);
    return t.rank();
  } catch (const detail::ArithmeticOverflow&) {
    RankTracker<BigInt> t(cols);
    for (const auto& r : rows) t.add(r);
    return t.rank();
  }
}

} // namespace coxart

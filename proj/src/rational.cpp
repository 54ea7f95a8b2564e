#include "char1/rational.hpp"

#include <cctype>

#include "char1/error.hpp"

namespace char1 {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw invariant_error("malformed rational '" + std::string(text) + "'");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw invariant_error("zero denominator in '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  if (text.front() == '-') n = -n;
  Rat q(n, d);
  q.canonicalize();
  return q;
}

Rat make_rat(long num, long den) {
  if (den == 0) throw precondition_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(10); }

}  // namespace char1

#include "mrect/rational.hpp"

#include <cctype>

#include "mrect/errors.hpp"

namespace mrect {

namespace {

using boost::multiprecision::cpp_int;

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

cpp_int parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return cpp_int(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw InputError("malformed rational '" + std::string(text) + "' (expected p/q)");
  }
  cpp_int q = parse_integer(den);
  if (q == 0) throw InputError("rational '" + std::string(text) + "' has zero denominator");
  return Rational(parse_integer(num), q);
}

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

const char* to_string(Violation v) {
  switch (v) {
    case Violation::too_short: return "too_short";
    case Violation::ragged: return "ragged";
    case Violation::negative_entry: return "negative_entry";
    case Violation::zero_internal: return "zero_internal";
    case Violation::zero_total: return "zero_total";
    case Violation::wrong_sum: return "wrong_sum";
  }
  return "unknown";
}

}  // namespace mrect

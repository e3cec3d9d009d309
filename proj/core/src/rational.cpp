#include "lcaframe/rational.hpp"

#include "lcaframe/error.hpp"

#include <charconv>
#include <cmath>

namespace lcaframe {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::VariantMismatch: return "variant-mismatch";
    case ErrorKind::Index: return "index";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Construction: return "construction";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Lattice: return "lattice";
    case ErrorKind::InterpolationUnsupported: return "interpolation-unsupported";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Schema: return "schema";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(to_string(kind)) + " error: " + message);
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

std::int64_t floor(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

std::int64_t ceil(const Rational& r) { return -floor(-r); }

Rational mod(const Rational& r, const Rational& period) {
  require(period > 0, ErrorKind::Domain, "modulus must be positive");
  return r - period * Rational(floor(r / period));
}

Rational pow2(int e) {
  require(e > -62 && e < 62, ErrorKind::Domain, "power of two out of range");
  return e >= 0 ? Rational(std::int64_t{1} << e) : Rational(1, std::int64_t{1} << -e);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    fail(ErrorKind::Domain, "malformed rational '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t p = parse_int(text.substr(0, slash), text);
  std::int64_t q = parse_int(text.substr(slash + 1), text);
  require(q != 0, ErrorKind::Domain, "zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

Rational rational_from_dyadic(double x) {
  require(std::isfinite(x), ErrorKind::Domain, "non-finite coordinate");
  for (int j = 0; j <= 30; ++j) {
    double scaled = std::ldexp(x, j);
    if (scaled == std::nearbyint(scaled) && std::fabs(scaled) < 9.0e15)
      return Rational(static_cast<std::int64_t>(scaled), std::int64_t{1} << j);
  }
  fail(ErrorKind::Domain, "coordinate " + std::to_string(x) + " is not an exact dyadic rational");
}

Point to_point(const ExactPoint& p) {
  Point out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = to_double(p[i]);
  return out;
}

ExactPoint add(const ExactPoint& a, const ExactPoint& b) {
  require(a.size() == b.size(), ErrorKind::Domain, "dimension mismatch in point sum");
  ExactPoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ExactPoint negated(const ExactPoint& a) {
  ExactPoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

ExactPoint scaled(const ExactPoint& p, const Rational& factor) {
  ExactPoint out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] * factor;
  return out;
}

}  // namespace lcaframe

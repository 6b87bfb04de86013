#include "semidirect/rational.hpp"

#include <ostream>
#include <sstream>

#include "semidirect/errors.hpp"

namespace semidirect {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotASubspace: return "NotASubspace";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::NotSubmodule: return "NotSubmodule";
    case ErrorKind::NotBimodule: return "NotBimodule";
    case ErrorKind::InvalidCharacter: return "InvalidCharacter";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::GammaIdentityFailed: return "GammaIdentityFailed";
    case ErrorKind::NotADerivation: return "NotADerivation";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::UnknownHypothesis: return "UnknownHypothesis";
    case ErrorKind::WrongConstructionKind: return "WrongConstructionKind";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnresolvedReference: return "UnresolvedReference";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  if (!all_digits(num)) fail(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  if (slash != std::string_view::npos) {
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(den) || den.front() == '0')
      fail(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  mpq_class q;
  q.set_str(std::string(text), 10);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return q_.get_str(10); }

bool Rational::is_integer() const { return q_.get_den() == 1; }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::InternalInvariantViolation, "division by zero");
  q_ /= o.q_;
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  mpq_class t;
  mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
  mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), t.get_mpq_t());
}

void Rational::sub_product(const Rational& a, const Rational& b) {
  mpq_class t;
  mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
  mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), t.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector unit_vector(std::size_t dim, std::size_t index) {
  Vector v(dim);
  v.at(index) = Rational(1);
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector sum of unequal lengths");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector difference of unequal lengths");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vector& y, const Rational& a, const Vector& x) {
  if (y.size() != x.size()) fail(ErrorKind::DimensionMismatch, "axpy of unequal lengths");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i].add_product(a, x[i]);
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace semidirect

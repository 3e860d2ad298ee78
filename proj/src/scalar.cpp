#include "coralg/scalar.hpp"

namespace coralg {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}

std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invm(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("division by zero in GF(p)");
  return powm(a, p - 2, p);  // p prime
}

}  // namespace

Field Field::gf(std::uint64_t p) {
  if (p >= (1ull << 62)) throw std::invalid_argument("prime too large");
  if (!is_prime_u64(p)) throw std::invalid_argument("GF modulus must be prime");
  return Field(Kind::Prime, p);
}

std::string Field::describe() const {
  return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::zero(const Field& f) {
  return f.is_rationals() ? Scalar(mpq_class(0)) : Scalar(0, f.prime());
}

Scalar Scalar::one(const Field& f) {
  return f.is_rationals() ? Scalar(mpq_class(1)) : Scalar(1 % f.prime(), f.prime());
}

Scalar Scalar::from_int(const Field& f, long long n) {
  if (f.is_rationals()) return Scalar(mpq_class(static_cast<long>(n)));
  const std::uint64_t p = f.prime();
  long long r = n % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return Scalar(static_cast<std::uint64_t>(r), p);
}

Scalar Scalar::from_fraction(const Field& f, long long num, long long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return from_int(f, num) / from_int(f, den);
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
  const auto slash = s.find('/');
  if (f.is_rationals()) {
    mpq_class q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
      throw std::invalid_argument("cannot parse rational: '" + s + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
      throw std::domain_error("zero denominator in '" + s + "'");
    q.canonicalize();
    return Scalar(std::move(q));
  }
  auto parse_int = [&](const std::string& t) {
    std::size_t pos = 0;
    const long long v = std::stoll(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("cannot parse residue: '" + t + "'");
    return from_int(f, v);
  };
  if (slash == std::string::npos) return parse_int(s);
  return parse_int(s.substr(0, slash)) / parse_int(s.substr(slash + 1));
}

Field Scalar::field() const {
  if (std::holds_alternative<mpq_class>(v_)) return Field::rationals();
  return Field::gf(res().p);
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return mpq_sgn(q->get_mpq_t()) == 0;
  return res().v == 0;
}

bool Scalar::is_one() const { return *this == one(field()); }

void Scalar::require_same(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index() ||
      (std::holds_alternative<Residue>(a.v_) && a.res().p != b.res().p))
    throw std::logic_error("mixed-field scalar arithmetic");
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(*this, o);
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(*q + o.rat()));
  return Scalar(addm(res().v, o.res().v, res().p), res().p);
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same(*this, o);
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(*q - o.rat()));
  return Scalar(subm(res().v, o.res().v, res().p), res().p);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(*this, o);
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(*q * o.rat()));
  return Scalar(mulm(res().v, o.res().v, res().p), res().p);
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same(*this, o);
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(*q / o.rat()));
  return Scalar(mulm(res().v, invm(o.res().v, res().p), res().p), res().p);
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
  return Scalar(res().v == 0 ? 0 : res().p - res().v, res().p);
}

Scalar Scalar::inverse() const { return one(field()) / *this; }

bool Scalar::operator==(const Scalar& o) const {
  require_same(*this, o);
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == o.rat();
  return res() == o.res();
}

std::string Scalar::str() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  return std::to_string(res().v);
}

}  // namespace coralg

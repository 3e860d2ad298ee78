#ifndef CORALG_SCALAR_HPP
#define CORALG_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace coralg {

/// Ground field of a computation: the rationals, or a prime field GF(p).
class Field {
 public:
  static Field rationals() { return Field(Kind::Rationals, 0); }
  static Field gf(std::uint64_t p);

  bool is_rationals() const { return kind_ == Kind::Rationals; }
  bool is_prime_field() const { return kind_ == Kind::Prime; }
  std::uint64_t prime() const { return p_; }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string describe() const;

 private:
  enum class Kind { Rationals, Prime };
  Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

/// Exact field element: an arbitrary-precision rational in lowest terms with
/// positive denominator, or a residue in [0, p).
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}  // rational zero

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long long n);
  static Scalar from_fraction(const Field& f, long long num, long long den);
  /// Parses "p/q" or "p" (rationals), or an integer residue (GF(p)).
  static Scalar parse(const Field& f, const std::string& s);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "p/q" / "p" for rationals, decimal residue for GF(p).
  std::string str() const;

 private:
  struct Residue {
    std::uint64_t v;
    std::uint64_t p;
    bool operator==(const Residue& o) const { return v == o.v && p == o.p; }
  };

  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  Scalar(std::uint64_t v, std::uint64_t p) : v_(Residue{v, p}) {}

  const mpq_class& rat() const { return std::get<mpq_class>(v_); }
  const Residue& res() const { return std::get<Residue>(v_); }
  static void require_same(const Scalar& a, const Scalar& b);

  std::variant<mpq_class, Residue> v_;
};

}  // namespace coralg

#endif

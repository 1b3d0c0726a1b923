#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "parthopf/core/error.hpp"

namespace parthopf {

/// The base field of a computation: the rationals (characteristic 0) or
/// GF(p) for a prime p.
struct Field {
  std::uint64_t characteristic = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint64_t p) {
    if (p < 2 || !is_prime(p)) {
      throw UnsupportedFieldError("GF(p) requires a prime p, got " + std::to_string(p));
    }
    return Field{p};
  }

  bool is_rational() const { return characteristic == 0; }

  /// True when the integer n is zero in this field.
  bool divides(std::uint64_t n) const { return characteristic != 0 && n % characteristic == 0; }

  /// "q" or "gf:<p>", the same spelling the command line accepts.
  std::string to_string() const {
    return is_rational() ? std::string("q") : "gf:" + std::to_string(characteristic);
  }

  static Field parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.substr(0, 3) == "gf:") {
      try {
        return prime(std::stoull(std::string(text.substr(3))));
      } catch (const std::invalid_argument&) {
      } catch (const std::out_of_range&) {
      }
    }
    throw StructuralError("unknown field '" + std::string(text) + "' (expected q or gf:<p>)");
  }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  static bool is_prime(std::uint64_t p) {
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  }
};

/// An exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field field, long value) : Scalar(field, mpq_class(value)) {}
  Scalar(Field field, long num, long den) : Scalar(field, make_fraction(num, den)) {}

  Scalar(Field field, const mpq_class& value) : p_(field.characteristic) {
    if (p_ == 0) {
      q_ = value;
      q_.canonicalize();
    } else {
      r_ = reduce(value);
    }
  }

  static Scalar zero(Field field) { return Scalar(field, 0L); }
  static Scalar one(Field field) { return Scalar(field, 1L); }

  Field field() const { return Field{p_}; }
  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }

  /// The rational value; only meaningful over Q.
  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

  Scalar& operator+=(const Scalar& o) {
    check(o);
    if (p_ == 0) {
      q_ += o.q_;
    } else {
      r_ = (r_ + o.r_) % p_;
    }
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    check(o);
    if (p_ == 0) {
      q_ -= o.q_;
    } else {
      r_ = (r_ + p_ - o.r_) % p_;
    }
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    check(o);
    if (p_ == 0) {
      q_ *= o.q_;
    } else {
      r_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r_) * o.r_) % p_);
    }
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    check(o);
    if (o.is_zero()) throw StructuralError("division by zero");
    if (p_ == 0) {
      q_ /= o.q_;
    } else {
      *this *= o.inverse();
    }
    return *this;
  }

  Scalar inverse() const {
    if (is_zero()) throw StructuralError("inverse of zero");
    Scalar out = *this;
    if (p_ == 0) {
      out.q_ = 1 / q_;
    } else {
      out.r_ = pow_mod(r_, p_ - 2, p_);
    }
    return out;
  }

  Scalar operator-() const {
    Scalar out = *this;
    if (p_ == 0) {
      out.q_ = -q_;
    } else {
      out.r_ = (p_ - r_) % p_;
    }
    return out;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    a.check(b);
    return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
  }

  /// "num/den" (or just "num") over Q; "r mod p" over GF(p).
  std::string to_string() const {
    if (p_ == 0) return q_.get_str();
    return std::to_string(r_) + " mod " + std::to_string(p_);
  }

  /// Accepts "3", "-1/2", or "r mod p". A residue string must name the
  /// field's own prime.
  static Scalar parse(Field field, std::string_view text) {
    std::string s(text);
    auto mod = s.find(" mod ");
    if (mod != std::string::npos) {
      std::uint64_t p = 0;
      try {
        p = std::stoull(s.substr(mod + 5));
      } catch (const std::exception&) {
        throw StructuralError("malformed residue '" + s + "'");
      }
      if (p != field.characteristic) {
        throw StructuralError("scalar '" + s + "' does not belong to field " + field.to_string());
      }
      s = s.substr(0, mod);
    }
    mpq_class value;
    if (s.empty() || value.set_str(s, 10) != 0) {
      throw StructuralError("malformed scalar '" + std::string(text) + "'");
    }
    if (value.get_den() == 0) throw StructuralError("zero denominator in '" + s + "'");
    return Scalar(field, value);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  static mpq_class make_fraction(long num, long den) {
    if (den == 0) throw StructuralError("zero denominator");
    mpq_class q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
  }

  std::uint64_t reduce(const mpq_class& value) const {
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class num = value.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = value.get_den() % p;
    if (den == 0) {
      throw UnsupportedFieldError("denominator " + value.get_den().get_str() +
                                  " vanishes in GF(" + std::to_string(p_) + ")");
    }
    std::uint64_t n = num.get_ui();
    std::uint64_t d = den.get_ui();
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(n) * pow_mod(d, p_ - 2, p_)) % p_);
  }

  static std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    unsigned __int128 result = 1;
    unsigned __int128 b = base % mod;
    while (exp > 0) {
      if (exp & 1U) result = (result * b) % mod;
      b = (b * b) % mod;
      exp >>= 1U;
    }
    return static_cast<std::uint64_t>(result);
  }

  void check(const Scalar& o) const {
    if (p_ != o.p_) {
      throw StructuralError("scalars from different fields: " + Field{p_}.to_string() + " vs " +
                            Field{o.p_}.to_string());
    }
  }

  std::uint64_t p_ = 0;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

}  // namespace parthopf

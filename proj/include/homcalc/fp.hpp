#pragma once

#include <cstdint>
#include <ostream>

#include "homcalc/error.hpp"

namespace homcalc {

/// Raw residue arithmetic. All arguments are canonical residues in [0, p).
namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

inline std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

/// Inverse of a nonzero residue (Fermat).
inline std::uint32_t inv(std::uint32_t a, std::uint32_t p) { return pow(a, p - 2, p); }

/// Canonical residue of an arbitrary signed integer.
inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

bool is_prime(std::uint64_t n);

constexpr std::uint32_t kMaxPrime = 2147483647u;

}  // namespace fp

/// An element of the prime field F_p.
class Fp {
 public:
  Fp(std::uint32_t p, std::int64_t v) : p_(p), v_(fp::reduce(v, p)) {
    if (p < 2 || p > fp::kMaxPrime) throw Error(ErrorCode::NotPrime, "characteristic out of range");
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(Fp o) const { check(o); return raw(fp::add(v_, o.v_, p_)); }
  Fp operator-(Fp o) const { check(o); return raw(fp::sub(v_, o.v_, p_)); }
  Fp operator*(Fp o) const { check(o); return raw(fp::mul(v_, o.v_, p_)); }
  Fp operator-() const { return raw(fp::neg(v_, p_)); }
  Fp operator/(Fp o) const { return *this * o.inverse(); }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
    return raw(fp::inv(v_, p_));
  }

  bool operator==(const Fp&) const = default;

  friend std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.v_; }

 private:
  Fp raw(std::uint32_t v) const {
    Fp r = *this;
    r.v_ = v;
    return r;
  }
  void check(Fp o) const {
    if (o.p_ != p_) throw Error(ErrorCode::DimensionMismatch, "mixed characteristics");
  }

  std::uint32_t p_;
  std::uint32_t v_;
};

}  // namespace homcalc

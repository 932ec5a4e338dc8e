#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace exhopf {

using Coeff = std::uint32_t;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Arithmetic in F_p for small primes. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(unsigned p) : p_(p) {
    if (!is_prime(p) || p > 251)
      throw FieldError("unsupported characteristic " + std::to_string(p));
  }

  unsigned p() const { return p_; }

  Coeff reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Coeff>(r);
  }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const { return static_cast<Coeff>((a * b) % p_); }

  Coeff pow(Coeff a, unsigned long long e) const {
    Coeff r = 1 % p_;
    Coeff b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  Coeff inv(Coeff a) const {
    if (a == 0) throw FieldError("inverse of zero");
    return pow(a, p_ - 2);
  }

  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  /// Representative in (-p/2, p/2], used for human-facing output.
  long long symmetric(Coeff a) const {
    return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  unsigned p_;
};

/// Binomial coefficient mod p via Lucas.
inline Coeff binomial_mod(unsigned long long n, unsigned long long k, unsigned p) {
  if (k > n) return 0;
  unsigned long long r = 1;
  while (n || k) {
    unsigned a = static_cast<unsigned>(n % p), b = static_cast<unsigned>(k % p);
    if (b > a) return 0;
    unsigned long long num = 1, den = 1;
    for (unsigned i = 0; i < b; ++i) {
      num = num * (a - i) % p;
      den = den * (i + 1) % p;
    }
    unsigned long long inv = 1, base = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    r = r * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<Coeff>(r);
}

}  // namespace exhopf

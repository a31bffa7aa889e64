#ifndef DEFV_FP_HPP
#define DEFV_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace defv {

// Base error type for all domain failures (ownership mismatches, bad
// shapes, exhausted bounds). Parse errors carry positions separately.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// The prime field F_p. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(uint32_t p) : p_(p) {
    if (!is_prime(p)) throw error("characteristic " + std::to_string(p) + " is not prime");
  }

  uint32_t p() const { return p_; }

  uint32_t reduce(int64_t a) const {
    int64_t r = a % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }
  uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p_; }
  uint32_t sub(uint32_t a, uint32_t b) const { return (a + p_ - b) % p_; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
  }
  uint32_t pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1 % p_;
    uint32_t base = a % p_;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  uint32_t inv(uint32_t a) const {
    a %= p_;
    if (a == 0) throw error("division by zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

  static bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  uint32_t p_;
};

// Exponent arithmetic that refuses to wrap.
inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw error("exponent overflow in addition");
  return r;
}
inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw error("exponent overflow in multiplication");
  return r;
}

}  // namespace defv

#endif

#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace logtor {

// Prime-field scalar satisfying the field interface of the polynomial
// templates, so the elimination machinery runs unchanged over F_p.  The
// modulus is a thread-local setting installed with FpModulusGuard.
class FpScalar {
 public:
  FpScalar() : v_(0) {}
  FpScalar(int x) {  // NOLINT(google-explicit-constructor)
    long long r = x % static_cast<long long>(p_);
    v_ = static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  static FpScalar from_raw(std::uint32_t v) {
    FpScalar s;
    s.v_ = v % p_;
    return s;
  }

  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FpScalar operator-() const { return from_raw(v_ == 0 ? 0 : p_ - v_); }
  FpScalar& operator+=(const FpScalar& o) {
    v_ = (v_ + o.v_) % p_;
    return *this;
  }
  FpScalar& operator-=(const FpScalar& o) {
    v_ = (v_ + p_ - o.v_) % p_;
    return *this;
  }
  friend FpScalar operator+(FpScalar a, const FpScalar& b) { return a += b; }
  friend FpScalar operator-(FpScalar a, const FpScalar& b) { return a -= b; }
  friend FpScalar operator*(const FpScalar& a, const FpScalar& b) {
    return from_raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % p_));
  }
  friend FpScalar operator/(const FpScalar& a, const FpScalar& b) {
    if (b.v_ == 0) throw std::domain_error("FpScalar: division by zero");
    std::uint64_t base = b.v_, acc = 1;
    std::uint32_t e = p_ - 2;  // Fermat inverse
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return a * from_raw(static_cast<std::uint32_t>(acc));
  }
  friend bool operator==(const FpScalar& a, const FpScalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const FpScalar& a, const FpScalar& b) { return a.v_ != b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const FpScalar& a) { return os << a.v_; }

  static std::uint32_t modulus() { return p_; }
  static void set_modulus(std::uint32_t p) {
    if (p < 3) throw std::invalid_argument("FpScalar: modulus too small");
    p_ = p;
  }

 private:
  std::uint32_t v_;
  static thread_local std::uint32_t p_;
};

inline bool is_zero(const FpScalar& x) { return x.is_zero(); }
inline FpScalar exact_div(const FpScalar& a, const FpScalar& b) { return a / b; }

struct FpModulusGuard {
  std::uint32_t saved;
  explicit FpModulusGuard(std::uint32_t p) : saved(FpScalar::modulus()) { FpScalar::set_modulus(p); }
  ~FpModulusGuard() { FpScalar::set_modulus(saved); }
};

}  // namespace logtor

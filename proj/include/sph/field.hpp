#pragma once

// Exact field scalars: arbitrary-precision rationals (characteristic 0,
// via GMP) and prime fields F_p with p < 2^31.  Scalars serialize as
// decimal strings ("3", "-5/7") so certificates are portable.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace sph {

struct FieldSpec {
  // 0 means the rationals, otherwise a prime p.
  std::uint64_t characteristic = 0;
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline void validate_field(const FieldSpec& f) {
  if (f.characteristic == 0) return;
  if (f.characteristic >= (std::uint64_t{1} << 31))
    throw std::invalid_argument("field characteristic must be < 2^31");
  if (!is_prime_u64(f.characteristic))
    throw std::invalid_argument("field characteristic must be 0 or prime");
}

class Rat {
 public:
  Rat() : v_(0) {}
  explicit Rat(long n) : v_(n) {}
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rat zero() { return Rat(); }
  static Rat one() { return Rat(1); }
  static FieldSpec field() { return FieldSpec{0}; }

  static Rat from_string(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return Rat(q);
  }
  std::string to_string() const { return v_.get_str(); }

  bool is_zero() const { return sgn(v_) == 0; }

  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return Rat(mpq_class(1 / v_));
  }
  Rat operator/(const Rat& o) const { return *this * o.inv(); }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }

 private:
  mpq_class v_;
};

// Prime-field scalar.  The modulus is process-global: the engine works
// over a single field per run (the CLI sets it once from the config),
// and tests set it explicitly before constructing values.
class Fp {
 public:
  Fp() : v_(0) {}
  explicit Fp(long n) {
    std::int64_t m = static_cast<std::int64_t>(modulus());
    std::int64_t r = n % m;
    if (r < 0) r += m;
    v_ = static_cast<std::uint64_t>(r);
  }

  static void set_modulus(std::uint64_t p) {
    FieldSpec f{p};
    if (p == 0) throw std::invalid_argument("F_p modulus must be prime");
    validate_field(f);
    modulus_ref() = p;
  }
  static std::uint64_t modulus() {
    if (modulus_ref() == 0) throw std::logic_error("F_p modulus not set");
    return modulus_ref();
  }

  static Fp zero() { return Fp(); }
  static Fp one() { return Fp(1); }
  static FieldSpec field() { return FieldSpec{modulus()}; }

  static Fp from_string(const std::string& s) {
    // Accept "a" or "a/b" so the shared scalar encoding round-trips.
    auto slash = s.find('/');
    if (slash == std::string::npos) return from_integer_string(s);
    Fp num = from_integer_string(s.substr(0, slash));
    Fp den = from_integer_string(s.substr(slash + 1));
    return num / den;
  }
  std::string to_string() const { return std::to_string(v_); }

  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const { return make((v_ + o.v_) % modulus()); }
  Fp operator-(const Fp& o) const {
    return make((v_ + modulus() - o.v_) % modulus());
  }
  Fp operator*(const Fp& o) const { return make((v_ * o.v_) % modulus()); }
  Fp operator-() const { return make(v_ == 0 ? 0 : modulus() - v_); }
  Fp inv() const {
    if (v_ == 0) throw std::domain_error("division by zero");
    return pow(modulus() - 2);
  }
  Fp operator/(const Fp& o) const { return *this * o.inv(); }

  bool operator==(const Fp& o) const { return v_ == o.v_; }
  bool operator!=(const Fp& o) const { return v_ != o.v_; }

  std::uint64_t value() const { return v_; }

 private:
  static std::uint64_t& modulus_ref() {
    static std::uint64_t p = 0;
    return p;
  }
  static Fp make(std::uint64_t raw) {
    Fp r;
    r.v_ = raw;
    return r;
  }
  static Fp from_integer_string(const std::string& s) {
    mpz_class z(s);
    mpz_class m(static_cast<unsigned long>(modulus()));
    mpz_class r = z % m;
    if (r < 0) r += m;
    return make(r.get_ui());
  }
  Fp pow(std::uint64_t e) const {
    Fp base = *this, acc = one();
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  std::uint64_t v_;
};

}  // namespace sph

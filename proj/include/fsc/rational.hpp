#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace fsc {

// Exact rational scalar. Thin plain-value wrapper around mpq_class: gmpxx
// operators return expression templates, which collide with Eigen's own
// expression system, so every operator here returns a materialized Rat.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}                     // NOLINT: implicit by design
  Rat(long n) : v_(static_cast<long>(n)) {} // NOLINT
  Rat(long long n) { v_ = mpz_class(std::to_string(n)); }
  Rat(long num, long den) : v_(mpq_class(num, den)) { v_.canonicalize(); }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rat from_string(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return Rat(q);
  }

  const mpq_class& raw() const { return v_; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { v_ /= o.v_; return *this; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ / b.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  // Largest integer <= value and smallest integer >= value.
  long floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q.get_si();
  }
  long ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q.get_si();
  }

  std::string str() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.v_.get_str();
}

inline Rat abs(const Rat& r) { return r < Rat(0) ? -r : r; }

}  // namespace fsc

namespace Eigen {
template <>
struct NumTraits<fsc::Rat> : GenericNumTraits<fsc::Rat> {
  typedef fsc::Rat Real;
  typedef fsc::Rat NonInteger;
  typedef fsc::Rat Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40,
  };
  static inline Real epsilon() { return fsc::Rat(0); }
  static inline Real dummy_precision() { return fsc::Rat(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

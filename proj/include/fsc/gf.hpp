#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <string>

#include "fsc/errors.hpp"

namespace fsc {

// Prime-field scalar with a runtime modulus. A default-constructed element
// (or one built from a bare integer) carries modulus 0, meaning "integer
// literal not yet attached to a field"; it adopts the modulus of the first
// partner it meets. Mixing two distinct nonzero moduli is an input error.
class GF {
 public:
  GF() : v_(0), p_(0) {}
  GF(int n) : v_(n), p_(0) {}        // NOLINT: implicit for Eigen literals
  GF(long n) : v_(n), p_(0) {}       // NOLINT
  GF(long long n) : v_(n), p_(0) {}  // NOLINT

  static GF make(long long v, long long p) {
    if (p < 2) throw input_error("GF modulus must be a prime >= 2");
    GF g;
    g.p_ = p;
    g.v_ = norm(v, p);
    return g;
  }

  long long value() const { return v_; }
  long long modulus() const { return p_; }

  bool is_zero() const { return p_ ? v_ % p_ == 0 : v_ == 0; }

  friend GF operator+(const GF& a, const GF& b) {
    long long p = join(a, b);
    return fixed(a.rep(p) + b.rep(p), p);
  }
  friend GF operator-(const GF& a, const GF& b) {
    long long p = join(a, b);
    return fixed(a.rep(p) - b.rep(p), p);
  }
  friend GF operator*(const GF& a, const GF& b) {
    long long p = join(a, b);
    return fixed(a.rep(p) * b.rep(p), p);
  }
  friend GF operator/(const GF& a, const GF& b) {
    long long p = join(a, b);
    if (p == 0) throw input_error("division of bare GF literals");
    return fixed(a.rep(p) * inverse(b.rep(p), p), p);
  }
  GF operator-() const { return p_ ? fixed(-v_, p_) : GF(-v_); }

  GF& operator+=(const GF& o) { return *this = *this + o; }
  GF& operator-=(const GF& o) { return *this = *this - o; }
  GF& operator*=(const GF& o) { return *this = *this * o; }
  GF& operator/=(const GF& o) { return *this = *this / o; }

  friend bool operator==(const GF& a, const GF& b) {
    long long p = join(a, b);
    if (p == 0) return a.v_ == b.v_;
    return a.rep(p) == b.rep(p);
  }
  friend bool operator!=(const GF& a, const GF& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const GF& g) {
    return os << (g.p_ ? norm(g.v_, g.p_) : g.v_);
  }

  std::string str() const { return std::to_string(p_ ? norm(v_, p_) : v_); }

 private:
  static long long norm(long long v, long long p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
  }
  static GF fixed(long long v, long long p) {
    GF g;
    g.p_ = p;
    g.v_ = p ? norm(v, p) : v;
    return g;
  }
  long long rep(long long p) const { return p ? norm(v_, p) : v_; }
  static long long join(const GF& a, const GF& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_)
      throw input_error("mixed prime fields: F_" + std::to_string(a.p_) +
                        " vs F_" + std::to_string(b.p_));
    return a.p_ ? a.p_ : b.p_;
  }
  static long long inverse(long long a, long long p) {
    a = norm(a, p);
    if (a == 0) throw consistency_error("division by zero in F_" + std::to_string(p));
    // extended Euclid
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    return norm(t, p);
  }

  long long v_;
  long long p_;
};

inline GF abs(const GF& g) { return g; }

}  // namespace fsc

namespace Eigen {
template <>
struct NumTraits<fsc::GF> : GenericNumTraits<fsc::GF> {
  typedef fsc::GF Real;
  typedef fsc::GF NonInteger;
  typedef fsc::GF Nested;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 6,
  };
  static inline Real epsilon() { return fsc::GF(0); }
  static inline Real dummy_precision() { return fsc::GF(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

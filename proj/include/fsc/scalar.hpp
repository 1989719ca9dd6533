#pragma once

#include <string>

#include "fsc/gf.hpp"
#include "fsc/rational.hpp"

namespace fsc {

// Uniform hooks so the whole stack can be templated on the scalar type.

inline long long field_char(const Rat&) { return 0; }
inline long long field_char(const GF& g) { return g.modulus(); }

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
  static constexpr bool is_prime_field = false;
  // p is ignored; present for signature uniformity.
  static Rat make(long long n, long long /*p*/) { return Rat(n); }
  static std::string field_name(long long /*p*/) { return "Q"; }
};

template <>
struct scalar_traits<GF> {
  static constexpr bool is_prime_field = true;
  static GF make(long long n, long long p) { return GF::make(n, p); }
  static std::string field_name(long long p) { return "F_" + std::to_string(p); }
};

template <class S>
bool is_zero(const S& s) { return s.is_zero(); }

}  // namespace fsc

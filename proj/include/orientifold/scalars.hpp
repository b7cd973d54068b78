#pragma once
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include <Eigen/Core>

#include "orientifold/errors.hpp"

namespace orientifold {

// Comparison tolerance used by every floating-point equality in the library.
inline constexpr double kFloatTol = 1e-9;

namespace detail {
inline long long checked_narrow(__int128 v, const char* ctx) {
  require(v <= INT64_MAX && v >= INT64_MIN, Error::Code::Internal,
          std::string("integer overflow in ") + ctx);
  return static_cast<long long>(v);
}
}  // namespace detail

// Exact rational with 64-bit numerator/denominator. All intermediates go
// through __int128 and are overflow-checked; the values arising from the
// constructions in this library stay tiny.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    require(den != 0, Error::Code::Internal, "rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  static Rat make128(__int128 n, __int128 d) {
    require(d != 0, Error::Code::Internal, "rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    Rat r;
    r.num = detail::checked_narrow(n, "rational reduce");
    r.den = detail::checked_narrow(d, "rational reduce");
    return r;
  }

  friend Rat operator+(const Rat& x, const Rat& y) {
    return make128((__int128)x.num * y.den + (__int128)y.num * x.den,
                   (__int128)x.den * y.den);
  }
  friend Rat operator-(const Rat& x, const Rat& y) {
    return make128((__int128)x.num * y.den - (__int128)y.num * x.den,
                   (__int128)x.den * y.den);
  }
  friend Rat operator*(const Rat& x, const Rat& y) {
    return make128((__int128)x.num * y.num, (__int128)x.den * y.den);
  }
  friend Rat operator/(const Rat& x, const Rat& y) {
    require(y.num != 0, Error::Code::Internal, "rational division by zero");
    return make128((__int128)x.num * y.den, (__int128)x.den * y.num);
  }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
  Rat& operator+=(const Rat& y) { *this = *this + y; return *this; }
  Rat& operator-=(const Rat& y) { *this = *this - y; return *this; }
  Rat& operator*=(const Rat& y) { *this = *this * y; return *this; }
  Rat& operator/=(const Rat& y) { *this = *this / y; return *this; }

  friend bool operator==(const Rat& x, const Rat& y) {
    return x.num == y.num && x.den == y.den;
  }
  friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
  friend bool operator<(const Rat& x, const Rat& y) {
    return (__int128)x.num * y.den < (__int128)y.num * x.den;
  }
  friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
  friend bool operator<=(const Rat& x, const Rat& y) { return !(y < x); }
  friend bool operator>=(const Rat& x, const Rat& y) { return !(x < y); }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
  double to_double() const { return double(num) / double(den); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    os << r.num;
    if (r.den != 1) os << '/' << r.den;
    return os;
  }
};

// Element of Q(sqrt2): a + b*sqrt(2). A field, so exact elimination and
// matrix inverses are available. Spin lifts of signed permutation rotations
// have coefficients of the form (a + b*sqrt2)/2^k, all representable here.
struct Exact {
  Rat a;  // rational part
  Rat b;  // coefficient of sqrt(2)

  Exact() = default;
  Exact(long long n) : a(n), b(0) {}
  Exact(const Rat& ra) : a(ra), b(0) {}
  Exact(const Rat& ra, const Rat& rb) : a(ra), b(rb) {}

  static Exact sqrt2() { return Exact(Rat(0), Rat(1)); }

  friend Exact operator+(const Exact& x, const Exact& y) { return {x.a + y.a, x.b + y.b}; }
  friend Exact operator-(const Exact& x, const Exact& y) { return {x.a - y.a, x.b - y.b}; }
  friend Exact operator*(const Exact& x, const Exact& y) {
    return {x.a * y.a + Rat(2) * (x.b * y.b), x.a * y.b + x.b * y.a};
  }
  friend Exact operator/(const Exact& x, const Exact& y) {
    // 1/(a+b s) = (a-b s)/(a^2-2 b^2); the norm vanishes only at zero.
    Rat nrm = y.a * y.a - Rat(2) * (y.b * y.b);
    require(!nrm.is_zero(), Error::Code::Internal, "division by zero in Q(sqrt2)");
    Exact conj{y.a, -y.b};
    Exact t = x * conj;
    return {t.a / nrm, t.b / nrm};
  }
  Exact operator-() const { return {-a, -b}; }
  Exact& operator+=(const Exact& y) { *this = *this + y; return *this; }
  Exact& operator-=(const Exact& y) { *this = *this - y; return *this; }
  Exact& operator*=(const Exact& y) { *this = *this * y; return *this; }
  Exact& operator/=(const Exact& y) { *this = *this / y; return *this; }

  friend bool operator==(const Exact& x, const Exact& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Exact& x, const Exact& y) { return !(x == y); }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  // Sign of a + b*sqrt2, decided exactly.
  int sign() const {
    int sa = a.num > 0 ? 1 : (a.num < 0 ? -1 : 0);
    int sb = b.num > 0 ? 1 : (b.num < 0 ? -1 : 0);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with 2 b^2
    Rat a2 = a * a, b22 = Rat(2) * b * b;
    if (a2 == b22) return 0;
    return (a2 > b22) ? sa : sb;
  }

  double to_double() const { return a.to_double() + b.to_double() * std::sqrt(2.0); }

  friend std::ostream& operator<<(std::ostream& os, const Exact& x) {
    if (x.b.is_zero()) return os << x.a;
    if (x.a.is_zero()) return os << x.b << "*s2";
    return os << '(' << x.a << (x.b.num > 0 ? "+" : "") << x.b << "*s2)";
  }
};

// Complexification of Exact.
struct CExact {
  Exact re, im;

  CExact() = default;
  CExact(long long n) : re(n), im(0) {}
  CExact(const Exact& r) : re(r), im() {}
  CExact(const Exact& r, const Exact& i) : re(r), im(i) {}

  static CExact i() { return {Exact(0), Exact(1)}; }

  friend CExact operator+(const CExact& x, const CExact& y) { return {x.re + y.re, x.im + y.im}; }
  friend CExact operator-(const CExact& x, const CExact& y) { return {x.re - y.re, x.im - y.im}; }
  friend CExact operator*(const CExact& x, const CExact& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend CExact operator/(const CExact& x, const CExact& y) {
    Exact nrm = y.re * y.re + y.im * y.im;
    require(!nrm.is_zero(), Error::Code::Internal, "complex division by zero");
    CExact t = x * CExact{y.re, -y.im};
    return {t.re / nrm, t.im / nrm};
  }
  CExact operator-() const { return {-re, -im}; }
  CExact& operator+=(const CExact& y) { *this = *this + y; return *this; }
  CExact& operator-=(const CExact& y) { *this = *this - y; return *this; }
  CExact& operator*=(const CExact& y) { *this = *this * y; return *this; }

  friend bool operator==(const CExact& x, const CExact& y) { return x.re == y.re && x.im == y.im; }
  friend bool operator!=(const CExact& x, const CExact& y) { return !(x == y); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  CExact conj() const { return {re, -im}; }

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  friend std::ostream& operator<<(std::ostream& os, const CExact& x) {
    if (x.im.is_zero()) return os << x.re;
    return os << '(' << x.re << ") + (" << x.im << ")*i";
  }
};

// Element of the rational circle Q/Z, written additively: a reduced fraction
// in [0,1). Value 1/2 corresponds to -1 in U(1), and the eps-twisted action
// is negation mod 1.
struct Turn {
  long long num = 0;
  long long den = 1;

  Turn() = default;
  Turn(long long n, long long d) : num(n), den(d) { normalize(); }
  static Turn zero() { return Turn(); }
  static Turn half() { return Turn(1, 2); }

  void normalize() {
    require(den > 0, Error::Code::Internal, "turn with nonpositive denominator");
    num %= den;
    if (num < 0) num += den;
    long long g = std::gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  friend Turn operator+(const Turn& x, const Turn& y) {
    __int128 d = (__int128)x.den * y.den;
    __int128 n = (__int128)x.num * y.den + (__int128)y.num * x.den;
    n %= d;
    if (n < 0) n += d;
    __int128 a = n, b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    Turn t;
    t.num = detail::checked_narrow(n, "turn add");
    t.den = detail::checked_narrow(d, "turn add");
    if (t.num == 0) t.den = 1;
    return t;
  }
  friend Turn operator-(const Turn& x, const Turn& y) { return x + (-y); }
  Turn operator-() const { Turn t; t.den = den; t.num = num == 0 ? 0 : den - num; return t; }
  Turn& operator+=(const Turn& y) { *this = *this + y; return *this; }
  Turn& operator-=(const Turn& y) { *this = *this - y; return *this; }

  // n-fold sum (n may be negative).
  friend Turn operator*(long long k, const Turn& t) {
    __int128 n = (__int128)k * t.num;
    __int128 d = t.den;
    n %= d;
    if (n < 0) n += d;
    __int128 a = n, b = d;
    while (b) { __int128 q = a % b; a = b; b = q; }
    if (a > 1) { n /= a; d /= a; }
    Turn r;
    r.num = detail::checked_narrow(n, "turn scale");
    r.den = detail::checked_narrow(d, "turn scale");
    if (r.num == 0) r.den = 1;
    return r;
  }

  friend bool operator==(const Turn& x, const Turn& y) { return x.num == y.num && x.den == y.den; }
  friend bool operator!=(const Turn& x, const Turn& y) { return !(x == y); }
  friend bool operator<(const Turn& x, const Turn& y) {
    return (__int128)x.num * y.den < (__int128)y.num * x.den;
  }

  bool is_zero() const { return num == 0; }
  Rat to_rat() const { return Rat(num, den); }  // canonical lift into [0,1)
  double to_double() const { return double(num) / double(den); }

  // The point on U(1); cos/sin of eighth-turns lie in Q(sqrt2).
  CExact to_phase() const {
    require(8 % den == 0, Error::Code::DenominatorBoundExceeded,
            "exact phase needs denominator dividing 8");
    static const Exact r2h{Rat(0), Rat(1, 2)};  // sqrt2/2
    static const Exact c[8] = {Exact(1), r2h, Exact(0), -r2h, Exact(-1), -r2h, Exact(0), r2h};
    static const Exact s[8] = {Exact(0), r2h, Exact(1), r2h, Exact(0), -r2h, Exact(-1), -r2h};
    long long k = num * (8 / den);
    return {c[k % 8], s[k % 8]};
  }

  friend std::ostream& operator<<(std::ostream& os, const Turn& t) {
    os << t.num << '/' << t.den;
    return os;
  }
};

// Free functions Eigen locates by ADL for its scalar plumbing.
inline Exact conj(const Exact& x) { return x; }
inline Exact real(const Exact& x) { return x; }
inline Exact imag(const Exact&) { return Exact(0); }
inline Exact abs2(const Exact& x) { return x * x; }
inline CExact conj(const CExact& x) { return x.conj(); }
inline Exact real(const CExact& x) { return x.re; }
inline Exact imag(const CExact& x) { return x.im; }
inline Exact abs2(const CExact& x) { return x.re * x.re + x.im * x.im; }
inline Rat conj(const Rat& x) { return x; }
inline Rat real(const Rat& x) { return x; }
inline Rat imag(const Rat&) { return Rat(0); }
inline Rat abs2(const Rat& x) { return x * x; }

// --- scalar trait glue -----------------------------------------------------
//
// The algebra templates below take any of: Exact, CExact, double,
// std::complex<double>. ScalarOps provides the few operations whose meaning
// differs between exact and floating scalars.

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Exact> {
  static constexpr bool is_exact = true;
  static constexpr bool is_complex = false;
  static Exact conj(const Exact& x) { return x; }
  static bool is_zero(const Exact& x) { return x.is_zero(); }
  static bool eq(const Exact& x, const Exact& y) { return x == y; }
  static Exact from_int(long long n) { return Exact(n); }
  static double abs(const Exact& x) { return std::abs(x.to_double()); }
};

template <>
struct ScalarOps<CExact> {
  static constexpr bool is_exact = true;
  static constexpr bool is_complex = true;
  static CExact conj(const CExact& x) { return x.conj(); }
  static bool is_zero(const CExact& x) { return x.is_zero(); }
  static bool eq(const CExact& x, const CExact& y) { return x == y; }
  static CExact from_int(long long n) { return CExact(n); }
  static double abs(const CExact& x) { return std::abs(x.to_complex()); }
};

template <>
struct ScalarOps<double> {
  static constexpr bool is_exact = false;
  static constexpr bool is_complex = false;
  static double conj(double x) { return x; }
  static bool is_zero(double x) { return std::abs(x) <= kFloatTol; }
  static bool eq(double x, double y) { return std::abs(x - y) <= kFloatTol; }
  static double from_int(long long n) { return double(n); }
  static double abs(double x) { return std::abs(x); }
};

template <>
struct ScalarOps<std::complex<double>> {
  static constexpr bool is_exact = false;
  static constexpr bool is_complex = true;
  static std::complex<double> conj(const std::complex<double>& x) { return std::conj(x); }
  static bool is_zero(const std::complex<double>& x) { return std::abs(x) <= kFloatTol; }
  static bool eq(const std::complex<double>& x, const std::complex<double>& y) {
    return std::abs(x - y) <= kFloatTol;
  }
  static std::complex<double> from_int(long long n) { return {double(n), 0.0}; }
  static double abs(const std::complex<double>& x) { return std::abs(x); }
};

}  // namespace orientifold

// Eigen scalar registration for the exact types.
namespace Eigen {
template <>
struct NumTraits<orientifold::Rat> : GenericNumTraits<orientifold::Rat> {
  typedef orientifold::Rat Real;
  typedef orientifold::Rat NonInteger;
  typedef orientifold::Rat Nested;
  typedef orientifold::Rat Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4,
  };
  static inline Real epsilon() { return orientifold::Rat(0); }
  static inline Real dummy_precision() { return orientifold::Rat(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<orientifold::Exact> : GenericNumTraits<orientifold::Exact> {
  typedef orientifold::Exact Real;
  typedef orientifold::Exact NonInteger;
  typedef orientifold::Exact Nested;
  typedef orientifold::Exact Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 8,
  };
  static inline Real epsilon() { return orientifold::Exact(0); }
  static inline Real dummy_precision() { return orientifold::Exact(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<orientifold::CExact> : GenericNumTraits<orientifold::CExact> {
  typedef orientifold::Exact Real;
  typedef orientifold::CExact NonInteger;
  typedef orientifold::CExact Nested;
  typedef orientifold::CExact Literal;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 16,
    MulCost = 16,
  };
  static inline Real epsilon() { return orientifold::Exact(0); }
  static inline Real dummy_precision() { return orientifold::Exact(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

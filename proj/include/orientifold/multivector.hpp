#pragma once
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "orientifold/scalars.hpp"

namespace orientifold {

// Element of Cl_n (or its complexification, depending on the scalar type).
// Terms are stored as blade bitmask -> coefficient, bit i set meaning the
// basis vector e_{i+1} participates. Multiplication uses the relations
// e_i^2 = -1, e_i e_j = -e_j e_i.
template <class S>
class MultiVector {
 public:
  using Scalar = S;
  using TermMap = std::map<std::uint32_t, S>;

  MultiVector() : n_(0) {}
  explicit MultiVector(int n) : n_(n) {}

  static MultiVector scalar(int n, const S& c) {
    MultiVector m(n);
    m.add_term(0u, c);
    return m;
  }
  static MultiVector one(int n) { return scalar(n, ScalarOps<S>::from_int(1)); }

  // Basis vector e_i, 1-based.
  static MultiVector e(int n, int i) {
    MultiVector m(n);
    m.add_term(1u << (i - 1), ScalarOps<S>::from_int(1));
    return m;
  }

  static MultiVector blade(int n, const std::vector<int>& idx, const S& c) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= (1u << (i - 1));
    MultiVector m(n);
    m.add_term(mask, c);
    return m;
  }

  int dim() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coeff(std::uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? S{} : it->second;
  }
  S scalar_part() const { return coeff(0u); }

  void add_term(std::uint32_t mask, const S& c) {
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
      if (!ScalarOps<S>::is_zero(c)) terms_.emplace(mask, c);
    } else {
      it->second += c;
      if (ScalarOps<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

  friend MultiVector operator+(const MultiVector& x, const MultiVector& y) {
    require(x.n_ == y.n_, Error::Code::DimensionMismatch, "multivector dimensions differ");
    MultiVector r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, c);
    return r;
  }
  friend MultiVector operator-(const MultiVector& x, const MultiVector& y) {
    require(x.n_ == y.n_, Error::Code::DimensionMismatch, "multivector dimensions differ");
    MultiVector r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, -c);
    return r;
  }
  MultiVector operator-() const {
    MultiVector r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend MultiVector operator*(const S& c, const MultiVector& x) {
    MultiVector r(x.n_);
    for (const auto& [m, v] : x.terms_) r.add_term(m, c * v);
    return r;
  }

  // Sign accumulated when multiplying basis blades a and b into
  // the blade a^b: anticommutation swaps plus e_i^2 = -1 squarings.
  static int mul_sign(std::uint32_t a, std::uint32_t b) {
    int swaps = 0;
    for (std::uint32_t bb = b; bb; bb &= bb - 1) {
      std::uint32_t bit = bb & ~(bb - 1);
      // elements of a strictly above this index must be hopped over
      swaps += std::popcount(a & ~((bit << 1) - 1));
    }
    int squares = std::popcount(a & b);
    return ((swaps + squares) % 2 == 0) ? 1 : -1;
  }

  friend MultiVector operator*(const MultiVector& x, const MultiVector& y) {
    require(x.n_ == y.n_, Error::Code::DimensionMismatch, "multivector dimensions differ");
    MultiVector r(x.n_);
    for (const auto& [ma, ca] : x.terms_)
      for (const auto& [mb, cb] : y.terms_) {
        int s = mul_sign(ma, mb);
        S c = ca * cb;
        r.add_term(ma ^ mb, s > 0 ? c : -c);
      }
    return r;
  }

  friend bool operator==(const MultiVector& x, const MultiVector& y) {
    if (x.n_ != y.n_) return false;
    if constexpr (ScalarOps<S>::is_exact) {
      return x.terms_ == y.terms_;
    } else {
      return (x - y).max_abs() <= kFloatTol;
    }
  }
  friend bool operator!=(const MultiVector& x, const MultiVector& y) { return !(x == y); }

  // Grade involution alpha: e_i -> -e_i.
  MultiVector grade_involution() const {
    MultiVector r(n_);
    for (const auto& [m, c] : terms_)
      r.terms_.emplace(m, (std::popcount(m) % 2 == 0) ? c : -c);
    return r;
  }

  // Reversion: e_{i1}...e_{ik} -> e_{ik}...e_{i1}.
  MultiVector reverse() const {
    MultiVector r(n_);
    for (const auto& [m, c] : terms_) {
      int k = std::popcount(m);
      bool flip = (k * (k - 1) / 2) % 2 != 0;
      r.terms_.emplace(m, flip ? -c : c);
    }
    return r;
  }

  // Coefficient-wise conjugation; the real blades are fixed.
  MultiVector conjugate() const {
    MultiVector r(n_);
    for (const auto& [m, c] : terms_) {
      S cc = ScalarOps<S>::conj(c);
      if (!ScalarOps<S>::is_zero(cc)) r.terms_.emplace(m, cc);
    }
    return r;
  }

  bool is_grade(int k) const {
    for (const auto& [m, c] : terms_)
      if (std::popcount(m) != k) return false;
    return true;
  }

  double max_abs() const {
    double mx = 0;
    for (const auto& [m, c] : terms_) mx = std::max(mx, ScalarOps<S>::abs(c));
    return mx;
  }

  // Embed into Cl_{n+shift} with e_k -> e_{k+shift}.
  MultiVector shift_up(int shift, int new_n) const {
    MultiVector r(new_n);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m << shift, c);
    return r;
  }

 private:
  int n_;
  TermMap terms_;
};

// kappa_eps: conjugate every coefficient iff eps = -1. Complexified scalars
// only; the flag is the scalar type.
template <class S>
MultiVector<S> kappa_eps(int eps, const MultiVector<S>& a) {
  static_assert(ScalarOps<S>::is_complex,
                "kappa_eps acts on complexified multivectors");
  return eps < 0 ? a.conjugate() : a;
}

inline void check_complexified(bool is_complex) {
  require(is_complex, Error::Code::NotComplexified, "multivector is not complexified");
}

// --- text format -------------------------------------------------------------
//
// Canonical monomial form: "3/4 e1^e2 - 1/2 r2 e1^e2 + i e3 - 5". A
// coefficient token is [rational][i][r2]; decimals must be dyadic.

namespace detail {

inline Rat parse_rational_token(const std::string& tok) {
  auto slash = tok.find('/');
  if (slash != std::string::npos) {
    long long num = std::stoll(tok.substr(0, slash));
    long long den = std::stoll(tok.substr(slash + 1));
    require(den != 0, Error::Code::ParseError, "zero denominator");
    return Rat(num, den);
  }
  auto dot = tok.find('.');
  if (dot == std::string::npos) return Rat(std::stoll(tok));
  std::string whole = tok.substr(0, dot), frac = tok.substr(dot + 1);
  long long den = 1;
  for (size_t i = 0; i < frac.size(); ++i) den *= 10;
  long long num = std::stoll(whole.empty() ? "0" : whole) * den +
                  (frac.empty() ? 0 : std::stoll(frac));
  Rat r(num, den);
  require((r.den & (r.den - 1)) == 0, Error::Code::ParseError,
          "decimal coefficient is not dyadic: " + tok);
  return r;
}

}  // namespace detail

inline MultiVector<CExact> parse_multivector(const std::string& text, int n) {
  MultiVector<CExact> out(n);
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip_ws();
  require(i < text.size(), Error::Code::ParseError, "empty multivector text");
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else {
      require(first, Error::Code::ParseError, "expected '+' or '-' between terms");
    }
    first = false;
    // rational part
    Rat q(1);
    bool have_num = false;
    size_t start = i;
    while (i < text.size() &&
           (std::isdigit((unsigned char)text[i]) || text[i] == '.' || text[i] == '/'))
      ++i;
    if (i > start) {
      q = detail::parse_rational_token(text.substr(start, i - start));
      have_num = true;
    }
    skip_ws();
    bool imag = false, root2 = false;
    // allow 'i' and 'r2' factors in either order
    for (int pass = 0; pass < 2; ++pass) {
      if (i < text.size() && text[i] == 'i') {
        imag = true;
        ++i;
        skip_ws();
      } else if (i + 1 < text.size() && text[i] == 'r' && text[i + 1] == '2') {
        root2 = true;
        i += 2;
        skip_ws();
      }
    }
    // blade
    std::uint32_t mask = 0;
    bool have_blade = false;
    while (i < text.size() && text[i] == 'e') {
      ++i;
      size_t ds = i;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
      require(i > ds, Error::Code::ParseError, "expected index after 'e'");
      int idx = std::stoi(text.substr(ds, i - ds));
      require(idx >= 1 && idx <= n, Error::Code::ParseError, "basis index out of range");
      require(!(mask & (1u << (idx - 1))), Error::Code::ParseError,
              "repeated index in blade");
      mask |= 1u << (idx - 1);
      have_blade = true;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        require(i < text.size() && text[i] == 'e', Error::Code::ParseError,
                "expected 'e' after '^'");
      } else {
        break;
      }
    }
    require(have_num || imag || root2 || have_blade, Error::Code::ParseError,
            "empty term in multivector text");
    if (sign < 0) q = -q;
    Exact mag = root2 ? Exact(Rat(0), q) : Exact(q);
    CExact c = imag ? CExact(Exact(0), mag) : CExact(mag);
    out.add_term(mask, c);
  }
  return out;
}

inline std::string print_multivector(const MultiVector<CExact>& m) {
  // expand each term into monomials: 1, r2, i, i r2
  struct Mono {
    std::uint32_t mask;
    int part;  // 0:re, 1:re*r2, 2:im, 3:im*r2
    Rat q;
  };
  std::vector<Mono> monos;
  for (const auto& [mask, c] : m.terms()) {
    const Rat parts[4] = {c.re.a, c.re.b, c.im.a, c.im.b};
    for (int p = 0; p < 4; ++p)
      if (!parts[p].is_zero()) monos.push_back({mask, p, parts[p]});
  }
  if (monos.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& mo : monos) {
    Rat q = mo.q;
    bool neg = q.num < 0;
    if (neg) q = -q;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool imag = mo.part >= 2;
    bool root2 = (mo.part % 2) == 1;
    bool unit_coeff = (q.num == 1 && q.den == 1);
    bool printed = false;
    if (!unit_coeff || (!imag && !root2 && mo.mask == 0)) {
      os << q;
      printed = true;
    }
    if (imag) { if (printed) os << ' '; os << 'i'; printed = true; }
    if (root2) { if (printed) os << ' '; os << "r2"; printed = true; }
    if (mo.mask != 0) {
      if (printed) os << ' ';
      bool fe = true;
      for (int b = 0; b < 32; ++b)
        if (mo.mask & (1u << b)) {
          if (!fe) os << '^';
          os << 'e' << (b + 1);
          fe = false;
        }
    } else if (!printed) {
      os << q;
    }
  }
  return os.str();
}

}  // namespace orientifold

#pragma once

// Laurent polynomials with integer coefficients, q-numbers, and the
// deformation parameter q of a fundamental dimension d = q + 1/q.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "qclass/dual.hpp"
#include "qclass/error.hpp"
#include "qclass/rigorous.hpp"

namespace qclass {

/// Finite sum of c_k q^k, k in Z, with nonzero integer coefficients only.
class LaurentScalar {
 public:
  using Coefficient = std::int64_t;

  LaurentScalar() = default;

  static LaurentScalar monomial(int exponent, Coefficient coefficient = 1) {
    LaurentScalar p;
    p.add_term(exponent, coefficient);
    return p;
  }

  const std::map<int, Coefficient>& terms() const& { return terms_; }
  std::map<int, Coefficient> terms() && { return std::move(terms_); }

  Coefficient coefficient(int exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  bool is_zero() const { return terms_.empty(); }

  /// The polynomial with q replaced by 1/q.
  LaurentScalar reflected() const {
    LaurentScalar p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
    return p;
  }

  bool is_palindromic() const { return reflected() == *this; }

  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) { return a.terms_ == b.terms_; }

  friend LaurentScalar operator-(const LaurentScalar& a) {
    LaurentScalar p;
    for (const auto& [e, c] : a.terms_) p.add_term(e, checked_mul(c, -1));
    return p;
  }

  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }

  friend LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b) { return a + (-b); }

  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
    LaurentScalar p;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, checked_mul(ca, cb));
    }
    return p;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Coefficient magnitude = c < 0 ? -c : c;
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << magnitude;
        continue;
      }
      if (magnitude != 1) os << magnitude << '*';
      os << 'q';
      if (e != 1) os << '^' << e;
    }
    return os.str();
  }

 private:
  static Coefficient checked_add(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_add_overflow(a, b, &r)) throw BudgetError("Laurent coefficient overflow");
    return r;
  }
  static Coefficient checked_mul(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_mul_overflow(a, b, &r)) throw BudgetError("Laurent coefficient overflow");
    return r;
  }

  void add_term(int exponent, Coefficient c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  std::map<int, Coefficient> terms_;
};

/// [n]_q in sum form: q^{n-1} + q^{n-3} + ... + q^{-(n-1)}.
inline LaurentScalar q_number(unsigned n) {
  LaurentScalar p;
  for (unsigned k = 0; k < n; ++k) {
    p = p + LaurentScalar::monomial(static_cast<int>(n) - 1 - 2 * static_cast<int>(k));
  }
  return p;
}

/// Enclosure of p(q) for q enclosing a value in (0, 1].
///
/// Works for RigorousReal and for Dual<RigorousReal> (value and derivative).
template <class T>
T eval(const LaurentScalar& p, const T& q) {
  const RigorousReal& qv = value_of(q);
  if (!certainly_gt(qv, 0L)) throw DomainError("eval: q enclosure meets zero (denominator)");
  if (certainly_gt(qv, 1L)) throw DomainError("eval: q must lie in (0, 1]");
  T sum = lift(q, 0);
  if (p.is_zero()) return sum;
  const bool has_negative = p.terms().begin()->first < 0;
  const T inverse = has_negative ? lift(q, 1) / q : lift(q, 1);
  for (const auto& [e, c] : p.terms()) {
    const T power = e >= 0 ? pow(q, static_cast<long>(e)) : pow(inverse, static_cast<long>(-e));
    sum = sum + power * static_cast<long>(c);
  }
  return sum;
}

/// Enclosure of [n]_q, using the quotient form when q < 1 is certified.
///
/// [n]_q is non-increasing in q on (0, 1], so the enclosure is taken from the
/// two endpoints; the sum form is the fallback when the interval touches 1.
inline RigorousReal q_integer(unsigned n, const RigorousReal& q) {
  if (!certainly_gt(q, 0L)) throw DomainError("q_integer: q enclosure meets zero");
  if (certainly_gt(q, 1L)) throw DomainError("q_integer: q must lie in (0, 1]");
  if (n == 0) return RigorousReal(0L, q.precision());
  if (n == 1) return RigorousReal(1L, q.precision());
  if (q.is_point() && q.contains(1L)) return RigorousReal(static_cast<long>(n), q.precision());
  if (!certainly_lt(q, 1L)) return eval(q_number(n), q);
  auto at = [n](const RigorousReal& x) {
    const RigorousReal xn = pow(x, static_cast<long>(n));
    return (1L / xn - xn) / (1L / x - x);
  };
  const RigorousReal at_upper = at(q.upper());
  const RigorousReal at_lower = at(q.lower());
  return RigorousReal::hull(at_upper.lower(), at_lower.upper());
}

/// The root q in (0, 1] of q + 1/q = d, for d >= 2.
///
/// Evaluated as 2 / (d + sqrt(d^2 - 4)), which is monotone in each occurrence
/// of d, so the interval result is tight.
inline RigorousReal solve_fundamental_q(const RigorousReal& d) {
  if (certainly_lt(d, 2L)) throw DomainError("solve_fundamental_q: dimension must be >= 2");
  const RigorousReal dd = d.clamp_below(2);
  const RigorousReal disc = (dd * dd - 4L).clamp_below(0);
  return 2L / (dd + sqrt(disc));
}

}  // namespace qclass

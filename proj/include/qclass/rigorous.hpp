#pragma once

// Outward-rounded interval arithmetic on MPFR endpoints.
//
// A RigorousReal is a closed interval [lower, upper] whose endpoints are MPFR
// floats. Each operation rounds the lower endpoint toward -inf and the upper
// endpoint toward +inf, so the exact result of the real operation applied to
// any points of the inputs stays inside the output.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "qclass/error.hpp"

namespace qclass {

using Bits = mpfr_prec_t;

inline constexpr Bits kDefaultBits = 128;
inline constexpr Bits kMaxBits = 1 << 16;

namespace detail {
inline Bits& working_bits_ref() {
  thread_local Bits bits = kDefaultBits;
  return bits;
}
}  // namespace detail

/// Precision (in bits) used for values created without an explicit precision.
inline Bits working_precision() { return detail::working_bits_ref(); }

inline void set_working_precision(Bits bits) {
  if (bits < MPFR_PREC_MIN || bits > kMaxBits) {
    throw DomainError("working precision must lie in [" + std::to_string(MPFR_PREC_MIN) + ", " +
                      std::to_string(kMaxBits) + "] bits");
  }
  detail::working_bits_ref() = bits;
}

/// Sets the thread's working precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(Bits bits) : saved_(working_precision()) { set_working_precision(bits); }
  ~PrecisionScope() { detail::working_bits_ref() = saved_; }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  Bits saved_;
};

class RigorousReal {
 public:
  RigorousReal() : RigorousReal(0L) {}

  explicit RigorousReal(long value, Bits bits = working_precision()) : RigorousReal(Raw{}, bits) {
    mpfr_set_si(lo_, value, MPFR_RNDD);
    mpfr_set_si(hi_, value, MPFR_RNDU);
  }

  static RigorousReal from_mpz(const mpz_class& value, Bits bits = working_precision()) {
    RigorousReal r(Raw{}, bits);
    mpfr_set_z(r.lo_, value.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, value.get_mpz_t(), MPFR_RNDU);
    return r;
  }

  static RigorousReal from_rational(const mpq_class& value, Bits bits = working_precision()) {
    RigorousReal r(Raw{}, bits);
    mpfr_set_q(r.lo_, value.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, value.get_mpq_t(), MPFR_RNDU);
    return r;
  }

  static RigorousReal from_double(double value, Bits bits = working_precision()) {
    RigorousReal r(Raw{}, bits);
    mpfr_set_d(r.lo_, value, MPFR_RNDD);
    mpfr_set_d(r.hi_, value, MPFR_RNDU);
    return r;
  }

  /// Encloses a decimal literal such as "0.0861" or "-2.5e-3".
  static RigorousReal from_decimal(std::string_view text, Bits bits = working_precision()) {
    const std::string s(text);
    RigorousReal r(Raw{}, bits);
    char* end_lo = nullptr;
    char* end_hi = nullptr;
    mpfr_strtofr(r.lo_, s.c_str(), &end_lo, 10, MPFR_RNDD);
    mpfr_strtofr(r.hi_, s.c_str(), &end_hi, 10, MPFR_RNDU);
    if (s.empty() || end_lo == s.c_str() || *end_lo != '\0' || *end_hi != '\0' ||
        !mpfr_number_p(r.lo_) || !mpfr_number_p(r.hi_)) {
      throw DomainError("not a decimal number: '" + s + "'");
    }
    return r;
  }

  /// Smallest interval containing both arguments.
  static RigorousReal hull(const RigorousReal& a, const RigorousReal& b) {
    RigorousReal r(Raw{}, std::max(a.precision(), b.precision()));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }

  static RigorousReal pi(Bits bits = working_precision()) {
    RigorousReal r(Raw{}, bits);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
  }

  RigorousReal(const RigorousReal& other) : RigorousReal(Raw{}, other.precision()) {
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }

  RigorousReal(RigorousReal&& other) noexcept : RigorousReal(Raw{}, MPFR_PREC_MIN) {
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
    swap(other);
  }

  RigorousReal& operator=(RigorousReal other) noexcept {
    swap(other);
    return *this;
  }

  ~RigorousReal() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  void swap(RigorousReal& other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }

  Bits precision() const { return std::max(mpfr_get_prec(lo_), mpfr_get_prec(hi_)); }

  mpfr_srcptr lower_ptr() const { return lo_; }
  mpfr_srcptr upper_ptr() const { return hi_; }

  RigorousReal lower() const { return endpoint(lo_); }
  RigorousReal upper() const { return endpoint(hi_); }

  /// A representable point inside the interval (nearest-rounded midpoint).
  RigorousReal midpoint() const {
    RigorousReal r(Raw{}, precision());
    mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
    mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
    return r;
  }

  /// Enclosure of upper - lower.
  RigorousReal width() const {
    RigorousReal r(Raw{}, precision());
    mpfr_sub(r.lo_, hi_, lo_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
    return r;
  }

  double lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_double() const { return midpoint().lower_double(); }

  bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
  bool identical(const RigorousReal& other) const {
    return mpfr_equal_p(lo_, other.lo_) && mpfr_equal_p(hi_, other.hi_);
  }

  bool contains(const mpq_class& value) const {
    return mpfr_cmp_q(lo_, value.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, value.get_mpq_t()) >= 0;
  }
  bool contains(long value) const { return mpfr_cmp_si(lo_, value) <= 0 && mpfr_cmp_si(hi_, value) >= 0; }
  bool contains(const mpz_class& value) const {
    return mpfr_cmp_z(lo_, value.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_, value.get_mpz_t()) >= 0;
  }
  bool contains(const RigorousReal& inner) const {
    return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_lessequal_p(inner.hi_, hi_);
  }
  bool contains_zero() const { return contains(0L); }

  /// Outward-rounded decimal rendering of the endpoints with `digits` significant digits.
  std::string lower_string(int digits = 30) const { return format(lo_, 'D', digits); }
  std::string upper_string(int digits = 30) const { return format(hi_, 'U', digits); }
  std::string mid_string(int digits = 30) const { return format(midpoint().lo_, 'N', digits); }

  /// Returns the same enclosure rounded outward to `bits` (never narrower).
  RigorousReal with_precision(Bits bits) const {
    RigorousReal r(Raw{}, bits);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  /// Raises the lower endpoint to `floor` when the interval extends below it.
  RigorousReal clamp_below(long floor) const {
    RigorousReal r(*this);
    if (mpfr_cmp_si(r.lo_, floor) < 0) mpfr_set_si(r.lo_, floor, MPFR_RNDD);
    if (mpfr_cmp_si(r.hi_, floor) < 0) mpfr_set_si(r.hi_, floor, MPFR_RNDU);
    return r;
  }

  RigorousReal& operator+=(const RigorousReal& b) { return *this = *this + b; }
  RigorousReal& operator-=(const RigorousReal& b) { return *this = *this - b; }
  RigorousReal& operator*=(const RigorousReal& b) { return *this = *this * b; }
  RigorousReal& operator/=(const RigorousReal& b) { return *this = *this / b; }

  friend RigorousReal operator-(const RigorousReal& a) {
    RigorousReal r(Raw{}, a.precision());
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
  }

  friend RigorousReal operator+(const RigorousReal& a, const RigorousReal& b) {
    RigorousReal r(Raw{}, std::max(a.precision(), b.precision()));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }

  friend RigorousReal operator-(const RigorousReal& a, const RigorousReal& b) {
    RigorousReal r(Raw{}, std::max(a.precision(), b.precision()));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }

  friend RigorousReal operator*(const RigorousReal& a, const RigorousReal& b) {
    const Bits bits = std::max(a.precision(), b.precision());
    RigorousReal r(Raw{}, bits);
    mpfr_t t;
    mpfr_init2(t, bits);
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
  }

  friend RigorousReal operator/(const RigorousReal& a, const RigorousReal& b) {
    if (b.contains_zero()) throw DomainError("division by an enclosure of zero");
    const Bits bits = std::max(a.precision(), b.precision());
    RigorousReal r(Raw{}, bits);
    mpfr_t t;
    mpfr_init2(t, bits);
    mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
  }

  friend RigorousReal operator+(const RigorousReal& a, long b) { return a + RigorousReal(b, a.precision()); }
  friend RigorousReal operator+(long a, const RigorousReal& b) { return RigorousReal(a, b.precision()) + b; }
  friend RigorousReal operator-(const RigorousReal& a, long b) { return a - RigorousReal(b, a.precision()); }
  friend RigorousReal operator-(long a, const RigorousReal& b) { return RigorousReal(a, b.precision()) - b; }
  friend RigorousReal operator*(const RigorousReal& a, long b) { return a * RigorousReal(b, a.precision()); }
  friend RigorousReal operator*(long a, const RigorousReal& b) { return RigorousReal(a, b.precision()) * b; }
  friend RigorousReal operator/(const RigorousReal& a, long b) { return a / RigorousReal(b, a.precision()); }
  friend RigorousReal operator/(long a, const RigorousReal& b) { return RigorousReal(a, b.precision()) / b; }

  friend RigorousReal sqrt(const RigorousReal& a) {
    if (mpfr_sgn(a.lo_) < 0) throw DomainError("square root of an enclosure reaching below zero");
    RigorousReal r(Raw{}, a.precision());
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }

  friend RigorousReal exp(const RigorousReal& a) {
    RigorousReal r(Raw{}, a.precision());
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }

  friend RigorousReal log(const RigorousReal& a) {
    if (mpfr_sgn(a.lo_) <= 0) throw DomainError("logarithm of an enclosure reaching zero or below");
    RigorousReal r(Raw{}, a.precision());
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }

  /// Integer power; negative exponents go through the reciprocal.
  friend RigorousReal pow(const RigorousReal& a, long n) {
    if (n < 0) return 1L / pow(a, -n);
    RigorousReal r(Raw{}, a.precision());
    const unsigned long e = static_cast<unsigned long>(n);
    if (e == 0) {
      mpfr_set_si(r.lo_, 1, MPFR_RNDD);
      mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    } else if (mpfr_sgn(a.lo_) >= 0) {
      mpfr_pow_ui(r.lo_, a.lo_, e, MPFR_RNDD);
      mpfr_pow_ui(r.hi_, a.hi_, e, MPFR_RNDU);
    } else if (e % 2 == 1) {
      mpfr_pow_ui(r.lo_, a.lo_, e, MPFR_RNDD);
      mpfr_pow_ui(r.hi_, a.hi_, e, MPFR_RNDU);
    } else if (mpfr_sgn(a.hi_) <= 0) {
      mpfr_pow_ui(r.lo_, a.hi_, e, MPFR_RNDD);
      mpfr_pow_ui(r.hi_, a.lo_, e, MPFR_RNDU);
    } else {
      mpfr_set_zero(r.lo_, 1);
      mpfr_t m;
      mpfr_init2(m, a.precision());
      mpfr_neg(m, a.lo_, MPFR_RNDU);
      mpfr_max(m, m, a.hi_, MPFR_RNDU);
      mpfr_pow_ui(r.hi_, m, e, MPFR_RNDU);
      mpfr_clear(m);
    }
    return r;
  }

  /// Real power a^b for a > 0, via exp(b log a).
  friend RigorousReal pow(const RigorousReal& a, const RigorousReal& b) { return exp(b * log(a)); }

  // cos and sin are 1-Lipschitz, so f(mid) +- radius encloses f over the interval.
  friend RigorousReal cos(const RigorousReal& a) { return a.lipschitz_image(mpfr_cos); }
  friend RigorousReal sin(const RigorousReal& a) { return a.lipschitz_image(mpfr_sin); }

  friend bool certainly_lt(const RigorousReal& a, const RigorousReal& b) { return mpfr_less_p(a.hi_, b.lo_); }
  friend bool certainly_le(const RigorousReal& a, const RigorousReal& b) { return mpfr_lessequal_p(a.hi_, b.lo_); }
  friend bool certainly_gt(const RigorousReal& a, const RigorousReal& b) { return mpfr_greater_p(a.lo_, b.hi_); }
  friend bool certainly_ge(const RigorousReal& a, const RigorousReal& b) { return mpfr_greaterequal_p(a.lo_, b.hi_); }
  friend bool certainly_lt(const RigorousReal& a, long b) { return mpfr_cmp_si(a.hi_, b) < 0; }
  friend bool certainly_gt(const RigorousReal& a, long b) { return mpfr_cmp_si(a.lo_, b) > 0; }
  friend bool certainly_le(const RigorousReal& a, long b) { return mpfr_cmp_si(a.hi_, b) <= 0; }
  friend bool certainly_ge(const RigorousReal& a, long b) { return mpfr_cmp_si(a.lo_, b) >= 0; }
  friend bool overlaps(const RigorousReal& a, const RigorousReal& b) {
    return mpfr_lessequal_p(a.lo_, b.hi_) && mpfr_lessequal_p(b.lo_, a.hi_);
  }

  friend std::ostream& operator<<(std::ostream& os, const RigorousReal& x) {
    return os << '[' << x.lower_string(20) << ", " << x.upper_string(20) << ']';
  }

 private:
  struct Raw {};
  RigorousReal(Raw, Bits bits) {
    mpfr_init2(lo_, bits);
    mpfr_init2(hi_, bits);
  }

  RigorousReal endpoint(mpfr_srcptr p) const {
    RigorousReal r(Raw{}, precision());
    mpfr_set(r.lo_, p, MPFR_RNDD);
    mpfr_set(r.hi_, p, MPFR_RNDU);
    return r;
  }

  template <class Fn>
  RigorousReal lipschitz_image(Fn fn) const {
    const Bits bits = precision();
    RigorousReal mid = midpoint();
    RigorousReal radius(Raw{}, bits);
    mpfr_sub(radius.lo_, hi_, mid.lo_, MPFR_RNDU);
    mpfr_sub(radius.hi_, mid.lo_, lo_, MPFR_RNDU);
    mpfr_max(radius.hi_, radius.hi_, radius.lo_, MPFR_RNDU);
    RigorousReal r(Raw{}, bits);
    fn(r.lo_, mid.lo_, MPFR_RNDD);
    fn(r.hi_, mid.lo_, MPFR_RNDU);
    mpfr_sub(r.lo_, r.lo_, radius.hi_, MPFR_RNDD);
    mpfr_add(r.hi_, r.hi_, radius.hi_, MPFR_RNDU);
    if (mpfr_cmp_si(r.lo_, -1) < 0) mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    if (mpfr_cmp_si(r.hi_, 1) > 0) mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    return r;
  }

  static std::string format(mpfr_srcptr value, char rounding, int digits) {
    digits = std::max(digits, 1);
    const std::string spec = std::string("%.*R") + rounding + "e";
    char* buffer = nullptr;
    if (mpfr_asprintf(&buffer, spec.c_str(), digits - 1, value) < 0) throw Error("mpfr_asprintf failed");
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
  }

  mpfr_t lo_;
  mpfr_t hi_;
};

/// Parses either a decimal literal or an exact fraction "p/q" into an enclosure.
inline RigorousReal parse_enclosure(std::string_view text, Bits bits = working_precision()) {
  if (text.find('/') != std::string_view::npos) {
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
      throw DomainError("not a fraction: '" + std::string(text) + "'");
    }
    q.canonicalize();
    return RigorousReal::from_rational(q, bits);
  }
  return RigorousReal::from_decimal(text, bits);
}

/// Parses a decimal literal ("0.25", "1e-3") or fraction ("1/4") as an exact rational.
inline mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  if (s.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw DomainError("not a fraction: '" + s + "'");
    q.canonicalize();
    return q;
  }
  // Decimal: split mantissa and exponent, then scale exactly.
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
    const std::string tail = s.substr(e + 1);
    char* end = nullptr;
    exponent = std::strtol(tail.c_str(), &end, 10);
    if (tail.empty() || *end != '\0') throw DomainError("not a decimal number: '" + s + "'");
    if (exponent > 100000 || exponent < -100000) throw DomainError("decimal exponent out of range: '" + s + "'");
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  std::string digits;
  bool seen_point = false;
  for (char c : s) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) --exponent;
    } else {
      throw DomainError("not a decimal number: '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw DomainError("not a decimal number: '" + std::string(text) + "'");
  mpq_class q(mpz_class(digits, 10));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    q /= scale;
  } else {
    q *= scale;
  }
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace qclass

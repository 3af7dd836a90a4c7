#pragma once

// Forward-mode derivatives over an arbitrary field-like scalar.
//
// Evaluating an expression on Dual<RigorousReal>{x, 1} with x a wide interval
// yields, in `derivative`, an enclosure of f' over all of x. That is what the
// root finders use to certify monotonicity before bisecting.

#include "qclass/rigorous.hpp"

namespace qclass {

template <class T>
struct Dual {
  T value;
  T derivative;
};

inline const RigorousReal& value_of(const RigorousReal& x) { return x; }
template <class T>
const T& value_of(const Dual<T>& x) {
  return x.value;
}

/// A constant of the same kind and precision as `like`.
inline RigorousReal lift(const RigorousReal& like, long v) { return RigorousReal(v, like.precision()); }
template <class T>
Dual<T> lift(const Dual<T>& like, long v) {
  return {lift(like.value, v), lift(like.value, 0)};
}

template <class T>
Dual<T> operator-(const Dual<T>& a) {
  return {-a.value, -a.derivative};
}
template <class T>
Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) {
  return {a.value + b.value, a.derivative + b.derivative};
}
template <class T>
Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) {
  return {a.value - b.value, a.derivative - b.derivative};
}
template <class T>
Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
  return {a.value * b.value, a.derivative * b.value + a.value * b.derivative};
}
template <class T>
Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
  T v = a.value / b.value;
  return {v, (a.derivative - v * b.derivative) / b.value};
}
template <class T>
Dual<T> operator+(const Dual<T>& a, long b) {
  return {a.value + b, a.derivative};
}
template <class T>
Dual<T> operator+(long a, const Dual<T>& b) {
  return {a + b.value, b.derivative};
}
template <class T>
Dual<T> operator-(const Dual<T>& a, long b) {
  return {a.value - b, a.derivative};
}
template <class T>
Dual<T> operator-(long a, const Dual<T>& b) {
  return {a - b.value, -b.derivative};
}
template <class T>
Dual<T> operator*(const Dual<T>& a, long b) {
  return {a.value * b, a.derivative * b};
}
template <class T>
Dual<T> operator*(long a, const Dual<T>& b) {
  return {a * b.value, a * b.derivative};
}
template <class T>
Dual<T> operator/(const Dual<T>& a, long b) {
  return {a.value / b, a.derivative / b};
}
template <class T>
Dual<T> operator/(long a, const Dual<T>& b) {
  T v = a / b.value;
  return {v, -(v * b.derivative) / b.value};
}

template <class T>
Dual<T> sqrt(const Dual<T>& a) {
  T s = sqrt(a.value);
  return {s, a.derivative / (2L * s)};
}

template <class T>
Dual<T> pow(const Dual<T>& a, long n) {
  if (n == 0) return lift(a, 1);
  return {pow(a.value, n), n * pow(a.value, n - 1) * a.derivative};
}

}  // namespace qclass

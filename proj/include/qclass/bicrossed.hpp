#pragma once

// Classification arithmetic for H_{nu,q} = Q bowtie SU_q(2). Scaling times are
// symbolic pairs t = r nu + s pi / log|q| with r, s rational, and the case
// split on nu log|q| / pi is a declared input.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <variant>

#include "qclass/error.hpp"
#include "qclass/fusion.hpp"
#include "qclass/rigorous.hpp"
#include "qclass/tri.hpp"

namespace qclass {

/// nu log|q| = ratio * pi with ratio rational and nonzero.
struct RatioRational {
  mpq_class ratio;
};

/// nu log|q| / pi is asserted irrational; nu is kept for reporting only.
struct RatioIrrational {
  RigorousReal nu;
};

class BicrossedParams {
 public:
  using Mode = std::variant<RatioRational, RatioIrrational>;

  BicrossedParams(mpq_class q, Mode mode) : q_(std::move(q)), mode_(std::move(mode)) {
    q_.canonicalize();
    if (q_ == 0 || abs(q_) >= 1) throw DomainError("bicrossed: q must lie in (-1, 1) \\ {0}");
    if (const auto* r = std::get_if<RatioRational>(&mode_)) {
      if (r->ratio == 0) throw DomainError("bicrossed: nu log|q| / pi must be nonzero");
    }
  }

  static BicrossedParams rational(mpq_class q, mpq_class ratio) {
    return {std::move(q), RatioRational{std::move(ratio)}};
  }
  static BicrossedParams irrational(mpq_class q, RigorousReal nu) {
    return {std::move(q), RatioIrrational{std::move(nu)}};
  }

  const mpq_class& q() const { return q_; }
  const Mode& mode() const { return mode_; }
  bool is_rational() const { return std::holds_alternative<RatioRational>(mode_); }
  const mpq_class& ratio() const { return std::get<RatioRational>(mode_).ratio; }

 private:
  mpq_class q_;
  Mode mode_;
};

/// t = r nu + s pi / log|q|.
struct ScalingTime {
  mpq_class r;
  mpq_class s;

  friend ScalingTime operator+(const ScalingTime& a, const ScalingTime& b) { return {a.r + b.r, a.s + b.s}; }
  friend ScalingTime operator-(const ScalingTime& a) { return {-a.r, -a.s}; }
  friend bool operator==(const ScalingTime& a, const ScalingTime& b) { return a.r == b.r && a.s == b.s; }
};

inline bool is_integer(const mpq_class& x) { return x.get_den() == 1; }

/// Whether tau_t is the identity: t in (pi / log|q|) Z.
inline bool is_trivial_scaling(const ScalingTime& t, const BicrossedParams& params) {
  if (!params.is_rational()) return t.r == 0 && is_integer(t.s);
  mpq_class coordinate = t.r * params.ratio() + t.s;
  coordinate.canonicalize();
  return is_integer(coordinate);
}

/// Whether tau_t is inner: t in nu Q + (pi / log|q|) Z.
inline bool is_inner_scaling(const ScalingTime& t, const BicrossedParams& params) {
  if (params.is_rational()) return true;
  return is_integer(t.s);
}

struct CenterDescription {
  bool trivial = true;
  mpq_class generator;  // positive generator of Q cap (1 / ratio) Z when not trivial

  std::string to_string() const {
    return trivial ? "trivial" : "L^inf(T), generated by u_gamma, gamma in " + generator.get_str() + " Z";
  }
};

/// Center of L^inf(H): spanned by u_gamma with gamma in Q cap (pi / (nu log|q|)) Z.
inline CenterDescription center_description(const BicrossedParams& params) {
  if (!params.is_rational()) return {};
  mpq_class g = 1 / params.ratio();
  g = abs(g);
  g.canonicalize();
  return {false, g};
}

inline constexpr const char* kReportFactor = "injective factor, type II_inf; H is coamenable";
inline constexpr const char* kReportNonFactor = "non-factor, center isomorphic to L^inf(T); H is coamenable";

inline std::string factor_report(const BicrossedParams& params) {
  return params.is_rational() ? kReportNonFactor : kReportFactor;
}

/// Declared exact relation nu' = scale nu + shift pi / log|q|.
struct NuRelation {
  mpq_class scale;
  mpq_class shift = 0;
};

/// Necessary conditions for H_{nu,q} isomorphic to H_{nu',q'}: |q| = |q'| and
/// equality of nu Q + (pi / log|q|) Z with its primed version. Never claims an
/// isomorphism; Yes means only that no obstruction was found.
///
/// With nu log|q| / pi irrational, nu and pi / log|q| are Q-independent. Then
/// nu' Q contains shift * (pi / log|q|) Q, which lies in the integer lattice only
/// for shift = 0; any nonzero scale is allowed.
inline Tri iso_necessary(const BicrossedParams& a, const BicrossedParams& b,
                         const std::optional<NuRelation>& relation = std::nullopt) {
  if (abs(a.q()) != abs(b.q())) return Tri::No;
  if (a.is_rational() != b.is_rational()) return Tri::No;
  if (a.is_rational()) return Tri::Yes;
  if (!relation) {
    const RigorousReal& nu_a = std::get<RatioIrrational>(a.mode()).nu;
    const RigorousReal& nu_b = std::get<RatioIrrational>(b.mode()).nu;
    return nu_a.is_point() && nu_a.identical(nu_b) ? Tri::Yes : Tri::Undetermined;
  }
  return relation->scale != 0 && relation->shift == 0 ? Tri::Yes : Tri::No;
}

/// Irreducible representation (gamma, delta) of H with delta a ladder label of SU_q(2).
struct HIrrep {
  mpq_class gamma;
  Ladder inner;

  std::string to_string() const { return "(" + gamma.get_str() + ", " + std::to_string(inner.n) + ")"; }
};

/// rho_{(gamma, delta)} = rho_delta.
inline RhoSpectrum rho_spectrum(const HIrrep& x, const BicrossedParams& params) {
  return rho_spectrum(x.inner, RigorousReal::from_rational(abs(params.q())));
}

}  // namespace qclass

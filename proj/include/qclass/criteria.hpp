#pragma once

// Summability criterion sum_alpha sqrt(dim(alpha) / dim_q(alpha)) < infinity
// for the three fusion families, with certified tail bounds, the closed-form
// upper bounds for the free unitary block series S, their thresholds, and the
// resulting MASA verdicts.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qclass/dual.hpp"
#include "qclass/error.hpp"
#include "qclass/fusion.hpp"
#include "qclass/rigorous.hpp"
#include "qclass/scalars.hpp"
#include "qclass/tri.hpp"

namespace qclass {

enum class Verdict { Converges, Diverges, Undetermined };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Converges: return "Converges";
    case Verdict::Diverges: return "Diverges";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

struct SeriesBudget {
  std::size_t max_terms = 10000;
  Bits max_bits = 1024;
};

struct SeriesResult {
  Verdict verdict = Verdict::Undetermined;
  RigorousReal partial_sum;
  std::optional<RigorousReal> tail_bound;  // present when Converges
  std::size_t terms_used = 0;
  Bits bits_used = 0;

  /// Enclosure of the full series: [partial.lower, partial.upper + tail.upper].
  RigorousReal enclosure() const {
    if (!tail_bound) return partial_sum;
    return RigorousReal::hull(partial_sum.lower(), (partial_sum + tail_bound->upper()).upper());
  }
};

/// dim / dim_q of a label; 1 exactly for the trivial label.
inline RigorousReal ratio(const IrrepLabel& label, const FusionFamily& family) {
  return RigorousReal::from_mpz(classical_dim(label, family)) / quantum_dim(label, family);
}

/// c = 1 + (A_1 - 1) / sup C(m+1, m), the growth factor of A_n = dim_q(n) / dim(n).
inline RigorousReal decay_constant(const RigorousReal& a1, long sup_c) {
  if (sup_c < 1) throw DomainError("decay_constant: sup C must be >= 1");
  if (!certainly_gt(a1, 1L)) throw KacOrInvalidError("decay_constant: A_1 must exceed 1 (non-Kac family)");
  return 1L + (a1 - 1L) / sup_c;
}

namespace detail {

// Sequential exact classical and enclosed quantum dimensions of a ladder family.
class LadderDims {
 public:
  explicit LadderDims(const FusionFamily& family)
      : kind_(family.kind()),
        base_(family.kind() == FamilyKind::So3Ladder ? family.dim_c_fund() - 1 : family.dim_c_fund()),
        q_(family.quantum_q()),
        prev_(1),
        cur_(family.dim_c_fund()) {}

  unsigned n() const { return n_; }
  const mpz_class& classical() const { return n_ == 0 ? prev_ : cur_; }

  RigorousReal quantum() const {
    if (kind_ == FamilyKind::Su2Ladder) return q_integer(n_ + 1, q_);
    return q_integer(n_ + 1, q_) + q_integer(n_, q_);
  }

  RigorousReal growth() const { return quantum() / RigorousReal::from_mpz(classical()); }

  void advance() {
    if (n_ > 0) {
      mpz_class next = base_ * cur_ - prev_;
      prev_ = std::move(cur_);
      cur_ = std::move(next);
    }
    ++n_;
  }

 private:
  FamilyKind kind_;
  long base_;
  RigorousReal q_;
  mpz_class prev_;
  mpz_class cur_;
  unsigned n_ = 0;
};

inline void require_ladder(const FusionFamily& family, const char* op) {
  if (!is_ladder(family.kind())) throw WrongFamilyError(std::string(op) + " needs a ladder family");
}

// Outcome of one summation pass at a fixed precision.
struct Attempt {
  SeriesResult result;
  bool precision_limited = false;
};

template <class Pass>
SeriesResult with_escalation(const SeriesBudget& budget, Pass pass) {
  Bits bits = working_precision();
  while (true) {
    PrecisionScope scope(bits);
    Attempt attempt = pass();
    attempt.result.bits_used = bits;
    if (!attempt.precision_limited || bits * 2 > budget.max_bits) return std::move(attempt.result);
    bits *= 2;
  }
}

inline SeriesResult constant_ones(std::size_t terms) {
  SeriesResult r;
  r.verdict = Verdict::Diverges;
  r.partial_sum = RigorousReal(static_cast<long>(terms));
  r.terms_used = terms;
  r.bits_used = working_precision();
  return r;
}

}  // namespace detail

/// Certifies A_{n+1} >= c A_n for 1 <= n < n_max.
inline bool verify_decay(const FusionFamily& family, unsigned n_max) {
  detail::require_ladder(family, "verify_decay");
  detail::LadderDims dims(family);
  dims.advance();
  RigorousReal previous = dims.growth();
  const RigorousReal c = decay_constant(previous, 1);
  for (unsigned n = 1; n < n_max; ++n) {
    dims.advance();
    RigorousReal next = dims.growth();
    if (!certainly_ge(next, c * previous)) return false;
    previous = std::move(next);
  }
  return true;
}

/// sum_{n >= 0} sqrt(dim(n) / dim_q(n)) for a ladder family.
///
/// After term n the tail is bounded through A_k >= c^{k-n} A_n:
///   sum_{k > n} A_k^{-1/2} <= A_n^{-1/2} / (sqrt(c) - 1).
inline SeriesResult quasi_split_sum_ladder(const FusionFamily& family, const RigorousReal& tol,
                                           const SeriesBudget& budget = {}) {
  detail::require_ladder(family, "quasi_split_sum_ladder");
  if (family.is_kac()) return detail::constant_ones(std::min<std::size_t>(budget.max_terms, 16));
  if (family.possibly_kac()) {
    SeriesResult r;
    r.partial_sum = RigorousReal(1L);
    r.terms_used = 1;
    r.bits_used = working_precision();
    return r;
  }
  return detail::with_escalation(budget, [&] {
    detail::Attempt attempt;
    SeriesResult& r = attempt.result;
    detail::LadderDims dims(family);
    RigorousReal sum(1L);
    dims.advance();
    RigorousReal growth = dims.growth();
    const RigorousReal c = decay_constant(growth, 1);
    const RigorousReal tail_factor = 1L / (sqrt(c) - 1L);
    sum += sqrt(1L / growth);
    for (std::size_t terms = 2;; ++terms) {
      RigorousReal tail = tail_factor / sqrt(growth);
      if (certainly_le(tail, tol)) {
        r.verdict = Verdict::Converges;
        r.partial_sum = sum;
        r.tail_bound = tail.upper();
        r.terms_used = terms;
        return attempt;
      }
      if (terms >= budget.max_terms) break;
      dims.advance();
      RigorousReal next = dims.growth();
      if (!certainly_ge(next, c * growth)) {
        attempt.precision_limited = true;
        break;
      }
      growth = std::move(next);
      sum += sqrt(1L / growth);
    }
    r.verdict = Verdict::Undetermined;
    r.partial_sum = sum;
    r.terms_used = dims.n() + 1;
    return attempt;
  });
}

/// S = sum_{n >= 1} sqrt(dim(w_n) / dim_q(w_n)) over one alternating family of words.
///
/// q_c = 1 selects dim(alpha) = 2 (dim(w_n) = n + 1). Tails use the estimates
/// term_m <= C m r^m (dim 2, r = sqrt(q_q)) and term_m <= K rho^m
/// (dim >= 3, rho = sqrt(q_q / q_c)), valid for word lengths m - 1 >= 1.
inline SeriesResult block_sum_S(const RigorousReal& q_c, const RigorousReal& q_q, const RigorousReal& tol,
                                const SeriesBudget& budget = {}) {
  if (!certainly_gt(q_q, 0L)) throw DomainError("block_sum_S: q_q must be positive");
  if (certainly_gt(q_c, 1L)) throw DomainError("block_sum_S: q_c must not exceed 1");
  if (certainly_gt(q_q, q_c)) throw DomainError("block_sum_S: q_q must not exceed q_c");
  if (q_q.identical(q_c)) return detail::constant_ones(std::min<std::size_t>(budget.max_terms, 16));
  const bool dim_two = q_c.is_point() && q_c.contains(1L);
  if (!certainly_lt(q_q, q_c) || (!dim_two && !certainly_lt(q_c, 1L))) {
    SeriesResult r;
    r.bits_used = working_precision();
    return r;
  }
  return detail::with_escalation(budget, [&] {
    detail::Attempt attempt;
    SeriesResult& r = attempt.result;
    const RigorousReal qq = q_q.with_precision(std::max(q_q.precision(), working_precision()));
    const RigorousReal qc = q_c.with_precision(std::max(q_c.precision(), working_precision()));
    const RigorousReal one_minus_q4 = 1L - pow(qq, 4);
    RigorousReal constant;
    RigorousReal decay;
    if (dim_two) {
      constant = sqrt((1L / qq - qq) / one_minus_q4);
      decay = sqrt(qq);
    } else {
      constant = sqrt((1L / qq - qq) / (1L / qc - qc)) / sqrt(one_minus_q4);
      decay = sqrt(qq / qc);
    }
    const RigorousReal one_minus_decay = 1L - decay;
    RigorousReal sum(0L);
    for (std::size_t terms = 1; terms <= budget.max_terms; ++terms) {
      const long m = static_cast<long>(terms) + 1;  // dim of w_n is [n+1]
      const RigorousReal classical = dim_two ? RigorousReal(m) : q_integer(static_cast<unsigned>(m), qc);
      sum += sqrt(classical / q_integer(static_cast<unsigned>(m), qq));
      const RigorousReal next_power = pow(decay, m + 1);
      RigorousReal tail = dim_two
                              ? constant * next_power * ((m + 1L) - m * decay) / (one_minus_decay * one_minus_decay)
                              : constant * next_power / one_minus_decay;
      if (certainly_le(tail, tol)) {
        r.verdict = Verdict::Converges;
        r.partial_sum = sum;
        r.tail_bound = tail.upper();
        r.terms_used = terms;
        return attempt;
      }
    }
    r.verdict = Verdict::Undetermined;
    r.partial_sum = sum;
    r.terms_used = budget.max_terms;
    return attempt;
  });
}

struct FreeTotal {
  Verdict verdict = Verdict::Undetermined;
  std::optional<RigorousReal> value;  // present when Converges
};

/// Total sum over Irr(U_F^+): 1 + 2 sum_{p >= 1} S^p = (1 + S) / (1 - S) when S < 1.
inline FreeTotal total_sum_free(const RigorousReal& s) {
  if (certainly_lt(s, 0L)) throw DomainError("total_sum_free: S must be nonnegative");
  FreeTotal total;
  if (certainly_lt(s, 1L)) {
    // (1 + S) / (1 - S) is increasing, so evaluate at the endpoints.
    auto at = [](const RigorousReal& x) { return (1L + x) / (1L - x); };
    const RigorousReal s_lo = s.lower().clamp_below(0);
    total.verdict = Verdict::Converges;
    total.value = RigorousReal::hull(at(s_lo).lower(), at(s.upper()).upper());
  } else if (certainly_ge(s, 1L)) {
    total.verdict = Verdict::Diverges;
  }
  return total;
}

// --- closed-form bounds: generic over RigorousReal and Dual<RigorousReal> -----

/// sqrt(q)(2 - sqrt(q)) / (sqrt(1 + q^2) (1 - sqrt(q))^2), an upper bound of S when dim(alpha) = 2.
template <class T>
T bound_S_dim2_expr(const T& q) {
  const T s = sqrt(q);
  const T one_minus_s = 1L - s;
  return s * (2L - s) / (sqrt(1L + q * q) * one_minus_s * one_minus_s);
}

/// (1 - q_c^2)^{-1/2} (1 + q_q^2)^{-1/2} sqrt(r) / (1 - sqrt(r)), r = q_q / q_c.
template <class T>
T bound_S_dimge3_expr(const T& q_c, const T& q_q) {
  const T root = sqrt(q_q / q_c);
  return root / (sqrt(1L - q_c * q_c) * sqrt(1L + q_q * q_q) * (1L - root));
}

/// sqrt(2/[2]_q) + sqrt(3/[3]_q): the first two terms of S when dim(alpha) = 2.
template <class T>
T two_term_S_expr(const T& q) {
  return sqrt(lift(q, 2) / eval(q_number(2), q)) + sqrt(lift(q, 3) / eval(q_number(3), q));
}

inline RigorousReal bound_S_dim2(const RigorousReal& q) {
  if (!certainly_gt(q, 0L) || !certainly_lt(q, 1L)) throw DomainError("bound_S_dim2: q must lie in (0, 1)");
  return bound_S_dim2_expr(q);
}

inline RigorousReal bound_S_dimge3(const RigorousReal& q_c, const RigorousReal& q_q) {
  if (!certainly_gt(q_q, 0L) || !certainly_lt(q_c, 1L)) throw DomainError("bound_S_dimge3: need 0 < q_q and q_c < 1");
  if (!certainly_lt(q_q, q_c)) throw DomainError("bound_S_dimge3: q_q must be strictly below q_c");
  return bound_S_dimge3_expr(q_c, q_q);
}

/// The same estimate with the factor (1 + q_q^2)^{-1/2} replaced by its upper bound 1.
inline RigorousReal bound_S_dimge3_coarse(const RigorousReal& q_c, const RigorousReal& ratio_qq_over_qc) {
  if (!certainly_gt(ratio_qq_over_qc, 0L) || !certainly_lt(ratio_qq_over_qc, 1L) || !certainly_lt(q_c, 1L)) {
    throw DomainError("bound_S_dimge3_coarse: need 0 < q_q/q_c < 1 and q_c < 1");
  }
  const RigorousReal root = sqrt(ratio_qq_over_qc);
  return root / (sqrt(1L - q_c * q_c) * (1L - root));
}

// --- certified roots -----------------------------------------------------------

namespace detail {

// Certifies f' > 0 on [lo, hi] by enclosing f' over subintervals.
template <class F>
bool certify_increasing(F&& f, const RigorousReal& lo, const RigorousReal& hi, int max_depth = 24) {
  std::vector<std::pair<std::pair<RigorousReal, RigorousReal>, int>> pending;
  pending.push_back({{lo, hi}, 0});
  std::size_t visited = 0;
  while (!pending.empty()) {
    auto [range, depth] = std::move(pending.back());
    pending.pop_back();
    if (++visited > 100000) return false;
    const RigorousReal x = RigorousReal::hull(range.first, range.second);
    bool ok = false;
    try {
      ok = certainly_gt(f(Dual<RigorousReal>{x, RigorousReal(1L)}).derivative, 0L);
    } catch (const DomainError&) {
      ok = false;
    }
    if (ok) continue;
    if (depth >= max_depth) return false;
    RigorousReal mid = x.midpoint();
    pending.push_back({{range.first, mid}, depth + 1});
    pending.push_back({{mid, range.second}, depth + 1});
  }
  return true;
}

}  // namespace detail

/// Enclosure (width <= tol) of the unique root of f(q) = target on [lo, hi],
/// for f certified increasing there. Doubles precision up to `max_bits` when a
/// midpoint value straddles the target.
template <class F>
RigorousReal certified_increasing_root(F&& f, long target, const mpq_class& lo, const mpq_class& hi,
                                       const RigorousReal& tol, Bits max_bits = 1024) {
  for (Bits bits = working_precision(); bits <= max_bits; bits *= 2) {
    PrecisionScope scope(bits);
    RigorousReal a = RigorousReal::from_rational(lo);
    RigorousReal b = RigorousReal::from_rational(hi);
    if (!a.is_point() || !b.is_point()) throw DomainError("root bracket endpoints must be exactly representable");
    if (!detail::certify_increasing(f, a, b)) continue;
    if (!certainly_lt(f(a), target) || !certainly_gt(f(b), target)) {
      throw DomainError("certified_increasing_root: no sign change on the bracket");
    }
    bool straddled = false;
    while (!certainly_le((b - a), tol)) {
      RigorousReal m = RigorousReal::hull(a, b).midpoint();
      if (m.identical(a) || m.identical(b)) {
        straddled = true;
        break;
      }
      const RigorousReal fm = f(m);
      if (certainly_lt(fm, target)) {
        a = std::move(m);
      } else if (certainly_gt(fm, target)) {
        b = std::move(m);
      } else {
        straddled = true;
        break;
      }
    }
    if (!straddled) return RigorousReal::hull(a, b);
  }
  throw BudgetError("certified_increasing_root: precision budget exhausted");
}

/// Root of bound_S_dim2(q) = 1: below it the dim(alpha) = 2 series S is < 1.
inline RigorousReal threshold_dim2(const RigorousReal& tol) {
  return certified_increasing_root([](const auto& q) { return bound_S_dim2_expr(q); }, 1, mpq_class(1, 65536),
                                   mpq_class(1, 2), tol);
}

/// Root of sqrt(2/[2]_q) + sqrt(3/[3]_q) = 1: above it S > 1 when dim(alpha) = 2.
inline RigorousReal threshold_remark(const RigorousReal& tol) {
  return certified_increasing_root([](const auto& q) { return two_term_S_expr(q); }, 1, mpq_class(1, 65536),
                                   mpq_class(1, 2), tol);
}

/// (1 + sqrt((3 sqrt 5 + 5) / 10))^{-2}: the q_q / q_c threshold for dim(alpha) >= 3.
inline RigorousReal threshold_ratio_dimge3() {
  const RigorousReal root5 = sqrt(RigorousReal(5L));
  const RigorousReal base = 1L + sqrt((3L * root5 + 5L) / 10L);
  return 1L / (base * base);
}

/// q_c for dim(alpha) = 3: (3 - sqrt 5) / 2.
inline RigorousReal q_c_dim3() { return solve_fundamental_q(RigorousReal(3L)); }

// --- Kac part and MASA verdicts -----------------------------------------------

namespace detail {
// All words of length 1..max_length in shortlex order.
inline std::vector<FreeWord> words_up_to(unsigned max_length) {
  std::vector<FreeWord> words;
  for (unsigned len = 1; len <= max_length; ++len) {
    for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
      std::string letters;
      for (unsigned i = 0; i < len; ++i) letters.push_back((mask >> (len - 1 - i)) & 1u ? 'B' : 'A');
      words.emplace_back(letters);
    }
  }
  return words;
}
}  // namespace detail

inline constexpr unsigned kMaxKacWordLength = 16;

/// Labels whose rho cannot be distinguished from 1, i.e. dim_q meets dim.
/// Ladder families scan n <= n_max; the free unitary family scans e and all
/// words of length <= n_max.
inline std::vector<IrrepLabel> kac_part(const FusionFamily& family, unsigned n_max) {
  std::vector<IrrepLabel> labels;
  if (!is_ladder(family.kind())) {
    if (n_max > kMaxKacWordLength) throw BudgetError("kac_part: word length above 16");
    labels.emplace_back(FreeWord(""));
    const RigorousReal q = family.quantum_q();
    for (const FreeWord& w : detail::words_up_to(n_max)) {
      if (quantum_dim_with_q(w, family, q).contains(classical_dim(w, family))) labels.emplace_back(w);
    }
    return labels;
  }
  detail::LadderDims dims(family);
  for (unsigned n = 0; n <= n_max; ++n) {
    if (dims.quantum().contains(dims.classical())) labels.emplace_back(Ladder{n});
    dims.advance();
  }
  return labels;
}

inline constexpr const char* kVerdictNotMasa = "not a MASA";
inline constexpr const char* kVerdictRelativeCommutant =
    "quasi-split; relative commutant not contained in class functions";
inline constexpr const char* kVerdictNoConclusion = "no conclusion";

struct MasaBudget {
  RigorousReal tol = RigorousReal::from_decimal("1e-6");
  unsigned n_max = 64;        // ladder labels checked by kac_part
  unsigned word_length = 8;   // free words checked for rho != 1
  SeriesBudget series;
};

struct MasaVerdict {
  Tri quasi_split = Tri::Undetermined;
  bool all_nontrivial_rho_nontrivial = false;
  std::string verdict_text = kVerdictNoConclusion;
  SeriesResult series;
  std::optional<FreeTotal> total;  // free unitary only
};

namespace detail {
inline Tri summable(Verdict v) {
  switch (v) {
    case Verdict::Converges: return Tri::Yes;
    case Verdict::Diverges: return Tri::No;
    case Verdict::Undetermined: return Tri::Undetermined;
  }
  return Tri::Undetermined;
}

}  // namespace detail

inline MasaVerdict masa_verdict(const FusionFamily& family, const MasaBudget& budget = {}) {
  MasaVerdict v;
  if (is_ladder(family.kind())) {
    v.series = quasi_split_sum_ladder(family, budget.tol, budget.series);
    v.quasi_split = detail::summable(v.series.verdict);
    v.all_nontrivial_rho_nontrivial = kac_part(family, budget.n_max).size() == 1;
    if (v.quasi_split == Tri::Yes && v.all_nontrivial_rho_nontrivial) v.verdict_text = kVerdictNotMasa;
    return v;
  }
  v.series = block_sum_S(family.classical_q(), family.quantum_q(), budget.tol, budget.series);
  FreeTotal total;
  if (v.series.verdict == Verdict::Diverges) {
    total.verdict = Verdict::Diverges;
  } else if (v.series.verdict == Verdict::Converges) {
    total = total_sum_free(v.series.enclosure());
  }
  v.total = total;
  v.quasi_split = detail::summable(total.verdict);
  v.all_nontrivial_rho_nontrivial = kac_part(family, budget.word_length).size() == 1;
  if (v.quasi_split == Tri::Yes && v.all_nontrivial_rho_nontrivial) v.verdict_text = kVerdictRelativeCommutant;
  return v;
}

}  // namespace qclass

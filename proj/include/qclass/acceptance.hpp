#pragma once

// The acceptance grid. Each check returns a pass flag plus a one-line detail;
// shared by the acceptance test binary and the `report` command.

#include <gmpxx.h>

#include <chrono>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qclass/bicrossed.hpp"
#include "qclass/combinatorics.hpp"
#include "qclass/criteria.hpp"
#include "qclass/fusion.hpp"
#include "qclass/spectral.hpp"

namespace qclass::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

inline RigorousReal dec(const char* text) { return RigorousReal::from_decimal(text); }

// Widens x by eps on both sides.
inline RigorousReal widen(const RigorousReal& x, const RigorousReal& eps) {
  return RigorousReal::hull((x - eps).lower(), (x + eps).upper());
}

inline std::string interval(const RigorousReal& x, int digits = 12) {
  return "[" + x.lower_string(digits) + ", " + x.upper_string(digits) + "]";
}

inline std::vector<FreeWord> words_through(unsigned max_length) {
  std::vector<FreeWord> words{FreeWord("")};
  for (const FreeWord& w : qclass::detail::words_up_to(max_length)) words.push_back(w);
  return words;
}

template <class F>
CriterionResult timed(int id, std::string title, F body) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail += std::string(r.detail.empty() ? "" : "; ") + "exception: " + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Dimension of a word through the recursion d(w a) = d(w) d(a) - sum of the
// other components of w (x) a, which are all shorter.
template <class Value, class Fundamental>
Value recursive_word_dim(const FreeWord& w, const Fundamental& fundamental, std::map<FreeWord, Value>& memo) {
  if (w.empty()) return Value(1L);
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  const FreeWord head = w.prefix(w.size() - 1);
  const FreeWord last = w.suffix_from(w.size() - 1);
  Value d = recursive_word_dim<Value>(head, fundamental, memo) * fundamental;
  for (const auto& [label, m] : tensor_free(head, last).terms()) {
    const FreeWord& c = std::get<FreeWord>(label);
    if (c == w) continue;
    d = d - recursive_word_dim<Value>(c, fundamental, memo) * static_cast<long>(m);
  }
  memo.emplace(w, d);
  return d;
}

}  // namespace detail

inline CriterionResult criterion_1() {
  return detail::timed(1, "threshold_dim2 at tol 1e-3 encloses 0.0861, runtime < 5 s", [](CriterionResult& r) {
    const RigorousReal tol = detail::dec("1e-3");
    const auto start = std::chrono::steady_clock::now();
    const RigorousReal root = threshold_dim2(tol);
    const bool fast = detail::elapsed(start) < 5;
    r.pass = root.contains(mpq_class(861, 10000)) && certainly_le(root.width(), tol) && fast;
    r.detail = "root " + detail::interval(root);
  });
}

inline CriterionResult criterion_2() {
  return detail::timed(2, "ratio3 encloses 0.2306 within 1e-4; bound_S_dimge3 at the boundary encloses 1 within 1e-6",
                       [](CriterionResult& r) {
                         const RigorousReal ratio = threshold_ratio_dimge3();
                         const bool ratio_ok = detail::widen(ratio, detail::dec("1e-4")).contains(mpq_class(2306, 10000));
                         const RigorousReal qc = q_c_dim3();
                         const RigorousReal bound = bound_S_dimge3(qc, ratio * qc);
                         const bool bound_ok = detail::widen(bound, detail::dec("1e-6")).contains(1L);
                         r.pass = ratio_ok && bound_ok;
                         r.detail = "ratio " + detail::interval(ratio) + (ratio_ok ? " ok" : " off") +
                                    "; bound_S_dimge3 " + detail::interval(bound) + (bound_ok ? " ok" : " off") +
                                    "; without the (1+q_q^2)^(-1/2) factor " +
                                    detail::interval(bound_S_dimge3_coarse(qc, ratio));
                       });
}

inline CriterionResult criterion_3() {
  return detail::timed(3, "threshold_remark encloses 0.2134; S(0.22) > 1 and S(0.05) < 1 certified; < 10 s each",
                       [](CriterionResult& r) {
                         const RigorousReal tol = detail::dec("1e-3");
                         auto start = std::chrono::steady_clock::now();
                         const RigorousReal root = threshold_remark(tol);
                         const double t_root = detail::elapsed(start);
                         const bool root_ok = root.contains(mpq_class(2134, 10000)) && certainly_le(root.width(), tol);

                         const RigorousReal one(1L);
                         const RigorousReal series_tol = detail::dec("1e-10");
                         start = std::chrono::steady_clock::now();
                         const SeriesResult high = block_sum_S(one, detail::dec("0.22"), series_tol);
                         const double t_high = detail::elapsed(start);
                         start = std::chrono::steady_clock::now();
                         const SeriesResult low = block_sum_S(one, detail::dec("0.05"), series_tol);
                         const double t_low = detail::elapsed(start);
                         // S > 1 needs only the partial sum; S < 1 needs the tail.
                         const bool high_ok = certainly_gt(high.partial_sum, 1L);
                         const bool low_ok = low.verdict == Verdict::Converges && certainly_lt(low.enclosure(), 1L);
                         const bool fast = t_root < 10 && t_high < 10 && t_low < 10;
                         r.pass = root_ok && high_ok && low_ok && fast;
                         std::ostringstream os;
                         os << "root " << detail::interval(root) << "; S(0.22) " << detail::interval(high.enclosure())
                            << "; S(0.05) " << detail::interval(low.enclosure());
                         r.detail = os.str();
                       });
}

inline CriterionResult criterion_4() {
  return detail::timed(4, "modular norm identities, ladder n <= 20, q in {0.3, 0.5, 0.8}", [](CriterionResult& r) {
    const RigorousReal max_width = detail::dec("1e-20");
    std::size_t checked = 0;
    std::string failures;
    for (const mpq_class& q : {mpq_class(3, 10), mpq_class(1, 2), mpq_class(4, 5)}) {
      const FusionFamily family = FusionFamily::from_deformation(FamilyKind::Su2Ladder, 2, q);
      const RigorousReal qr = RigorousReal::from_rational(q);
      for (unsigned n = 0; n <= 20; ++n) {
        const RhoSpectrum rho = rho_spectrum(Ladder{n}, qr);
        const RigorousReal at_zero = modular_norm_sq(rho, RigorousReal(0L));
        const RigorousReal at_quarter = modular_norm_sq(rho, RigorousReal::from_rational(mpq_class(-1, 4)));
        const RigorousReal expected = ratio(Ladder{n}, family);
        const bool ok = at_zero.contains(1L) && overlaps(at_quarter, expected) &&
                        certainly_le(at_zero.width(), max_width) && certainly_le(at_quarter.width(), max_width) &&
                        certainly_le(expected.width(), max_width);
        ++checked;
        if (!ok) failures += " (q=" + q.get_str() + ", n=" + std::to_string(n) + ")";
      }
    }
    r.pass = failures.empty();
    r.detail = std::to_string(checked) + " spectra checked" + (failures.empty() ? "" : "; failed:" + failures);
  });
}

inline CriterionResult criterion_5() {
  return detail::timed(5, "dimension additivity: ladder n, m <= 20; free words of length <= 5", [](CriterionResult& r) {
    std::size_t pairs = 0;
    std::string failures;
    const std::vector<FusionFamily> ladders = {FusionFamily::from_deformation(FamilyKind::Su2Ladder, 3, mpq_class(1, 5)),
                                               FusionFamily::so3_ladder(4, mpq_class(10))};
    for (const FusionFamily& family : ladders) {
      const RigorousReal q = family.quantum_q();
      std::vector<mpz_class> dc;
      std::vector<RigorousReal> dq;
      for (unsigned n = 0; n <= 40; ++n) {
        dc.push_back(classical_dim(Ladder{n}, family));
        dq.push_back(quantum_dim_with_q(Ladder{n}, family, q));
      }
      for (unsigned m = 0; m <= 20; ++m) {
        for (unsigned n = 0; n <= 20; ++n) {
          mpz_class sum_c = 0;
          RigorousReal sum_q(0L);
          for (const auto& [label, mult] : tensor_ladder(Ladder{m}, Ladder{n}, family).terms()) {
            const unsigned k = std::get<Ladder>(label).n;
            sum_c += dc[k] * mpz_class(static_cast<unsigned long>(mult));
            sum_q += dq[k] * static_cast<long>(mult);
          }
          ++pairs;
          if (sum_c != dc[m] * dc[n] || !overlaps(sum_q, dq[m] * dq[n])) {
            failures += " (" + family.describe() + ", " + std::to_string(m) + "x" + std::to_string(n) + ")";
          }
        }
      }
    }
    const std::vector<FusionFamily> free = {FusionFamily::from_deformation(FamilyKind::FreeUnitary, 2, mpq_class(1, 10)),
                                            FusionFamily::free_unitary(3, mpq_class(5))};
    const std::vector<FreeWord> words = detail::words_through(5);
    for (const FusionFamily& family : free) {
      const RigorousReal q = family.quantum_q();
      std::map<FreeWord, std::pair<mpz_class, RigorousReal>> d;
      for (const FreeWord& w : detail::words_through(10)) {
        d.emplace(w, std::make_pair(classical_dim(w, family), quantum_dim_with_q(w, family, q)));
      }
      for (const FreeWord& x : words) {
        for (const FreeWord& y : words) {
          mpz_class sum_c = 0;
          RigorousReal sum_q(0L);
          for (const auto& [label, mult] : tensor_free(x, y).terms()) {
            const auto& [c, qd] = d.at(std::get<FreeWord>(label));
            sum_c += c * mpz_class(static_cast<unsigned long>(mult));
            sum_q += qd * static_cast<long>(mult);
          }
          ++pairs;
          const auto& [cx, qx] = d.at(x);
          const auto& [cy, qy] = d.at(y);
          if (sum_c != cx * cy || !overlaps(sum_q, qx * qy)) {
            failures += " (" + family.describe() + ", " + x.to_string() + "x" + y.to_string() + ")";
          }
        }
      }
    }
    r.pass = failures.empty();
    r.detail = std::to_string(pairs) + " pairs checked" + (failures.empty() ? "" : "; failed:" + failures);
  });
}

inline CriterionResult criterion_6() {
  return detail::timed(6, "block-product word dimension equals the tensor_free recursion, length <= 6, dim 2 and 3",
                       [](CriterionResult& r) {
                         std::size_t checked = 0;
                         std::string failures;
                         const std::vector<FusionFamily> families = {
                             FusionFamily::from_deformation(FamilyKind::FreeUnitary, 2, mpq_class(1, 10)),
                             FusionFamily::free_unitary(3, mpq_class(5))};
                         for (const FusionFamily& family : families) {
                           const RigorousReal q = family.quantum_q();
                           std::map<FreeWord, mpz_class> memo_c;
                           std::map<FreeWord, RigorousReal> memo_q;
                           const mpz_class fund_c(family.dim_c_fund());
                           const RigorousReal fund_q = family.dim_q_fund();
                           for (const FreeWord& w : detail::words_through(6)) {
                             const mpz_class rc = detail::recursive_word_dim<mpz_class>(w, fund_c, memo_c);
                             const RigorousReal rq = detail::recursive_word_dim<RigorousReal>(w, fund_q, memo_q);
                             ++checked;
                             if (rc != classical_dim(w, family) || !overlaps(rq, quantum_dim_with_q(w, family, q))) {
                               failures += " (" + family.describe() + ", " + w.to_string() + ")";
                             }
                           }
                         }
                         r.pass = failures.empty();
                         r.detail = std::to_string(checked) + " words checked" +
                                    (failures.empty() ? "" : "; failed:" + failures);
                       });
}

inline CriterionResult criterion_7() {
  return detail::timed(7, "verify_decay to n_max = 50 and quasi_split_sum_ladder tail <= 1e-6 on the family grid",
                       [](CriterionResult& r) {
                         const RigorousReal tol = detail::dec("1e-6");
                         std::vector<std::function<FusionFamily()>> makers;
                         std::vector<std::string> names;
                         for (long n : {2L, 3L, 4L, 5L}) {
                           for (const mpq_class& q : {mpq_class(1, 10), mpq_class(1, 5), mpq_class(3, 10)}) {
                             makers.emplace_back([n, q] { return FusionFamily::from_deformation(FamilyKind::Su2Ladder, n, q); });
                             names.push_back("o-plus N=" + std::to_string(n) + " q_q=" + q.get_str());
                           }
                         }
                         for (long n : {3L, 4L}) {
                           for (long d : {5L, 10L}) {
                             makers.emplace_back([n, d] { return FusionFamily::so3_ladder(n, mpq_class(d)); });
                             names.push_back("so3 N=" + std::to_string(n) + " dim_q=" + std::to_string(d));
                           }
                         }
                         std::size_t checked = 0;
                         std::vector<std::string> skipped;
                         std::string failures;
                         for (std::size_t i = 0; i < makers.size(); ++i) {
                           std::optional<FusionFamily> family;
                           try {
                             family = makers[i]();
                           } catch (const DomainError&) {
                             skipped.push_back(names[i]);
                             continue;
                           }
                           const bool decay = verify_decay(*family, 50);
                           const SeriesResult s = quasi_split_sum_ladder(*family, tol);
                           ++checked;
                           if (!decay || s.verdict != Verdict::Converges || !s.tail_bound ||
                               !certainly_le(*s.tail_bound, tol)) {
                             failures += " (" + names[i] + ")";
                           }
                         }
                         r.pass = failures.empty() && checked > 0;
                         r.detail = std::to_string(checked) + " families checked";
                         if (!skipped.empty()) {
                           r.detail += "; rejected as dim_q < N:";
                           for (const auto& s : skipped) r.detail += " (" + s + ")";
                         }
                         if (!failures.empty()) r.detail += "; failed:" + failures;
                       });
}

inline CriterionResult criterion_8() {
  return detail::timed(8, "moment oracles: Catalan and no-singleton noncrossing counts", [](CriterionResult& r) {
    std::string failures;
    std::ostringstream os;
    const FusionFamily su2 = FusionFamily::from_deformation(FamilyKind::Su2Ladder, 2, mpq_class(1, 2));
    for (unsigned k = 0; 2 * k <= 16; ++k) {
      const std::vector<IrrepLabel> seq(2 * k, Ladder{1});
      const auto got = invariant_multiplicity(seq, su2);
      if (got != combinatorics::noncrossing_pairings(static_cast<int>(2 * k)) || got != combinatorics::catalan(k)) {
        failures += " (su2 2k=" + std::to_string(2 * k) + ")";
      }
    }
    const FusionFamily so3 = FusionFamily::so3_ladder(4, mpq_class(10));
    os << "so3:";
    for (unsigned k = 0; k <= 8; ++k) {
      const std::vector<IrrepLabel> seq(k, Ladder{1});
      const auto got = invariant_multiplicity(seq, so3);
      os << ' ' << got;
      if (got != combinatorics::noncrossing_without_singletons(static_cast<int>(k))) {
        failures += " (so3 k=" + std::to_string(k) + ")";
      }
    }
    const std::vector<std::uint64_t> expected_so3 = {1, 0, 1, 1, 3, 6, 15, 36};
    for (unsigned k = 0; k < expected_so3.size(); ++k) {
      if (combinatorics::noncrossing_without_singletons(static_cast<int>(k)) != expected_so3[k]) {
        failures += " (so3 oracle k=" + std::to_string(k) + ")";
      }
    }
    const FusionFamily u = FusionFamily::from_deformation(FamilyKind::FreeUnitary, 2, mpq_class(1, 10));
    for (unsigned k = 0; 2 * k <= 12; ++k) {
      std::string letters;
      std::vector<IrrepLabel> seq;
      for (unsigned i = 0; i < 2 * k; ++i) {
        letters.push_back(i % 2 == 0 ? 'A' : 'B');
        seq.emplace_back(FreeWord(std::string(1, letters.back())));
      }
      const auto got = invariant_multiplicity(seq, u);
      if (got != combinatorics::noncrossing_ab_pairings(letters) || got != combinatorics::catalan(k)) {
        failures += " (u-plus 2k=" + std::to_string(2 * k) + ")";
      }
    }
    r.pass = failures.empty();
    r.detail = os.str() + (failures.empty() ? "" : "; failed:" + failures);
  });
}

inline CriterionResult criterion_9() {
  return detail::timed(9, "krylov_rank = commutant_dim = M, interior residuals <= 1e-12, runtime < 30 s",
                       [](CriterionResult& r) {
                         const auto start = std::chrono::steady_clock::now();
                         std::string failures;
                         long double worst = 0;
                         const std::vector<std::complex<long double>> phases = {
                             {1.0L, 0.0L}, {0.0L, 1.0L}, std::polar(1.0L, 1.0L)};
                         for (std::size_t m : {2u, 4u, 8u, 16u}) {
                           for (int tenth = 1; tenth <= 9; ++tenth) {
                             const long double q = tenth / 10.0L;
                             const JacobiOperator t = build_jacobi(m, q);
                             const auto kr = krylov_rank(t);
                             const auto cd = commutant_dim(t);
                             const bool simple = min_eigenvalue_gap(t) > 0;
                             if (kr != m || cd != m || !simple) {
                               failures += " (M=" + std::to_string(m) + ", q=0." + std::to_string(tenth) + ")";
                             }
                             if (m < 4) continue;
                             for (const auto& lambda : phases) {
                               const RelationResiduals res = suq2_relation_residuals(m, q, lambda);
                               worst = std::max(worst, res.interior_max);
                             }
                           }
                         }
                         const double seconds = detail::elapsed(start);
                         r.pass = failures.empty() && worst <= 1e-12L && seconds < 30;
                         std::ostringstream os;
                         os << "max interior residual " << static_cast<double>(worst);
                         r.detail = os.str() + (failures.empty() ? "" : "; failed:" + failures);
                       });
}

inline CriterionResult criterion_10() {
  return detail::timed(10, "bicrossed truth table over 50 random rational (r, s) in both modes", [](CriterionResult& r) {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> numerator(-6, 6);
    std::uniform_int_distribution<int> denominator(1, 3);
    auto sample = [&] {
      mpq_class a(numerator(rng), denominator(rng));
      mpq_class b(numerator(rng), denominator(rng));
      a.canonicalize();
      b.canonicalize();
      return ScalingTime{a, b};
    };
    std::vector<ScalingTime> times;
    for (int i = 0; i < 50; ++i) times.push_back(sample());
    const std::vector<BicrossedParams> modes = {
        BicrossedParams::irrational(mpq_class(1, 2), RigorousReal::from_decimal("1.2345")),
        BicrossedParams::rational(mpq_class(1, 2), mpq_class(1, 2))};
    std::string failures;
    std::size_t trivial_count = 0;
    std::size_t inner_count = 0;
    for (const auto& params : modes) {
      const std::string mode = params.is_rational() ? "rational" : "irrational";
      for (const auto& t : times) {
        const bool trivial = is_trivial_scaling(t, params);
        const bool inner = is_inner_scaling(t, params);
        trivial_count += trivial;
        inner_count += inner;
        if (trivial && !inner) failures += " (" + mode + " trivial not inner)";
        if (is_trivial_scaling(-t, params) != trivial || is_inner_scaling(-t, params) != inner) {
          failures += " (" + mode + " negation)";
        }
        if (!is_inner_scaling(ScalingTime{t.r, 0}, params)) failures += " (" + mode + " gamma nu not inner)";
        for (const auto& u : times) {
          if (trivial && is_trivial_scaling(u, params) && !is_trivial_scaling(t + u, params)) {
            failures += " (" + mode + " trivial sum)";
          }
          if (inner && is_inner_scaling(u, params) && !is_inner_scaling(t + u, params)) {
            failures += " (" + mode + " inner sum)";
          }
        }
      }
      if (!is_trivial_scaling(ScalingTime{0, 1}, params)) failures += " (" + mode + " row t = pi/log|q|)";
    }
    if (!is_inner_scaling(ScalingTime{mpq_class(5, 3), 2}, modes[0])) failures += " (row r=5/3, s=2)";
    if (!center_description(modes[0]).trivial) failures += " (row trivial center)";
    if (is_inner_scaling(ScalingTime{0, mpq_class(1, 2)}, modes[0])) failures += " (row r=0, s=1/2)";
    if (!is_trivial_scaling(ScalingTime{1, mpq_class(1, 2)}, modes[1])) failures += " (row r=1, s=1/2)";
    r.pass = failures.empty();
    r.detail = std::to_string(trivial_count) + " trivial and " + std::to_string(inner_count) +
               " inner out of 100 evaluations" + (failures.empty() ? "" : "; failed:" + failures);
  });
}

inline CriterionResult criterion_11() {
  return detail::timed(11, "Kac degeneration for every family kind", [](CriterionResult& r) {
    std::string failures;
    const std::vector<FusionFamily> families = {
        FusionFamily::kac(FamilyKind::Su2Ladder, 2), FusionFamily::kac(FamilyKind::Su2Ladder, 3),
        FusionFamily::kac(FamilyKind::So3Ladder, 3), FusionFamily::kac(FamilyKind::So3Ladder, 4),
        FusionFamily::kac(FamilyKind::FreeUnitary, 2), FusionFamily::kac(FamilyKind::FreeUnitary, 3)};
    const RigorousReal tol = detail::dec("1e-6");
    for (const FusionFamily& family : families) {
      const std::string name = family.describe();
      const bool ladder = is_ladder(family.kind());
      std::vector<IrrepLabel> labels;
      if (ladder) {
        for (unsigned n = 0; n <= 20; ++n) labels.emplace_back(Ladder{n});
      } else {
        for (const FreeWord& w : detail::words_through(6)) labels.emplace_back(w);
      }
      for (const auto& label : labels) {
        if (!ratio(label, family).contains(1L)) failures += " (" + name + " ratio " + to_string(label) + ")";
      }
      const SeriesResult s = ladder ? quasi_split_sum_ladder(family, tol)
                                    : block_sum_S(family.classical_q(), family.quantum_q(), tol);
      if (s.verdict != Verdict::Diverges) failures += " (" + name + " series)";
      const unsigned scan = ladder ? 20 : 6;
      if (kac_part(family, scan).size() != labels.size()) failures += " (" + name + " kac_part)";
      const MasaVerdict v = masa_verdict(family);
      if (v.verdict_text != kVerdictNoConclusion || v.quasi_split != Tri::No) {
        failures += " (" + name + " masa_verdict)";
      }
    }
    r.pass = failures.empty();
    r.detail = std::to_string(families.size()) + " Kac families" + (failures.empty() ? "" : "; failed:" + failures);
  });
}

inline std::vector<CriterionResult> run_all() {
  return {criterion_1(), criterion_2(), criterion_3(), criterion_4(),  criterion_5(), criterion_6(),
          criterion_7(), criterion_8(), criterion_9(), criterion_10(), criterion_11()};
}

}  // namespace qclass::acceptance

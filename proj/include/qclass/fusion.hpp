#pragma once

// Irreducible-representation labels, fusion rules and dimension functions for
// three families of compact quantum groups:
//
//  * Su2Ladder   - Irr = Z_+, U^1 x U^n = U^{n-1} + U^{n+1}        (O_F^+ type)
//  * So3Ladder   - Irr = Z_+, U^1 x U^n = U^{n-1} + U^n + U^{n+1}  (quantum automorphism type)
//  * FreeUnitary - Irr = free monoid on {A, B}, A the fundamental, B = conj(A)  (U_F^+ type)

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qclass/error.hpp"
#include "qclass/rigorous.hpp"
#include "qclass/scalars.hpp"

namespace qclass {

struct Ladder {
  unsigned n = 0;
  friend auto operator<=>(const Ladder&, const Ladder&) = default;
};

/// A word over {A, B}; the empty word is the trivial representation e.
class FreeWord {
 public:
  FreeWord() = default;

  /// Accepts a string of 'A'/'B' letters, or "e" / "" for the empty word.
  explicit FreeWord(std::string_view letters) {
    if (letters == "e") return;
    for (char c : letters) {
      if (c != 'A' && c != 'B') throw DomainError("free word letters must be A or B: '" + std::string(letters) + "'");
    }
    letters_ = std::string(letters);
  }

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char front() const { return letters_.front(); }
  char back() const { return letters_.back(); }

  FreeWord prefix(std::size_t n) const { return FreeWord::raw(letters_.substr(0, n)); }
  FreeWord suffix_from(std::size_t pos) const { return FreeWord::raw(letters_.substr(pos)); }

  bool starts_with(const FreeWord& w) const { return letters_.compare(0, w.size(), w.letters_) == 0; }

  /// True when no two adjacent letters coincide.
  bool is_alternating() const {
    return std::adjacent_find(letters_.begin(), letters_.end()) == letters_.end();
  }

  std::string to_string() const { return letters_.empty() ? "e" : letters_; }

  friend FreeWord operator+(const FreeWord& a, const FreeWord& b) { return FreeWord::raw(a.letters_ + b.letters_); }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  // Shortlex: shorter words first, then lexicographic.
  friend std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters_.compare(b.letters_) <=> 0;
  }

 private:
  static FreeWord raw(std::string s) {
    FreeWord w;
    w.letters_ = std::move(s);
    return w;
  }
  std::string letters_;
};

using IrrepLabel = std::variant<Ladder, FreeWord>;

inline std::string to_string(const IrrepLabel& label) {
  if (const auto* l = std::get_if<Ladder>(&label)) return std::to_string(l->n);
  return std::get<FreeWord>(label).to_string();
}

inline bool is_trivial(const IrrepLabel& label) {
  if (const auto* l = std::get_if<Ladder>(&label)) return l->n == 0;
  return std::get<FreeWord>(label).empty();
}

enum class FamilyKind { Su2Ladder, So3Ladder, FreeUnitary };

inline std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Su2Ladder: return "su2-ladder";
    case FamilyKind::So3Ladder: return "so3-ladder";
    case FamilyKind::FreeUnitary: return "u-plus";
  }
  return "?";
}

inline bool is_ladder(FamilyKind kind) { return kind != FamilyKind::FreeUnitary; }

/// Fusion data of a quantum group: its kind, the classical dimension N of the
/// fundamental representation and its quantum dimension Tr(rho).
///
/// The quantum dimension is stored exactly (rational) when known exactly, so
/// enclosures can be recomputed at any working precision.
class FusionFamily {
 public:
  static FusionFamily su2_ladder(long n, mpq_class dim_q) { return {FamilyKind::Su2Ladder, n, std::move(dim_q)}; }
  static FusionFamily so3_ladder(long n, mpq_class dim_q) { return {FamilyKind::So3Ladder, n, std::move(dim_q)}; }
  static FusionFamily free_unitary(long n, mpq_class dim_q) { return {FamilyKind::FreeUnitary, n, std::move(dim_q)}; }

  /// Quantum dimension given through its deformation q in (0, 1]: dim_q = q + 1/q,
  /// or q + 1 + 1/q for the SO(3)-type ladder.
  static FusionFamily from_deformation(FamilyKind kind, long n, const mpq_class& q) {
    if (q <= 0 || q > 1) throw DomainError("deformation parameter must lie in (0, 1]");
    mpq_class dim_q = q + 1 / q + (kind == FamilyKind::So3Ladder ? 1 : 0);
    dim_q.canonicalize();
    return {kind, n, std::move(dim_q)};
  }

  static FusionFamily kac(FamilyKind kind, long n) { return {kind, n, mpq_class(n)}; }

  /// A family whose quantum dimension is only known as an enclosure.
  FusionFamily(FamilyKind kind, long n, RigorousReal dim_q) : kind_(kind), dim_c_(n), dim_q_(std::move(dim_q)) {
    validate();
  }

  FusionFamily(FamilyKind kind, long n, mpq_class dim_q) : kind_(kind), dim_c_(n), dim_q_(std::move(dim_q)) {
    validate();
  }

  FamilyKind kind() const { return kind_; }
  long dim_c_fund() const { return dim_c_; }

  RigorousReal dim_q_fund() const {
    if (const auto* q = std::get_if<mpq_class>(&dim_q_)) return RigorousReal::from_rational(*q);
    return std::get<RigorousReal>(dim_q_);
  }

  std::optional<mpq_class> exact_dim_q() const {
    if (const auto* q = std::get_if<mpq_class>(&dim_q_)) return *q;
    return std::nullopt;
  }

  /// dim_q == dim exactly.
  bool is_kac() const {
    if (const auto* q = std::get_if<mpq_class>(&dim_q_)) return *q == dim_c_;
    const auto& r = std::get<RigorousReal>(dim_q_);
    return r.is_point() && r.contains(dim_c_);
  }

  /// dim_q == dim cannot be excluded.
  bool possibly_kac() const { return dim_q_fund().contains(dim_c_); }

  /// Deformation parameter of the classical dimension function.
  RigorousReal classical_q() const { return solve_fundamental_q(RigorousReal(recursion_base(dim_c_))); }

  /// Deformation parameter of the quantum dimension function.
  RigorousReal quantum_q() const {
    RigorousReal d = dim_q_fund();
    if (kind_ == FamilyKind::So3Ladder) d = d - 1L;
    return solve_fundamental_q(d);
  }

  std::string describe() const {
    std::ostringstream os;
    os << to_string(kind_) << "(N=" << dim_c_ << ", dim_q=";
    if (const auto* q = std::get_if<mpq_class>(&dim_q_)) {
      os << q->get_str();
    } else {
      os << std::get<RigorousReal>(dim_q_);
    }
    os << ')';
    return os.str();
  }

  friend bool operator==(const FusionFamily& a, const FusionFamily& b) {
    if (a.kind_ != b.kind_ || a.dim_c_ != b.dim_c_) return false;
    const auto qa = a.exact_dim_q();
    const auto qb = b.exact_dim_q();
    if (qa && qb) return *qa == *qb;
    return a.dim_q_fund().identical(b.dim_q_fund());
  }

 private:
  long recursion_base(long d) const { return kind_ == FamilyKind::So3Ladder ? d - 1 : d; }

  void validate() const {
    const long min_dim = kind_ == FamilyKind::So3Ladder ? 3 : 2;
    if (dim_c_ < min_dim) {
      throw DomainError(to_string(kind_) + ": classical dimension of the fundamental must be >= " +
                        std::to_string(min_dim));
    }
    if (certainly_lt(dim_q_fund(), dim_c_)) {
      throw DomainError(to_string(kind_) + ": quantum dimension of the fundamental must be >= its classical dimension " +
                        std::to_string(dim_c_));
    }
  }

  FamilyKind kind_;
  long dim_c_;
  std::variant<mpq_class, RigorousReal> dim_q_;
};

/// Multiset of irreducible labels, kept in canonical (sorted) order.
class Decomposition {
 public:
  using Multiplicity = std::uint64_t;

  Decomposition() = default;
  Decomposition(std::initializer_list<std::pair<IrrepLabel, Multiplicity>> terms) {
    for (const auto& [label, m] : terms) add(label, m);
  }

  void add(const IrrepLabel& label, Multiplicity m = 1) {
    if (m == 0) return;
    auto& slot = terms_[label];
    if (__builtin_add_overflow(slot, m, &slot)) throw BudgetError("multiplicity overflow");
  }

  /// Adds `times` copies of every term of `other`.
  void add_scaled(const Decomposition& other, Multiplicity times) {
    for (const auto& [label, m] : other.terms_) {
      Multiplicity scaled;
      if (__builtin_mul_overflow(m, times, &scaled)) throw BudgetError("multiplicity overflow");
      add(label, scaled);
    }
  }

  Multiplicity multiplicity(const IrrepLabel& label) const {
    const auto it = terms_.find(label);
    return it == terms_.end() ? 0 : it->second;
  }

  const std::map<IrrepLabel, Multiplicity>& terms() const& { return terms_; }
  std::map<IrrepLabel, Multiplicity> terms() && { return std::move(terms_); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [label, m] : terms_) {
      if (!first) os << ", ";
      first = false;
      os << qclass::to_string(label) << ':' << m;
    }
    os << '}';
    return os.str();
  }

 private:
  std::map<IrrepLabel, Multiplicity> terms_;
};

// --- conjugation -----------------------------------------------------------

/// Reverse the word and swap A <-> B.
inline FreeWord conjugate(const FreeWord& w) {
  std::string s(w.letters().rbegin(), w.letters().rend());
  for (char& c : s) c = c == 'A' ? 'B' : 'A';
  return FreeWord(s);
}

inline void require_label_in_family(const IrrepLabel& label, const FusionFamily& family) {
  const bool ladder_label = std::holds_alternative<Ladder>(label);
  if (ladder_label != is_ladder(family.kind())) {
    throw WrongFamilyError("label " + to_string(label) + " does not belong to family " + to_string(family.kind()));
  }
}

inline IrrepLabel conjugate(const IrrepLabel& label, const FusionFamily& family) {
  require_label_in_family(label, family);
  if (std::holds_alternative<Ladder>(label)) return label;
  return conjugate(std::get<FreeWord>(label));
}

// --- tensor products --------------------------------------------------------

inline Decomposition tensor_fundamental(Ladder x, const FusionFamily& family) {
  Decomposition d;
  switch (family.kind()) {
    case FamilyKind::Su2Ladder:
      if (x.n > 0) d.add(Ladder{x.n - 1});
      d.add(Ladder{x.n + 1});
      return d;
    case FamilyKind::So3Ladder:
      if (x.n > 0) {
        d.add(Ladder{x.n - 1});
        d.add(Ladder{x.n});
      }
      d.add(Ladder{x.n + 1});
      return d;
    case FamilyKind::FreeUnitary: break;
  }
  throw WrongFamilyError("tensor_fundamental needs a ladder family");
}

/// U^m x U^n, reached by iterating fundamental products in the fusion ring:
/// U^{k+1} = U^1 U^k - U^{k-1} (SU(2) type) or U^1 U^k - U^k - U^{k-1} (SO(3) type).
inline Decomposition tensor_ladder(Ladder m, Ladder n, const FusionFamily& family) {
  if (!is_ladder(family.kind())) throw WrongFamilyError("tensor_ladder needs a ladder family");
  using Virtual = std::map<unsigned, long long>;
  auto times_fundamental = [&](const Virtual& v) {
    Virtual out;
    for (const auto& [k, c] : v) {
      for (const auto& [label, mult] : tensor_fundamental(Ladder{k}, family).terms()) {
        out[std::get<Ladder>(label).n] += c * static_cast<long long>(mult);
      }
    }
    return out;
  };
  auto axpy = [](Virtual& acc, const Virtual& v, long long a) {
    for (const auto& [k, c] : v) acc[k] += a * c;
  };

  Virtual previous{{n.n, 1}};
  if (m.n == 0) return Decomposition{{Ladder{n.n}, 1}};
  Virtual current = times_fundamental(previous);
  for (unsigned k = 1; k < m.n; ++k) {
    Virtual next = times_fundamental(current);
    axpy(next, previous, -1);
    if (family.kind() == FamilyKind::So3Ladder) axpy(next, current, -1);
    previous = std::move(current);
    current = std::move(next);
  }
  Decomposition d;
  for (const auto& [k, c] : current) {
    if (c < 0) throw Error("tensor_ladder: negative multiplicity (inconsistent fusion rule)");
    d.add(Ladder{k}, static_cast<Decomposition::Multiplicity>(c));
  }
  return d;
}

/// x (x) y = sum over x = ac, y = conj(c) b of ab.
inline Decomposition tensor_free(const FreeWord& x, const FreeWord& y) {
  Decomposition d;
  const std::size_t max_overlap = std::min(x.size(), y.size());
  for (std::size_t len = 0; len <= max_overlap; ++len) {
    const FreeWord c = x.suffix_from(x.size() - len);
    if (!y.starts_with(conjugate(c))) continue;
    d.add(x.prefix(x.size() - len) + y.suffix_from(len));
  }
  return d;
}

inline Decomposition tensor(const IrrepLabel& x, const IrrepLabel& y, const FusionFamily& family) {
  require_label_in_family(x, family);
  require_label_in_family(y, family);
  if (family.kind() == FamilyKind::FreeUnitary) return tensor_free(std::get<FreeWord>(x), std::get<FreeWord>(y));
  return tensor_ladder(std::get<Ladder>(x), std::get<Ladder>(y), family);
}

// --- block factorization -----------------------------------------------------

/// Splits a word into maximal alternating blocks x_1 ... x_p.
///
/// Convention: s(x) is the last letter, t(x) the first. Cuts sit exactly
/// between equal adjacent letters, so s(x_k) = t(x_{k+1}) for every k.
struct BlockFactorization {
  std::vector<FreeWord> blocks;
};

inline BlockFactorization factorize(const FreeWord& w) {
  if (w.empty()) throw DomainError("factorize: the trivial word has no block factorization");
  BlockFactorization f;
  std::size_t start = 0;
  const std::string& s = w.letters();
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == s[i - 1]) {
      f.blocks.emplace_back(s.substr(start, i - start));
      start = i;
    }
  }
  f.blocks.emplace_back(s.substr(start));
  return f;
}

// --- dimensions ----------------------------------------------------------------

enum class DimKind { Classical, Quantum };

namespace detail {
// a_0 = 1, a_1 = base, a_{k+1} = base * a_k - a_{k-1}; returns a_n.
inline mpz_class chebyshev_dim(long base, unsigned n) {
  mpz_class prev = 1;
  if (n == 0) return prev;
  mpz_class cur = base;
  for (unsigned k = 1; k < n; ++k) {
    mpz_class next = base * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}
}  // namespace detail

/// Exact classical (vector space) dimension.
inline mpz_class classical_dim(const IrrepLabel& label, const FusionFamily& family) {
  require_label_in_family(label, family);
  const long n_fund = family.dim_c_fund();
  switch (family.kind()) {
    case FamilyKind::Su2Ladder: return detail::chebyshev_dim(n_fund, std::get<Ladder>(label).n);
    case FamilyKind::So3Ladder: {
      const unsigned n = std::get<Ladder>(label).n;
      mpz_class value = detail::chebyshev_dim(n_fund - 1, n);
      if (n > 0) value += detail::chebyshev_dim(n_fund - 1, n - 1);
      return value;
    }
    case FamilyKind::FreeUnitary: {
      const auto& w = std::get<FreeWord>(label);
      if (w.empty()) return 1;
      mpz_class product = 1;
      for (const auto& block : factorize(w).blocks) {
        product *= detail::chebyshev_dim(n_fund, static_cast<unsigned>(block.size()));
      }
      return product;
    }
  }
  return 0;
}

/// Enclosure of the quantum dimension Tr(rho) at the working precision.
///
/// Ladder families use the closed-form solution of the fundamental-product
/// recursion; words multiply the q-numbers of their alternating blocks.
inline RigorousReal quantum_dim_with_q(const IrrepLabel& label, const FusionFamily& family, const RigorousReal& q) {
  require_label_in_family(label, family);
  switch (family.kind()) {
    case FamilyKind::Su2Ladder: return q_integer(std::get<Ladder>(label).n + 1, q);
    case FamilyKind::So3Ladder: {
      const unsigned n = std::get<Ladder>(label).n;
      return q_integer(n + 1, q) + q_integer(n, q);
    }
    case FamilyKind::FreeUnitary: {
      const auto& w = std::get<FreeWord>(label);
      RigorousReal product(1L);
      if (w.empty()) return product;
      for (const auto& block : factorize(w).blocks) {
        product *= q_integer(static_cast<unsigned>(block.size()) + 1, q);
      }
      return product;
    }
  }
  return RigorousReal(0L);
}

inline RigorousReal quantum_dim(const IrrepLabel& label, const FusionFamily& family) {
  return quantum_dim_with_q(label, family, family.quantum_q());
}

inline RigorousReal dim(const IrrepLabel& label, const FusionFamily& family, DimKind which) {
  if (which == DimKind::Classical) return RigorousReal::from_mpz(classical_dim(label, family));
  return quantum_dim(label, family);
}

// --- rho spectrum --------------------------------------------------------------

/// Eigenvalues of the rho operator of an irrep (a multiset of positive reals).
struct RhoSpectrum {
  std::vector<RigorousReal> eigenvalues;

  RigorousReal trace() const {
    RigorousReal t(0L);
    for (const auto& x : eigenvalues) t += x;
    return t;
  }
  RigorousReal inverse_trace() const {
    RigorousReal t(0L);
    for (const auto& x : eigenvalues) t += 1L / x;
    return t;
  }
  bool is_trace_balanced() const { return overlaps(trace(), inverse_trace()); }
};

/// {q^{-n+2k} : k = 0..n}, the rho spectrum of the ladder irrep n.
inline RhoSpectrum rho_spectrum(Ladder label, const RigorousReal& q) {
  if (!certainly_gt(q, 0L) || certainly_gt(q, 1L)) throw DomainError("rho_spectrum: q must lie in (0, 1]");
  RhoSpectrum rho;
  rho.eigenvalues.reserve(label.n + 1);
  const long n = label.n;
  for (long k = 0; k <= n; ++k) rho.eigenvalues.push_back(pow(q, 2 * k - n));
  return rho;
}

// --- invariant vectors ---------------------------------------------------------

/// Multiplicity of the trivial representation in seq[0] x ... x seq[k-1].
inline Decomposition::Multiplicity invariant_multiplicity(const std::vector<IrrepLabel>& seq,
                                                          const FusionFamily& family) {
  for (const auto& label : seq) require_label_in_family(label, family);
  const IrrepLabel trivial = is_ladder(family.kind()) ? IrrepLabel{Ladder{0}} : IrrepLabel{FreeWord{}};
  if (seq.empty()) return 1;
  Decomposition current{{seq.front(), 1}};
  for (std::size_t i = 1; i < seq.size(); ++i) {
    Decomposition next;
    for (const auto& [label, m] : current.terms()) next.add_scaled(tensor(label, seq[i], family), m);
    current = std::move(next);
  }
  return current.multiplicity(trivial);
}

}  // namespace qclass

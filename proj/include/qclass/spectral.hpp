#pragma once

// Modular twists of characters through rho-spectra, and finite truncations of
// the weighted-shift model of SU_q(2) on span{phi_0, ..., phi_{M-1}}.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <cstddef>
#include <string>
#include <vector>

#include "qclass/error.hpp"
#include "qclass/fusion.hpp"
#include "qclass/rigorous.hpp"

namespace qclass {

namespace detail {

// lambda^e for an enclosure e; integer powers when e is an exact integer.
inline RigorousReal power(const RigorousReal& lambda, const RigorousReal& e) {
  if (e.is_point()) {
    const double d = e.lower_double();
    if (std::abs(d) < 1e9 && std::floor(d) == d && e.contains(static_cast<long>(d))) {
      return pow(lambda, static_cast<long>(d));
    }
  }
  return exp(e * log(lambda));
}

}  // namespace detail

/// Tr(rho^{-4b-1}) / Tr(rho): the squared 2-norm of sigma_{a+ib}(chi) divided
/// by that of chi. The real part a drops out, so only b is taken.
inline RigorousReal modular_norm_sq(const RhoSpectrum& rho, const RigorousReal& b) {
  if (rho.eigenvalues.empty()) throw DomainError("modular_norm_sq: empty spectrum");
  const RigorousReal e = -4L * b - 1L;
  RigorousReal numerator(0L);
  for (const auto& lambda : rho.eigenvalues) {
    if (!certainly_gt(lambda, 0L)) throw DomainError("modular_norm_sq: eigenvalues must be positive");
    numerator += detail::power(lambda, e);
  }
  return numerator / rho.trace();
}

struct ComplexEnclosure {
  RigorousReal re;
  RigorousReal im;
};

/// (lambda^{2it})_lambda = (cos(2t ln lambda) + i sin(2t ln lambda))_lambda.
inline std::vector<ComplexEnclosure> modular_eigencoefficients(const RhoSpectrum& rho, const RigorousReal& t) {
  std::vector<ComplexEnclosure> out;
  out.reserve(rho.eigenvalues.size());
  for (const auto& lambda : rho.eigenvalues) {
    const RigorousReal theta = 2L * t * log(lambda);
    out.push_back({cos(theta), sin(theta)});
  }
  return out;
}

/// Truncation of psi_1(alpha + alpha^*): symmetric tridiagonal, zero diagonal.
struct JacobiOperator {
  std::size_t size = 0;
  std::vector<long double> off_diagonal;  // entry k couples phi_k and phi_{k+1}

  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> matrix() const {
    Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> t =
        Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>::Zero(size, size);
    for (std::size_t k = 0; k + 1 < size; ++k) t(k, k + 1) = t(k + 1, k) = off_diagonal[k];
    return t;
  }
};

inline JacobiOperator build_jacobi(std::size_t m, long double q) {
  if (m < 2) throw DomainError("build_jacobi: M must be at least 2");
  if (!(q > 0 && q < 1)) throw DomainError("build_jacobi: q must lie in (0, 1)");
  JacobiOperator t;
  t.size = m;
  t.off_diagonal.resize(m - 1);
  for (std::size_t k = 0; k + 1 < m; ++k) {
    t.off_diagonal[k] = std::sqrt(1.0L - std::pow(q, 2.0L * static_cast<long double>(k + 1)));
  }
  return t;
}

using MatrixLD = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr long double kRankThreshold = 1e-8L;

/// Numerical rank: singular values above kRankThreshold times the largest.
inline std::size_t numerical_rank(const MatrixLD& a) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<MatrixLD> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > kRankThreshold * s(0)) ++rank;
  }
  return rank;
}

/// Rank of [e_0, T e_0, ..., T^{M-1} e_0]. Columns are normalized first; this
/// does not change the rank.
inline std::size_t krylov_rank(const JacobiOperator& t) {
  const MatrixLD a = t.matrix();
  const auto m = static_cast<Eigen::Index>(t.size);
  MatrixLD k(m, m);
  Eigen::Matrix<long double, Eigen::Dynamic, 1> v = Eigen::Matrix<long double, Eigen::Dynamic, 1>::Zero(m);
  v(0) = 1;
  for (Eigen::Index j = 0; j < m; ++j) {
    k.col(j) = v;
    v = a * v;
    const long double norm = v.norm();
    if (norm > 0) v /= norm;
  }
  return numerical_rank(k);
}

inline constexpr std::size_t kMaxCommutantSize = 64;

/// dim {X : XA = AX} for a symmetric matrix A: the number of eigenvalue pairs
/// (i, j) with |lambda_i - lambda_j| below the rank threshold.
inline std::size_t commutant_dim(const MatrixLD& a) {
  if (a.rows() != a.cols()) throw DomainError("commutant_dim: matrix must be square");
  if (static_cast<std::size_t>(a.rows()) > kMaxCommutantSize) throw BudgetError("commutant_dim: M exceeds 64");
  Eigen::SelfAdjointEigenSolver<MatrixLD> solver(a, Eigen::EigenvaluesOnly);
  const auto& lambda = solver.eigenvalues();
  const long double scale = std::max(lambda.cwiseAbs().maxCoeff(), 1.0L);
  std::size_t count = 0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    for (Eigen::Index j = 0; j < lambda.size(); ++j) {
      if (std::abs(lambda(i) - lambda(j)) <= kRankThreshold * scale) ++count;
    }
  }
  return count;
}

inline std::size_t commutant_dim(const JacobiOperator& t) {
  if (t.size > kMaxCommutantSize) throw BudgetError("commutant_dim: M exceeds 64");
  return commutant_dim(t.matrix());
}

/// dim ker(A^T kron I - I kron A) by SVD of the M^2 x M^2 commutation map, in double.
inline std::size_t commutant_dim_dense(const MatrixLD& a) {
  const auto m = a.rows();
  if (m > 16) throw BudgetError("commutant_dim_dense: M exceeds 16");
  MatrixLD map = MatrixLD::Zero(m * m, m * m);
  // vec(XA - AX) with column-major vec: (A^T kron I - I kron A) vec(X)
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      for (Eigen::Index k = 0; k < m; ++k) {
        map(i * m + k, j * m + k) += a(j, i);
        map(k * m + i, k * m + j) -= a(i, j);
      }
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(map.cast<double>());
  const auto& s = svd.singularValues();
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > static_cast<double>(kRankThreshold) * s(0)) ++rank;
  }
  return static_cast<std::size_t>(m * m) - rank;
}

/// Smallest distance between consecutive eigenvalues.
inline long double min_eigenvalue_gap(const JacobiOperator& t) {
  Eigen::SelfAdjointEigenSolver<MatrixLD> solver(t.matrix(), Eigen::EigenvaluesOnly);
  const auto& lambda = solver.eigenvalues();
  long double gap = std::numeric_limits<long double>::infinity();
  for (Eigen::Index i = 1; i < lambda.size(); ++i) gap = std::min(gap, lambda(i) - lambda(i - 1));
  return gap;
}

inline constexpr std::array<const char*, 5> kRelationNames = {
    "alpha*alpha + gamma*gamma - 1", "alpha alpha* + q^2 gamma*gamma - 1", "gamma*gamma - gamma gamma*",
    "alpha gamma - q gamma alpha", "alpha gamma* - q gamma* alpha"};

struct RelationResiduals {
  std::array<long double, 5> interior{};  // per relation, rows and columns 1..M-2
  long double interior_max = 0;
  long double boundary_max = 0;  // entries touching index 0 or M-1
};

/// Residuals of the SU_q(2) relations for the truncated psi_lambda:
/// alpha phi_k = sqrt(1 - q^{2k}) phi_{k-1}, gamma phi_k = lambda q^k phi_k.
inline RelationResiduals suq2_relation_residuals(std::size_t m, long double q, std::complex<long double> lambda) {
  if (m < 4) throw DomainError("suq2_relation_residuals: M must be at least 4");
  if (!(q > 0 && q < 1)) throw DomainError("suq2_relation_residuals: q must lie in (0, 1)");
  if (std::abs(std::abs(lambda) - 1.0L) > 1e-15L) throw DomainError("suq2_relation_residuals: |lambda| must be 1");
  using C = std::complex<long double>;
  using MatrixC = Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic>;
  const auto n = static_cast<Eigen::Index>(m);
  MatrixC alpha = MatrixC::Zero(n, n);
  MatrixC gamma = MatrixC::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const long double qk = std::pow(q, static_cast<long double>(k));
    gamma(k, k) = lambda * qk;
    if (k > 0) alpha(k - 1, k) = std::sqrt(1.0L - qk * qk);
  }
  const MatrixC id = MatrixC::Identity(n, n);
  const MatrixC as = alpha.adjoint();
  const MatrixC gs = gamma.adjoint();
  const std::array<MatrixC, 5> relations = {
      MatrixC(as * alpha + gs * gamma - id), MatrixC(alpha * as + q * q * gs * gamma - id),
      MatrixC(gs * gamma - gamma * gs), MatrixC(alpha * gamma - q * gamma * alpha),
      MatrixC(alpha * gs - q * gs * alpha)};
  RelationResiduals out;
  for (std::size_t r = 0; r < relations.size(); ++r) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const long double v = std::abs(relations[r](i, j));
        const bool inside = i >= 1 && j >= 1 && i <= n - 2 && j <= n - 2;
        if (inside) {
          out.interior[r] = std::max(out.interior[r], v);
          out.interior_max = std::max(out.interior_max, v);
        } else {
          out.boundary_max = std::max(out.boundary_max, v);
        }
      }
    }
  }
  return out;
}

}  // namespace qclass

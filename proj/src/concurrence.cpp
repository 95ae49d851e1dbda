// Copyright 2026 The esdyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "esdyn/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "esdyn/error.hpp"

namespace esdyn {

namespace {

constexpr double kImaginaryTolerance = 1e-9;
constexpr double kNegativeTolerance = 1e-10;

const Matrix4c &spin_flip() {
  static const Matrix4c yy = pauli_product(2, 2);
  return yy;
}

double combine_roots(std::array<double, 4> roots) {
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots[0] - roots[1] - roots[2] - roots[3];
}

double clamp_root(double value) {
  if (value < -kNegativeTolerance) {
    std::ostringstream os;
    os << "negative eigenvalue " << value;
    throw Error(ErrorCode::SpectrumNegative, os.str());
  }
  return std::sqrt(std::max(0.0, value));
}

bool x_pattern_only(const Matrix4c &rho, double tol) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const bool on = i == j || i + j == 3;
      if (!on && std::abs(rho(i, j)) > tol) return false;
    }
  return true;
}

}  // namespace

std::array<double, 4> wootters_roots(const DensityMatrix &rho) {
  const Matrix4c &m = rho.matrix();
  if (!m.allFinite())
    throw Error(ErrorCode::InvalidState, "non-finite density matrix");
  const Matrix4c h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> eig(h);
  Eigen::Vector4d root_mu;
  for (int i = 0; i < 4; ++i) root_mu(i) = clamp_root(eig.eigenvalues()(i));
  const Matrix4c sqrt_rho = eig.eigenvectors() * root_mu.asDiagonal() *
                            eig.eigenvectors().adjoint();
  const Matrix4c sqrt_flipped = spin_flip() * sqrt_rho.conjugate() * spin_flip();
  Eigen::JacobiSVD<Matrix4c> svd(sqrt_flipped * sqrt_rho);
  const auto &s = svd.singularValues();
  return {s(0), s(1), s(2), s(3)};
}

double wootters_concurrence_raw(const DensityMatrix &rho) {
  const double general = combine_roots(wootters_roots(rho));
  const Matrix4c &m = rho.matrix();
  const double scale = std::max(std::abs(rho.trace()), 1e-300);
  if (!x_pattern_only(m, 1e-14 * scale)) return general;

  const double block = x_state_concurrence_raw(m);
  if (std::abs(block - general) > 1e-8 * scale) {
    std::ostringstream os;
    os << "X-block concurrence " << block << " disagrees with general route "
       << general;
    throw Error(ErrorCode::ConcurrenceMismatch, os.str());
  }
  // The block form keeps relative precision when both terms are tiny.
  return block;
}

double wootters_concurrence(const DensityMatrix &rho) {
  return std::max(0.0, wootters_concurrence_raw(rho));
}

std::array<double, 4> spin_flip_spectrum(const DensityMatrix &rho) {
  const Matrix4c &m = rho.matrix();
  const Matrix4c product = m * spin_flip() * m.conjugate() * spin_flip();
  Eigen::ComplexEigenSolver<Matrix4c> solver(product, false);
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    const Complex lambda = solver.eigenvalues()(i);
    if (std::abs(lambda.imag()) > kImaginaryTolerance) {
      std::ostringstream os;
      os << "eigenvalue " << lambda << " has a non-negligible imaginary part";
      throw Error(ErrorCode::SpectrumNotReal, os.str());
    }
    if (lambda.real() < -kNegativeTolerance) {
      std::ostringstream os;
      os << "negative eigenvalue " << lambda.real();
      throw Error(ErrorCode::SpectrumNegative, os.str());
    }
    out[static_cast<std::size_t>(i)] = std::max(0.0, lambda.real());
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double spectral_concurrence_raw(const DensityMatrix &rho) {
  std::array<double, 4> roots{};
  const auto lambdas = spin_flip_spectrum(rho);
  std::transform(lambdas.begin(), lambdas.end(), roots.begin(),
                 [](double l) { return std::sqrt(l); });
  return combine_roots(roots);
}

double x_state_concurrence_raw(const Matrix4c &rho) {
  const double p00 = std::max(0.0, rho(0, 0).real());
  const double p01 = std::max(0.0, rho(1, 1).real());
  const double p10 = std::max(0.0, rho(2, 2).real());
  const double p11 = std::max(0.0, rho(3, 3).real());
  const double outer = std::sqrt(p00 * p11);
  const double inner = std::sqrt(p01 * p10);
  const double w = std::abs(rho(0, 3));
  const double z = std::abs(rho(1, 2));
  return combine_roots({outer + w, outer - w, inner + z, inner - z});
}

double x_state_concurrence_raw(const XStateParams &s) {
  Matrix4c rho = Matrix4c::Zero();
  rho(0, 0) = 0.25 * (s[0] + s[3] + s[4] + s[5]);
  rho(1, 1) = 0.25 * (s[0] - s[3] - s[4] + s[5]);
  rho(2, 2) = 0.25 * (s[0] - s[3] + s[4] - s[5]);
  rho(3, 3) = 0.25 * (s[0] + s[3] - s[4] - s[5]);
  rho(0, 3) = rho(3, 0) = 0.25 * (s[1] - s[2]);
  rho(1, 2) = rho(2, 1) = 0.25 * (s[1] + s[2]);
  return x_state_concurrence_raw(rho);
}

double concurrence_c1_raw(const BellPoint &p, Tau tau) {
  require_in_tetrahedron(p);
  if (!(p.x3 < 0.0))
    throw Error(ErrorCode::WrongBranch, "C1 requires x3 < 0");
  const double e = std::exp(-tau.value());
  const double shifted = 2.0 - e;
  const double tail = std::sqrt(std::max(0.0, 1.0 + p.x3)) *
                      std::sqrt(shifted * shifted + p.x3 * e * e);
  return 0.5 * e * (std::abs(p.x1 + p.x2) - tail);
}

double concurrence_c1(const BellPoint &p, Tau tau) {
  return std::max(0.0, concurrence_c1_raw(p, tau));
}

double concurrence_c2_raw(const BellPoint &p, Tau tau) {
  require_in_tetrahedron(p);
  if (p.x3 < 0.0) throw Error(ErrorCode::WrongBranch, "C2 requires x3 >= 0");
  const double e = std::exp(-tau.value());
  return 0.5 * e * (std::abs(p.x1 - p.x2) - 2.0 + e * (1.0 + p.x3));
}

double concurrence_c2(const BellPoint &p, Tau tau) {
  return std::max(0.0, concurrence_c2_raw(p, tau));
}

double concurrence_bell_raw(const BellPoint &p, Tau tau) {
  return p.x3 < 0.0 ? concurrence_c1_raw(p, tau) : concurrence_c2_raw(p, tau);
}

double concurrence_bell(const BellPoint &p, Tau tau) {
  return std::max(0.0, concurrence_bell_raw(p, tau));
}

void require_nondiagonal_representative(double x0, double x1, double k) {
  if (!std::isfinite(x0) || !std::isfinite(x1) || !std::isfinite(k) ||
      x0 < std::abs(x1) - kBoundaryTolerance || !(k > 0.0)) {
    std::ostringstream os;
    os << "invalid non-diagonal representative (x0=" << x0 << ", x1=" << x1
       << ", k=" << k << ")";
    throw Error(ErrorCode::InvalidRepresentative, os.str());
  }
}

double concurrence_nondiagonal_raw(double x0, double x1, double k, Tau tau) {
  require_nondiagonal_representative(x0, x1, k);
  const double e = std::exp(-tau.value());
  const double grown = -std::expm1(-tau.value());  // 1 - e^{-tau}
  const double tail =
      std::sqrt(x0 * grown) * std::sqrt(2.0 * k + x0 - x0 * e);
  return e * (std::abs(x1) - tail);
}

double concurrence_nondiagonal(double x0, double x1, double k, Tau tau) {
  return std::max(0.0, concurrence_nondiagonal_raw(x0, x1, k, tau));
}

XStateParams nondiagonal_representative(double x0, double x1, double k) {
  require_nondiagonal_representative(x0, x1, k);
  return XStateParams{{x0 + k, x1, -x1, x0 - k, -k, k}};
}

}  // namespace esdyn

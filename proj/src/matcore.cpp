// Copyright 2026 The twoq Authors
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

#include "twoq/matcore.hpp"

#include <cmath>
#include <random>

namespace twoq {

Hermitian4 Hermitian4::checked(const Mat4 &m, double tol) {
  if (!m.allFinite()) throw InputError("matrix has non-finite entries");
  const double err = (m - m.adjoint()).norm();
  if (!(err <= tol)) {
    throw InputError("matrix is not Hermitian: ||H - H^dag||_F = " +
                     std::to_string(err));
  }
  return Hermitian4(m);
}

namespace pauli {

Mat2 identity() { return Mat2::Identity(); }

Mat2 x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 y() {
  Mat2 m;
  m << 0, -kI, kI, 0;
  return m;
}

Mat2 z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

Mat2 of(Axis a) {
  switch (a) {
    case Axis::x:
      return x();
    case Axis::y:
      return y();
    case Axis::z:
      return z();
  }
  return identity();
}

Mat4 pair(Axis a) { return kron(of(a), of(a)); }

}  // namespace pauli

Mat4 kron(const Mat2 &a, const Mat2 &b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Unitary4 kron(const Unitary2 &a, const Unitary2 &b) {
  return Unitary4::trusted(kron(a.matrix(), b.matrix()));
}

Unitary2 su2_exp(Axis a, double angle) {
  return Unitary2::trusted(std::cos(angle / 2) * Mat2::Identity() +
                           kI * std::sin(angle / 2) * pauli::of(a));
}

Unitary4 exp_i_hermitian(const Hermitian4 &h, double t) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(h.matrix());
  if (es.info() != Eigen::Success)
    throw NumericalError("Hermitian eigendecomposition failed");
  Eigen::Vector4cd phases;
  for (int k = 0; k < 4; ++k) phases(k) = std::exp(kI * (es.eigenvalues()(k) * t));
  const Mat4 &vecs = es.eigenvectors();
  return Unitary4::trusted(vecs * phases.asDiagonal() * vecs.adjoint());
}

SpecialUnitarized special_unitarize(const Unitary4 &u) {
  double phase = std::arg(u.det()) / 4.0;
  // arg() returns -pi for a negative real with a -0.0 imaginary part
  if (phase <= -kPi / 4) phase += kPi / 2;
  // Inputs already in SU(4) come back unchanged.
  if (std::abs(phase) < 1e-15) phase = 0;
  return {Unitary4::trusted(std::exp(-kI * phase) * u.matrix()), phase};
}

namespace {

template <int N>
double dist_impl(const Eigen::Matrix<Complex, N, N> &u,
                 const Eigen::Matrix<Complex, N, N> &v) {
  // The optimal phase aligns v with u; evaluating the residual directly
  // avoids the cancellation in sqrt(2N - 2|tr(u^dag v)|).
  const Complex overlap = (v.adjoint() * u).trace();
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (u - phase * v).norm();
}

template <int N>
Eigen::Matrix<Complex, N, N> haar_sample(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Matrix<Complex, N, N> z;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) z(r, c) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::Matrix<Complex, N, N>> qr(z);
  Eigen::Matrix<Complex, N, N> q = qr.householderQ();
  const Eigen::Matrix<Complex, N, N> r = qr.matrixQR();
  // Fix the phase freedom of the QR factors so that diag(R) > 0.
  for (int k = 0; k < N; ++k) {
    const Complex d = r(k, k);
    q.col(k) *= (std::abs(d) > 0 ? d / std::abs(d) : Complex(1.0));
  }
  return q;
}

}  // namespace

double dist_up_to_phase(const Unitary4 &u, const Unitary4 &v) {
  return dist_impl<4>(u.matrix(), v.matrix());
}

double dist_up_to_phase(const Unitary2 &u, const Unitary2 &v) {
  return dist_impl<2>(u.matrix(), v.matrix());
}

Unitary4 haar_random_su4(std::uint64_t seed) {
  return special_unitarize(Unitary4::trusted(haar_sample<4>(seed))).v;
}

Unitary2 haar_random_su2(std::uint64_t seed) {
  Mat2 q = haar_sample<2>(seed);
  q *= std::exp(-kI * (std::arg(q.determinant()) / 2.0));
  return Unitary2::trusted(q);
}

std::pair<Unitary2, Unitary2> kron_factor(const Mat4 &k, double tol) {
  int bi = 0, bj = 0;
  double best = -1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double n = k.block<2, 2>(2 * i, 2 * j).norm();
      if (n > best) best = n, bi = i, bj = j;
    }
  const Mat2 block = k.block<2, 2>(2 * bi, 2 * bj);
  const Complex scale = std::sqrt(block.determinant());
  if (std::abs(scale) < 1e-6) throw NumericalError("kron_factor: singular block");
  Mat2 b = block / scale;
  Mat2 a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      a(i, j) = (b.adjoint() * k.block<2, 2>(2 * i, 2 * j)).trace() / 2.0;
  // Rounding leaves |det a| slightly off one; the phase of det a is the
  // global phase of k and stays.
  const double det_abs = std::abs(a.determinant());
  if (det_abs > 0) a /= std::sqrt(det_abs);
  if (!((kron(a, b) - k).norm() <= tol))
    throw NumericalError("kron_factor: matrix is not a product of single-qubit gates");
  return {Unitary2::trusted(a), Unitary2::trusted(b)};
}

}  // namespace twoq

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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <utility>

#include "twoq/errors.hpp"

namespace twoq {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Tolerance on ||UU^dag - I||_F for matrices built by the library.
inline constexpr double kUnitaryTol = 1e-10;
/// Tolerance on ||UU^dag - I||_F for matrices supplied from outside.
inline constexpr double kInputUnitaryTol = 1e-8;

/// Frobenius norm of U U^dag - I.
template <int N>
double unitarity_error(const Eigen::Matrix<Complex, N, N> &u) {
  return (u * u.adjoint() - Eigen::Matrix<Complex, N, N>::Identity()).norm();
}

/// A fixed-size unitary matrix. Construction through checked() validates
/// unitarity and finiteness; the library uses trusted() for values it
/// produced itself from unitary operands.
template <int N>
class Unitary {
 public:
  using Matrix = Eigen::Matrix<Complex, N, N>;

  Unitary() : m_(Matrix::Identity()) {}

  static Unitary checked(const Matrix &m, double tol = kInputUnitaryTol) {
    if (!m.allFinite()) throw InputError("matrix has non-finite entries");
    const double err = unitarity_error(m);
    if (!(err <= tol)) {
      throw InputError("matrix is not unitary: ||UU^dag - I||_F = " +
                       std::to_string(err));
    }
    return Unitary(m);
  }
  static Unitary trusted(const Matrix &m) { return Unitary(m); }
  static Unitary identity() { return Unitary(); }

  const Matrix &matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }

  Unitary adjoint() const { return Unitary(m_.adjoint()); }
  Complex det() const { return m_.determinant(); }

  friend Unitary operator*(const Unitary &a, const Unitary &b) {
    return Unitary(a.m_ * b.m_);
  }
  friend bool operator==(const Unitary &a, const Unitary &b) {
    return a.m_ == b.m_;
  }

 private:
  explicit Unitary(const Matrix &m) : m_(m) {}
  Matrix m_;
};

using Unitary2 = Unitary<2>;
using Unitary4 = Unitary<4>;

/// A 4x4 Hermitian matrix (a two-qubit Hamiltonian).
class Hermitian4 {
 public:
  static Hermitian4 checked(const Mat4 &m, double tol = 1e-10);
  const Mat4 &matrix() const { return m_; }

  friend Hermitian4 operator+(const Hermitian4 &a, const Hermitian4 &b) {
    return Hermitian4(a.m_ + b.m_);
  }
  friend Hermitian4 operator*(double s, const Hermitian4 &h) {
    return Hermitian4(s * h.m_);
  }

 private:
  explicit Hermitian4(const Mat4 &m) : m_(m) {}
  Mat4 m_;
};

enum class Axis { x, y, z };

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
Mat2 of(Axis a);
/// sigma_a (x) sigma_a.
Mat4 pair(Axis a);
}  // namespace pauli

Mat4 kron(const Mat2 &a, const Mat2 &b);
/// Kronecker product with wire 1 (top) as the left factor.
Unitary4 kron(const Unitary2 &a, const Unitary2 &b);

/// e^{i angle/2 sigma_a}. Note the sign: this is the convention of the
/// canonical-gate notation, opposite to the usual R_a(angle).
Unitary2 su2_exp(Axis a, double angle);

/// e^{i h t}, via eigendecomposition of h.
Unitary4 exp_i_hermitian(const Hermitian4 &h, double t);

struct SpecialUnitarized {
  Unitary4 v;    ///< det v = 1
  double phase;  ///< u = e^{i phase} v, phase in (-pi/4, pi/4]
};
SpecialUnitarized special_unitarize(const Unitary4 &u);

/// min over phi of ||u - e^{i phi} v||_F.
double dist_up_to_phase(const Unitary4 &u, const Unitary4 &v);
double dist_up_to_phase(const Unitary2 &u, const Unitary2 &v);

/// Haar-random SU(4) element, deterministic in the seed.
Unitary4 haar_random_su4(std::uint64_t seed);
/// Haar-random SU(2) element, deterministic in the seed.
Unitary2 haar_random_su2(std::uint64_t seed);

/// Splits k = a (x) b with b in SU(2); a carries any global phase, so a is
/// in SU(2) whenever k is in SU(4). Throws NumericalError if k is not a
/// product of single-qubit gates within tol.
std::pair<Unitary2, Unitary2> kron_factor(const Mat4 &k, double tol = 1e-8);

}  // namespace twoq

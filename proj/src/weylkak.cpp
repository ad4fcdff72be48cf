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

#include "twoq/weylkak.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>

namespace twoq {

namespace {

// Coordinates with |c3| below this after folding are snapped onto the base
// of the chamber. Keeps base-plane gates on the c1 <= pi/2 half.
constexpr double kBaseSnap = 1e-10;

constexpr Axis kAxes[3] = {Axis::x, Axis::y, Axis::z};

int third_axis(int j, int k) { return 3 - j - k; }

// Tracks A(c_in) = e^{i phase} (lt (x) lb) A(c) (rt (x) rb) while c is moved
// around by Weyl-group elements.
struct WeylFrame {
  std::array<double, 3> c{};
  Mat2 lt = Mat2::Identity(), lb = Mat2::Identity();
  Mat2 rt = Mat2::Identity(), rb = Mat2::Identity();
  double phase = 0;

  // A(c) = A(c + s pi e_j) e^{-i s pi/2 sj sj} = e^{i s pi/2} A(c') (i sj (x) i sj)
  void shift(int j, int s) {
    c[j] += s * kPi;
    phase += s * kPi / 2;
    const Mat2 p = kI * pauli::of(kAxes[j]);
    rt = p * rt;
    rb = p * rb;
  }

  // Conjugation by sl (x) I negates c_j and c_k.
  void flip(int j, int k) {
    c[j] = -c[j];
    c[k] = -c[k];
    const Mat2 p = kI * pauli::of(kAxes[third_axis(j, k)]);
    lt = lt * p;
    rt = (-p) * rt;
  }

  // Conjugation by R (x) R, R a quarter turn about the third axis,
  // exchanges c_j and c_k.
  void exchange(int j, int k) {
    std::swap(c[j], c[k]);
    const Mat2 r = su2_exp(kAxes[third_axis(j, k)], -kPi / 2).matrix();
    lt = lt * r.adjoint();
    lb = lb * r.adjoint();
    rt = r * rt;
    rb = r * rb;
  }

  void canonicalize() {
    for (int j = 0; j < 3; ++j) {
      while (c[j] > kPi / 2) shift(j, -1);
      while (c[j] <= -kPi / 2) shift(j, +1);
    }
    auto order = [&](int j, int k) {
      if (std::abs(c[j]) < std::abs(c[k])) exchange(j, k);
    };
    order(0, 1);
    order(1, 2);
    order(0, 1);
    if (c[0] < 0) flip(0, 2);
    if (c[1] < 0) flip(1, 2);
    if (c[2] < -kBaseSnap) {
      shift(0, -1);
      flip(0, 2);
    } else if (c[2] < 0) {
      c[2] = 0;
    }
  }
};

double offdiag_norm(const Eigen::Matrix4d &m) {
  return (m - Eigen::Matrix4d(m.diagonal().asDiagonal())).norm();
}

// Real orthogonal o with o^T m o diagonal, for m complex symmetric unitary.
// Re m and Im m are commuting real symmetric matrices. Diagonalize Re m,
// then remove the remaining off-diagonal mass of both with joint Jacobi
// rotations; this stays real inside degenerate eigenspaces, where a
// complex eigensolver would not.
Eigen::Matrix4d real_eigenbasis(const Mat4 &m) {
  Eigen::Matrix4d a = m.real();
  Eigen::Matrix4d b = m.imag();
  a = 0.5 * (a + a.transpose()).eval();
  b = 0.5 * (b + b.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(a);
  if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed on Re m");
  Eigen::Matrix4d o = es.eigenvectors();
  a = o.transpose() * a * o;
  b = o.transpose() * b * o;

  for (int sweep = 0; sweep < 40; ++sweep) {
    if (std::hypot(offdiag_norm(a), offdiag_norm(b)) < 1e-15) break;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        // After rotating by theta the (p, q) entry of each matrix is
        // u . (cos 2theta, sin 2theta) with u = (M_pq, (M_pp - M_qq) / 2).
        Eigen::Matrix2d g = Eigen::Matrix2d::Zero();
        for (const Eigen::Matrix4d *mat : {&a, &b}) {
          const Eigen::Vector2d u((*mat)(p, q), ((*mat)(p, p) - (*mat)(q, q)) / 2);
          g += u * u.transpose();
        }
        if (std::abs(a(p, q)) + std::abs(b(p, q)) < 1e-300) continue;
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> e2(g);
        Eigen::Vector2d w = e2.eigenvectors().col(0);
        if (w(0) < 0) w = -w;
        const double theta = 0.5 * std::atan2(w(1), w(0));
        Eigen::Matrix4d j = Eigen::Matrix4d::Identity();
        j(p, p) = std::cos(theta);
        j(p, q) = std::sin(theta);
        j(q, p) = -std::sin(theta);
        j(q, q) = std::cos(theta);
        a = j.transpose() * a * j;
        b = j.transpose() * b * j;
        o = o * j;
      }
    }
  }
  return o;
}

void normalize_sign(Mat2 &top, Mat2 &bottom) {
  const Complex t = top(0, 0);
  const bool flip = t.real() < -1e-14 || (std::abs(t.real()) <= 1e-14 && t.imag() < 0);
  if (flip) {
    top = -top;
    bottom = -bottom;
  }
}

double wrap_phase(double phi) {
  phi = std::remainder(phi, 2 * kPi);
  if (phi <= -kPi) phi += 2 * kPi;
  return phi;
}

}  // namespace

Unitary4 canonical_gate(const WeylPoint &c) {
  // The three generators commute and are diagonal in the magic basis.
  const Mat4 &q = magic_basis();
  const double phases[4] = {c.c1 - c.c2 + c.c3, -c.c1 + c.c2 + c.c3,
                            c.c1 + c.c2 - c.c3, -c.c1 - c.c2 - c.c3};
  Eigen::Vector4cd d;
  for (int k = 0; k < 4; ++k) d(k) = std::exp(kI * (phases[k] / 2));
  return Unitary4::trusted(q * d.asDiagonal() * q.adjoint());
}

bool in_weyl_chamber(const WeylPoint &c, double tol) {
  return c.c1 >= -tol && c.c1 <= kPi + tol && c.c3 >= -tol && c.c2 >= c.c3 - tol &&
         c.c2 <= std::min(c.c1, kPi - c.c1) + tol;
}

Unitary4 KakDecomposition::reconstruct() const {
  const Mat4 m = std::exp(kI * phase) * kron(k1_top.matrix(), k1_bottom.matrix()) *
                 canonical_gate(c).matrix() * kron(k2_top.matrix(), k2_bottom.matrix());
  return Unitary4::trusted(m);
}

KakDecomposition kak(const Unitary4 &u) {
  const auto [v, phase0] = special_unitarize(u);
  const Mat4 &q = magic_basis();
  const Mat4 mb = q.adjoint() * v.matrix() * q;
  const Mat4 m = mb.transpose() * mb;

  Eigen::Matrix4d o = real_eigenbasis(m);
  const Mat4 dm = o.transpose().cast<Complex>() * m * o.cast<Complex>();
  if (offdiag_norm(dm.real()) + offdiag_norm(dm.imag()) > 1e-8)
    throw NumericalError("kak: failed to diagonalize the magic Gram matrix");

  std::array<double, 4> theta;
  for (int k = 0; k < 4; ++k) theta[k] = std::arg(dm(k, k));

  std::array<int, 4> idx;
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return theta[x] > theta[y]; });
  Eigen::Matrix4d sorted_o;
  std::array<double, 4> th;
  for (int k = 0; k < 4; ++k) {
    sorted_o.col(k) = o.col(idx[k]);
    th[k] = theta[idx[k]];
  }
  o = sorted_o;
  if (o.determinant() < 0) o.col(3) = -o.col(3);

  // det m = 1, so the phases sum to a multiple of 2 pi; move it to zero
  // through the phases nearest +-pi.
  const long wraps = std::lround((th[0] + th[1] + th[2] + th[3]) / (2 * kPi));
  for (long w = 0; w < wraps; ++w) th[w] -= 2 * kPi;
  for (long w = 0; w < -wraps; ++w) th[3 - w] += 2 * kPi;

  Eigen::Vector4cd half_inv;
  for (int k = 0; k < 4; ++k) half_inv(k) = std::exp(-kI * (th[k] / 2));
  const Mat4 k1_magic = mb * o.cast<Complex>() * half_inv.asDiagonal();
  if (k1_magic.imag().norm() > 1e-7)
    throw NumericalError("kak: left factor is not real in the magic basis");
  const Mat4 k1 = q * k1_magic.real().cast<Complex>() * q.adjoint();
  const Mat4 k2 = q * o.transpose().cast<Complex>() * q.adjoint();

  WeylFrame frame;
  frame.c = {(th[0] + th[2]) / 2, (th[1] + th[2]) / 2, (th[0] + th[1]) / 2};
  frame.canonicalize();

  const auto [k1t, k1b] = kron_factor(k1);
  const auto [k2t, k2b] = kron_factor(k2);
  Mat2 lt = k1t.matrix() * frame.lt, lb = k1b.matrix() * frame.lb;
  Mat2 rt = frame.rt * k2t.matrix(), rb = frame.rb * k2b.matrix();
  normalize_sign(lt, lb);
  normalize_sign(rt, rb);

  KakDecomposition out;
  out.phase = wrap_phase(phase0 + frame.phase);
  out.k1_top = Unitary2::trusted(lt);
  out.k1_bottom = Unitary2::trusted(lb);
  out.k2_top = Unitary2::trusted(rt);
  out.k2_bottom = Unitary2::trusted(rb);
  out.c = {frame.c[0], frame.c[1], frame.c[2]};
  return out;
}

WeylPoint weyl_coordinates(const Unitary4 &u) { return kak(u).c; }

namespace {

// Golden-section search for the minimum of f on [lo, hi].
template <class F>
double golden_min(F &&f, double lo, double hi, double tol) {
  const double r = (std::sqrt(5.0) - 1) / 2;
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

}  // namespace

std::optional<double> single_switch_reach(const Hermitian4 &h, const WeylPoint &target,
                                          double t_max) {
  if (!(t_max > 0)) return std::nullopt;
  Eigen::SelfAdjointEigenSolver<Mat4> es(h.matrix(), Eigen::EigenvaluesOnly);
  const double spread = es.eigenvalues().maxCoeff() - es.eigenvalues().minCoeff();
  if (spread < 1e-14) return std::nullopt;

  const double period = 2 * kPi / spread;
  const long n = std::max<long>(2000, static_cast<long>(std::ceil(2000 * t_max / period)));
  auto dist = [&](double t) {
    return weyl_coordinates(exp_i_hermitian(h, t)).max_abs_diff(target);
  };

  std::vector<double> d(n + 2, std::numeric_limits<double>::infinity());
  for (long i = 0; i <= n; ++i) d[i] = dist(t_max * static_cast<double>(i) / n);
  const double step = t_max / n;
  for (long i = 1; i <= n; ++i) {
    if (!(d[i] <= d[i - 1] && d[i] <= d[i + 1])) continue;
    const double lo = step * (i - 1);
    const double hi = std::min(t_max, step * (i + 1));
    const double t = golden_min(dist, lo, hi, 1e-13);
    if (t > 0 && dist(t) < 1e-6) return t;
  }
  return std::nullopt;
}

namespace gates {

Unitary4 identity() { return Unitary4::identity(); }

Unitary4 cnot() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return Unitary4::trusted(m);
}

Unitary4 dcnot() {
  Mat4 reversed = Mat4::Zero();
  reversed(0, 0) = reversed(3, 1) = reversed(2, 2) = reversed(1, 3) = 1;
  return Unitary4::trusted(reversed) * cnot();
}

Unitary4 swap() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
  return Unitary4::trusted(m);
}

Unitary4 b() { return canonical_gate({kPi / 2, kPi / 4, 0}); }

Unitary4 a1() { return canonical_gate({kPi, 0, 0}); }

}  // namespace gates

const std::vector<NamedGate> &named_gates() {
  static const std::vector<NamedGate> all = {
      {"o", gates::identity(), {0, 0, 0}},
      {"a1", gates::a1(), {kPi, 0, 0}},
      {"cnot", gates::cnot(), {kPi / 2, 0, 0}},
      {"dcnot", gates::dcnot(), {kPi / 2, kPi / 2, 0}},
      {"swap", gates::swap(), {kPi / 2, kPi / 2, kPi / 2}},
      {"b", gates::b(), {kPi / 2, kPi / 4, 0}},
  };
  return all;
}

std::optional<NamedGate> find_named_gate(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (name == "l") name = "cnot";
  if (name == "a2") name = "dcnot";
  if (name == "a3") name = "swap";
  if (name == "identity") name = "o";
  for (const auto &g : named_gates())
    if (g.name == name) return g;
  return std::nullopt;
}

}  // namespace twoq

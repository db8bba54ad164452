// Copyright 2026 The qchan Authors
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

#include "qchan/channels.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qchan/error.hpp"

namespace qchan {
namespace {

ComplexMatrix symmetrize(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

std::string dims(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_unit(double x, const char* name) {
  require(std::isfinite(x) && x >= 0.0 && x <= 1.0, ErrorCode::kBadParam,
          std::string(name) + " must lie in [0,1], got " + std::to_string(x));
}

// Drops operators whose weight is exactly zero so degenerate parameters give
// the minimal natural Kraus set (e.g. depolarizing p=0 is a single identity).
void push_weighted(std::vector<ComplexMatrix>& out, double weight, const ComplexMatrix& k) {
  if (weight > 0.0) out.push_back(std::sqrt(weight) * k);
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m, double tol) {
  require(m.rows() == m.cols() && m.rows() > 0, ErrorCode::kDimMismatch,
          "density matrix must be square, got " + dims(m.rows(), m.cols()));
  require(all_finite(m), ErrorCode::kNotPSD, "density matrix has non-finite entries");
  require(is_hermitian(m, kHermitianTol), ErrorCode::kNonHermitian, "density matrix not Hermitian");
  ComplexMatrix h = symmetrize(m);
  const double tr = h.trace().real();
  require(std::abs(tr - 1.0) <= tol, ErrorCode::kNotPSD,
          "density matrix trace " + std::to_string(tr) + " != 1");
  const RealVector ev = eigvals_hermitian(h);
  require(ev(0) >= -tol, ErrorCode::kNotPSD,
          "density matrix has eigenvalue " + std::to_string(ev(0)));
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::assume_valid(const ComplexMatrix& m) {
  require(m.rows() == m.cols(), ErrorCode::kDimMismatch, "density matrix must be square");
  return DensityMatrix(symmetrize(m));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double n = psi.norm();
  require(n > 0.0 && std::isfinite(n), ErrorCode::kBadParam, "pure state vector has zero norm");
  const ComplexVector u = psi / n;
  return DensityMatrix(symmetrize(u * u.adjoint()));
}

DensityMatrix DensityMatrix::basis(std::size_t dim, std::size_t index) {
  require(index < dim, ErrorCode::kBadParam, "basis index out of range");
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(index, index) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  require(dim > 0, ErrorCode::kBadParam, "dimension must be positive");
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> probabilities) {
  const std::size_t d = probabilities.size();
  require(d > 0, ErrorCode::kBadParam, "empty probability vector");
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = probabilities[i];
  return from_matrix(m);
}

DensityMatrix DensityMatrix::diagonal(std::initializer_list<double> probabilities) {
  return diagonal(std::span<const double>(probabilities.begin(), probabilities.size()));
}

DensityMatrix DensityMatrix::bloch(const Vec3& w) {
  require(w.allFinite() && w.norm() <= 1.0 + 1e-9, ErrorCode::kBadBloch,
          "Bloch vector norm exceeds 1");
  ComplexMatrix m = pauli(0);
  for (int i = 0; i < 3; ++i) m += w(i) * pauli(i + 1);
  return DensityMatrix(symmetrize(0.5 * m));
}

Vec3 DensityMatrix::bloch_vector() const {
  require(dim() == 2, ErrorCode::kNotQubit, "Bloch vector needs a qubit state");
  Vec3 w;
  for (int i = 0; i < 3; ++i) w(i) = (pauli(i + 1) * m_).trace().real();
  return w;
}

DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double t) {
  require(a.dim() == b.dim(), ErrorCode::kDimMismatch, "mixing states of different dimension");
  require_unit(t, "mixing weight");
  return DensityMatrix::assume_valid((1.0 - t) * a.matrix() + t * b.matrix());
}

Channel Channel::from_kraus(std::vector<ComplexMatrix> kraus, double tol) {
  require(!kraus.empty(), ErrorCode::kBadParam, "channel needs at least one Kraus operator");
  const auto dout = static_cast<std::size_t>(kraus.front().rows());
  const auto din = static_cast<std::size_t>(kraus.front().cols());
  require(din > 0 && dout > 0, ErrorCode::kDimMismatch, "empty Kraus operator");
  ComplexMatrix sum = ComplexMatrix::Zero(din, din);
  for (const auto& k : kraus) {
    require(static_cast<std::size_t>(k.rows()) == dout && static_cast<std::size_t>(k.cols()) == din,
            ErrorCode::kDimMismatch,
            "Kraus operators disagree in shape: " + dims(dout, din) + " vs " + dims(k.rows(), k.cols()));
    require(all_finite(k), ErrorCode::kBadParam, "Kraus operator has non-finite entries");
    sum += k.adjoint() * k;
  }
  const double err = max_abs(sum - ComplexMatrix::Identity(din, din));
  require(err <= tol, ErrorCode::kBadParam,
          "Kraus operators not trace preserving (deviation " + std::to_string(err) + ")");
  return Channel(din, dout, std::move(kraus));
}

ComplexMatrix Channel::apply(const ComplexMatrix& x) const {
  require(static_cast<std::size_t>(x.rows()) == dim_in_ && static_cast<std::size_t>(x.cols()) == dim_in_,
          ErrorCode::kDimMismatch,
          "channel input is " + dims(dim_in_, dim_in_) + ", got " + dims(x.rows(), x.cols()));
  ComplexMatrix out = ComplexMatrix::Zero(dim_out_, dim_out_);
  for (const auto& k : kraus_) out.noalias() += k * x * k.adjoint();
  return out;
}

DensityMatrix Channel::apply(const DensityMatrix& rho) const {
  return DensityMatrix::assume_valid(apply(rho.matrix()));
}

DephasingSpec DephasingSpec::from_matrix(const ComplexMatrix& gamma) {
  require(gamma.rows() == gamma.cols() && gamma.rows() > 0, ErrorCode::kDimMismatch,
          "dephasing matrix must be square");
  const Eigen::Index d = gamma.rows();
  for (Eigen::Index i = 0; i < d; ++i) {
    require(gamma(i, i) == Complex(1.0, 0.0), ErrorCode::kBadParam,
            "dephasing matrix diagonal must be exactly 1");
    for (Eigen::Index j = 0; j < d; ++j) {
      const Complex g = gamma(i, j);
      require(g.imag() == 0.0 && g.real() >= 0.0 && g.real() <= 1.0, ErrorCode::kBadParam,
              "dephasing matrix entries must be real and in [0,1]");
      require(g == gamma(j, i), ErrorCode::kBadParam, "dephasing matrix must be symmetric");
    }
  }
  require(is_psd(gamma), ErrorCode::kNotPSD, "dephasing matrix is not positive semidefinite");
  return DephasingSpec(gamma);
}

DephasingSpec DephasingSpec::qubit(double p) {
  require(std::isfinite(p) && p >= 0.0 && p <= 2.0, ErrorCode::kNotPSD,
          "qubit dephasing parameter must lie in [0,2], got " + std::to_string(p));
  ComplexMatrix g(2, 2);
  g << 1.0, 1.0 - p, 1.0 - p, 1.0;
  return DephasingSpec(std::move(g));
}

ComplexMatrix choi(const Channel& ch) {
  const std::size_t din = ch.dim_in();
  const std::size_t dout = ch.dim_out();
  ComplexMatrix c = ComplexMatrix::Zero(din * dout, din * dout);
  for (std::size_t i = 0; i < din; ++i) {
    for (std::size_t j = 0; j < din; ++j) {
      ComplexMatrix eij = ComplexMatrix::Zero(din, din);
      eij(i, j) = 1.0;
      c.block(i * dout, j * dout, dout, dout) = ch.apply(eij);
    }
  }
  return c;
}

Channel complementary(const Channel& ch) {
  // R_a = Σ_i |i⟩⟨a| A_i, so that (Σ_a R_a ρ R_a†)_ij = tr(A_i ρ A_j†).
  const auto& ks = ch.kraus();
  const std::size_t env = ks.size();
  std::vector<ComplexMatrix> out;
  out.reserve(ch.dim_out());
  for (std::size_t a = 0; a < ch.dim_out(); ++a) {
    ComplexMatrix r(env, ch.dim_in());
    for (std::size_t i = 0; i < env; ++i) r.row(i) = ks[i].row(a);
    out.push_back(std::move(r));
  }
  return Channel::from_kraus(std::move(out));
}

bool cp_leq(const Channel& a, const Channel& b, double c) {
  require(a.dim_in() == b.dim_in() && a.dim_out() == b.dim_out(), ErrorCode::kDimMismatch,
          "cp_leq needs channels of equal shape");
  return is_psd(choi(b) - c * choi(a));
}

AffineRep to_affine(const Channel& ch) {
  require(ch.dim_in() == 2 && ch.dim_out() == 2, ErrorCode::kNotQubit,
          "affine form needs a qubit-to-qubit channel");
  AffineRep rep;
  const ComplexMatrix n_id = ch.apply(pauli(0));
  for (int i = 0; i < 3; ++i) {
    rep.t(i) = 0.5 * (pauli(i + 1) * n_id).trace().real();
    for (int j = 0; j < 3; ++j) {
      rep.T(i, j) = 0.5 * (pauli(i + 1) * ch.apply(pauli(j + 1))).trace().real();
    }
  }
  return rep;
}

Channel compose(const Channel& outer, const Channel& inner) {
  require(outer.dim_in() == inner.dim_out(), ErrorCode::kDimMismatch,
          "composition dimension mismatch");
  std::vector<ComplexMatrix> ks;
  ks.reserve(outer.kraus().size() * inner.kraus().size());
  for (const auto& a : outer.kraus()) {
    for (const auto& b : inner.kraus()) ks.push_back(a * b);
  }
  return Channel::from_kraus(std::move(ks));
}

bool is_unitary_channel(const Channel& ch) {
  if (ch.dim_in() != ch.dim_out()) return false;
  const RealVector ev = eigvals_hermitian(choi(ch));
  const double top = ev(ev.size() - 1);
  int rank = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > 1e-9 * top) ++rank;
  }
  return rank == 1;
}

Channel make_identity(std::size_t dim) {
  require(dim > 0, ErrorCode::kBadParam, "dimension must be positive");
  return Channel::from_kraus({ComplexMatrix::Identity(dim, dim)});
}

Channel make_unitary(const ComplexMatrix& u) {
  require(u.rows() == u.cols(), ErrorCode::kDimMismatch, "unitary must be square");
  return Channel::from_kraus({u});
}

Channel make_depolarizing(std::size_t dim, double p) {
  require(dim > 0, ErrorCode::kBadParam, "dimension must be positive");
  require_unit(p, "depolarizing p");
  const double d = static_cast<double>(dim);
  const double d2 = d * d;
  // Weyl operators X^a Z^b form a unitary error basis: (1/d²) Σ W ρ W† = tr(ρ) I/d.
  ComplexMatrix x = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix z = ComplexMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    x((j + 1) % dim, j) = 1.0;
    z(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / d);
  }
  std::vector<ComplexMatrix> ks;
  ComplexMatrix xa = ComplexMatrix::Identity(dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    ComplexMatrix w = xa;
    for (std::size_t b = 0; b < dim; ++b) {
      const double weight = (a == 0 && b == 0) ? 1.0 - p + p / d2 : p / d2;
      push_weighted(ks, weight, w);
      w = w * z;
    }
    xa = x * xa;
  }
  return Channel::from_kraus(std::move(ks));
}

Channel make_dephasing(const DephasingSpec& spec) {
  const Spectrum s = eig_hermitian(spec.gamma());
  const std::size_t d = spec.dim();
  std::vector<ComplexMatrix> ks;
  for (Eigen::Index k = s.values.size() - 1; k >= 0; --k) {
    const double lam = s.values(k);
    if (lam <= 1e-14) continue;
    ComplexMatrix kk = ComplexMatrix::Zero(d, d);
    for (std::size_t i = 0; i < d; ++i) kk(i, i) = std::sqrt(lam) * s.vectors(i, k);
    ks.push_back(std::move(kk));
  }
  return Channel::from_kraus(std::move(ks));
}

Channel make_qubit_dephasing(double p) { return make_dephasing(DephasingSpec::qubit(p)); }

Channel make_amplitude_damping(double gamma) {
  require_unit(gamma, "amplitude damping gamma");
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  std::vector<ComplexMatrix> ks{k0};
  if (gamma > 0.0) {
    ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
    k1(0, 1) = std::sqrt(gamma);
    ks.push_back(std::move(k1));
  }
  return Channel::from_kraus(std::move(ks));
}

Channel make_flagged_mixture(double p, const Channel& a, const Channel& b) {
  require_unit(p, "flag probability");
  require(a.dim_in() == b.dim_in(), ErrorCode::kDimMismatch,
          "flagged mixture branches must share an input dimension");
  const std::size_t din = a.dim_in();
  const std::size_t block = std::max(a.dim_out(), b.dim_out());
  std::vector<ComplexMatrix> ks;
  auto embed = [&](const ComplexMatrix& k, std::size_t flag) {
    ComplexMatrix out = ComplexMatrix::Zero(2 * block, din);
    out.block(flag * block, 0, k.rows(), k.cols()) = k;
    return out;
  };
  for (const auto& k : a.kraus()) push_weighted(ks, p, embed(k, 0));
  for (const auto& k : b.kraus()) push_weighted(ks, 1.0 - p, embed(k, 1));
  return Channel::from_kraus(std::move(ks));
}

Channel make_erasure(double nu, std::size_t dim) {
  require_unit(nu, "erasure nu");
  require(dim > 0, ErrorCode::kBadParam, "dimension must be positive");
  std::vector<ComplexMatrix> ks;
  ComplexMatrix keep = ComplexMatrix::Zero(dim + 1, dim);
  keep.topRows(dim).setIdentity();
  push_weighted(ks, 1.0 - nu, keep);
  for (std::size_t i = 0; i < dim; ++i) {
    ComplexMatrix e = ComplexMatrix::Zero(dim + 1, dim);
    e(dim, i) = 1.0;
    push_weighted(ks, nu, e);
  }
  return Channel::from_kraus(std::move(ks));
}

Channel make_replacer(const ComplexVector& phi, std::size_t dim_in) {
  require(dim_in > 0, ErrorCode::kBadParam, "dimension must be positive");
  const double n = phi.norm();
  require(n > 0.0, ErrorCode::kBadParam, "replacer state has zero norm");
  std::vector<ComplexMatrix> ks;
  for (std::size_t i = 0; i < dim_in; ++i) {
    ComplexMatrix k = ComplexMatrix::Zero(phi.size(), dim_in);
    k.col(i) = phi / n;
    ks.push_back(std::move(k));
  }
  return Channel::from_kraus(std::move(ks));
}

}  // namespace qchan

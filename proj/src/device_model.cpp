// Copyright 2026 The ashn Authors
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

#include "ashn/device_model.hpp"

#include <cmath>

#include "ashn/errors.hpp"

namespace ashn {

namespace {

using Mat6 = Eigen::Matrix<double, 6, 6>;

// e^2 / (2 C h) in MHz for C in fF.
double charging_mhz_per_inverse_ff() {
  using namespace constants;
  return kElementaryCharge * kElementaryCharge / (2 * 1e-15 * kPlanck) * 1e-6;
}

std::pair<int, int> parse_key(const std::string& key) {
  if (key.size() != 3 || key[0] != 'C' || key[1] < '0' || key[1] > '6' ||
      key[2] < '0' || key[2] > '6' || key[1] >= key[2])
    throw DomainError("capacitance key must be Cij with 0 <= i < j <= 6: " +
                      key);
  return {key[1] - '0', key[2] - '0'};
}

Mat6 transform() {
  Mat6 s = Mat6::Zero();
  for (int k = 0; k < 3; ++k) {
    s(2 * k, 2 * k) = 0.5;
    s(2 * k, 2 * k + 1) = 0.5;
    s(2 * k + 1, 2 * k) = 0.5;
    s(2 * k + 1, 2 * k + 1) = -0.5;
  }
  return s;
}

}  // namespace

CapacitanceNetwork reference_network() {
  CapacitanceNetwork n;
  n.mutuals_ff = {{"C01", 137}, {"C02", 119}, {"C12", 23}, {"C03", 133},
                  {"C04", 165}, {"C34", 28},  {"C05", 137}, {"C06", 119},
                  {"C56", 23},  {"C23", 26},  {"C36", 26}};
  return n;
}

Mat6 maxwell_matrix(const CapacitanceNetwork& n) {
  Mat6 m = Mat6::Zero();
  for (const auto& [key, c] : n.mutuals_ff) {
    const auto [i, j] = parse_key(key);
    if (!(c > 0)) throw DomainError("capacitance must be > 0: " + key);
    if (i > 0) m(i - 1, i - 1) += c;
    m(j - 1, j - 1) += c;
    if (i > 0) {
      m(i - 1, j - 1) -= c;
      m(j - 1, i - 1) -= c;
    }
  }
  return m;
}

DeviceDerived derive(const CapacitanceNetwork& n) {
  DeviceDerived d;
  d.maxwell = maxwell_matrix(n);
  Eigen::LLT<Mat6> llt(d.maxwell);
  if (llt.info() != Eigen::Success)
    throw DomainError("Maxwell matrix is not positive definite");
  const Mat6 s = transform();
  d.transformed = s.transpose() * d.maxwell * s;
  Eigen::FullPivLU<Mat6> lu(d.transformed);
  if (!lu.isInvertible()) throw DomainError("capacitance matrix is singular");
  const Mat6 inv = lu.inverse();
  const double k = charging_mhz_per_inverse_ff();
  const int diff[3] = {1, 3, 5};  // difference modes: q1, coupler, q2
  for (int e = 0; e < 3; ++e) d.ec_mhz[e] = k * inv(diff[e], diff[e]);
  d.e_q1c_mhz = 2 * k * inv(1, 3);
  d.e_q2c_mhz = 2 * k * inv(5, 3);
  d.e_q1q2_mhz = 2 * k * inv(1, 5);

  for (int e = 0; e < 3; ++e) {
    const double ej = n.ej_ghz[e], ec = d.ec_mhz[e] * 1e-3;
    if (!(ej > 0)) throw DomainError("Josephson energies must be > 0");
    d.omega_ghz[e] = std::sqrt(8 * ec * ej) - ec;
    d.alpha_mhz[e] = -d.ec_mhz[e];
  }
  auto g = [&](double eij, int i, int j) {
    const double ratio = (n.ej_ghz[i] * n.ej_ghz[j]) /
                         (d.ec_mhz[i] * 1e-3 * d.ec_mhz[j] * 1e-3);
    return eij / std::sqrt(2.0) * std::pow(ratio, 0.25);
  };
  d.g_q1c_mhz = g(d.e_q1c_mhz, 0, 1);
  d.g_q2c_mhz = g(d.e_q2c_mhz, 2, 1);
  d.g_q1q2_mhz = g(d.e_q1q2_mhz, 0, 2);
  return d;
}

double ej_for_frequency(double ec_ghz, double omega_ghz) {
  if (!(ec_ghz > 0) || !(omega_ghz > 0))
    throw DomainError("ej_for_frequency: inputs must be > 0");
  return (omega_ghz + ec_ghz) * (omega_ghz + ec_ghz) / (8 * ec_ghz);
}

CapacitanceNetwork tune_to_frequencies(CapacitanceNetwork n,
                                       const std::array<double, 3>& omega_ghz) {
  // Charging energies do not depend on E_J; derive with placeholders.
  CapacitanceNetwork probe = n;
  probe.ej_ghz = {1, 1, 1};
  const DeviceDerived d = derive(probe);
  for (int e = 0; e < 3; ++e)
    n.ej_ghz[e] = ej_for_frequency(d.ec_mhz[e] * 1e-3, omega_ghz[e]);
  return n;
}

double effective_coupling(double g12, double g1c, double g2c, double w1,
                          double w2, double wc) {
  const double d1 = (w1 - wc) * 1e3, d2 = (w2 - wc) * 1e3;
  if (d1 == 0 || d2 == 0)
    throw DomainError("effective_coupling: coupler resonant with a qubit");
  return g12 + 0.5 * g1c * g2c * (1 / d1 + 1 / d2);
}

double zero_coupling_frequency(const CouplingParams& p) {
  double lo = std::max(p.w1_ghz, p.w2_ghz);
  lo = std::nextafter(lo, INFINITY) + 1e-9;
  double hi = p.wc_max_ghz;
  if (!(hi > lo)) throw DomainError("zero_coupling: empty search range");
  auto f = [&](double wc) {
    return effective_coupling(p.g12_mhz, p.g1c_mhz, p.g2c_mhz, p.w1_ghz,
                              p.w2_ghz, wc);
  };
  double flo = f(lo), fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw DomainError("zero_coupling: no root above the qubit frequencies");
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace ashn

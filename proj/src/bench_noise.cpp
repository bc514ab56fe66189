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

#include "ashn/bench_noise.hpp"

#include <cmath>
#include <random>

#include "ashn/evolve_verify.hpp"

namespace ashn {

namespace {

constexpr double kLogFloor = 1e-15;

std::array<double, 4> probabilities(const Eigen::Vector4cd& psi) {
  return {std::norm(psi(0)), std::norm(psi(1)), std::norm(psi(2)),
          std::norm(psi(3))};
}

double cross_entropy(const std::array<double, 4>& p,
                     const std::array<double, 4>& q) {
  double s = 0;
  for (int i = 0; i < 4; ++i) s -= p[i] * std::log(std::max(q[i], kLogFloor));
  return s;
}

Matrix2 expm_su2(const Eigen::Vector3d& v) {
  // exp(-i v.sigma)
  const double n = v.norm();
  Matrix2 m = std::cos(n) * Matrix2::Identity();
  if (n > 0) {
    const Eigen::Vector3d u = v / n;
    m -= kI * std::sin(n) *
         (u(0) * pauli::X() + u(1) * pauli::Y() + u(2) * pauli::Z());
  }
  return m;
}

struct Fit {
  double amplitude = 0, decay = 0;
  bool ok = false;
  std::string message;
};

Fit fit_decay(const std::vector<int>& depths, const std::vector<double>& f) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < depths.size(); ++i) {
    if (std::isfinite(f[i]) && f[i] > 1e-3) {
      xs.push_back(depths[i]);
      ys.push_back(std::log(f[i]));
    }
  }
  Fit fit;
  if (xs.size() < 2) {
    fit.message = "fewer than two depths with positive fidelity";
    return fit;
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double den = n * sxx - sx * sx;
  if (den <= 0) {
    fit.message = "degenerate depth set";
    return fit;
  }
  const double slope = (n * sxy - sx * sy) / den;
  const double intercept = (sy - slope * sx) / n;
  fit.decay = std::exp(slope);
  fit.amplitude = std::exp(intercept);
  if (fit.decay > 1 + 1e-9) {
    fit.message = "non-decaying data";
    return fit;
  }
  fit.ok = true;
  return fit;
}

}  // namespace

void validate(const NoiseModel& n) {
  if (!(n.depolarizing_per_cycle >= 0 && n.depolarizing_per_cycle <= 1))
    throw DomainError("noise: depolarizing probability must be in [0, 1]");
  if (!(n.dephasing_sigma1 >= 0) || !(n.dephasing_sigma2 >= 0))
    throw DomainError("noise: dephasing sigmas must be >= 0");
  if (!(n.cycle_ns >= 0)) throw DomainError("noise: cycle_ns must be >= 0");
}

std::vector<Unitary2> xeb_gate_set() {
  std::vector<Unitary2> set;
  const double c = std::cos(kPi / 4), s = std::sin(kPi / 4);
  for (int n = 1; n <= 8; ++n) {
    const double phi = n * kPi / 4, lam = -phi;
    Matrix2 m;
    m << c, -std::polar(s, lam), std::polar(s, phi), std::polar(c, phi + lam);
    set.push_back(Unitary2::trusted(m));
  }
  return set;
}

double xeb_fidelity(const std::array<double, 4>& measured,
                    const std::array<double, 4>& expected) {
  const std::array<double, 4> inc{0.25, 0.25, 0.25, 0.25};
  const double s_inc = cross_entropy(inc, expected);
  const double den = s_inc - cross_entropy(expected, expected);
  return (s_inc - cross_entropy(measured, expected)) / den;
}

XebResult xeb_run(const XebConfig& cfg) {
  if (cfg.depths.empty()) throw DomainError("xeb: depths must be non-empty");
  for (std::size_t i = 0; i < cfg.depths.size(); ++i) {
    if (cfg.depths[i] <= 0) throw DomainError("xeb: depths must be > 0");
    if (i > 0 && cfg.depths[i] <= cfg.depths[i - 1])
      throw DomainError("xeb: depths must be strictly increasing");
  }
  if (cfg.circuits_per_depth < 1)
    throw DomainError("xeb: circuits_per_depth must be >= 1");
  if (cfg.shots < 0) throw DomainError("xeb: shots must be >= 0");
  if (!(cfg.single_qubit_error >= 0 && cfg.single_qubit_error < 1))
    throw DomainError("xeb: single_qubit_error must be in [0, 1)");
  validate(cfg.noise);

  const auto gates = xeb_gate_set();
  Rng rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double p_dep = cfg.noise.depolarizing_per_cycle;
  const double t_us = cfg.noise.cycle_ns * 1e-3;
  const Matrix4& g2 = cfg.two_qubit_gate.matrix();

  XebResult res;
  res.depths = cfg.depths;
  for (int depth : cfg.depths) {
    double num = 0, den = 0;
    for (int circuit = 0; circuit < cfg.circuits_per_depth; ++circuit) {
      const double d1 = cfg.noise.dephasing_sigma1 * normal(rng);
      const double d2 = cfg.noise.dephasing_sigma2 * normal(rng);
      const Matrix4 zerr = kron(exp_pauli(Axis::Z, -d1 * t_us).matrix(),
                                exp_pauli(Axis::Z, -d2 * t_us).matrix());
      Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
      psi(0) = 1;
      Matrix4 rho = psi * psi.adjoint();
      for (int k = 0; k < depth; ++k) {
        const auto& ga = gates[rng() % 8];
        const auto& gb = gates[rng() % 8];
        const Matrix4 cyc = g2 * kron(ga.matrix(), gb.matrix());
        psi = cyc * psi;
        const Matrix4 noisy = zerr * cyc;
        rho = noisy * rho * noisy.adjoint();
        rho = (1 - p_dep) * rho + (p_dep / 4) * Matrix4::Identity();
      }
      const auto expected = probabilities(psi);
      std::array<double, 4> measured;
      for (int i = 0; i < 4; ++i) measured[i] = std::max(0.0, rho(i, i).real());
      if (cfg.shots > 0) {
        std::discrete_distribution<int> pick(measured.begin(), measured.end());
        std::array<double, 4> counts{0, 0, 0, 0};
        for (int s = 0; s < cfg.shots; ++s) counts[pick(rng)] += 1;
        for (int i = 0; i < 4; ++i) measured[i] = counts[i] / cfg.shots;
      }
      const std::array<double, 4> inc{0.25, 0.25, 0.25, 0.25};
      const double s_inc = cross_entropy(inc, expected);
      num += s_inc - cross_entropy(measured, expected);
      den += s_inc - cross_entropy(expected, expected);
    }
    res.per_depth_fidelity.push_back(num / den);
  }

  const Fit fit = fit_decay(res.depths, res.per_depth_fidelity);
  res.fit_ok = fit.ok;
  res.fit_message = fit.ok ? "ok" : fit.message;
  res.fitted_amplitude = fit.amplitude;
  res.fitted_decay = fit.decay;
  res.fitted_error_per_cycle = 1 - fit.decay;
  res.two_qubit_error = res.fitted_error_per_cycle - 2 * cfg.single_qubit_error;
  double ss = 0;
  for (std::size_t i = 0; i < res.depths.size(); ++i) {
    const double model = fit.amplitude * std::pow(fit.decay, res.depths[i]);
    ss += std::pow(res.per_depth_fidelity[i] - model, 2);
  }
  res.fit_residual = std::sqrt(ss / static_cast<double>(res.depths.size()));
  return res;
}

Unitary2 noisy_x90(double phase, double delta) {
  const Eigen::Vector3d v(kPi / 4 * std::cos(phase), kPi / 4 * std::sin(phase),
                          kPi / 4 * delta);
  return Unitary2::trusted(expm_su2(v));
}

Unitary2 noisy_pmw4(const Pmw4Sequence& seq, double delta) {
  return noisy_x90(seq.phases[0], delta) * noisy_x90(seq.phases[1], delta) *
         noisy_x90(seq.phases[2], delta) * noisy_x90(seq.phases[3], delta);
}

double pmw4_detuning_error(double alpha, double gamma, double delta) {
  if (!(std::abs(delta) < 0.2))
    throw DomainError("pmw4_detuning_error: |delta| must be < 0.2");
  EulerAngles e;
  e.alpha = alpha;
  e.gamma = gamma;
  const Pmw4Sequence seq = pmw4_from_euler(e);
  return 1 - gate_fidelity(e.matrix(), noisy_pmw4(seq, delta));
}

double pmw4_detuning_formula(double alpha, double gamma, double delta) {
  return 0.25 *
         (3 + 4 * std::cos(alpha) * std::cos(gamma) + std::cos(2 * gamma)) *
         delta * delta;
}

ErrorMapResult b_chamber_error_map(const std::vector<WeylPoint>& points,
                                   const NoiseModel& noise, int shots,
                                   std::uint64_t seed,
                                   const ErrorMapOptions& opt) {
  validate(noise);
  if (shots < 1) throw DomainError("errormap: shots must be >= 1");
  if (!(opt.g_mhz > 0)) throw DomainError("errormap: g_mhz must be > 0");
  if (!(opt.pulse_ns >= 0)) throw DomainError("errormap: pulse_ns must be >= 0");

  // Drive-level B evolution and the locals mapping it onto B.
  SynthesisRequest breq;
  breq.point = find_named_gate("b").point;
  const NormalizedControls bctl = synthesize(breq);
  const DriveSpec bdrive = drive_from(bctl);
  const Hermitian4 hb = build_hamiltonian(bdrive);
  const Unitary4 ub = evolve(bdrive);
  const LocalAlignment al = align_locals(b_matrix(), ub);

  struct Layer {
    Pmw4Sequence q1, q2;
  };
  struct Program {
    std::vector<Layer> layers;  // applied last-to-first, as matrices
    Unitary4 target;
  };
  std::vector<Program> progs;
  std::vector<int> counts;
  for (const auto& p : points) {
    Program pr;
    pr.target = weyl_unitary(p);
    const BGateProgram bp = compile_two_b(pr.target);
    counts.push_back(bp.b_count);
    auto layer = [](const Unitary2& a, const Unitary2& b) {
      return Layer{pmw4_compile(a), pmw4_compile(b)};
    };
    if (bp.b_count == 0) {
      pr.layers.push_back(layer(bp.k1 * bp.k3, bp.k2 * bp.k4));
    } else {
      pr.layers.push_back(layer(bp.k1 * al.l1, bp.k2 * al.l2));
      if (bp.b_count == 2)
        pr.layers.push_back(
            layer(al.r1 * bp.s1 * al.l1, al.r2 * bp.s2 * al.l2));
      pr.layers.push_back(layer(al.r1 * bp.k3, al.r2 * bp.k4));
    }
    progs.push_back(std::move(pr));
  }

  const double g_ang = 2 * kPi * opt.g_mhz;
  const double tg_us = opt.pulse_ns * 1e-3;
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  std::vector<bool> on_line(points.size());
  std::size_t n_line = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    on_line[i] = std::abs(points[i].a - kPi / 4) < 1e-9 &&
                 std::abs(points[i].b - kPi / 4) < 1e-9;
    n_line += on_line[i];
  }

  std::vector<double> sum(points.size(), 0), sum2(points.size(), 0);
  double dsum = 0, dsum2 = 0;
  for (int s = 0; s < shots; ++s) {
    const double d1 = noise.dephasing_sigma1 * normal(rng);
    const double d2 = noise.dephasing_sigma2 * normal(rng);
    const Matrix4 hz =
        (d1 / g_ang) * kron(pauli::Z(), pauli::I()) +
        (d2 / g_ang) * kron(pauli::I(), pauli::Z());
    const Matrix4 ubn =
        expm_generator(hb + Hermitian4(hz), bctl.tau).matrix();
    const double p1 = 2 * tg_us * d1, p2 = 2 * tg_us * d2;

    double line_acc = 0, all_acc = 0;
    for (std::size_t i = 0; i < progs.size(); ++i) {
      const auto& pr = progs[i];
      Matrix4 u = Matrix4::Identity();
      for (std::size_t k = 0; k < pr.layers.size(); ++k) {
        if (k > 0) u = u * ubn;
        u = u * kron(noisy_pmw4(pr.layers[k].q1, p1).matrix(),
                     noisy_pmw4(pr.layers[k].q2, p2).matrix());
      }
      const double err =
          1 - std::abs((pr.target.matrix() * u.adjoint()).trace()) / 4;
      sum[i] += err;
      sum2[i] += err * err;
      all_acc += err;
      if (on_line[i]) line_acc += err;
    }
    if (n_line > 0 && !points.empty()) {
      const double d = all_acc / static_cast<double>(points.size()) -
                       line_acc / static_cast<double>(n_line);
      dsum += d;
      dsum2 += d * d;
    }
  }

  ErrorMapResult res;
  res.shots = shots;
  const double n = shots;
  double line_mean = 0, all_mean = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    ErrorMapEntry e;
    e.point = points[i];
    e.b_count = counts[i];
    e.mean_error = sum[i] / n;
    const double var =
        shots > 1 ? std::max(0.0, (sum2[i] - n * e.mean_error * e.mean_error) /
                                      (n - 1))
                  : 0.0;
    e.std_error = std::sqrt(var / n);
    res.entries.push_back(e);
    all_mean += e.mean_error;
    if (on_line[i]) line_mean += e.mean_error;
  }
  LineContrast& c = res.contrast;
  c.line_points = n_line;
  if (!points.empty()) c.chamber_mean = all_mean / points.size();
  if (n_line > 0) {
    c.line_mean = line_mean / n_line;
    c.difference = dsum / n;
    const double var =
        shots > 1 ? std::max(0.0, (dsum2 - n * c.difference * c.difference) /
                                      (n - 1))
                  : 0.0;
    c.difference_std_error = std::sqrt(var / n);
    c.significance = c.difference_std_error > 0
                         ? c.difference / c.difference_std_error
                         : (c.difference > 0 ? INFINITY : 0.0);
  }
  return res;
}

std::pair<double, double> DecoherenceBounds::error_band(double tau_ns) const {
  return {tau_ns * 1e-3 / t_high_us, tau_ns * 1e-3 / t_low_us};
}

DecoherenceBounds decoherence_bounds(double n, double pulse_ns,
                                     double cycle_ns) {
  if (!(n > 0) || !(pulse_ns > 0) || !(cycle_ns > 0))
    throw DomainError("decoherence_bounds: inputs must be > 0");
  return {n * pulse_ns * 1e-3, n * cycle_ns * 1e-3};
}

double dephasing_gate_error(const NormalizedControls& c,
                            const DephasingOptions& opt) {
  if (!(opt.t_phi_us > 0)) throw DomainError("dephasing: t_phi must be > 0");
  if (!(opt.g_mhz > 0)) throw DomainError("dephasing: g_mhz must be > 0");
  if (opt.slices < 1 || opt.trajectories < 1)
    throw DomainError("dephasing: slices and trajectories must be >= 1");
  const DriveSpec d = drive_from(c);
  const Hermitian4 h0 = build_hamiltonian(d);
  const Matrix4 ideal = evolve(d).matrix();
  const double dt = d.tau / opt.slices;
  // Coherence exp(-t/T_phi) for H = xi Z/2 needs white-noise density 2/T_phi.
  const double density = 2.0 / (2 * kPi * opt.g_mhz * opt.t_phi_us);
  const double sd = std::sqrt(density / dt);
  const Matrix4 zi = 0.5 * kron(pauli::Z(), pauli::I());
  const Matrix4 iz = 0.5 * kron(pauli::I(), pauli::Z());

  Rng rng(opt.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  double acc = 0;
  for (int t = 0; t < opt.trajectories; ++t) {
    Matrix4 v = Matrix4::Identity();
    for (int k = 0; k < opt.slices; ++k) {
      const double x1 = sd * normal(rng), x2 = sd * normal(rng);
      v = expm_generator(h0 + Hermitian4(x1 * zi + x2 * iz), dt).matrix() * v;
    }
    acc += std::norm((ideal.adjoint() * v).trace()) / 16.0;
  }
  const double f_pro = acc / opt.trajectories;
  return 0.8 * (1 - f_pro);
}

double calibrate_t_phi(const NormalizedControls& c, double target_error,
                       DephasingOptions opt) {
  if (!(target_error > 0)) throw DomainError("calibrate: target must be > 0");
  for (int it = 0; it < 4; ++it) {
    const double err = dephasing_gate_error(c, opt);
    opt.t_phi_us *= err / target_error;
  }
  return opt.t_phi_us;
}

}  // namespace ashn

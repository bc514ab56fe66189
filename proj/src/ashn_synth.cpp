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

#include "ashn/ashn_synth.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cctype>
#include <cmath>

namespace ashn {

namespace {

constexpr double kHalfPi = kPi / 2;
constexpr double kDomainSlack = 1e-12;
constexpr int kSeedGrid = 32;
constexpr double kRootTol = 1e-12;

double sinc(double x) { return x == 0 ? 1.0 : std::sin(x) / x; }

void require_finite(const SynthesisRequest& req) {
  const WeylPoint& p = req.point;
  if (!(std::isfinite(p.a) && std::isfinite(p.b) && std::isfinite(p.c) &&
        std::isfinite(req.h)))
    throw DomainError("synthesis: non-finite input");
  if (std::abs(req.h) >= 1)
    throw DomainError("synthesis: h must satisfy |h| < 1");
}

/** sinc_inv with the region check used by the ND formulas. */
double region_sinc_inv(double v) {
  if (!std::isfinite(v) || v < -kDomainSlack || v > 1 + kDomainSlack)
    throw DomainError("synthesis: sinc_inv argument outside [0,1] "
                      "(point outside the selected region)");
  return sinc_inv(std::clamp(v, 0.0, 1.0));
}

double gamma_of(double r) { return std::sqrt(std::max(0.0, r * r - 1)) / 4; }

NormalizedControls nd_like(double tau, double s1, double s2, double h,
                           Variant variant) {
  if (!(tau > 0)) throw DomainError("synthesis: non-positive duration");
  double r1 = 2 * region_sinc_inv(2 * s1 / ((1 + h) * tau)) / tau;
  double r2 = 2 * region_sinc_inv(2 * s2 / ((1 - h) * tau)) / tau;
  double g1 = gamma_of(r1), g2 = gamma_of(r2);
  NormalizedControls c;
  c.tau = tau;
  c.omega1 = 2 * (g1 + g2);
  c.omega2 = 2 * (g1 - g2);
  c.delta = 0;
  c.variant = variant;
  return c;
}

// Solved in extended precision: at boundary points such as SWAP the root is
// double, so the root error scales like the square root of the residual.
using Real = long double;
using ComplexL = std::complex<Real>;

struct EaProblem {
  Real tau, tau_p;
  ComplexL target;

  EaProblem(Real x, Real y, Real z, Real h) {
    tau = 2 * (x + y + z) / (2 + h);
    tau_p = (1 - h) * tau;
    Real s = h * tau / 2;
    Real xp = x - s, yp = y - s, zp = z - s;
    const ComplexL i(0, 1);
    target = std::exp(i * (yp - xp - zp)) - std::exp(i * (xp - yp - zp)) -
             std::exp(i * (zp - xp - yp));
  }

  struct Term {
    ComplexL value, d_alpha, d_beta;
  };

  // p e / q with partials, given partials of p, e and q
  static Term quotient(Real p, Real pa, Real pb, ComplexL e, ComplexL ea,
                       ComplexL eb, Real q, Real qa, Real qb) {
    Term t;
    t.value = p * e / q;
    t.d_alpha = (pa * e + p * ea) / q - p * e * qa / (q * q);
    t.d_beta = (pb * e + p * eb) / q - p * e * qb / (q * q);
    return t;
  }

  /** F(alpha, beta) - S with its partial derivatives. */
  Term eval(Real al, Real be) const {
    const ComplexL i(0, 1);
    const Real tp = tau_p;
    const ComplexL zero(0, 0);
    ComplexL e1 = std::exp(i * (tp * (al + be)));
    Real q1a = 2 * al + be, q1b = 1 + al + 2 * be;
    Term t1 = quotient((1 - al) * be, -be, 1 - al, e1, i * tp * e1,
                       i * tp * e1, q1a * q1b, 2 * q1b + q1a, q1b + 2 * q1a);
    ComplexL e2 = std::exp(-i * (tp * (1 + be)));
    Real q2a = 1 - al + be, q2b = 1 + al + 2 * be;
    Term t2 = quotient((1 - al) * (1 + al + be), -2 * al - be, 1 - al, e2,
                       zero, -i * tp * e2, q2a * q2b, -q2b + q2a, q2b + 2 * q2a);
    ComplexL e3 = std::exp(-i * (tp * al));
    Real q3a = 1 - al + be, q3b = 2 * al + be;
    Term t3 = quotient(be * (1 + al + be), be, 1 + al + 2 * be, e3,
                       -i * tp * e3, zero, q3a * q3b, -q3b + 2 * q3a, q3b + q3a);
    Term f;
    f.value = t1.value - t2.value - t3.value - target;
    f.d_alpha = t1.d_alpha - t2.d_alpha - t3.d_alpha;
    f.d_beta = t1.d_beta - t2.d_beta - t3.d_beta;
    return f;
  }

  Real residual(Real al, Real be) const {
    // (0, 0) is 0/0 in two terms; use the limit along alpha = 0, where
    // both of them tend to 1.
    if (al == 0 && be == 0) {
      const ComplexL i(0, 1);
      return std::abs(-std::exp(-i * tau_p) - target);
    }
    return std::abs(eval(al, be).value);
  }
};

struct EaSolution {
  double tau, alpha, beta, gamma, d;
};

EaSolution solve_ea(double x, double y, double z, double h) {
  const EaProblem prob(x, y, z, h);
  if (!(prob.tau > 0)) throw DomainError("synthesis: non-positive EA duration");
  const Real beta_max = 2 * static_cast<Real>(kPi) / prob.tau;
  double best_residual = INFINITY;
  using Mat2L = Eigen::Matrix<Real, 2, 2>;
  using Vec2L = Eigen::Matrix<Real, 2, 1>;
  for (int i = 0; i < kSeedGrid; ++i) {
    for (int j = 0; j < kSeedGrid; ++j) {
      Real al = (i + 0.5L) / kSeedGrid;
      Real be = (j + 0.5L) / kSeedGrid * beta_max;
      EaProblem::Term f = prob.eval(al, be);
      Real res = std::abs(f.value);
      for (int it = 0; it < 300 && std::isfinite(static_cast<double>(res)) &&
                       res > 0;
           ++it) {
        Mat2L jac;
        jac << f.d_alpha.real(), f.d_beta.real(), f.d_alpha.imag(),
            f.d_beta.imag();
        Vec2L rhs(-f.value.real(), -f.value.imag());
        Vec2L step =
            jac.jacobiSvd(Eigen::ComputeFullU | Eigen::ComputeFullV).solve(rhs);
        if (!step.allFinite()) break;
        Real lambda = 1;
        bool improved = false;
        for (int ls = 0; ls < 40; ++ls, lambda /= 2) {
          Real na = al + lambda * step(0), nb = be + lambda * step(1);
          EaProblem::Term nf = prob.eval(na, nb);
          Real nres = std::abs(nf.value);
          if (std::isfinite(static_cast<double>(nres)) && nres < res) {
            al = na, be = nb, f = nf, res = nres;
            improved = true;
            break;
          }
        }
        if (!improved) break;
      }
      if (!std::isfinite(static_cast<double>(res))) continue;
      bool inside = al >= -1e-9L && al <= 1 + 1e-9L && be >= -1e-9L &&
                    be <= beta_max + 1e-9L;
      if (!inside) continue;
      Real ca = std::clamp<Real>(al, 0, 1), cb = std::clamp<Real>(be, 0, beta_max);
      double cres = static_cast<double>(prob.residual(ca, cb));
      best_residual = std::min(best_residual, cres);
      if (cres < kRootTol) {
        EaSolution s;
        s.tau = static_cast<double>(prob.tau);
        s.alpha = static_cast<double>(ca);
        s.beta = static_cast<double>(cb);
        s.gamma = static_cast<double>(
            std::sqrt(std::max<Real>(0, (1 + ca + cb) * (1 - ca) * cb)) / 2);
        s.d = static_cast<double>(
            std::sqrt(std::max<Real>(0, (ca + cb) * ca * (1 + cb))) / 2);
        return s;
      }
    }
  }
  throw SolverError("synthesis: EA root not found on the 32x32 seed grid",
                    best_residual);
}

NormalizedControls with_advisory(NormalizedControls c,
                                 const SynthesisRequest& req) {
  if (!req.amplitude_cap) return c;
  double peak = std::max(c.amplitude1(), c.amplitude2());
  if (peak > *req.amplitude_cap) {
    AmplitudeAdvisory adv;
    adv.max_amplitude = peak;
    adv.cap = *req.amplitude_cap;
    adv.recommended_r = recommend_r(req.point, req.h, *req.amplitude_cap);
    c.advisory = adv;
  }
  return c;
}

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::ND:
      return "ND";
    case Variant::ND_EXT:
      return "ND_EXT";
    case Variant::EA_PLUS:
      return "EA_PLUS";
    default:
      return "EA_MINUS";
  }
}

double DispatchDurations::tau1() const {
  return std::max({nd, ea_plus, ea_minus});
}
double DispatchDurations::tau2() const {
  return std::max({nd_mirror, ea_plus_mirror, ea_minus_mirror});
}

DispatchDurations dispatch_durations(const WeylPoint& p, double h) {
  const double x = p.a, y = p.b, z = p.c;
  DispatchDurations d;
  d.nd = 2 * x;
  d.ea_plus = 2 * (x + y + z) / (2 + h);
  d.ea_minus = 2 * (x + y - z) / (2 - h);
  d.nd_mirror = kPi - 2 * x;
  d.ea_plus_mirror = 2 * (kHalfPi - x + y - z) / (2 + h);
  d.ea_minus_mirror = 2 * (kHalfPi - x + y + z) / (2 - h);
  return d;
}

double sinc_inv(double v) {
  if (!std::isfinite(v) || v < 0 || v > 1)
    throw DomainError("sinc_inv: argument outside [0,1]");
  if (v == 1) return 0;
  if (v == 0) return kPi;
  double lo = 0, hi = kPi;
  while (hi - lo > 1e-14) {
    double mid = 0.5 * (lo + hi);
    if (sinc(mid) > v)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

NormalizedControls synth_nd(const SynthesisRequest& req) {
  require_finite(req);
  const WeylPoint& p = req.point;
  return nd_like(2 * p.a, std::sin(p.b + p.c), std::sin(p.b - p.c), req.h,
                 Variant::ND);
}

NormalizedControls synth_nd_ext(const SynthesisRequest& req) {
  require_finite(req);
  const WeylPoint& p = req.point;
  return nd_like(kPi - 2 * p.a, std::sin(p.b - p.c), std::sin(p.b + p.c),
                 req.h, Variant::ND_EXT);
}

NormalizedControls synth_ea_plus(const SynthesisRequest& req) {
  require_finite(req);
  const WeylPoint& p = req.point;
  EaSolution s = solve_ea(p.a, p.b, p.c, req.h);
  // The root's literal controls (W, W, D) generate the c -> -c class under
  // this package's sign conventions; (W, -W, -D) generates the target.
  NormalizedControls c;
  c.tau = s.tau;
  c.omega1 = 2 * (1 - req.h) * s.gamma;
  c.omega2 = -c.omega1;
  c.delta = -2 * (1 - req.h) * s.d;
  c.variant = Variant::EA_PLUS;
  c.ea_root = std::make_pair(s.alpha, s.beta);
  return c;
}

NormalizedControls synth_ea_minus(const SynthesisRequest& req) {
  require_finite(req);
  const WeylPoint& p = req.point;
  const double h = -req.h;
  EaSolution s = solve_ea(p.a, p.b, -p.c, h);
  NormalizedControls c;
  c.tau = s.tau;
  c.omega1 = 2 * (1 - h) * s.gamma;
  c.omega2 = c.omega1;
  c.delta = 2 * (1 - h) * s.d;
  c.variant = Variant::EA_MINUS;
  c.ea_root = std::make_pair(s.alpha, s.beta);
  return c;
}

NormalizedControls synthesize(const SynthesisRequest& req) {
  require_finite(req);
  if (!is_canonical(req.point))
    throw DomainError("synthesize: point is not canonical");
  if (req.r < 0 || req.r > (1 - std::abs(req.h)) * kHalfPi + 1e-15)
    throw DomainError("synthesize: r outside [0, (1-|h|) pi/2]");
  const DispatchDurations d = dispatch_durations(req.point, req.h);
  if (std::min(d.tau1(), d.tau2()) <= req.r)
    return with_advisory(synth_nd_ext(req), req);

  SynthesisRequest sub = req;
  double nd = d.nd, ea_plus = d.ea_plus, ea_minus = d.ea_minus;
  bool mirrored = false;
  if (d.tau2() < d.tau1()) {
    sub.point.a = kHalfPi - req.point.a;
    sub.point.c = -req.point.c;
    nd = d.nd_mirror;
    ea_plus = d.ea_plus_mirror;
    ea_minus = d.ea_minus_mirror;
    mirrored = true;
  }
  NormalizedControls c;
  if (nd >= std::max(ea_plus, ea_minus))
    c = synth_nd(sub);
  else if (ea_plus >= ea_minus)
    c = synth_ea_plus(sub);
  else
    c = synth_ea_minus(sub);
  c.mirrored = mirrored;
  return with_advisory(c, req);
}

double ea_residual(const WeylPoint& p, double h, double alpha, double beta) {
  return static_cast<double>(EaProblem(p.a, p.b, p.c, h).residual(alpha, beta));
}

std::optional<double> recommend_r(const WeylPoint& p, double h, double cap) {
  const DispatchDurations d = dispatch_durations(p, h);
  const double r = std::min(d.tau1(), d.tau2());
  if (r > (1 - std::abs(h)) * kHalfPi) return std::nullopt;
  SynthesisRequest req{p, h, r, std::nullopt};
  try {
    NormalizedControls c = synth_nd_ext(req);
    if (std::max(c.amplitude1(), c.amplitude2()) <= cap) return r;
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

PhysicalControls to_physical(const NormalizedControls& c, double g_mhz) {
  if (!(g_mhz > 0) || !std::isfinite(g_mhz))
    throw DomainError("to_physical: g_mhz must be positive");
  PhysicalControls p;
  p.g_mhz = g_mhz;
  p.t_ns = c.tau * 1000.0 / (2 * kPi * g_mhz);
  p.omega1_mhz = c.amplitude1() * g_mhz;
  p.omega2_mhz = c.amplitude2() * g_mhz;
  p.phi1 = c.omega1 < 0 ? kPi : 0.0;
  p.phi2 = c.omega2 < 0 ? kPi : 0.0;
  p.delta_mhz = c.delta * g_mhz;
  return p;
}

const std::vector<NamedGate>& named_gates() {
  static const std::vector<NamedGate> table = {
      {"sqrt_iswap", {kPi / 8, kPi / 8, 0}, 0},
      {"iswap", {kPi / 4, kPi / 4, 0}, 0},
      {"swap_quarter", {kPi / 16, kPi / 16, kPi / 16}, 3 * kPi / 16},
      {"sqrt_swap", {kPi / 8, kPi / 8, kPi / 8}, 3 * kPi / 8},
      {"swap", {kPi / 4, kPi / 4, kPi / 4}, 0},
      {"cv", {kPi / 8, 0, 0}, kPi / 4},
      {"cnot", {kPi / 4, 0, 0}, 0},
      {"b", {kPi / 4, kPi / 8, 0}, 0},
      {"ecp_dag", {kPi / 4, kPi / 8, -kPi / 8}, 0},
      {"qft", {kPi / 4, kPi / 4, kPi / 8}, 0},
  };
  return table;
}

const NamedGate& find_named_gate(const std::string& name) {
  std::string key;
  for (char ch : name)
    key += ch == '-' ? '_' : static_cast<char>(std::tolower(ch));
  for (const NamedGate& g : named_gates())
    if (g.name == key) return g;
  throw DomainError("unknown gate name '" + name + "'");
}

}  // namespace ashn

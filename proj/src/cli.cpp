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

#include "ashn/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ashn/json_io.hpp"

namespace ashn::cli {

namespace {

using json_io::Json;

/** Bad input detected while preparing a request. */
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** A module reported failure after running. */
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string one_line(std::string s) {
  for (char& ch : s)
    if (ch == '\n' || ch == '\r') ch = ' ';
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
}

double default_g_mhz() {
  const char* env = std::getenv(kGEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultGMhz;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0) || !std::isfinite(v))
    throw UsageError(std::string(kGEnvVar) + " must be a positive number");
  return v;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::vector<double> parse_list(const std::string& s, const char* flag) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double x = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0' || !std::isfinite(x))
      throw UsageError(std::string(flag) + ": bad number '" + item + "'");
    v.push_back(x);
  }
  return v;
}

/** Target selection shared by several subcommands. */
struct TargetArgs {
  std::string gate;
  std::optional<double> a, b, c;
  std::string coords;
  std::string matrix;

  void attach(CLI::App* sub, bool with_matrix) {
    sub->add_option("--gate", gate, "named gate (e.g. cnot, b, swap)");
    sub->add_option("--a", a, "interaction coordinate a");
    sub->add_option("--b", b, "interaction coordinate b");
    sub->add_option("--c", c, "interaction coordinate c");
    sub->add_option("--coords", coords, "a,b,c");
    if (with_matrix)
      sub->add_option("--matrix", matrix, "4x4 unitary matrix JSON file");
  }

  bool any() const {
    return sources() > 0;
  }

  int sources() const {
    return !gate.empty() + (a || b || c) + !coords.empty() + !matrix.empty();
  }

  /** Raw point and the named-gate r when a gate name is used. */
  std::pair<WeylPoint, std::optional<double>> point() const {
    if (sources() != 1)
      throw UsageError("give exactly one of --gate, --coords or --a/--b/--c");
    if (!gate.empty()) {
      const NamedGate& g = find_named_gate(gate);
      return {g.point, g.r};
    }
    if (!matrix.empty())
      return {kak_decompose(json_io::unitary4_from_json(
                                read_json_file(matrix)))
                  .point,
              std::nullopt};
    if (!coords.empty()) {
      const auto v = parse_list(coords, "--coords");
      if (v.size() != 3) throw UsageError("--coords needs three values");
      return {WeylPoint{v[0], v[1], v[2]}, std::nullopt};
    }
    if (!a || !b || !c) throw UsageError("--a, --b and --c must all be given");
    return {WeylPoint{*a, *b, *c}, std::nullopt};
  }
};

struct Common {
  bool json = false;
  std::optional<double> g_mhz;

  double g() const {
    if (g_mhz) {
      if (!(*g_mhz > 0) || !std::isfinite(*g_mhz))
        throw UsageError("--g-mhz must be positive");
      return *g_mhz;
    }
    return default_g_mhz();
  }
};

void print_point(std::ostream& out, const char* label, const WeylPoint& p) {
  out << label << " " << p.a << " " << p.b << " " << p.c << "\n";
}

struct SynthArgs {
  TargetArgs target;
  double h = 0;
  std::optional<double> r;
  std::optional<double> cap;
};

struct Synthesized {
  WeylPoint requested;
  WeylPoint canonical;
  NormalizedControls normalized;
  PhysicalControls physical;
};

Synthesized do_synth(const SynthArgs& s, double g) {
  auto [p, named_r] = s.target.point();
  Synthesized out;
  out.requested = p;
  out.canonical = canonicalize(p).point;
  SynthesisRequest req;
  req.point = out.canonical;
  req.h = s.h;
  req.r = s.r.value_or(named_r.value_or(0.0));
  if (s.cap) {
    if (!(*s.cap > 0)) throw UsageError("--cap must be positive");
    req.amplitude_cap = *s.cap;
  }
  out.normalized = synthesize(req);
  out.physical = to_physical(out.normalized, g);
  return out;
}

Json synth_json(const Synthesized& s) {
  return Json{{"target", json_io::to_json(s.requested)},
              {"canonical", json_io::to_json(s.canonical)},
              {"normalized", json_io::to_json(s.normalized)},
              {"physical", json_io::to_json(s.physical)}};
}

void print_physical(std::ostream& out, const NormalizedControls& n,
                    const PhysicalControls& p) {
  out << "variant " << to_string(n.variant) << (n.mirrored ? " (mirror)" : "")
      << "\n";
  out << "t_ns " << p.t_ns << "\n";
  out << "omega1_mhz " << p.omega1_mhz << " phase " << p.phi1 << "\n";
  out << "omega2_mhz " << p.omega2_mhz << " phase " << p.phi2 << "\n";
  out << "delta_mhz " << p.delta_mhz << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Two-qubit gate synthesis, compilation and benchmarking"};
  app.name("ashn");
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.json, "machine-readable JSON output");
  app.add_option("--g-mhz", common.g_mhz,
                 "coupling g/2pi in MHz (default from ASHN_G_MHZ or 6.25)");

  // kak
  auto* kak = app.add_subcommand("kak", "KAK decomposition of a 4x4 unitary");
  std::string kak_matrix;
  kak->add_option("--matrix", kak_matrix, "matrix JSON file")->required();

  // canon
  auto* canon = app.add_subcommand("canon", "canonical chamber point");
  std::optional<double> ca, cb, cc;
  canon->add_option("--a", ca)->required();
  canon->add_option("--b", cb)->required();
  canon->add_option("--c", cc)->required();

  // synth
  auto* synth = app.add_subcommand("synth", "synthesize drive controls");
  SynthArgs sargs;
  sargs.target.attach(synth, false);
  synth->add_option("--h", sargs.h, "drive asymmetry h, |h| < 1");
  synth->add_option("--r", sargs.r, "extended-branch threshold duration");
  synth->add_option("--cap", sargs.cap, "amplitude cap (units of g)");

  // verify
  auto* verify = app.add_subcommand("verify", "evolve controls and compare");
  SynthArgs vargs;
  std::string controls_file;
  vargs.target.attach(verify, false);
  verify->add_option("--controls", controls_file,
                     "controls JSON (synth --json output)");
  verify->add_option("--h", vargs.h);
  verify->add_option("--r", vargs.r);

  // bgate
  auto* bgate = app.add_subcommand("bgate", "compile with two B gates");
  TargetArgs bargs;
  bool sweep = false;
  bargs.attach(bgate, true);
  bgate->add_flag("--sweep", sweep, "compile the 152-point chamber sweep");

  // pmw4
  auto* pmw4 = app.add_subcommand("pmw4", "four-pulse single-qubit compile");
  std::string pmw4_matrix;
  std::optional<double> alpha, beta, gamma;
  pmw4->add_option("--matrix", pmw4_matrix, "2x2 unitary JSON file");
  pmw4->add_option("--alpha", alpha);
  pmw4->add_option("--beta", beta);
  pmw4->add_option("--gamma", gamma);

  // schedule
  auto* schedule = app.add_subcommand("schedule", "full pulse schedule");
  SynthArgs scargs;
  scargs.target.attach(schedule, false);
  ScheduleOptions sopt;
  std::string static_z;
  schedule->add_option("--rate", sopt.rate, "samples per ns")
      ->check(CLI::PositiveNumber);
  schedule->add_option("--edge-ns", sopt.edge_ns)->check(CLI::PositiveNumber);
  schedule->add_option("--steepness", sopt.steepness)
      ->check(CLI::PositiveNumber);
  schedule->add_option("--static-z", static_z,
                       "four static Z phases: q1 pre, q2 pre, q1 post, q2 post");

  // xeb
  auto* xeb = app.add_subcommand("xeb", "simulated cross-entropy benchmark");
  std::string xeb_gate = "b", xeb_matrix, depths_s = "1,2,4,8,16,32,64,100";
  XebConfig xcfg;
  std::optional<std::uint64_t> xeb_seed;
  xeb->add_option("--gate", xeb_gate, "named two-qubit gate");
  xeb->add_option("--matrix", xeb_matrix, "4x4 unitary JSON file");
  xeb->add_option("--depths", depths_s, "comma-separated increasing depths");
  xeb->add_option("--circuits", xcfg.circuits_per_depth)
      ->check(CLI::PositiveNumber);
  xeb->add_option("--depolarizing", xcfg.noise.depolarizing_per_cycle)
      ->check(CLI::Range(0.0, 1.0));
  xeb->add_option("--sigma1", xcfg.noise.dephasing_sigma1)
      ->check(CLI::NonNegativeNumber);
  xeb->add_option("--sigma2", xcfg.noise.dephasing_sigma2)
      ->check(CLI::NonNegativeNumber);
  xeb->add_option("--cycle-ns", xcfg.noise.cycle_ns)
      ->check(CLI::NonNegativeNumber);
  xeb->add_option("--shots", xcfg.shots)->check(CLI::NonNegativeNumber);
  xeb->add_option("--sq-error", xcfg.single_qubit_error)
      ->check(CLI::Range(0.0, 1.0));
  xeb->add_option("--seed", xeb_seed)->required();

  // errormap
  auto* emap = app.add_subcommand("errormap", "dephasing error map");
  NoiseModel enoise;
  enoise.dephasing_sigma1 = 0.765;
  enoise.dephasing_sigma2 = 1.258;
  int eshots = 200;
  ErrorMapOptions eopt;
  std::optional<std::uint64_t> emap_seed;
  emap->add_option("--sigma1", enoise.dephasing_sigma1)
      ->check(CLI::NonNegativeNumber);
  emap->add_option("--sigma2", enoise.dephasing_sigma2)
      ->check(CLI::NonNegativeNumber);
  emap->add_option("--shots", eshots)->check(CLI::PositiveNumber);
  emap->add_option("--pulse-ns", eopt.pulse_ns)->check(CLI::NonNegativeNumber);
  emap->add_option("--seed", emap_seed)->required();

  // wstate
  auto* wstate = app.add_subcommand("wstate", "W-state circuit");
  int wn = 0;
  std::string wphases;
  wstate->add_option("--n", wn)->required()->check(CLI::Range(2, kMaxQubits));
  wstate->add_option("--phases", wphases, "n-1 comma-separated phases");

  // dicke
  auto* dicke = app.add_subcommand("dicke", "Dicke target state");
  int dn = 0, dk = 0;
  dicke->add_option("--n", dn)->required()->check(CLI::Range(1, kMaxQubits));
  dicke->add_option("--k", dk)->required()->check(CLI::NonNegativeNumber);

  // device
  auto* device = app.add_subcommand("device", "capacitance network model");
  std::string caps;
  device->add_option("--caps", caps, "network JSON file")->required();

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << one_line(e.what()) << "\n";
    return kUsage;
  }

  out << std::setprecision(12);
  try {
    if (*kak) {
      const Unitary4 u =
          json_io::unitary4_from_json(read_json_file(kak_matrix));
      const KakFactors k = kak_decompose(u);
      const double resid = max_abs(k.reconstruct().matrix() - u.matrix());
      if (common.json) {
        Json j = json_io::to_json(k);
        j["residual"] = resid;
        emit_json(out, j);
      } else {
        print_point(out, "point", k.point);
        out << "residual " << resid << "\n";
      }
    } else if (*canon) {
      const WeylPoint p{*ca, *cb, *cc};
      const CanonicalForm f = canonicalize(p);
      if (common.json)
        emit_json(out, Json{{"input", json_io::to_json(p)},
                            {"canonical", json_io::to_json(f.point)},
                            {"mirrored", f.mirrored}});
      else
        print_point(out, "canonical", f.point);
    } else if (*synth) {
      const double g = common.g();
      const Synthesized s = do_synth(sargs, g);
      if (common.json) {
        emit_json(out, synth_json(s));
      } else {
        print_point(out, "canonical", s.canonical);
        print_physical(out, s.normalized, s.physical);
      }
    } else if (*verify) {
      NormalizedControls ctl;
      WeylPoint target;
      if (!controls_file.empty()) {
        const Json j = read_json_file(controls_file);
        const Json& cj = j.contains("normalized") ? j["normalized"] : j;
        ctl = json_io::controls_from_json(cj);
        if (vargs.target.any())
          target = vargs.target.point().first;
        else if (j.contains("canonical"))
          target = json_io::point_from_json(j["canonical"]);
        else
          throw UsageError("verify: no target in controls file or flags");
      } else {
        const Synthesized s = do_synth(vargs, kDefaultGMhz);
        ctl = s.normalized;
        target = s.requested;
      }
      const VerificationReport r = verify_controls(ctl, target);
      if (common.json) {
        emit_json(out, json_io::to_json(r));
      } else {
        print_point(out, "target", canonicalize(target).point);
        print_point(out, "achieved", r.achieved);
        out << "distance " << r.distance << "\n";
        out << (r.passed ? "PASS" : "FAIL") << "\n";
      }
      if (!r.passed) return kFailure;
    } else if (*bgate) {
      if (sweep) {
        if (bargs.any()) throw UsageError("--sweep takes no target");
        const auto entries = chamber_sweep();
        std::size_t ok = 0;
        for (const auto& e : entries) ok += e.ok;
        if (common.json) {
          Json arr = Json::array();
          for (const auto& e : entries) arr.push_back(json_io::to_json(e));
          emit_json(out, Json{{"points", entries.size()},
                              {"compiled", ok},
                              {"entries", arr}});
        } else {
          out << "a,b,c,b_count,beta1,beta2,residual,ok\n";
          for (const auto& e : entries)
            out << e.point.a << "," << e.point.b << "," << e.point.c << ","
                << e.b_count << "," << e.mid.beta1 << "," << e.mid.beta2
                << "," << e.residual << "," << (e.ok ? 1 : 0) << "\n";
        }
        if (ok != entries.size()) return kFailure;
      } else {
        Unitary4 target;
        if (!bargs.matrix.empty()) {
          if (bargs.sources() != 1)
            throw UsageError("give exactly one target source");
          target = json_io::unitary4_from_json(read_json_file(bargs.matrix));
        } else {
          target = weyl_unitary(bargs.point().first);
        }
        const BGateProgram p = compile_two_b(target);
        if (common.json) {
          emit_json(out, json_io::to_json(p));
        } else {
          out << "b_count " << p.b_count << "\n";
          out << "beta1 " << p.mid.beta1 << "\nbeta2 " << p.mid.beta2 << "\n";
          out << "residual " << p.residual << "\n";
        }
      }
    } else if (*pmw4) {
      const bool euler = alpha || beta || gamma;
      if (euler == !pmw4_matrix.empty())
        throw UsageError("give either --matrix or --alpha/--beta/--gamma");
      Unitary2 u;
      if (euler) {
        if (!alpha || !beta || !gamma)
          throw UsageError("--alpha, --beta and --gamma must all be given");
        u = EulerAngles{*alpha, *beta, *gamma}.matrix();
      } else {
        u = json_io::unitary2_from_json(read_json_file(pmw4_matrix));
      }
      const Pmw4Sequence s = pmw4_compile(u);
      const double resid = phase_align(u, s.product()).residual;
      if (common.json) {
        Json j = json_io::to_json(s);
        const auto pb = s.playback_order();
        j["playback"] = {pb[0], pb[1], pb[2], pb[3]};
        j["residual"] = resid;
        emit_json(out, j);
      } else {
        out << "phases";
        for (double p : s.phases) out << " " << p;
        out << "\nresidual " << resid << "\n";
      }
    } else if (*schedule) {
      if (!static_z.empty()) {
        const auto z = parse_list(static_z, "--static-z");
        if (z.size() != 4) throw UsageError("--static-z needs four values");
        for (int i = 0; i < 4; ++i) sopt.static_z[i] = z[i];
      }
      const double g = common.g();
      const Synthesized s = do_synth(scargs, g);
      const VerificationReport r = verify_controls(s.normalized, s.requested);
      if (!r.passed || !r.compensators)
        throw Failure("synthesized controls failed verification (D=" +
                      std::to_string(r.distance) + ")");
      const FrameCorrection fr = frame_corrections(
          s.normalized.delta, s.normalized.delta, s.normalized.tau);
      const GateSchedule gs = schedule_gate(s.physical, *r.compensators, fr,
                                            sopt);
      if (common.json) {
        Json j = json_io::to_json(gs);
        j["physical"] = json_io::to_json(s.physical);
        emit_json(out, j);
      } else {
        print_physical(out, s.normalized, s.physical);
        auto peak = [](const SampledWaveform& w) {
          double m = 0;
          for (const Complex& z : w.samples) m = std::max(m, std::abs(z));
          return m;
        };
        for (auto [name, w] :
             {std::pair{"xy1", &gs.xy1}, std::pair{"xy2", &gs.xy2},
              std::pair{"z1", &gs.z1}, std::pair{"zc", &gs.zc},
              std::pair{"z2", &gs.z2}})
          out << name << " samples " << w->samples.size() << " peak "
              << peak(*w) << "\n";
        for (int q = 0; q < 2; ++q) {
          out << "q" << q + 1 << " pre";
          for (double p : gs.prologue[q].phases) out << " " << p;
          out << " post";
          for (double p : gs.epilogue[q].phases) out << " " << p;
          out << "\n";
        }
      }
    } else if (*xeb) {
      xcfg.seed = *xeb_seed;
      for (double d : parse_list(depths_s, "--depths")) {
        if (d != std::floor(d)) throw UsageError("--depths must be integers");
        xcfg.depths.push_back(static_cast<int>(d));
      }
      if (!xeb_matrix.empty())
        xcfg.two_qubit_gate =
            json_io::unitary4_from_json(read_json_file(xeb_matrix));
      else
        xcfg.two_qubit_gate = weyl_unitary(find_named_gate(xeb_gate).point);
      const XebResult r = xeb_run(xcfg);
      if (common.json) {
        emit_json(out, json_io::to_json(r));
      } else {
        out << "depth,fidelity\n";
        for (std::size_t i = 0; i < r.depths.size(); ++i)
          out << r.depths[i] << "," << r.per_depth_fidelity[i] << "\n";
      }
      if (!r.fit_ok) {
        err << "error: fit failed: " << r.fit_message << "\n";
        return kFailure;
      }
    } else if (*emap) {
      eopt.g_mhz = common.g();
      const ErrorMapResult r = b_chamber_error_map(
          chamber_sweep_points(), enoise, eshots, *emap_seed, eopt);
      if (common.json) {
        emit_json(out, json_io::to_json(r));
      } else {
        out << "a,b,c,error\n";
        for (const auto& e : r.entries)
          out << e.point.a << "," << e.point.b << "," << e.point.c << ","
              << e.mean_error << "\n";
      }
    } else if (*wstate) {
      std::vector<double> ph;
      if (!wphases.empty()) ph = parse_list(wphases, "--phases");
      const CircuitSpec c = build_w_circuit(wn, ph);
      const Statevector s = simulate_circuit(c, Statevector::zero(wn));
      const double f = state_fidelity(s, w_target(wn, ph));
      if (common.json) {
        emit_json(out, Json{{"circuit", json_io::to_json(c)},
                            {"fidelity", f},
                            {"state", json_io::to_json(s)}});
      } else {
        out << "two_qubit_gates " << c.two_qubit_count() << "\n";
        out << "fidelity " << f << "\n";
      }
    } else if (*dicke) {
      if (dk > dn) throw UsageError("--k must not exceed --n");
      const Statevector s = dicke_target(dn, dk);
      if (common.json) {
        emit_json(out, json_io::to_json(s));
      } else {
        for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i) {
          if (std::abs(s.amplitudes(i)) == 0) continue;
          std::string bits;
          for (int q = 0; q < dn; ++q)
            bits += (i >> (dn - 1 - q)) & 1 ? '1' : '0';
          out << bits << " " << s.amplitudes(i).real() << "\n";
        }
      }
    } else if (*device) {
      const CapacitanceNetwork n =
          json_io::network_from_json(read_json_file(caps));
      const DeviceDerived d = derive(n);
      std::optional<double> zero;
      try {
        CouplingParams cp;
        cp.g12_mhz = d.g_q1q2_mhz;
        cp.g1c_mhz = d.g_q1c_mhz;
        cp.g2c_mhz = d.g_q2c_mhz;
        cp.w1_ghz = d.omega_ghz[0];
        cp.w2_ghz = d.omega_ghz[2];
        zero = zero_coupling_frequency(cp);
      } catch (const DomainError&) {
      }
      if (common.json) {
        Json j = json_io::to_json(d);
        j["zero_coupling_ghz"] = zero ? Json(*zero) : Json(nullptr);
        emit_json(out, j);
      } else {
        out << "ec_mhz " << d.ec_mhz[0] << " " << d.ec_mhz[1] << " "
            << d.ec_mhz[2] << "\n";
        out << "omega_ghz " << d.omega_ghz[0] << " " << d.omega_ghz[1] << " "
            << d.omega_ghz[2] << "\n";
        out << "g_mhz q1c " << d.g_q1c_mhz << " q2c " << d.g_q2c_mhz
            << " q1q2 " << d.g_q1q2_mhz << "\n";
        if (zero) out << "zero_coupling_ghz " << *zero << "\n";
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << one_line(e.what()) << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << one_line(e.what()) << "\n";
    return kUsage;
  } catch (const Failure& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kFailure;
  } catch (const SolverError& e) {
    err << "error: " << one_line(e.what()) << " (best residual "
        << e.best_residual() << ")\n";
    return kFailure;
  } catch (const CompileError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace ashn::cli

// End-to-end acceptance checks. Each numbered check prints a single
// PASS/FAIL line; the exit status is the number of failures. Run with a
// number to execute one check, or with no arguments for all of them.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "qhe/sweep.hpp"
#include "test_util.hpp"

using namespace qhe;
using namespace qhe::testing;

namespace {

struct Check {
    bool ok{true};
    std::string detail;

    void require(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            detail = msg;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

CycleConfig lz_cfg(double ratio, double tau, long n = kDefaultSteps) {
    CycleConfig c;
    c.ratio = ratio;
    c.tau = tau;
    c.n = n;
    return c;
}

const std::vector<double> kTauGrid{0.5, 1.0, 1.5, 3, 5, 10};
const std::vector<double> kRatioGrid{0.4, 0.6};

std::vector<double> geometric_ladder(double lo, double hi, int count) {
    std::vector<double> out;
    for (int i = 0; i < count; ++i)
        out.push_back(lo * std::pow(hi / lo, double(i) / (count - 1)));
    return out;
}

// 1. Zero-work boundary: F = 1 at both ends of each ratio window and
//    W(F_boundary) = 0 across the interior, in under a second.
Check check_zero_work_boundary() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const double beta1 = 0.01, eps1 = 1.0;
    for (double rb : {0.25, 0.5, 0.75, 0.9}) {
        const double beta2 = beta1 / rb;
        c.require(std::abs(zero_work_fidelity(eps1, rb * eps1, beta1, beta2) -
                           1.0) < 1e-9,
                  "F != 1 at ratio = beta1/beta2 = " + std::to_string(rb));
        c.require(std::abs(zero_work_fidelity(eps1, eps1, beta1, beta2) - 1.0) <
                      1e-9,
                  "F != 1 at ratio = 1");
        for (int i = 1; i < 100; ++i) {
            const double ratio = rb + (1.0 - rb) * i / 100.0;
            const double f0 =
                zero_work_fidelity(eps1, ratio * eps1, beta1, beta2);
            const double w = work_total(eps1, ratio * eps1, beta1, beta2, f0);
            c.require(std::abs(w) < 1e-12,
                      "residual work " + std::to_string(w) + " at ratio " +
                          std::to_string(ratio));
        }
    }
    c.require(seconds_since(t0) < 1.0, "runtime exceeded 1 s");
    return c;
}

// 2. Grid-doubling convergence of the cycle fidelities.
Check check_fidelity_convergence() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    for (double tau : kTauGrid)
        for (double ratio : kRatioGrid) {
            const auto [a1, a2] = fidelity_pair(lz_cfg(ratio, tau, 10001));
            const auto [b1, b2] = fidelity_pair(lz_cfg(ratio, tau, 20001));
            c.require(std::abs(a1 - b1) < 1e-4 && std::abs(a2 - b2) < 1e-4,
                      "fidelity drift at tau=" + std::to_string(tau) +
                          " ratio=" + std::to_string(ratio));
        }
    c.require(seconds_since(t0) < 30.0, "runtime exceeded 30 s");
    return c;
}

// 3. Forward/backward fidelity symmetry of the linear ramp.
Check check_time_reversal() {
    Check c;
    for (double tau : kTauGrid)
        for (double ratio : kRatioGrid) {
            const auto [f1, f2] = fidelity_pair(lz_cfg(ratio, tau));
            c.require(std::abs(f1 - f2) < 1e-6,
                      "|f1-f2| = " + std::to_string(std::abs(f1 - f2)) +
                          " at tau=" + std::to_string(tau) +
                          " ratio=" + std::to_string(ratio));
        }
    return c;
}

// 4. Product-formula propagator vs the adaptive integrator.
Check check_oracle_equivalence() {
    Check c;
    std::vector<DriveProtocol> drives;
    for (int i = 0; i < 5; ++i) {
        const double ratio = uniform(0.35, 0.95);
        const double tau = uniform(0.5, 3.0);
        const auto [z1, z2] = lz_endpoints(1.0, ratio, 0.1);
        drives.push_back(lz_drive({z1, z2, 0.1, tau}));
    }
    const ZProtocolKind kinds[] = {ZProtocolKind::Quintic,
                                   ZProtocolKind::SineSquared,
                                   ZProtocolKind::Sextic};
    for (int i = 0; i < 5; ++i) {
        const double ratio = uniform(0.4, 0.9);
        const double tau = uniform(2.5, 4.0);
        const double a = std::exp(uniform(std::log(0.3), std::log(4.0)));
        const auto [z1, z2] = lz_endpoints(1.0, ratio, 0.1);
        drives.push_back(
            invariant_drive({{z1, z2, 0.1, tau}, a, kinds[i % 3]}));
    }
    for (size_t i = 0; i < drives.size(); ++i) {
        const Mat2 u = evolve(drives[i], 10001).u;
        const Mat2 v = evolve_oracle(drives[i], 1e-10);
        const double d = u.max_diff(v);
        c.require(d < 1e-6, "drive " + std::to_string(i) + ": max diff " +
                                std::to_string(d));
    }
    return c;
}

// 5. Slow driving recovers the quasi-static work and efficiency.
Check check_quasi_static_limit() {
    Check c;
    for (double ratio : kRatioGrid) {
        const CycleResult r = run_cycle(lz_cfg(ratio, 50.0, 50001));
        c.require(r.eta.has_value() &&
                      std::abs(*r.eta - (1.0 - ratio)) < 0.01,
                  "eta off at ratio " + std::to_string(ratio));
        c.require(std::abs(r.w / r.w_qs - 1.0) < 0.01,
                  "W/W_qs off at ratio " + std::to_string(ratio));
    }
    return c;
}

// 6. The trace-defined heats arbitrate between the two closed forms.
Check check_heat_form_arbiter() {
    Check c;
    for (int i = 0; i < 200; ++i) {
        const double eps1 = uniform(0.5, 2.0);
        const double ratio = uniform(0.3, 1.0);
        const double x = uniform(0.2, 0.9) * ratio * eps1;
        const double b1 = uniform(0.005, 0.05);
        const BathPair baths{b1, b1 + uniform(0.005, 0.1)};
        const auto [z1, z2] = lz_endpoints(eps1, ratio, x);
        const DriveProtocol d = lz_drive({z1, z2, x, uniform(0.3, 5.0)});

        const auto es1 = eigensystem(d.at(0));
        const auto es2 = eigensystem(d.at(d.tau));
        const double f2 =
            fidelity(es2.ground, (evolve(d).u * es1.ground).normalized());
        const double f1 = fidelity(
            es1.ground, (evolve(reverse(d)).u * es2.ground).normalized());
        const auto [q1c, q2c] =
            heats_closed_form(es1.epsilon, es2.epsilon, baths.beta1,
                              baths.beta2, f1, f2,
                              HeatForm::DerivationConsistent);
        const auto [q1t, q2t] = heats_trace_oracle(d, baths);
        c.require(std::abs(q1c - q1t) < 1e-9 && std::abs(q2c - q2t) < 1e-9,
                  "closed form vs trace: dq1 = " + std::to_string(q1c - q1t) +
                      ", dq2 = " + std::to_string(q2c - q2t));
        if (!c.ok) return c;
    }
    // the alternative pairing of the fidelity terms must be measurably
    // different on at least one engine configuration
    const CycleResult eng = run_cycle(lz_cfg(0.4, 1.0));
    if (eng.regime != Regime::Engine) {
        c.require(false, "reference point is not an engine");
        return c;
    }
    const auto [p1, p2] =
        heats_closed_form(1.0, 0.4, 0.01, 0.04, eng.f1, eng.f2,
                          HeatForm::AsPrinted);
    const double rel = std::abs(p1 - eng.q1) / std::abs(eng.q1);
    c.require(rel > 1e-3,
              "alternative heat pairing indistinguishable (rel " +
                  std::to_string(rel) + ")");
    return c;
}

// 7. The constructed shortcut drive honors its defining equations.
Check check_invariant_construction() {
    Check c;
    const ZProtocolKind kinds[] = {ZProtocolKind::Quintic,
                                   ZProtocolKind::SineSquared,
                                   ZProtocolKind::Sextic};
    for (int trial = 0; trial < 50 && c.ok; ++trial) {
        const double ratio = uniform(0.4, 0.95);
        const double tau = uniform(2.5, 4.0);
        const double a = std::exp(uniform(std::log(0.3), std::log(4.0)));
        const auto [z1, z2] = lz_endpoints(1.0, ratio, 0.1);
        const InvariantParams p{{z1, z2, 0.1, tau}, a, kinds[trial % 3]};
        const DriveProtocol d = invariant_drive(p);
        const auto zfun = lz_Z_from_invariant(p);
        const std::string where = " (trial " + std::to_string(trial) + ")";

        c.require(std::abs(zfun(0.0) - z1) < 1e-9 &&
                      std::abs(zfun(tau) - z2) < 1e-9,
                  "Z endpoint drift" + where);
        c.require(
            commutator_norm(to_matrix(d.at(0)), to_matrix({0.1, 0, z1})) <
                    1e-10 &&
                commutator_norm(to_matrix(d.at(tau)),
                                to_matrix({0.1, 0, z2})) < 1e-10,
            "endpoint commutator" + where);

        const int npts = 10000;
        const double h = tau / npts;
        double ode_res = 0, norm_res = 0;
        for (int i = 1; i < npts; ++i) {
            const double t = i * h;
            const PauliVector v = d.at(t);
            const PauliVector vp = d.at(t + h);
            const PauliVector vm = d.at(t - h);
            const double zt = zfun(t);
            ode_res = std::max(
                ode_res, std::abs((vp.x - vm.x) / (2 * h) + 2 * v.y * zt));
            ode_res = std::max(ode_res,
                               std::abs((vp.y - vm.y) / (2 * h) -
                                        (2 * v.x * zt - 2 * v.z * 0.1)));
            ode_res = std::max(
                ode_res, std::abs((vp.z - vm.z) / (2 * h) - 2 * v.y * 0.1));
            norm_res = std::max(
                norm_res,
                std::abs(v.x * v.x + v.y * v.y + v.z * v.z - a * a));
        }
        c.require(ode_res < 1e-6,
                  "ODE residual " + std::to_string(ode_res) + where);
        c.require(norm_res < 1e-10,
                  "norm residual " + std::to_string(norm_res) + where);
    }
    return c;
}

// 8. Shortcut efficacy at tau = 1, ratio = 0.4 along the A-ladder, for
//    all three z-protocols.
Check check_sta_trend() {
    Check c;
    const CycleResult lz = run_cycle(lz_cfg(0.4, 1.0));
    const std::vector<double> ladder = geometric_ladder(0.25, 16.0, 13);
    for (ZProtocolKind k : {ZProtocolKind::Quintic, ZProtocolKind::SineSquared,
                            ZProtocolKind::Sextic}) {
        std::vector<double> f1s;
        for (double a : ladder) {
            CycleConfig cfg = lz_cfg(0.4, 1.0);
            cfg.drive = DriveKind::Invariant;
            cfg.a_const = a;
            cfg.protocol = k;
            try {
                const CycleResult r = run_cycle(cfg);
                f1s.push_back(r.f1);
                if (a == ladder.back())
                    c.require(r.eta.has_value() &&
                                  std::abs(*r.eta - 0.6) < 0.01,
                              "top-of-ladder eta off");
            } catch (const Error& e) {
                c.require(false, std::string("A = ") + std::to_string(a) +
                                     ": " + e.what());
                return c;
            }
        }
        bool beats_lz = false;
        for (size_t i = 0; i < f1s.size(); ++i) {
            if (f1s[i] > lz.f1) beats_lz = true;
            if (i > 0)
                c.require(f1s[i] >= f1s[i - 1] - 1e-6,
                          "F1 decreased along the ladder at index " +
                              std::to_string(i));
        }
        c.require(beats_lz, "no ladder point beats the linear ramp");
    }
    return c;
}

// 9. Quadrature costs against their closed forms.
Check check_cost_identities() {
    Check c;
    for (double ratio : {0.4, 0.7}) {
        for (double tau : {0.5, 3.0}) {
            const auto [z1, z2] = lz_endpoints(1.0, ratio, 0.1);
            const LZParams p{z1, z2, 0.1, tau};
            const double dz = z2 - z1;
            const double lz_closed =
                2 * tau * (z1 * z1 + z1 * dz + dz * dz / 3 + 0.01);
            const double lz_quad = cost(lz_drive(p));
            c.require(std::abs(lz_quad / lz_closed - 1) < 1e-8,
                      "LZ cost mismatch at ratio " + std::to_string(ratio));

            if (tau < 2.5) continue;  // shortcut needs the longer duration
            for (double a : {0.5, 2.0}) {
                const InvariantParams ip{p, a, ZProtocolKind::Quintic};
                const double inv_quad = cost(invariant_drive(ip));
                c.require(std::abs(inv_quad / (2 * a * a * tau) - 1) < 1e-8,
                          "invariant cost mismatch at A " + std::to_string(a));
                const double closed =
                    a * a / (z1 * z1 + z1 * dz + dz * dz / 3 + 0.01);
                c.require(std::abs(cost_ratio(ip) - closed) < 1e-10,
                          "cost_ratio mismatch at A " + std::to_string(a));
            }
        }
    }
    return c;
}

// 10. Every produced sweep row is thermodynamically consistent.
Check check_sweep_sanity() {
    Check c;
    for (const char* name : {"fig3", "fig5", "appendixB"}) {
        const SweepOutcome out = run_sweep(preset(name));
        for (const auto& row : out.rows) {
            if (!row.has_result) continue;
            const CycleResult& r = row.result;
            const std::string where = std::string(" in ") + name;
            c.require(std::abs(r.w - (r.q1 + r.q2)) < 1e-12,
                      "W != Q1+Q2" + where);
            c.require(r.f1 >= 0 && r.f1 <= 1 && r.f2 >= 0 && r.f2 <= 1,
                      "fidelity out of range" + where);
            c.require(r.clausius, "Clausius violated" + where);
            c.require(r.regime == classify(r.q1, r.q2, r.w),
                      "regime label mismatch" + where);
            if (!c.ok) return c;
        }
    }
    return c;
}

// 11. Byte-identical CSV across repeats and worker counts.
Check check_determinism() {
    Check c;
    for (const char* name : {"fig2", "fig5"}) {
        SweepSpec s = preset(name);
        s.workers = 1;
        const std::string first = run_sweep(s).csv;
        c.require(run_sweep(s).csv == first,
                  std::string(name) + ": repeat run differs");
        s.workers = 8;
        c.require(run_sweep(s).csv == first,
                  std::string(name) + ": worker count changes output");
    }
    return c;
}

struct Entry {
    const char* name;
    Check (*fn)();
};

const Entry kEntries[] = {
    {"zero-work boundary", check_zero_work_boundary},
    {"fidelity grid convergence", check_fidelity_convergence},
    {"time-reversal fidelity symmetry", check_time_reversal},
    {"propagator oracle equivalence", check_oracle_equivalence},
    {"quasi-static limit", check_quasi_static_limit},
    {"heat-form arbiter", check_heat_form_arbiter},
    {"invariant construction", check_invariant_construction},
    {"shortcut efficacy trend", check_sta_trend},
    {"cost identities", check_cost_identities},
    {"sweep thermodynamic sanity", check_sweep_sanity},
    {"output determinism", check_determinism},
};

int run_entry(int idx) {
    const Entry& e = kEntries[idx - 1];
    Check c;
    try {
        c = e.fn();
    } catch (const std::exception& ex) {
        c.ok = false;
        c.detail = std::string("unexpected exception: ") + ex.what();
    }
    std::printf("%2d %-34s %s%s%s\n", idx, e.name, c.ok ? "PASS" : "FAIL",
                c.detail.empty() ? "" : " - ", c.detail.c_str());
    return c.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    constexpr int kCount = static_cast<int>(std::size(kEntries));
    if (argc > 1) {
        const int idx = std::atoi(argv[1]);
        if (idx < 1 || idx > kCount) {
            std::fprintf(stderr, "usage: %s [1..%d]\n", argv[0], kCount);
            return 64;
        }
        return run_entry(idx);
    }
    int failures = 0;
    for (int i = 1; i <= kCount; ++i) failures += run_entry(i);
    return failures;
}

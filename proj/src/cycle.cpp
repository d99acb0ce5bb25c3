#include "qhe/cycle.hpp"

#include <cmath>

namespace qhe {

namespace {

struct BuiltCycle {
    LZParams lz;
    DriveProtocol drive;
    std::optional<InvariantParams> inv;
};

BuiltCycle build(const CycleConfig& cfg) {
    if (!(cfg.ratio > 0 && cfg.ratio <= 1))
        throw ConfigParse("ratio must be in (0, 1]");
    const auto [z1, z2] = lz_endpoints(cfg.eps1, cfg.ratio, cfg.x);
    const LZParams lz{z1, z2, cfg.x, cfg.tau};
    if (cfg.drive == DriveKind::LZ) return {lz, lz_drive(lz), std::nullopt};
    const InvariantParams inv{lz, cfg.a_const, cfg.protocol};
    return {lz, invariant_drive(inv), inv};
}

} // namespace

CycleResult run_cycle(const CycleConfig& cfg) {
    const BuiltCycle bc = build(cfg);
    const double eps2 = cfg.ratio * cfg.eps1;

    const UnitaryMatrix u_egc = evolve(bc.drive, cfg.n).u;
    const UnitaryMatrix u_ege = evolve(reverse(bc.drive), cfg.n).u;

    const EigenSystem eig1 = eigensystem({cfg.x, 0, bc.lz.z1});
    const EigenSystem eig2 = eigensystem({cfg.x, 0, bc.lz.z2});

    CycleResult r;
    r.f2 = fidelity(eig2.ground, (u_egc * eig1.ground).normalized());
    r.f1 = fidelity(eig1.ground, (u_ege * eig2.ground).normalized());

    std::tie(r.q1, r.q2) =
        heats_closed_form(cfg.eps1, eps2, cfg.baths.beta1, cfg.baths.beta2,
                          r.f1, r.f2, cfg.heat_form);
    r.w = r.q1 + r.q2;
    if (std::abs(r.q1) > 1e-12) r.eta = r.w / r.q1;
    std::tie(r.w_qs, r.eta_qs) =
        quasi_static(cfg.eps1, eps2, cfg.baths.beta1, cfg.baths.beta2);
    r.cost = cost(bc.drive, cfg.n);
    if (bc.inv) r.cost_ratio = cost_ratio(*bc.inv);
    r.regime = classify(r.q1, r.q2, r.w);
    r.clausius = clausius_ok(r.q1, r.q2, cfg.baths.beta1, cfg.baths.beta2);
    return r;
}

std::pair<double, double> fidelity_pair(const CycleConfig& cfg) {
    const BuiltCycle bc = build(cfg);
    const UnitaryMatrix u_egc = evolve(bc.drive, cfg.n).u;
    const UnitaryMatrix u_ege = evolve(reverse(bc.drive), cfg.n).u;
    const EigenSystem eig1 = eigensystem({cfg.x, 0, bc.lz.z1});
    const EigenSystem eig2 = eigensystem({cfg.x, 0, bc.lz.z2});
    const double f2 = fidelity(eig2.ground, (u_egc * eig1.ground).normalized());
    const double f1 = fidelity(eig1.ground, (u_ege * eig2.ground).normalized());
    return {f1, f2};
}

} // namespace qhe

#include "qhe/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace qhe {

const char* to_string(ZProtocolKind k) {
    switch (k) {
        case ZProtocolKind::Quintic: return "quintic";
        case ZProtocolKind::SineSquared: return "sine";
        case ZProtocolKind::Sextic: return "sextic";
    }
    return "?";
}

ZProtocolKind protocol_from_string(const std::string& s) {
    if (s == "quintic") return ZProtocolKind::Quintic;
    if (s == "sine") return ZProtocolKind::SineSquared;
    if (s == "sextic") return ZProtocolKind::Sextic;
    throw ConfigParse("unknown protocol '" + s + "'");
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s, int line) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigParse("line " + std::to_string(line) +
                          ": bad number '" + s + "'");
    }
}

// Comma-separated values; each item is a scalar or a lo:hi:count range.
std::vector<double> parse_list(const std::string& s, int line) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const auto c1 = item.find(':');
        if (c1 == std::string::npos) {
            out.push_back(parse_double(item, line));
            continue;
        }
        const auto c2 = item.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw ConfigParse("line " + std::to_string(line) +
                              ": range needs lo:hi:count");
        const double lo = parse_double(item.substr(0, c1), line);
        const double hi = parse_double(item.substr(c1 + 1, c2 - c1 - 1), line);
        const long count = std::lround(parse_double(item.substr(c2 + 1), line));
        if (count < 2)
            throw ConfigParse("line " + std::to_string(line) +
                              ": range count must be >= 2");
        for (long i = 0; i < count; ++i)
            out.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                   static_cast<double>(count - 1));
    }
    return out;
}

std::vector<double> geometric_ladder(double lo, double hi, int count) {
    std::vector<double> out;
    for (int i = 0; i < count; ++i)
        out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) /
                                                 static_cast<double>(count - 1)));
    return out;
}

void validate_spec(const SweepSpec& spec) {
    if (spec.boundary_mode) {
        if (spec.beta_ratios.empty())
            throw ConfigParse("boundary sweep needs beta_ratio values");
        for (double r : spec.beta_ratios)
            if (!(r > 0 && r < 1))
                throw ConfigParse("beta_ratio must be in (0, 1)");
    } else {
        if (spec.taus.empty() && spec.ratios.empty() && spec.a_values.empty() &&
            spec.protocols.empty())
            throw ConfigParse("no sweep axis given");
        if (spec.taus.empty())
            throw ConfigParse("a tau axis (or scalar tau) is required");
        for (double t : spec.taus)
            if (!(t > 0)) throw ConfigParse("tau must be positive");
    }
    for (double r : spec.ratios)
        if (!(r > 0 && r <= 1))
            throw ConfigParse("ratio must be in (0, 1], got " + std::to_string(r));
    if (!(spec.base.baths.beta1 > 0 && spec.base.baths.beta2 > 0 &&
          spec.base.baths.beta1 < spec.base.baths.beta2) &&
        !spec.boundary_mode)
        throw ConfigParse("baths require 0 < beta1 < beta2");
    if (spec.base.n < 2) throw ConfigParse("n must be >= 2");
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("QHE_OTTO_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 16u));
}

// %.12g, locale-independent (snprintf with "C" numeric conventions).
std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void run_one(SweepRow& row) {
    if (row.boundary) {
        const CycleConfig& c = row.cfg;
        const double eps2 = c.ratio * c.eps1;
        const double f = zero_work_fidelity(c.eps1, eps2, c.baths.beta1,
                                            c.baths.beta2);
        CycleResult r;
        r.f1 = r.f2 = f;
        std::tie(r.q1, r.q2) = heats_closed_form(
            c.eps1, eps2, c.baths.beta1, c.baths.beta2, f, f, c.heat_form);
        r.w = r.q1 + r.q2;
        if (std::abs(r.q1) > 1e-12) r.eta = r.w / r.q1;
        std::tie(r.w_qs, r.eta_qs) =
            quasi_static(c.eps1, eps2, c.baths.beta1, c.baths.beta2);
        r.regime = classify(r.q1, r.q2, r.w);
        r.clausius = clausius_ok(r.q1, r.q2, c.baths.beta1, c.baths.beta2);
        row.result = r;
        row.has_result = true;
        return;
    }
    try {
        row.result = run_cycle(row.cfg);
        row.has_result = true;
    } catch (const Error& e) {
        row.skipped_reason = e.what();
    }
}

} // namespace

std::string csv_header() {
    return "tau,ratio,x,eps1,beta1,beta2,drive,protocol,A,n,f1,f2,q1,q2,w,eta,"
           "w_qs,eta_qs,w_over_wqs,cost,cost_ratio,regime,clausius,"
           "skipped_reason";
}

std::string format_row(const SweepRow& row) {
    const CycleConfig& c = row.cfg;
    std::string s;
    const auto add = [&s](const std::string& v) {
        if (!s.empty()) s += ',';
        s += v;
    };
    add(row.boundary ? "" : fmt(c.tau));
    add(fmt(c.ratio));
    add(fmt(c.x));
    add(fmt(c.eps1));
    add(fmt(c.baths.beta1));
    add(fmt(c.baths.beta2));
    add(row.boundary ? "boundary"
                     : (c.drive == DriveKind::LZ ? "lz" : "inv"));
    add(!row.boundary && c.drive == DriveKind::Invariant
            ? to_string(c.protocol)
            : "");
    add(!row.boundary && c.drive == DriveKind::Invariant ? fmt(c.a_const) : "");
    add(row.boundary ? "" : std::to_string(c.n));
    if (row.has_result) {
        const CycleResult& r = row.result;
        add(fmt(r.f1));
        add(fmt(r.f2));
        add(fmt(r.q1));
        add(fmt(r.q2));
        add(fmt(r.w));
        add(r.eta ? fmt(*r.eta) : "");
        add(fmt(r.w_qs));
        add(fmt(r.eta_qs));
        add(r.w_qs != 0 ? fmt(r.w / r.w_qs) : "");
        add(row.boundary ? "" : fmt(r.cost));
        add(r.cost_ratio ? fmt(*r.cost_ratio) : "");
        add(to_string(r.regime));
        add(r.clausius ? "true" : "false");
        add("");
    } else {
        for (int i = 0; i < 13; ++i) add("");
        add(row.skipped_reason);
    }
    return s;
}

SweepSpec parse_config(const std::string& text) {
    SweepSpec spec;
    bool from_preset = false;
    std::stringstream ss(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(ss, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigParse("line " + std::to_string(line_no) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty())
            throw ConfigParse("line " + std::to_string(line_no) +
                              ": empty value for '" + key + "'");

        if (key == "preset") {
            spec = preset(value);
            from_preset = true;
        } else if (key == "tau") {
            spec.taus = parse_list(value, line_no);
        } else if (key == "ratio") {
            spec.ratios = parse_list(value, line_no);
        } else if (key == "A" || key == "a") {
            spec.a_values = parse_list(value, line_no);
        } else if (key == "protocol") {
            spec.protocols.clear();
            std::stringstream ps(value);
            std::string item;
            while (std::getline(ps, item, ','))
                spec.protocols.push_back(protocol_from_string(trim(item)));
        } else if (key == "beta_ratio") {
            spec.beta_ratios = parse_list(value, line_no);
            spec.boundary_mode = true;
        } else if (key == "drive") {
            if (value == "lz") spec.base.drive = DriveKind::LZ;
            else if (value == "inv") spec.base.drive = DriveKind::Invariant;
            else
                throw ConfigParse("line " + std::to_string(line_no) +
                                  ": drive must be lz or inv");
        } else if (key == "heat_form") {
            if (value == "derived")
                spec.base.heat_form = HeatForm::DerivationConsistent;
            else if (value == "printed") spec.base.heat_form = HeatForm::AsPrinted;
            else
                throw ConfigParse("line " + std::to_string(line_no) +
                                  ": heat_form must be derived or printed");
        } else if (key == "eps1") {
            spec.base.eps1 = parse_double(value, line_no);
        } else if (key == "beta1") {
            spec.base.baths.beta1 = parse_double(value, line_no);
        } else if (key == "beta2") {
            spec.base.baths.beta2 = parse_double(value, line_no);
        } else if (key == "x") {
            spec.base.x = parse_double(value, line_no);
        } else if (key == "n") {
            spec.base.n = std::lround(parse_double(value, line_no));
        } else if (key == "out") {
            spec.out = value;
        } else if (key == "workers") {
            spec.workers = std::lround(parse_double(value, line_no));
        } else {
            throw ConfigParse("line " + std::to_string(line_no) +
                              ": unknown key '" + key + "'");
        }
    }
    if (!from_preset && spec.ratios.empty() && !spec.boundary_mode)
        spec.ratios = {0.4};
    validate_spec(spec);
    return spec;
}

SweepSpec preset(const std::string& name) {
    SweepSpec spec;
    if (name == "fig2") {
        spec.boundary_mode = true;
        spec.beta_ratios = {0.25, 0.5, 0.75, 0.9};
        return spec;
    }
    if (name == "fig3") {
        spec.taus = {0.5, 0.75, 1, 1.5, 2, 3, 5, 7, 10, 15, 20, 30, 50};
        spec.ratios = {0.4, 0.6};
        return spec;
    }
    const std::vector<double> ladder = geometric_ladder(0.25, 16.0, 13);
    if (name == "fig4" || name == "fig6") {
        spec.base.drive = DriveKind::Invariant;
        spec.taus = {0.5, 1.0, 1.5};
        spec.ratios = {0.4, 0.6};
        spec.a_values = ladder;
        spec.protocols = {ZProtocolKind::Quintic};
        return spec;
    }
    if (name == "fig5") {
        spec.base.drive = DriveKind::Invariant;
        spec.taus = {1.0};
        spec.ratios = {0.4, 0.6};
        spec.a_values = ladder;
        spec.protocols = {ZProtocolKind::Quintic};
        return spec;
    }
    if (name == "appendixB") {
        spec.base.drive = DriveKind::Invariant;
        spec.taus = {1.0};
        spec.ratios = {0.4, 0.6};
        spec.a_values = ladder;
        spec.protocols = {ZProtocolKind::SineSquared, ZProtocolKind::Sextic};
        return spec;
    }
    throw ConfigParse("unknown preset '" + name + "'");
}

SweepOutcome run_sweep(const SweepSpec& spec_in) {
    SweepSpec spec = spec_in;
    validate_spec(spec);

    std::vector<SweepRow> rows;
    if (spec.boundary_mode) {
        for (double rb : spec.beta_ratios) {
            std::vector<double> ratios = spec.ratios;
            if (ratios.empty()) {
                for (int i = 0; i <= 100; ++i)
                    ratios.push_back(rb + (1.0 - rb) * i / 100.0);
            }
            for (double ratio : ratios) {
                SweepRow row;
                row.boundary = true;
                row.cfg = spec.base;
                row.cfg.ratio = ratio;
                row.cfg.baths.beta2 = spec.base.baths.beta1 / rb;
                rows.push_back(row);
            }
        }
    } else {
        const bool inv = spec.base.drive == DriveKind::Invariant;
        std::vector<double> ratios =
            spec.ratios.empty() ? std::vector<double>{0.4} : spec.ratios;
        std::vector<double> a_values =
            inv ? (spec.a_values.empty() ? std::vector<double>{spec.base.a_const}
                                         : spec.a_values)
                : std::vector<double>{spec.base.a_const};
        std::vector<ZProtocolKind> kinds =
            inv ? (spec.protocols.empty()
                       ? std::vector<ZProtocolKind>{spec.base.protocol}
                       : spec.protocols)
                : std::vector<ZProtocolKind>{spec.base.protocol};
        // lexicographic order: tau, ratio, A, protocol
        for (double tau : spec.taus)
            for (double ratio : ratios)
                for (double a : a_values)
                    for (ZProtocolKind k : kinds) {
                        SweepRow row;
                        row.cfg = spec.base;
                        row.cfg.tau = tau;
                        row.cfg.ratio = ratio;
                        row.cfg.a_const = a;
                        row.cfg.protocol = k;
                        rows.push_back(row);
                    }
    }

    const int workers =
        std::min<long>(resolve_workers(spec.workers), rows.size());
    if (workers <= 1) {
        for (auto& row : rows) run_one(row);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&rows, &next] {
                for (size_t i = next.fetch_add(1); i < rows.size();
                     i = next.fetch_add(1))
                    run_one(rows[i]);
            });
        for (auto& th : pool) th.join();
    }

    SweepOutcome out;
    out.total_rows = static_cast<long>(rows.size());
    std::string csv = csv_header();
    csv += '\n';
    for (const auto& row : rows) {
        if (!row.has_result) ++out.skipped_rows;
        csv += format_row(row);
        csv += '\n';
    }
    out.csv = std::move(csv);
    out.exit_code = out.skipped_rows > 0 ? 2 : 0;
    out.rows = std::move(rows);

    if (!spec.out.empty()) {
        std::ofstream f(spec.out, std::ios::binary);
        if (!f) throw IoFailure("cannot open '" + spec.out + "' for writing");
        f << out.csv;
        if (!f) throw IoFailure("write failed for '" + spec.out + "'");
    }
    return out;
}

} // namespace qhe

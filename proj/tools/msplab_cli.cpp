#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "msplab/cache.hpp"
#include "msplab/gw0.hpp"
#include "msplab/level0.hpp"
#include "msplab/level1.hpp"
#include "msplab/membership.hpp"
#include "msplab/msp.hpp"
#include "msplab/suite.hpp"
#include "msplab/zz.hpp"

using namespace msplab;

namespace {

constexpr int kExitFail = 2;
constexpr int kExitInvalid = 3;

struct InvalidSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Job {
    int k = 6;
    int N = 11;
    int order = 20;
    int zdepth = 0;
    std::string format = "json";
    std::string cache_dir;
};

void validate(const Job& j) {
    if (j.k != 6 && j.k != 8 && j.k != 10) throw InvalidSpec("--k must be 6, 8 or 10");
    if (!is_odd_prime(j.N) || j.N < 7) throw InvalidSpec("--N must be an odd prime >= 7");
    if (j.order < 1 || j.order > 200) throw InvalidSpec("--order must be in 1..200");
    if (j.zdepth < 0) throw InvalidSpec("--zdepth must be >= 0");
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
    return o + "\"";
}

// checks -> stdout in the chosen format; exit code from their status
int emit_checks(const std::vector<CheckResult>& checks, const Job& job) {
    bool ok = true;
    for (const auto& c : checks) ok = ok && c.pass;
    if (job.format == "json") {
        json arr = json::array();
        for (const auto& c : checks) arr.push_back(c.to_json());
        std::cout << arr.dump(1) << "\n";
    } else if (job.format == "csv") {
        std::cout << "check_id,status,order,first_failure\n";
        for (const auto& c : checks)
            std::cout << csv_escape(c.id) << "," << (c.pass ? "PASS" : "FAIL") << "," << c.order << ","
                      << csv_escape(c.first_failure.value_or("")) << "\n";
    } else {
        for (const auto& c : checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << " (through order " << c.order << ")";
            if (c.first_failure) std::cout << " first failure: " << *c.first_failure;
            std::cout << "\n";
        }
    }
    for (const auto& c : checks)
        if (!c.pass) {
            std::cerr << "assertion failed: " << c.id << " at " << c.first_failure.value_or("?") << "\n";
            break;
        }
    return ok ? 0 : kExitFail;
}

void emit_series_table(const std::vector<std::pair<std::string, Series>>& table, const Job& job) {
    if (job.format == "json") {
        json j = json::object();
        for (const auto& [name, s] : table) j[name] = series_json(s);
        std::cout << j.dump(1) << "\n";
    } else if (job.format == "csv") {
        std::cout << "series,d,numerator,denominator\n";
        for (const auto& [name, s] : table)
            for (int d = 0; d <= s.order(); ++d)
                std::cout << name << "," << d << "," << s[d].get_num().get_str() << "," << s[d].get_den().get_str() << "\n";
    } else {
        for (const auto& [name, s] : table) std::cout << name << " = " << to_string(s, 6) << "\n";
    }
}

std::vector<std::pair<std::string, Series>> generator_table(const Generators& g) {
    return {{"I0", g.I0}, {"I11", g.I11}, {"I22", g.I22}, {"J1", g.J1}, {"J2", g.J2}, {"J3", g.J3},
            {"A", g.A},   {"B", g.B},     {"B2", g.B2},   {"B3", g.B3}, {"Y", g.Y}};
}

int cmd_generators(const Job& job) {
    TargetConfig t = target_config(job.k);
    CacheKey key{"ifun", "generators", job.k, 0, job.order, 0};
    std::vector<std::pair<std::string, Series>> table;
    bool hit = false;
    if (!job.cache_dir.empty()) {
        try {
            if (auto e = cache_load(job.cache_dir, key)) {
                for (const auto& [name, v] : e->payload.items()) table.emplace_back(name, series_from_json(v));
                hit = true;
            }
        } catch (const SchemaMismatch& e) {
            std::cerr << "cache: " << e.what() << ", recomputing\n";
        }
    }
    if (!hit) {
        table = generator_table(generators(t, job.order));
        if (!job.cache_dir.empty()) {
            CacheEntry e;
            e.key = key;
            e.payload = json::object();
            for (const auto& [name, s] : table) e.payload[name] = series_json(s);
            cache_store(job.cache_dir, e);
        }
    }
    emit_series_table(table, job);
    return 0;
}

int cmd_gw0(const Job& job) {
    TargetConfig t = target_config(job.k);
    Genus0Report r = genus0_invariants(t, job.order);
    bool agree = r.N_yukawa == r.N_j2;
    if (job.format == "csv") {
        std::cout << "d,numerator,denominator\n";
        for (size_t d = 1; d < r.N_yukawa.size(); ++d)
            std::cout << d << "," << r.N_yukawa[d].get_num().get_str() << "," << r.N_yukawa[d].get_den().get_str() << "\n";
    } else if (job.format == "json") {
        json rows = json::array();
        for (size_t d = 1; d < r.N_yukawa.size(); ++d)
            rows.push_back({{"d", d}, {"N_0d", to_string(r.N_yukawa[d])}, {"N_0d_second_route", to_string(r.N_j2[d])}});
        std::cout << json{{"target", job.k}, {"routes_agree", agree}, {"invariants", rows}}.dump(1) << "\n";
    } else {
        for (size_t d = 1; d < r.N_yukawa.size(); ++d) std::cout << "N_{0," << d << "} = " << to_string(r.N_yukawa[d]) << "\n";
        std::cout << (agree ? "routes agree\n" : "routes DISAGREE\n");
    }
    if (!agree) std::cerr << "assertion failed: gw-genus0/genus0_invariants routes\n";
    return agree ? 0 : kExitFail;
}

std::array<int, 3> parse_triple(const std::string& s) {
    std::array<int, 3> v{};
    std::stringstream ss(s);
    std::string part;
    for (int i = 0; i < 3; ++i) {
        if (!std::getline(ss, part, ',')) throw InvalidSpec("--specialize expects a,i,alpha");
        try {
            v[i] = std::stoi(part);
        } catch (const std::exception&) {
            throw InvalidSpec("--specialize expects integers a,i,alpha");
        }
    }
    return v;
}

int cmd_smatrix(const Job& job, const std::string& spec) {
    TargetConfig t = target_config(job.k);
    if (!spec.empty()) {
        auto [a, i, alpha] = parse_triple(spec);
        if (a < 1 || i < 0 || i > job.N + 3 || alpha < 1 || alpha > job.N)
            throw InvalidSpec("--specialize out of range: a >= 1, 0 <= i <= N+3, 1 <= alpha <= N");
        auto entries = specialize_S_alpha_ring(t, job.N, a, alpha, job.order);
        QuotientRing T = QuotientRing::tring(job.N);
        const SpecializedEntry& e = entries.at(i);
        json coeffs = json::array();
        for (const auto& c : e.coeffs) {
            json v = json::array();
            for (const auto& x : c) v.push_back(to_string(x));
            coeffs.push_back(v);
        }
        if (job.format == "text") {
            for (size_t d = 0; d < e.coeffs.size(); ++d) std::cout << "q^" << d << ": " << T.str(e.coeffs[d]) << "\n";
        } else if (job.format == "csv") {
            std::cout << "d,t_power,numerator,denominator\n";
            for (size_t d = 0; d < e.coeffs.size(); ++d)
                for (size_t p = 0; p < e.coeffs[d].size(); ++p)
                    if (!is_zero(e.coeffs[d][p]))
                        std::cout << d << "," << p << "," << e.coeffs[d][p].get_num().get_str() << ","
                                  << e.coeffs[d][p].get_den().get_str() << "\n";
        } else {
            std::cout << json{{"a", a}, {"i", i}, {"alpha", alpha}, {"degree", e.degree()}, {"ring", T.name()},
                              {"coefficients", coeffs}}
                             .dump(1)
                      << "\n";
        }
        return 0;
    }
    int top = job.zdepth > 0 ? job.zdepth : default_zdepth(job.N, job.order);
    SMMatrix S = solve_SM(t, job.N, job.order, top);
    return emit_checks({sm_column0(t, S, top), sm_wrap_residual(S, "sm.wrap.k" + std::to_string(job.k)),
                        symplectic_check(t, S), two_point_checks(t, job.N, std::min(job.order, 3))},
                       job);
}

int cmd_rmatrix(const Job& job, int level, int m_max) {
    TargetConfig t = target_config(job.k);
    if (level == 1) {
        int mm = m_max >= 0 ? m_max : std::min(6, job.N - 1);
        std::vector<CheckResult> checks = {r_entries_degree_check(t, job.N, job.N + 3, mm),
                                           level1_dual_route(t, job.N, job.N + 3, std::min(mm, 3), std::min(job.order, 3))};
        json table = json::array();
        for (const auto& [key, p] : r_entries_level1(t, job.N, job.N + 3, mm))
            table.push_back({{"m", key.first}, {"j", key.second}, {"poly_in_Y", poly_json(p)}});
        checks[0].payload["entries_table"] = table;
        return emit_checks(checks, job);
    }
    if (level != 0) throw InvalidSpec("--level must be 0 or 1");
    int mm = m_max >= 0 ? m_max : std::min(4, job.N - 4);
    if (mm >= job.N - 3) throw InvalidSpec("level 0 needs m-max < N-3");
    int top = job.zdepth > 0 ? job.zdepth : default_zdepth(job.N, job.order);
    Level0Direct R = level0_R_direct(t, job.N, job.order, top);
    if (mm > R.valid) throw InvalidSpec("--zdepth too small for m-max");
    std::vector<CheckResult> checks = {level0_expansions(t, R), level0_dual_route(t, job.N, mm, job.order, top)};
    return emit_checks(checks, job);
}

const std::vector<std::string>& kNamedSeries = named_series_list();

int cmd_membership(const Job& job, const std::string& name, int degree, int guard) {
    TargetConfig t = target_config(job.k);
    int order = std::max(job.order, static_cast<int>(monomials_upto(degree).size()) + guard - 1);
    Generators g = generators(t, order);
    GenSeriesTable tab(g);
    Series s = named_series(g, name);
    MembershipCertificate c;
    try {
        c = find_polynomial(s, tab, degree, guard);
    } catch (const GuardFailed& e) {
        std::cerr << "assertion failed: membership/find_polynomial/" << name << ": " << e.what() << "\n";
        return kExitFail;
    }
    json j = c.to_json(job.k);
    j["series"] = name;
    if (job.format == "text") std::cout << name << ": " << to_string(c.status) << "  " << to_string(c.poly) << "\n";
    else std::cout << j.dump(1) << "\n";
    if (c.status != CertStatus::certified) {
        std::cerr << "assertion failed: membership/find_polynomial/" << name << " " << to_string(c.status) << "\n";
        return kExitFail;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for MSP R-matrix and Yamaguchi-Yau ring computations"};
    app.require_subcommand(1);
    app.fallthrough();
    Job job;
    if (const char* c = std::getenv("MSPLAB_CACHE")) job.cache_dir = c;
    app.set_config("--config", "", "key=value file overriding defaults");
    app.add_option("--k", job.k, "target degree (6, 8, 10)")->capture_default_str();
    app.add_option("--N", job.N, "odd prime N >= 7")->capture_default_str();
    app.add_option("--order", job.order, "q-order")->capture_default_str();
    app.add_option("--zdepth", job.zdepth, "top z-exponent of S^M columns (0: default)")->capture_default_str();
    app.add_option("--format", job.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
    app.add_option("--cache-dir", job.cache_dir, "cache directory (default $MSPLAB_CACHE)");

    auto* gen = app.add_subcommand("generators", "I0, I11, I22, J1..J3 and A, B, B2, B3, Y");
    auto* gw0 = app.add_subcommand("gw0", "genus-0 invariants table");
    auto* yuk = app.add_subcommand("yukawa-verify", "I0^2 I11^2 I22 = Y");
    std::string spec;
    auto* sm = app.add_subcommand("smatrix", "S^M checks, or one specialized entry");
    sm->add_option("--specialize", spec, "a,i,alpha");
    auto* pf = app.add_subcommand("pf-check", "Picard-Fuchs operator on I^M");
    int level = 1, m_max = -1;
    auto* rm = app.add_subcommand("rmatrix", "R-matrix entries and checks");
    rm->add_option("--level", level, "0 or 1")->capture_default_str();
    rm->add_option("--m-max", m_max, "largest z-power (default per level)");
    auto* dc = app.add_subcommand("delta-compare", "level-1 tower against the Delta expansion");
    int dm = 4;
    dc->add_option("--m-max", dm, "largest m")->capture_default_str();
    auto* tc = app.add_subcommand("tail-constants", "C_k and c_k");
    std::string series_name;
    int degree = 2, guard = 8;
    auto* mb = app.add_subcommand("membership", "certificate for a named series");
    mb->add_option("--series", series_name, "named series")->required()->check(CLI::IsMember(kNamedSeries));
    mb->add_option("--degree", degree, "total degree bound")->capture_default_str();
    mb->add_option("--guard", guard, "held-out coefficients")->capture_default_str();
    auto* zzc = app.add_subcommand("zz-verify", "tower product and symmetry identities");
    auto* va = app.add_subcommand("verify-all", "every check for one target");
    bool acceptance = false;
    va->add_flag("--acceptance", acceptance, "run the ten acceptance criteria at fixed parameters instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInvalid;
    }

    try {
        validate(job);
        if (*gen) return cmd_generators(job);
        if (*gw0) return cmd_gw0(job);
        TargetConfig t = target_config(job.k);
        if (*yuk) return emit_checks({verify_yukawa_identity(t, job.order)}, job);
        if (*sm) return cmd_smatrix(job, spec);
        if (*pf) return emit_checks({pf_check(t, job.N, job.order)}, job);
        if (*rm) return cmd_rmatrix(job, level, m_max);
        if (*dc) {
            if (dm < 0 || dm > job.N - 1) throw InvalidSpec("--m-max must be in 0..N-1");
            return emit_checks({delta_compare(t, job.N, dm)}, job);
        }
        if (*tc) return emit_checks({tail_constants(t, {job.N}, std::min(job.order, 3))}, job);
        if (*mb) {
            if (degree < 0 || degree > 6 || guard < 0) throw InvalidSpec("--degree in 0..6, --guard >= 0");
            return cmd_membership(job, series_name, degree, guard);
        }
        if (*zzc) return emit_checks({verify_zz(t, job.order)}, job);
        if (*va) {
            if (acceptance) {
                std::vector<CheckResult> all;
                for (int n = 1; n <= 10; ++n) {
                    Criterion c = run_criterion(n);
                    std::cerr << c.line() << "\n";
                    for (auto& ch : c.checks) all.push_back(std::move(ch));
                }
                return emit_checks(all, job);
            }
            return emit_checks(verify_all(job.k, job.N, job.order, job.zdepth), job);
        }
    } catch (const InvalidSpec& e) {
        std::cerr << "invalid job: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid job: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "assertion failed: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitInvalid;
}

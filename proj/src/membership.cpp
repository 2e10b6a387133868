#include "msplab/membership.hpp"

#include "msplab/gw0.hpp"
#include "msplab/linalg.hpp"

namespace msplab {

std::string to_string(CertStatus s) {
    switch (s) {
        case CertStatus::certified: return "certified";
        case CertStatus::refuted_at_degree: return "refuted-at-degree";
        case CertStatus::underdetermined: return "underdetermined";
    }
    return "?";
}

json MembershipCertificate::to_json(int k) const {
    json j;
    j["target"] = k;
    j["degree_bound"] = degree_bound;
    j["monomials"] = genpoly_json(poly);
    j["matched_order"] = matched_order;
    j["guard_order"] = guard_order;
    j["status"] = to_string(status);
    return j;
}

MembershipCertificate find_polynomial(const Series& s, GenSeriesTable& gens, const std::vector<Mono>& monos,
                                      int degree_bound, int guard) {
    int order = std::min(s.order(), gens.order());
    int nm = static_cast<int>(monos.size());
    if (guard < 0) throw std::invalid_argument("find_polynomial: negative guard");
    if (order + 1 < nm + guard)
        throw InsufficientOrder("find_polynomial: " + std::to_string(nm) + " monomials + " + std::to_string(guard) +
                                " guards need order >= " + std::to_string(nm + guard - 1));
    int fit = order - guard;  // rows q^0 .. q^fit
    std::vector<Series> cols;
    cols.reserve(nm);
    for (const auto& m : monos) cols.push_back(gens.monomial(m));
    Matrix A(fit + 1, std::vector<Rat>(nm));
    std::vector<Rat> b(fit + 1);
    for (int i = 0; i <= fit; ++i) {
        for (int c = 0; c < nm; ++c) A[i][c] = cols[c][i];
        b[i] = s[i];
    }
    MembershipCertificate cert;
    cert.degree_bound = degree_bound;
    cert.matched_order = fit;
    cert.guard_order = guard;
    auto sol = solve_linear(A, b);
    if (!sol) {
        cert.status = CertStatus::refuted_at_degree;
        return cert;
    }
    for (int c = 0; c < nm; ++c)
        if (!is_zero((*sol)[c])) cert.poly.add_term(monos[c], (*sol)[c]);
    for (int i = fit + 1; i <= order; ++i) {
        Rat v = 0;
        for (int c = 0; c < nm; ++c)
            if (!is_zero((*sol)[c])) v += (*sol)[c] * cols[c][i];
        if (v != s[i])
            throw GuardFailed("find_polynomial: fit through q^" + std::to_string(fit) + " fails at guard q^" +
                              std::to_string(i));
    }
    cert.status = guard > 0 ? CertStatus::certified : CertStatus::underdetermined;
    return cert;
}

MembershipCertificate find_polynomial(const Series& s, GenSeriesTable& gens, int degree_bound, int guard) {
    return find_polynomial(s, gens, monomials_upto(degree_bound), degree_bound, guard);
}

DClosureReport dclosure_witnesses(const TargetConfig& t, int order, int guard) {
    if (order < 30) throw InsufficientOrder("dclosure_witnesses: order >= 30");
    Generators g = generators(t, order);
    GenSeriesTable tab(g);
    DClosureReport rep;
    rep.check.id = "dclosure.k" + std::to_string(t.k);
    rep.check.order = order;
    rep.check.pass = true;
    std::vector<std::pair<std::string, Series>> targets = {
        {"DA", D(g.A)}, {"DB2", D(g.B2)}, {"DB3", D(g.B3)}, {"A2", g.A_m(2)}, {"B4", g.B_m(4)}};
    json certs = json::object();
    for (const auto& [name, s] : targets) {
        MembershipCertificate c;
        try {
            c = find_polynomial(s, tab, 2, guard);
        } catch (const GuardFailed& e) {
            c.status = CertStatus::refuted_at_degree;
            certs[name] = {{"error", e.what()}};
            rep.check.pass = false;
            if (!rep.check.first_failure) rep.check.first_failure = "membership/dclosure_witnesses/" + name + "/guard";
            continue;
        }
        certs[name] = c.to_json(t.k);
        if (c.status != CertStatus::certified) {
            rep.check.pass = false;
            if (!rep.check.first_failure) rep.check.first_failure = "membership/dclosure_witnesses/" + name;
        }
        if (name == "A2") rep.rel.A2 = c.poly;
        if (name == "B4") rep.rel.B4 = c.poly;
        rep.certs.emplace_back(name, c);
    }
    // chain rule, no solver
    bool db = compare(D(g.B), g.B2 - g.B * g.B).equal;
    rep.check.pass = rep.check.pass && db;
    if (!db && !rep.check.first_failure) rep.check.first_failure = "membership/dclosure_witnesses/DB";
    rep.check.payload["certificates"] = certs;
    rep.check.payload["DB_chain_rule"] = db;
    rep.check.payload["guard"] = guard;
    return rep;
}

const std::vector<std::string>& named_series_list() {
    static const std::vector<std::string> names = {"A",   "B",   "B2", "B3", "Y",  "DA",
                                                   "DB",  "DB2", "DB3", "A2", "B4", "yukawa-normalized"};
    return names;
}

Series named_series(const Generators& g, const std::string& name) {
    if (name == "A") return g.A;
    if (name == "B") return g.B;
    if (name == "B2") return g.B2;
    if (name == "B3") return g.B3;
    if (name == "Y") return g.Y;
    if (name == "DA") return D(g.A);
    if (name == "DB") return D(g.B);
    if (name == "DB2") return D(g.B2);
    if (name == "DB3") return D(g.B3);
    if (name == "A2") return g.A_m(2);
    if (name == "B4") return g.B_m(4);
    if (name == "yukawa-normalized") return g.I0 * g.I0 * g.I11 * g.I11 * g.I22;
    throw std::invalid_argument("unknown series " + name);
}

CheckResult genus0_chain_check(const TargetConfig& t, int order, const DRelations& rel) {
    Generators g = generators(t, order);
    GenSeriesTable tab(g);
    CheckResult r;
    r.id = "genus0_chain.k" + std::to_string(t.k);
    r.order = order;
    r.pass = true;
    Series raw3 = p_genus0_raw(t, g, 3);
    bool p03 = compare(raw3, Series::one(order)).equal;
    r.payload["P03_is_one"] = p03;
    if (!p03) {
        r.pass = false;
        r.first_failure = "gw-genus0/p_genus0_raw/n=3";
    }
    GenPoly P = GenPoly::constant(1);
    Series Ps = raw3;
    json steps = json::array();
    for (int n = 3; n < 5; ++n) {
        P = p_recursion(P, 0, n, rel);
        Ps = p_recursion(Ps, 0, n, g);
        Series viaGen = tab.eval(P);
        Series raw = p_genus0_raw(t, g, n + 1);
        bool a = compare(viaGen, Ps).equal, b = compare(Ps, raw).equal;
        steps.push_back({{"n", n + 1}, {"P", genpoly_json(P)}, {"genpoly_vs_series", a}, {"series_vs_raw", b}});
        if ((!a || !b) && r.pass) {
            r.pass = false;
            r.first_failure = "gw-genus0/p_recursion/P0" + std::to_string(n + 1);
        }
    }
    r.payload["steps"] = steps;
    return r;
}

}  // namespace msplab

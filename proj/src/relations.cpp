#include "symmon/relations.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "symmon/linalg.hpp"
#include "symmon/parallel.hpp"

namespace symmon {

namespace {

CheckResult zero_check(const std::string& name, const WeylOperator& residual) {
    CheckResult r;
    r.check = name;
    r.pass = residual.is_zero();
    if (!r.pass) r.residual = residual.str();
    return r;
}

} // namespace

SuiteReport verify_sl2(const Sl2Triple& t, int m) {
    SuiteReport rep{"sl2(" + t.name + ")", m, {}};
    rep.entries.push_back(zero_check("[H,X] - 2X", commutator(t.H, t.X) - t.X.scaled(2)));
    rep.entries.push_back(zero_check("[X,Y] - H", commutator(t.X, t.Y) - t.H));
    rep.entries.push_back(zero_check("[H,Y] + 2Y", commutator(t.H, t.Y) + t.Y.scaled(2)));
    return rep;
}

SuiteReport sl2_suite(const OperatorCatalog& cat) {
    SuiteReport rep{"sl2", cat.m(), {}};
    for (const Sl2Triple* t : {&cat.ds_triple(), &cat.l_triple()}) {
        SuiteReport sub = verify_sl2(*t, cat.m());
        for (auto& e : sub.entries) {
            e.check = sub.suite + ": " + e.check;
            rep.entries.push_back(std::move(e));
        }
    }
    // H of the Ds triple must expand as announced.
    {
        const WeylOperator expected =
            (cat.named("Ex") + cat.named("Ey") + WeylOperator::scalar(cat.m(), cat.m()))
                .scaled(-2);
        rep.entries.push_back(
            zero_check("H_D + 2(Ex+Ey+m)", cat.ds_triple().H - expected));
    }
    // Negative control: doubling Y must break [X,Y] = H.
    {
        Sl2Triple bad = cat.ds_triple();
        bad.Y = bad.Y.scaled(2);
        WeylOperator residual = commutator(bad.X, bad.Y) - bad.H;
        CheckResult r;
        r.check = "control: perturbed triple fails [X,Y] = H";
        r.pass = !residual.is_zero();
        if (!r.pass) r.residual = "perturbed residual unexpectedly zero";
        rep.entries.push_back(std::move(r));
    }
    return rep;
}

SuiteReport so4_split_suite(const OperatorCatalog& cat) {
    SuiteReport rep{"so4", cat.m(), {}};
    const WeylOperator& Ds = cat.named("Ds");
    const WeylOperator& Xs = cat.named("Xs");
    const WeylOperator& L = cat.named("L");
    const WeylOperator& R = cat.named("R");
    rep.entries.push_back(zero_check("[Ds,L]", commutator(Ds, L)));
    rep.entries.push_back(zero_check("[Ds,R]", commutator(Ds, R)));
    rep.entries.push_back(zero_check("[Xs,L]", commutator(Xs, L)));
    rep.entries.push_back(zero_check("[Xs,R]", commutator(Xs, R)));
    {
        WeylOperator residual = commutator(Ds, norm_squared(cat.m(), 'y'));
        CheckResult r;
        r.check = "control: [Ds,|y|^2] != 0";
        r.pass = !residual.is_zero();
        r.detail = residual.str();
        rep.entries.push_back(std::move(r));
    }
    return rep;
}

namespace {

// Coordinates of a set of operators in the union of their term keys.
struct TermSpace {
    std::vector<WeylKey> keys;
    std::map<WeylKey, std::size_t> index;

    void collect(const WeylOperator& op) {
        for (const auto& [k, c] : op.terms()) {
            (void)c;
            if (index.emplace(k, 0).second) keys.push_back(k);
        }
    }
    void freeze() {
        std::sort(keys.begin(), keys.end());
        for (std::size_t i = 0; i < keys.size(); ++i) index[keys[i]] = i;
    }
    QVec coords(const WeylOperator& op) const {
        QVec v(keys.size());
        for (const auto& [k, c] : op.terms()) v[index.at(k)] = c;
        return v;
    }
};

} // namespace

SuiteReport reductive_suite(const OperatorCatalog& cat) {
    SuiteReport rep{"reductive", cat.m(), {}};
    const auto& qs = cat.q_generators();

    // Label sanity against the grid.
    for (const LabeledQ& q : qs) {
        auto g = bigrade(q.Q);
        CheckResult r;
        r.check = "bigrade Q" + q.label.str();
        r.pass = g.has_value() && *g == q.label;
        if (!r.pass) r.residual = g ? g->str() : std::string("ungraded");
        rep.entries.push_back(std::move(r));
    }

    // Linear independence of the fifteen canonical forms.
    {
        TermSpace space;
        for (const LabeledQ& q : qs) space.collect(q.Q);
        space.freeze();
        std::vector<QVec> vecs;
        for (const LabeledQ& q : qs) vecs.push_back(space.coords(q.Q));
        std::size_t rank = rank_of(vecs, space.keys.size());
        CheckResult r;
        r.check = "independence of the 15 generators";
        r.pass = rank == qs.size();
        if (!r.pass) r.residual = "rank " + std::to_string(rank);
        rep.entries.push_back(std::move(r));
    }

    struct NamedOp {
        std::string name;
        const WeylOperator* op;
    };
    std::vector<NamedOp> so4 = {{"Ds", &cat.named("Ds")}, {"Xs", &cat.named("Xs")},
                                {"L", &cat.named("L")},   {"R", &cat.named("R")},
                                {"H_D", &cat.named("H_D")}, {"H_L", &cat.named("H_L")}};

    for (const NamedOp& s : so4) {
        for (const LabeledQ& q : qs) {
            WeylOperator bracket = commutator(*s.op, q.Q);
            TermSpace space;
            for (const LabeledQ& other : qs) space.collect(other.Q);
            space.collect(bracket);
            space.freeze();
            std::vector<QVec> columns;
            for (const LabeledQ& other : qs) columns.push_back(space.coords(other.Q));
            auto coeffs = solve_columns(columns, space.coords(bracket), space.keys.size());
            CheckResult r;
            r.check = "[" + s.name + ", Q" + q.label.str() + "] in span(Q)";
            r.pass = coeffs.has_value();
            if (coeffs) {
                std::ostringstream detail;
                bool first = true;
                for (std::size_t i = 0; i < qs.size(); ++i) {
                    if ((*coeffs)[i].is_zero()) continue;
                    if (!first) detail << " + ";
                    first = false;
                    detail << (*coeffs)[i].str() << "*Q" << qs[i].label.str();
                }
                r.detail = first ? std::string("0") : detail.str();
            } else {
                r.residual = bracket.str();
            }
            rep.entries.push_back(std::move(r));
        }
    }

    // Cartan eigenvalues: ad(H_L) Q = lambda Q and ad(H_D) Q = -mu Q
    // (mu is the eigenvalue of ad(2(E+m)) = ad(-H_D)).
    for (const LabeledQ& q : qs) {
        WeylOperator lhs = commutator(cat.named("H_L"), q.Q) - q.Q.scaled(q.label.lambda);
        rep.entries.push_back(zero_check("ad(H_L) Q" + q.label.str() + " = lambda Q", lhs));
        WeylOperator rhs = commutator(cat.named("H_D"), q.Q) + q.Q.scaled(q.label.mu);
        rep.entries.push_back(zero_check("ad(H_D) Q" + q.label.str() + " = -mu Q", rhs));
    }
    return rep;
}

SuiteReport invariance_suite(const OperatorCatalog& cat, int jobs) {
    SuiteReport rep{"invariance", cat.m(), {}};
    const WeylOperator& Ds = cat.named("Ds");
    const WeylOperator& Xs = cat.named("Xs");
    const WeylOperator Em =
        cat.named("E") + WeylOperator::scalar(cat.m(), cat.m());

    const auto& gens = cat.sp2m_generators();
    std::vector<std::vector<CheckResult>> slots(gens.size());
    parallel_for(gens.size(), jobs, [&](std::size_t i) {
        const SpGenerator& g = gens[i];
        std::vector<CheckResult> out;
        out.push_back(zero_check("[Ds," + g.name + "]", commutator(Ds, g.op)));
        out.push_back(zero_check("[Xs," + g.name + "]", commutator(Xs, g.op)));
        out.push_back(zero_check("[E+m," + g.name + "]", commutator(Em, g.op)));
        // Parity control: every term shifts z-degree by 0 or +-2.
        CheckResult parity;
        parity.check = "z-parity of " + g.name;
        parity.pass = true;
        for (const auto& [k, c] : g.op.terms()) {
            (void)c;
            TriShift s = term_shift(k);
            if (s.da % 2 != 0) parity.pass = false;
        }
        out.push_back(std::move(parity));
        slots[i] = std::move(out);
    });
    for (auto& s : slots)
        for (auto& e : s) rep.entries.push_back(std::move(e));
    return rep;
}

SuiteReport so_m_invariants_suite(const OperatorCatalog& cat) {
    SuiteReport rep{"so_m_invariants", cat.m(), {}};
    const int m = cat.m();
    const VecSym syms[] = {VecSym::Z, VecSym::X, VecSym::Y,
                           VecSym::Dz, VecSym::Dx, VecSym::Dy};
    const char* names[] = {"z", "x", "y", "dz", "dx", "dy"};
    for (const SpGenerator& lab : cat.so_m_generators()) {
        for (std::size_t u = 0; u < 6; ++u) {
            for (std::size_t v = u; v < 6; ++v) {
                WeylOperator c = contraction(m, syms[u], syms[v]);
                rep.entries.push_back(zero_check(
                    "[" + lab.name + ", c(" + names[u] + "," + names[v] + ")]",
                    commutator(lab.op, c)));
            }
        }
    }
    return rep;
}

} // namespace symmon

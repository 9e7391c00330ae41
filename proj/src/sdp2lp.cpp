#include "wbsdp/sdp2lp.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "wbsdp/parallel.hpp"

namespace wbsdp {

using nlohmann::json;

namespace {

std::vector<int> parseLabels(const json& arr, int n, int d, const char* what) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != n)
        throw std::invalid_argument(std::string(what) + " must have p+q entries");
    std::vector<int> out;
    for (const auto& v : arr) {
        int x = v.get<int>();
        if (x < 1 || x > d)
            throw std::invalid_argument(std::string(what) + " label out of [1, d]");
        out.push_back(x);
    }
    return out;
}

MatrixTerm parseTerm(const json& j, int p, int q, int d) {
    MatrixTerm t;
    t.coeff = parseRat(j.at("coeff").get<std::string>());
    if (j.contains("diagram")) {
        t.isDiagram = true;
        t.diagram = diagramFromString(j.at("diagram").get<std::string>());
        if (t.diagram.p != p || t.diagram.q != q)
            throw std::invalid_argument("diagram term has wrong (p, q)");
    } else {
        t.isDiagram = false;
        t.ket = parseLabels(j.at("ket"), p + q, d, "ket");
        t.bra = parseLabels(j.at("bra"), p + q, d, "bra");
    }
    return t;
}

json termToJson(const MatrixTerm& t) {
    json j;
    j["coeff"] = ratToString(t.coeff);
    if (t.isDiagram) {
        j["diagram"] = diagramToString(t.diagram);
    } else {
        j["ket"] = t.ket;
        j["bra"] = t.bra;
    }
    return j;
}

}  // namespace

SdpSpec parseSpec(const std::string& jsonText) {
    json j;
    try {
        j = json::parse(jsonText);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("spec: invalid JSON: ") + e.what());
    }
    SdpSpec spec;
    spec.p = j.at("p").get<int>();
    spec.q = j.at("q").get<int>();
    spec.d = j.at("d").get<int>();
    if (spec.p < 0 || spec.q < 0 || spec.p + spec.q < 1)
        throw std::invalid_argument("spec: bad (p, q)");
    if (spec.d < 2) throw std::invalid_argument("spec: d must be >= 2");
    spec.symmetry = symmetryFromName(j.at("symmetry").get<std::string>());

    if (j.contains("extraScalars"))
        for (const auto& e : j.at("extraScalars"))
            spec.extraScalars.push_back(
                {e.at("name").get<std::string>(), parseRat(e.at("objective").get<std::string>())});

    if (j.contains("objective"))
        for (const auto& t : j.at("objective"))
            spec.objective.push_back(parseTerm(t, spec.p, spec.q, spec.d));

    if (j.contains("inequalities")) {
        for (const auto& c : j.at("inequalities")) {
            InequalityConstraint ic;
            for (const auto& t : c.at("A")) ic.A.push_back(parseTerm(t, spec.p, spec.q, spec.d));
            ic.b = parseRat(c.at("b").get<std::string>());
            ic.extraCoeffs.assign(spec.extraScalars.size(), Rat(0));
            if (c.contains("x")) {
                const auto& xs = c.at("x");
                if (xs.size() != spec.extraScalars.size())
                    throw std::invalid_argument("spec: inequality 'x' row has wrong length");
                for (std::size_t m = 0; m < xs.size(); ++m)
                    ic.extraCoeffs[m] = parseRat(xs[m].get<std::string>());
            }
            spec.inequalities.push_back(std::move(ic));
        }
    }

    if (j.contains("partialTraces")) {
        for (const auto& c : j.at("partialTraces")) {
            PartialTraceConstraint pc;
            for (const auto& s : c.at("S")) {
                int pos = s.get<int>();
                if (pos < 1 || pos > spec.p + spec.q)
                    throw std::invalid_argument("spec: partial trace position out of range");
                pc.S.insert(pos);
            }
            if (pc.S.empty()) throw std::invalid_argument("spec: empty partial trace set");
            int pk = spec.p, qk = spec.q;
            for (int pos : pc.S) (pos <= spec.p ? pk : qk) -= 1;
            for (const auto& t : c.at("D")) {
                DiagramTerm dt;
                dt.coeff = parseRat(t.at("coeff").get<std::string>());
                if (!t.contains("diagram"))
                    throw std::invalid_argument("spec: D_k terms must be pure diagrams");
                dt.diagram = diagramFromString(t.at("diagram").get<std::string>());
                if (dt.diagram.p != pk || dt.diagram.q != qk)
                    throw std::invalid_argument("spec: D_k diagram has wrong residual shape");
                pc.D.push_back(std::move(dt));
            }
            spec.partialTraces.push_back(std::move(pc));
        }
    }

    if (!spec.partialTraces.empty()) {
        std::size_t minS = spec.p + spec.q;
        for (const auto& c : spec.partialTraces) minS = std::min(minS, c.S.size());
        if (spec.d < spec.p + spec.q - static_cast<int>(minS)) {
            std::ostringstream os;
            os << "spec: local dimension d = " << spec.d << " violates d >= p+q-min|S_k| = "
               << spec.p + spec.q - static_cast<int>(minS)
               << "; for smaller d the map psi is not injective on the residual algebra and the "
                  "diagrammatic conversion of partial-trace constraints is not valid";
            throw std::invalid_argument(os.str());
        }
    }
    return spec;
}

std::string specToJson(const SdpSpec& spec) {
    json j;
    j["p"] = spec.p;
    j["q"] = spec.q;
    j["d"] = spec.d;
    j["symmetry"] = symmetryName(spec.symmetry);
    j["objective"] = json::array();
    for (const auto& t : spec.objective) j["objective"].push_back(termToJson(t));
    j["inequalities"] = json::array();
    for (const auto& c : spec.inequalities) {
        json jc;
        jc["A"] = json::array();
        for (const auto& t : c.A) jc["A"].push_back(termToJson(t));
        jc["b"] = ratToString(c.b);
        if (!spec.extraScalars.empty()) {
            jc["x"] = json::array();
            for (const auto& x : c.extraCoeffs) jc["x"].push_back(ratToString(x));
        }
        j["inequalities"].push_back(jc);
    }
    j["partialTraces"] = json::array();
    for (const auto& c : spec.partialTraces) {
        json jc;
        jc["S"] = json::array();
        for (int s : c.S) jc["S"].push_back(s);
        jc["D"] = json::array();
        for (const auto& t : c.D) {
            json jt;
            jt["diagram"] = diagramToString(t.diagram);
            jt["coeff"] = ratToString(t.coeff);
            jc["D"].push_back(jt);
        }
        j["partialTraces"].push_back(jc);
    }
    if (!spec.extraScalars.empty()) {
        j["extraScalars"] = json::array();
        for (const auto& e : spec.extraScalars)
            j["extraScalars"].push_back(
                {{"name", e.name}, {"objective", ratToString(e.objectiveCoeff)}});
    }
    return j.dump(2);
}

Rat traceAgainst(const MatrixTerm& term, const Diagram& sigma, int d) {
    if (term.isDiagram) {
        // Tr(psi(tau) psi(sigma)) = d^(compose loops + closed-up loops).
        ComposeResult r = compose(term.diagram, sigma);
        unsigned long loops =
            static_cast<unsigned long>(r.loops) + static_cast<unsigned long>(traceLoops(r.diagram));
        return term.coeff * intPow(d, loops);
    }
    // Tr(psi(sigma) |ket><bra|) = <bra| psi(sigma) |ket>: top labels from the
    // bra, bottom labels from the ket.
    const int n = sigma.n();
    auto label = [&](int node) {
        int i = rowIndex(node, n);
        return isTop(node, n) ? term.bra[i] : term.ket[i];
    };
    for (int x = 0; x < 2 * n; ++x) {
        int y = sigma.match[x];
        if (y < x) continue;
        if (label(x) != label(y)) return Rat(0);
    }
    return term.coeff;
}

Rat traceExprAgainst(const MatrixExpr& expr, const Diagram& sigma, int d) {
    Rat out = 0;
    for (const auto& t : expr) out += traceAgainst(t, sigma, d);
    return out;
}

LpProblem convert(const SdpSpec& spec, const IdempotentSet& idemp) {
    if (idemp.p != spec.p || idemp.q != spec.q || idemp.d != spec.d ||
        idemp.symmetry != spec.symmetry)
        throw std::invalid_argument("convert: idempotent set does not match the spec");
    for (const auto& c : spec.partialTraces)
        if (spec.d < spec.p + spec.q - static_cast<int>(c.S.size()))
            throw std::invalid_argument(
                "convert: partial-trace constraint outside the kernel restriction "
                "d >= p+q-|S|");

    const std::size_t n = idemp.rows.size();
    LpProblem lp;
    lp.numIdempotentVars = n;
    lp.numExtraVars = spec.extraScalars.size();
    for (std::size_t i = 0; i < n; ++i) lp.varNames.push_back("v" + std::to_string(i + 1));
    for (const auto& e : spec.extraScalars) lp.varNames.push_back(e.name);

    const std::size_t nv = lp.numVars();
    lp.objective.assign(nv, Rat(0));

    // c_i = sum_j alpha_ij Tr(C psi(sigma_j)), evaluated per row.
    parallelFor(n, [&](std::size_t i) {
        Rat ci = 0;
        for (const auto& [dg, alpha] : idemp.rows[i].terms())
            ci += alpha * traceExprAgainst(spec.objective, dg, spec.d);
        lp.objective[i] = ci;
    });
    for (std::size_t m = 0; m < spec.extraScalars.size(); ++m)
        lp.objective[n + m] = spec.extraScalars[m].objectiveCoeff;

    // Inequalities: Tr(A_k X) - sum_m a_km x_m <= b_k.
    lp.ineqA.assign(spec.inequalities.size(), std::vector<Rat>(nv, Rat(0)));
    lp.ineqB.resize(spec.inequalities.size());
    for (std::size_t k = 0; k < spec.inequalities.size(); ++k) {
        const auto& c = spec.inequalities[k];
        parallelFor(n, [&](std::size_t i) {
            Rat a = 0;
            for (const auto& [dg, alpha] : idemp.rows[i].terms())
                a += alpha * traceExprAgainst(c.A, dg, spec.d);
            lp.ineqA[k][i] = a;
        });
        for (std::size_t m = 0; m < c.extraCoeffs.size(); ++m)
            lp.ineqA[k][n + m] = -c.extraCoeffs[m];
        lp.ineqB[k] = c.b;
    }

    // Partial-trace equalities: one row per residual basis diagram rho_l.
    for (const auto& c : spec.partialTraces) {
        int pk = spec.p, qk = spec.q;
        for (int pos : c.S) (pos <= spec.p ? pk : qk) -= 1;
        std::size_t residualCount = 1;
        for (int t = 2; t <= pk + qk; ++t) residualCount *= t;

        std::vector<std::vector<Rat>> rows(residualCount, std::vector<Rat>(nv, Rat(0)));
        std::vector<Rat> rhs(residualCount, Rat(0));
        for (const auto& t : c.D) {
            if (t.diagram.p != pk || t.diagram.q != qk)
                throw std::invalid_argument("convert: D_k diagram of wrong residual shape");
            rhs[diagramRank(t.diagram)] += t.coeff;
        }
        parallelFor(n, [&](std::size_t i) {
            for (const auto& [dg, alpha] : idemp.rows[i].terms()) {
                PartialTraceResult pt = partialTrace(dg, c.S);
                std::size_t l = diagramRank(pt.diagram);
                rows[l][i] += alpha * intPow(spec.d, static_cast<unsigned long>(pt.loops));
            }
        });
        for (std::size_t l = 0; l < residualCount; ++l) {
            lp.eqA.push_back(std::move(rows[l]));
            lp.eqB.push_back(rhs[l]);
        }
    }
    return lp;
}

SimplexResult solveLp(const LpProblem& lp) {
    SimplexProblem sp;
    sp.numVars = lp.numVars();
    sp.numNonneg = lp.numIdempotentVars;
    sp.objective = lp.objective;
    sp.ineqA = lp.ineqA;
    sp.ineqB = lp.ineqB;
    sp.eqA = lp.eqA;
    sp.eqB = lp.eqB;
    return solveSimplex(sp);
}

namespace {

std::string ratToDecimal(const Rat& r, int digits = 17) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, r.get_d());
    return buf;
}

void writeLinear(std::ostream& os, const std::vector<Rat>& row,
                 const std::vector<std::string>& names) {
    bool first = true;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] == 0) continue;
        Rat v = row[i];
        if (first) {
            if (v < 0) {
                os << "- ";
                v = -v;
            }
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        if (v != 1) os << ratToDecimal(v) << ' ';
        os << names[i];
    }
    if (first) os << "0 " << names.front();
}

}  // namespace

std::string emitLp(const LpProblem& lp, LpFormat format) {
    if (format == LpFormat::Json) {
        json j;
        j["numIdempotentVars"] = lp.numIdempotentVars;
        j["numExtraVars"] = lp.numExtraVars;
        j["varNames"] = lp.varNames;
        auto rowOut = [](const std::vector<Rat>& row) {
            json a = json::array();
            for (const auto& v : row) a.push_back(ratToString(v));
            return a;
        };
        j["objective"] = rowOut(lp.objective);
        j["inequalities"] = json::array();
        for (std::size_t k = 0; k < lp.ineqA.size(); ++k)
            j["inequalities"].push_back({{"a", rowOut(lp.ineqA[k])}, {"b", ratToString(lp.ineqB[k])}});
        j["equalities"] = json::array();
        for (std::size_t k = 0; k < lp.eqA.size(); ++k)
            j["equalities"].push_back({{"d", rowOut(lp.eqA[k])}, {"e", ratToString(lp.eqB[k])}});
        return j.dump(2);
    }

    std::ostringstream os;
    os << "\\ LP emitted from a unitary-equivariant SDP; variables v* are\n"
          "\\ idempotent weights (nonnegative), remaining variables are free.\n";
    os << "Maximize\n obj: ";
    writeLinear(os, lp.objective, lp.varNames);
    os << "\nSubject To\n";
    for (std::size_t k = 0; k < lp.ineqA.size(); ++k) {
        os << " c" << k + 1 << ": ";
        writeLinear(os, lp.ineqA[k], lp.varNames);
        os << " <= " << ratToDecimal(lp.ineqB[k]) << '\n';
    }
    for (std::size_t k = 0; k < lp.eqA.size(); ++k) {
        os << " e" << k + 1 << ": ";
        writeLinear(os, lp.eqA[k], lp.varNames);
        os << " = " << ratToDecimal(lp.eqB[k]) << '\n';
    }
    os << "Bounds\n";
    for (std::size_t i = 0; i < lp.numIdempotentVars; ++i)
        os << ' ' << lp.varNames[i] << " >= 0\n";
    for (std::size_t i = lp.numIdempotentVars; i < lp.numVars(); ++i)
        os << ' ' << lp.varNames[i] << " free\n";
    os << "End\n";
    return os.str();
}

LpProblem parseLpJson(const std::string& jsonText) {
    json j = json::parse(jsonText);
    LpProblem lp;
    lp.numIdempotentVars = j.at("numIdempotentVars").get<std::size_t>();
    lp.numExtraVars = j.at("numExtraVars").get<std::size_t>();
    lp.varNames = j.at("varNames").get<std::vector<std::string>>();
    auto rowIn = [](const json& a) {
        std::vector<Rat> row;
        for (const auto& v : a) row.push_back(parseRat(v.get<std::string>()));
        return row;
    };
    lp.objective = rowIn(j.at("objective"));
    for (const auto& c : j.at("inequalities")) {
        lp.ineqA.push_back(rowIn(c.at("a")));
        lp.ineqB.push_back(parseRat(c.at("b").get<std::string>()));
    }
    for (const auto& c : j.at("equalities")) {
        lp.eqA.push_back(rowIn(c.at("d")));
        lp.eqB.push_back(parseRat(c.at("e").get<std::string>()));
    }
    return lp;
}

}  // namespace wbsdp

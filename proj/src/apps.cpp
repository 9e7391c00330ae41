#include "wbsdp/apps.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wbsdp/parallel.hpp"

namespace wbsdp {

using nlohmann::json;

namespace {

MatrixTerm rankOneTerm(const std::vector<int>& labels, const Rat& coeff) {
    MatrixTerm t;
    t.isDiagram = false;
    t.ket = labels;
    t.bra = labels;
    t.coeff = coeff;
    return t;
}

}  // namespace

SdpSpec majoritySpec(int d) {
    if (d < 2) throw std::invalid_argument("majority: d must be >= 2");
    SdpSpec spec;
    spec.p = 3;
    spec.q = 1;
    spec.d = d;
    spec.symmetry = Symmetry::SpSq;
    spec.extraScalars.push_back({"F", Rat(1)});

    // Input classes of the majority relation with their valid outputs.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> classes;
    classes.push_back({{1, 1, 1}, {1}});
    classes.push_back({{1, 1, 2}, {1}});
    if (d >= 3) classes.push_back({{1, 2, 3}, {1, 2, 3}});

    for (const auto& [x, ys] : classes) {
        InequalityConstraint ic;
        for (int y : ys) {
            std::vector<int> labels = x;
            labels.push_back(y);
            ic.A.push_back(rankOneTerm(labels, Rat(-1)));
        }
        ic.b = 0;
        ic.extraCoeffs = {Rat(-1)};  // -sum <x,y|X|x,y> <= -F
        spec.inequalities.push_back(std::move(ic));
    }

    if (d >= 3) {
        PartialTraceConstraint pc;
        pc.S = {4};
        pc.D.push_back({identity(3, 0), Rat(1)});
        spec.partialTraces.push_back(std::move(pc));
    }
    return spec;
}

Rat majorityFidelity(int d) {
    SdpSpec spec = majoritySpec(d);
    IdempotentSet idem = lastEdgeAnsatz(3, 1, d);
    LpProblem lp = convert(spec, idem);

    if (d == 2) {
        // Trace preservation Tr_out X = I via the explicit oracle: the
        // diagrammatic route needs d >= p+q-|S| = 3.
        const std::size_t n = idem.rows.size();
        const std::uint64_t rdim = 8;  // 2^3
        std::vector<SparseMatrix> reduced(n);
        for (std::size_t i = 0; i < n; ++i)
            reduced[i] = spPartialTrace(psiElement(idem.rows[i]), 4, 2, {4});
        for (std::uint64_t r = 0; r < rdim; ++r) {
            for (std::uint64_t c = 0; c < rdim; ++c) {
                std::vector<Rat> row(lp.numVars(), Rat(0));
                bool nonzero = false;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t key = r * rdim + c;
                    auto it = std::lower_bound(
                        reduced[i].entries.begin(), reduced[i].entries.end(), key,
                        [](const auto& e, std::uint64_t k) { return e.first < k; });
                    if (it != reduced[i].entries.end() && it->first == key) {
                        row[i] = it->second;
                        nonzero = true;
                    }
                }
                Rat rhs = r == c ? Rat(1) : Rat(0);
                if (!nonzero && rhs == 0) continue;
                lp.eqA.push_back(std::move(row));
                lp.eqB.push_back(rhs);
            }
        }
    }

    SimplexResult res = solveLp(lp);
    if (res.status != LpStatus::Optimal)
        throw std::runtime_error("majority LP did not solve to optimality: " +
                                 lpStatusName(res.status));
    return res.optimum;
}

namespace {

// Dense univariate polynomial over exact rationals.
struct Poly {
    std::vector<Rat> c;  // c[k] * t^k

    static Poly constant(const Rat& v) { return {{v}}; }

    Poly operator+(const Poly& o) const {
        Poly out = *this;
        if (o.c.size() > out.c.size()) out.c.resize(o.c.size(), Rat(0));
        for (std::size_t i = 0; i < o.c.size(); ++i) out.c[i] += o.c[i];
        return out;
    }
    Poly operator*(const Poly& o) const {
        if (c.empty() || o.c.empty()) return {};
        Poly out;
        out.c.assign(c.size() + o.c.size() - 1, Rat(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) out.c[i + j] += c[i] * o.c[j];
        return out;
    }
    Poly scaled(const Rat& v) const {
        Poly out = *this;
        for (auto& x : out.c) x *= v;
        return out;
    }
    Rat eval(const Rat& t) const {
        Rat out = 0;
        for (std::size_t i = c.size(); i-- > 0;) out = out * t + c[i];
        return out;
    }
    // Definite integral over [a, b].
    Rat integrate(const Rat& a, const Rat& b) const {
        Rat out = 0;
        Rat pa = a, pb = b;
        for (std::size_t k = 0; k < c.size(); ++k) {
            out += c[k] * (pb - pa) / Rat(static_cast<long>(k + 1));
            pa *= a;
            pb *= b;
        }
        return out;
    }
};

// t^l + (1-t)^l
Poly cyclePoly(int l) {
    Poly tl;
    tl.c.assign(l + 1, Rat(0));
    tl.c[l] = 1;
    Poly ul;  // (1-t)^l via binomials
    ul.c.assign(l + 1, Rat(0));
    Rat binom = 1;
    for (int k = 0; k <= l; ++k) {
        ul.c[k] = (k % 2 == 0 ? binom : -binom);
        binom = binom * Rat(l - k) / Rat(k + 1);
    }
    return tl + ul;
}

std::vector<int> permCycleLengths(const Diagram& dg) {
    const int n = dg.n();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = dg.match[i] - n;
    std::vector<char> seen(n, 0);
    std::vector<int> lengths;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, x = i;
        while (!seen[x]) {
            seen[x] = 1;
            x = perm[x];
            ++len;
        }
        lengths.push_back(len);
    }
    return lengths;
}

}  // namespace

std::vector<std::pair<Rat, Rat>> eigmax(int n, const std::vector<Rat>& cGrid) {
    if (n < 1 || n > 8) throw std::invalid_argument("eigmax: n must be in [1, 8]");
    const Rat half(1, 2);
    for (const Rat& c : cGrid)
        if (c < half || c > 1) throw std::invalid_argument("eigmax: c must lie in [1/2, 1]");

    // P = sum w_lambda eps(lambda) over central idempotents of the n-qudit
    // permutation algebra at d = 2; Tr[diag(t, 1-t)^n psi(eps)] is a
    // polynomial in t evaluated cycle by cycle.
    IdempotentSet central = centralIdempotents(n, 0, 2);
    std::vector<Poly> g(central.rows.size());
    for (std::size_t l = 0; l < central.rows.size(); ++l) {
        Poly sum;
        for (const auto& [dg, coeff] : central.rows[l].terms()) {
            Poly prod = Poly::constant(coeff);
            for (int len : permCycleLengths(dg)) prod = prod * cyclePoly(len);
            sum = sum + prod;
        }
        g[l] = sum;
    }

    // Eigenvalue density of a normalized 2x2 Wishart (k = 2) folded onto the
    // larger eigenvalue t in [1/2, 1]: 6 (2t-1)^2.
    Poly nu;
    nu.c = {Rat(6), Rat(-24), Rat(24)};

    std::vector<Poly> nug(g.size());
    for (std::size_t l = 0; l < g.size(); ++l) nug[l] = nu * g[l];

    // Grid points are independent; solved in parallel.
    std::vector<std::pair<Rat, Rat>> out(cGrid.size());
    std::vector<std::string> errors(cGrid.size());
    parallelFor(cGrid.size(), [&](std::size_t gi) {
        const Rat& c = cGrid[gi];
        Rat base = nu.integrate(c, 1);
        LpProblem lp;
        lp.numIdempotentVars = g.size();
        lp.numExtraVars = 0;
        lp.objective.resize(g.size());
        for (std::size_t l = 0; l < g.size(); ++l) {
            lp.varNames.push_back("w" + std::to_string(l + 1));
            lp.objective[l] = nug[l].integrate(half, c) - nug[l].integrate(c, 1);
            std::vector<Rat> row(g.size(), Rat(0));
            row[l] = 1;
            lp.ineqA.push_back(std::move(row));
            lp.ineqB.push_back(Rat(1));
        }
        SimplexResult res = solveLp(lp);
        if (res.status != LpStatus::Optimal) {
            errors[gi] = "eigmax LP did not solve at c = " + ratToString(c);
            return;
        }
        out[gi] = {c, base + res.optimum};
    });
    for (const auto& e : errors)
        if (!e.empty()) throw std::runtime_error(e);
    return out;
}

namespace {

std::string dec17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

CloningEmission cloning(int q, int d, unsigned seed) {
    if (q != 3 || (d != 2 && d != 3))
        throw std::invalid_argument("cloning: supported parameters are q = 3, d in {2, 3}");

    CloningEmission em;
    em.q = q;
    em.d = d;
    em.seed = seed;
    // The d = 3 example uses the normalized Choi matrix (trace 1); d = 2 the
    // unnormalized one (trace d).
    em.choiScale = d == 3 ? Rat(3) : Rat(1);
    em.traceRhs = Rat(d) / em.choiScale;

    IdempotentSet gt = canonicalIdempotents(1, q, d);
    em.frame = buildGtFrame(gt, seed);
    const GtFrame& fr = em.frame;

    // Emitted block order: by block size ascending, then m descending.
    std::vector<std::size_t> order(fr.leaves.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        std::size_t da = fr.rowsOfLeaf[a].size(), db = fr.rowsOfLeaf[b].size();
        if (da != db) return da < db;
        return fr.mLambda[a] > fr.mLambda[b];
    });
    em.blockLeafIndex = order;
    for (std::size_t l : order) {
        em.leaves.push_back(fr.leaves[l]);
        em.blockSizes.push_back(static_cast<int>(fr.rowsOfLeaf[l].size()));
        em.mValues.push_back(fr.mLambda[l]);
    }

    // Frame element preimages, unnormalized: E(i,j) ~ eps_i1 G ... eps_1j with
    // psi(E(i,j)) = s_i s_j |i><j| in block lambda.
    auto frameElement = [&](std::size_t leaf, int i, int j) {
        const auto& rows = fr.rowsOfLeaf[leaf];
        if (i == 0 && j == 0) return fr.gt.rows[rows[0]];
        if (i == 0) return fr.up[leaf][j];
        if (j == 0) return fr.down[leaf][i];
        return mul(fr.down[leaf][i], fr.up[leaf][j]);
    };

    // Marginal i' traces out the other two output registers.
    const Diagram idDiag = identity(1, 1);
    const Diagram barDiag = contraction(1, 1);
    em.marginalSigma.assign(3, {});
    em.marginalId.assign(3, {});
    for (int mi = 0; mi < 3; ++mi) {
        std::set<int> S;
        for (int out = 2; out <= 4; ++out)
            if (out != 2 + mi) S.insert(out);
        for (std::size_t b = 0; b < order.size(); ++b) {
            std::size_t leaf = order[b];
            int dl = em.blockSizes[b];
            std::vector<std::vector<Rat>> sig(dl, std::vector<Rat>(dl, Rat(0)));
            std::vector<std::vector<Rat>> idc(dl, std::vector<Rat>(dl, Rat(0)));
            for (int i = 0; i < dl; ++i)
                for (int j = 0; j < dl; ++j) {
                    AlgebraElement t = elementPartialTrace(frameElement(leaf, i, j), S);
                    sig[i][j] = t.coeff(barDiag) * em.choiScale;
                    idc[i][j] = t.coeff(idDiag) * em.choiScale;
                }
            em.marginalSigma[mi].push_back(std::move(sig));
            em.marginalId[mi].push_back(std::move(idc));
        }
    }

    // SDPA sparse emission. Variables: upper-triangle block entries in
    // emitted order, then p1, p2, p3. Constraint rows are encoded as paired
    // diagonal entries (>= and <=).
    struct Var {
        std::size_t block;
        int i, j;
    };
    std::vector<Var> vars;
    for (std::size_t b = 0; b < order.size(); ++b)
        for (int i = 0; i < em.blockSizes[b]; ++i)
            for (int j = i; j < em.blockSizes[b]; ++j) vars.push_back({b, i, j});
    const std::size_t nBlockVars = vars.size();
    const std::size_t nVars = nBlockVars + 3;

    struct EqRow {
        std::vector<std::pair<std::size_t, double>> coeffs;  // var -> value
        double rhs;
    };
    std::vector<EqRow> eqRows;

    auto sNorm = [&](std::size_t block, int i) {
        return std::sqrt(fr.sSquared[em.blockLeafIndex[block]][i].get_d());
    };

    // Trace equality.
    {
        EqRow row;
        for (std::size_t v = 0; v < nBlockVars; ++v)
            if (vars[v].i == vars[v].j)
                row.coeffs.emplace_back(v, em.mValues[vars[v].block].get_d());
        row.rhs = em.traceRhs.get_d();
        eqRows.push_back(std::move(row));
    }
    // Marginal rows: sigma-bar coefficient equals p_i; identity coefficient
    // consistency d * a + p_i = 1.
    for (int mi = 0; mi < 3; ++mi) {
        EqRow sigRow, idRow;
        for (std::size_t v = 0; v < nBlockVars; ++v) {
            const Var& w = vars[v];
            double norm = sNorm(w.block, w.i) * sNorm(w.block, w.j);
            double s = em.marginalSigma[mi][w.block][w.i][w.j].get_d() / norm;
            double a = em.marginalId[mi][w.block][w.i][w.j].get_d() / norm;
            if (w.i != w.j) {
                s += em.marginalSigma[mi][w.block][w.j][w.i].get_d() / norm;
                a += em.marginalId[mi][w.block][w.j][w.i].get_d() / norm;
            }
            if (s != 0.0) sigRow.coeffs.emplace_back(v, s);
            if (a != 0.0) idRow.coeffs.emplace_back(v, d * a);
        }
        sigRow.coeffs.emplace_back(nBlockVars + mi, -1.0);
        sigRow.rhs = 0.0;
        idRow.coeffs.emplace_back(nBlockVars + mi, 1.0);
        idRow.rhs = 1.0;
        eqRows.push_back(std::move(sigRow));
        eqRows.push_back(std::move(idRow));
    }

    std::ostringstream os;
    os << "* asymmetric 1->" << q << " cloning, d = " << d << ", seed = " << seed << "\n";
    os << "* variables: ";
    for (std::size_t v = 0; v < nBlockVars; ++v)
        os << 'X' << vars[v].block + 1 << '_' << vars[v].i + 1 << vars[v].j + 1
           << (v + 1 < nVars ? " " : "");
    os << "p1 p2 p3\n";
    os << "* trace constraint rhs = " << ratToString(em.traceRhs)
       << ", Choi scale = " << ratToString(em.choiScale) << "\n";
    os << nVars << " = mDIM\n";
    os << em.blockSizes.size() + 1 << " = nBLOCK\n";
    for (int s : em.blockSizes) os << s << ' ';
    os << -static_cast<long>(2 * eqRows.size()) << "\n";
    for (std::size_t v = 0; v < nVars; ++v) os << "0 ";
    os << '\n';
    // PSD block entries.
    for (std::size_t v = 0; v < nBlockVars; ++v)
        os << v + 1 << ' ' << vars[v].block + 1 << ' ' << vars[v].i + 1 << ' ' << vars[v].j + 1
           << " 1\n";
    // Equality rows as paired diagonal entries in the last block.
    const std::size_t eqBlock = em.blockSizes.size() + 1;
    for (std::size_t r = 0; r < eqRows.size(); ++r) {
        const auto& row = eqRows[r];
        std::size_t pos1 = 2 * r + 1, pos2 = 2 * r + 2;
        for (const auto& [v, val] : row.coeffs) {
            os << v + 1 << ' ' << eqBlock << ' ' << pos1 << ' ' << pos1 << ' ' << dec17(val)
               << '\n';
            os << v + 1 << ' ' << eqBlock << ' ' << pos2 << ' ' << pos2 << ' ' << dec17(-val)
               << '\n';
        }
        if (row.rhs != 0.0) {
            os << "0 " << eqBlock << ' ' << pos1 << ' ' << pos1 << ' ' << dec17(row.rhs) << '\n';
            os << "0 " << eqBlock << ' ' << pos2 << ' ' << pos2 << ' ' << dec17(-row.rhs) << '\n';
        }
    }
    em.sdpaText = os.str();

    // Exact sidecar.
    json j;
    j["q"] = q;
    j["d"] = d;
    j["seed"] = seed;
    j["choiScale"] = ratToString(em.choiScale);
    j["traceRhs"] = ratToString(em.traceRhs);
    j["blocks"] = json::array();
    for (std::size_t b = 0; b < order.size(); ++b) {
        json jb;
        jb["leaf"] = em.leaves[b].str();
        jb["size"] = em.blockSizes[b];
        jb["m"] = ratToString(em.mValues[b]);
        json s2 = json::array();
        for (const auto& s : fr.sSquared[em.blockLeafIndex[b]]) s2.push_back(ratToString(s));
        jb["sSquared"] = s2;
        j["blocks"].push_back(jb);
    }
    auto tableOut = [&](const std::vector<std::vector<std::vector<std::vector<Rat>>>>& tbl) {
        json out = json::array();
        for (int mi = 0; mi < 3; ++mi) {
            json jm = json::array();
            for (std::size_t b = 0; b < tbl[mi].size(); ++b) {
                json jb = json::array();
                for (const auto& rowv : tbl[mi][b]) {
                    json jr = json::array();
                    for (const auto& x : rowv) jr.push_back(ratToString(x));
                    jb.push_back(jr);
                }
                jm.push_back(jb);
            }
            out.push_back(jm);
        }
        return out;
    };
    j["marginalSigma"] = tableOut(em.marginalSigma);
    j["marginalId"] = tableOut(em.marginalId);
    em.jsonText = j.dump(2);
    return em;
}

VerifyReport verifyIdempotentIdentities(int p, int q, int d) {
    VerifyReport rep;
    const int n = p + q;
    const bool faithful = d >= n;
    IdempotentSet set = canonicalIdempotents(p, q, d);
    const std::size_t m = set.rows.size();
    const AlgebraElement one = AlgebraElement::unit(p, q, d);

    auto isZero = [&](const AlgebraElement& e) {
        if (faithful) return e.isZero();
        return psiElement(e).isZero();
    };
    auto addFailure = [&](std::vector<std::string>& fails, const std::string& msg) {
        fails.push_back(msg);
    };

    // Resolution of unity.
    {
        ++rep.checksRun;
        if (!isZero(set.sum() - one)) addFailure(rep.failures, "sum of rows != identity");
    }

    // Pairwise products, in parallel over flattened pairs.
    {
        std::vector<std::string> fails(m * m);
        parallelFor(m * m, [&](std::size_t idx) {
            std::size_t i = idx / m, j = idx % m;
            AlgebraElement prod = mul(set.rows[i], set.rows[j]);
            if (i == j) prod -= set.rows[i];
            if (!isZero(prod)) {
                std::ostringstream os;
                os << "eps_" << i << " eps_" << j << " != " << (i == j ? "eps_i" : "0");
                fails[idx] = os.str();
            }
        });
        rep.checksRun += static_cast<int>(m * m);
        for (auto& f : fails)
            if (!f.empty()) rep.failures.push_back(std::move(f));
    }

    // Jucys-Murphy eigenvalues and the additive content identity.
    {
        std::vector<AlgebraElement> jms;
        for (int k = 1; k <= n; ++k) jms.push_back(jmElement(k, p, q, d));
        std::vector<std::string> fails(m);
        parallelFor(m, [&](std::size_t t) {
            std::ostringstream os;
            AlgebraElement jSum(p, q, d);
            Rat cSum = 0;
            for (int k = 0; k < n; ++k) {
                const Rat& c = set.labels[t].contents[k];
                if (!isZero(mul(jms[k], set.rows[t]) - set.rows[t].scaled(c)))
                    os << "J_" << k + 1 << " eigenvalue failed on row " << t << "; ";
                jSum += jms[k];
                cSum += c;
            }
            const auto& leaf = set.labels[t].leaf;
            Rat expected = Rat(contentOf(leaf.left) + contentOf(leaf.right)) +
                           Rat(d) * Rat(sizeOf(leaf.right));
            if (cSum != expected) os << "content sum mismatch on row " << t << "; ";
            if (!isZero(mul(jSum, set.rows[t]) - set.rows[t].scaled(expected)))
                os << "additive content identity failed on row " << t << "; ";
            fails[t] = os.str();
        });
        rep.checksRun += static_cast<int>(m) * (n + 2);
        for (auto& f : fails)
            if (!f.empty()) rep.failures.push_back(std::move(f));
    }

    // Self-adjointness (exact only in the faithful regime).
    if (faithful) {
        for (std::size_t t = 0; t < m; ++t) {
            ++rep.checksRun;
            if (!(adjoint(set.rows[t]) == set.rows[t])) {
                std::ostringstream os;
                os << "row " << t << " is not self-adjoint";
                rep.failures.push_back(os.str());
            }
        }
    }
    return rep;
}

}  // namespace wbsdp

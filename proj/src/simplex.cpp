#include "wbsdp/simplex.hpp"

#include <stdexcept>

namespace wbsdp {

std::string lpStatusName(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "Optimal";
        case LpStatus::Infeasible: return "Infeasible";
        case LpStatus::Unbounded: return "Unbounded";
    }
    return "?";
}

namespace {

// Dense tableau over exact rationals.
//   T has m+1 rows, cols+1 columns; last row is the objective (maximize),
//   last column is the rhs. basis[r] = column basic in row r.
struct Tableau {
    std::size_t m = 0, cols = 0;
    std::vector<std::vector<Rat>> T;
    std::vector<std::size_t> basis;

    void pivot(std::size_t pr, std::size_t pc) {
        Rat inv = Rat(1) / T[pr][pc];
        for (auto& v : T[pr]) v *= inv;
        for (std::size_t r = 0; r <= m; ++r) {
            if (r == pr) continue;
            if (T[r][pc] == 0) continue;
            Rat f = T[r][pc];
            for (std::size_t c = 0; c <= cols; ++c) T[r][c] -= f * T[pr][c];
        }
        basis[pr] = pc;
    }

    // Bland's rule: entering = smallest-index column with positive reduced
    // cost; leaving = min ratio, ties by smallest basis column index.
    // Returns Optimal or Unbounded.
    LpStatus run(const std::vector<char>& usable) {
        for (;;) {
            std::size_t pc = cols;
            for (std::size_t c = 0; c < cols; ++c) {
                if (!usable[c]) continue;
                if (T[m][c] > 0) {
                    pc = c;
                    break;
                }
            }
            if (pc == cols) return LpStatus::Optimal;
            std::size_t pr = m;
            Rat best;
            for (std::size_t r = 0; r < m; ++r) {
                if (T[r][pc] <= 0) continue;
                Rat ratio = T[r][cols] / T[r][pc];
                if (pr == m || ratio < best || (ratio == best && basis[r] < basis[pr])) {
                    pr = r;
                    best = ratio;
                }
            }
            if (pr == m) return LpStatus::Unbounded;
            pivot(pr, pc);
        }
    }
};

}  // namespace

SimplexResult solveSimplex(const SimplexProblem& problem, std::size_t scaleBound) {
    const std::size_t nFree = problem.numVars - problem.numNonneg;
    const std::size_t nStruct = problem.numNonneg + 2 * nFree;  // free vars split
    const std::size_t mIneq = problem.ineqA.size();
    const std::size_t mEq = problem.eqA.size();
    const std::size_t m = mIneq + mEq;
    if (nStruct > scaleBound || m > scaleBound)
        throw std::invalid_argument(
            "solveSimplex: problem exceeds the desk-scale bound; emit the LP instead");

    auto structCoeff = [&](const std::vector<Rat>& row, std::size_t c) -> Rat {
        if (c < problem.numNonneg) return row[c];
        std::size_t f = (c - problem.numNonneg) / 2;
        Rat v = row[problem.numNonneg + f];
        return (c - problem.numNonneg) % 2 == 0 ? v : -v;
    };

    // Columns: structural | slack (one per inequality) | artificial (per row).
    const std::size_t slack0 = nStruct;
    const std::size_t art0 = nStruct + mIneq;
    const std::size_t cols = nStruct + mIneq + m;

    Tableau tab;
    tab.m = m;
    tab.cols = cols;
    tab.T.assign(m + 1, std::vector<Rat>(cols + 1, Rat(0)));
    tab.basis.assign(m, 0);

    for (std::size_t r = 0; r < m; ++r) {
        const bool isIneq = r < mIneq;
        const auto& row = isIneq ? problem.ineqA[r] : problem.eqA[r - mIneq];
        const Rat& rhs = isIneq ? problem.ineqB[r] : problem.eqB[r - mIneq];
        for (std::size_t c = 0; c < nStruct; ++c) tab.T[r][c] = structCoeff(row, c);
        if (isIneq) tab.T[r][slack0 + r] = 1;
        tab.T[r][cols] = rhs;
        if (tab.T[r][cols] < 0)
            for (std::size_t c = 0; c <= cols; ++c) tab.T[r][c] = -tab.T[r][c];
    }

    // Initial basis: slack where possible, artificial otherwise.
    std::vector<char> artUsed(m, 0);
    for (std::size_t r = 0; r < m; ++r) {
        if (r < mIneq && tab.T[r][slack0 + r] == 1) {
            tab.basis[r] = slack0 + r;
        } else {
            tab.T[r][art0 + r] = 1;
            tab.basis[r] = art0 + r;
            artUsed[r] = 1;
        }
    }

    // Artificial columns never re-enter; entering candidates are structural
    // and slack columns only.
    std::vector<char> usableNoArt(cols, 1);
    for (std::size_t r = 0; r < m; ++r) usableNoArt[art0 + r] = 0;

    bool needPhase1 = false;
    for (std::size_t r = 0; r < m; ++r) needPhase1 |= artUsed[r] != 0;

    if (needPhase1) {
        // Phase 1: maximize -sum(artificials). Objective row convention:
        // T[m][c] is the reduced cost and T[m][cols] = -objective value.
        for (std::size_t c = 0; c <= cols; ++c) tab.T[m][c] = 0;
        for (std::size_t r = 0; r < m; ++r)
            if (artUsed[r]) tab.T[m][art0 + r] = -1;
        for (std::size_t r = 0; r < m; ++r) {
            if (!artUsed[r]) continue;
            for (std::size_t c = 0; c <= cols; ++c) tab.T[m][c] += tab.T[r][c];
        }
        LpStatus st = tab.run(usableNoArt);
        (void)st;  // phase 1 cannot be unbounded: objective bounded by 0
        if (tab.T[m][cols] != 0) return {LpStatus::Infeasible, Rat(0), {}};
        // Drive leftover basic artificials out or drop redundant rows.
        for (std::size_t r = 0; r < m; ++r) {
            if (tab.basis[r] < art0) continue;
            std::size_t pc = cols;
            for (std::size_t c = 0; c < art0; ++c)
                if (usableNoArt[c] && tab.T[r][c] != 0) {
                    pc = c;
                    break;
                }
            if (pc != cols) {
                tab.pivot(r, pc);
            } else {
                // Redundant constraint: the row is zero on structural columns.
                for (std::size_t c = 0; c <= cols; ++c) tab.T[r][c] = 0;
            }
        }
    }

    // Phase 2 objective.
    for (std::size_t c = 0; c <= cols; ++c) tab.T[m][c] = 0;
    for (std::size_t c = 0; c < nStruct; ++c) tab.T[m][c] = structCoeff(problem.objective, c);
    // Price out the current basis.
    for (std::size_t r = 0; r < m; ++r) {
        std::size_t bc = tab.basis[r];
        if (tab.T[m][bc] == 0) continue;
        Rat f = tab.T[m][bc];
        for (std::size_t c = 0; c <= cols; ++c) tab.T[m][c] -= f * tab.T[r][c];
    }

    LpStatus st = tab.run(usableNoArt);
    if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, Rat(0), {}};

    SimplexResult res;
    res.status = LpStatus::Optimal;
    res.optimum = -tab.T[m][cols];
    std::vector<Rat> z(nStruct, Rat(0));
    for (std::size_t r = 0; r < m; ++r)
        if (tab.basis[r] < nStruct) z[tab.basis[r]] = tab.T[r][cols];
    res.solution.assign(problem.numVars, Rat(0));
    for (std::size_t c = 0; c < problem.numNonneg; ++c) res.solution[c] = z[c];
    for (std::size_t f = 0; f < nFree; ++f)
        res.solution[problem.numNonneg + f] =
            z[problem.numNonneg + 2 * f] - z[problem.numNonneg + 2 * f + 1];
    return res;
}

}  // namespace wbsdp

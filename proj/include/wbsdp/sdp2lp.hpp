#pragma once

#include <set>
#include <string>
#include <vector>

#include "wbsdp/idempotents.hpp"
#include "wbsdp/simplex.hpp"

namespace wbsdp {

// One term of a sparse constant matrix: either a diagram or an elementary
// rank-1 matrix |ket><bra|, both with a rational coefficient.
struct MatrixTerm {
    bool isDiagram = true;
    Diagram diagram;
    std::vector<int> ket;  // labels in [1, d], length p+q
    std::vector<int> bra;
    Rat coeff;
};

using MatrixExpr = std::vector<MatrixTerm>;

struct DiagramTerm {
    Diagram diagram;
    Rat coeff;
};

struct InequalityConstraint {
    MatrixExpr A;
    Rat b;
    std::vector<Rat> extraCoeffs;  // per extra scalar: Tr(A X) <= sum a_m x_m + b
};

struct PartialTraceConstraint {
    std::set<int> S;              // 1-based positions
    std::vector<DiagramTerm> D;   // combination of residual diagrams
};

struct ExtraScalar {
    std::string name;
    Rat objectiveCoeff;
};

struct SdpSpec {
    int p = 0, q = 0, d = 2;
    Symmetry symmetry = Symmetry::GelfandTsetlin;
    MatrixExpr objective;
    std::vector<InequalityConstraint> inequalities;
    std::vector<PartialTraceConstraint> partialTraces;
    std::vector<ExtraScalar> extraScalars;
};

// Parses and validates the JSON document (schema in the README). Throws
// std::invalid_argument with a descriptive message on any violation,
// including the d >= p+q-min|S_k| kernel restriction.
SdpSpec parseSpec(const std::string& jsonText);
std::string specToJson(const SdpSpec& spec);

// Tr(term * psi(sigma)) evaluated diagrammatically / by delta products.
Rat traceAgainst(const MatrixTerm& term, const Diagram& sigma, int d);
Rat traceExprAgainst(const MatrixExpr& expr, const Diagram& sigma, int d);

struct LpProblem {
    std::size_t numIdempotentVars = 0;  // v_i >= 0
    std::size_t numExtraVars = 0;       // free scalars, appended after v
    std::vector<std::string> varNames;
    std::vector<Rat> objective;
    std::vector<std::vector<Rat>> ineqA;
    std::vector<Rat> ineqB;
    std::vector<std::vector<Rat>> eqA;
    std::vector<Rat> eqB;

    std::size_t numVars() const { return numIdempotentVars + numExtraVars; }
    std::size_t constraintCount() const {
        return ineqA.size() + eqA.size() + numIdempotentVars;
    }
};

// The SDP-to-LP conversion: evaluates every trace diagrammatically against
// the idempotent rows and assembles the equivalent LP.
LpProblem convert(const SdpSpec& spec, const IdempotentSet& idemp);

SimplexResult solveLp(const LpProblem& lp);

enum class LpFormat { Text, Json };

// CPLEX-LP-style text (rationals as decimals, 17 significant digits) or a
// JSON dump with exact rationals. The JSON form round-trips.
std::string emitLp(const LpProblem& lp, LpFormat format);
LpProblem parseLpJson(const std::string& jsonText);

}  // namespace wbsdp

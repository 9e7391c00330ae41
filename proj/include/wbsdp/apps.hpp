#pragma once

#include <string>
#include <vector>

#include "wbsdp/matrep.hpp"
#include "wbsdp/sdp2lp.hpp"

namespace wbsdp {

// Worst-case fidelity of the optimal unitary-equivariant quantum majority
// vote on 3 inputs. For d >= 3 the trace-preservation constraint is converted
// diagrammatically; at d = 2 that conversion is outside the kernel
// restriction and the equality is imposed through the explicit matrix oracle.
Rat majorityFidelity(int d);

// Builds the d >= 3 majority SDP spec (the shipped fixture format).
SdpSpec majoritySpec(int d);

// Optimal probability of deciding whether the largest eigenvalue of a random
// one-qubit mixed state (k = 2 Wishart) is below or above c, from n copies.
// Exact rationals in and out; c must lie in [1/2, 1].
std::vector<std::pair<Rat, Rat>> eigmax(int n, const std::vector<Rat>& cGrid);

// Asymmetric 1 -> q cloning as an SDP over Gelfand-Tsetlin blocks, emitted in
// SDPA sparse format: per-leaf PSD blocks, the trace equality, and the three
// marginal-fidelity functionals parameterized by (p1, p2, p3).
struct CloningEmission {
    int q = 0, d = 0;
    unsigned seed = 0;
    Rat choiScale;                    // emitted variables represent X / scale
    GtFrame frame;
    std::vector<std::size_t> blockLeafIndex;  // emitted block -> frame leaf
    std::vector<Bipartition> leaves;          // emitted order
    std::vector<int> blockSizes;
    std::vector<Rat> mValues;
    Rat traceRhs;
    // Rational coefficient tables per marginal and emitted block, before the
    // irrational 1/(s_i s_j) frame normalization.
    std::vector<std::vector<std::vector<std::vector<Rat>>>> marginalSigma;
    std::vector<std::vector<std::vector<std::vector<Rat>>>> marginalId;
    std::string sdpaText;
    std::string jsonText;
};

// Supported: q = 3, d in {2, 3}.
CloningEmission cloning(int q, int d, unsigned seed = 23);

// Identity suite shared by the verify subcommand and the acceptance tests:
// pairwise orthogonality/idempotency, resolution of unity, Jucys-Murphy
// eigenvalues, the additive content identity, and self-adjointness. Exact
// element identities when d >= p+q; exact matrix identities via psi below.
struct VerifyReport {
    std::vector<std::string> failures;
    int checksRun = 0;
    bool ok() const { return failures.empty(); }
};

VerifyReport verifyIdempotentIdentities(int p, int q, int d);

}  // namespace wbsdp

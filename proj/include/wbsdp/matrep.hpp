#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wbsdp/algebra.hpp"
#include "wbsdp/idempotents.hpp"

namespace wbsdp {

// Sparse exact-rational matrix with entries sorted by key = row * dim + col.
// Rows carry top-row labels and columns bottom-row labels (big-endian
// multi-indices), which makes psi a homomorphism for diagram concatenation.
struct SparseMatrix {
    std::uint64_t dim = 0;
    std::vector<std::pair<std::uint64_t, Rat>> entries;  // sorted, nonzero

    bool isZero() const { return entries.empty(); }
    bool operator==(const SparseMatrix& o) const { return dim == o.dim && entries == o.entries; }
    Rat trace() const;
};

std::uint64_t psiDimension(int p, int q, int d, std::uint64_t memoryBound = 4096);

SparseMatrix psi(const Diagram& dg, int d, std::uint64_t memoryBound = 4096);
SparseMatrix psiElement(const AlgebraElement& a, std::uint64_t memoryBound = 4096);
SparseMatrix psiElementSerial(const AlgebraElement& a, std::uint64_t memoryBound = 4096);

SparseMatrix spAdd(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix spScale(const SparseMatrix& a, const Rat& c);
SparseMatrix spMul(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix spPartialTrace(const SparseMatrix& m, int n, int d, const std::set<int>& S);

struct TraceLiftReport {
    int samples = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Random diagrams against Props on full and partial trace lifting.
TraceLiftReport verifyTraceLift(int samples, int p, int q, int d, unsigned seed = 17);

// Max Frobenius norm of [psi(e), U^p x Ubar^q] over Haar samples.
double verifyCommutant(const AlgebraElement& e, int trials, unsigned seed = 17);

struct BlockData {
    Bipartition leaf;
    int dLambda = 0;
    Rat mLambda;
    std::vector<Rat> sSquared;  // transition normalizations squared, s_1^2 = 1
    // exact[i][j] = Tr(U_1i x U_j1) / m where psi(U_1i) = s_i |1><i| in block
    // lambda, so exact[i][j] = s_i s_j B_ij stays rational.
    std::vector<std::vector<Rat>> exact;
    std::vector<std::vector<double>> entries;  // B_ij = exact_ij / (s_i s_j)
};

// Frame of Gelfand-Tsetlin transition elements for one (p, q, d): the
// unnormalized eps_1i, eps_i1 built from a random self-adjoint probe.
struct GtFrame {
    int p = 0, q = 0, d = 0;
    unsigned seed = 0;
    IdempotentSet gt;                        // canonical rows
    std::vector<Bipartition> leaves;
    std::vector<std::vector<std::size_t>> rowsOfLeaf;  // GT row indices per leaf
    std::vector<Rat> mLambda;
    std::vector<std::vector<AlgebraElement>> up;    // up[l][i]   ~ eps_1 G eps_i (unnormalized)
    std::vector<std::vector<AlgebraElement>> down;  // down[l][i] ~ eps_i G eps_1
    std::vector<std::vector<Rat>> sSquared;         // per leaf, per path
};

GtFrame buildGtFrame(const IdempotentSet& gtSet, unsigned seed = 23, int retryCap = 5);

// Diagrammatic block extraction of a self-adjoint element.
std::vector<BlockData> extractBlocks(const AlgebraElement& x, const GtFrame& frame);
std::vector<BlockData> extractBlocks(const AlgebraElement& x, const IdempotentSet& gtSet,
                                     unsigned seed = 23);

// dim A^d_{p,q} = sum of d_lambda^2 over leaves of family A(d).
Int algebraDimension(int p, int q, int d);

// Rank of span{psi(sigma_j)} via rational elimination; the oracle route.
int oracleAlgebraRank(int p, int q, int d, std::uint64_t memoryBound = 4096);

std::string blocksToJson(const std::vector<BlockData>& blocks);

}  // namespace wbsdp

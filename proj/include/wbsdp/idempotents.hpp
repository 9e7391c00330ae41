#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wbsdp/algebra.hpp"
#include "wbsdp/lattice.hpp"

namespace wbsdp {

enum class Symmetry { FullBrauer, GelfandTsetlin, SpSq };

std::string symmetryName(Symmetry s);
Symmetry symmetryFromName(const std::string& name);

struct IdempotentLabel {
    Bipartition leaf;
    std::vector<int> pathVertices;          // GT rows
    std::vector<Rat> contents;              // GT rows: edge contents along the path
    std::optional<Bipartition> lastEdgeFrom;  // SpSq rows: T[p+q-1]
    std::string str() const;
};

// Rows of idempotent preimages over the canonical diagram basis: the alpha
// coefficient matrix of the pre-computation step, kept as sparse elements.
struct IdempotentSet {
    int p = 0;
    int q = 0;
    int d = 0;
    Symmetry symmetry = Symmetry::GelfandTsetlin;
    std::vector<IdempotentLabel> labels;
    std::vector<AlgebraElement> rows;

    std::size_t size() const { return rows.size(); }
    AlgebraElement sum() const;
    // Dense n x (p+q)! view over the canonical diagram order.
    std::vector<std::vector<Rat>> alphaMatrix() const;
};

// Jucys-Murphy element J_k of the tower ending at B^delta_{p,q}:
// 0 for k = 1; sum of sigma_{i,k} for 2 <= k <= p; for k > p the wall branch
// with contractions subtracted and delta added.
AlgebraElement jmElement(int k, int p, int q, int delta);

// Interpolation recursion over the family A(d): one row per leaf.
IdempotentSet centralIdempotents(int p, int q, int d);

// One row per root-leaf path of family A(d), in lexicographic path order.
IdempotentSet canonicalIdempotents(int p, int q, int d);

// Groups canonical rows by their last edge; valid for min(p,q) = 1 only.
// For p = 1 the reversed tower is used, realized via the mirror isomorphism.
IdempotentSet lastEdgeAnsatz(int p, int q, int d);

IdempotentSet idempotentsFor(int p, int q, int d, Symmetry symmetry);

// Cache file: header + row-major rational triples (rowIndex, diagramIndex,
// num/den). The cache is the input-independent pre-computation.
void saveAlphaCache(const IdempotentSet& set, const std::string& path);
IdempotentSet loadAlphaCache(const std::string& path);
std::string alphaCacheFileName(int p, int q, int d, Symmetry symmetry);

}  // namespace wbsdp

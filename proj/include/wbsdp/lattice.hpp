#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wbsdp/rational.hpp"

namespace wbsdp {

// Weakly decreasing list of positive integers; empty = the zero partition.
struct Partition {
    std::vector<int> rows;

    int size() const;
    int length() const { return static_cast<int>(rows.size()); }
    bool operator==(const Partition& o) const { return rows == o.rows; }
    bool operator<(const Partition& o) const { return rows < o.rows; }
    std::string str() const;
};

bool isValidPartition(const Partition& p);
int contentOf(const Partition& p);  // sum of j - i over cells (i, j)
int sizeOf(const Partition& p);
Partition transposePartition(const Partition& p);
std::vector<Partition> partitionsOf(int n, int maxLength = -1);
// Hook-length formula for the dimension of the S_n irrep labeled by p.
Int symmetricGroupIrrepDim(const Partition& p);

// Positions (1-based row, col) where a cell can be added / removed keeping a
// valid partition.
std::vector<std::pair<int, int>> addableCells(const Partition& p);
std::vector<std::pair<int, int>> removableCells(const Partition& p);
Partition withCellAdded(const Partition& p, int row);
Partition withCellRemoved(const Partition& p, int row);

struct Bipartition {
    Partition left;
    Partition right;

    bool operator==(const Bipartition& o) const { return left == o.left && right == o.right; }
    bool operator<(const Bipartition& o) const;
    std::string str() const;
};

enum class Family { B, A };

struct BratteliEdge {
    int from = 0;  // vertex index at level k-1
    int to = 0;    // vertex index at level k
    Rat content;
};

// Leveled DAG of the tower C = B_0 -> B_1 -> ... -> B_{p+q} with the wall
// crossing after level p. Family A(d) drops vertices with
// len(left) + len(right) > d together with their incident edges.
struct BratteliGraph {
    int p = 0;
    int q = 0;
    Family family = Family::B;
    int d = 0;  // loop parameter; also the truncation bound for family A
    std::vector<std::vector<Bipartition>> levels;     // levels[0..p+q]
    std::vector<std::vector<BratteliEdge>> edges;     // edges[k]: level k-1 -> k

    int nodeCount() const;
    int levelCount() const { return static_cast<int>(levels.size()); }
    const std::vector<Bipartition>& leaves() const { return levels.back(); }
    int vertexIndex(int level, const Bipartition& v) const;  // -1 when absent
};

struct Path {
    std::vector<int> vertexIndices;  // length p+q+1
    Bipartition leaf;
    std::vector<Rat> contents;       // length p+q

    bool operator==(const Path& o) const { return vertexIndices == o.vertexIndices; }
};

// Content of a single Bratteli move at level k (1-based): j-i for a left add
// (k <= p), i-j for a left removal (k > p), j-i+delta for a right add (k > p).
// Throws when from -> to is not a legal move at that level.
Rat edgeContent(const Bipartition& from, const Bipartition& to, int k, int p, int delta);

BratteliGraph buildBratteli(int p, int q, Family family, int d);

// All root-to-leaf paths in deterministic lexicographic order on vertex-index
// sequences; this order fixes the Gelfand-Tsetlin index globally.
std::vector<Path> enumeratePaths(const BratteliGraph& g, const Bipartition& leaf);
std::vector<Path> enumerateAllPaths(const BratteliGraph& g);

// Path count per leaf via dynamic programming (no enumeration).
Int pathCount(const BratteliGraph& g, const Bipartition& leaf);
std::vector<Int> pathCountsPerLeaf(const BratteliGraph& g);

std::string toDot(const BratteliGraph& g);
std::string leafDimensionsCsv(const BratteliGraph& g);

}  // namespace wbsdp

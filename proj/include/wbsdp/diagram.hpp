#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace wbsdp {

// A node of a walled Brauer diagram. Nodes are indexed 1..p+q in each row;
// the wall sits between positions p and p+1.
struct NodeId {
    enum class Row { Top, Bottom };
    Row row = Row::Top;
    int index = 1;  // 1-based
};

// Perfect matching on two rows of n nodes with no wall constraint. Internally
// nodes are 0-based: top i -> i, bottom i -> n+i.
struct Matching {
    int n = 0;
    std::vector<int> match;  // involution on [0, 2n)

    bool operator==(const Matching& o) const { return n == o.n && match == o.match; }
};

// A walled Brauer diagram: a perfect matching on 2(p+q) nodes where same-row
// pairs cross the wall and cross-row pairs stay on one side. Stored as an
// involution array, which doubles as the canonical form.
struct Diagram {
    int p = 0;
    int q = 0;
    std::vector<int> match;  // involution on [0, 2(p+q))

    int n() const { return p + q; }

    bool operator==(const Diagram& o) const {
        return p == o.p && q == o.q && match == o.match;
    }
    bool operator<(const Diagram& o) const {
        if (p != o.p) return p < o.p;
        if (q != o.q) return q < o.q;
        return match < o.match;
    }
};

// Node helpers (0-based internal ids).
inline int topNode(int i) { return i; }                 // i in [0, n)
inline int bottomNode(int i, int n) { return n + i; }   // i in [0, n)
inline bool isTop(int node, int n) { return node < n; }
inline int rowIndex(int node, int n) { return node < n ? node : node - n; }
inline int oppositeNode(int node, int n) { return node < n ? node + n : node - n; }

// Throws std::invalid_argument when the matching is not a walled diagram.
void validateDiagram(const Diagram& d);

Diagram makeDiagram(int p, int q, const std::vector<std::pair<int, int>>& pairs);

// Unit of the algebra: pairs top i with bottom i. p+q = 0 yields the empty
// diagram representing the scalar 1.
Diagram identity(int p, int q);

// Generator sigma_i swapping strands i and i+1; i = p is rejected.
Diagram transposition(int i, int p, int q);

// Generator sigma-bar_p contracting strands p and p+1 across the wall.
Diagram contraction(int p, int q);

// sigma_{i,k}: strands i and k swapped, identity elsewhere. Both on one side
// of the wall.
Diagram transpositionPair(int i, int k, int p, int q);

// sigma-bar_{i,k}: (T_i,T_k),(B_i,B_k) with i <= p < k.
Diagram contractionPair(int i, int k, int p, int q);

struct ComposeResult {
    Diagram diagram;
    int loops = 0;
};

// Stacks a above b (a's bottom row glued to b's top row) and erases closed
// loops. The algebra product is delta^loops times the returned diagram.
ComposeResult compose(const Diagram& a, const Diagram& b);

// Exchanges top and bottom nodes at positions > p. The result is a
// permutation matching of S_{p+q}, which generally leaves the walled class.
Matching partialTranspose(const Diagram& d);

// Inverse direction: builds the walled diagram whose partial transpose is the
// given permutation matching.
Diagram fromPartialTranspose(const Matching& m, int p, int q);

// Vertical flip (top row <-> bottom row); the diagrammatic adjoint.
Diagram verticalFlip(const Diagram& d);

// Left-right mirror: node i -> p+q+1-i in both rows, mapping B_{p,q} onto
// B_{q,p}. Used to realize the reversed tower for p = 1.
Diagram mirror(const Diagram& d);

// Number of loops formed when every top node is joined to the opposite
// bottom node. Tr(sigma) = delta^loops.
int traceLoops(const Diagram& d);

struct PartialTraceResult {
    int loops = 0;
    Diagram diagram;
};

// Joins top i to bottom i for i in S (1-based positions) and erases loops;
// remaining nodes are relabeled order-preservingly.
PartialTraceResult partialTrace(const Diagram& d, const std::set<int>& S);

// All (p+q)! diagrams as partial-transpose preimages of permutations taken in
// lexicographic one-line order. Position in this list is the canonical
// diagram index used by every coefficient matrix.
std::vector<Diagram> enumerateDiagrams(int p, int q, int maxNodes = 8);

// Index of d within enumerateDiagrams(p, q) without materializing the list.
std::size_t diagramRank(const Diagram& d);

std::string diagramToString(const Diagram& d);
Diagram diagramFromString(const std::string& s);

}  // namespace wbsdp

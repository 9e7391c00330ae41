#include "wbsdp/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace wbsdp {

int Partition::size() const {
    int s = 0;
    for (int r : rows) s += r;
    return s;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ',';
        os << rows[i];
    }
    os << ')';
    return os.str();
}

bool isValidPartition(const Partition& p) {
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        if (p.rows[i] < 1) return false;
        if (i && p.rows[i] > p.rows[i - 1]) return false;
    }
    return true;
}

int contentOf(const Partition& p) {
    int c = 0;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 1; j <= p.rows[i]; ++j) c += j - (i + 1);
    return c;
}

int sizeOf(const Partition& p) { return p.size(); }

Partition transposePartition(const Partition& p) {
    Partition t;
    if (p.rows.empty()) return t;
    t.rows.assign(p.rows[0], 0);
    for (int r : p.rows)
        for (int j = 0; j < r; ++j) ++t.rows[j];
    return t;
}

std::vector<Partition> partitionsOf(int n, int maxLength) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int maxPart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        if (maxLength >= 0 && cur.length() >= maxLength) return;
        for (int part = std::min(rest, maxPart); part >= 1; --part) {
            cur.rows.push_back(part);
            rec(rest - part, part);
            cur.rows.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

Int symmetricGroupIrrepDim(const Partition& p) {
    const int n = p.size();
    if (n == 0) return 1;
    Int nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    Partition t = transposePartition(p);
    Int hooks = 1;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.rows[i]; ++j)
            hooks *= (p.rows[i] - j) + (t.rows[j] - i) - 1;
    return nfact / hooks;
}

std::vector<std::pair<int, int>> addableCells(const Partition& p) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i <= p.length(); ++i) {
        int rowLen = i < p.length() ? p.rows[i] : 0;
        int above = i == 0 ? INT32_MAX : p.rows[i - 1];
        if (rowLen < above) out.emplace_back(i + 1, rowLen + 1);
        if (i == p.length()) break;
    }
    return out;
}

std::vector<std::pair<int, int>> removableCells(const Partition& p) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < p.length(); ++i) {
        int below = i + 1 < p.length() ? p.rows[i + 1] : 0;
        if (p.rows[i] > below) out.emplace_back(i + 1, p.rows[i]);
    }
    return out;
}

Partition withCellAdded(const Partition& p, int row) {
    Partition out = p;
    if (row == p.length() + 1)
        out.rows.push_back(1);
    else
        ++out.rows[row - 1];
    if (!isValidPartition(out)) throw std::invalid_argument("cell not addable");
    return out;
}

Partition withCellRemoved(const Partition& p, int row) {
    Partition out = p;
    if (row < 1 || row > p.length()) throw std::invalid_argument("cell not removable");
    --out.rows[row - 1];
    if (out.rows[row - 1] == 0) out.rows.erase(out.rows.begin() + (row - 1));
    if (!isValidPartition(out)) throw std::invalid_argument("cell not removable");
    return out;
}

bool Bipartition::operator<(const Bipartition& o) const {
    // Declared intra-level order: (size of left, left rows, right rows).
    int sl = left.size(), so = o.left.size();
    if (sl != so) return sl < so;
    if (!(left == o.left)) return left < o.left;
    return right < o.right;
}

std::string Bipartition::str() const { return left.str() + "|" + right.str(); }

int BratteliGraph::nodeCount() const {
    int c = 0;
    for (const auto& lvl : levels) c += static_cast<int>(lvl.size());
    return c;
}

int BratteliGraph::vertexIndex(int level, const Bipartition& v) const {
    const auto& lvl = levels[level];
    auto it = std::lower_bound(lvl.begin(), lvl.end(), v);
    if (it == lvl.end() || !(*it == v)) return -1;
    return static_cast<int>(it - lvl.begin());
}

Rat edgeContent(const Bipartition& from, const Bipartition& to, int k, int p, int delta) {
    if (k <= p) {
        // Left add.
        if (from.right == to.right && to.left.size() == from.left.size() + 1) {
            for (auto [i, j] : addableCells(from.left))
                if (withCellAdded(from.left, i) == to.left) return Rat(j - i);
        }
    } else {
        if (from.left == to.left && to.right.size() == from.right.size() + 1) {
            for (auto [i, j] : addableCells(from.right))
                if (withCellAdded(from.right, i) == to.right) return Rat(j - i + delta);
        }
        if (from.right == to.right && to.left.size() + 1 == from.left.size()) {
            for (auto [i, j] : removableCells(from.left))
                if (withCellRemoved(from.left, i) == to.left) return Rat(i - j);
        }
    }
    throw std::invalid_argument("edgeContent: not a legal Bratteli move at level " +
                                std::to_string(k));
}

BratteliGraph buildBratteli(int p, int q, Family family, int d) {
    if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("buildBratteli: bad (p,q)");
    if (family == Family::A && d < 1) throw std::invalid_argument("buildBratteli: bad d");
    BratteliGraph g;
    g.p = p;
    g.q = q;
    g.family = family;
    g.d = d;
    g.levels.resize(p + q + 1);
    g.edges.resize(p + q + 1);
    g.levels[0] = {Bipartition{}};

    auto keep = [&](const Bipartition& v) {
        if (family == Family::B) return true;
        return v.left.length() + v.right.length() <= d;
    };

    for (int k = 1; k <= p + q; ++k) {
        std::vector<Bipartition> next;
        for (const auto& v : g.levels[k - 1]) {
            if (k <= p) {
                for (auto [i, j] : addableCells(v.left)) {
                    Bipartition w{withCellAdded(v.left, i), v.right};
                    if (keep(w)) next.push_back(w);
                }
            } else {
                for (auto [i, j] : addableCells(v.right)) {
                    Bipartition w{v.left, withCellAdded(v.right, i)};
                    if (keep(w)) next.push_back(w);
                }
                for (auto [i, j] : removableCells(v.left)) {
                    Bipartition w{withCellRemoved(v.left, i), v.right};
                    if (keep(w)) next.push_back(w);
                }
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        g.levels[k] = next;
        for (int fi = 0; fi < static_cast<int>(g.levels[k - 1].size()); ++fi) {
            const auto& v = g.levels[k - 1][fi];
            auto tryEdge = [&](const Bipartition& w) {
                int ti = g.vertexIndex(k, w);
                if (ti < 0) return;
                g.edges[k].push_back({fi, ti, edgeContent(v, w, k, p, d)});
            };
            if (k <= p) {
                for (auto [i, j] : addableCells(v.left)) tryEdge({withCellAdded(v.left, i), v.right});
            } else {
                for (auto [i, j] : addableCells(v.right)) tryEdge({v.left, withCellAdded(v.right, i)});
                for (auto [i, j] : removableCells(v.left)) tryEdge({withCellRemoved(v.left, i), v.right});
            }
        }
        std::sort(g.edges[k].begin(), g.edges[k].end(), [](const BratteliEdge& a, const BratteliEdge& b) {
            if (a.from != b.from) return a.from < b.from;
            return a.to < b.to;
        });
    }
    return g;
}

std::vector<Path> enumeratePaths(const BratteliGraph& g, const Bipartition& leaf) {
    const int n = g.p + g.q;
    int leafIdx = g.vertexIndex(n, leaf);
    if (leafIdx < 0) throw std::invalid_argument("enumeratePaths: leaf absent");

    // Forward adjacency with contents, per level.
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> adj(n + 1);
    for (int k = 1; k <= n; ++k) {
        adj[k].assign(g.levels[k - 1].size(), {});
        for (const auto& e : g.edges[k]) adj[k][e.from].emplace_back(e.to, e.content);
    }

    std::vector<Path> out;
    Path cur;
    cur.vertexIndices.assign(n + 1, 0);
    cur.contents.assign(n, Rat(0));
    std::function<void(int, int)> rec = [&](int level, int vertex) {
        cur.vertexIndices[level] = vertex;
        if (level == n) {
            if (vertex == leafIdx) {
                cur.leaf = leaf;
                out.push_back(cur);
            }
            return;
        }
        for (const auto& [to, c] : adj[level + 1][vertex]) {
            cur.contents[level] = c;
            rec(level + 1, to);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<Path> enumerateAllPaths(const BratteliGraph& g) {
    std::vector<Path> out;
    for (const auto& leaf : g.leaves()) {
        auto part = enumeratePaths(g, leaf);
        out.insert(out.end(), part.begin(), part.end());
    }
    // Lexicographic on vertex-index sequences across all leaves.
    std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
        return a.vertexIndices < b.vertexIndices;
    });
    return out;
}

std::vector<Int> pathCountsPerLeaf(const BratteliGraph& g) {
    const int n = g.p + g.q;
    std::vector<Int> cur(1, 1);  // counts at level 0
    for (int k = 1; k <= n; ++k) {
        std::vector<Int> next(g.levels[k].size(), 0);
        for (const auto& e : g.edges[k]) next[e.to] += cur[e.from];
        cur = std::move(next);
    }
    return cur;
}

Int pathCount(const BratteliGraph& g, const Bipartition& leaf) {
    int idx = g.vertexIndex(g.p + g.q, leaf);
    if (idx < 0) throw std::invalid_argument("pathCount: leaf absent");
    return pathCountsPerLeaf(g)[idx];
}

std::string toDot(const BratteliGraph& g) {
    std::ostringstream os;
    os << "digraph bratteli {\n  rankdir=LR;\n";
    for (int k = 0; k < g.levelCount(); ++k)
        for (std::size_t i = 0; i < g.levels[k].size(); ++i)
            os << "  \"L" << k << '_' << i << "\" [label=\"" << g.levels[k][i].str() << "\"];\n";
    for (int k = 1; k < g.levelCount(); ++k)
        for (const auto& e : g.edges[k])
            os << "  \"L" << k - 1 << '_' << e.from << "\" -> \"L" << k << '_' << e.to
               << "\" [label=\"" << ratToString(e.content) << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string leafDimensionsCsv(const BratteliGraph& g) {
    std::ostringstream os;
    os << "leaf,d_lambda\n";
    auto counts = pathCountsPerLeaf(g);
    for (std::size_t i = 0; i < g.leaves().size(); ++i)
        os << '"' << g.leaves()[i].str() << "\"," << counts[i].get_str() << '\n';
    return os.str();
}

}  // namespace wbsdp

#include "wbsdp/idempotents.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "wbsdp/parallel.hpp"

namespace wbsdp {

std::string symmetryName(Symmetry s) {
    switch (s) {
        case Symmetry::FullBrauer: return "brauer";
        case Symmetry::GelfandTsetlin: return "gt";
        case Symmetry::SpSq: return "spq";
    }
    return "?";
}

Symmetry symmetryFromName(const std::string& name) {
    if (name == "brauer" || name == "full" || name == "fullbrauer") return Symmetry::FullBrauer;
    if (name == "gt" || name == "gelfand-tsetlin") return Symmetry::GelfandTsetlin;
    if (name == "spq" || name == "sp-sq") return Symmetry::SpSq;
    throw std::invalid_argument("unknown symmetry: " + name);
}

std::string IdempotentLabel::str() const {
    std::ostringstream os;
    os << leaf.str();
    if (!pathVertices.empty()) {
        os << " path=";
        for (std::size_t i = 0; i < pathVertices.size(); ++i) {
            if (i) os << '-';
            os << pathVertices[i];
        }
    }
    if (lastEdgeFrom) os << " via=" << lastEdgeFrom->str();
    return os.str();
}

AlgebraElement IdempotentSet::sum() const {
    AlgebraElement out(p, q, d);
    for (const auto& r : rows) out += r;
    return out;
}

std::vector<std::vector<Rat>> IdempotentSet::alphaMatrix() const {
    auto basis = enumerateDiagrams(p, q);
    std::map<Diagram, std::size_t> index;
    for (std::size_t j = 0; j < basis.size(); ++j) index.emplace(basis[j], j);
    std::vector<std::vector<Rat>> alpha(rows.size(), std::vector<Rat>(basis.size(), Rat(0)));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [dg, c] : rows[i].terms()) alpha[i][index.at(dg)] = c;
    return alpha;
}

AlgebraElement jmElement(int k, int p, int q, int delta) {
    const int n = p + q;
    if (k < 1 || k > n) throw std::invalid_argument("jmElement: k out of range");
    AlgebraElement out(p, q, delta);
    if (k <= p) {
        // J_1 = 0 falls out of the empty sum.
        for (int i = 1; i < k; ++i) out.addTerm(transpositionPair(i, k, p, q), 1);
        return out;
    }
    // Wall branch, which for p = 0 also covers k = 1: the first edge of a
    // barred-side tower carries content delta, so J_1 = delta there.
    for (int i = p + 1; i < k; ++i) out.addTerm(transpositionPair(i, k, p, q), 1);
    for (int i = 1; i <= p; ++i) out.addTerm(contractionPair(i, k, p, q), -1);
    out.addTerm(identity(p, q), delta);
    return out;
}

namespace {

// Multiplies e by the interpolating factor prod (J_k - r)/(target - r), with
// roots taken in increasing order. Factors are applied one by one so the
// sparse J side stays on the left of every product.
AlgebraElement applyInterpolation(const AlgebraElement& jk, std::vector<Rat> roots,
                                  const Rat& target, const AlgebraElement& e) {
    std::sort(roots.begin(), roots.end());
    AlgebraElement out = e;
    const AlgebraElement one = AlgebraElement::unit(e.p(), e.q(), e.delta());
    for (const Rat& r : roots) {
        if (r == target)
            throw std::domain_error("content collision in interpolating polynomial");
        AlgebraElement factor = (jk - one.scaled(r)).scaled(Rat(1) / (target - r));
        out = mul(factor, out);
    }
    return out;
}

// Outgoing contents at a vertex, used both for roots and the target.
std::vector<std::pair<int, Rat>> outgoingContents(const BratteliGraph& g, int level, int from) {
    std::vector<std::pair<int, Rat>> out;
    for (const auto& e : g.edges[level])
        if (e.from == from) out.emplace_back(e.to, e.content);
    return out;
}

}  // namespace

IdempotentSet centralIdempotents(int p, int q, int d) {
    BratteliGraph g = buildBratteli(p, q, Family::A, d);
    const int n = p + q;
    std::vector<AlgebraElement> cur = {AlgebraElement::unit(p, q, d)};
    for (int k = 1; k <= n; ++k) {
        AlgebraElement jk = jmElement(k, p, q, d);
        std::vector<AlgebraElement> next(g.levels[k].size(), AlgebraElement(p, q, d));
        // Vertices of the next level are independent accumulation targets.
        parallelFor(g.levels[k].size(), [&](std::size_t to) {
            for (const auto& e : g.edges[k]) {
                if (e.to != static_cast<int>(to)) continue;
                std::vector<Rat> roots;
                for (const auto& [to2, c2] : outgoingContents(g, k, e.from))
                    if (to2 != static_cast<int>(to)) roots.push_back(c2);
                next[to] += applyInterpolation(jk, roots, e.content, cur[e.from]);
            }
        });
        cur = std::move(next);
    }
    IdempotentSet set;
    set.p = p;
    set.q = q;
    set.d = d;
    set.symmetry = Symmetry::FullBrauer;
    for (std::size_t i = 0; i < g.leaves().size(); ++i) {
        set.labels.push_back({g.leaves()[i], {}, {}, std::nullopt});
        set.rows.push_back(cur[i]);
    }
    return set;
}

IdempotentSet canonicalIdempotents(int p, int q, int d) {
    BratteliGraph g = buildBratteli(p, q, Family::A, d);
    const int n = p + q;
    std::vector<AlgebraElement> jks;
    for (int k = 1; k <= n; ++k) jks.push_back(jmElement(k, p, q, d));

    IdempotentSet set;
    set.p = p;
    set.q = q;
    set.d = d;
    set.symmetry = Symmetry::GelfandTsetlin;

    // Depth-first over the path tree; shared prefixes are computed once.
    std::vector<int> pathVertices(n + 1, 0);
    std::vector<Rat> pathContents(n, Rat(0));
    std::function<void(int, int, const AlgebraElement&)> rec =
        [&](int level, int vertex, const AlgebraElement& prefix) {
            pathVertices[level] = vertex;
            if (level == n) {
                set.labels.push_back({g.levels[n][vertex], pathVertices, pathContents, std::nullopt});
                set.rows.push_back(prefix);
                return;
            }
            auto edges = outgoingContents(g, level + 1, vertex);
            for (const auto& [to, target] : edges) {
                std::vector<Rat> roots;
                for (const auto& [to2, c2] : edges)
                    if (to2 != to) roots.push_back(c2);
                pathContents[level] = target;
                rec(level + 1, to, applyInterpolation(jks[level], roots, target, prefix));
            }
        };
    rec(0, 0, AlgebraElement::unit(p, q, d));

    // Deterministic row order: lexicographic on vertex-index sequences.
    std::vector<std::size_t> order(set.rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return set.labels[a].pathVertices < set.labels[b].pathVertices;
    });
    IdempotentSet sorted;
    sorted.p = p;
    sorted.q = q;
    sorted.d = d;
    sorted.symmetry = Symmetry::GelfandTsetlin;
    for (std::size_t i : order) {
        sorted.labels.push_back(set.labels[i]);
        sorted.rows.push_back(set.rows[i]);
    }
    return sorted;
}

IdempotentSet lastEdgeAnsatz(int p, int q, int d) {
    if (std::min(p, q) != 1)
        throw std::invalid_argument("lastEdgeAnsatz requires min(p,q) = 1");
    const int n = p + q;

    if (p == 1 && q != 1) {
        // Reversed tower: compute for (q, 1) and mirror every diagram back.
        IdempotentSet m = lastEdgeAnsatz(q, 1, d);
        IdempotentSet out;
        out.p = p;
        out.q = q;
        out.d = d;
        out.symmetry = Symmetry::SpSq;
        out.labels = m.labels;
        for (auto& lbl : out.labels) std::swap(lbl.leaf.left, lbl.leaf.right);
        for (const auto& r : m.rows) out.rows.push_back(mirrorElement(r));
        return out;
    }

    IdempotentSet gt = canonicalIdempotents(p, q, d);
    IdempotentSet out;
    out.p = p;
    out.q = q;
    out.d = d;
    out.symmetry = Symmetry::SpSq;

    BratteliGraph g = buildBratteli(p, q, Family::A, d);
    std::map<std::pair<int, int>, std::size_t> groupIndex;
    for (std::size_t i = 0; i < gt.rows.size(); ++i) {
        const auto& pv = gt.labels[i].pathVertices;
        std::pair<int, int> edge{pv[n - 1], pv[n]};
        auto it = groupIndex.find(edge);
        if (it == groupIndex.end()) {
            groupIndex.emplace(edge, out.rows.size());
            IdempotentLabel lbl;
            lbl.leaf = gt.labels[i].leaf;
            lbl.lastEdgeFrom = g.levels[n - 1][edge.first];
            out.labels.push_back(lbl);
            out.rows.push_back(gt.rows[i]);
        } else {
            out.rows[it->second] += gt.rows[i];
        }
    }
    return out;
}

IdempotentSet idempotentsFor(int p, int q, int d, Symmetry symmetry) {
    switch (symmetry) {
        case Symmetry::FullBrauer: return centralIdempotents(p, q, d);
        case Symmetry::GelfandTsetlin: return canonicalIdempotents(p, q, d);
        case Symmetry::SpSq: return lastEdgeAnsatz(p, q, d);
    }
    throw std::invalid_argument("unknown symmetry");
}

std::string alphaCacheFileName(int p, int q, int d, Symmetry symmetry) {
    std::ostringstream os;
    os << "alpha_p" << p << "_q" << q << "_d" << d << '_' << symmetryName(symmetry) << ".cache";
    return os.str();
}

void saveAlphaCache(const IdempotentSet& set, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write cache file: " + path);
    f << "wbsdp-alpha 1\n";
    f << set.p << ' ' << set.q << ' ' << set.d << ' ' << symmetryName(set.symmetry) << ' '
      << set.rows.size() << '\n';
    for (const auto& lbl : set.labels) f << "label " << lbl.str() << '\n';
    for (std::size_t i = 0; i < set.rows.size(); ++i)
        for (const auto& [dg, c] : set.rows[i].terms())
            f << i << ' ' << diagramRank(dg) << ' ' << c.get_num().get_str() << ' '
              << c.get_den().get_str() << '\n';
}

IdempotentSet loadAlphaCache(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read cache file: " + path);
    std::string magic;
    int version = 0;
    f >> magic >> version;
    if (magic != "wbsdp-alpha" || version != 1)
        throw std::runtime_error("bad cache header: " + path);
    IdempotentSet set;
    std::string sym;
    std::size_t nrows = 0;
    f >> set.p >> set.q >> set.d >> sym >> nrows;
    set.symmetry = symmetryFromName(sym);
    f.ignore();
    set.labels.resize(nrows);
    set.rows.assign(nrows, AlgebraElement(set.p, set.q, set.d));
    auto basis = enumerateDiagrams(set.p, set.q);
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        if (line.rfind("label ", 0) == 0) continue;  // informational only

        std::istringstream is(line);
        std::size_t i = 0, j = 0;
        std::string num, den;
        is >> i >> j >> num >> den;
        if (!is) throw std::runtime_error("bad cache row: " + line);
        if (i >= nrows || j >= basis.size()) throw std::runtime_error("cache index out of range");
        set.rows[i].addTerm(basis[j], ratFromParts(num, den));
    }
    return set;
}

}  // namespace wbsdp

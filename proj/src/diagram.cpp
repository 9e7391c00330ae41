#include "wbsdp/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wbsdp {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

void validateDiagram(const Diagram& d) {
    const int n = d.n();
    if (d.p < 0 || d.q < 0) fail("negative p or q");
    if (static_cast<int>(d.match.size()) != 2 * n) fail("matching has wrong size");
    for (int x = 0; x < 2 * n; ++x) {
        int y = d.match[x];
        if (y < 0 || y >= 2 * n || y == x) fail("not a perfect matching");
        if (d.match[y] != x) fail("matching is not an involution");
    }
    for (int x = 0; x < 2 * n; ++x) {
        int y = d.match[x];
        if (y < x) continue;
        int ix = rowIndex(x, n), iy = rowIndex(y, n);
        bool leftX = ix < d.p, leftY = iy < d.p;
        if (isTop(x, n) == isTop(y, n)) {
            if (leftX == leftY) fail("same-row pair must cross the wall");
        } else {
            if (leftX != leftY) fail("cross-row pair must stay on one side of the wall");
        }
    }
}

Diagram makeDiagram(int p, int q, const std::vector<std::pair<int, int>>& pairs) {
    Diagram d;
    d.p = p;
    d.q = q;
    d.match.assign(2 * (p + q), -1);
    for (auto [a, b] : pairs) {
        if (d.match[a] != -1 || d.match[b] != -1) fail("node used twice");
        d.match[a] = b;
        d.match[b] = a;
    }
    validateDiagram(d);
    return d;
}

Diagram identity(int p, int q) {
    if (p < 0 || q < 0) fail("negative p or q");
    const int n = p + q;
    Diagram d;
    d.p = p;
    d.q = q;
    d.match.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        d.match[i] = n + i;
        d.match[n + i] = i;
    }
    return d;
}

Diagram transposition(int i, int p, int q) {
    const int n = p + q;
    if (i < 1 || i > n - 1) fail("transposition index out of range");
    if (i == p) fail("transposition across the wall is not a generator");
    Diagram d = identity(p, q);
    int a = i - 1, b = i;  // 0-based strand indices
    d.match[a] = n + b;
    d.match[n + b] = a;
    d.match[b] = n + a;
    d.match[n + a] = b;
    return d;
}

Diagram contraction(int p, int q) {
    if (p < 1 || q < 1) fail("contraction requires p >= 1 and q >= 1");
    return contractionPair(p, p + 1, p, q);
}

Diagram transpositionPair(int i, int k, int p, int q) {
    const int n = p + q;
    if (i < 1 || k < 1 || i > n || k > n || i == k) fail("bad strand indices");
    if ((i <= p) != (k <= p)) fail("transposition pair must not cross the wall");
    Diagram d = identity(p, q);
    int a = i - 1, b = k - 1;
    d.match[a] = n + b;
    d.match[n + b] = a;
    d.match[b] = n + a;
    d.match[n + a] = b;
    return d;
}

Diagram contractionPair(int i, int k, int p, int q) {
    const int n = p + q;
    if (!(1 <= i && i <= p && p < k && k <= n)) fail("contraction pair must cross the wall");
    Diagram d = identity(p, q);
    int a = i - 1, b = k - 1;
    d.match[a] = b;
    d.match[b] = a;
    d.match[n + a] = n + b;
    d.match[n + b] = n + a;
    return d;
}

ComposeResult compose(const Diagram& a, const Diagram& b) {
    if (a.p != b.p || a.q != b.q) fail("compose: shape mismatch");
    const int n = a.n();
    ComposeResult out;
    out.diagram.p = a.p;
    out.diagram.q = a.q;
    out.diagram.match.assign(2 * n, -1);
    if (n == 0) return out;

    // Free nodes of the result: a's top row (0..n-1) and b's bottom row
    // (n..2n-1). Middle nodes are a's bottom row glued to b's top row.
    std::vector<char> freeSeen(2 * n, 0);
    std::vector<char> midSeen(n, 0);

    auto walkFromATop = [&](int t) {
        int u = a.match[t];
        while (u >= n) {
            int m = u - n;
            midSeen[m] = 1;
            int v = b.match[m];
            if (v >= n) return n + (v - n);  // ends at b's bottom
            midSeen[v] = 1;
            u = a.match[n + v];
        }
        return u;  // ends at a's top
    };
    auto walkFromBBottom = [&](int s) {
        int v = b.match[n + s];
        while (v < n) {
            midSeen[v] = 1;
            int u = a.match[n + v];
            if (u < n) return u;  // ends at a's top
            int m = u - n;
            midSeen[m] = 1;
            v = b.match[m];
        }
        return n + (v - n);  // ends at b's bottom
    };

    auto record = [&](int x, int y) {
        out.diagram.match[x] = y;
        out.diagram.match[y] = x;
        freeSeen[x] = freeSeen[y] = 1;
    };

    for (int t = 0; t < n; ++t)
        if (!freeSeen[t]) record(t, walkFromATop(t));
    for (int s = 0; s < n; ++s)
        if (!freeSeen[n + s]) record(n + s, walkFromBBottom(s));

    // Remaining middle components are closed loops.
    for (int m = 0; m < n; ++m) {
        if (midSeen[m]) continue;
        ++out.loops;
        int cur = m;
        do {
            midSeen[cur] = 1;
            int u = a.match[n + cur];
            int m2 = u - n;  // loops only use a's bottom-bottom pairs
            midSeen[m2] = 1;
            cur = b.match[m2];
        } while (cur != m);
    }
    return out;
}

Matching partialTranspose(const Diagram& d) {
    const int n = d.n();
    auto mapNode = [&](int x) {
        int i = rowIndex(x, n);
        if (i < d.p) return x;
        return oppositeNode(x, n);
    };
    Matching m;
    m.n = n;
    m.match.assign(2 * n, -1);
    for (int x = 0; x < 2 * n; ++x) {
        int y = d.match[x];
        m.match[mapNode(x)] = mapNode(y);
    }
    return m;
}

Diagram fromPartialTranspose(const Matching& m, int p, int q) {
    if (m.n != p + q) fail("fromPartialTranspose: size mismatch");
    const int n = m.n;
    auto mapNode = [&](int x) {
        int i = rowIndex(x, n);
        if (i < p) return x;
        return oppositeNode(x, n);
    };
    Diagram d;
    d.p = p;
    d.q = q;
    d.match.assign(2 * n, -1);
    for (int x = 0; x < 2 * n; ++x) d.match[mapNode(x)] = mapNode(m.match[x]);
    validateDiagram(d);
    return d;
}

Diagram verticalFlip(const Diagram& d) {
    const int n = d.n();
    Diagram out = d;
    for (int x = 0; x < 2 * n; ++x)
        out.match[oppositeNode(x, n)] = oppositeNode(d.match[x], n);
    return out;
}

Diagram mirror(const Diagram& d) {
    const int n = d.n();
    Diagram out;
    out.p = d.q;
    out.q = d.p;
    out.match.assign(2 * n, -1);
    auto mapNode = [&](int x) {
        int i = rowIndex(x, n);
        int j = n - 1 - i;
        return isTop(x, n) ? j : n + j;
    };
    for (int x = 0; x < 2 * n; ++x) out.match[mapNode(x)] = mapNode(d.match[x]);
    validateDiagram(out);
    return out;
}

int traceLoops(const Diagram& d) {
    const int n = d.n();
    std::vector<char> seen(2 * n, 0);
    int loops = 0;
    for (int x0 = 0; x0 < 2 * n; ++x0) {
        if (seen[x0]) continue;
        ++loops;
        int x = x0;
        do {
            seen[x] = 1;
            int y = d.match[x];
            seen[y] = 1;
            x = oppositeNode(y, n);
        } while (x != x0);
    }
    return loops;
}

PartialTraceResult partialTrace(const Diagram& d, const std::set<int>& S) {
    const int n = d.n();
    for (int i : S)
        if (i < 1 || i > n) fail("partialTrace: position out of range");

    std::vector<char> traced(n, 0);
    for (int i : S) traced[i - 1] = 1;

    // Relabeling of the kept positions.
    std::vector<int> newIndex(n, -1);
    int kept = 0, pKept = 0;
    for (int i = 0; i < n; ++i) {
        if (traced[i]) continue;
        newIndex[i] = kept++;
        if (i < d.p) ++pKept;
    }

    PartialTraceResult out;
    out.diagram.p = pKept;
    out.diagram.q = kept - pKept;
    out.diagram.match.assign(2 * kept, -1);

    auto isTraced = [&](int x) { return traced[rowIndex(x, n)] != 0; };
    auto newNode = [&](int x) {
        int i = newIndex[rowIndex(x, n)];
        return isTop(x, n) ? i : kept + i;
    };

    std::vector<char> seen(2 * n, 0);
    for (int x0 = 0; x0 < 2 * n; ++x0) {
        if (seen[x0] || isTraced(x0)) continue;
        // Follow the strand through traced positions.
        int x = x0;
        int y = d.match[x];
        seen[x] = 1;
        while (isTraced(y)) {
            seen[y] = 1;
            int z = oppositeNode(y, n);
            seen[z] = 1;
            y = d.match[z];
        }
        seen[y] = 1;
        out.diagram.match[newNode(x0)] = newNode(y);
        out.diagram.match[newNode(y)] = newNode(x0);
    }
    // Closed loops among traced nodes.
    for (int x0 = 0; x0 < 2 * n; ++x0) {
        if (seen[x0]) continue;
        ++out.loops;
        int x = x0;
        do {
            seen[x] = 1;
            int y = d.match[x];
            seen[y] = 1;
            x = oppositeNode(y, n);
        } while (x != x0);
    }
    return out;
}

std::vector<Diagram> enumerateDiagrams(int p, int q, int maxNodes) {
    const int n = p + q;
    if (n > maxNodes) fail("enumerateDiagrams: p+q exceeds the configured bound");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Diagram> out;
    do {
        Matching m;
        m.n = n;
        m.match.assign(2 * n, -1);
        for (int i = 0; i < n; ++i) {
            m.match[i] = n + perm[i];
            m.match[n + perm[i]] = i;
        }
        out.push_back(fromPartialTranspose(m, p, q));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::size_t diagramRank(const Diagram& d) {
    const int n = d.n();
    Matching m = partialTranspose(d);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = m.match[i] - n;
    // Lexicographic rank via the factorial number system.
    std::size_t rank = 0;
    std::size_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (int i = 0; i < n; ++i) {
        fact = (n - i > 1) ? fact / (n - i) : 1;
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (perm[j] < perm[i]) ++smaller;
        rank += smaller * fact;
    }
    return rank;
}

std::string diagramToString(const Diagram& d) {
    const int n = d.n();
    std::ostringstream os;
    os << d.p << ',' << d.q << '|';
    auto token = [&](int x) {
        std::ostringstream t;
        t << (isTop(x, n) ? 't' : 'b') << (rowIndex(x, n) + 1);
        return t.str();
    };
    bool first = true;
    for (int x = 0; x < 2 * n; ++x) {
        int y = d.match[x];
        if (y < x) continue;
        if (!first) os << ',';
        first = false;
        os << token(x) << '-' << token(y);
    }
    return os.str();
}

Diagram diagramFromString(const std::string& s) {
    auto bar = s.find('|');
    if (bar == std::string::npos) fail("diagram string: missing '|'");
    auto comma = s.find(',');
    if (comma == std::string::npos || comma > bar) fail("diagram string: missing 'p,q'");
    int p = std::stoi(s.substr(0, comma));
    int q = std::stoi(s.substr(comma + 1, bar - comma - 1));
    const int n = p + q;

    auto parseNode = [&](const std::string& tok) {
        if (tok.size() < 2 || (tok[0] != 't' && tok[0] != 'b')) fail("bad node token: " + tok);
        int i = std::stoi(tok.substr(1));
        if (i < 1 || i > n) fail("node index out of range: " + tok);
        return tok[0] == 't' ? i - 1 : n + i - 1;
    };

    std::vector<std::pair<int, int>> pairs;
    std::string body = s.substr(bar + 1);
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        auto dash = item.find('-');
        if (dash == std::string::npos) fail("bad pair: " + item);
        pairs.emplace_back(parseNode(item.substr(0, dash)), parseNode(item.substr(dash + 1)));
    }
    return makeDiagram(p, q, pairs);
}

}  // namespace wbsdp

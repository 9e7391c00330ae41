#include "doctest.h"

#include <random>
#include <set>
#include <stdexcept>

#include "wbsdp/diagram.hpp"

using namespace wbsdp;

namespace {

Diagram randomDiagram(int p, int q, std::mt19937& rng) {
    const int n = p + q;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Matching m;
    m.n = n;
    m.match.assign(2 * n, -1);
    for (int i = 0; i < n; ++i) {
        m.match[i] = n + perm[i];
        m.match[n + perm[i]] = i;
    }
    return fromPartialTranspose(m, p, q);
}

// The rho, sigma pair from the B_{3,2} multiplication figure.
Diagram figureRho() {
    return diagramFromString("3,2|t1-b1,t2-b3,t3-t5,t4-b5,b2-b4");
}
Diagram figureSigma() {
    return diagramFromString("3,2|t1-b3,t2-t4,t3-b1,t5-b5,b2-b4");
}

}  // namespace

TEST_CASE("identity diagram and unit law") {
    Diagram id11 = identity(1, 1);
    CHECK(diagramToString(id11) == "1,1|t1-b1,t2-b2");
    CHECK(traceLoops(id11) == 2);

    std::mt19937 rng(7);
    for (int t = 0; t < 10; ++t) {
        Diagram s = randomDiagram(2, 2, rng);
        auto [left, loopsL] = compose(identity(2, 2), s);
        auto [right, loopsR] = compose(s, identity(2, 2));
        CHECK(left == s);
        CHECK(loopsL == 0);
        CHECK(right == s);
        CHECK(loopsR == 0);
    }
}

TEST_CASE("transposition generators") {
    CHECK(transposition(1, 2, 2) == diagramFromString("2,2|t1-b2,t2-b1,t3-b3,t4-b4"));
    CHECK(transposition(3, 2, 2) == diagramFromString("2,2|t1-b1,t2-b2,t3-b4,t4-b3"));
    CHECK_THROWS_AS(transposition(2, 2, 2), std::invalid_argument);
    CHECK(traceLoops(transposition(1, 2, 0)) == 1);
}

TEST_CASE("contraction generators") {
    CHECK(contraction(2, 2) == diagramFromString("2,2|t1-b1,t2-t3,t4-b4,b2-b3"));
    CHECK(contraction(1, 1) == diagramFromString("1,1|t1-t2,b1-b2"));
    CHECK_THROWS_AS(contraction(3, 0), std::invalid_argument);
}

TEST_CASE("composition with loop counting") {
    auto [cc, loops] = compose(contraction(1, 1), contraction(1, 1));
    CHECK(cc == contraction(1, 1));
    CHECK(loops == 1);

    auto [tt, tloops] = compose(transposition(1, 2, 0), transposition(1, 2, 0));
    CHECK(tt == identity(2, 0));
    CHECK(tloops == 0);

    // A worked B_{3,2} product: rho sigma = delta * (one diagram).
    auto [rs, rsloops] = compose(figureRho(), figureSigma());
    CHECK(rs == diagramFromString("3,2|t1-b3,t2-b1,t3-t5,t4-b5,b2-b4"));
    CHECK(rsloops == 1);
}

TEST_CASE("partial transpose") {
    Diagram rho = figureRho();
    Matching g = partialTranspose(rho);
    // Expected permutation matching: T1-B1, T2-B3, T5-B4, T3-B5, T4-B2.
    Matching expected;
    expected.n = 5;
    expected.match.assign(10, -1);
    auto pair = [&](int t, int b) {
        expected.match[t - 1] = 5 + b - 1;
        expected.match[5 + b - 1] = t - 1;
    };
    pair(1, 1);
    pair(2, 3);
    pair(5, 4);
    pair(3, 5);
    pair(4, 2);
    CHECK(g == expected);

    CHECK(partialTranspose(identity(3, 2)) == partialTranspose(identity(3, 2)));
    // Involution: applying twice returns the input for every diagram of B_{2,1}.
    for (const auto& d : enumerateDiagrams(2, 1))
        CHECK(fromPartialTranspose(partialTranspose(d), 2, 1) == d);
}

TEST_CASE("trace") {
    Diagram d = diagramFromString("4,1|t1-b1,t2-b3,t3-b2,t4-t5,b4-b5");
    CHECK(traceLoops(d) == 3);
    CHECK(traceLoops(identity(3, 2)) == 5);
}

TEST_CASE("partial trace") {
    Diagram d = diagramFromString("4,1|t1-b1,t2-b3,t3-b2,t4-t5,b4-b5");
    auto r = partialTrace(d, {2, 3, 4});
    CHECK(r.loops == 1);
    CHECK(r.diagram == identity(1, 1));

    auto keepAll = partialTrace(d, {});
    CHECK(keepAll.loops == 0);
    CHECK(keepAll.diagram == d);

    auto full = partialTrace(identity(2, 1), {1, 2, 3});
    CHECK(full.loops == 3);
    CHECK(full.diagram.n() == 0);

    // Tracing everything agrees with the full trace, on random diagrams.
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
        Diagram s = randomDiagram(2, 2, rng);
        CHECK(partialTrace(s, {1, 2, 3, 4}).loops == traceLoops(s));
    }
}

TEST_CASE("enumeration order and ranks") {
    auto d11 = enumerateDiagrams(1, 1);
    REQUIRE(d11.size() == 2);
    CHECK(d11[0] == identity(1, 1));
    CHECK(d11[1] == contraction(1, 1));

    auto d22 = enumerateDiagrams(2, 2);
    CHECK(d22.size() == 24);
    std::set<Diagram> uniq(d22.begin(), d22.end());
    CHECK(uniq.size() == 24);
    for (std::size_t j = 0; j < d22.size(); ++j) {
        validateDiagram(d22[j]);
        CHECK(diagramRank(d22[j]) == j);
    }
    CHECK_THROWS_AS(enumerateDiagrams(5, 4), std::invalid_argument);
}

TEST_CASE("walled Brauer presentation relations via composition") {
    // sigma_i^2 = 1, braid, distant commutation, and the contraction
    // relations, checked for every valid index combination with p+q <= 5.
    auto prod = [](std::initializer_list<Diagram> ds) {
        auto it = ds.begin();
        Diagram acc = *it++;
        int loops = 0;
        for (; it != ds.end(); ++it) {
            auto r = compose(acc, *it);
            acc = r.diagram;
            loops += r.loops;
        }
        return std::pair<Diagram, int>(acc, loops);
    };

    for (int p = 0; p <= 5; ++p) {
        for (int q = 0; p + q <= 5; ++q) {
            int n = p + q;
            if (n < 1) continue;
            auto sigma = [&](int i) { return transposition(i, p, q); };
            for (int i = 1; i <= n - 1; ++i) {
                if (i == p) continue;
                CHECK(prod({sigma(i), sigma(i)}) ==
                      std::pair<Diagram, int>(identity(p, q), 0));
                for (int j = i + 2; j <= n - 1; ++j) {
                    if (j == p) continue;
                    CHECK(prod({sigma(i), sigma(j)}) == prod({sigma(j), sigma(i)}));
                }
                if (i + 1 <= n - 1 && i + 1 != p && i != p) {
                    CHECK(prod({sigma(i), sigma(i + 1), sigma(i)}) ==
                          prod({sigma(i + 1), sigma(i), sigma(i + 1)}));
                }
            }
            if (p >= 1 && q >= 1) {
                Diagram bar = contraction(p, q);
                // bar^2 = delta bar.
                CHECK(prod({bar, bar}) == std::pair<Diagram, int>(bar, 1));
                for (int pm : {p - 1, p + 1}) {
                    if (pm < 1 || pm > n - 1 || pm == p) continue;
                    CHECK(prod({bar, sigma(pm), bar}) == std::pair<Diagram, int>(bar, 0));
                }
                for (int i = 1; i <= n - 1; ++i) {
                    if (i == p || i == p - 1 || i == p + 1) continue;
                    CHECK(prod({bar, sigma(i)}) == prod({sigma(i), bar}));
                }
                if (p >= 2 && q >= 2) {
                    CHECK(prod({bar, sigma(p + 1), sigma(p - 1), bar, sigma(p - 1)}) ==
                          prod({bar, sigma(p + 1), sigma(p - 1), bar, sigma(p + 1)}));
                    CHECK(prod({sigma(p - 1), bar, sigma(p + 1), sigma(p - 1), bar}) ==
                          prod({sigma(p + 1), bar, sigma(p + 1), sigma(p - 1), bar}));
                }
            }
        }
    }
}

TEST_CASE("composition is associative with additive loops") {
    std::mt19937 rng(11);
    for (auto [p, q] : {std::pair<int, int>{2, 1}, {2, 2}, {3, 1}}) {
        for (int t = 0; t < 500; ++t) {
            Diagram a = randomDiagram(p, q, rng);
            Diagram b = randomDiagram(p, q, rng);
            Diagram c = randomDiagram(p, q, rng);
            auto ab = compose(a, b);
            auto ab_c = compose(ab.diagram, c);
            auto bc = compose(b, c);
            auto a_bc = compose(a, bc.diagram);
            CHECK(ab_c.diagram == a_bc.diagram);
            CHECK(ab.loops + ab_c.loops == bc.loops + a_bc.loops);
        }
    }
}

TEST_CASE("trace cyclicity at the diagram level") {
    std::mt19937 rng(13);
    for (int t = 0; t < 500; ++t) {
        Diagram a = randomDiagram(2, 2, rng);
        Diagram b = randomDiagram(2, 2, rng);
        auto ab = compose(a, b);
        auto ba = compose(b, a);
        CHECK(ab.loops + traceLoops(ab.diagram) == ba.loops + traceLoops(ba.diagram));
    }
}

TEST_CASE("string round trip") {
    std::mt19937 rng(5);
    for (int t = 0; t < 100; ++t) {
        Diagram d = randomDiagram(3, 2, rng);
        CHECK(diagramFromString(diagramToString(d)) == d);
    }
    CHECK_THROWS_AS(diagramFromString("2,0|t1-t2,b1-b2"), std::invalid_argument);
}

TEST_CASE("vertical flip and mirror") {
    Diagram rho = figureRho();
    CHECK(verticalFlip(verticalFlip(rho)) == rho);
    Diagram m = mirror(rho);
    CHECK(m.p == 2);
    CHECK(m.q == 3);
    CHECK(mirror(m) == rho);
    // Mirror respects composition.
    std::mt19937 rng(19);
    for (int t = 0; t < 50; ++t) {
        Diagram a = randomDiagram(3, 2, rng);
        Diagram b = randomDiagram(3, 2, rng);
        auto ab = compose(a, b);
        auto mm = compose(mirror(a), mirror(b));
        CHECK(mm.diagram == mirror(ab.diagram));
        CHECK(mm.loops == ab.loops);
    }
}

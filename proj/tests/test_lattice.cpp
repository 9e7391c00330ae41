#include "doctest.h"

#include <map>
#include <set>
#include <stdexcept>

#include "wbsdp/lattice.hpp"

using namespace wbsdp;

TEST_CASE("partition basics") {
    CHECK(contentOf(Partition{}) == 0);
    CHECK(contentOf(Partition{{2, 1}}) == 0);
    CHECK(contentOf(Partition{{3}}) == 3);
    CHECK(sizeOf(Partition{{3, 2}}) == 5);
    CHECK(transposePartition(Partition{{3, 1}}) == Partition{{2, 1, 1}});
    CHECK(partitionsOf(4).size() == 5);
    CHECK(partitionsOf(4, 2).size() == 3);
    CHECK(symmetricGroupIrrepDim(Partition{{2, 1}}) == 2);
    CHECK(symmetricGroupIrrepDim(Partition{{3, 2}}) == 5);
    CHECK(symmetricGroupIrrepDim(Partition{{2, 2, 1}}) == 5);
}

TEST_CASE("edge contents") {
    Bipartition root{};
    Bipartition one{Partition{{1}}, Partition{}};
    CHECK(edgeContent(root, one, 1, 1, 5) == 0);
    CHECK(edgeContent(one, root, 2, 1, 5) == 0);
    Bipartition oneone{Partition{{1}}, Partition{{1}}};
    CHECK(edgeContent(one, oneone, 2, 1, 7) == 7);
    Bipartition two{Partition{{2}}, Partition{}};
    CHECK(edgeContent(one, two, 2, 2, 5) == 1);
    Bipartition oneOne{Partition{{1, 1}}, Partition{}};
    CHECK(edgeContent(one, oneOne, 2, 2, 5) == -1);
    CHECK_THROWS_AS(edgeContent(root, two, 1, 2, 5), std::invalid_argument);
}

TEST_CASE("Bratteli diagram of the full family") {
    BratteliGraph g = buildBratteli(2, 2, Family::B, 5);
    CHECK(g.levels[0].size() == 1);
    CHECK(g.levels[4].size() == 6);

    // Leaf ((1),(1)) has 4 paths in family B.
    Bipartition leaf{Partition{{1}}, Partition{{1}}};
    CHECK(pathCount(g, leaf) == 4);
    CHECK(enumeratePaths(g, leaf).size() == 4);

    // Single monotone path to ((2),(2)).
    Bipartition corner{Partition{{2}}, Partition{{2}}};
    CHECK(pathCount(g, corner) == 1);
}

TEST_CASE("truncated family A(d)") {
    BratteliGraph g = buildBratteli(2, 2, Family::A, 2);
    // Removed: ((2),(1,1)), ((1,1),(2)), ((1,1),(1,1)) leaves and the
    // internal ((1,1),(1)).
    CHECK(g.levels[4].size() == 3);
    CHECK(g.levels[3].size() == 2);
    Bipartition leaf{Partition{{1}}, Partition{{1}}};
    CHECK(pathCount(g, leaf) == 3);

    // For d >= p+q families A and B coincide.
    BratteliGraph ga = buildBratteli(2, 2, Family::A, 4);
    BratteliGraph gb = buildBratteli(2, 2, Family::B, 4);
    for (int k = 0; k <= 4; ++k) CHECK(ga.levels[k] == gb.levels[k]);
}

TEST_CASE("telescoping content identity") {
    // Sum of contents along any path equals cont(left) + cont(right) +
    // d * size(right), exhaustively for p+q <= 6.
    for (int p = 0; p <= 6; ++p) {
        for (int q = 0; p + q <= 6; ++q) {
            if (p + q < 1) continue;
            for (int d : {2, 3, 4, p + q}) {
                if (d < 1) continue;
                BratteliGraph g = buildBratteli(p, q, Family::A, d);
                for (const auto& leaf : g.leaves()) {
                    for (const auto& path : enumeratePaths(g, leaf)) {
                        Rat sum = 0;
                        for (const auto& c : path.contents) sum += c;
                        Rat expected = Rat(contentOf(leaf.left) + contentOf(leaf.right)) +
                                       Rat(d) * Rat(sizeOf(leaf.right));
                        CHECK(sum == expected);
                    }
                }
            }
        }
    }
}

TEST_CASE("content vectors separate paths") {
    for (int p = 0; p <= 5; ++p) {
        for (int q = 0; p + q <= 5; ++q) {
            if (p + q < 1) continue;
            for (int d : {2, 3, p + q}) {
                BratteliGraph g = buildBratteli(p, q, Family::A, d);
                std::set<std::vector<Rat>> seen;
                std::size_t total = 0;
                for (const auto& leaf : g.leaves())
                    for (const auto& path : enumeratePaths(g, leaf)) {
                        seen.insert(path.contents);
                        ++total;
                    }
                CHECK(seen.size() == total);
            }
        }
    }
}

TEST_CASE("edge contents out of one vertex are distinct") {
    for (int d : {2, 3, 4}) {
        BratteliGraph g = buildBratteli(3, 3, Family::A, d);
        for (int k = 1; k <= 6; ++k) {
            std::map<int, std::set<Rat>> contents;
            for (const auto& e : g.edges[k]) {
                auto [it, fresh] = contents[e.from].emplace(e.content);
                CHECK(fresh);
            }
        }
    }
}

TEST_CASE("A(2) dimension sums at p+q = 4") {
    BratteliGraph g = buildBratteli(2, 2, Family::A, 2);
    auto counts = pathCountsPerLeaf(g);
    Int sum = 0, sumSq = 0;
    for (const auto& c : counts) {
        sum += c;
        sumSq += c * c;
    }
    CHECK(sum == 6);
    CHECK(sumSq == 14);
}

TEST_CASE("dot and csv dumps") {
    BratteliGraph g = buildBratteli(1, 1, Family::B, 2);
    CHECK(toDot(g).find("digraph") != std::string::npos);
    CHECK(leafDimensionsCsv(g).find("d_lambda") != std::string::npos);
}

TEST_CASE("A(2) truncation removes the right vertices") {
    BratteliGraph g = buildBratteli(2, 2, Family::A, 2);
    Partition two{{2}}, oneOne{{1, 1}}, one{{1}};
    // Dropped leaves.
    CHECK(g.vertexIndex(4, {two, oneOne}) == -1);
    CHECK(g.vertexIndex(4, {oneOne, two}) == -1);
    CHECK(g.vertexIndex(4, {oneOne, oneOne}) == -1);
    // Dropped internal vertex.
    CHECK(g.vertexIndex(3, {oneOne, one}) == -1);
    // Kept vertices.
    CHECK(g.vertexIndex(4, {two, two}) >= 0);
    CHECK(g.vertexIndex(4, {one, one}) >= 0);
    CHECK(g.vertexIndex(4, Bipartition{}) >= 0);
    CHECK(g.vertexIndex(3, {two, one}) >= 0);
    CHECK(g.vertexIndex(3, {one, Partition{}}) >= 0);
}

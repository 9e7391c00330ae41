#include "doctest.h"

#include "wbsdp/simplex.hpp"

using namespace wbsdp;

namespace {

SimplexProblem makeProblem(std::size_t nvars, std::size_t nonneg) {
    SimplexProblem p;
    p.numVars = nvars;
    p.numNonneg = nonneg;
    p.objective.assign(nvars, Rat(0));
    return p;
}

}  // namespace

TEST_CASE("one-variable problems") {
    // max v1 s.t. v1 <= 3, v >= 0.
    SimplexProblem p = makeProblem(1, 1);
    p.objective = {Rat(1)};
    p.ineqA = {{Rat(1)}};
    p.ineqB = {Rat(3)};
    auto r = solveSimplex(p);
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.optimum == 3);
    CHECK(r.solution[0] == 3);

    // v1 = -1 with v1 >= 0 is infeasible.
    SimplexProblem q = makeProblem(1, 1);
    q.eqA = {{Rat(1)}};
    q.eqB = {Rat(-1)};
    CHECK(solveSimplex(q).status == LpStatus::Infeasible);

    // Unbounded.
    SimplexProblem u = makeProblem(1, 1);
    u.objective = {Rat(1)};
    CHECK(solveSimplex(u).status == LpStatus::Unbounded);
}

TEST_CASE("free variables and equalities") {
    // max x s.t. x + y = 1, y <= 4, x free, y >= 0 -> x = 1 at y = 0... but
    // y >= 0 only; maximizing x pushes y to 0, x = 1.
    SimplexProblem p;
    p.numVars = 2;
    p.numNonneg = 1;  // y is variable 0 (nonneg), x is variable 1 (free)
    p.objective = {Rat(0), Rat(1)};
    p.eqA = {{Rat(1), Rat(1)}};
    p.eqB = {Rat(1)};
    auto r = solveSimplex(p);
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.optimum == 1);

    // Degenerate/negative rhs handling: -x <= -2 with x <= 5.
    SimplexProblem q = makeProblem(1, 1);
    q.objective = {Rat(-1)};
    q.ineqA = {{Rat(-1)}, {Rat(1)}};
    q.ineqB = {Rat(-2), Rat(5)};
    auto s = solveSimplex(q);
    CHECK(s.status == LpStatus::Optimal);
    CHECK(s.optimum == -2);
    CHECK(s.solution[0] == 2);
}

TEST_CASE("exact rational optimum") {
    // max 2x + 3y s.t. x + 3y <= 1/2, 3x + y <= 1/2: optimum at x = y = 1/8.
    SimplexProblem p = makeProblem(2, 2);
    p.objective = {Rat(2), Rat(3)};
    p.ineqA = {{Rat(1), Rat(3)}, {Rat(3), Rat(1)}};
    p.ineqB = {makeRat(1, 2), makeRat(1, 2)};
    auto r = solveSimplex(p);
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.optimum == makeRat(5, 8));
    CHECK(r.solution[0] == makeRat(1, 8));
    CHECK(r.solution[1] == makeRat(1, 8));
}

TEST_CASE("redundant equalities are tolerated") {
    SimplexProblem p = makeProblem(2, 2);
    p.objective = {Rat(1), Rat(1)};
    p.eqA = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
    p.eqB = {Rat(1), Rat(2)};
    auto r = solveSimplex(p);
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.optimum == 1);
}

TEST_CASE("degenerate cycling-prone instance terminates (Bland)") {
    // Beale's classical cycling example for the standard simplex.
    SimplexProblem p = makeProblem(4, 4);
    p.objective = {makeRat(3, 4), Rat(-150), makeRat(1, 50), Rat(-6)};
    p.ineqA = {{makeRat(1, 4), Rat(-60), makeRat(-1, 25), Rat(9)},
               {makeRat(1, 2), Rat(-90), makeRat(-1, 50), Rat(3)},
               {Rat(0), Rat(0), Rat(1), Rat(0)}};
    p.ineqB = {Rat(0), Rat(0), Rat(1)};
    auto r = solveSimplex(p);
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.optimum == makeRat(1, 20));
}

TEST_CASE("scale bound") {
    SimplexProblem p = makeProblem(200000, 200000);
    p.objective.assign(200000, Rat(1));
    CHECK_THROWS_AS(solveSimplex(p), std::invalid_argument);
}

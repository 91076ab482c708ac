#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qeo/closedform.hpp"
#include "qeo/oracles.hpp"

using namespace qeo;

namespace {

BivarPoly poly(std::initializer_list<std::array<long, 4>> rows)
{
    BivarPoly p;
    for (auto& r : rows) p += BivarPoly::monomial(static_cast<int>(r[0]), static_cast<int>(r[1]), rat(r[2], r[3]));
    return p;
}

} // namespace

TEST_CASE("rooted planar map counts match Tutte's formula")
{
    CHECK(oracles::rooted_planar_map_count(0) == 1);
    CHECK(oracles::rooted_planar_map_count(1) == 2);
    CHECK(oracles::rooted_planar_map_count(2) == 9);
    CHECK(oracles::rooted_planar_map_count(3) == 54);
    CHECK(oracles::rooted_planar_map_count(4) == 378);
    CHECK(oracles::rooted_planar_map_count(5) == 2916);
    CHECK(oracles::rooted_planar_map_count(6) == 24057);
    // enumerate() validates size against the formula internally and throws on
    // duplicates, so these calls are the real assertions
    CHECK(oracles::enumerate_rooted_planar_maps(0).size() == 1);
    CHECK(oracles::enumerate_rooted_planar_maps(1).size() == 2);
    CHECK(oracles::enumerate_rooted_planar_maps(2).size() == 9);
    CHECK(oracles::enumerate_rooted_planar_maps(4).size() == 378);
    CHECK(oracles::enumerate_rooted_planar_maps(6).size() == 24057);
}

TEST_CASE("every emitted rotation system passes structural validation")
{
    for (int e = 0; e <= 5; ++e) {
        for (auto& m : oracles::enumerate_rooted_planar_maps(e)) {
            std::string why;
            CHECK_MESSAGE(m.validate(&why), why);
            CHECK(m.canonical() == m);
        }
    }
    CHECK_THROWS(oracles::enumerate_rooted_planar_maps(7));
}

TEST_CASE("partial orientation counts reproduce the printed Q expansion")
{
    VSeries q = oracles::count_partial_orientations(3);
    // [t^1] Q = omega v^2 + omega v + 2v
    CHECK(q.coeff(1) == poly({{1, 2, 1, 1}, {1, 1, 1, 1}, {0, 1, 2, 1}}));
    // [t^2] Q = v(2w^2v^2 + 5w^2v + 2w^2 + 8wv + 8w + 2v + 8)
    CHECK(q.coeff(2) == poly({{2, 3, 2, 1}, {2, 2, 5, 1}, {2, 1, 2, 1}, {1, 2, 8, 1}, {1, 1, 8, 1}, {0, 2, 2, 1}, {0, 1, 8, 1}}));

    // restricted to zero undirected edges at v=1 and e=1: twice one Eulerian orientation
    CHECK(q.coeff(1).coeff(0, 1) == Rat(2));
}

TEST_CASE("fully directed counts are even (reversal involution)")
{
    auto counts = oracles::count_fully_directed(4);
    for (auto& c : counts) CHECK(c % 2 == 0);
    // e=1: loop forward/backward
    CHECK(counts[0] == 2);
}

TEST_CASE("charged binary tree counts match Fig. 8 and R0")
{
    VSeries trees = trees::count_charged_binary_trees(6);
    CHECK(trees.coeff(1).is_zero());
    CHECK(trees.coeff(2) == poly({{0, 0, 1, 1}, {0, 1, 1, 1}}));
    CHECK(trees.coeff(3) == poly({{0, 0, 1, 1}, {0, 1, 3, 1}}));
    CHECK(trees.coeff(4) == poly({{0, 0, 3, 1}, {0, 1, 14, 1}, {0, 2, 3, 1}}));

    VSeries R0 = closedform::solve_R(closedform::Which::omega0, 6);
    VSeries expect = VSeries::t_power(6, 1, BivarPoly::one()) - R0;
    expect.set_coeff(1, BivarPoly());
    CHECK(trees == expect);
}

TEST_CASE("unary/binary tree counts match Fig. 9 and R1")
{
    VSeries trees = trees::count_unary_binary_trees(6);
    CHECK(trees.coeff(2) == poly({{0, 0, 1, 1}, {0, 1, 2, 1}}));
    CHECK(trees.coeff(3) == poly({{0, 0, 2, 1}, {0, 1, 8, 1}, {0, 2, 2, 1}}));
    CHECK(trees.coeff(4) == poly({{0, 0, 9, 1}, {0, 1, 56, 1}, {0, 2, 36, 1}, {0, 3, 4, 1}}));

    VSeries R1 = closedform::solve_R(closedform::Which::omega1, 6);
    VSeries expect = VSeries::t_power(6, 1, BivarPoly::one()) - R1;
    expect.set_coeff(1, BivarPoly());
    CHECK(trees == expect);

    // the object-level enumeration agrees with the memoised recursion
    CHECK(trees::count_unary_binary_trees_explicit(6) == trees.truncated(6));
}

TEST_CASE("charge-1 unary/binary counts equal t^2 (v + Q1)")
{
    const int N = 7;
    VSeries charge1 = trees::count_unary_binary_charge1(N);
    VSeries R1 = closedform::solve_R(closedform::Which::omega1, N);
    VSeries Q1 = closedform::compute_Q1(R1);
    VSeries expect = (Q1 + VSeries::constant(Q1.order(), BivarPoly::v())).shifted_t(2).truncated(N);
    CHECK(charge1.truncated(expect.order()) == expect);
}

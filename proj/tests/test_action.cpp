#include <doctest.h>

#include <algorithm>
#include <set>

#include "kernatom/action.hpp"
#include "kernatom/errors.hpp"
#include "oracles.hpp"

using namespace kernatom;

namespace {

std::vector<std::vector<Point>> regular_table(const FiniteGroup& g) {
    std::vector<std::vector<Point>> t(g.order(), std::vector<Point>(g.order()));
    for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b) t[a][b] = g.op(a, b);
    return t;
}

// g . (xK) = (gx)K, with cosets numbered by block.
std::vector<std::vector<Point>> coset_table(const FiniteGroup& g, const Subgroup& k) {
    const auto cosets = left_cosets(g, k);
    std::vector<std::vector<Point>> t(g.order(), std::vector<Point>(cosets.blocks().size()));
    for (Element a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < cosets.blocks().size(); ++b)
            t[a][b] = static_cast<Point>(cosets.block_of(g.op(a, cosets.representatives()[b])));
    return t;
}

bool all_checks_pass(const OrbitStabilizerReport& r) {
    return std::all_of(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.passed; });
}

}  // namespace

TEST_CASE("trivial action") {
    const auto z3 = catalog("cyclic", 3);
    const auto a = action_from_table(z3, 2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(orbit(a, 0) == std::vector<Point>{0});
    CHECK(stabilizer(a, 1).order() == 3);
    const auto r = verify_orbit_stabilizer(a, 0);
    CHECK(r.counting_identity_holds);
    CHECK(all_checks_pass(r));
}

TEST_CASE("natural action of S3") {
    const auto s3 = catalog("symmetric", 3);
    const auto a = natural_action(s3);
    CHECK(a.set_size() == 3);
    CHECK(orbit(a, 0) == std::vector<Point>{0, 1, 2});
    const auto stab = stabilizer(a, 0);
    CHECK(stab.order() == 2);
    for (Element g : stab.members()) CHECK(s3.permutation(g)[0] == 0);
    for (Point y = 0; y < 3; ++y) {
        const auto fib = action_fiber(a, 0, y);
        CHECK(fib.size() == 2);
        for (Element g : fib) CHECK(s3.permutation(g)[0] == y);
    }
    const auto r = verify_orbit_stabilizer(a, 0);
    CHECK(r.orbit.size() * r.stabilizer.order() == 6);
    CHECK(r.fibers.size() == 3);
    REQUIRE(r.checks.size() == 3);
    CHECK(r.checks[0].name == "orbstab.counting");
    CHECK(r.checks[1].name == "orbstab.fiber-size");
    CHECK(r.checks[2].name == "orbstab.fiber-cosets");
    CHECK(all_checks_pass(r));
}

TEST_CASE("Z4 acting on {0,1} through reduction mod 2") {
    const auto z4 = from_cayley_table(oracle::addition_mod(4));
    const auto a = action_from_table(z4, 2, {{0, 1}, {1, 0}, {0, 1}, {1, 0}});
    CHECK(orbit(a, 1) == std::vector<Point>{0, 1});
    CHECK(stabilizer(a, 0).members() == std::vector<Element>{0, 2});
    CHECK(action_fiber(a, 0, 1) == std::vector<Element>{1, 3});
    CHECK(all_checks_pass(verify_orbit_stabilizer(a, 1)));
}

TEST_CASE("D4 on the vertices of a square") {
    const auto d4 = catalog("dihedral", 4);
    const auto a = natural_action(d4);
    for (Point x = 0; x < 4; ++x) {
        CHECK(orbit(a, x).size() == 4);
        CHECK(stabilizer(a, x).order() == 2);
        CHECK(all_checks_pass(verify_orbit_stabilizer(a, x)));
    }
}

TEST_CASE("action_from_table errors") {
    const auto z2 = from_cayley_table(oracle::addition_mod(2));
    CHECK_THROWS_AS(action_from_table(z2, 2, {{0, 1}, {0, 0}}), NotABijection);
    CHECK_THROWS_AS(action_from_table(z2, 2, {{1, 0}, {0, 1}}), NotAnAction);
    CHECK_THROWS_AS(action_from_table(z2, 2, {{0, 1}}), DimensionMismatch);
    CHECK_THROWS_AS(action_from_table(z2, 2, {{0, 1}, {1, 2}}), NotABijection);

    // Rows are bijections and the identity row is fixed, but the law fails.
    const auto z3 = from_cayley_table(oracle::addition_mod(3));
    CHECK_THROWS_AS(action_from_table(z3, 2, {{0, 1}, {1, 0}, {1, 0}}), NotAnAction);

    CHECK_THROWS_AS(natural_action(z2), WrongBackend);

    Limits small;
    small.action_validation_cap = 7;
    CHECK_THROWS_AS(action_from_table(z2, 2, {{0, 1}, {1, 0}}, small), ValidationCapExceeded);

    const auto a = action_from_table(z2, 2, {{0, 1}, {1, 0}});
    CHECK_THROWS_AS(orbit(a, 2), PointOutOfRange);
}

TEST_CASE("property: regular and coset actions satisfy orbit-stabilizer") {
    const std::vector<FiniteGroup> groups{catalog("cyclic", 6), catalog("symmetric", 3), catalog("dihedral", 5),
                                          catalog("quaternion8"), catalog("symmetric", 4)};
    for (const auto& g : groups) {
        const auto regular = action_from_table(g, g.order(), regular_table(g));
        for (Point x = 0; x < g.order(); x += 3) {
            const auto r = verify_orbit_stabilizer(regular, x);
            CHECK(r.stabilizer.order() == 1);
            CHECK(all_checks_pass(r));
        }
        for (Element s = 0; s < g.order(); ++s) {
            const auto k = subgroup_generated(g, std::vector<Element>{s});
            const auto a = action_from_table(g, g.order() / k.order(), coset_table(g, k));
            CHECK(stabilizer(a, 0) == k);
            for (Point x = 0; x < a.set_size(); ++x) {
                const auto r = verify_orbit_stabilizer(a, x);
                CHECK(r.orbit.size() == a.set_size());
                CHECK(all_checks_pass(r));
                // Fibers partition the group.
                std::set<Element> seen;
                for (const auto& [y, fib] : r.fibers) seen.insert(fib.begin(), fib.end());
                CHECK(seen.size() == g.order());
            }
        }
    }
}

#include <doctest.h>

#include <algorithm>
#include <random>
#include <map>
#include <set>

#include "kernatom/errors.hpp"
#include "kernatom/group.hpp"
#include "oracles.hpp"

using namespace kernatom;

namespace {

std::string witness_value(const Error& e, const std::string& key) {
    for (const auto& [k, v] : e.witness())
        if (k == key) return v;
    return {};
}

template <typename F>
void expect_not_a_group(F&& build, const std::string& axiom) {
    try {
        build();
        FAIL("expected NotAGroup");
    } catch (const NotAGroup& e) {
        CHECK(witness_value(e, "axiom") == axiom);
    }
}

std::vector<FiniteGroup> small_catalog() {
    std::vector<FiniteGroup> out;
    for (long n = 1; n <= 8; ++n) out.push_back(catalog("cyclic", n));
    for (long n = 1; n <= 4; ++n) out.push_back(catalog("symmetric", n));
    for (long n = 1; n <= 6; ++n) out.push_back(catalog("dihedral", n));
    out.push_back(catalog("klein4"));
    out.push_back(catalog("quaternion8"));
    out.push_back(direct_product(catalog("cyclic", 2), catalog("cyclic", 3)));
    return out;
}

}  // namespace

TEST_CASE("from_cayley_table: trivial group") {
    const auto g = from_cayley_table({{0}});
    CHECK(g.order() == 1);
    CHECK(g.op(0, 0) == 0);
    CHECK(g.backend() == Backend::cayley_table);
}

TEST_CASE("from_cayley_table: Z4 from addition mod 4") {
    const auto table = oracle::addition_mod(4);
    REQUIRE(oracle::is_group_table(table));
    const auto g = from_cayley_table(table);
    CHECK(g.order() == 4);
    CHECK(g.cayley_table() == table);
    for (Element x = 0; x < 4; ++x) CHECK(g.op(x, g.inv(x)) == kIdentity);
    CHECK(group_op(g, 3, 2) == 1);
}

TEST_CASE("from_cayley_table: axiom failures name the axiom and a witness") {
    SUBCASE("missing inverse") {
        try {
            from_cayley_table({{0, 1}, {1, 1}});
            FAIL("expected NotAGroup");
        } catch (const NotAGroup& e) {
            CHECK(witness_value(e, "axiom") == "inverse");
            CHECK(witness_value(e, "g") == "1");
        }
    }
    SUBCASE("non-associative table with identity and inverses") {
        try {
            from_cayley_table({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}});
            FAIL("expected NotAGroup");
        } catch (const NotAGroup& e) {
            CHECK(witness_value(e, "axiom") == "associativity");
            CHECK(witness_value(e, "a") == "1");
            CHECK(witness_value(e, "b") == "2");
            CHECK(witness_value(e, "c") == "2");
        }
    }
    SUBCASE("closure") { expect_not_a_group([] { from_cayley_table({{0, 5}, {1, 0}}); }, "closure"); }
    SUBCASE("ragged") { expect_not_a_group([] { from_cayley_table({{0, 1}, {1}}); }, "closure"); }
    SUBCASE("no identity") { expect_not_a_group([] { from_cayley_table({{1, 0}, {0, 0}}); }, "identity"); }
}

TEST_CASE("from_cayley_table: identity is relabeled to index 0") {
    // Z3 written with identity 2: a * b = a + b - 2 mod 3.
    oracle::Table t(3, std::vector<std::uint32_t>(3));
    for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = 0; b < 3; ++b) t[a][b] = (a + b + 1) % 3;
    const auto g = from_cayley_table(t);
    CHECK(g.order() == 3);
    CHECK(g.label(0) == "2");
    CHECK(g.label(2) == "0");
    CHECK(oracle::is_group_table(g.cayley_table()));
}

TEST_CASE("from_permutation_generators: S3 from two transpositions") {
    const auto g = from_permutation_generators(3, {{1, 0, 2}, {0, 2, 1}});
    CHECK(g.order() == oracle::factorial(3));
    // Breadth-first order from the identity, generators applied in order.
    const std::vector<Permutation> expected{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 0, 1}, {1, 2, 0}, {2, 1, 0}};
    for (Element x = 0; x < 6; ++x) CHECK(g.permutation(x) == expected[x]);
    for (Element a = 0; a < 6; ++a)
        for (Element b = 0; b < 6; ++b)
            CHECK(g.permutation(g.op(a, b)) == oracle::compose(g.permutation(a), g.permutation(b)));
    CHECK(g.label(3) == "(0 2 1)");
    CHECK(g.label(0) == "()");
}

TEST_CASE("from_permutation_generators: cyclic and trivial cases") {
    const auto z4 = from_permutation_generators(4, {{1, 2, 3, 0}});
    CHECK(z4.order() == 4);
    CHECK(group_op(z4, 3, 2) == 1);
    CHECK(z4.element_order(1) == 4);

    const auto trivial = from_permutation_generators(2, {});
    CHECK(trivial.order() == 1);
    CHECK(trivial.generators().empty());
}

TEST_CASE("from_permutation_generators: errors") {
    CHECK_THROWS_AS(from_permutation_generators(3, {{0, 0, 1}}), NotAPermutation);
    CHECK_THROWS_AS(from_permutation_generators(3, {{0, 1}}), NotAPermutation);
    CHECK_THROWS_AS(from_permutation_generators(2, {{0, 2}}), NotAPermutation);
    Limits small;
    small.max_order = 100;
    CHECK_THROWS_AS(catalog("symmetric", 5, small), OrderCapExceeded);
    CHECK_THROWS_AS(from_permutation_generators(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, small), OrderCapExceeded);
}

TEST_CASE("group_op and group_inverse") {
    const auto s3 = catalog("symmetric", 3);
    for (Element g = 0; g < s3.order(); ++g) CHECK(group_op(s3, 0, g) == g);
    for (Element g = 0; g < s3.order(); ++g) {
        const auto& p = s3.permutation(g);
        if (oracle::sign(p) == -1) CHECK(group_inverse(s3, g) == g);
        CHECK(group_op(s3, g, group_inverse(s3, g)) == kIdentity);
    }
    CHECK_THROWS_AS(group_op(s3, 6, 0), IndexOutOfRange);
    CHECK_THROWS_AS(group_inverse(s3, 7), IndexOutOfRange);
}

TEST_CASE("subgroup_generated") {
    const auto z6 = from_cayley_table(oracle::addition_mod(6));
    CHECK(subgroup_generated(z6, {}).members() == std::vector<Element>{0});
    const std::vector<Element> two{2};
    CHECK(subgroup_generated(z6, two).members() == std::vector<Element>{0, 2, 4});
}

TEST_CASE("subgroup_generated: a 3-cycle in S3 generates A3") {
    const auto s3 = catalog("symmetric", 3);
    std::vector<Element> even;
    Element three_cycle = 0;
    for (Element g = 0; g < 6; ++g)
        if (oracle::sign(s3.permutation(g)) == 1) {
            even.push_back(g);
            if (g != 0) three_cycle = g;
        }
    const std::vector<Element> seed{three_cycle};
    const auto a3 = subgroup_generated(s3, seed);
    CHECK(a3.order() == 3);
    CHECK(a3.members() == even);
}

TEST_CASE("make_subgroup rejects non-subgroups") {
    const auto z6 = from_cayley_table(oracle::addition_mod(6));
    CHECK_THROWS_AS(make_subgroup(z6, {2, 4}), NotASubgroup);
    CHECK_THROWS_AS(make_subgroup(z6, {0, 1}), NotASubgroup);
    CHECK_THROWS_AS(make_subgroup(z6, {0, 9}), IndexOutOfRange);
    CHECK(make_subgroup(z6, {3, 0}).members() == std::vector<Element>{0, 3});
}

TEST_CASE("left_cosets") {
    const auto z6 = from_cayley_table(oracle::addition_mod(6));
    SUBCASE("whole group is one block") {
        const auto p = left_cosets(z6, make_subgroup(z6, {0, 1, 2, 3, 4, 5}));
        CHECK(p.blocks().size() == 1);
        CHECK(p.blocks()[0].size() == 6);
    }
    SUBCASE("trivial subgroup gives singletons") {
        const auto p = left_cosets(z6, make_subgroup(z6, {0}));
        CHECK(p.blocks().size() == 6);
        for (Element g = 0; g < 6; ++g) CHECK(p.blocks()[g] == std::vector<Element>{g});
    }
    SUBCASE("Z6 mod {0,2,4}") {
        const auto p = left_cosets(z6, make_subgroup(z6, {0, 2, 4}));
        REQUIRE(p.blocks().size() == 2);
        CHECK(p.blocks()[0] == std::vector<Element>{0, 2, 4});
        CHECK(p.blocks()[1] == std::vector<Element>{1, 3, 5});
        CHECK(p.representatives() == std::vector<Element>{0, 1});
    }
    SUBCASE("subgroup of another group is rejected") {
        const auto other = from_cayley_table(oracle::addition_mod(6));
        CHECK_THROWS_AS(left_cosets(z6, make_subgroup(other, {0, 3})), NotASubgroup);
    }
}

TEST_CASE("direct_product") {
    const auto z2 = catalog("cyclic", 2);
    const auto z3 = catalog("cyclic", 3);
    SUBCASE("trivial x H copies H") {
        const auto h = catalog("symmetric", 3);
        const auto p = direct_product(catalog("cyclic", 1), h);
        CHECK(p.cayley_table() == h.cayley_table());
    }
    SUBCASE("Z2 x Z2 is the Klein four-group") {
        const auto v = direct_product(z2, z2);
        CHECK(v.order() == 4);
        for (Element g = 1; g < 4; ++g) CHECK(v.op(g, g) == kIdentity);
    }
    SUBCASE("Z2 x Z3 has an element of order 6") {
        const auto p = direct_product(z2, z3);
        CHECK(p.order() == 6);
        CHECK(p.element_order(1 * 3 + 1) == 6);
        CHECK(p.label(4) == "((0 1),(0 1 2))");
    }
    SUBCASE("cap") {
        Limits small;
        small.max_order = 5;
        CHECK_THROWS_AS(direct_product(z2, z3, small), OrderCapExceeded);
    }
}

TEST_CASE("catalog") {
    CHECK(catalog("cyclic", 1).order() == 1);
    CHECK(catalog("symmetric", 3).order() == 6);
    CHECK(catalog("symmetric", 4).order() == 24);
    CHECK(catalog("dihedral", 4).order() == 8);
    CHECK(catalog("dihedral", 1).order() == 2);
    CHECK(catalog("dihedral", 2).order() == 4);
    CHECK(catalog("klein4").order() == 4);
    CHECK_THROWS_AS(catalog("alternating", 4), UnknownCatalogEntry);
    CHECK_THROWS_AS(catalog("cyclic", 0), UnknownCatalogEntry);
    CHECK_THROWS_AS(catalog("symmetric", 8), OrderCapExceeded);

    SUBCASE("dihedral(2) is elementary abelian of order 4") {
        const auto d2 = catalog("dihedral", 2);
        for (Element g = 1; g < 4; ++g) CHECK(d2.element_order(g) == 2);
    }
    SUBCASE("quaternion8 has a unique involution and six elements of order 4") {
        const auto q = catalog("quaternion8");
        CHECK(q.order() == 8);
        std::map<std::size_t, int> by_order;
        for (Element g = 0; g < 8; ++g) ++by_order[q.element_order(g)];
        CHECK(by_order[1] == 1);
        CHECK(by_order[2] == 1);
        CHECK(by_order[4] == 6);
    }
    SUBCASE("dihedral(n) has n + 1 involutions for odd n") {
        for (long n : {3, 5}) {
            const auto d = catalog("dihedral", n);
            int involutions = 0;
            for (Element g = 0; g < d.order(); ++g) involutions += d.element_order(g) == 2;
            CHECK(involutions == n);
        }
    }
}

TEST_CASE("property: catalog groups satisfy the axioms and spanning-tree words") {
    for (const auto& g : small_catalog()) {
        CAPTURE(g.order());
        CHECK(oracle::is_group_table(g.cayley_table()));
        CHECK_FALSE(g.associativity_sampled());
        for (Element x = 0; x < g.order(); ++x) {
            // Multiply the word back out.
            Element y = kIdentity;
            const auto word = g.generator_word(x);
            for (auto it = word.rbegin(); it != word.rend(); ++it) y = g.op(g.generators()[*it], y);
            CHECK(y == x);
        }
    }
}

TEST_CASE("property: coset partitions are atomic for every cyclic and 2-generated subgroup") {
    for (const auto& g : small_catalog()) {
        const auto n = static_cast<Element>(g.order());
        for (Element a = 0; a < n; ++a)
            for (Element b = a; b < n; b += 3) {
                const std::vector<Element> seeds{a, b};
                const auto k = subgroup_generated(g, seeds);
                CHECK(g.order() % k.order() == 0);
                for (auto side : {CosetSide::left, CosetSide::right}) {
                    const auto p = left_cosets(g, k, side);
                    std::vector<int> seen(n, 0);
                    for (std::size_t i = 0; i < p.blocks().size(); ++i) {
                        const auto& block = p.blocks()[i];
                        CHECK(block.size() == k.order());
                        CHECK(std::is_sorted(block.begin(), block.end()));
                        CHECK(p.representatives()[i] == block.front());
                        if (i > 0) CHECK(p.representatives()[i - 1] < p.representatives()[i]);
                        for (Element x : block) ++seen[x];
                    }
                    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
                    CHECK(p.blocks().size() * k.order() == g.order());
                }
            }
    }
}

TEST_CASE("property: construction is deterministic") {
    const auto a = from_permutation_generators(4, {{1, 2, 3, 0}, {3, 2, 1, 0}});
    const auto b = from_permutation_generators(4, {{1, 2, 3, 0}, {3, 2, 1, 0}});
    CHECK(a.cayley_table() == b.cayley_table());
    for (Element g = 0; g < a.order(); ++g) CHECK(a.permutation(g) == b.permutation(g));
    const auto ka = subgroup_generated(a, std::vector<Element>{1});
    const auto kb = subgroup_generated(b, std::vector<Element>{1});
    CHECK(left_cosets(a, ka).blocks() == left_cosets(b, kb).blocks());
}

TEST_CASE("large groups: sampled associativity and on-demand products") {
    const auto s6 = catalog("symmetric", 6);
    CHECK(s6.order() == 720);
    CHECK(s6.associativity_sampled());

    Limits exhaustive;
    exhaustive.associativity_exhaustive_cap = 1000;
    CHECK_FALSE(catalog("symmetric", 6, exhaustive).associativity_sampled());

    const auto s7 = catalog("symmetric", 7);
    CHECK(s7.order() == 5040);
    std::mt19937 rng(7);
    std::uniform_int_distribution<Element> pick(0, 5039);
    for (int i = 0; i < 200; ++i) {
        const Element a = pick(rng), b = pick(rng);
        CHECK(s7.permutation(s7.op(a, b)) == oracle::compose(s7.permutation(a), s7.permutation(b)));
        CHECK(s7.op(a, s7.inv(a)) == kIdentity);
    }
}

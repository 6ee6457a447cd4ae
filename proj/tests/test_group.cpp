#include <doctest.h>

#include "bredon/error.hpp"
#include "bredon/group.hpp"
#include "support.hpp"

using namespace bredon;

TEST_CASE("permutation parsing and composition") {
    auto a = Permutation::from_cycles(4, "(0 1 2 3)");
    auto b = Permutation::from_cycles(4, "(1,3)");
    CHECK(a.cycles() == "(0 1 2 3)");
    CHECK((a * b).images == std::vector<int>{1, 0, 3, 2});  // b first, then a
    CHECK((a * a.inverse()).is_identity());
    CHECK(Permutation::identity(3).cycles() == "()");
    CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 3)"), Error);
    CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 1 0)"), Error);
    CHECK_THROWS_AS(Permutation::from_cycles(3, "0 1"), Error);
}

TEST_CASE("named groups have the right orders") {
    const std::vector<std::pair<std::string, std::size_t>> cases = {
        {"C1", 1}, {"C2", 2}, {"C5", 5}, {"D2", 2}, {"D4", 4}, {"D8", 8}, {"D10", 10},
        {"S3", 6}, {"S4", 24}, {"A4", 12}, {"A5", 60}, {"Q8", 8}, {"perm:4:(0 1);(2 3)", 4}};
    for (const auto& [d, n] : cases) {
        CAPTURE(d);
        CHECK(make_named_group(d).order() == n);
    }
}

TEST_CASE("bad descriptors and the order cap") {
    CHECK_THROWS_AS(make_named_group("X3"), Error);
    CHECK_THROWS_AS(make_named_group("D7"), Error);
    CHECK_THROWS_AS(make_named_group("perm:3"), Error);
    try {
        make_named_group("S5", 100);
        FAIL("cap not enforced");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CapExceeded);
    }
}

TEST_CASE("group table is consistent") {
    auto g = make_named_group("S4");
    CHECK(g.element(0).is_identity());
    for (int a = 0; a < static_cast<int>(g.order()); ++a) {
        CHECK(g.mul(a, g.inv(a)) == 0);
        CHECK(g.element(g.mul(a, 5)) == g.element(a) * g.element(5));
    }
}

TEST_CASE("lattice matches brute-force subset closure") {
    for (std::string d : {"C1", "C2", "C4", "C6", "D4", "S3", "D8", "D10", "Q8", "D12", "A4", "C12"}) {
        CAPTURE(d);
        auto lat = build_lattice(make_named_group(d));
        const auto subs = testing::subgroups_by_subset_closure(lat->group());
        CHECK(lat->subgroups().size() == subs.size());
        CHECK(lat->class_count() == testing::conjugacy_class_count(lat->group(), subs));
        std::set<std::vector<int>> oracle(subs.begin(), subs.end());
        for (const auto& h : lat->subgroups()) CHECK(oracle.count(h.elements) == 1);
        for (std::size_t c = 0; c < lat->class_count(); ++c)
            CHECK(lat->weyl(c).order() == testing::weyl_order_oracle(lat->group(), lat->representative(c).elements));
    }
}

TEST_CASE("classes are ordered by order then lexicographically") {
    auto lat = build_lattice(make_named_group("S4"));
    CHECK(lat->class_count() == 11);
    CHECK(lat->representative(0).order() == 1);
    CHECK(lat->representative(lat->class_count() - 1).order() == 24);
    for (std::size_t c = 1; c < lat->class_count(); ++c) {
        const auto& a = lat->representative(c - 1);
        const auto& b = lat->representative(c);
        CHECK((a.order() < b.order() || (a.order() == b.order() && a.elements < b.elements)));
    }
    for (std::size_t c = 0; c < lat->class_count(); ++c)
        for (int m : lat->classes()[c].members)
            CHECK(lat->representative(c).elements <= lat->subgroups()[static_cast<std::size_t>(m)].elements);
}

TEST_CASE("subconjugacy and chains") {
    auto lat = build_lattice(make_named_group("D8"));
    const std::size_t n = lat->class_count();
    for (std::size_t c = 0; c < n; ++c) {
        CHECK(lat->subconjugate(0, c));
        CHECK(lat->subconjugate(c, n - 1));
        CHECK(lat->subconjugate(c, c));
    }
    CHECK(lat->longest_chain() == 4);
    CHECK(build_lattice(make_named_group("C1"))->longest_chain() == 1);
    CHECK(build_lattice(make_named_group("S4"))->longest_chain() == 5);
}

TEST_CASE("fixed points and orbit counts obey Burnside") {
    auto lat = build_lattice(make_named_group("A4"));
    const auto& g = lat->group();
    for (std::size_t k = 0; k < lat->class_count(); ++k) {
        const CosetSpace cs = coset_space(g, lat->representative(k));
        CHECK(cs.set.size() == g.order() / lat->representative(k).order());
        for (std::size_t h = 0; h < lat->class_count(); ++h) {
            const Subgroup& sub = lat->representative(h);
            std::size_t total = 0;
            for (int e : sub.elements) total += fixed_points(cs.set, generate_subgroup(g, {e})).size();
            CHECK(total % sub.order() == 0);
            CHECK(orbit_count(cs.set, sub) == total / sub.order());
            CHECK(!fixed_points(cs.set, sub).empty() == lat->subconjugate(h, k));
        }
    }
}

TEST_CASE("inconsistent G-set actions are rejected") {
    auto g = make_named_group("C4");
    CHECK_THROWS_AS(GSet(g, {Permutation::from_cycles(3, "(0 1 2)")}), Error);
    CHECK_NOTHROW(GSet(g, {Permutation::from_cycles(2, "(0 1)")}));
}

#include "doctest.h"
#include "hyperalg/heyting.hpp"

using namespace hyperalg;
using namespace hyperalg::heyting;

namespace {

std::vector<std::size_t> meet_table(const HeytingAlgebra& h) {
    std::vector<std::size_t> m(h.size() * h.size());
    for (std::size_t a = 0; a < h.size(); ++a)
        for (std::size_t b = 0; b < h.size(); ++b) m[a * h.size() + b] = h.meet(a, b);
    return m;
}

// Every topology on n points, by enumerating families of subsets.
std::vector<FiniteTopology> all_topologies(std::size_t n) {
    std::vector<std::string> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(std::string(1, static_cast<char>('a' + i)));
    const std::size_t subsets = std::size_t{1} << n;
    const Mask full = static_cast<Mask>(subsets - 1);
    std::vector<FiniteTopology> out;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
        if (!(fam & 1) || !(fam >> full & 1)) continue;
        bool ok = true;
        for (std::size_t a = 0; a < subsets && ok; ++a)
            for (std::size_t b = 0; b < subsets && ok; ++b)
                if ((fam >> a & 1) && (fam >> b & 1)) ok = (fam >> (a | b) & 1) && (fam >> (a & b) & 1);
        if (!ok) continue;
        std::vector<Mask> opens;
        for (std::size_t s = 0; s < subsets; ++s)
            if (fam >> s & 1) opens.push_back(static_cast<Mask>(s));
        out.push_back(make_topology(pts, opens));
    }
    return out;
}

bool same_tables(const HeytingAlgebra& a, const HeytingAlgebra& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y)
            if (a.meet(x, y) != b.meet(x, y) || a.join(x, y) != b.join(x, y) || a.impl(x, y) != b.impl(x, y)) return false;
    return true;
}

std::size_t idx(const HeytingAlgebra& h, const std::string& label) {
    auto i = h.find(label);
    REQUIRE(i.has_value());
    return *i;
}

}  // namespace

TEST_CASE("three-chain") {
    auto h = heyting_from_chain(3);
    std::size_t half = idx(h, "1/2"), one = h.top();
    CHECK(h.impl(half, 0) == 0);
    CHECK(h.join(half, h.neg(half)) == half);
    for (std::size_t a = 0; a < 3; ++a) CHECK(h.impl(a, a) == one);
    auto c = classify_elements(h);
    CHECK(c.regular == std::vector<std::size_t>{0, one});
    CHECK(c.complemented == std::vector<std::size_t>{0, one});
    CHECK_FALSE(c.is_boolean);
    CHECK(same_tables(c.h_reg, heyting_from_chain(2)));
}

TEST_CASE("chains") {
    CHECK(classify_elements(heyting_from_chain(2)).is_boolean);
    CHECK(classify_elements(heyting_from_chain(1)).is_boolean);
    auto h = heyting_from_chain(5);
    auto m = meet_table(h);
    for (std::size_t x = 0; x < 5; ++x)
        for (std::size_t y = 0; y < 5; ++y) {
            if (x > y) CHECK(h.impl(x, y) == y);
            CHECK(brute_force_implication(5, m, x, y) == h.impl(x, y));
        }
}

TEST_CASE("small topologies") {
    auto sierpinski = heyting_from_topology(make_topology({"a", "b"}, {0b00, 0b01, 0b11}));
    CHECK(same_tables(sierpinski, heyting_from_chain(3)));
    CHECK_FALSE(classify_elements(sierpinski).is_boolean);
    auto discrete = heyting_from_topology(make_topology({"a", "b"}, {0, 1, 2, 3}));
    CHECK(discrete.size() == 4);
    CHECK(classify_elements(discrete).is_boolean);
    auto indiscrete = heyting_from_topology(make_topology({"a", "b"}, {0, 3}));
    CHECK(indiscrete.size() == 2);
    // {x,y} -> {x} = {x} in {{}, {x}, {x,y}}
    auto t = heyting_from_topology(make_topology({"x", "y"}, {0, 1, 3}));
    CHECK(t.impl(idx(t, "{x,y}"), idx(t, "{x}")) == idx(t, "{x}"));
    CHECK_THROWS_AS(make_topology({"a", "b"}, {0, 1, 2}), Error);
    CHECK_THROWS_AS(make_topology({"a", "b", "c"}, {0, 1, 2, 7}), Error);
}

TEST_CASE("interior implication equals brute force on all topologies up to four points") {
    std::size_t count = 0;
    for (std::size_t n = 0; n <= 4; ++n)
        for (const auto& t : all_topologies(n)) {
            auto h = heyting_from_topology(t);
            auto m = meet_table(h);
            for (std::size_t a = 0; a < h.size(); ++a)
                for (std::size_t b = 0; b < h.size(); ++b) CHECK(brute_force_implication(h.size(), m, a, b) == h.impl(a, b));
            ++count;
        }
    CHECK(count == 1 + 1 + 4 + 29 + 355);
}

TEST_CASE("invariants on every topology of three points") {
    for (const auto& t : all_topologies(3)) {
        auto h = heyting_from_topology(t);
        for (std::size_t a = 0; a < h.size(); ++a) {
            CHECK(h.neg(h.neg(h.neg(a))) == h.neg(a));
            CHECK(h.le(a, h.neg(h.neg(a))));
            for (std::size_t b = 0; b < h.size(); ++b) {
                CHECK(h.meet(a, h.impl(a, b)) == h.meet(a, b));
                if (h.le(a, b)) CHECK(h.le(h.neg(b), h.neg(a)));
            }
        }
        CHECK(frame_law(h).passed);
        auto rep = law_report(h);
        CHECK(rep.all_required_pass());
        auto c = classify_elements(h);
        for (auto x : c.complemented) CHECK(std::find(c.regular.begin(), c.regular.end(), x) != c.regular.end());
        CHECK(c.is_boolean == (c.complemented.size() == h.size()));
        CHECK(classify_elements(c.h_reg).is_boolean);
        CHECK(classify_elements(c.h_comp).is_boolean);
    }
}

TEST_CASE("law report") {
    auto boolean = heyting_from_topology(make_topology({"a", "b", "c"}, {0, 1, 2, 3, 4, 5, 6, 7}));
    auto r = law_report(boolean);
    CHECK(r.all_required_pass());
    CHECK(r.block_passed);
    auto chain = law_report(heyting_from_chain(3));
    CHECK(chain.all_required_pass());
    CHECK(chain.block_passed);
    auto h = heyting_from_topology(make_topology({"1", "2", "3"}, {0, 0b001, 0b010, 0b011, 0b111}));
    auto bad = law_report(h);
    CHECK(bad.all_required_pass());
    CHECK_FALSE(bad.block_passed);
    CHECK(bad.block_agrees);
    const auto& w = bad.de_morgan_block[6].witness;
    REQUIRE(w.size() == 1);
    CHECK(h.label(w[0]) == "{1}");
    CHECK(h.label(h.join(h.neg(w[0]), h.neg(h.neg(w[0])))) == "{1,2}");
}

TEST_CASE("poset up-sets") {
    auto antichain = make_poset({"p", "q"}, std::vector<std::pair<std::size_t, std::size_t>>{});
    auto h = heyting_from_poset_upsets(antichain);
    CHECK(h.size() == 4);
    CHECK(classify_elements(h).is_boolean);
    auto two = make_poset({"p", "q"}, std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
    auto c = heyting_from_poset_upsets(two);
    CHECK(same_tables(c, heyting_from_chain(3)));
    CHECK(heyting_from_poset_upsets(two, Direction::Down).size() == 3);
    CHECK(heyting_from_poset_upsets(make_poset({"s"}, std::vector<std::pair<std::size_t, std::size_t>>{})).size() == 2);
    // a preorder is not a partial order
    CHECK_THROWS_AS(make_poset({"p", "q"}, std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(make_poset({"p", "q", "r"}, std::vector<std::vector<bool>>{{true, true, false}, {false, true, true}, {false, false, true}}),
                    Error);
}

TEST_CASE("lattices that are not Heyting") {
    for (auto l : {pentagon_lattice(), diamond_lattice()}) {
        try {
            heyting_from_lattice(l);
            FAIL("expected NotHeyting");
        } catch (const NotHeytingError& e) {
            CHECK(e.code() == Errc::NotHeyting);
            auto [a, b] = e.witness();
            CHECK_FALSE(brute_force_implication(5, l.meet, a, b).has_value());
        }
    }
    for (std::size_t n = 1; n <= 10; ++n) {
        auto h = heyting_from_lattice(chain_lattice(n));
        CHECK(h.size() == n);
        CHECK(h == heyting_from_chain(n));
    }
}

TEST_CASE("filters") {
    auto h = heyting_from_chain(3);
    std::size_t half = idx(h, "1/2"), one = h.top();
    CHECK(filter_generate(h, {}).elements() == std::vector<std::size_t>{one});
    CHECK(filter_generate(h, {half}).elements() == std::vector<std::size_t>{half, one});
    CHECK(filter_generate(h, {0}).elements().size() == 3);
    CHECK_THROWS_AS(make_filter(h, {half}), Error);
    CHECK_THROWS_AS(make_filter(h, {0, one}), Error);
    auto b = heyting_from_topology(make_topology({"a", "b"}, {0, 1, 2, 3}));
    auto f1 = filter_generate(b, {1}), f2 = filter_generate(b, {2});
    auto both = filter_intersection(f1, f2);
    CHECK_NOTHROW(make_filter(b, both.elements()));
    CHECK(both.elements() == std::vector<std::size_t>{b.top()});
}

TEST_CASE("quotients") {
    auto h = heyting_from_chain(3);
    std::size_t half = idx(h, "1/2"), one = h.top();
    auto same = quotient_by_filter(h, filter_generate(h, {}));
    CHECK(same.algebra.size() == 3);
    auto collapse = quotient_by_filter(h, filter_generate(h, {0}));
    CHECK(collapse.algebra.size() == 1);
    auto q = quotient_by_filter(h, filter_generate(h, {half}));
    CHECK(q.algebra.size() == 2);
    CHECK(q.projection[half] == q.projection[one]);
    CHECK(q.projection[0] == 0);
    CHECK(verify_morphism(h, q.algebra, q.projection).is_morphism());
    CHECK(kernel(h, q.algebra, q.projection).elements() == std::vector<std::size_t>{half, one});
}

TEST_CASE("morphisms and kernels") {
    auto h = heyting_from_chain(3), two = heyting_from_chain(2);
    std::size_t half = idx(h, "1/2");
    std::vector<std::size_t> id = {0, 1, 2};
    CHECK(verify_morphism(h, h, id).is_morphism());
    CHECK(kernel(h, h, id).elements() == std::vector<std::size_t>{h.top()});
    CHECK(first_isomorphism_holds(h, h, id));
    std::vector<std::size_t> up = {0, 1, 1};
    CHECK(verify_morphism(h, two, up).is_morphism());
    CHECK(kernel(h, two, up).elements() == std::vector<std::size_t>{half, h.top()});
    CHECK(first_isomorphism_holds(h, two, up));
    std::vector<std::size_t> down = {0, 0, 1};
    auto rep = verify_morphism(h, two, down);
    CHECK_FALSE(rep.is_morphism());
    CHECK_FALSE(rep.clauses[4].passed);
    REQUIRE(rep.clauses[4].witness.size() == 2);
    auto x = rep.clauses[4].witness[0], y = rep.clauses[4].witness[1];
    CHECK(down[h.impl(x, y)] != two.impl(down[x], down[y]));
}

TEST_CASE("factoring through a quotient") {
    // Boolean algebra on {a,b} onto Z2 by "contains a"
    auto b = heyting_from_topology(make_topology({"a", "b"}, {0, 1, 2, 3}));
    auto two = heyting_from_chain(2);
    std::vector<std::size_t> f(b.size());
    for (std::size_t x = 0; x < b.size(); ++x) f[x] = b.label(x).find('a') != std::string::npos ? 1 : 0;
    REQUIRE(verify_morphism(b, two, f).is_morphism());
    auto q = quotient_by_filter(b, kernel(b, two, f));
    auto g = factor_through_quotient(b, two, f, q);
    REQUIRE(g.has_value());
    CHECK(verify_morphism(q.algebra, two, *g).is_morphism());
    for (std::size_t x = 0; x < b.size(); ++x) CHECK((*g)[q.projection[x]] == f[x]);
    auto small = quotient_by_filter(b, filter_generate(b, {}));
    CHECK(factor_through_quotient(b, two, f, small).has_value());
    auto big = quotient_by_filter(b, filter_generate(b, {0}));
    CHECK_FALSE(factor_through_quotient(b, two, f, big).has_value());
}

TEST_CASE("H_reg join") {
    auto h = heyting_from_topology(make_topology({"1", "2", "3"}, {0, 0b001, 0b010, 0b011, 0b111}));
    auto c = classify_elements(h);
    CHECK(c.regular.size() == 4);
    CHECK(classify_elements(c.h_reg).is_boolean);
    CHECK(c.h_comp.size() == 2);
}

TEST_CASE("Boolean ring round trip") {
    for (std::size_t n : {1, 2, 3, 4, 8, 16}) {
        auto r = boolean_ring_roundtrip(n);
        for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name);
    }
    CHECK_THROWS_AS(boolean_ring_roundtrip(17), Error);
}

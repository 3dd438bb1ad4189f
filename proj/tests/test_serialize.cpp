#include <random>

#include "doctest.h"
#include "hyperalg/serialize.hpp"

using namespace hyperalg;
using io::Json;

namespace {

Rational frac(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

template <class T, class F>
T roundtrip(const T& value, F&& back) {
    return back(Json::parse(io::to_json(value).dump()));
}

}  // namespace

TEST_CASE("scalars and Cayley-Dickson elements") {
    CHECK(io::rational_from_json(io::to_json(Rational(-7, 12))) == Rational(-7, 12));
    CHECK(io::rational_from_json(Json(5)) == 5);
    CHECK_THROWS_AS(io::rational_from_json(Json(true)), Error);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int level = 0; level <= 4; ++level) {
        std::vector<Rational> c;
        for (std::size_t i = 0; i < (1u << level); ++i) c.push_back(frac(d(rng), 1 + (d(rng) + 9)));
        cd::Element<Rational> e(level, c);
        CHECK(roundtrip(e, io::element_from_json) == e);
    }
    CHECK_THROWS_AS(io::element_from_json(Json{{"level", 2}, {"coeffs", {"1"}}}), Error);
}

TEST_CASE("structure algebras and tensor elements") {
    for (const auto& name : qt::builtin_algebra_names()) {
        auto a = qt::builtin_algebra(name);
        auto back = roundtrip(a, io::structure_algebra_from_json);
        CHECK(back.name() == a.name());
        CHECK(back.table() == a.table());
        CHECK(back.unit() == a.unit());
        CHECK(back.classic_limit_functional() == a.classic_limit_functional());
    }
    auto alg = qt::tensor_algebra(qt::matrix_algebra(), 2);
    qt::Vec coeffs(alg->dim());
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = frac(static_cast<long>(i) - 3, 4);
    auto e = qt::make_element(alg, coeffs);
    auto back = roundtrip(e, io::qh_element_from_json);
    CHECK(back.coeffs == e.coeffs);
    CHECK(back.algebra->combined().table() == alg->combined().table());
    CHECK(io::structure_algebra_from_json(Json("T2")).dim() == 3);
    Json bad = io::to_json(qt::matrix_algebra());
    bad["unit"] = {"1", "0", "0", "0"};
    CHECK_THROWS_AS(io::structure_algebra_from_json(bad), Error);
}

TEST_CASE("abelian groups and matrices") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> d(0, 30), r(0, 3);
    for (int t = 0; t < 50; ++t) {
        abelian::FGAbelianGroup g(static_cast<std::size_t>(r(rng)), {Integer(d(rng)), Integer(d(rng)), Integer(d(rng))});
        CHECK(roundtrip(g, io::group_from_json) == g);
        CHECK(io::parse_group(g.to_string()) == g);
    }
    CHECK(io::parse_group("Z^2 + Z_4 + Z6") == abelian::FGAbelianGroup(2, {4, 6}));
    CHECK(io::parse_group("0").is_trivial());
    CHECK_THROWS_AS(io::parse_group("Q"), Error);
    CHECK_THROWS_AS(io::parse_group("Z_x"), Error);
    abelian::IntegerMatrix m{{1, -2, 3}, {4, 5, 6}};
    m(1, 1) = Integer("-123456789012345678901234567890");
    CHECK(roundtrip(m, io::integer_matrix_from_json) == m);
}

TEST_CASE("topologies, posets, lattices, Heyting algebras") {
    auto t = heyting::make_topology({"a", "b", "c"}, {0, 1, 3, 7});
    CHECK(roundtrip(t, io::topology_from_json).opens == t.opens);
    auto h = heyting::heyting_from_topology(t);
    CHECK(roundtrip(h, io::heyting_from_json) == h);
    auto p = heyting::make_poset({"x", "y", "z"}, std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}});
    auto pb = roundtrip(p, io::poset_from_json);
    CHECK(pb.le == p.le);
    CHECK(pb.elements == p.elements);
    auto n5 = heyting::pentagon_lattice();
    auto lb = roundtrip(n5, io::lattice_from_json);
    CHECK(lb.meet == n5.meet);
    CHECK(lb.join == n5.join);
    auto chain = heyting::chain_lattice(4);
    CHECK(io::heyting_from_json(io::to_json(chain)) == heyting::heyting_from_lattice(chain));
    Json bad = io::to_json(t);
    bad["opens"].push_back({"q"});
    CHECK_THROWS_AS(io::topology_from_json(bad), Error);
}

TEST_CASE("jet systems and fields") {
    for (const auto& s : pde::builtin_systems()) {
        auto back = roundtrip(s, io::system_from_json);
        CHECK(back.name == s.name);
        CHECK(back.coordinates == s.coordinates);
        CHECK(back.equations == s.equations);
        CHECK(back.algebra.exact == s.algebra.exact);
        CHECK(back.algebra.unit == s.algebra.unit);
    }
    auto r1 = pde::builtin_system("R1");
    Json text_form{{"coordinates", io::to_json(r1.coordinates)}, {"equations", {"u1_x^4 + u2_y^4 - u1_x^2"}}, {"algebra", "O"}};
    auto s = io::system_from_json(text_form);
    CHECK(s.equations[0] == r1.equations[0]);
    CHECK(s.algebra.dim() == 8);
    Json qh{{"qh", {{"base", "M2"}, {"level", 1}}}};
    CHECK(io::coefficient_algebra_from_json(qh).dim() == 8);
    Json wrong = io::to_json(r1.coordinates);
    wrong["variables"][4] = "u1_y";
    CHECK_THROWS_AS(io::coordinates_from_json(wrong), Error);

    auto f = pde::make_grid_field<double>(5, 4);
    f.values[2][1] = 0.125;
    f.dt = 0.01;
    CHECK(roundtrip(f, io::grid_field_from_json) == f);
}

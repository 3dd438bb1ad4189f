#include "doctest.h"
#include "hyperalg/cli.hpp"
#include "hyperalg/identities.hpp"
#include "hyperalg/serialize.hpp"

using namespace hyperalg;
using cli::run;
using io::Json;

namespace {
cd::Element<Rational> basis(int level, std::size_t i, int sign = 1) { return cd::Element<Rational>::basis(level, i, Rational(sign)); }
}  // namespace

TEST_CASE("table and comparisons") {
    auto r = run({"table", "--level", "3", "--compare", "paper-octonion", "--json"});
    CHECK(r.exit_code == 0);
    CHECK(r.json);
    CHECK(r.payload["compare"]["mismatch_count"] == 0);
    CHECK(run({"table", "--level", "3", "--compare", "octonion"}).exit_code == 0);
    auto cells = r.payload["table"]["cells"];
    for (std::size_t p = 0; p < 8; ++p)
        for (std::size_t q = 0; q < 8; ++q) {
            auto prod = cd::multiply(basis(3, p), basis(3, q));
            std::string expect;
            for (std::size_t k = 0; k < 8; ++k) {
                if (prod.coeffs()[k] == 0) continue;
                expect = (prod.coeffs()[k] < 0 ? "-" : "") + (k == 0 ? std::string("1") : "e" + std::to_string(k));
            }
            CHECK(cells[p][q] == expect);
        }
    auto s = run({"table", "--level", "4", "--compare", "paper-sedenion"});
    CHECK(s.exit_code == 0);
    CHECK(s.payload["diagnostics"]["mismatch_count"] == 6);
    CHECK(run({"table", "--compare", "paper-quaternion"}).exit_code == 0);
    auto q0 = run({"table", "--compare", "paper-quaternion-beta0"});
    CHECK(q0.exit_code == 0);
    CHECK(q0.payload["diagnostics"]["printed_norm_matches"] == false);
    CHECK(run({"table", "--level", "2", "--compare", "paper-octonion"}).exit_code == 2);
    CHECK(run({"table", "--compare", "nope"}).exit_code == 2);
    CHECK(run({"table", "--level", "12"}).exit_code == 2);
}

TEST_CASE("props and zerodiv") {
    auto r = run({"props", "--level", "4", "--mode", "exhaustive-basis"});
    CHECK(r.exit_code == 0);
    bool alt_fail = false, flex_pass = false;
    for (const auto& v : r.payload["verdicts"]) {
        if (v["name"] == "left_alternativity" && v["passed"] == false) {
            alt_fail = true;
            std::vector<cd::Element<Rational>> args;
            for (const auto& w : v["witness"]) args.push_back(io::element_from_json(w));
            CHECK_FALSE(cd::identity_holds("left_alternativity", args));
        }
        if (v["name"] == "flexibility" && v["passed"] == true) flex_pass = true;
    }
    CHECK(alt_fail);
    CHECK(flex_pass);

    auto a = run({"props", "--level", "4", "--mode", "random", "--count", "50", "--seed", "3"});
    auto b = run({"props", "--level", "4", "--mode", "random", "--count", "50", "--seed", "3", "--threads", "4"});
    CHECK(a.payload == b.payload);
    CHECK(a.payload["seed"] == 3);

    auto z = run({"zerodiv", "--level", "4"});
    CHECK(z.exit_code == 0);
    auto target = basis(4, 3) + basis(4, 10);
    auto partner = basis(4, 6) - basis(4, 15);
    bool found = false;
    for (const auto& p : z.payload["pairs"]) {
        auto x = io::element_from_json(p["a"]), y = io::element_from_json(p["b"]);
        CHECK(cd::multiply(x, y) == cd::Element<Rational>(4));
        if (x == target && y == partner) found = true;
    }
    CHECK(found);
    CHECK(run({"zerodiv", "--level", "4", "--threads", "3"}).payload == z.payload);
    CHECK(run({"zerodiv", "--level", "9"}).exit_code == 2);
}

TEST_CASE("qalg") {
    auto t = run({"qalg", "tensor", "--base", "M2", "--level", "3"});
    CHECK(t.exit_code == 0);
    CHECK(t.payload["dim"] == 32);
    CHECK(io::qh_algebra_from_json(t.payload["algebra"])->dim() == 32);
    CHECK(run({"qalg", "centre", "--base", "C", "--level", "2"}).payload["centre_dim"] == 2);
    auto c = run({"qalg", "classic-limit", "--base", "M2", "--level", "1", "--element", "1,0,0,3,0,0,0,0"});
    CHECK(c.payload["classic_limit"] == "2");
    CHECK(run({"qalg", "classic-limit", "--base", "T2", "--level", "1"}).payload["classic_limit"] == "1");
    CHECK(run({"qalg", "classic-limit", "--base", "M2", "--level", "1", "--element", "1,2"}).exit_code == 2);
    CHECK(run({"qalg", "bogus"}).exit_code == 2);
}

TEST_CASE("heyting") {
    auto b = run({"heyting", "build", "--chain", "3"});
    CHECK(b.exit_code == 0);
    CHECK(b.payload["implication_mismatches"] == 0);
    CHECK(io::heyting_from_json(b.payload["algebra"]) == heyting::heyting_from_chain(3));
    auto c = run({"heyting", "classify", "--chain", "3", "--json"});
    CHECK(c.payload["is_boolean"] == false);
    CHECK(c.payload["regular"] == Json::array({"0", "1"}));
    for (const char* n : {"pentagon", "diamond"}) {
        auto r = run({"heyting", "build", "--named", n});
        CHECK(r.exit_code == 1);
        CHECK(r.payload["witness"].contains("a"));
    }
    CHECK(run({"heyting", "laws", "--chain", "4"}).exit_code == 0);
    auto q = run({"heyting", "quotient", "--chain", "3", "--filter", "1/2"});
    CHECK(q.payload["quotient"]["labels"].size() == 2);
    CHECK(run({"heyting", "quotient", "--chain", "3", "--filter", "zz"}).exit_code == 2);
    CHECK(run({"heyting", "build", "--input", "/nonexistent.json"}).exit_code == 2);
}

TEST_CASE("abelian") {
    auto e = run({"abelian", "ext", "--a", "Z_28", "--b", "Z_2"});
    CHECK(io::group_from_json(e.payload["result"]) == abelian::FGAbelianGroup::cyclic(2));
    CHECK(run({"abelian", "iso", "--a", "Z15", "--b", "Z3+Z5"}).payload["isomorphic"] == true);
    CHECK(run({"abelian", "iso", "--a", "Z8", "--b", "Z4+Z2"}).payload["isomorphic"] == false);
    auto s = run({"abelian", "snf", "--matrix", "2,0;0,3"});
    CHECK(s.payload["diagonal"] == Json::array({"1", "6"}));
    CHECK(io::group_from_json(s.payload["cokernel"]) == abelian::FGAbelianGroup::cyclic(6));
    CHECK(run({"abelian", "homology", "--order", "28", "--degree", "1"}).payload["group"]["text"] == "Z_28");
    CHECK(run({"abelian", "homology", "--order", "28", "--degree", "2"}).payload["group"]["text"] == "0");
    auto x = run({"abelian", "extension-count", "--a", "Z28", "--b", "Z2"});
    CHECK(x.payload["direct_sum_order"] == "56");
    CHECK(x.payload["ext_order"] == "2");
    CHECK(run({"abelian", "extension-count", "--a", "Z", "--b", "Z2"}).exit_code == 2);
    CHECK(run({"abelian", "ext", "--a", "Z_28"}).exit_code == 2);
    CHECK(run({"abelian", "snf", "--matrix", "1,x"}).exit_code == 2);
}

TEST_CASE("pde") {
    auto j = run({"pde", "jacobian", "--system", "R1"});
    CHECK(j.payload["jacobian"][0][4] == "4*u1_x^3 - 2*u1_x");
    CHECK(run({"pde", "minors", "--system", "R1"}).payload["nonzero"] == 4);
    auto scan = run({"pde", "scan", "--system", "R1", "--point", "1;2;3;4;0;0;0;0", "--point", "0;0;0;0;0.5;0;0;0"});
    CHECK(scan.exit_code == 0);
    CHECK(scan.payload["points"][0]["classification"] == "singular");
    CHECK(scan.payload["points"][1]["classification"] == "off-variety");
    CHECK(scan.payload["points"][1]["satisfied"] == false);
    auto dflt = run({"pde", "scan"});
    CHECK(dflt.payload["points"][1]["classification"] == "regular");
    auto h = run({"pde", "heat", "--level", "4", "--nodes", "64", "--steps", "100", "--seed", "5"});
    CHECK(h.exit_code == 0);
    CHECK(h.payload["decoupled_bitwise"] == true);
    CHECK(io::grid_field_from_json(h.payload["field"]).values.size() == 64);
    CHECK(run({"pde", "heat", "--ratio", "0.6"}).exit_code == 2);
    CHECK(run({"pde", "dalembert", "--sample", "complex", "--nodes", "9"}).payload["commutative_associative"] == true);
    CHECK(run({"pde", "dimensions", "--m", "2", "--n", "2", "--k", "2"}).payload["dimensions"] == Json::array({4, 4, 8}));
    CHECK(run({"pde", "jacobian", "--system", "nope"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
}

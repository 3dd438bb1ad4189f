#include "hyperalg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "hyperalg/abelian.hpp"
#include "hyperalg/cd_core.hpp"
#include "hyperalg/heyting.hpp"
#include "hyperalg/identities.hpp"
#include "hyperalg/pde_singular.hpp"
#include "hyperalg/quantum_tensor.hpp"
#include "hyperalg/reference_tables.hpp"
#include "hyperalg/serialize.hpp"

namespace hyperalg::cli {

namespace {

using io::Json;
using io::to_json;

struct Options {
    bool json = false;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double tolerance = 1e-9;
    std::string input;
    int level = -1;
    std::string mode = "exhaustive-basis";
    std::size_t count = 1000;
    std::string compare;
    std::string action;
    std::string base = "M2";
    std::string element;
    std::size_t chain = 3;
    std::string named;
    std::string filter;
    std::string matrix;
    std::string a, b;
    std::string order = "28";
    std::size_t degree = 1;
    std::size_t dim = 0;
    std::string coeff = "Z";
    std::string system = "R1";
    std::size_t size = 2;
    std::vector<std::string> points;
    std::size_t nodes = 64;
    std::size_t steps = 100;
    double ratio = 0.4;
    std::string sample = "mixed";
    std::size_t m = 2, n = 2;
    int k = 1;
    std::string jet_mode = "full";
};

// Thrown by handlers to report a usage problem (exit 2).
struct UsageError {
    std::string message;
};

CommandResult ok(Json payload, std::string text) { return {0, std::move(payload), std::move(text), false}; }
CommandResult failed(Json payload, std::string text) { return {1, std::move(payload), std::move(text), false}; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidInput, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::InvalidInput, "invalid JSON in " + path + ": " + e.what());
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::string element_text(const cd::Element<Rational>& e) {
    std::string out;
    for (std::size_t i = 0; i < e.dim(); ++i) {
        if (sgn(e[i]) == 0) continue;
        Rational c = e[i];
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (c != 1) out += c.get_str() + "*";
        out += "e" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

int level_or(const Options& o, int fallback) { return o.level < 0 ? fallback : o.level; }

// table ---------------------------------------------------------------------

CommandResult cmd_table(const Options& o) {
    Json payload;
    std::ostringstream text;
    auto mismatch_json = [](const std::vector<cd::CellMismatch>& ms) {
        Json arr = Json::array();
        for (const auto& m : ms)
            arr.push_back({{"row", m.row}, {"col", m.col}, {"reference", m.reference}, {"generated", m.generated}});
        return arr;
    };
    const std::string& key = o.compare;
    static const std::vector<std::string> oct = {"paper-octonion", "octonion", "table5"};
    static const std::vector<std::string> sed = {"paper-sedenion", "sedenion", "table6"};
    static const std::vector<std::string> quat = {"paper-quaternion", "quaternion", "table3"};
    static const std::vector<std::string> quat0 = {"paper-quaternion-beta0", "quaternion-beta0", "table4"};
    auto in = [&](const std::vector<std::string>& v) { return std::find(v.begin(), v.end(), key) != v.end(); };

    if (key.empty() || in(oct) || in(sed)) {
        int level = level_or(o, in(sed) ? 4 : 3);
        const auto& table = cd::structure_constants(level);
        payload["table"] = to_json(table);
        text << "A_" << level << " (dim " << table.dim() << ")\n";
        for (const auto& row : payload["table"]["cells"]) {
            for (const auto& c : row) text << std::setw(5) << c.get<std::string>();
            text << "\n";
        }
        if (key.empty()) return ok(payload, text.str());
        int expect = in(oct) ? 3 : 4;
        if (level != expect) throw UsageError{"--compare " + key + " needs --level " + std::to_string(expect)};
        auto ms = cd::compare_cd_reference(level, in(oct) ? cd::octonion_reference() : cd::sedenion_reference());
        if (in(oct)) {
            payload["compare"] = {{"reference", "octonion"}, {"mismatch_count", ms.size()}, {"mismatches", mismatch_json(ms)}};
            text << "octonion reference: " << ms.size() << " mismatches\n";
            return ms.empty() ? ok(payload, text.str()) : failed(payload, text.str());
        }
        payload["diagnostics"] = {{"reference", "sedenion"},
                                  {"mismatch_count", ms.size()},
                                  {"mismatches", mismatch_json(ms)},
                                  {"note", "printed cells that differ from the recursion"}};
        text << "sedenion reference diagnostics: " << ms.size() << " cells differ from the recursion\n";
        for (const auto& m : ms)
            text << "  e" << m.row << "*e" << m.col << ": printed " << m.reference << ", recursion " << m.generated << "\n";
        return ok(payload, text.str());
    }
    if (in(quat) || in(quat0)) {
        bool beta_zero = in(quat0);
        auto ms = cd::compare_quaternion_reference(beta_zero);
        auto ref = cd::quaternion_reference(beta_zero);
        payload["compare"] = {{"reference", beta_zero ? "quaternion-beta0" : "quaternion"},
                              {"mismatch_count", ms.size()},
                              {"mismatches", mismatch_json(ms)},
                              {"trace", ref.trace.to_string(cd::qvar::name)},
                              {"norm", ref.norm.to_string(cd::qvar::name)}};
        text << (beta_zero ? "quaternionic (alpha, gamma)" : "quaternionic (alpha, beta, gamma)") << " table: " << ms.size()
             << " mismatches\n";
        text << "T = " << ref.trace.to_string(cd::qvar::name) << "\nN = " << ref.norm.to_string(cd::qvar::name) << "\n";
        if (beta_zero) {
            auto printed = cd::printed_beta_zero_norm();
            payload["diagnostics"] = {{"printed_norm", printed.to_string(cd::qvar::name)},
                                      {"printed_norm_matches", printed == ref.norm}};
            text << "printed norm " << printed.to_string(cd::qvar::name)
                 << (printed == ref.norm ? " matches\n" : " differs from the extension\n");
        }
        return ms.empty() ? ok(payload, text.str()) : failed(payload, text.str());
    }
    throw UsageError{"unknown --compare key '" + key +
                     "' (paper-octonion, paper-sedenion, paper-quaternion, paper-quaternion-beta0)"};
}

// props / zerodiv -------------------------------------------------------------

CommandResult cmd_props(const Options& o) {
    int level = level_or(o, 3);
    cd::BatteryOptions opts;
    opts.threads = o.threads;
    cd::PropertyReport r;
    if (o.mode == "exhaustive-basis") r = cd::identity_battery(level, cd::ExhaustiveBasis{}, opts);
    else r = cd::identity_battery(level, cd::RandomSample{o.count, o.seed}, opts);
    std::ostringstream text;
    text << "A_" << level << " " << o.mode << "\n";
    for (const auto& v : r.verdicts) {
        text << "  " << v.name << ": " << (v.passed ? "pass" : "fail");
        if (!v.passed) {
            text << " (";
            for (std::size_t i = 0; i < v.witness.size(); ++i) text << (i ? ", " : "") << element_text(v.witness[i]);
            text << ")";
        }
        text << "\n";
    }
    return ok(to_json(r), text.str());
}

CommandResult cmd_zerodiv(const Options& o) {
    int level = level_or(o, 4);
    auto pairs = cd::find_zero_divisors(level, cd::TwoTermSigned{}, o.threads);
    Json arr = Json::array();
    std::ostringstream text;
    text << pairs.size() << " two-term zero-divisor pairs in A_" << level << "\n";
    for (const auto& [a, b] : pairs) {
        arr.push_back({{"a", to_json(a)},
                       {"b", to_json(b)},
                       {"text", "(" + element_text(a) + ")(" + element_text(b) + ")"},
                       {"norm_a", to_json(cd::norm_sq(a))},
                       {"norm_b", to_json(cd::norm_sq(b))},
                       {"norm_ab", to_json(cd::norm_sq(cd::multiply(a, b)))}});
        text << "  (" << element_text(a) << ")(" << element_text(b) << ") = 0\n";
    }
    return ok(Json{{"level", level}, {"count", pairs.size()}, {"pairs", arr}}, text.str());
}

// qalg ------------------------------------------------------------------------

qt::Vec parse_vector(const std::string& s) {
    qt::Vec v;
    for (const auto& t : split(s, ',')) v.push_back(parse_rational(trim(t)));
    return v;
}

CommandResult cmd_qalg(const Options& o) {
    auto base = o.input.empty() ? qt::builtin_algebra(o.base) : io::structure_algebra_from_json(read_json_file(o.input));
    int level = level_or(o, 1);
    auto alg = qt::tensor_algebra(base, level);
    std::ostringstream text;
    Json payload{{"base", base.name()}, {"level", level}, {"dim", alg->dim()}};
    auto basis_json = [](const std::vector<qt::Vec>& b) {
        Json arr = Json::array();
        for (const auto& v : b) arr.push_back(to_json(v));
        return arr;
    };
    if (o.action == "tensor") {
        payload["associative"] = alg->associative();
        payload["base_associative"] = base.associative();
        payload["algebra"] = to_json(*alg);
        text << base.name() << " (x) A_" << level << ": dim " << alg->dim() << ", "
             << (alg->associative() ? "associative" : "not associative") << "\n";
    } else if (o.action == "centre") {
        auto c = qt::centre(alg->combined());
        payload["centre_dim"] = c.size();
        payload["centre"] = basis_json(c);
        text << "centre dimension " << c.size() << "\n";
    } else if (o.action == "nucleus") {
        auto nuc = qt::nucleus(alg->combined());
        payload["nucleus_dim"] = nuc.size();
        payload["nucleus"] = basis_json(nuc);
        text << "nucleus dimension " << nuc.size() << "\n";
    } else {
        qt::Vec coeffs = o.element.empty() ? alg->combined().unit() : parse_vector(o.element);
        auto e = qt::make_element(alg, coeffs);
        auto value = qt::classic_limit(e);
        payload["element"] = to_json(coeffs);
        payload["classic_limit"] = to_json(value);
        text << "c(x) = " << value.get_str() << "\n";
    }
    return ok(payload, text.str());
}

// heyting ---------------------------------------------------------------------

std::vector<std::string> labels_of(const heyting::HeytingAlgebra& h, const std::vector<std::size_t>& xs) {
    std::vector<std::string> out;
    for (auto x : xs) out.push_back(h.label(x));
    return out;
}

CommandResult cmd_heyting(const Options& o) {
    std::optional<heyting::LatticeTables> lattice;
    std::optional<heyting::HeytingAlgebra> h;
    std::string source;
    if (!o.input.empty()) {
        auto j = read_json_file(o.input);
        if (j.contains("topology")) {
            h = heyting::heyting_from_topology(io::topology_from_json(j.at("topology")));
            source = "topology";
        } else if (j.contains("poset")) {
            auto dir = j.value("direction", std::string("up")) == "down" ? heyting::Direction::Down : heyting::Direction::Up;
            h = heyting::heyting_from_poset_upsets(io::poset_from_json(j.at("poset")), dir);
            source = "poset";
        } else if (j.contains("heyting")) {
            h = io::heyting_from_json(j.at("heyting"));
            source = "heyting";
        } else if (j.contains("lattice")) {
            lattice = io::lattice_from_json(j.at("lattice"));
            source = "lattice";
        } else {
            throw Error(Errc::InvalidInput, "input needs a topology, poset, lattice or heyting key");
        }
    } else if (o.named == "pentagon" || o.named == "N5") {
        lattice = heyting::pentagon_lattice();
        source = "N5";
    } else if (o.named == "diamond" || o.named == "M3") {
        lattice = heyting::diamond_lattice();
        source = "M3";
    } else if (o.named.empty() || o.named == "chain") {
        h = heyting::heyting_from_chain(o.chain);
        source = "chain " + std::to_string(o.chain);
    } else {
        throw UsageError{"unknown --named lattice '" + o.named + "' (chain, pentagon, diamond)"};
    }
    if (lattice) {
        try {
            h = heyting::heyting_from_lattice(*lattice);
        } catch (const heyting::NotHeytingError& e) {
            auto [a, b] = e.witness();
            Json payload{{"source", source},
                         {"heyting", false},
                         {"witness", {{"a", lattice->labels.at(a)}, {"b", lattice->labels.at(b)}}},
                         {"message", e.what()}};
            return failed(payload, source + " is not a Heyting algebra: no greatest c with c ^ " + lattice->labels.at(a) +
                                       " <= " + lattice->labels.at(b) + "\n");
        }
    }
    std::ostringstream text;
    Json payload{{"source", source}, {"heyting", true}, {"size", h->size()}};
    if (o.action == "build") {
        payload["algebra"] = to_json(*h);
        text << source << ": Heyting algebra with " << h->size() << " elements\n";
        std::vector<std::size_t> meet;
        for (std::size_t a = 0; a < h->size(); ++a)
            for (std::size_t b = 0; b < h->size(); ++b) meet.push_back(h->meet(a, b));
        std::size_t mismatches = 0;
        for (std::size_t a = 0; a < h->size(); ++a)
            for (std::size_t b = 0; b < h->size(); ++b)
                if (heyting::brute_force_implication(h->size(), meet, a, b) != h->impl(a, b)) ++mismatches;
        payload["implication_mismatches"] = mismatches;
        if (mismatches) return failed(payload, text.str());
    } else if (o.action == "classify") {
        auto c = heyting::classify_elements(*h);
        payload["regular"] = labels_of(*h, c.regular);
        payload["complemented"] = labels_of(*h, c.complemented);
        payload["is_boolean"] = c.is_boolean;
        payload["h_reg"] = to_json(c.h_reg);
        text << (c.is_boolean ? "Boolean" : "not Boolean") << "; regular:";
        for (auto x : c.regular) text << " " << h->label(x);
        text << "\n";
    } else if (o.action == "laws") {
        auto r = heyting::law_report(*h);
        payload["laws"] = to_json(r, *h);
        text << "required laws " << (r.all_required_pass() ? "pass" : "fail") << "; De Morgan block "
             << (r.block_passed ? "holds" : "fails") << (r.block_agrees ? " (all seven agree)" : " (conditions disagree)")
             << "\n";
        if (!r.all_required_pass()) return failed(payload, text.str());
    } else {
        std::vector<std::size_t> members;
        for (const auto& t : split(o.filter, ',')) {
            auto x = h->find(trim(t));
            if (!x) throw UsageError{"unknown element '" + trim(t) + "' in --filter"};
            members.push_back(*x);
        }
        auto f = heyting::filter_generate(*h, members);
        auto q = heyting::quotient_by_filter(*h, f);
        payload["filter"] = labels_of(*h, f.elements());
        payload["quotient"] = to_json(q.algebra);
        Json proj = Json::object();
        for (std::size_t x = 0; x < h->size(); ++x) proj[h->label(x)] = q.algebra.label(q.projection[x]);
        payload["projection"] = proj;
        text << "quotient by filter of size " << f.elements().size() << " has " << q.algebra.size() << " elements\n";
    }
    return ok(payload, text.str());
}

// abelian ---------------------------------------------------------------------

abelian::IntegerMatrix parse_matrix(const std::string& s) {
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : split(s, ';')) {
        std::vector<Integer> row;
        for (const auto& c : split(r, ',')) {
            auto t = trim(c);
            if (t.empty() || t.find_first_not_of("-0123456789") != std::string::npos)
                throw Error(Errc::InvalidInput, "bad matrix entry '" + t + "'");
            row.emplace_back(t);
        }
        if (!rows.empty() && row.size() != rows[0].size()) throw Error(Errc::InvalidInput, "ragged matrix");
        rows.push_back(row);
    }
    if (rows.empty() || rows[0].empty()) throw Error(Errc::InvalidInput, "empty matrix");
    abelian::IntegerMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[0].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

CommandResult cmd_abelian(const Options& o) {
    using abelian::FGAbelianGroup;
    std::ostringstream text;
    Json payload{{"action", o.action}};
    auto need = [&](const std::string& v, const char* flag) {
        if (v.empty()) throw UsageError{std::string("abelian ") + o.action + " needs " + flag};
        return io::parse_group(v);
    };
    if (o.action == "snf") {
        auto m = o.input.empty() ? parse_matrix(o.matrix) : io::integer_matrix_from_json(read_json_file(o.input));
        auto s = abelian::smith_normal_form(m);
        Json d = Json::array();
        for (const auto& x : s.diagonal) d.push_back(x.get_str());
        auto g = abelian::decompose(m);
        payload["diagonal"] = d;
        payload["U"] = to_json(s.U);
        payload["V"] = to_json(s.V);
        payload["cokernel"] = to_json(g);
        text << "diagonal:";
        for (const auto& x : s.diagonal) text << " " << x.get_str();
        text << "\ncokernel: " << g.to_string() << "\n";
    } else if (o.action == "hom" || o.action == "ext" || o.action == "tensor") {
        auto a = need(o.a, "--a"), b = need(o.b, "--b");
        auto r = o.action == "hom" ? abelian::hom(a, b) : o.action == "ext" ? abelian::ext(a, b) : abelian::tensor(a, b);
        payload["a"] = to_json(a);
        payload["b"] = to_json(b);
        payload["result"] = to_json(r);
        text << o.action << "(" << a.to_string() << ", " << b.to_string() << ") = " << r.to_string() << "\n";
    } else if (o.action == "iso") {
        auto a = need(o.a, "--a"), b = need(o.b, "--b");
        bool iso = abelian::iso_check(a, b);
        payload["a"] = to_json(a);
        payload["b"] = to_json(b);
        payload["isomorphic"] = iso;
        text << a.to_string() << (iso ? " ~= " : " !~= ") << b.to_string() << "\n";
    } else if (o.action == "homology" || o.action == "cohomology") {
        Integer order(o.order);
        if (o.action == "homology") {
            auto g = abelian::cyclic_homology(order, o.degree);
            payload["group"] = to_json(g);
            text << "H_" << o.degree << "(Z_" << o.order << "; Z) = " << g.to_string() << "\n";
        } else {
            auto m = io::parse_group(o.coeff);
            auto prev = o.degree == 0 ? FGAbelianGroup::trivial() : abelian::cyclic_homology(order, o.degree - 1);
            auto g = abelian::cohomology_uct(prev, abelian::cyclic_homology(order, o.degree), m);
            payload["group"] = to_json(g);
            text << "H^" << o.degree << "(Z_" << o.order << "; " << m.to_string() << ") = " << g.to_string() << "\n";
        }
        payload["order"] = o.order;
        payload["degree"] = o.degree;
    } else if (o.action == "sphere") {
        auto g = abelian::sphere_homology(o.dim, o.degree);
        payload["group"] = to_json(g);
        payload["euler_characteristic"] = abelian::euler_characteristic(o.dim);
        text << "H_" << o.degree << "(S^" << o.dim << ") = " << g.to_string() << "\n";
    } else {
        auto base = need(o.a, "--a (base)"), fiber = need(o.b, "--b (fiber)");
        auto r = abelian::extension_count(base, fiber);
        payload["base_order"] = r.base_order.get_str();
        payload["fiber_order"] = r.fiber_order.get_str();
        payload["ext_order"] = r.ext_order.get_str();
        payload["ext_group"] = to_json(r.ext_group);
        payload["fiber_aut_trivial"] = r.fiber_aut_trivial;
        payload["direct_sum_order"] = r.direct_sum_order ? Json(r.direct_sum_order->get_str()) : Json(nullptr);
        text << "Ext(" << base.to_string() << ", " << fiber.to_string() << ") = " << r.ext_group.to_string() << " ("
             << r.ext_order.get_str() << " classes)";
        if (r.direct_sum_order) text << "; order " << r.direct_sum_order->get_str();
        text << "\n";
    }
    return ok(payload, text.str());
}

// pde ---------------------------------------------------------------------------

pde::PDESystem load_system(const Options& o, Json* file = nullptr) {
    if (o.input.empty()) return pde::builtin_system(o.system);
    auto j = read_json_file(o.input);
    if (file) *file = j;
    return io::system_from_json(j.contains("system") ? j.at("system") : j);
}

pde::JetPoint<double> parse_point(const std::string& s, const pde::PDESystem& sys) {
    pde::JetPoint<double> p;
    const auto unit = sys.algebra.unit_as<double>();
    for (const auto& entry : split(s, ';')) {
        auto parts = split(entry, ',');
        std::vector<double> v;
        try {
            for (const auto& c : parts) v.push_back(parse_rational(trim(c)).get_d());
        } catch (const std::exception&) {
            throw Error(Errc::InvalidInput, "bad point entry '" + entry + "'");
        }
        if (v.size() == 1 && unit.size() != 1) {
            double c = v[0];
            v = unit;
            for (auto& x : v) x *= c;
        }
        p.push_back(v);
    }
    return p;
}

std::string point_text(const pde::JetPoint<double>& p) {
    std::ostringstream s;
    s << "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s << ", ";
        if (p[i].size() == 1) {
            s << p[i][0];
        } else {
            s << "[";
            for (std::size_t k = 0; k < p[i].size(); ++k) s << (k ? "," : "") << p[i][k];
            s << "]";
        }
    }
    return s.str() + ")";
}

CommandResult cmd_pde(const Options& o) {
    std::ostringstream text;
    Json payload{{"action", o.action}};
    if (o.action == "dimensions") {
        auto mode = o.jet_mode == "symmetric" ? pde::JetMode::Symmetric : pde::JetMode::Full;
        auto d = pde::jet_dimensions(o.m, o.n, o.k, mode);
        payload["dimensions"] = d;
        payload["mode"] = o.jet_mode;
        text << "(";
        for (std::size_t i = 0; i < d.size(); ++i) text << (i ? "," : "") << d[i];
        text << ")\n";
        return ok(payload, text.str());
    }
    if (o.action == "systems") {
        Json arr = Json::array();
        for (const auto& s : pde::builtin_systems()) {
            Json eqs = Json::array();
            for (const auto& e : s.equations) eqs.push_back(pde::format_jet_polynomial(e, s.coordinates));
            arr.push_back({{"name", s.name}, {"coordinates", to_json(s.coordinates)}, {"equations", eqs}, {"algebra", s.algebra.name}});
            text << s.name << " over " << s.algebra.name << ":";
            for (const auto& e : eqs) text << "  " << e.get<std::string>() << " = 0";
            text << "\n";
        }
        payload["systems"] = arr;
        return ok(payload, text.str());
    }
    if (o.action == "heat") {
        int level = level_or(o, 4);
        auto alg = pde::cd_coefficients(level);
        std::mt19937_64 rng(o.seed);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        auto field = pde::make_grid_field<double>(o.nodes, alg.dim());
        for (auto& v : field.values)
            for (auto& c : v) c = dist(rng);
        const double dt = o.ratio * field.h * field.h;
        auto out = pde::heat_evolve(field, dt, o.steps);
        bool decoupled = true;
        for (std::size_t c = 0; c < alg.dim(); ++c) {
            auto single = pde::heat_evolve(pde::component_field(field, c), dt, o.steps);
            for (std::size_t i = 0; i < o.nodes; ++i)
                if (std::memcmp(&single.values[i][0], &out.values[i][c], sizeof(double)) != 0) decoupled = false;
        }
        double drift = 0.0;
        for (std::size_t c = 0; c < alg.dim(); ++c) {
            double before = 0, after = 0;
            for (std::size_t i = 0; i < o.nodes; ++i) {
                before += field.values[i][c];
                after += out.values[i][c];
            }
            drift = std::max(drift, std::fabs(before - after) / static_cast<double>(o.nodes));
        }
        auto constant = pde::make_grid_field<double>(o.nodes, alg.dim());
        for (auto& v : constant.values) v = field.values[0];
        auto evolved_constant = pde::heat_evolve(constant, dt, o.steps);
        bool fixed = true;
        for (std::size_t i = 0; i < o.nodes; ++i)
            if (std::memcmp(evolved_constant.values[i].data(), constant.values[i].data(), alg.dim() * sizeof(double)) != 0)
                fixed = false;
        const double pi = std::acos(-1.0);
        auto mode = pde::make_grid_field<double>(o.nodes, alg.dim());
        std::size_t comp = alg.dim() > 5 ? 5 : alg.dim() - 1;
        for (std::size_t i = 0; i < o.nodes; ++i)
            mode.values[i][comp] = std::sin(2 * pi * static_cast<double>(i) * mode.h);
        auto one = pde::heat_evolve(mode, dt, 1);
        const double factor = 1 - 4 * dt * std::pow(std::sin(pi * mode.h), 2) / (mode.h * mode.h);
        double err = 0.0;
        for (std::size_t i = 0; i < o.nodes; ++i)
            err = std::max(err, std::fabs(one.values[i][comp] - factor * mode.values[i][comp]));
        payload.update({{"algebra", alg.name},
                        {"nodes", o.nodes},
                        {"steps", o.steps},
                        {"dt", dt},
                        {"seed", o.seed},
                        {"decoupled_bitwise", decoupled},
                        {"constant_fixed_point", fixed},
                        {"mean_drift", drift},
                        {"mode_factor", {{"component", comp}, {"expected", factor}, {"max_error", err}}},
                        {"field", to_json(out)}});
        text << "heat over " << alg.name << ": " << o.steps << " steps on " << o.nodes << " nodes, dt " << dt << "\n"
             << "  componentwise decoupling " << (decoupled ? "bitwise exact" : "FAILED") << "\n"
             << "  constant field " << (fixed ? "fixed" : "NOT fixed") << "\n"
             << "  mean drift " << drift << ", single-mode factor error " << err << "\n";
        return decoupled && fixed ? ok(payload, text.str()) : failed(payload, text.str());
    }
    if (o.action == "dalembert") {
        int level = level_or(o, 3);
        auto alg = pde::cd_coefficients(level);
        if (alg.dim() < 4 && o.sample != "scalar") throw UsageError{"dalembert samples need --level >= 2"};
        std::vector<std::vector<double>> f, fp, g, gp;
        auto vec = [&](std::initializer_list<std::pair<std::size_t, double>> entries) {
            std::vector<double> v(alg.dim(), 0.0);
            for (auto [i, c] : entries) v[i] = c;
            return v;
        };
        for (std::size_t i = 0; i < o.nodes; ++i) {
            double x = 0.1 * static_cast<double>(i);
            if (o.sample == "scalar") {
                f.push_back(vec({{0, std::exp(x)}}));
                fp.push_back(vec({{0, std::exp(x)}}));
                g.push_back(vec({{0, std::sin(x) + 2}}));
                gp.push_back(vec({{0, std::cos(x)}}));
            } else if (o.sample == "complex") {
                f.push_back(vec({{0, std::cos(x)}, {1, std::sin(x)}}));
                fp.push_back(vec({{0, -std::sin(x)}, {1, std::cos(x)}}));
                g.push_back(vec({{0, 1 + x * x}, {1, x}}));
                gp.push_back(vec({{0, 2 * x}, {1, 1}}));
            } else if (o.sample == "mixed") {
                f.push_back(vec({{0, std::cos(x)}, {1, std::sin(x)}}));
                fp.push_back(vec({{0, -std::sin(x)}, {1, std::cos(x)}}));
                g.push_back(vec({{0, 1 + x * x}, {2, x}}));
                gp.push_back(vec({{0, 2 * x}, {2, 1}}));
            } else {
                throw UsageError{"unknown --sample '" + o.sample + "' (scalar, complex, mixed)"};
            }
        }
        auto r = pde::separable_dalembert_check(f, fp, g, gp, alg, o.tolerance);
        payload.update({{"algebra", alg.name},
                        {"sample", o.sample},
                        {"max_abs_residual", r.max_abs},
                        {"witness", {{"i", r.witness_i}, {"j", r.witness_j}, {"value", r.witness_value}}},
                        {"subalgebra_dim", r.subalgebra_dim},
                        {"commutative_associative", r.commutative_associative}});
        text << "u = f(x) g(y) over " << alg.name << " (" << o.sample << "): max |u u_xy - u_x u_y| = " << r.max_abs << "\n"
             << "  generated subalgebra dim " << r.subalgebra_dim << ", "
             << (r.commutative_associative ? "commutative and associative" : "not commutative-associative") << "\n";
        return ok(payload, text.str());
    }

    Json file;
    auto sys = load_system(o, &file);
    payload["system"] = sys.name;
    payload["coordinates"] = to_json(sys.coordinates);
    if (o.action == "jacobian") {
        auto jac = pde::formal_jacobian(sys);
        Json rows = Json::array();
        text << sys.name << " Jacobian over (";
        for (std::size_t j = 0; j < sys.coordinates.size(); ++j) text << (j ? ", " : "") << sys.coordinates.name(static_cast<int>(j));
        text << ")\n";
        for (const auto& row : jac) {
            Json r = Json::array();
            text << " ";
            for (const auto& e : row) {
                r.push_back(pde::format_jet_polynomial(e, sys.coordinates));
                text << " [" << r.back().get<std::string>() << "]";
            }
            text << "\n";
            rows.push_back(r);
        }
        payload["jacobian"] = rows;
        return ok(payload, text.str());
    }
    if (o.action == "minors") {
        auto minors = pde::minor_determinants(pde::formal_jacobian(sys), o.size);
        Json arr = Json::array();
        std::size_t nonzero = 0;
        for (const auto& m : minors) {
            if (m.det.is_zero()) continue;
            ++nonzero;
            auto t = pde::format_jet_polynomial(m.det, sys.coordinates);
            arr.push_back({{"rows", m.rows}, {"cols", m.cols}, {"det", t}});
            text << "  cols (";
            for (std::size_t i = 0; i < m.cols.size(); ++i) text << (i ? "," : "") << sys.coordinates.name(static_cast<int>(m.cols[i]));
            text << "): " << t << "\n";
        }
        payload.update({{"size", o.size}, {"total", minors.size()}, {"nonzero", nonzero}, {"minors", arr}});
        return ok(payload, std::to_string(nonzero) + " of " + std::to_string(minors.size()) + " minors nonzero\n" + text.str());
    }
    if (o.action == "scan") {
        std::vector<pde::JetPoint<double>> points;
        std::size_t size = o.size;
        if (file.is_object() && file.contains("points")) {
            for (const auto& p : file.at("points")) {
                pde::JetPoint<double> pt;
                for (const auto& v : p) pt.push_back(v.is_array() ? v.get<std::vector<double>>() : std::vector<double>{v.get<double>()});
                points.push_back(pt);
            }
            if (file.contains("minor_size")) size = file.at("minor_size").get<std::size_t>();
        }
        for (const auto& s : o.points) points.push_back(parse_point(s, sys));
        if (points.empty() && sys.name == "R1" && o.input.empty()) {
            const double s = std::pow(2.0, -0.25);
            points.push_back(parse_point("0;0;0;0;0;0;0;0", sys));
            points.push_back({{0}, {0}, {0}, {0}, {1}, {s}, {s}, {0}});
        }
        if (points.empty()) throw UsageError{"pde scan needs --point or an input file with points"};
        Json arr = Json::array();
        for (const auto& p : points) {
            Json entry{{"point", p}};
            try {
                auto c = pde::classify_point(sys, p, size, o.tolerance);
                entry["satisfied"] = true;
                entry.update(to_json(c));
            } catch (const Error& e) {
                if (e.code() != Errc::OffVariety) throw;
                entry["satisfied"] = false;
                entry["classification"] = "off-variety";
                entry["minor_diagnostics"] = Json::array();
                entry["message"] = e.what();
            }
            text << point_text(p) << ": " << entry["classification"].get<std::string>() << "\n";
            arr.push_back(entry);
        }
        payload["minor_size"] = size;
        payload["points"] = arr;
        return ok(payload, text.str());
    }
    throw UsageError{"unknown pde action"};
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
    Options o;
    CLI::App app{"Hypercomplex algebra toolkit", "hyperalg"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "emit the JSON payload");
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--tolerance", o.tolerance, "float tolerance");
    app.add_option("--input", o.input, "input JSON file");
    app.add_option("--level", o.level, "Cayley-Dickson level r")->check(CLI::Range(0, 16));

    auto* table = app.add_subcommand("table", "multiplication table of A_r, optional reference comparison");
    table->add_option("--compare", o.compare, "paper-octonion | paper-sedenion | paper-quaternion | paper-quaternion-beta0");

    auto* props = app.add_subcommand("props", "identity battery");
    props->add_option("--mode", o.mode)->check(CLI::IsMember({"exhaustive-basis", "random"}));
    props->add_option("--count", o.count, "random sample size");

    app.add_subcommand("zerodiv", "two-term zero divisors");

    auto* qalg = app.add_subcommand("qalg", "quantum tensor algebra B (x) A_r");
    qalg->add_option("action", o.action)->required()->check(CLI::IsMember({"tensor", "centre", "nucleus", "classic-limit"}));
    qalg->add_option("--base", o.base, "R | C | M2 | T2");
    qalg->add_option("--element", o.element, "comma-separated coefficients");

    auto* heyt = app.add_subcommand("heyting", "finite Heyting algebras");
    heyt->add_option("action", o.action)->required()->check(CLI::IsMember({"build", "laws", "classify", "quotient"}));
    heyt->add_option("--chain", o.chain, "chain length")->check(CLI::Range(1, 256));
    heyt->add_option("--named", o.named, "chain | pentagon | diamond");
    heyt->add_option("--filter", o.filter, "comma-separated generator labels");

    auto* ab = app.add_subcommand("abelian", "finitely generated abelian groups");
    ab->add_option("action", o.action)
        ->required()
        ->check(CLI::IsMember({"snf", "hom", "ext", "tensor", "iso", "homology", "cohomology", "sphere", "extension-count"}));
    ab->add_option("--matrix", o.matrix, "rows separated by ';', entries by ','");
    ab->add_option("--a", o.a, "group, e.g. Z_28 or Z^2+Z_4");
    ab->add_option("--b", o.b, "group");
    ab->add_option("--order", o.order, "cyclic group order");
    ab->add_option("--degree", o.degree);
    ab->add_option("--dim", o.dim, "sphere dimension");
    ab->add_option("--coeff", o.coeff, "coefficient group");

    auto* pd = app.add_subcommand("pde", "singular PDE systems");
    pd->add_option("action", o.action)
        ->required()
        ->check(CLI::IsMember({"systems", "jacobian", "minors", "scan", "heat", "dalembert", "dimensions"}));
    pd->add_option("--system", o.system, "R1 | S1 | T1 | heat | dalembert");
    pd->add_option("--size", o.size, "minor size");
    pd->add_option("--point", o.points, "jet point: entries ';', components ','");
    pd->add_option("--nodes", o.nodes)->check(CLI::Range(3, 1 << 20));
    pd->add_option("--steps", o.steps);
    pd->add_option("--ratio", o.ratio, "dt / h^2");
    pd->add_option("--sample", o.sample, "scalar | complex | mixed");
    pd->add_option("--m", o.m);
    pd->add_option("--n", o.n);
    pd->add_option("--k", o.k);
    pd->add_option("--jet-mode", o.jet_mode)->check(CLI::IsMember({"full", "symmetric"}));

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

    auto usage = [&](const std::string& message) {
        CommandResult r{2, Json{{"error", {{"code", "Usage"}, {"message", message}}}, {"usage", app.help()}},
                        message + "\n" + app.help(), o.json};
        return r;
    };

    std::vector<const char*> argv{"hyperalg"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        return {0, Json{{"usage", app.help()}}, app.help(), o.json};
    } catch (const CLI::CallForAllHelp&) {
        return {0, Json{{"usage", app.help("", CLI::AppFormatMode::All)}}, app.help("", CLI::AppFormatMode::All), o.json};
    } catch (const CLI::ParseError& e) {
        return usage(e.what());
    }

    CommandResult result;
    try {
        if (table->parsed()) result = cmd_table(o);
        else if (props->parsed()) result = cmd_props(o);
        else if (qalg->parsed()) result = cmd_qalg(o);
        else if (heyt->parsed()) result = cmd_heyting(o);
        else if (ab->parsed()) result = cmd_abelian(o);
        else if (pd->parsed()) result = cmd_pde(o);
        else result = cmd_zerodiv(o);
    } catch (const UsageError& e) {
        return usage(e.message);
    } catch (const Error& e) {
        result = {2, Json{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}},
                  std::string(errc_name(e.code())) + ": " + e.what() + "\n", false};
    }
    result.json = o.json;
    return result;
}

}  // namespace hyperalg::cli

#include "hyperalg/serialize.hpp"

#include <cctype>

#include "hyperalg/reference_tables.hpp"

namespace hyperalg::io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw Error(Errc::InvalidInput, std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T as(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw Error(Errc::InvalidInput, std::string("malformed value for ") + what);
    }
}

Json index_matrix(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& at) {
    Json rows = Json::array();
    for (std::size_t a = 0; a < n; ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < n; ++b) row.push_back(at(a, b));
        rows.push_back(row);
    }
    return rows;
}

template <class T>
std::vector<T> flatten_matrix(const Json& j, std::size_t n, const char* what) {
    if (!j.is_array() || j.size() != n) throw Error(Errc::InvalidInput, std::string(what) + " must be an n x n array");
    std::vector<T> out;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != n) throw Error(Errc::InvalidInput, std::string(what) + " must be an n x n array");
        for (const auto& v : row) {
            auto x = as<std::size_t>(v, what);
            if (x >= n) throw Error(Errc::InvalidInput, std::string(what) + " entry out of range");
            out.push_back(static_cast<T>(x));
        }
    }
    return out;
}

}  // namespace

Json to_json(const Rational& v) { return v.get_str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error(Errc::InvalidInput, "rational must be a string or integer");
}

Json to_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(to_json(c));
    return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
    if (!j.is_array()) throw Error(Errc::InvalidInput, "expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& c : j) out.push_back(rational_from_json(c));
    return out;
}

Json to_json(const cd::Element<Rational>& e) {
    return Json{{"level", e.level()}, {"coeffs", to_json(std::vector<Rational>(e.coeffs().begin(), e.coeffs().end()))}};
}

cd::Element<Rational> element_from_json(const Json& j) {
    return cd::Element<Rational>(as<int>(field(j, "level"), "level"), rationals_from_json(field(j, "coeffs")));
}

Json to_json(const cd::PropertyReport& r) {
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) {
        Json w = Json::array();
        for (const auto& e : v.witness) w.push_back(to_json(e));
        verdicts.push_back({{"name", v.name}, {"passed", v.passed}, {"checks", v.checks}, {"witness", w}});
    }
    return Json{{"level", r.level},
                {"mode", r.kind == cd::SampleKind::ExhaustiveBasis ? "exhaustive-basis" : "random"},
                {"sample_count", r.sample_count},
                {"seed", r.seed},
                {"verdicts", verdicts}};
}

Json to_json(const cd::MultiplicationTable& t) {
    Json rows = Json::array();
    for (std::size_t p = 0; p < t.dim(); ++p) {
        Json row = Json::array();
        for (std::size_t q = 0; q < t.dim(); ++q) {
            auto e = t.product(p, q);
            row.push_back(cd::format_signed_basis({e.sign, e.index}));
        }
        rows.push_back(row);
    }
    return Json{{"level", t.level()}, {"dim", t.dim()}, {"cells", rows}};
}

Json to_json(const StructureConstants<Rational>& t) {
    Json products = Json::array();
    for (std::size_t p = 0; p < t.dim(); ++p)
        for (std::size_t q = 0; q < t.dim(); ++q)
            for (const auto& [k, g] : t.product(p, q)) products.push_back(Json::array({p, q, k, to_json(g)}));
    return Json{{"dim", t.dim()}, {"products", products}};
}

StructureConstants<Rational> structure_constants_from_json(const Json& j) {
    auto dim = as<std::size_t>(field(j, "dim"), "dim");
    if (dim == 0 || dim > 4096) throw Error(Errc::InvalidInput, "dimension out of range");
    StructureConstants<Rational> t(dim);
    for (const auto& e : field(j, "products")) {
        if (!e.is_array() || e.size() != 4) throw Error(Errc::InvalidInput, "product entries are [p, q, k, gamma]");
        auto p = as<std::size_t>(e[0], "p"), q = as<std::size_t>(e[1], "q"), k = as<std::size_t>(e[2], "k");
        if (p >= dim || q >= dim || k >= dim) throw Error(Errc::InvalidInput, "product index out of range");
        t.add(p, q, k, rational_from_json(e[3]));
    }
    return t;
}

Json to_json(const qt::StructureAlgebra& a) {
    Json out = to_json(a.table());
    out["name"] = a.name();
    out["unit"] = to_json(a.unit());
    out["functional"] = a.classic_limit_functional() ? to_json(*a.classic_limit_functional()) : Json(nullptr);
    return out;
}

qt::StructureAlgebra structure_algebra_from_json(const Json& j) {
    if (j.is_string()) return qt::builtin_algebra(j.get<std::string>());
    std::optional<qt::Vec> functional;
    if (j.contains("functional") && !j.at("functional").is_null()) functional = rationals_from_json(j.at("functional"));
    return qt::StructureAlgebra(as<std::string>(field(j, "name"), "name"), structure_constants_from_json(j),
                                rationals_from_json(field(j, "unit")), functional);
}

Json to_json(const qt::QHAlgebra& a) { return Json{{"base", to_json(a.base())}, {"level", a.level()}}; }

qt::QHAlgebraPtr qh_algebra_from_json(const Json& j) {
    return qt::tensor_algebra(structure_algebra_from_json(field(j, "base")), as<int>(field(j, "level"), "level"));
}

Json to_json(const qt::QHElement& e) {
    return Json{{"algebra", to_json(*e.algebra)}, {"coeffs", to_json(e.coeffs)}};
}

qt::QHElement qh_element_from_json(const Json& j) {
    return qt::make_element(qh_algebra_from_json(field(j, "algebra")), rationals_from_json(field(j, "coeffs")));
}

Json to_json(const abelian::FGAbelianGroup& g) {
    Json t = Json::array();
    for (const auto& d : g.torsion()) t.push_back(d.get_str());
    return Json{{"free_rank", g.free_rank()}, {"torsion", t}, {"text", g.to_string()}};
}

abelian::FGAbelianGroup group_from_json(const Json& j) {
    if (j.is_string()) return parse_group(j.get<std::string>());
    std::vector<Integer> orders;
    for (const auto& d : field(j, "torsion")) {
        if (d.is_number_integer()) orders.emplace_back(d.get<long>());
        else orders.emplace_back(as<std::string>(d, "torsion"));
    }
    return abelian::FGAbelianGroup(as<std::size_t>(field(j, "free_rank"), "free_rank"), orders);
}

abelian::FGAbelianGroup parse_group(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error(Errc::InvalidInput, "empty group expression");
    std::size_t rank = 0;
    std::vector<Integer> orders;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto end = s.find('+', start);
        if (end == std::string::npos) end = s.size();
        std::string tok = s.substr(start, end - start);
        auto bad = [&] { throw Error(Errc::InvalidInput, "cannot parse group summand '" + tok + "'"); };
        auto digits = [&](const std::string& d) {
            if (d.empty() || d.find_first_not_of("0123456789") != std::string::npos) bad();
            return d;
        };
        if (tok == "0") {
        } else if (tok == "Z") {
            rank += 1;
        } else if (tok.rfind("Z^", 0) == 0) {
            rank += std::stoul(digits(tok.substr(2)));
        } else if (tok.rfind("Z_", 0) == 0) {
            orders.emplace_back(digits(tok.substr(2)));
        } else if (tok.size() > 1 && tok[0] == 'Z') {
            orders.emplace_back(digits(tok.substr(1)));
        } else {
            bad();
        }
        start = end + 1;
    }
    return abelian::FGAbelianGroup(rank, orders);
}

Json to_json(const abelian::IntegerMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
        rows.push_back(row);
    }
    return rows;
}

abelian::IntegerMatrix integer_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw Error(Errc::InvalidInput, "matrix must be a nonempty array of rows");
    abelian::IntegerMatrix m(j.size(), j[0].size());
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != m.cols()) throw Error(Errc::InvalidInput, "ragged matrix");
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& v = j[r][c];
            if (v.is_number_integer()) m(r, c) = v.get<long>();
            else m(r, c) = Integer(as<std::string>(v, "matrix entry"));
        }
    }
    return m;
}

Json to_json(const heyting::FiniteTopology& t) {
    Json opens = Json::array();
    for (auto m : t.opens) {
        Json set = Json::array();
        for (std::size_t i = 0; i < t.points.size(); ++i)
            if (m >> i & 1u) set.push_back(t.points[i]);
        opens.push_back(set);
    }
    return Json{{"points", t.points}, {"opens", opens}};
}

heyting::FiniteTopology topology_from_json(const Json& j) {
    auto points = as<std::vector<std::string>>(field(j, "points"), "points");
    std::vector<heyting::Mask> opens;
    for (const auto& set : field(j, "opens")) {
        heyting::Mask m = 0;
        for (const auto& name : set) {
            auto label = as<std::string>(name, "open set member");
            auto it = std::find(points.begin(), points.end(), label);
            if (it == points.end()) throw Error(Errc::InvalidTopology, "unknown point " + label);
            m |= heyting::Mask(1) << (it - points.begin());
        }
        opens.push_back(m);
    }
    return heyting::make_topology(points, opens);
}

Json to_json(const heyting::FinitePoset& p) {
    Json le = Json::array();
    for (std::size_t a = 0; a < p.elements.size(); ++a)
        for (std::size_t b = 0; b < p.elements.size(); ++b)
            if (a != b && p.le[a][b]) le.push_back(Json::array({p.elements[a], p.elements[b]}));
    return Json{{"elements", p.elements}, {"le", le}};
}

heyting::FinitePoset poset_from_json(const Json& j) {
    auto elements = as<std::vector<std::string>>(field(j, "elements"), "elements");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    auto idx = [&](const Json& v) {
        auto label = as<std::string>(v, "poset element");
        auto it = std::find(elements.begin(), elements.end(), label);
        if (it == elements.end()) throw Error(Errc::InvalidPoset, "unknown element " + label);
        return static_cast<std::size_t>(it - elements.begin());
    };
    for (const auto& pr : field(j, "le")) {
        if (!pr.is_array() || pr.size() != 2) throw Error(Errc::InvalidInput, "le entries are [a, b] pairs");
        pairs.emplace_back(idx(pr[0]), idx(pr[1]));
    }
    return heyting::make_poset(elements, pairs);
}

Json to_json(const heyting::LatticeTables& l) {
    const std::size_t n = l.labels.size();
    return Json{{"labels", l.labels},
                {"meet", index_matrix(n, [&](std::size_t a, std::size_t b) { return l.meet[a * n + b]; })},
                {"join", index_matrix(n, [&](std::size_t a, std::size_t b) { return l.join[a * n + b]; })}};
}

heyting::LatticeTables lattice_from_json(const Json& j) {
    heyting::LatticeTables l;
    l.labels = as<std::vector<std::string>>(field(j, "labels"), "labels");
    l.meet = flatten_matrix<std::size_t>(field(j, "meet"), l.labels.size(), "meet");
    l.join = flatten_matrix<std::size_t>(field(j, "join"), l.labels.size(), "join");
    return l;
}

Json to_json(const heyting::HeytingAlgebra& h) {
    const std::size_t n = h.size();
    return Json{{"labels", h.labels()},
                {"meet", index_matrix(n, [&](std::size_t a, std::size_t b) { return h.meet(a, b); })},
                {"join", index_matrix(n, [&](std::size_t a, std::size_t b) { return h.join(a, b); })},
                {"impl", index_matrix(n, [&](std::size_t a, std::size_t b) { return h.impl(a, b); })}};
}

heyting::HeytingAlgebra heyting_from_json(const Json& j) {
    if (!j.contains("impl")) return heyting::heyting_from_lattice(lattice_from_json(j));
    auto labels = as<std::vector<std::string>>(field(j, "labels"), "labels");
    const std::size_t n = labels.size();
    if (n > heyting::kMaxLattice) throw Error(Errc::SetTooLarge, "lattice too large");
    return heyting::HeytingAlgebra(labels, flatten_matrix<std::uint16_t>(field(j, "meet"), n, "meet"),
                                   flatten_matrix<std::uint16_t>(field(j, "join"), n, "join"),
                                   flatten_matrix<std::uint16_t>(field(j, "impl"), n, "impl"));
}

Json to_json(const heyting::LawCheck& c, const heyting::HeytingAlgebra& h) {
    Json w = Json::array();
    for (auto x : c.witness) w.push_back(h.label(x));
    return Json{{"name", c.name}, {"passed", c.passed}, {"witness", w}};
}

Json to_json(const heyting::LawReport& r, const heyting::HeytingAlgebra& h) {
    Json axioms = Json::array(), block = Json::array();
    for (const auto& c : r.axioms) axioms.push_back(to_json(c, h));
    for (const auto& c : r.de_morgan_block) block.push_back(to_json(c, h));
    return Json{{"axioms", axioms},
                {"regular_de_morgan", to_json(r.regular_de_morgan, h)},
                {"weak_de_morgan", to_json(r.weak_de_morgan, h)},
                {"de_morgan_block", block},
                {"block_agrees", r.block_agrees},
                {"block_passed", r.block_passed},
                {"triple_negation", to_json(r.triple_negation, h)},
                {"negation_fixed_point", to_json(r.negation_fixed_point, h)},
                {"all_required_pass", r.all_required_pass()}};
}

Json to_json(const pde::JetCoordinateSystem& c) {
    Json vars = Json::array();
    for (const auto& v : c.variables()) vars.push_back(v.name);
    return Json{{"independent", c.independent()},
                {"dependent", c.dependent()},
                {"order", c.order()},
                {"mode", c.mode() == pde::JetMode::Full ? "full" : "symmetric"},
                {"variables", vars}};
}

pde::JetCoordinateSystem coordinates_from_json(const Json& j) {
    auto mode_name = j.contains("mode") ? as<std::string>(j.at("mode"), "mode") : std::string("full");
    if (mode_name != "full" && mode_name != "symmetric") throw Error(Errc::InvalidInput, "mode must be full or symmetric");
    pde::JetCoordinateSystem c(as<std::vector<std::string>>(field(j, "independent"), "independent"),
                               as<std::vector<std::string>>(field(j, "dependent"), "dependent"),
                               as<int>(field(j, "order"), "order"),
                               mode_name == "full" ? pde::JetMode::Full : pde::JetMode::Symmetric);
    if (j.contains("variables")) {
        auto vars = as<std::vector<std::string>>(j.at("variables"), "variables");
        std::vector<std::string> mine;
        for (const auto& v : c.variables()) mine.push_back(v.name);
        if (vars != mine) throw Error(Errc::InvalidInput, "variable list disagrees with the coordinate ordering");
    }
    return c;
}

Json to_json(const pde::JetPolynomial& p, const pde::JetCoordinateSystem& c) {
    Json terms = Json::array();
    for (const auto& [m, coeff] : p.terms()) {
        Json powers = Json::array();
        for (const auto& [id, e] : m.powers()) powers.push_back(Json::array({c.name(id), e}));
        terms.push_back({{"coeff", to_json(coeff)}, {"powers", powers}});
    }
    return Json{{"terms", terms}, {"text", pde::format_jet_polynomial(p, c)}};
}

pde::JetPolynomial jet_polynomial_from_json(const Json& j, const pde::JetCoordinateSystem& c) {
    if (j.is_string()) return pde::parse_jet_polynomial(j.get<std::string>(), c);
    pde::JetPolynomial p;
    for (const auto& t : field(j, "terms")) {
        Monomial m;
        for (const auto& pw : field(t, "powers")) {
            if (!pw.is_array() || pw.size() != 2) throw Error(Errc::InvalidInput, "powers are [name, exponent] pairs");
            int e = as<int>(pw[1], "exponent");
            if (e < 1) throw Error(Errc::InvalidInput, "exponents must be positive");
            m = m * Monomial::var(c.id(as<std::string>(pw[0], "variable")), e);
        }
        p += pde::JetPolynomial::term(rational_from_json(field(t, "coeff")), m);
    }
    return p;
}

Json to_json(const pde::CoefficientAlgebra& a) {
    Json out = to_json(a.exact);
    out["name"] = a.name;
    out["unit"] = to_json(a.unit);
    return out;
}

pde::CoefficientAlgebra coefficient_algebra_from_json(const Json& j) {
    if (j.is_string()) {
        static const std::vector<std::string> names = {"R", "C", "H", "O", "S"};
        auto s = j.get<std::string>();
        auto it = std::find(names.begin(), names.end(), s);
        if (it != names.end()) return pde::cd_coefficients(static_cast<int>(it - names.begin()));
        if (s.size() > 1 && s[0] == 'A' && s.find_first_not_of("0123456789", 1) == std::string::npos)
            return pde::cd_coefficients(std::stoi(s.substr(1)));
        throw Error(Errc::InvalidInput, "unknown algebra " + s);
    }
    if (j.contains("cd_level")) return pde::cd_coefficients(as<int>(j.at("cd_level"), "cd_level"));
    if (j.contains("qh")) return pde::qh_coefficients(*qh_algebra_from_json(j.at("qh")));
    pde::CoefficientAlgebra a;
    a.name = as<std::string>(field(j, "name"), "name");
    a.exact = structure_constants_from_json(j);
    a.real = a.exact.convert<double>([](const Rational& v) { return v.get_d(); });
    a.unit = rationals_from_json(field(j, "unit"));
    if (a.unit.size() != a.exact.dim()) throw Error(Errc::InvalidAlgebra, "unit has the wrong dimension");
    return a;
}

Json to_json(const pde::PDESystem& s) {
    Json eqs = Json::array();
    for (const auto& e : s.equations) eqs.push_back(to_json(e, s.coordinates));
    return Json{{"name", s.name}, {"coordinates", to_json(s.coordinates)}, {"equations", eqs}, {"algebra", to_json(s.algebra)}};
}

pde::PDESystem system_from_json(const Json& j) {
    if (j.is_string()) return pde::builtin_system(j.get<std::string>());
    auto coords = coordinates_from_json(field(j, "coordinates"));
    std::vector<pde::JetPolynomial> eqs;
    for (const auto& e : field(j, "equations")) eqs.push_back(jet_polynomial_from_json(e, coords));
    auto algebra = j.contains("algebra") ? coefficient_algebra_from_json(j.at("algebra")) : pde::cd_coefficients(0);
    return pde::make_system(j.contains("name") ? as<std::string>(j.at("name"), "name") : "system", coords, eqs, algebra);
}

Json to_json(const pde::GridField<double>& f) {
    Json values = Json::array();
    for (const auto& v : f.values)
        for (double c : v) values.push_back(c);
    return Json{{"h", f.h}, {"dt", f.dt}, {"time", f.time}, {"dim", f.dim}, {"nodes", f.values.size()}, {"values", values}};
}

pde::GridField<double> grid_field_from_json(const Json& j) {
    pde::GridField<double> f;
    f.h = as<double>(field(j, "h"), "h");
    f.dt = j.contains("dt") ? as<double>(j.at("dt"), "dt") : 0.0;
    f.time = j.contains("time") ? as<double>(j.at("time"), "time") : 0.0;
    f.dim = as<std::size_t>(field(j, "dim"), "dim");
    auto flat = as<std::vector<double>>(field(j, "values"), "values");
    auto nodes = as<std::size_t>(field(j, "nodes"), "nodes");
    if (f.dim == 0 || flat.size() != nodes * f.dim) throw Error(Errc::InvalidInput, "values must hold nodes * dim numbers");
    for (std::size_t i = 0; i < nodes; ++i)
        f.values.emplace_back(flat.begin() + static_cast<long>(i * f.dim), flat.begin() + static_cast<long>((i + 1) * f.dim));
    return f;
}

Json to_json(const pde::PointClassification& c) {
    Json minors = Json::array();
    for (const auto& m : c.minors)
        minors.push_back({{"rows", m.rows},
                          {"cols", m.cols},
                          {"value", m.value},
                          {"norm_sq", m.norm_sq},
                          {"operator_rank", m.operator_rank},
                          {"invertible", m.invertible}});
    return Json{{"classification", c.regular ? "regular" : "singular"}, {"residuals", c.residuals}, {"minor_diagnostics", minors}};
}

}  // namespace hyperalg::io

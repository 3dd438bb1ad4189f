#pragma once
// JSON forms of the library types. Rationals and big integers travel as
// strings ("-3/4"); every *_from_json inverts the matching to_json.

#include <string>

#include "json.hpp"

#include "hyperalg/abelian.hpp"
#include "hyperalg/cd_core.hpp"
#include "hyperalg/heyting.hpp"
#include "hyperalg/identities.hpp"
#include "hyperalg/pde_singular.hpp"
#include "hyperalg/quantum_tensor.hpp"

namespace hyperalg::io {

using Json = nlohmann::json;

Json to_json(const Rational& v);
Rational rational_from_json(const Json& j);
Json to_json(const std::vector<Rational>& v);
std::vector<Rational> rationals_from_json(const Json& j);

Json to_json(const cd::Element<Rational>& e);
cd::Element<Rational> element_from_json(const Json& j);
Json to_json(const cd::PropertyReport& r);
Json to_json(const cd::MultiplicationTable& t);

Json to_json(const StructureConstants<Rational>& t);
StructureConstants<Rational> structure_constants_from_json(const Json& j);
Json to_json(const qt::StructureAlgebra& a);
/// Accepts a full object or the name of a shipped algebra ("M2").
qt::StructureAlgebra structure_algebra_from_json(const Json& j);
Json to_json(const qt::QHAlgebra& a);
qt::QHAlgebraPtr qh_algebra_from_json(const Json& j);
Json to_json(const qt::QHElement& e);
qt::QHElement qh_element_from_json(const Json& j);

Json to_json(const abelian::FGAbelianGroup& g);
abelian::FGAbelianGroup group_from_json(const Json& j);
/// "0", "Z", "Z^2 + Z_4 + Z6" and sums thereof.
abelian::FGAbelianGroup parse_group(const std::string& text);
Json to_json(const abelian::IntegerMatrix& m);
abelian::IntegerMatrix integer_matrix_from_json(const Json& j);

Json to_json(const heyting::FiniteTopology& t);
heyting::FiniteTopology topology_from_json(const Json& j);
Json to_json(const heyting::FinitePoset& p);
heyting::FinitePoset poset_from_json(const Json& j);
Json to_json(const heyting::LatticeTables& l);
heyting::LatticeTables lattice_from_json(const Json& j);
Json to_json(const heyting::HeytingAlgebra& h);
heyting::HeytingAlgebra heyting_from_json(const Json& j);
Json to_json(const heyting::LawCheck& c, const heyting::HeytingAlgebra& h);
Json to_json(const heyting::LawReport& r, const heyting::HeytingAlgebra& h);

Json to_json(const pde::JetCoordinateSystem& c);
pde::JetCoordinateSystem coordinates_from_json(const Json& j);
Json to_json(const pde::JetPolynomial& p, const pde::JetCoordinateSystem& c);
/// Accepts the term-list object or a formula string.
pde::JetPolynomial jet_polynomial_from_json(const Json& j, const pde::JetCoordinateSystem& c);
Json to_json(const pde::CoefficientAlgebra& a);
/// Accepts "R".."S", {"cd_level": r}, {"qh": {"base": .., "level": r}} or a full table.
pde::CoefficientAlgebra coefficient_algebra_from_json(const Json& j);
Json to_json(const pde::PDESystem& s);
/// Accepts a built-in system name or a full object.
pde::PDESystem system_from_json(const Json& j);
Json to_json(const pde::GridField<double>& f);
pde::GridField<double> grid_field_from_json(const Json& j);
Json to_json(const pde::PointClassification& c);

}  // namespace hyperalg::io

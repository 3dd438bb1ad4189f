#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperalg/scalar.hpp"

namespace hyperalg {

/// Product of variable powers, kept sorted by variable id with positive
/// exponents. Ordering of monomials is lexicographic on this list, which is
/// the canonical ordering used for equality and printing.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(int id, int exponent = 1);

    const std::vector<std::pair<int, int>>& powers() const { return powers_; }
    bool is_constant() const { return powers_.empty(); }
    int degree() const;
    int exponent_of(int id) const;

    Monomial operator*(const Monomial& other) const;
    /// Returns the monomial with one power of `id` removed (exponent must be > 0).
    Monomial lower(int id) const;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<std::pair<int, int>> powers_;
};

/// Commutative polynomial over exact rationals in integer-indexed variables.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(long constant);  // NOLINT(google-explicit-constructor)
    Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    static Polynomial var(int id, int exponent = 1);
    static Polynomial term(const Rational& coeff, const Monomial& mono);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    int degree() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    Polynomial pow(int n) const;
    Polynomial derivative(int id) const;
    /// Substitutes a rational value for every variable.
    Rational evaluate(const std::function<Rational(int)>& value) const;

    /// Human-readable form; `name` maps variable ids to symbols.
    std::string to_string(const std::function<std::string(int)>& name) const;

private:
    void add_term(const Monomial& m, const Rational& c);
    TermMap terms_;
};

template <>
struct ScalarTraits<Polynomial> {
    static constexpr bool exact = true;
    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(1); }
    static bool is_zero(const Polynomial& v, double /*tol*/ = 0.0) { return v.is_zero(); }
    static Polynomial from_int(long v) { return Polynomial(v); }
    static Polynomial from_rational(const Rational& v) { return Polynomial(v); }
    static std::string to_string(const Polynomial& v);
};

}  // namespace hyperalg

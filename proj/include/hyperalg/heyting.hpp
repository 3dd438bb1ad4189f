#pragma once

// Finite Heyting algebras. Elements are dense indices 0..n-1 with 0 the
// bottom; meet, join and implication are stored as n x n index tables.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperalg/error.hpp"

namespace hyperalg::heyting {

inline constexpr std::size_t kMaxPoints = 16;
inline constexpr std::size_t kMaxLattice = 256;

using Mask = std::uint32_t;

struct FiniteTopology {
    std::vector<std::string> points;
    /// Open sets as bitmasks over `points`, sorted by (size, mask).
    std::vector<Mask> opens;
};

/// Validates and canonicalizes: contains empty and full set, closed under
/// pairwise union and intersection. Throws InvalidTopology.
FiniteTopology make_topology(std::vector<std::string> points, std::vector<Mask> opens);

struct FinitePoset {
    std::vector<std::string> elements;
    /// le[i][j] is i <= j.
    std::vector<std::vector<bool>> le;
};

/// Throws InvalidPoset unless `le` is reflexive, antisymmetric and transitive
/// (a preorder is rejected).
FinitePoset make_poset(std::vector<std::string> elements, std::vector<std::vector<bool>> le);
FinitePoset make_poset(std::vector<std::string> elements, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// Bounded lattice given by explicit meet/join tables (row-major n x n).
struct LatticeTables {
    std::vector<std::string> labels;
    std::vector<std::size_t> meet;
    std::vector<std::size_t> join;
};

class HeytingAlgebra {
public:
    /// Checks bounded-lattice laws, residuation and distributivity on all
    /// tuples; element 0 must be the bottom. Throws InvalidInput, or
    /// SetTooLarge above kMaxLattice elements.
    HeytingAlgebra(std::vector<std::string> labels, std::vector<std::uint16_t> meet, std::vector<std::uint16_t> join,
                   std::vector<std::uint16_t> impl);

    std::size_t size() const { return n_; }
    std::size_t bottom() const { return 0; }
    std::size_t top() const { return top_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t x) const { return labels_[x]; }

    std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * n_ + b]; }
    std::size_t join(std::size_t a, std::size_t b) const { return join_[a * n_ + b]; }
    std::size_t impl(std::size_t a, std::size_t b) const { return impl_[a * n_ + b]; }
    std::size_t neg(std::size_t a) const { return impl(a, 0); }
    bool le(std::size_t a, std::size_t b) const { return meet(a, b) == a; }
    std::optional<std::size_t> find(const std::string& label) const;

    bool operator==(const HeytingAlgebra&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t top_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::uint16_t> meet_, join_, impl_;
};

std::size_t relative_pseudo_complement(const HeytingAlgebra& h, std::size_t a, std::size_t b);
std::size_t pseudo_complement(const HeytingAlgebra& h, std::size_t x);

/// Greatest c with a ^ c <= b, by enumeration over a meet table; nullopt if
/// the set has no greatest element.
std::optional<std::size_t> brute_force_implication(std::size_t n, const std::vector<std::size_t>& meet, std::size_t a,
                                                   std::size_t b);

/// Open sets ordered as in the topology; A -> B = interior(complement(A) u B).
HeytingAlgebra heyting_from_topology(const FiniteTopology& t);
/// Interior of an arbitrary subset.
Mask interior(const FiniteTopology& t, Mask s);

/// n-element chain 0 < 1/(n-1) < ... < 1.
HeytingAlgebra heyting_from_chain(std::size_t n);

enum class Direction { Up, Down };
FiniteTopology upset_topology(const FinitePoset& p, Direction dir);
HeytingAlgebra heyting_from_poset_upsets(const FinitePoset& p, Direction dir = Direction::Up);

class NotHeytingError : public Error {
public:
    NotHeytingError(std::size_t a, std::size_t b, const std::string& what)
        : Error(Errc::NotHeyting, what), a_(a), b_(b) {}
    std::pair<std::size_t, std::size_t> witness() const { return {a_, b_}; }

private:
    std::size_t a_, b_;
};

/// Throws NotHeytingError with a pair (a, b) for which { c : a ^ c <= b } has
/// no greatest element; InvalidInput if the tables are not a bounded lattice.
HeytingAlgebra heyting_from_lattice(const LatticeTables& l);
LatticeTables pentagon_lattice();
LatticeTables diamond_lattice();
LatticeTables chain_lattice(std::size_t n);

struct Classification {
    std::vector<std::size_t> regular;
    std::vector<std::size_t> complemented;
    bool is_boolean = false;
    /// Regular elements with meet, implication from H and join not(not x ^ not y).
    HeytingAlgebra h_reg;
    /// Complemented elements, a subalgebra of H.
    HeytingAlgebra h_comp;
};
Classification classify_elements(const HeytingAlgebra& h);

struct LawCheck {
    std::string name;
    bool passed = true;
    std::vector<std::size_t> witness;
};

struct LawReport {
    std::vector<LawCheck> axioms;         // the eleven intuitionistic axioms
    LawCheck regular_de_morgan;
    LawCheck weak_de_morgan;
    std::vector<LawCheck> de_morgan_block;  // the seven equivalent conditions
    bool block_agrees = true;
    bool block_passed = true;
    LawCheck triple_negation;
    LawCheck negation_fixed_point;  // not a = a only in the one-element algebra
    bool all_required_pass() const;
};
LawReport law_report(const HeytingAlgebra& h);

/// x ^ join(Y) = join{x ^ y : y in Y} for every subset Y (|H| <= 8 by default).
LawCheck frame_law(const HeytingAlgebra& h, std::size_t max_size = 8);

struct Filter {
    std::vector<bool> members;
    bool contains(std::size_t x) const { return members[x]; }
    std::vector<std::size_t> elements() const;
    bool operator==(const Filter&) const = default;
};

/// Throws InvalidFilter unless 1 is a member and the set is meet-closed and
/// upward closed.
Filter make_filter(const HeytingAlgebra& h, const std::vector<std::size_t>& members);
Filter filter_generate(const HeytingAlgebra& h, const std::vector<std::size_t>& generators);
Filter filter_intersection(const Filter& a, const Filter& b);

struct Quotient {
    HeytingAlgebra algebra;
    /// projection[x] = class index of x; classes are ordered by least member.
    std::vector<std::size_t> projection;
    std::vector<std::size_t> representative;
};
Quotient quotient_by_filter(const HeytingAlgebra& h, const Filter& f);

struct MorphismReport {
    std::vector<LawCheck> clauses;  // (i) .. (vi)
    bool is_morphism() const;
};
MorphismReport verify_morphism(const HeytingAlgebra& from, const HeytingAlgebra& to, const std::vector<std::size_t>& f);
Filter kernel(const HeytingAlgebra& from, const HeytingAlgebra& to, const std::vector<std::size_t>& f);

/// Builds H/ker f and the image of f and checks the induced map is an
/// isomorphism of Heyting algebras.
bool first_isomorphism_holds(const HeytingAlgebra& from, const HeytingAlgebra& to, const std::vector<std::size_t>& f);

/// Unique f' with f = f' o projection, when F is contained in ker f.
std::optional<std::vector<std::size_t>> factor_through_quotient(const HeytingAlgebra& from, const HeytingAlgebra& to,
                                                                const std::vector<std::size_t>& f, const Quotient& q);

struct RingCheck {
    std::string name;
    bool passed = true;
};
struct BooleanRingReport {
    std::size_t points = 0;
    std::vector<RingCheck> checks;
    bool all_passed() const;
};
/// Power-set ring (P(X), symmetric difference, intersection) and its Boolean
/// algebra; throws SetTooLarge when |X| > 16.
BooleanRingReport boolean_ring_roundtrip(std::size_t points);

std::string mask_label(const std::vector<std::string>& points, Mask m);

}  // namespace hyperalg::heyting

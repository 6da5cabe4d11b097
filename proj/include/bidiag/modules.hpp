// Finite-dimensional sl2 and U_q(sl2) modules built from irreducible
// summands, the equitable generator triples they carry, and the two-way
// passage between segregated modules and reduced bidiagonal triples.
#pragma once

#include <optional>
#include <vector>

#include "bidiag/triple.hpp"

namespace bidiag {

enum class Algebra { sl2, uq };

struct Summand {
    size_t d = 0;            // highest weight; dimension d + 1
    int epsilon = 1;         // +1 or -1, used by uq only
    size_t multiplicity = 1;
    bool operator==(const Summand&) const = default;
};

struct ModuleSpec {
    Algebra algebra = Algebra::sl2;
    std::optional<Rational> q;  // required for uq; must avoid {0, 1, -1}
    std::vector<Summand> summands;
    bool operator==(const ModuleSpec&) const = default;
};

// Standard presentation matrices on the concatenated summand bases.
// sl2 uses h, e, f; uq uses k, k_inv, e, f.
struct StandardGenerators {
    Algebra algebra = Algebra::sl2;
    std::optional<Rational> q;
    Matrix h, e, f;
    Matrix k, k_inv;
};

struct EquitableActions {
    Matrix first, second, third;  // X, Y, Z resp. x, y, z
    StandardGenerators generators;
};

struct SegregationSplit {
    // sl2: even, odd.  uq: (+1, even), (+1, odd), (-1, even), (-1, odd).
    std::vector<Subspace> parts;
    bool segregated = false;
};

struct TripleModule {
    ModuleSpec spec;
    StandardGenerators generators;
};

// Block-diagonal standard generators for the spec.  InvalidQ when uq is
// requested without a usable q.
StandardGenerators build_module(const ModuleSpec& spec);

// Checks the defining relations of the algebra exactly; RelationViolation
// names the first one that fails.
void verify_generator_relations(const StandardGenerators& g);

// Equitable triple derived from the standard generators; the equitable
// relations are re-verified before returning.
EquitableActions equitable_actions(const ModuleSpec& spec);

// The equitable actions of a segregated spec, verified as a bidiagonal
// triple.  NotSegregated when summand parities mix or some epsilon is -1.
BidiagonalTriple module_to_triple(const ModuleSpec& spec);

// Inverse direction: derive standard generators from a reduced triple,
// verify the defining relations, and read off the summand multiplicities
// from the shape.  A diameter-0 triple with eigenvalue 1 matches the uq
// pattern for every q, so q_hint picks the algebra parameter in that case
// (PreconditionFailed when it is needed but missing).  Unrepresentable when
// the sequences require an irrational q.
TripleModule triple_to_module(const BidiagonalTriple& t,
                              const std::optional<Rational>& q_hint = std::nullopt);

// Invariant summands spanned by parity (and sign, for uq) classes of the
// h- resp. k-spectrum, plus the segregation flag.
SegregationSplit segregation_split(const StandardGenerators& g);

}  // namespace bidiag

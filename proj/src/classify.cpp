#include "bidiag/classify.hpp"

#include <string>
#include <vector>

#include "bidiag/errors.hpp"
#include "bidiag/modules.hpp"
#include "bidiag/subspace.hpp"

namespace bidiag {

namespace {

// Positive q with q^-2 = b, either taken from the caller (sign dropped) or
// derived from the base.
Rational resolve_q(const Rational& b, const std::optional<Rational>& q) {
    if (q) {
        Rational cand = q->abs();
        if (cand.is_zero() || cand * cand * b != Rational(1))
            throw PreconditionFailed("q = " + q->str() + " does not satisfy q^-2 = " + b.str());
        return cand;
    }
    return q_from_base(b);
}

std::vector<Rational> canonical_sequence(size_t d, const Rational& b,
                                         const std::optional<Rational>& q) {
    std::vector<Rational> canon(d + 1);
    if (b == Rational(1)) {
        for (size_t i = 0; i <= d; ++i)
            canon[i] = Rational(2 * static_cast<long>(i) - static_cast<long>(d));
    } else {
        Rational qq = resolve_q(b, q);
        for (size_t i = 0; i <= d; ++i)
            canon[i] = qq.pow(static_cast<long>(d) - 2 * static_cast<long>(i));
    }
    return canon;
}

size_t small_count(const Rational& r) {
    mpz_class n = r.num();
    if (!mpz_fits_ulong_p(n.get_mpz_t()))
        throw InternalInvariantViolation("multiplicity does not fit a machine word");
    return static_cast<size_t>(mpz_get_ui(n.get_mpz_t()));
}

void require_rectangular(const ParameterArray& pa) {
    size_t n = pa.first.size();
    if (n == 0 || pa.second.size() != n || pa.third.size() != n || pa.shape.size() != n)
        throw DimensionMismatch("parameter array components must share one nonzero length");
}

}  // namespace

ValidationResult validate_parameter_array(const ParameterArray& pa) {
    require_rectangular(pa);
    size_t d = pa.diameter();
    const std::vector<Rational>* seqs[3] = {&pa.first, &pa.second, &pa.third};
    const char* names[3] = {"first", "second", "third"};
    ValidationResult res;

    [&] {
        for (size_t k = 0; k < 3; ++k)
            for (size_t i = 0; i <= d; ++i)
                for (size_t j = i + 1; j <= d; ++j)
                    if ((*seqs[k])[i] == (*seqs[k])[j]) {
                        res.violations.push_back(
                            {"i", std::string(names[k]) + " sequence repeats the value " +
                                      (*seqs[k])[i].str() + " at indices " + std::to_string(i) +
                                      " and " + std::to_string(j)});
                        return;
                    }
    }();

    if (d >= 2) {
        // Successive-difference ratios must agree across all three sequences.
        // Instances with a zero denominator are condition (i) failures and
        // are skipped here rather than reported twice.
        std::optional<Rational> ratio;
        std::optional<std::string> problem;
        for (size_t k = 0; k < 3 && !problem; ++k)
            for (size_t i = 1; i < d && !problem; ++i) {
                Rational den = (*seqs[k])[i] - (*seqs[k])[i - 1];
                if (den.is_zero()) continue;
                Rational r = ((*seqs[k])[i + 1] - (*seqs[k])[i]) / den;
                if (!ratio)
                    ratio = r;
                else if (*ratio != r)
                    problem = std::string(names[k]) + " sequence has difference ratio " +
                              r.str() + " at i = " + std::to_string(i) + ", expected " +
                              ratio->str();
            }
        if (problem) res.violations.push_back({"ii", *problem});
    }

    for (size_t i = 0; i <= d; ++i)
        if (!pa.shape[i].is_integer() || pa.shape[i].sign() <= 0) {
            res.violations.push_back({"iii", "shape entry " + pa.shape[i].str() +
                                                 " at index " + std::to_string(i) +
                                                 " is not a positive integer"});
            break;
        }

    for (size_t i = 0; 2 * i <= d; ++i)
        if (pa.shape[i] != pa.shape[d - i]) {
            res.violations.push_back({"iv", "shape entries at indices " + std::to_string(i) +
                                                " and " + std::to_string(d - i) + " differ"});
            break;
        }

    for (size_t i = 0; 2 * i < d; ++i)
        if (pa.shape[i] > pa.shape[i + 1]) {
            res.violations.push_back({"v", "shape decreases from index " + std::to_string(i) +
                                               " to " + std::to_string(i + 1) +
                                               " before the middle"});
            break;
        }

    return res;
}

BidiagonalTriple construct_from_parameter_array(const ParameterArray& pa,
                                                const std::optional<Rational>& q) {
    ValidationResult check = validate_parameter_array(pa);
    if (!check.valid()) {
        std::string msg = "parameter array is not realizable:";
        for (const auto& v : check.violations)
            msg += " (" + v.condition + ") " + v.message + ";";
        msg.pop_back();
        throw NotValid(msg);
    }
    size_t d = pa.diameter();
    Rational b = compute_base(pa);

    ModuleSpec spec;
    spec.algebra = (b == Rational(1)) ? Algebra::sl2 : Algebra::uq;
    if (spec.algebra == Algebra::uq) spec.q = resolve_q(b, q);
    std::vector<Rational> canon = canonical_sequence(d, b, spec.q);

    // Multiplicity of the irreducible of highest weight d - 2i is the jump
    // in the shape at index i; conditions (iii)-(v) make these nonnegative
    // integers.
    Rational prev(0);
    for (size_t i = 0; 2 * i <= d; ++i) {
        Rational m = pa.shape[i] - prev;
        prev = pa.shape[i];
        if (m.is_zero()) continue;
        if (!m.is_integer() || m.sign() < 0)
            throw InternalInvariantViolation("shape jumps of a realizable array are counts");
        spec.summands.push_back({d - 2 * i, 1, small_count(m)});
    }

    BidiagonalTriple reduced = module_to_triple(spec);

    std::array<AffineMap, 3> maps;
    const std::vector<Rational>* seqs[3] = {&pa.first, &pa.second, &pa.third};
    for (size_t k = 0; k < 3; ++k) {
        auto m = affine_equivalent_sequences(*seqs[k], canon);
        if (!m)
            throw InternalInvariantViolation(
                "realizable sequences are affine equivalent to the canonical one");
        maps[k] = *m;
    }

    BidiagonalTriple out = affine_shift_triple(reduced, maps);
    if (out.pa != pa)
        throw InternalInvariantViolation("constructed triple does not reproduce its array");
    return out;
}

RelationScalars relation_scalars(const ParameterArray& pa) {
    require_rectangular(pa);
    size_t d = pa.diameter();
    RelationScalars s;
    const std::vector<Rational>&th = pa.first, &tp = pa.second, &td = pa.third;

    if (d == 0) {
        s.b = Rational(1);
        s.alpha = s.alpha_prime = s.alpha_double = Rational(1);
        s.gamma1 = -(th[0] + tp[0]);
        s.gamma2 = -(tp[0] + td[0]);
        s.gamma3 = -(td[0] + th[0]);
        return s;
    }

    s.b = compute_base(pa);
    s.alpha = th[1] - s.b * th[0];
    s.alpha_prime = tp[1] - s.b * tp[0];
    s.alpha_double = td[1] - s.b * td[0];
    s.gamma1 = s.b * th[0] * tp[d - 1] - th[1] * tp[d];
    s.gamma2 = s.b * tp[0] * td[d - 1] - tp[1] * td[d];
    s.gamma3 = s.b * td[0] * th[d - 1] - td[1] * th[d];

    for (size_t i = 0; i < d; ++i) {
        bool ok = th[i + 1] - s.b * th[i] == s.alpha &&
                  tp[i + 1] - s.b * tp[i] == s.alpha_prime &&
                  td[i + 1] - s.b * td[i] == s.alpha_double &&
                  s.b * th[i] * tp[d - i - 1] - th[i + 1] * tp[d - i] == s.gamma1 &&
                  s.b * tp[i] * td[d - i - 1] - tp[i + 1] * td[d - i] == s.gamma2 &&
                  s.b * td[i] * th[d - i - 1] - td[i + 1] * th[d - i] == s.gamma3;
        if (!ok)
            throw NotBRecurrent("relation scalar recurrence fails at i = " + std::to_string(i));
    }
    return s;
}

RelationScalars verify_fundamental_relations(const BidiagonalTriple& t) {
    RelationScalars s = relation_scalars(t.pa);
    const Matrix &A = t.a, &B = t.a_prime, &C = t.a_double;
    Matrix id = Matrix::identity(t.dim());
    Matrix zero(t.dim(), t.dim());

    if (A * B - s.b * (B * A) - s.alpha_prime * A - s.alpha * B - s.gamma1 * id != zero)
        throw RelationViolation("A A' - b A' A - a' A - a A' - g1 I is nonzero");
    if (B * C - s.b * (C * B) - s.alpha_double * B - s.alpha_prime * C - s.gamma2 * id != zero)
        throw RelationViolation("A' A'' - b A'' A' - a'' A' - a' A'' - g2 I is nonzero");
    if (C * A - s.b * (A * C) - s.alpha * C - s.alpha_double * A - s.gamma3 * id != zero)
        throw RelationViolation("A'' A - b A A'' - a A'' - a'' A - g3 I is nonzero");
    return s;
}

ReducedTriple reduce_triple(const BidiagonalTriple& t, const std::optional<Rational>& q) {
    std::vector<Rational> canon = canonical_sequence(t.diameter, t.base, q);

    Matrix ops[3];
    for (size_t k = 0; k < 3; ++k)
        ops[k] = operator_from_decomposition(t.ord(k).spaces, canon);

    ReducedTriple out{verify_bd_triple(ops[0], ops[1], ops[2]), {}};
    if (out.triple.pa.first != canon || out.triple.pa.second != canon ||
        out.triple.pa.third != canon || out.triple.pa.shape != t.pa.shape)
        throw InternalInvariantViolation("reduced triple is not in canonical form");

    const std::vector<Rational>* seqs[3] = {&t.pa.first, &t.pa.second, &t.pa.third};
    for (size_t k = 0; k < 3; ++k) {
        auto m = affine_equivalent_sequences(*seqs[k], canon);
        if (!m)
            throw InternalInvariantViolation("sequences are affine equivalent to canonical");
        out.maps[k] = *m;
        if (t.op(k) != out.maps[k](out.triple.op(k)))
            throw InternalInvariantViolation("affine maps do not recover the original triple");
    }
    return out;
}

}  // namespace bidiag

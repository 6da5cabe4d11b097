#include "bidiag/modules.hpp"

#include <algorithm>

#include "bidiag/errors.hpp"

namespace bidiag {

namespace {

void validate_spec(const ModuleSpec& spec) {
    if (spec.summands.empty())
        throw PreconditionFailed("module spec needs at least one summand");
    for (const auto& s : spec.summands) {
        if (s.multiplicity == 0)
            throw PreconditionFailed("summand multiplicity must be positive");
        if (s.epsilon != 1 && s.epsilon != -1)
            throw PreconditionFailed("epsilon must be +1 or -1");
    }
    if (spec.algebra == Algebra::uq) {
        if (!spec.q) throw InvalidQ("uq module needs a q parameter");
        const Rational& q = *spec.q;
        if (q.is_zero() || q == Rational(1) || q == Rational(-1))
            throw InvalidQ("q must avoid 0, 1 and -1");
    }
}

size_t total_dim(const ModuleSpec& spec) {
    size_t n = 0;
    for (const auto& s : spec.summands) n += s.multiplicity * (s.d + 1);
    return n;
}

// [n] = (q^n - q^-n)/(q - q^-1)
Rational q_bracket(const Rational& q, long n) {
    return (q.pow(n) - q.pow(-n)) / (q - q.inverse());
}

long small_integer(const Rational& r, const char* what) {
    if (!r.is_integer())
        throw InternalInvariantViolation(std::string(what) + " is not an integer");
    return static_cast<long>(r.num().get_si());
}

}  // namespace

StandardGenerators build_module(const ModuleSpec& spec) {
    validate_spec(spec);
    size_t n = total_dim(spec);
    StandardGenerators g;
    g.algebra = spec.algebra;
    g.q = spec.q;

    if (spec.algebra == Algebra::sl2) {
        g.h = Matrix(n, n);
        g.e = Matrix(n, n);
        g.f = Matrix(n, n);
        size_t off = 0;
        for (const auto& s : spec.summands) {
            long d = static_cast<long>(s.d);
            for (size_t copy = 0; copy < s.multiplicity; ++copy) {
                for (long i = 0; i <= d; ++i) {
                    g.h.at(off + i, off + i) = Rational(d - 2 * i);
                    if (i < d) g.f.at(off + i + 1, off + i) = Rational(i + 1);
                    if (i > 0) g.e.at(off + i - 1, off + i) = Rational(d - i + 1);
                }
                off += s.d + 1;
            }
        }
    } else {
        const Rational& q = *spec.q;
        g.k = Matrix(n, n);
        g.k_inv = Matrix(n, n);
        g.e = Matrix(n, n);
        g.f = Matrix(n, n);
        size_t off = 0;
        for (const auto& s : spec.summands) {
            long d = static_cast<long>(s.d);
            Rational eps(s.epsilon);
            for (size_t copy = 0; copy < s.multiplicity; ++copy) {
                for (long i = 0; i <= d; ++i) {
                    g.k.at(off + i, off + i) = eps * q.pow(d - 2 * i);
                    g.k_inv.at(off + i, off + i) = eps * q.pow(2 * i - d);
                    if (i < d) g.f.at(off + i + 1, off + i) = q_bracket(q, i + 1);
                    if (i > 0) g.e.at(off + i - 1, off + i) = eps * q_bracket(q, d - i + 1);
                }
                off += s.d + 1;
            }
        }
    }
    return g;
}

void verify_generator_relations(const StandardGenerators& g) {
    if (g.algebra == Algebra::sl2) {
        if (!g.h.is_square() || g.h.rows() != g.e.rows() || g.h.rows() != g.f.rows())
            throw DimensionMismatch("sl2 generators must be square and equally sized");
        if (commutator(g.h, g.e) != Rational(2) * g.e)
            throw RelationViolation("[h,e] = 2e fails");
        if (commutator(g.h, g.f) != Rational(-2) * g.f)
            throw RelationViolation("[h,f] = -2f fails");
        if (commutator(g.e, g.f) != g.h)
            throw RelationViolation("[e,f] = h fails");
    } else {
        if (!g.q) throw InvalidQ("uq generators need a q parameter");
        const Rational& q = *g.q;
        if (q.is_zero() || q == Rational(1) || q == Rational(-1))
            throw InvalidQ("q must avoid 0, 1 and -1");
        size_t n = g.k.rows();
        if (!g.k.is_square() || g.k_inv.rows() != n || g.e.rows() != n || g.f.rows() != n)
            throw DimensionMismatch("uq generators must be square and equally sized");
        Matrix id = Matrix::identity(n);
        if (g.k * g.k_inv != id || g.k_inv * g.k != id)
            throw RelationViolation("k k^-1 = 1 fails");
        if (g.k * g.e != (q * q) * (g.e * g.k))
            throw RelationViolation("ke = q^2 ek fails");
        if (g.k * g.f != (q * q).inverse() * (g.f * g.k))
            throw RelationViolation("kf = q^-2 fk fails");
        if (g.e * g.f - g.f * g.e != (q - q.inverse()).inverse() * (g.k - g.k_inv))
            throw RelationViolation("ef - fe = (k - k^-1)/(q - q^-1) fails");
    }
}

EquitableActions equitable_actions(const ModuleSpec& spec) {
    StandardGenerators g = build_module(spec);
    verify_generator_relations(g);

    EquitableActions ea;
    if (spec.algebra == Algebra::sl2) {
        ea.first = Rational(2) * g.e - g.h;
        ea.second = Rational(-2) * g.f - g.h;
        ea.third = g.h;
        auto twisted = [](const Matrix& u, const Matrix& v) {
            return commutator(u, v) - Rational(2) * u - Rational(2) * v;
        };
        if (!twisted(ea.first, ea.second).is_zero() ||
            !twisted(ea.second, ea.third).is_zero() ||
            !twisted(ea.third, ea.first).is_zero())
            throw InternalInvariantViolation("equitable sl2 relations fail");
    } else {
        const Rational& q = *spec.q;
        Rational w = q - q.inverse();
        ea.first = g.k;
        ea.second = g.k_inv + w * g.f;
        ea.third = g.k_inv - (q * w) * (g.k_inv * g.e);
        Matrix id = Matrix::identity(g.k.rows());
        auto weyl = [&](const Matrix& u, const Matrix& v) {
            return q * (u * v) - q.inverse() * (v * u) - w * id;
        };
        if (!weyl(ea.first, ea.second).is_zero() || !weyl(ea.second, ea.third).is_zero() ||
            !weyl(ea.third, ea.first).is_zero())
            throw InternalInvariantViolation("equitable uq relations fail");
    }
    ea.generators = std::move(g);
    return ea;
}

BidiagonalTriple module_to_triple(const ModuleSpec& spec) {
    validate_spec(spec);
    size_t parity = spec.summands.front().d % 2;
    for (const auto& s : spec.summands) {
        if (s.d % 2 != parity)
            throw NotSegregated("summand weights mix parities");
        if (spec.algebra == Algebra::uq && s.epsilon != 1)
            throw NotSegregated("summand with epsilon = -1");
    }

    EquitableActions ea = equitable_actions(spec);
    BidiagonalTriple t = verify_bd_triple(ea.first, ea.second, ea.third);

    size_t d = t.diameter;
    std::vector<Rational> expected;
    if (spec.algebra == Algebra::sl2) {
        for (size_t i = 0; i <= d; ++i)
            expected.push_back(Rational(2 * static_cast<long>(i) - static_cast<long>(d)));
    } else {
        for (size_t i = 0; i <= d; ++i)
            expected.push_back(spec.q->pow(static_cast<long>(d) - 2 * static_cast<long>(i)));
    }
    if (t.pa.first != expected || t.pa.second != expected || t.pa.third != expected)
        throw InternalInvariantViolation("module triple is not reduced");
    if (spec.algebra == Algebra::uq && d >= 2 && t.base != (*spec.q * *spec.q).inverse())
        throw InternalInvariantViolation("module triple has the wrong base");
    return t;
}

TripleModule triple_to_module(const BidiagonalTriple& t,
                              const std::optional<Rational>& q_hint) {
    const auto& seq = t.pa.first;
    size_t d = t.pa.diameter();
    if (t.pa.second != seq || t.pa.third != seq)
        throw NotReduced("the three eigenvalue sequences differ");

    bool sl2_pattern = true;
    for (size_t i = 0; i <= d && sl2_pattern; ++i)
        if (seq[i] != Rational(2 * static_cast<long>(i) - static_cast<long>(d)))
            sl2_pattern = false;

    TripleModule out;
    size_t n = t.dim();
    if (sl2_pattern) {
        StandardGenerators g;
        g.algebra = Algebra::sl2;
        g.h = t.a_double;
        g.e = Rational(1, 2) * (t.a + t.a_double);
        g.f = Rational(-1, 2) * (t.a_prime + t.a_double);
        verify_generator_relations(g);
        out.generators = std::move(g);
        out.spec.algebra = Algebra::sl2;
    } else {
        Rational q;
        if (d == 0) {
            if (seq[0] != Rational(1))
                throw NotReduced("eigenvalue sequence matches neither reduced pattern");
            if (!q_hint)
                throw PreconditionFailed(
                    "diameter-0 module with eigenvalue 1 needs an explicit q");
            q = *q_hint;
        } else if (d % 2 == 1) {
            q = seq[(d - 1) / 2];  // the exponent-one position
        } else {
            auto root = (seq[d / 2 - 1]).sqrt_exact();  // exponent-two position
            if (!root)
                throw Unrepresentable("eigenvalue sequence needs an irrational q");
            q = *root;
        }
        if (q.is_zero() || q == Rational(1) || q == Rational(-1))
            throw NotReduced("eigenvalue sequence matches neither reduced pattern");
        for (size_t i = 0; i <= d; ++i)
            if (seq[i] != q.pow(static_cast<long>(d) - 2 * static_cast<long>(i)))
                throw NotReduced("eigenvalue sequence matches neither reduced pattern");
        if (q_hint && d >= 1) {
            bool sign_free = (d % 2 == 0);  // even exponents cannot see the sign of q
            if (*q_hint != q && !(sign_free && *q_hint == -q))
                throw PreconditionFailed("q hint contradicts the eigenvalue sequence");
        }

        StandardGenerators g;
        g.algebra = Algebra::uq;
        g.q = q;
        g.k = t.a;
        g.k_inv = inverse(t.a);
        Rational w = q - q.inverse();
        g.f = w.inverse() * (t.a_prime - g.k_inv);
        g.e = (q * w).inverse() * (Matrix::identity(n) - t.a * t.a_double);
        verify_generator_relations(g);
        out.generators = std::move(g);
        out.spec.algebra = Algebra::uq;
        out.spec.q = q;
    }

    long prev = 0;
    for (size_t i = 0; 2 * i <= d; ++i) {
        long rho = small_integer(t.pa.shape[i], "shape entry");
        long m = rho - prev;
        if (m < 0)
            throw InternalInvariantViolation("shape of a verified triple is not unimodal");
        if (m > 0)
            out.spec.summands.push_back(
                {d - 2 * i, 1, static_cast<size_t>(m)});
        prev = rho;
    }

    if (!segregation_split(out.generators).segregated)
        throw InternalInvariantViolation("derived module is not segregated");
    return out;
}

SegregationSplit segregation_split(const StandardGenerators& g) {
    verify_generator_relations(g);
    const Matrix& diag_gen = (g.algebra == Algebra::sl2) ? g.h : g.k;
    size_t n = diag_gen.rows();
    if (n == 0) throw DimensionMismatch("module must have positive dimension");

    EigenDecomposition ed = eigen_decompose(diag_gen);
    if (!ed.diagonalizable)
        throw Unrepresentable("weight operator is not diagonalizable over the rationals");

    SegregationSplit split;
    if (g.algebra == Algebra::sl2) {
        split.parts.assign(2, Subspace(n));
        for (size_t i = 0; i < ed.eigenvalues.size(); ++i) {
            const Rational& lam = ed.eigenvalues[i];
            if (!lam.is_integer())
                throw Unrepresentable("weight spectrum is not integral");
            size_t slot = mpz_even_p(lam.num().get_mpz_t()) ? 0 : 1;
            split.parts[slot] = subspace_sum(split.parts[slot], ed.eigenspaces[i]);
        }
        split.segregated = split.parts[0].dim() == n || split.parts[1].dim() == n;
    } else {
        const Rational& q = *g.q;
        split.parts.assign(4, Subspace(n));
        long bound = static_cast<long>(n);
        for (size_t i = 0; i < ed.eigenvalues.size(); ++i) {
            const Rational& lam = ed.eigenvalues[i];
            std::optional<size_t> slot;
            for (long j = -bound; j <= bound && !slot; ++j) {
                Rational p = q.pow(j);
                size_t parity = (j % 2 == 0) ? 0 : 1;
                if (p == lam) slot = parity;          // epsilon = +1
                else if (p == -lam) slot = 2 + parity;  // epsilon = -1
            }
            if (!slot)
                throw Unrepresentable("weight spectrum is not of the standard form");
            split.parts[*slot] = subspace_sum(split.parts[*slot], ed.eigenspaces[i]);
        }
        split.segregated = split.parts[0].dim() == n || split.parts[1].dim() == n;
    }
    return split;
}

}  // namespace bidiag

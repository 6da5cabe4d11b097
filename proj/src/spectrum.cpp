#include "bidiag/spectrum.hpp"

#include <algorithm>

#include "bidiag/errors.hpp"

namespace bidiag {

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

namespace {

// ---- integer polynomials, coefficients ascending ----

using ZPoly = std::vector<mpz_class>;

size_t zdegree(const ZPoly& p) {
    size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;
}

void ztrim(ZPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

bool zis_zero(const ZPoly& p) {
    for (const auto& c : p)
        if (c != 0) return false;
    return true;
}

ZPoly zderivative(const ZPoly& p) {
    if (p.size() <= 1) return {mpz_class(0)};
    ZPoly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = mpz_class(i) * p[i];
    return d;
}

// Clear denominators and divide by the content; the positive scale factor
// keeps every sign intact.
ZPoly primitive_from_rational(const Poly& p) {
    mpz_class l(1);
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    ZPoly z(p.size());
    mpz_class content(0);
    for (size_t i = 0; i < p.size(); ++i) {
        z[i] = p[i].num() * (l / p[i].den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
    }
    if (content > 1)
        for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    ztrim(z);
    return z;
}

Poly rational_from_integer(const ZPoly& z) {
    Poly p(z.size());
    for (size_t i = 0; i < z.size(); ++i) p[i] = Rational(z[i]);
    return p;
}

// Exact division of integer polynomials, used only when divisibility is
// guaranteed (square-free part).
ZPoly zdivide_exact(const ZPoly& num, const ZPoly& den) {
    Poly n = rational_from_integer(num), d = rational_from_integer(den);
    size_t dn = zdegree(num), dd = zdegree(den);
    if (dn < dd) throw InternalInvariantViolation("bad exact polynomial division");
    Poly q(dn - dd + 1);
    Poly rem = n;
    for (size_t k = dn - dd + 1; k-- > 0;) {
        Rational coef = rem[dd + k] / d[dd];
        q[k] = coef;
        if (coef.is_zero()) continue;
        for (size_t j = 0; j <= dd; ++j) rem[j + k] -= coef * d[j];
    }
    for (size_t j = 0; j < dd; ++j)
        if (!rem[j].is_zero())
            throw InternalInvariantViolation("polynomial division left a remainder");
    return primitive_from_rational(q);
}

// Remainder of a by b over the rationals, then rescaled by a positive factor
// to a primitive integer polynomial (Sturm chains need the sign preserved).
ZPoly zremainder_primitive(const ZPoly& a, const ZPoly& b) {
    Poly ra = rational_from_integer(a), rb = rational_from_integer(b);
    size_t da = zdegree(a), db = zdegree(b);
    Poly rem = ra;
    if (da >= db)
        for (size_t deg = da + 1; deg-- > db;) {  // leading term first
            Rational coef = rem[deg] / rb[db];
            if (coef.is_zero()) continue;
            size_t shift = deg - db;
            for (size_t j = 0; j <= db; ++j) rem[j + shift] -= coef * rb[j];
        }
    rem.resize(db == 0 ? 1 : db);
    return primitive_from_rational(rem);
}

Rational poly_eval_q(const ZPoly& p, const Rational& x) {
    Rational acc;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + Rational(p[i]);
    return acc;
}

struct SturmChain {
    std::vector<ZPoly> chain;

    explicit SturmChain(const ZPoly& squarefree) {
        chain.push_back(squarefree);
        ZPoly d = zderivative(squarefree);
        if (!zis_zero(d)) chain.push_back(d);
        while (chain.size() >= 2 && zdegree(chain.back()) > 0) {
            ZPoly r = zremainder_primitive(chain[chain.size() - 2], chain.back());
            if (zis_zero(r)) break;  // cannot happen for square-free input
            for (auto& c : r) c = -c;
            chain.push_back(r);
        }
    }

    size_t variations(const Rational& x) const {
        size_t v = 0;
        int prev = 0;
        for (const auto& p : chain) {
            int s = poly_eval_q(p, x).sign();
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }
};

// Greatest common divisor of integer polynomials (primitive, positive lead).
ZPoly zgcd(ZPoly a, ZPoly b) {
    while (!zis_zero(b) && zdegree(b) > 0) {
        ZPoly r = zremainder_primitive(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!zis_zero(b)) return {mpz_class(1)};  // nonzero constant remainder
    if (a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

// Divide p by (x - r) as long as the remainder vanishes; returns multiplicity.
size_t linear_root_multiplicity(Poly p, const Rational& r) {
    size_t mult = 0;
    while (p.size() > 1) {
        // synthetic division: p = (x - r) q + p(r)
        Poly q(p.size() - 1);
        Rational carry;
        for (size_t i = p.size(); i-- > 1;) {
            carry = p[i] + r * carry;
            q[i - 1] = carry;
        }
        Rational rem = p[0] + r * carry;
        if (!rem.is_zero()) break;
        ++mult;
        p = std::move(q);
    }
    return mult;
}

// smallest-denominator rational in the open interval (lo, hi), 0 <= lo < hi.
// Walks the continued fraction of the interval one term per recursion.
Rational simplest_nonnegative(const Rational& lo, const Rational& hi) {
    Rational f(lo.floor());
    Rational n = f + Rational(1);
    if (n < hi) return n;
    Rational frac_lo = lo - f, frac_hi = hi - f;
    if (frac_lo.is_zero()) {
        // interval is (f, hi) with hi <= f+1: answer is f + 1/m, m minimal
        Rational m(mpz_class(frac_hi.inverse().floor() + 1));
        return f + m.inverse();
    }
    return f + simplest_nonnegative(frac_hi.inverse(), frac_lo.inverse()).inverse();
}

}  // namespace

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw PreconditionFailed("empty interval");
    if (lo.sign() < 0 && hi.sign() > 0) return Rational(0);
    if (hi.sign() <= 0) return -simplest_rational_between(-hi, -lo);
    return simplest_nonnegative(lo, hi);
}

Poly char_poly(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("characteristic polynomial of non-square matrix");
    size_t n = m.rows();
    if (n == 0) return {Rational(1)};

    // clear denominators: B = delta * m is integral
    mpz_class delta(1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            mpz_lcm(delta.get_mpz_t(), delta.get_mpz_t(), m.at(i, j).den().get_mpz_t());
    std::vector<mpz_class> b(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const Rational& e = m.at(i, j);
            b[i * n + j] = e.num() * (delta / e.den());
        }

    // Faddeev-LeVerrier on B; all divisions are exact
    std::vector<mpz_class> c(n + 1), work(n * n), bm(n * n);
    c[n] = 1;
    for (size_t i = 0; i < n; ++i) work[i * n + i] = 1;
    for (size_t k = 1; k <= n; ++k) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                mpz_class acc(0);
                for (size_t t = 0; t < n; ++t) acc += b[i * n + t] * work[t * n + j];
                bm[i * n + j] = acc;
            }
        mpz_class tr(0);
        for (size_t i = 0; i < n; ++i) tr += bm[i * n + i];
        mpz_class ck;
        mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        c[n - k] = -ck;
        work = bm;
        for (size_t i = 0; i < n; ++i) work[i * n + i] += c[n - k];
    }
    for (const auto& w : work)
        if (w != 0) throw InternalInvariantViolation("Cayley-Hamilton check failed in char_poly");

    // char poly of m = delta^(j-n) scaled coefficients of char poly of B
    Poly p(n + 1);
    mpz_class scale(1);  // delta^(n-j)
    for (size_t j = n + 1; j-- > 0;) {
        p[j] = Rational(c[j], scale);
        scale *= delta;
    }
    return p;
}

RootList rational_roots(const Poly& p_in, const std::optional<mpz_class>& root_denominator) {
    Poly p = p_in;
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
    if (p.size() == 1 && p[0].is_zero())
        throw PreconditionFailed("root isolation of the zero polynomial");
    size_t degree = p.size() - 1;

    RootList out;
    out.complete = false;
    if (degree == 0) {
        out.complete = true;
        return out;
    }

    std::vector<Rational> found;

    // pull out the root at zero first; it is a boundary nuisance otherwise
    if (p[0].is_zero()) found.push_back(Rational(0));

    ZPoly pz = primitive_from_rational(p);
    ZPoly sf = zdivide_exact(pz, zgcd(pz, zderivative(pz)));
    while (sf.size() > 1 && sf[0] == 0) sf.erase(sf.begin());

    // isolate the remaining distinct roots of the square-free part;
    // restart after each exact hit so endpoints stay off the roots
    bool restart = true;
    while (restart && zdegree(sf) >= 1) {
        restart = false;
        SturmChain sturm(sf);

        Rational lead = Rational(sf[zdegree(sf)]).abs();
        Rational bound(1);
        for (size_t i = 0; i < zdegree(sf); ++i) {
            Rational c = Rational(sf[i]).abs() / lead;
            if (Rational(1) + c > bound) bound = Rational(1) + c;
        }
        // two distinct rational roots with denominators at most D differ by
        // more than 1/D^2, so an interval narrower than that holds at most one
        Rational gap;
        if (root_denominator && *root_denominator > 0) {
            Rational d(*root_denominator);
            gap = (d * d).inverse();
        } else {
            gap = (lead * lead).inverse();
        }

        struct Interval { Rational a, b; size_t count; };
        std::vector<Interval> stack;
        size_t total = sturm.variations(-bound) - sturm.variations(bound);
        if (total > 0) stack.push_back({-bound, bound, total});

        while (!stack.empty() && !restart) {
            Interval iv = stack.back();
            stack.pop_back();
            if (iv.count == 1) {
                // the interval holds exactly one root, so it can be consumed
                // independently of the rest of the stack: probe the simplest
                // rational first (a rational root is hit after a few probes),
                // fall back to bisection so irrational roots still shrink fast
                Rational a = iv.a, b = iv.b;
                int sa = poly_eval_q(sf, a).sign();
                bool hit = false;
                while (b - a >= gap) {
                    Rational cand = simplest_rational_between(a, b);
                    int sc = poly_eval_q(sf, cand).sign();
                    if (sc == 0) {
                        found.push_back(cand);
                        hit = true;
                        break;
                    }
                    if (sc == sa) a = cand; else b = cand;
                    if (b - a < gap) break;
                    Rational mid = (a + b) / Rational(2);
                    int sm = poly_eval_q(sf, mid).sign();
                    if (sm == 0) {
                        found.push_back(mid);
                        hit = true;
                        break;
                    }
                    if (sm == sa) a = mid; else b = mid;
                }
                if (hit) continue;
                Rational cand = simplest_rational_between(a, b);
                if (poly_eval_q(sf, cand).is_zero()) found.push_back(cand);
                // otherwise the isolated root is irrational; multiplicity
                // accounting below reports the polynomial as not split
                continue;
            }
            Rational mid = (iv.a + iv.b) / Rational(2);
            if (poly_eval_q(sf, mid).is_zero()) {
                found.push_back(mid);
                restart = true;
                break;
            }
            size_t va = sturm.variations(iv.a), vm = sturm.variations(mid), vb = sturm.variations(iv.b);
            if (va > vm) stack.push_back({iv.a, mid, va - vm});
            if (vm > vb) stack.push_back({mid, iv.b, vm - vb});
        }

        if (restart) {
            // deflate the square-free part by the root just found and rerun
            const Rational& r = found.back();
            ZPoly lin = primitive_from_rational({-r, Rational(1)});
            sf = zdivide_exact(sf, lin);
        }
    }

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());

    size_t mult_sum = 0;
    for (const auto& r : found) {
        size_t mult = linear_root_multiplicity(p, r);
        if (mult == 0) throw InternalInvariantViolation("isolated root fails verification");
        out.roots.push_back({r, mult});
        mult_sum += mult;
    }
    out.complete = (mult_sum == degree);
    return out;
}

EigenDecomposition eigen_decompose(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("eigen decomposition of non-square matrix");
    EigenDecomposition ed;
    // scaling by the entry-denominator lcm makes the matrix integral, so
    // every rational eigenvalue has denominator dividing that lcm
    mpz_class delta(1);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(delta.get_mpz_t(), delta.get_mpz_t(), m.at(i, j).den().get_mpz_t());
    RootList rl = rational_roots(char_poly(m), delta);
    ed.rational_char_poly_split = rl.complete;
    size_t dim_sum = 0;
    for (const auto& [value, mult] : rl.roots) {
        (void)mult;
        Subspace es = eigenspace(m, value);
        dim_sum += es.dim();
        ed.eigenvalues.push_back(value);
        ed.eigenspaces.push_back(es);
    }
    ed.diagonalizable = (dim_sum == m.rows());
    return ed;
}

}  // namespace bidiag

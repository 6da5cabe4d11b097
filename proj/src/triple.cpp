#include "bidiag/triple.hpp"

#include <algorithm>

#include "bidiag/errors.hpp"

namespace bidiag {

namespace {

// Common ratio of successive differences; nullopt when consecutive entries
// repeat or the ratio varies.
std::optional<Rational> difference_ratio(const std::vector<Rational>& s) {
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == s[i + 1]) return std::nullopt;
    if (s.size() < 3) return Rational(1);
    Rational b = (s[2] - s[1]) / (s[1] - s[0]);
    for (size_t i = 2; i + 1 < s.size(); ++i)
        if ((s[i + 1] - s[i]) != b * (s[i] - s[i - 1])) return std::nullopt;
    return b;
}

// Partner containment constraints as successor edges between eigenspace
// blocks.  With C the partner in the stacked eigenbasis, a nonzero block
// (j, i) with j != i forces block j to sit directly after block i (upward
// partner) or directly before it (downward partner).
void add_partner_edges(const Matrix& c, const std::vector<size_t>& offsets,
                       const std::vector<size_t>& dims, bool up,
                       std::vector<std::optional<size_t>>& succ) {
    size_t k = dims.size();
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            bool nonzero = false;
            for (size_t r = 0; r < dims[j] && !nonzero; ++r)
                for (size_t col = 0; col < dims[i] && !nonzero; ++col)
                    if (!c.at(offsets[j] + r, offsets[i] + col).is_zero()) nonzero = true;
            if (!nonzero) continue;
            size_t from = up ? i : j, to = up ? j : i;
            if (succ[from] && *succ[from] != to)
                throw NoStandardOrdering("partner spreads an eigenspace over more than two blocks");
            succ[from] = to;
        }
    }
}

bool eigenvalue_lex_less(const Ordering& a, const Ordering& b) {
    return std::lexicographical_compare(a.eigenvalues.begin(), a.eigenvalues.end(),
                                        b.eigenvalues.begin(), b.eigenvalues.end());
}

}  // namespace

std::vector<Ordering> standard_ordering_candidates(const Matrix& x,
                                                   const Matrix* partner_up,
                                                   const Matrix* partner_down) {
    if (!x.is_square()) throw DimensionMismatch("operator must be square");
    if (x.rows() == 0) throw DimensionMismatch("operator on a zero-dimensional space");
    for (const Matrix* p : {partner_up, partner_down})
        if (p && (p->rows() != x.rows() || p->cols() != x.cols()))
            throw DimensionMismatch("partner operator acts on a different space");

    EigenDecomposition ed = eigen_decompose(x);
    if (!ed.diagonalizable)
        throw NotDiagonalizable(std::string("operator is not diagonalizable over the rationals") +
                                " (characteristic polynomial splits: " +
                                (ed.rational_char_poly_split ? "yes" : "no") + ")");
    size_t k = ed.eigenvalues.size(), n = x.rows();

    std::vector<size_t> offsets(k), dims(k);
    {
        size_t off = 0;
        Matrix stacked(0, n);
        for (size_t i = 0; i < k; ++i) {
            offsets[i] = off;
            dims[i] = ed.eigenspaces[i].dim();
            off += dims[i];
            stacked = vstack(stacked, ed.eigenspaces[i].basis());
        }
        Matrix t = stacked.transpose();
        Matrix t_inv = inverse(t);
        std::vector<std::optional<size_t>> succ(k);
        if (partner_up) add_partner_edges(t_inv * (*partner_up) * t, offsets, dims, true, succ);
        if (partner_down) add_partner_edges(t_inv * (*partner_down) * t, offsets, dims, false, succ);

        // the successor relation must form disjoint chains
        std::vector<size_t> indegree(k, 0);
        for (size_t i = 0; i < k; ++i)
            if (succ[i] && ++indegree[*succ[i]] > 1)
                throw NoStandardOrdering("two eigenspaces map onto the same successor");
        std::vector<std::vector<size_t>> fragments;
        std::vector<bool> visited(k, false);
        for (size_t head = 0; head < k; ++head) {
            if (indegree[head] > 0) continue;
            std::vector<size_t> chain;
            for (std::optional<size_t> cur = head; cur; cur = succ[*cur]) {
                if (visited[*cur])
                    throw NoStandardOrdering("containment constraints are cyclic");
                visited[*cur] = true;
                chain.push_back(*cur);
            }
            fragments.push_back(std::move(chain));
        }
        for (bool v : visited)
            if (!v) throw NoStandardOrdering("containment constraints are cyclic");

        if (fragments.size() > 4)
            throw NoStandardOrdering("containment constraints leave the ordering underdetermined");

        std::vector<size_t> perm(fragments.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::vector<Ordering> candidates;
        do {
            Ordering ord;
            for (size_t f : perm)
                for (size_t node : fragments[f]) {
                    ord.spaces.push_back(ed.eigenspaces[node]);
                    ord.eigenvalues.push_back(ed.eigenvalues[node]);
                }
            candidates.push_back(std::move(ord));
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::sort(candidates.begin(), candidates.end(), eigenvalue_lex_less);
        return candidates;
    }
}

Ordering find_standard_ordering(const Matrix& x, const Matrix* partner_up,
                                const Matrix* partner_down) {
    return standard_ordering_candidates(x, partner_up, partner_down).front();
}

namespace {

// One bijection family: the p-th commutator power restricted between the
// spaces at distance p = d - 2i, upward (V_i -> V_{d-i}) or downward.
// Returns a description of the first failure, nullopt when all pass.
// The power acts on the from-basis vector by vector; the spaces involved are
// small, so this stays far cheaper than forming the matrix powers themselves.
std::optional<std::string> family_failure(const Matrix& comm, const Ordering& ord,
                                          bool upward, const std::string& label) {
    size_t d = ord.diameter();
    for (size_t i = 0; 2 * i <= d; ++i) {
        size_t p = d - 2 * i;
        const Subspace& from = upward ? ord.spaces[i] : ord.spaces[d - i];
        const Subspace& to = upward ? ord.spaces[d - i] : ord.spaces[i];
        if (from.dim() != to.dim())
            return label + " is not a bijection at index " + std::to_string(i);
        Matrix coords(from.dim(), to.dim());
        for (size_t r = 0; r < from.dim(); ++r) {
            auto v = from.basis_vector(r);
            for (size_t k = 0; k < p; ++k) v = comm.apply(v);
            auto c = to.coordinates(v);
            if (!c)
                throw InternalInvariantViolation(
                    "commutator power escapes its target space in family " + label);
            for (size_t j = 0; j < to.dim(); ++j) coords.at(r, j) = (*c)[j];
        }
        auto [rr, rank] = rref(coords);
        (void)rr;
        if (rank != to.dim())
            return label + " is not a bijection at index " + std::to_string(i);
    }
    return std::nullopt;
}

// Keep only the orderings whose bijection families all pass; remembers the
// first failure for error reporting.
std::vector<Ordering> filter_orderings(const std::vector<Ordering>& cands,
                                       const Matrix& comm_up, const Matrix* comm_down,
                                       const std::string& label_up,
                                       const std::string& label_down,
                                       std::string& first_failure) {
    std::vector<Ordering> kept;
    for (const auto& ord : cands) {
        auto fail = family_failure(comm_up, ord, true, label_up);
        if (!fail && comm_down)
            fail = family_failure(*comm_down, ord, false, label_down);
        if (fail) {
            if (first_failure.empty()) first_failure = *fail;
            continue;
        }
        kept.push_back(ord);
    }
    return kept;
}

std::vector<Rational> shape_of(const Ordering& ord) {
    std::vector<Rational> s;
    for (const auto& sp : ord.spaces) s.push_back(Rational(static_cast<long>(sp.dim())));
    return s;
}

void check_shape_symmetry(const std::vector<Rational>& shape, const char* what) {
    size_t d = shape.size() - 1;
    for (size_t i = 0; i <= d; ++i)
        if (shape[i] != shape[d - i])
            throw InternalInvariantViolation(std::string("asymmetric shape for verified ") + what);
}

}  // namespace

BidiagonalPair verify_bd_pair(const Matrix& a, const Matrix& a_prime) {
    if (!a.is_square() || !a_prime.is_square() || a.rows() != a_prime.rows())
        throw DimensionMismatch("pair must be square operators on one space");

    auto cand_a = standard_ordering_candidates(a, &a_prime, nullptr);
    auto cand_ap = standard_ordering_candidates(a_prime, &a, nullptr);

    size_t d = cand_a.front().diameter(), dd = cand_ap.front().diameter();
    if (d != dd)
        throw DiameterMismatch("diameters differ: " + std::to_string(d) + " vs " +
                               std::to_string(dd));

    Matrix k = commutator(a_prime, a);
    // [a, a'] = -[a', a]; the sign cannot change whether a restriction is
    // bijective, so both families use the same commutator.
    std::string first_failure;
    auto kept_a = filter_orderings(cand_a, k, nullptr, "[A',A]^(d-2i) on V_i", "",
                                   first_failure);
    auto kept_ap = filter_orderings(cand_ap, k, nullptr, "[A,A']^(d-2i) on V'_i", "",
                                    first_failure);
    if (kept_a.empty() || kept_ap.empty())
        throw BijectionFails(first_failure);

    BidiagonalPair pair{a, a_prime, kept_a.front(), kept_ap.front(), {}, Rational(1), d};
    pair.pa.first = pair.ord_a.eigenvalues;
    pair.pa.second = pair.ord_a_prime.eigenvalues;
    pair.pa.shape = shape_of(pair.ord_a);

    check_shape_symmetry(pair.pa.shape, "pair");
    auto shape_dual = shape_of(pair.ord_a_prime);
    for (size_t i = 0; i <= d; ++i)
        if (pair.pa.shape[i] != shape_dual[d - i])
            throw InternalInvariantViolation("eigenspace dimensions disagree across the pair");

    if (d >= 2) {
        auto r1 = difference_ratio(pair.pa.first);
        std::vector<Rational> dual_reversed(pair.pa.second.rbegin(), pair.pa.second.rend());
        auto r2 = difference_ratio(dual_reversed);
        if (!r1 || !r2 || *r1 != *r2)
            throw InternalInvariantViolation("verified pair has no common base");
        pair.base = *r1;
    }
    return pair;
}

BidiagonalTriple verify_bd_triple(const Matrix& a, const Matrix& a_prime,
                                  const Matrix& a_double) {
    if (!a.is_square() || !a_prime.is_square() || !a_double.is_square() ||
        a.rows() != a_prime.rows() || a.rows() != a_double.rows())
        throw DimensionMismatch("triple must be square operators on one space");

    auto cand_a = standard_ordering_candidates(a, &a_prime, &a_double);
    auto cand_ap = standard_ordering_candidates(a_prime, &a_double, &a);
    auto cand_add = standard_ordering_candidates(a_double, &a, &a_prime);

    size_t d = cand_a.front().diameter();
    if (cand_ap.front().diameter() != d || cand_add.front().diameter() != d)
        throw DiameterMismatch("diameters differ: " + std::to_string(d) + ", " +
                               std::to_string(cand_ap.front().diameter()) + ", " +
                               std::to_string(cand_add.front().diameter()));

    // the six bijection families use three commutators and their negatives
    Matrix k1 = commutator(a_prime, a);    // raises V, lowers V' (negated)
    Matrix k2 = commutator(a_double, a_prime);
    Matrix k3 = commutator(a, a_double);

    std::string first_failure;
    auto kept_a = filter_orderings(cand_a, k1, &k3, "[A',A]^(d-2i) on V_i",
                                   "[A'',A]^(d-2i) on V_(d-i)", first_failure);
    auto kept_ap = filter_orderings(cand_ap, k2, &k1, "[A'',A']^(d-2i) on V'_i",
                                    "[A,A']^(d-2i) on V'_(d-i)", first_failure);
    auto kept_add = filter_orderings(cand_add, k3, &k2, "[A,A'']^(d-2i) on V''_i",
                                     "[A',A'']^(d-2i) on V''_(d-i)", first_failure);
    if (kept_a.empty() || kept_ap.empty() || kept_add.empty())
        throw BijectionFails(first_failure);

    BidiagonalTriple t{a,      a_prime,          a_double,        kept_a.front(),
                       kept_ap.front(), kept_add.front(), {},     Rational(1),
                       d};
    t.pa.first = t.ord_a.eigenvalues;
    t.pa.second = t.ord_a_prime.eigenvalues;
    t.pa.third = t.ord_a_double.eigenvalues;
    t.pa.shape = shape_of(t.ord_a);

    check_shape_symmetry(t.pa.shape, "triple");
    for (size_t k = 1; k < 3; ++k) {
        auto other = shape_of(t.ord(k));
        if (other != t.pa.shape)
            throw InternalInvariantViolation("eigenspace dimensions disagree across the triple");
    }
    try {
        t.base = compute_base(t.pa);
    } catch (const NotBRecurrent& e) {
        throw InternalInvariantViolation(std::string("verified triple has no base: ") + e.what());
    }
    return t;
}

Rational compute_base(const ParameterArray& pa) {
    size_t len = pa.first.size();
    if (len == 0 || pa.second.size() != len || pa.third.size() != len ||
        pa.shape.size() != len)
        throw DimensionMismatch("parameter array components have unequal lengths");
    if (len <= 2) return Rational(1);
    auto r1 = difference_ratio(pa.first);
    auto r2 = difference_ratio(pa.second);
    auto r3 = difference_ratio(pa.third);
    if (!r1 || !r2 || !r3)
        throw NotBRecurrent("difference ratio varies within a sequence");
    if (!(*r1 == *r2 && *r2 == *r3))
        throw NotBRecurrent("the three sequences have different bases");
    return *r1;
}

Rational q_from_base(const Rational& b) {
    if (b.is_zero() || b == Rational(1))
        throw PreconditionFailed("base must differ from 0 and 1");
    auto q = b.inverse().sqrt_exact();
    if (!q) throw Unrepresentable("base " + b.str() + " has no rational quantum parameter");
    return *q;
}

bool is_b_recurrent(const std::vector<Rational>& seq, const Rational& b) {
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] == seq[j]) return false;
    for (size_t i = 1; i + 1 < seq.size(); ++i)
        if (seq[i + 1] - seq[i] != b * (seq[i] - seq[i - 1])) return false;
    return true;
}

std::optional<AffineMap> affine_equivalent_sequences(const std::vector<Rational>& s,
                                                     const std::vector<Rational>& t) {
    if (s.size() != t.size() || s.empty()) return std::nullopt;
    size_t j = 0;
    while (j < t.size() && t[j] == t[0]) ++j;
    AffineMap map{Rational(1), Rational(0)};
    if (j == t.size()) {
        map.s = s[0] - t[0];  // constant t: only a pure shift can work
    } else {
        map.r = (s[j] - s[0]) / (t[j] - t[0]);
        if (map.r.is_zero()) return std::nullopt;
        map.s = s[0] - map.r * t[0];
    }
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] != map(t[i])) return std::nullopt;
    return map;
}

std::optional<AffineMap> affine_operator_map(const Matrix& x, const Matrix& y) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
        throw DimensionMismatch("affine comparison of operators on different spaces");
    size_t n = x.rows();
    AffineMap map{Rational(1), Rational(0)};
    bool pinned = false;
    for (size_t i = 0; i < n && !pinned; ++i)
        for (size_t j = 0; j < n && !pinned; ++j) {
            if (i == j || y.at(i, j).is_zero()) continue;
            map.r = x.at(i, j) / y.at(i, j);
            if (map.r.is_zero()) return std::nullopt;
            map.s = x.at(0, 0) - map.r * y.at(0, 0);
            pinned = true;
        }
    if (!pinned) {
        // y has no off-diagonal entries; try to pin r on a diagonal gap
        for (size_t i = 1; i < n && !pinned; ++i) {
            if (y.at(i, i) == y.at(0, 0)) continue;
            map.r = (x.at(i, i) - x.at(0, 0)) / (y.at(i, i) - y.at(0, 0));
            if (map.r.is_zero()) return std::nullopt;
            map.s = x.at(0, 0) - map.r * y.at(0, 0);
            pinned = true;
        }
    }
    if (!pinned && n > 0) map.s = x.at(0, 0) - y.at(0, 0);  // y scalar: shift only
    return (x == map(y)) ? std::optional<AffineMap>(map) : std::nullopt;
}

bool is_isomorphic(const BidiagonalTriple& t1, const BidiagonalTriple& t2) {
    return t1.pa == t2.pa;
}

BidiagonalTriple conjugate_triple(const BidiagonalTriple& t, const Matrix& mu) {
    if (!mu.is_square() || mu.rows() != t.dim())
        throw DimensionMismatch("conjugating matrix has the wrong size");
    Matrix mu_inv = inverse(mu);
    return verify_bd_triple(mu * t.a * mu_inv, mu * t.a_prime * mu_inv,
                            mu * t.a_double * mu_inv);
}

BidiagonalTriple affine_shift_triple(const BidiagonalTriple& t,
                                     const std::array<AffineMap, 3>& maps) {
    for (const auto& m : maps)
        if (m.r.is_zero())
            throw PreconditionFailed("affine shift needs r != 0 in every component");
    return verify_bd_triple(maps[0](t.a), maps[1](t.a_prime), maps[2](t.a_double));
}

}  // namespace bidiag

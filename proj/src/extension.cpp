#include "bidiag/extension.hpp"

#include <algorithm>

#include "bidiag/errors.hpp"

namespace bidiag {

namespace {

// running sums V_0, V_0+V_1, ..., V_0+...+V_d
std::vector<Subspace> prefix_sums(const std::vector<Subspace>& spaces) {
    std::vector<Subspace> out;
    out.push_back(spaces.front());
    for (size_t i = 1; i < spaces.size(); ++i)
        out.push_back(subspace_sum(out.back(), spaces[i]));
    return out;
}

std::vector<Subspace> suffix_sums(const std::vector<Subspace>& spaces) {
    std::vector<Subspace> out(spaces.size(), spaces.back());
    for (size_t i = spaces.size() - 1; i-- > 0;)
        out[i] = subspace_sum(out[i + 1], spaces[i]);
    return out;
}

}  // namespace

SplitDecomposition split_decomposition(const BidiagonalPair& pair) {
    size_t d = pair.diameter;
    const auto& v = pair.ord_a.spaces;
    const auto& vp = pair.ord_a_prime.spaces;

    auto pre_v = prefix_sums(v);
    auto pre_vp = prefix_sums(vp);

    SplitDecomposition sd;
    sd.from_first = v;
    sd.from_second = vp;
    for (size_t i = 0; i <= d; ++i)
        sd.parts.push_back(subspace_intersect(pre_v[d - i], pre_vp[i]));

    size_t n = pair.a.rows();
    if (!is_decomposition(sd.parts, n))
        throw InternalInvariantViolation("split parts do not decompose the space");
    auto pre_parts = prefix_sums(sd.parts);
    auto suf_parts = suffix_sums(sd.parts);
    for (size_t i = 0; i <= d; ++i) {
        if (pre_vp[d - i] != pre_parts[d - i])
            throw InternalInvariantViolation("first corner-sum identity fails for the split");
        if (suf_parts[i] != pre_v[d - i])
            throw InternalInvariantViolation("second corner-sum identity fails for the split");
    }
    return sd;
}

std::pair<Matrix, Matrix> candidate_maps(const BidiagonalPair& pair) {
    auto sd = split_decomposition(pair);
    size_t d = pair.diameter;
    std::vector<Rational> ev_first, ev_second;
    for (size_t i = 0; i <= d; ++i) {
        ev_first.push_back(pair.pa.first[i]);
        ev_second.push_back(pair.pa.second[d - i]);
    }
    return {operator_from_decomposition(sd.parts, ev_first),
            operator_from_decomposition(sd.parts, ev_second)};
}

BidiagonalTriple extend_pair(const BidiagonalPair& pair,
                             const std::optional<std::vector<Rational>>& target,
                             const std::optional<Rational>& q) {
    size_t d = pair.diameter;
    const Rational& b = pair.base;

    std::vector<Rational> third;
    if (target) {
        if (target->size() != d + 1)
            throw DimensionMismatch("target sequence must have length d + 1");
        third = *target;
        if (d >= 2 && !is_b_recurrent(third, b))
            throw NotBRecurrent("target sequence is not recurrent with the pair's base");
        if (d == 1 && third[0] == third[1])
            throw NotBRecurrent("target sequence entries must be distinct");
    } else if (b == Rational(1)) {
        for (size_t i = 0; i <= d; ++i)
            third.push_back(Rational(2 * static_cast<long>(i)) - Rational(static_cast<long>(d)));
    } else {
        Rational qq;
        if (q) {
            qq = q->abs();  // negative root accepted, positive used
            if (qq.is_zero() || qq * qq != b.inverse())
                throw PreconditionFailed("supplied q does not square to the inverse base");
        } else {
            qq = q_from_base(b);
        }
        for (size_t i = 0; i <= d; ++i)
            third.push_back(qq.pow(static_cast<long>(d) - 2 * static_cast<long>(i)));
    }

    auto sd = split_decomposition(pair);
    Matrix a_double = operator_from_decomposition(sd.parts, third);
    BidiagonalTriple t = verify_bd_triple(pair.a, pair.a_prime, a_double);

    std::vector<Rational> dual_reversed(pair.pa.second.rbegin(), pair.pa.second.rend());
    if (t.pa.first != pair.pa.first || t.pa.second != dual_reversed ||
        t.pa.third != third || t.pa.shape != pair.pa.shape)
        throw InternalInvariantViolation("extended triple does not carry the expected array");
    return t;
}

bool check_uniqueness(const BidiagonalTriple& t1, const BidiagonalTriple& t2) {
    if (t1.dim() != t2.dim())
        throw DimensionMismatch("uniqueness check on triples over different spaces");
    if (!affine_operator_map(t2.a, t1.a) || !affine_operator_map(t2.a_prime, t1.a_prime))
        throw PreconditionFailed("first two operators are not affinely related");
    return affine_operator_map(t2.a_double, t1.a_double).has_value();
}

}  // namespace bidiag

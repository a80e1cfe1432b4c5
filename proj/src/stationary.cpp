#include "qtsetlin/stationary.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace qtsetlin {

Scalar sum(const Vector& v) {
    Scalar s = 0;
    for (const auto& x : v) s += x;
    return s;
}

Vector normalized(const Vector& v) {
    Scalar s = sum(v);
    if (s == 0) throw std::domain_error("cannot normalize a vector with zero sum");
    Vector out = v;
    for (auto& x : out) x /= s;
    return out;
}

Scalar kappa_perm(std::vector<int> b, const PermRates& r) {
    std::sort(b.begin(), b.end(), std::greater<>());
    const int k = static_cast<int>(b.size());
    Scalar s = 0;
    for (int i = 1; i <= k; ++i) {
        int bi = b[static_cast<std::size_t>(i - 1)];
        s += r.x[static_cast<std::size_t>(bi - 1)] * power(r.q, i + bi - k - 1);
    }
    return s;
}

Scalar kappa_word(std::vector<int> b, const WordRates& r) {
    std::sort(b.begin(), b.end(), std::greater<>());
    auto n = partial_sums(r.m);
    const int k = static_cast<int>(b.size());
    Scalar s = 0;
    for (int i = 1; i <= k; ++i) {
        auto bi = static_cast<std::size_t>(b[static_cast<std::size_t>(i - 1)]);
        s += r.xbar[bi - 1] * power(r.q, i + n[bi] - k - 1) / q_int(r.m[bi - 1], r.q);
    }
    return s;
}

Scalar FormulaFactors::value() const {
    Scalar v = prefactor;
    for (const auto& x : numer) v *= x;
    for (const auto& x : denom) {
        if (x == 0) throw std::domain_error("vanishing denominator");
        v /= x;
    }
    return v;
}

namespace {

template <class Kappa>
FormulaFactors shared_factors(const std::vector<int>& s, const Scalar& q, const Scalar& total, Kappa kappa) {
    const int n = static_cast<int>(s.size());
    FormulaFactors f;
    f.prefactor = power(q, -inv(s));
    auto lrm = lrm_positions(s);
    auto slice = [&](int from, int to) {  // 1-based inclusive
        return std::vector<int>(s.begin() + from - 1, s.begin() + to);
    };
    for (int k = 1; k <= n - 1; ++k) {
        if (std::find(lrm.begin(), lrm.end(), k) != lrm.end()) {
            f.numer.push_back(kappa(slice(k, k)));
        } else {
            int pk = p_index(s, k);
            f.numer.push_back(kappa(slice(pk, k)) - kappa(slice(pk, k - 1)) / q);
        }
        f.denom.push_back(total - power(q, k - n - 1) * kappa(slice(1, k - 1)));
    }
    return f;
}

void check_denominators(const FormulaFactors& f, const std::vector<int>& s) {
    for (std::size_t k = 0; k < f.denom.size(); ++k)
        if (f.denom[k] == 0)
            throw std::domain_error("formula denominator vanishes at state " + seq_to_string(s) +
                                    ", k = " + std::to_string(k + 1));
}

}  // namespace

FormulaFactors perm_formula_factors(const Permutation& pi, const PermRates& r) {
    validate(r);
    if (pi.size() != r.x.size() || !is_permutation(pi)) throw std::invalid_argument("permutation does not match rates");
    auto f = shared_factors(pi, r.q, sum(r.x), [&](const std::vector<int>& b) { return kappa_perm(b, r); });
    check_denominators(f, pi);
    return f;
}

FormulaFactors word_formula_factors(const Word& w, const WordRates& r) {
    validate(r);
    if (content(w, static_cast<int>(r.m.size())) != r.m) throw std::invalid_argument("word does not match composition");
    auto f = shared_factors(w, r.q, sum(r.xbar), [&](const std::vector<int>& b) { return kappa_word(b, r); });
    // q^{-binom(m_i,2)} [m_i]_q! = [m_i]_{1/q}!, the fibre sum of q^{-inv}; equals q^{1-m_i} [m_i]_q! only for m_i <= 2
    for (int mi : r.m) f.prefactor *= power(r.q, -mi * (mi - 1) / 2) * q_factorial(mi, r.q);
    check_denominators(f, w);
    return f;
}

std::vector<Scalar> flag_formula_factors(const Permutation& pi, const FlagRates& r) {
    validate(r);
    const int n = static_cast<int>(pi.size());
    if (n != static_cast<int>(r.x.size()) || !is_permutation(pi)) throw std::invalid_argument("permutation does not match rates");
    const Scalar q(r.p);
    const Scalar total = sum(r.x);
    auto x = [&](int s) { return r.x[static_cast<std::size_t>(s - 1)]; };
    // b_k(s) = #{t in pi_1..pi_{k-1} : t > s}
    auto b = [&](int k, int s) {
        int c = 0;
        for (int t = 0; t < k - 1; ++t)
            if (pi[static_cast<std::size_t>(t)] > s) ++c;
        return c;
    };
    std::vector<Scalar> out;
    for (int k = 1; k <= n; ++k) {
        const int pk = pi[static_cast<std::size_t>(k - 1)];
        Scalar f = 0;
        for (int t = 0; t < k; ++t) {
            int s = pi[static_cast<std::size_t>(t)];
            if (s > pk) continue;
            Scalar term = x(s) / (power(q, n - s - b(k, s)) * total);
            if (s < pk) term *= q - 1;
            f += term;
        }
        Scalar d = total;
        for (int t = 0; t < k - 1; ++t) {
            int s = pi[static_cast<std::size_t>(t)];
            d -= x(s) / power(q, n - s - b(k, s));
        }
        if (d == 0)
            throw std::domain_error("formula denominator vanishes at coset " + seq_to_string(pi) +
                                    ", k = " + std::to_string(k));
        out.push_back(f / d);
    }
    return out;
}

Scalar stationary_perm_entry(const Permutation& pi, const PermRates& r) { return perm_formula_factors(pi, r).value(); }

Scalar stationary_word_entry(const Word& w, const WordRates& r) { return word_formula_factors(w, r).value(); }

Scalar stationary_flag_coset_value(const Permutation& pi, const FlagRates& r) {
    Scalar v = 1;
    for (const auto& f : flag_formula_factors(pi, r)) v *= f;
    return v;
}

Vector stationary_perm_formula(const PermRates& r) {
    Vector out;
    for (const auto& pi : all_permutations(static_cast<int>(r.x.size()))) out.push_back(stationary_perm_entry(pi, r));
    return out;
}

Vector stationary_word_formula(const WordRates& r) {
    Vector out;
    for (const auto& w : all_words(r.m)) out.push_back(stationary_word_entry(w, r));
    return out;
}

Vector stationary_flags_formula(const FlagRates& r, const FlagSpace& space) {
    Vector out;
    out.reserve(space.size());
    Permutation last;
    Scalar value;
    for (const auto& f : space.states()) {
        auto pi = coset_to_perm(f);
        if (pi != last) {
            value = stationary_flag_coset_value(pi, r);
            last = pi;
        }
        out.push_back(value);
    }
    return out;
}

Vector stationary_flags_semigroup(const FlagRates& r, const FlagSpace& space) {
    Vector out;
    out.reserve(space.size());
    for (const auto& f : space.states()) out.push_back(rcayley_stationary(r, f));
    return out;
}

Vector stationary_oracle(const Matrix& op, const Scalar& total) {
    auto basis = left_null_space(shift(op, total));
    if (basis.size() != 1)
        throw std::domain_error("stationary vector is not unique (null space dimension " + std::to_string(basis.size()) + ")");
    return normalized(basis.front());
}

}  // namespace qtsetlin

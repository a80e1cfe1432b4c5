#include "qtsetlin/chains.hpp"

#include <map>
#include <stdexcept>

namespace qtsetlin {

void validate(const PermRates& r) {
    if (r.x.empty()) throw std::invalid_argument("rates must be nonempty");
    if (r.q == 0) throw std::invalid_argument("q must be nonzero");
}

void validate(const WordRates& r) {
    validate_composition(r.m);
    if (r.xbar.size() != r.m.size())
        throw std::invalid_argument("word rates need one value per letter");
    if (r.q == 0) throw std::invalid_argument("q must be nonzero");
}

namespace {

std::map<std::vector<int>, std::size_t> index_of(const std::vector<std::vector<int>>& states) {
    std::map<std::vector<int>, std::size_t> idx;
    for (std::size_t k = 0; k < states.size(); ++k) idx[states[k]] = k;
    return idx;
}

// Shared rule: q*swap when s_{i+1} < s_i (or <= for words), else swap + (q-1)*s.
Matrix generator_on(const std::vector<std::vector<int>>& states, int i, const Scalar& q, bool weak) {
    auto idx = index_of(states);
    Matrix t(states.size(), states.size());
    for (std::size_t k = 0; k < states.size(); ++k) {
        const auto& s = states[k];
        if (i < 1 || i >= static_cast<int>(s.size())) throw std::invalid_argument("generator index out of range");
        int a = s[static_cast<std::size_t>(i - 1)], b = s[static_cast<std::size_t>(i)];
        std::size_t sw = idx.at(swap_positions(s, i));
        if (b < a || (weak && b == a)) {
            t(k, sw) += q;
        } else {
            t(k, sw) += 1;
            t(k, k) += q - 1;
        }
    }
    return t;
}

}  // namespace

Matrix hecke_generator_perm(int i, int n, const Scalar& q) {
    return generator_on(all_permutations(n), i, q, false);
}

Matrix hecke_generator_word(int i, const Composition& m, const Scalar& q) {
    return generator_on(all_words(m), i, q, true);
}

std::vector<Matrix> hecke_generators_perm(int n, const Scalar& q) {
    auto states = all_permutations(n);
    std::vector<Matrix> g;
    for (int i = 1; i < n; ++i) g.push_back(generator_on(states, i, q, false));
    return g;
}

std::vector<Matrix> hecke_generators_word(const Composition& m, const Scalar& q) {
    auto states = all_words(m);
    std::vector<Matrix> g;
    for (int i = 1; i < total(m); ++i) g.push_back(generator_on(states, i, q, true));
    return g;
}

Matrix weight_op_perm(const PermRates& r) {
    validate(r);
    const int n = static_cast<int>(r.x.size());
    auto states = all_permutations(n);
    Vector d;
    for (const auto& p : states) d.push_back(r.x[static_cast<std::size_t>(p[0] - 1)] / power(r.q, n - p[0]));
    return Matrix::diagonal(d);
}

Matrix weight_op_word(const WordRates& r) {
    validate(r);
    auto states = all_words(r.m);
    Vector d;
    for (const auto& w : states) {
        std::size_t j = static_cast<std::size_t>(w[0] - 1);
        int above = 0;
        for (std::size_t k = j + 1; k < r.m.size(); ++k) above += r.m[k];
        d.push_back(r.xbar[j] / (power(r.q, above) * q_int(r.m[j], r.q)));
    }
    return Matrix::diagonal(d);
}

Matrix tsetlin_sum(const std::vector<Matrix>& gens, const Matrix& weight) {
    Matrix prefix = Matrix::identity(weight.rows());
    Matrix sum = prefix;
    for (const auto& g : gens) {
        prefix = mat_mul(g, prefix);
        sum += prefix;
    }
    return mat_mul(sum, weight);
}

Matrix transition_matrix_perm(const PermRates& r) {
    validate(r);
    return tsetlin_sum(hecke_generators_perm(static_cast<int>(r.x.size()), r.q), weight_op_perm(r));
}

Matrix transition_matrix_word(const WordRates& r) {
    validate(r);
    return tsetlin_sum(hecke_generators_word(r.m, r.q), weight_op_word(r));
}

HeckeCheck check_hecke_relations(const std::vector<Matrix>& gens, const Scalar& q) {
    HeckeCheck c;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& t = gens[i];
        Matrix id = Matrix::identity(t.rows());
        if (!mat_mul(t + id, shift(t, q)).is_zero()) c.quadratic = false;
        if (i + 1 < gens.size()) {
            const auto& u = gens[i + 1];
            if (!(mat_mul(mat_mul(t, u), t) == mat_mul(mat_mul(u, t), u))) c.braid = false;
        }
        for (std::size_t j = i + 2; j < gens.size(); ++j)
            if (!(mat_mul(t, gens[j]) == mat_mul(gens[j], t))) c.commuting = false;
    }
    return c;
}

}  // namespace qtsetlin

#include "qtsetlin/lumping.hpp"

#include <map>
#include <stdexcept>

namespace qtsetlin {

namespace {

std::map<std::vector<int>, std::size_t> index_of(const std::vector<std::vector<int>>& states) {
    std::map<std::vector<int>, std::size_t> idx;
    for (std::size_t k = 0; k < states.size(); ++k) idx[states[k]] = k;
    return idx;
}

}  // namespace

Matrix proj_flags_to_perms(const FlagSpace& space) {
    auto perms = all_permutations(space.n());
    auto idx = index_of(perms);
    Matrix p(space.size(), perms.size());
    for (std::size_t k = 0; k < space.size(); ++k) p(k, idx.at(coset_to_perm(space.states()[k]))) = 1;
    return p;
}

Matrix incl_perms_to_flags(const FlagSpace& space) {
    auto perms = all_permutations(space.n());
    auto idx = index_of(perms);
    const Scalar q(space.p());
    Matrix j(perms.size(), space.size());
    for (std::size_t k = 0; k < space.size(); ++k) {
        auto pi = coset_to_perm(space.states()[k]);
        j(idx.at(pi), k) = power(q, inv(pi));
    }
    return j;
}

Matrix proj_perms_to_words(const Composition& m) {
    auto perms = all_permutations(total(m));
    auto idx = index_of(all_words(m));
    Matrix p(perms.size(), idx.size());
    for (std::size_t k = 0; k < perms.size(); ++k) p(k, idx.at(destandardize(perms[k], m))) = 1;
    return p;
}

Matrix incl_words_to_perms(const Composition& m, const Scalar& q) {
    auto words = all_words(m);
    auto perms = all_permutations(total(m));
    auto pidx = index_of(perms);
    // tau preserving every block M_j = (n_{j-1}, n_j]
    std::vector<Permutation> young;
    for (const auto& tau : perms)
        if (destandardize(tau, m) == destandardize(perms.front(), m)) young.push_back(tau);
    Matrix j(words.size(), perms.size());
    for (std::size_t k = 0; k < words.size(); ++k) {
        auto s = standardize(words[k]);
        for (const auto& tau : young) j(k, pidx.at(compose_values(tau, s))) += power(q, -inv(tau));
    }
    return j;
}

bool is_m_compatible(const PermRates& r, const Composition& m) {
    validate(r);
    validate_composition(m);
    const int n = static_cast<int>(r.x.size());
    if (total(m) != n) throw std::invalid_argument("composition does not match rates");
    auto nj = partial_sums(m);
    for (std::size_t j = 0; j < m.size(); ++j) {
        Scalar y = r.x[static_cast<std::size_t>(nj[j + 1] - 1)] / power(r.q, n - nj[j + 1]);
        for (int i = nj[j] + 1; i < nj[j + 1]; ++i)
            if (r.x[static_cast<std::size_t>(i - 1)] / power(r.q, n - i) != y) return false;
    }
    return true;
}

WordRates map_rates_perm_to_word(const PermRates& r, const Composition& m) {
    if (!is_m_compatible(r, m)) throw std::invalid_argument("rates are not compatible with the composition");
    auto nj = partial_sums(m);
    WordRates w{r.q, m, {}};
    for (std::size_t j = 0; j < m.size(); ++j)
        w.xbar.push_back(q_int(m[j], r.q) * r.x[static_cast<std::size_t>(nj[j + 1] - 1)]);
    return w;
}

PermRates map_rates_word_to_perm(const WordRates& r) {
    validate(r);
    PermRates p{r.q, {}};
    for (std::size_t j = 0; j < r.m.size(); ++j) {
        Scalar top = r.xbar[j] / q_int(r.m[j], r.q);
        for (int i = 1; i <= r.m[j]; ++i) p.x.push_back(power(r.q, r.m[j] - i) * top);
    }
    return p;
}

const char* diagram_name(Diagram d) {
    switch (d) {
        case Diagram::FlagsPermsProjection: return "flags-perms-projection";
        case Diagram::FlagsPermsInclusion: return "flags-perms-inclusion";
        case Diagram::PermsWordsProjection: return "perms-words-projection";
        case Diagram::PermsWordsInclusion: return "perms-words-inclusion";
    }
    return "";
}

bool check_commuting(Diagram d, const FlagRates& r) {
    FlagSpace space(static_cast<int>(r.x.size()), r.p);
    Matrix tf = transition_matrix_flags(r, space);
    Matrix tp = transition_matrix_perm({Scalar(r.p), r.x});
    switch (d) {
        case Diagram::FlagsPermsProjection: {
            Matrix p = proj_flags_to_perms(space);
            return mat_mul(tf, p) == mat_mul(p, tp);
        }
        case Diagram::FlagsPermsInclusion: {
            Matrix j = incl_perms_to_flags(space);
            return mat_mul(j, tf) == mat_mul(tp, j);
        }
        default: throw std::invalid_argument("diagram needs word rates");
    }
}

bool check_commuting(Diagram d, const WordRates& r) {
    Matrix tw = transition_matrix_word(r);
    Matrix tp = transition_matrix_perm(map_rates_word_to_perm(r));
    switch (d) {
        case Diagram::PermsWordsProjection: {
            Matrix p = proj_perms_to_words(r.m);
            return mat_mul(tp, p) == mat_mul(p, tw);
        }
        case Diagram::PermsWordsInclusion: {
            Matrix j = incl_words_to_perms(r.m, r.q);
            return mat_mul(j, tp) == mat_mul(tw, j);
        }
        default: throw std::invalid_argument("diagram needs flag rates");
    }
}

}  // namespace qtsetlin

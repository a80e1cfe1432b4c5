#include "qtsetlin/lumping.hpp"

#include "qtsetlin/stationary.hpp"

#include <doctest.h>

#include <map>

using namespace qtsetlin;

TEST_SUITE("lumping") {

TEST_CASE("inclusion of 1211 for m = (3,1)") {
    Scalar q = make_scalar(7, 2);
    Matrix j = incl_words_to_perms({3, 1}, q);
    auto words = all_words({3, 1});
    auto perms = all_permutations(4);
    std::size_t row = static_cast<std::size_t>(std::find(words.begin(), words.end(), Word{1, 2, 1, 1}) - words.begin());
    std::map<std::string, Scalar> expected{{"1423", 1},           {"2413", 1 / q},     {"1432", 1 / q},
                                           {"2431", 1 / (q * q)}, {"3412", 1 / (q * q)}, {"3421", 1 / (q * q * q)}};
    for (std::size_t c = 0; c < perms.size(); ++c) {
        auto key = seq_to_string(perms[c]);
        Scalar want = expected.count(key) ? expected[key] : Scalar(0);
        CHECK(j(row, c) == want);
    }
}

TEST_CASE("projection matrices are 0/1 with one 1 per row") {
    FlagSpace s(3, 2);
    Matrix p = proj_flags_to_perms(s);
    for (std::size_t i = 0; i < p.rows(); ++i) {
        Scalar t = 0;
        for (std::size_t k = 0; k < p.cols(); ++k) t += p(i, k);
        CHECK(t == 1);
    }
    Matrix pw = proj_perms_to_words({2, 2});
    CHECK(pw.rows() == 24);
    CHECK(pw.nonzeros() == 24);
}

TEST_CASE("compatibility of rates") {
    Composition m{2, 1};
    CHECK(is_m_compatible({2, {make_scalar(1, 2), make_scalar(1, 4), make_scalar(1, 4)}}, m));
    CHECK_FALSE(is_m_compatible({3, {make_scalar(1, 2), make_scalar(1, 4), make_scalar(1, 4)}}, m));
    CHECK_THROWS(map_rates_perm_to_word({3, {make_scalar(1, 2), make_scalar(1, 4), make_scalar(1, 4)}}, m));
    WordRates w = map_rates_perm_to_word({2, {make_scalar(1, 2), make_scalar(1, 4), make_scalar(1, 4)}}, m);
    // xbar_1 = [2]_q x_2
    CHECK(w.xbar[0] == make_scalar(3, 4));
    CHECK(w.xbar[1] == make_scalar(1, 4));
    CHECK(map_rates_word_to_perm(w).x == Vector{make_scalar(1, 2), make_scalar(1, 4), make_scalar(1, 4)});
}

TEST_CASE("flag and permutation diagrams commute") {
    for (int p : {2, 3}) {
        FlagRates r{p, {make_scalar(1, 5), make_scalar(3, 10), make_scalar(1, 2)}};
        CHECK(check_commuting(Diagram::FlagsPermsProjection, r));
        CHECK(check_commuting(Diagram::FlagsPermsInclusion, r));
    }
    CHECK_THROWS(check_commuting(Diagram::PermsWordsProjection, FlagRates{2, {1, 1}}));
}

TEST_CASE("permutation and word diagrams commute") {
    for (const auto& m : std::vector<Composition>{{2, 2}, {1, 2}, {3, 1}, {1, 2, 1}}) {
        WordRates r{make_scalar(5, 2), m, {}};
        for (std::size_t i = 0; i < m.size(); ++i) r.xbar.push_back(make_scalar(static_cast<long>(i) + 2, 9));
        CHECK(check_commuting(Diagram::PermsWordsProjection, r));
        CHECK(check_commuting(Diagram::PermsWordsInclusion, r));
    }
}

TEST_CASE("a wrong inclusion weight breaks the diagram") {
    // q^{+inv} in place of q^{-inv}
    Composition m{2, 1};
    Scalar q = 3;
    WordRates r{q, m, {make_scalar(1, 3), make_scalar(2, 3)}};
    Matrix j = incl_words_to_perms(m, 1 / q);
    Matrix tp = transition_matrix_perm(map_rates_word_to_perm(r));
    CHECK_FALSE(mat_mul(j, tp) == mat_mul(transition_matrix_word(r), j));
}

TEST_CASE("stationary distributions lump") {
    WordRates r{make_scalar(5, 2), {2, 2}, {make_scalar(1, 3), make_scalar(2, 3)}};
    PermRates pr = map_rates_word_to_perm(r);
    CHECK(vec_mat(stationary_perm_formula(pr), proj_perms_to_words(r.m)) == stationary_word_formula(r));
    FlagRates fr{3, {make_scalar(1, 5), make_scalar(3, 10), make_scalar(1, 2)}};
    FlagSpace s(3, 3);
    CHECK(vec_mat(stationary_flags_formula(fr, s), proj_flags_to_perms(s)) == stationary_perm_formula({3, fr.x}));
}

}

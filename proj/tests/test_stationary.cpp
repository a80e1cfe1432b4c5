#include "qtsetlin/stationary.hpp"

#include <doctest.h>

using namespace qtsetlin;

namespace {

// The closed-form n = 3 stationary distribution, basis (123, 132, 213, 231, 312, 321).
Vector reference_psi3(const Scalar& q, const Scalar& x1, const Scalar& x2, const Scalar& x3) {
    Scalar s = x1 + x2 + x3;
    return {q * x1 * (q * (x1 + x2) - x1) / (q * q * s - x1) / s,
            x1 * ((q - 1) * x1 + q * q * x3) / (q * q * s - x1) / s,
            q * x1 * x2 / (q * s - x2) / s,
            x2 * ((q - 1) * x2 + q * x3) / (q * s - x2) / s,
            x1 * x3 / (x1 + x2) / s,
            x2 * x3 / (x1 + x2) / s};
}

}  // namespace

TEST_SUITE("stationary") {

TEST_CASE("kappa") {
    PermRates r{2, {1, 10, 100}};
    CHECK(kappa_perm({}, r) == 0);
    // (3, 1): x3 q^{1+3-2-1} + x1 q^{2+1-2-1}
    CHECK(kappa_perm({1, 3}, r) == 100 * 2 + 1);
    CHECK(kappa_perm({3, 1}, r) == kappa_perm({1, 3}, r));
    CHECK(kappa_perm({2}, r) == 10 * 2);
    WordRates w{3, {1, 2}, {1, 10}};
    // (2, 1): q^{1+3-2-1}/[2] xbar_2 + q^{2+1-2-1} xbar_1
    CHECK(kappa_word({1, 2}, w) == Scalar(3 * 10) / 4 + 1);
}

TEST_CASE("n = 3 permutation formula matches the closed form") {
    for (const Scalar& q : {Scalar(2), Scalar(3), make_scalar(5, 2)}) {
        for (const auto& x : std::vector<Vector>{{make_scalar(1, 2), make_scalar(1, 3), make_scalar(1, 6)},
                                                 {make_scalar(1, 7), make_scalar(2, 7), make_scalar(4, 7)},
                                                 {make_scalar(3, 10), make_scalar(3, 5), make_scalar(1, 10)}}) {
            PermRates r{q, x};
            Vector f = stationary_perm_formula(r);
            CHECK(f == reference_psi3(q, x[0], x[1], x[2]));
            CHECK(sum(f) == 1);
            CHECK(f == stationary_oracle(transition_matrix_perm(r), 1));
        }
    }
}

TEST_CASE("value from the CLI example") {
    PermRates r{2, {make_scalar(1, 2), make_scalar(1, 3), make_scalar(1, 6)}};
    CHECK(stationary_perm_entry({3, 2, 1}, r) == make_scalar(1, 15));
}

TEST_CASE("the permutation formula is degree zero in the rates") {
    PermRates r{make_scalar(5, 2), {make_scalar(1, 5), make_scalar(1, 2), make_scalar(1, 10), make_scalar(1, 5)}};
    PermRates scaled = r;
    for (auto& x : scaled.x) x *= 7;
    CHECK(stationary_perm_formula(r) == stationary_perm_formula(scaled));
}

TEST_CASE("word formula for m = (1,2) matches the closed form") {
    for (const Scalar& q : {Scalar(2), make_scalar(7, 2)}) {
        Scalar a = make_scalar(2, 5), b = make_scalar(3, 5);
        WordRates r{q, {1, 2}, {a, b}};
        Vector f = stationary_word_formula(r);
        Scalar c = 1 + 1 / q;
        Scalar d = (a + b) * (c * a + b);
        CHECK(f[0] == a / (a + b));
        CHECK(f[1] == c * a * b / d);
        CHECK(f[2] == b * b / d);
        CHECK(f == stationary_oracle(transition_matrix_word(r), 1));
    }
}

TEST_CASE("word formula agrees with the oracle on several compositions") {
    for (const auto& m : std::vector<Composition>{{2, 1}, {2, 2}, {1, 2, 1}, {3, 1}}) {
        WordRates r{make_scalar(5, 3), m, {}};
        for (std::size_t i = 0; i < m.size(); ++i) r.xbar.push_back(make_scalar(static_cast<long>(i) + 1, 7));
        r.xbar = normalized(r.xbar);
        CHECK(stationary_word_formula(r) == stationary_oracle(transition_matrix_word(r), 1));
    }
}

TEST_CASE("a single letter repeated is stationary with mass 1") {
    for (int k = 1; k <= 5; ++k) CHECK(stationary_word_entry(Word(static_cast<std::size_t>(k), 1), {make_scalar(5, 2), {k}, {1}}) == 1);
    // blocks of size 3 and 4 are where q^{1-m_i} and q^{-binom(m_i,2)} part ways
    WordRates r{make_scalar(5, 2), {3, 4}, {make_scalar(1, 3), make_scalar(2, 3)}};
    Vector f = stationary_word_formula(r);
    CHECK(sum(f) == 1);
    CHECK(f == stationary_oracle(transition_matrix_word(r), 1));
}

TEST_CASE("flag coset values at p = 2, n = 3") {
    Scalar x1 = make_scalar(1, 2), x2 = make_scalar(1, 3), x3 = make_scalar(1, 6);
    FlagRates r{2, {x1, x2, x3}};
    CHECK(stationary_flag_coset_value({3, 2, 1}, r) == x2 * x3 / (x1 + x2));
    CHECK(stationary_flag_coset_value({3, 1, 2}, r) == x1 * x3 / (2 * (x1 + x2)));
    CHECK(stationary_flag_coset_value({2, 3, 1}, r) == x2 * (x2 + 2 * x3) / (2 * (2 * x1 + x2 + 2 * x3)));
    CHECK(stationary_flag_coset_value({2, 1, 3}, r) == x1 * x2 / (2 * (2 * x1 + x2 + 2 * x3)));
    CHECK(stationary_flag_coset_value({1, 3, 2}, r) == x1 * (x1 + 4 * x3) / (4 * (3 * x1 + 4 * x2 + 4 * x3)));
    CHECK(stationary_flag_coset_value({1, 2, 3}, r) == x1 * (x1 + 2 * x2) / (4 * (3 * x1 + 4 * x2 + 4 * x3)));
    for (const auto& pi : all_permutations(3)) CHECK(flag_formula_factors(pi, r).back() == 1);
    FlagSpace s(3, 2);
    Vector f = stationary_flags_formula(r, s);
    CHECK(sum(f) == 1);
    CHECK(f == stationary_oracle(transition_matrix_flags(r, s), 1));
    CHECK(f == stationary_flags_semigroup(r, s));
}

TEST_CASE("factors are positive for q >= 1") {
    PermRates r{make_scalar(3, 2), {make_scalar(1, 10), make_scalar(2, 5), make_scalar(1, 4), make_scalar(1, 4)}};
    for (const auto& pi : all_permutations(4)) {
        auto f = perm_formula_factors(pi, r);
        for (const auto& v : f.numer) CHECK(v > 0);
        for (const auto& v : f.denom) CHECK(v > 0);
    }
}

TEST_CASE("vanishing denominators are reported") {
    // x1 = q^2 (x1 + x2 + x3) makes the k = 2 denominator of 123 vanish
    PermRates r{make_scalar(1, 2), {1, 1, 2}};
    CHECK_THROWS_AS(stationary_perm_entry({1, 2, 3}, r), std::domain_error);
    CHECK_THROWS_AS(stationary_oracle(Matrix::identity(3), 1), std::domain_error);
}

}

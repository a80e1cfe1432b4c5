#pragma once

#include "qtsetlin/combinatorics.hpp"
#include "qtsetlin/exact.hpp"

#include <vector>

namespace qtsetlin {

struct PermRates {
    Scalar q;
    Vector x;  // x_1..x_n
};

struct WordRates {
    Scalar q;
    Composition m;
    Vector xbar;  // one rate per letter
};

void validate(const PermRates& r);
void validate(const WordRates& r);

// Rows index the state, columns the coefficient of each basis state in state*T_i.
Matrix hecke_generator_perm(int i, int n, const Scalar& q);
Matrix hecke_generator_word(int i, const Composition& m, const Scalar& q);

Matrix weight_op_perm(const PermRates& r);
Matrix weight_op_word(const WordRates& r);

// sum_{i=1}^{n} (T_{i-1} ... T_1) X, where gens = (T_1, ..., T_{n-1}).
Matrix tsetlin_sum(const std::vector<Matrix>& gens, const Matrix& weight);

Matrix transition_matrix_perm(const PermRates& r);
Matrix transition_matrix_word(const WordRates& r);

std::vector<Matrix> hecke_generators_perm(int n, const Scalar& q);
std::vector<Matrix> hecke_generators_word(const Composition& m, const Scalar& q);

struct HeckeCheck {
    bool quadratic = true;  // (T_i + 1)(T_i - q) = 0
    bool braid = true;      // T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}
    bool commuting = true;  // T_i T_j = T_j T_i for |i-j| > 1
    bool ok() const { return quadratic && braid && commuting; }
};

HeckeCheck check_hecke_relations(const std::vector<Matrix>& gens, const Scalar& q);

}  // namespace qtsetlin

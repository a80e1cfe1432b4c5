#pragma once

#include "qtsetlin/chains.hpp"
#include "qtsetlin/flags.hpp"

#include <vector>

namespace qtsetlin {

Scalar kappa_perm(std::vector<int> b, const PermRates& r);
Scalar kappa_word(std::vector<int> b, const WordRates& r);

// The individual numerator and denominator factors of the product formula.
struct FormulaFactors {
    Scalar prefactor;           // q^{-inv} (and the q-factorial weights for words)
    std::vector<Scalar> numer;  // k = 1..n-1
    std::vector<Scalar> denom;  // k = 1..n-1
    Scalar value() const;
};

FormulaFactors perm_formula_factors(const Permutation& pi, const PermRates& r);
FormulaFactors word_formula_factors(const Word& w, const WordRates& r);
// Factors k = 1..n, each f_k / (sum x - ...), so the value is their product.
std::vector<Scalar> flag_formula_factors(const Permutation& pi, const FlagRates& r);

Scalar stationary_perm_entry(const Permutation& pi, const PermRates& r);
Scalar stationary_word_entry(const Word& w, const WordRates& r);
Scalar stationary_flag_coset_value(const Permutation& pi, const FlagRates& r);

// Product formula over the lexicographic state order.
Vector stationary_perm_formula(const PermRates& r);
Vector stationary_word_formula(const WordRates& r);
Vector stationary_flags_formula(const FlagRates& r, const FlagSpace& space);
Vector stationary_flags_semigroup(const FlagRates& r, const FlagSpace& space);

// Left null vector of op - total*I, normalized to sum 1; throws unless it is unique.
Vector stationary_oracle(const Matrix& op, const Scalar& total);

Vector normalized(const Vector& v);
Scalar sum(const Vector& v);

}  // namespace qtsetlin

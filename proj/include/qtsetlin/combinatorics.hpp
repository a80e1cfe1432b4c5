#pragma once

#include "qtsetlin/exact.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qtsetlin {

// One-line notation, values 1..n.
using Permutation = std::vector<int>;
// Letters 1..l.
using Word = std::vector<int>;
// Positive parts (m_1, ..., m_l).
using Composition = std::vector<int>;
// Weak composition a with 0 <= a_i <= m_i: the top a_i elements of chain i.
using UpperSet = std::vector<int>;

bool is_permutation(const std::vector<int>& s);
void validate_composition(const Composition& m);
int total(const Composition& m);
// n_j = m_1 + ... + m_j, with n_0 = 0; returns (n_0, ..., n_l).
std::vector<int> partial_sums(const Composition& m);
// Letter content of a word over [l].
Composition content(const Word& w, int letters);

std::vector<Permutation> all_permutations(int n);
std::vector<Word> all_words(const Composition& m);
std::vector<std::vector<int>> all_compositions(int n);

int inv(const std::vector<int>& s);
int coinv(const std::vector<int>& s);
// Positions (1-based) of weak left-to-right minima; for permutations these are the strict ones.
std::vector<int> lrm_positions(const std::vector<int>& s);
// Smallest i < k with s_i < s_k (1-based), or 0 when none exists.
int p_index(const std::vector<int>& s, int k);

std::string seq_to_string(const std::vector<int>& s);
std::vector<int> seq_from_string(const std::string& text);

Permutation standardize(const Word& w);
Word destandardize(const Permutation& p, const Composition& m);
Permutation swap_positions(const std::vector<int>& s, int i);  // swaps 1-based i, i+1
Permutation compose_values(const Permutation& tau, const Permutation& sigma);  // tau o sigma
Permutation inverse(const Permutation& p);

Scalar q_int(int k, const Scalar& q);
Scalar q_factorial(int k, const Scalar& q);
std::uint64_t factorial(int k);
std::uint64_t derangement(int k);
Scalar q_derangement(int k, const Scalar& q);

std::vector<UpperSet> all_upper_sets(const Composition& m);
// Natural labelling of P_m minus the upper set; linear extensions as one-line sequences of labels.
std::vector<Permutation> linear_extensions(const Composition& m, const UpperSet& removed);
std::uint64_t poset_derangements(const Composition& m, const UpperSet& removed);

}  // namespace qtsetlin

#pragma once

#include "qtsetlin/chains.hpp"
#include "qtsetlin/flags.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qtsetlin {

enum class LabelKind { Subset, UpperSet };

struct EigenEntry {
    LabelKind kind;
    std::vector<int> label;  // subset in decreasing order, or the upper set a
    Scalar value;
    std::uint64_t predicted;

    std::string label_string() const;
};

std::vector<EigenEntry> eigen_catalog_perm(const PermRates& r);
std::vector<EigenEntry> eigen_catalog_word(const WordRates& r);
std::vector<EigenEntry> eigen_catalog_flags(const FlagRates& r);

// Entries with equal eigenvalue merged, multiplicities summed, in first-seen order.
struct MergedEigenvalue {
    Scalar value;
    std::uint64_t predicted;
    std::vector<std::string> labels;
};

std::vector<MergedEigenvalue> merge_catalog(const std::vector<EigenEntry>& catalog);

struct MultiplicityReport {
    std::string label;
    Scalar value;
    std::uint64_t predicted;
    std::uint64_t computed;
    bool pass;
};

struct SpectrumReport {
    std::vector<MultiplicityReport> entries;
    std::uint64_t predicted_total = 0;
    std::size_t dimension = 0;
    bool ok() const;
};

// Compares each merged multiplicity with nullity(op - lambda I).
SpectrumReport verify_multiplicities(const Matrix& op, const std::vector<EigenEntry>& catalog);
// True iff the product over distinct catalog values of (op - lambda I) vanishes.
bool verify_annihilation(const Matrix& op, const std::vector<EigenEntry>& catalog);

// Random rationals a/b with small a, b; eigenvalues of the catalog are pairwise distinct.
PermRates sample_generic_perm_rates(int n, const Scalar& q, std::mt19937_64& rng);
WordRates sample_generic_word_rates(const Composition& m, const Scalar& q, std::mt19937_64& rng);
FlagRates sample_generic_flag_rates(int n, int p, std::mt19937_64& rng);
Scalar sample_rational(std::mt19937_64& rng, int max_num = 9, int max_den = 9);

}  // namespace qtsetlin

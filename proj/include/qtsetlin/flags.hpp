#pragma once

#include "qtsetlin/combinatorics.hpp"
#include "qtsetlin/exact.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace qtsetlin {

// Column vectors over F_p, entries in [0, p).
using FpVector = std::vector<int>;

void validate_prime(int p);
int inverse_mod(int a, int p);

// Coset representative gB in canonical column form: every column's topmost
// nonzero entry is 1 and is the rightmost nonzero entry of its row.
struct FlagRep {
    int n = 0;
    int p = 2;
    std::vector<FpVector> cols;

    int at(int row, int col) const { return cols[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)]; }
    friend bool operator==(const FlagRep&, const FlagRep&) = default;
};

// Chain of subspaces V_1 < ... < V_k stored as an adapted basis in the same canonical form.
struct PartialFlag {
    int n = 0;
    int p = 2;
    std::vector<FpVector> cols;

    std::size_t length() const { return cols.size(); }
    friend bool operator==(const PartialFlag&, const PartialFlag&) = default;
};

// The line spanned by e_lead + sum_{k > lead} tail_k e_k.
struct Line {
    int lead = 1;
    FpVector tail;  // coefficients for rows lead+1..n

    FpVector vector(int n) const;
    friend bool operator==(const Line&, const Line&) = default;
};

struct FlagRates {
    int p = 2;
    Vector x;  // x_1..x_n
};

void validate(const FlagRates& r);

// Column reduction that keeps prefix spans; dependent columns are dropped.
std::vector<FpVector> reduce_columns(const std::vector<FpVector>& cols, int p);

FlagRep canonicalize_coset(const FlagRep& g);
Permutation coset_to_perm(const FlagRep& f);
int line_lead(const FlagRep& f);

std::vector<FlagRep> coset_members(const Permutation& pi, int p);
std::vector<FlagRep> enumerate_flags(int n, int p);
std::vector<Line> enumerate_lines(int n, int p);

FlagRep insert_line(const FlagRep& f, const Line& l);
Scalar line_weight(const Line& l, const FlagRates& r);

std::string to_string(const FlagRep& f);
FlagRep parse_flag(const std::string& text, int p);

class FlagSpace {
public:
    FlagSpace(int n, int p);

    int n() const { return n_; }
    int p() const { return p_; }
    const std::vector<FlagRep>& states() const { return states_; }
    std::size_t size() const { return states_.size(); }
    std::size_t index(const FlagRep& f) const;

private:
    int n_, p_;
    std::vector<FlagRep> states_;
    std::unordered_map<std::string, std::size_t> index_;
};

Matrix hecke_generator_coset(int i, const FlagSpace& space);
std::vector<Matrix> hecke_generators_coset(const FlagSpace& space);
Matrix weight_op_flags(const FlagRates& r, const FlagSpace& space);

// Direct line-insertion construction.
Matrix transition_matrix_flags(const FlagRates& r, const FlagSpace& space);
// The same chain assembled from the coset Hecke action.
Matrix transition_matrix_flags_hecke(const FlagRates& r, const FlagSpace& space);

PartialFlag partial_flag_from_vectors(const std::vector<FpVector>& vs, int n, int p);
PartialFlag lrb_product(const PartialFlag& a, const PartialFlag& b);
// Dimension of the span of the vectors over F_p.
int fp_rank(const std::vector<FpVector>& vs, int p);

// Stationary probability of F from paths in the right Cayley graph of the line semigroup.
Scalar rcayley_stationary(const FlagRates& r, const FlagRep& f);

}  // namespace qtsetlin

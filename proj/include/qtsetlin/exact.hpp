#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qtsetlin {

// Canonical rational: gmp keeps numerator/denominator reduced with positive
// denominator after every arithmetic operation.
using Scalar = mpq_class;

Scalar make_scalar(long num, long den = 1);
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& x);
std::vector<Scalar> parse_scalar_list(std::string_view text);

// q^k for any integer k; q must be nonzero when k < 0.
Scalar power(const Scalar& q, int k);

using Vector = std::vector<Scalar>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const Vector& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const;
    bool is_zero() const;
    std::size_t nonzeros() const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    Matrix& operator+=(const Matrix& other);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

// Product that skips zero entries of the left factor; transition matrices are sparse.
Matrix mat_mul(const Matrix& a, const Matrix& b);
Vector vec_mat(const Vector& v, const Matrix& m);
Matrix shift(const Matrix& m, const Scalar& lambda);  // m - lambda*I

struct RankNullity {
    std::size_t rank;
    std::size_t nullity;  // cols - rank
};

// Fraction-free (Bareiss) elimination on an integer-scaled copy.
RankNullity rank_nullity(const Matrix& m);

// Basis of {v : v*m = 0}; each vector has a 1 at its own free coordinate.
std::vector<Vector> left_null_space(const Matrix& m);

}  // namespace qtsetlin

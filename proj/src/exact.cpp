#include "qtsetlin/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtsetlin {

Scalar make_scalar(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Scalar x(num, den);
    x.canonicalize();
    return x;
}

Scalar parse_scalar(std::string_view text) {
    std::string s(text);
    auto strip = [](std::string& t) {
        auto b = t.find_first_not_of(" \t");
        auto e = t.find_last_not_of(" \t");
        t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    strip(s);
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto valid_int = [](const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i >= t.size()) return false;
        return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("malformed rational: " + s);
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw std::domain_error("zero denominator: " + s);
    Scalar x(n, d);
    x.canonicalize();
    return x;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

std::vector<Scalar> parse_scalar_list(std::string_view text) {
    std::vector<Scalar> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        out.push_back(parse_scalar(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

Scalar power(const Scalar& q, int k) {
    if (k < 0) {
        if (q == 0) throw std::domain_error("negative power of zero");
        return power(Scalar(1) / q, -k);
    }
    Scalar r = 1, b = q;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const Vector& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

std::size_t Matrix::nonzeros() const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) != 0; }));
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    r += b;
    return r;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (sgn(other.data_[i]) != 0) data_[i] += other.data_[i];
    return *this;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i)
        if (sgn(b.data_[i]) != 0) r.data_[i] -= b.data_[i];
    return r;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_)
        if (sgn(x) != 0) x *= s;
    return r;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in mat_mul");
    Matrix c(a.rows(), b.cols());
    // column indices of nonzeros per row of b
    std::vector<std::vector<std::size_t>> bnz(b.rows());
    for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (sgn(b(k, j)) != 0) bnz[k].push_back(j);
    Scalar t;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j : bnz[k]) {
                t = aik * b(k, j);
                c(i, j) += t;
            }
        }
    return c;
}

Vector vec_mat(const Vector& v, const Matrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("shape mismatch in vec_mat");
    Vector r(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (sgn(v[i]) == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0) r[j] += v[i] * m(i, j);
    }
    return r;
}

Matrix shift(const Matrix& m, const Scalar& lambda) {
    if (m.rows() != m.cols()) throw std::invalid_argument("shift needs a square matrix");
    Matrix r = m;
    for (std::size_t i = 0; i < m.rows(); ++i) r(i, i) -= lambda;
    return r;
}

RankNullity rank_nullity(const Matrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
    for (std::size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t piv = rank;
        while (piv < R && a[piv][col] == 0) ++piv;
        if (piv == R) continue;
        std::swap(a[piv], a[rank]);
        const mpz_class p = a[rank][col];
        for (std::size_t i = rank + 1; i < R; ++i) {
            for (std::size_t j = col + 1; j < C; ++j) {
                a[i][j] = a[i][j] * p - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return {rank, C - rank};
}

std::vector<Vector> left_null_space(const Matrix& m) {
    // null space of m^T by sparse Gauss-Jordan on its rows
    const std::size_t R = m.cols(), C = m.rows();
    using Entry = std::pair<std::size_t, Scalar>;
    std::vector<std::vector<Entry>> rows(R);
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j)
            if (sgn(m(j, i)) != 0) rows[i].emplace_back(j, m(j, i));

    auto lookup = [](const std::vector<Entry>& row, std::size_t col) -> const Scalar* {
        auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const Entry& e, std::size_t c) { return e.first < c; });
        return it != row.end() && it->first == col ? &it->second : nullptr;
    };
    // row - f * piv, both sorted by column
    auto axpy = [](const std::vector<Entry>& row, const Scalar& f, const std::vector<Entry>& piv) {
        std::vector<Entry> out;
        out.reserve(row.size() + piv.size());
        std::size_t i = 0, k = 0;
        while (i < row.size() || k < piv.size()) {
            if (k == piv.size() || (i < row.size() && row[i].first < piv[k].first)) {
                out.push_back(row[i++]);
            } else if (i == row.size() || piv[k].first < row[i].first) {
                out.emplace_back(piv[k].first, -f * piv[k].second);
                ++k;
            } else {
                Scalar v = row[i].second - f * piv[k].second;
                if (sgn(v) != 0) out.emplace_back(row[i].first, std::move(v));
                ++i, ++k;
            }
        }
        return out;
    };

    std::vector<bool> used(R, false);
    std::vector<long> pivot_row_of_col(C, -1);
    for (std::size_t col = 0; col < C; ++col) {
        long best = -1;
        for (std::size_t i = 0; i < R; ++i)
            if (!used[i] && lookup(rows[i], col) &&
                (best < 0 || rows[i].size() < rows[static_cast<std::size_t>(best)].size()))
                best = static_cast<long>(i);
        if (best < 0) continue;
        auto& prow = rows[static_cast<std::size_t>(best)];
        Scalar inv = 1 / *lookup(prow, col);
        for (auto& e : prow) e.second *= inv;
        used[static_cast<std::size_t>(best)] = true;
        pivot_row_of_col[col] = best;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == static_cast<std::size_t>(best)) continue;
            const Scalar* f = lookup(rows[i], col);
            if (!f) continue;
            Scalar fv = *f;
            rows[i] = axpy(rows[i], fv, prow);
        }
    }

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < C; ++free) {
        if (pivot_row_of_col[free] >= 0) continue;
        Vector v(C);
        v[free] = 1;
        for (std::size_t col = 0; col < C; ++col) {
            long r = pivot_row_of_col[col];
            if (r < 0) continue;
            if (const Scalar* x = lookup(rows[static_cast<std::size_t>(r)], free)) v[col] = -*x;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qtsetlin

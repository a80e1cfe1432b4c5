#include "qtsetlin/flags.hpp"

#include "qtsetlin/chains.hpp"

#include <sstream>
#include <stdexcept>

namespace qtsetlin {

void validate_prime(int p) {
    if (p < 2) throw std::invalid_argument("p must be prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("p must be prime");
}

int inverse_mod(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    for (int b = 1; b < p; ++b)
        if (a * b % p == 1) return b;
    throw std::domain_error("no inverse mod p");
}

void validate(const FlagRates& r) {
    validate_prime(r.p);
    if (r.x.empty()) throw std::invalid_argument("rates must be nonempty");
}

FpVector Line::vector(int n) const {
    FpVector v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(lead - 1)] = 1;
    for (std::size_t k = 0; k < tail.size(); ++k) v[static_cast<std::size_t>(lead) + k] = tail[k];
    return v;
}

std::vector<FpVector> reduce_columns(const std::vector<FpVector>& cols, int p) {
    std::vector<FpVector> out;
    std::vector<std::size_t> piv;
    for (const auto& c : cols) {
        FpVector v = c;
        for (auto& e : v) e = ((e % p) + p) % p;
        for (std::size_t k = 0; k < out.size(); ++k) {
            int f = v[piv[k]];
            if (!f) continue;
            for (std::size_t r = 0; r < v.size(); ++r) v[r] = ((v[r] - f * out[k][r]) % p + p) % p;
        }
        std::size_t r = 0;
        while (r < v.size() && v[r] == 0) ++r;
        if (r == v.size()) continue;
        int s = inverse_mod(v[r], p);
        for (auto& e : v) e = e * s % p;
        out.push_back(std::move(v));
        piv.push_back(r);
    }
    return out;
}

FlagRep canonicalize_coset(const FlagRep& g) {
    validate_prime(g.p);
    auto cols = reduce_columns(g.cols, g.p);
    if (static_cast<int>(cols.size()) != g.n) throw std::invalid_argument("matrix is not invertible");
    return {g.n, g.p, std::move(cols)};
}

Permutation coset_to_perm(const FlagRep& f) {
    Permutation pi;
    for (const auto& c : f.cols) {
        std::size_t r = 0;
        while (r < c.size() && c[r] == 0) ++r;
        pi.push_back(static_cast<int>(r) + 1);
    }
    return pi;
}

int line_lead(const FlagRep& f) { return coset_to_perm(f).front(); }

std::vector<FlagRep> coset_members(const Permutation& pi, int p) {
    validate_prime(p);
    const int n = static_cast<int>(pi.size());
    if (!is_permutation(pi)) throw std::invalid_argument("not a permutation");
    auto pinv = inverse(pi);
    std::vector<std::pair<int, int>> free;  // (row, col), 0-based, column-major
    for (int j = 0; j < n; ++j)
        for (int r = pi[static_cast<std::size_t>(j)]; r < n; ++r)
            if (pinv[static_cast<std::size_t>(r)] - 1 > j) free.emplace_back(r, j);
    FlagRep base{n, p, std::vector<FpVector>(static_cast<std::size_t>(n), FpVector(static_cast<std::size_t>(n), 0))};
    for (int j = 0; j < n; ++j) base.cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(pi[static_cast<std::size_t>(j)] - 1)] = 1;
    std::vector<FlagRep> out;
    std::vector<int> digits(free.size(), 0);
    while (true) {
        FlagRep f = base;
        for (std::size_t k = 0; k < free.size(); ++k)
            f.cols[static_cast<std::size_t>(free[k].second)][static_cast<std::size_t>(free[k].first)] = digits[k];
        out.push_back(std::move(f));
        std::size_t k = digits.size();
        while (k > 0 && digits[k - 1] == p - 1) digits[--k] = 0;
        if (k == 0) break;
        ++digits[k - 1];
    }
    return out;
}

std::vector<FlagRep> enumerate_flags(int n, int p) {
    std::vector<FlagRep> out;
    for (const auto& pi : all_permutations(n)) {
        auto block = coset_members(pi, p);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::vector<Line> enumerate_lines(int n, int p) {
    validate_prime(p);
    std::vector<Line> out;
    for (int lead = 1; lead <= n; ++lead) {
        FpVector tail(static_cast<std::size_t>(n - lead), 0);
        while (true) {
            out.push_back({lead, tail});
            std::size_t k = tail.size();
            while (k > 0 && tail[k - 1] == p - 1) tail[--k] = 0;
            if (k == 0) break;
            ++tail[k - 1];
        }
    }
    return out;
}

FlagRep insert_line(const FlagRep& f, const Line& l) {
    std::vector<FpVector> cols;
    cols.push_back(l.vector(f.n));
    cols.insert(cols.end(), f.cols.begin(), f.cols.end());
    auto red = reduce_columns(cols, f.p);
    if (static_cast<int>(red.size()) != f.n) throw std::logic_error("line insertion lost rank");
    return {f.n, f.p, std::move(red)};
}

Scalar line_weight(const Line& l, const FlagRates& r) {
    const int n = static_cast<int>(r.x.size());
    return r.x[static_cast<std::size_t>(l.lead - 1)] / power(Scalar(r.p), n - l.lead);
}

std::string to_string(const FlagRep& f) {
    std::string s;
    for (int r = 0; r < f.n; ++r) {
        if (r) s += '|';
        for (int c = 0; c < static_cast<int>(f.cols.size()); ++c) {
            if (f.p > 10 && c) s += ',';
            s += std::to_string(f.at(r, c));
        }
    }
    return s;
}

FlagRep parse_flag(const std::string& text, int p) {
    validate_prime(p);
    std::vector<std::vector<int>> rows;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, '|')) rows.push_back(seq_from_string(part));
    const int n = static_cast<int>(rows.size());
    FlagRep f{n, p, std::vector<FpVector>(static_cast<std::size_t>(n), FpVector(static_cast<std::size_t>(n), 0))};
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != n) throw std::invalid_argument("flag must be square");
        for (int c = 0; c < n; ++c) {
            int v = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (v < 0 || v >= p) throw std::invalid_argument("flag entry out of range");
            f.cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = v;
        }
    }
    if (!(canonicalize_coset(f) == f)) throw std::invalid_argument("flag is not in canonical form: " + text);
    return f;
}

FlagSpace::FlagSpace(int n, int p) : n_(n), p_(p), states_(enumerate_flags(n, p)) {
    for (std::size_t k = 0; k < states_.size(); ++k) index_[to_string(states_[k])] = k;
}

std::size_t FlagSpace::index(const FlagRep& f) const {
    auto it = index_.find(to_string(f));
    if (it == index_.end()) throw std::invalid_argument("flag not in state space");
    return it->second;
}

Matrix hecke_generator_coset(int i, const FlagSpace& space) {
    const int n = space.n(), p = space.p();
    if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
    const auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(i);
    Matrix t(space.size(), space.size());
    for (std::size_t k = 0; k < space.size(); ++k) {
        const FlagRep& f = space.states()[k];
        FlagRep g = f;
        std::swap(g.cols[a], g.cols[b]);
        t(k, space.index(canonicalize_coset(g))) += 1;
        for (int s = 1; s < p; ++s) {
            FlagRep h = f;
            for (int r = 0; r < n; ++r)
                h.cols[a][static_cast<std::size_t>(r)] = (f.cols[a][static_cast<std::size_t>(r)] + s * f.cols[b][static_cast<std::size_t>(r)]) % p;
            t(k, space.index(canonicalize_coset(h))) += 1;
        }
    }
    return t;
}

std::vector<Matrix> hecke_generators_coset(const FlagSpace& space) {
    std::vector<Matrix> g;
    for (int i = 1; i < space.n(); ++i) g.push_back(hecke_generator_coset(i, space));
    return g;
}

Matrix weight_op_flags(const FlagRates& r, const FlagSpace& space) {
    validate(r);
    if (static_cast<int>(r.x.size()) != space.n() || r.p != space.p()) throw std::invalid_argument("rates do not match flag space");
    Vector d;
    for (const auto& f : space.states()) {
        int lead = line_lead(f);
        d.push_back(r.x[static_cast<std::size_t>(lead - 1)] / power(Scalar(r.p), space.n() - lead));
    }
    return Matrix::diagonal(d);
}

Matrix transition_matrix_flags(const FlagRates& r, const FlagSpace& space) {
    validate(r);
    if (static_cast<int>(r.x.size()) != space.n() || r.p != space.p()) throw std::invalid_argument("rates do not match flag space");
    auto lines = enumerate_lines(space.n(), space.p());
    std::vector<Scalar> w;
    for (const auto& l : lines) w.push_back(line_weight(l, r));
    Matrix t(space.size(), space.size());
    for (std::size_t k = 0; k < space.size(); ++k)
        for (std::size_t j = 0; j < lines.size(); ++j)
            t(k, space.index(insert_line(space.states()[k], lines[j]))) += w[j];
    return t;
}

Matrix transition_matrix_flags_hecke(const FlagRates& r, const FlagSpace& space) {
    return tsetlin_sum(hecke_generators_coset(space), weight_op_flags(r, space));
}

PartialFlag partial_flag_from_vectors(const std::vector<FpVector>& vs, int n, int p) {
    validate_prime(p);
    for (const auto& v : vs)
        if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector length mismatch");
    return {n, p, reduce_columns(vs, p)};
}

PartialFlag lrb_product(const PartialFlag& a, const PartialFlag& b) {
    if (a.n != b.n || a.p != b.p) throw std::invalid_argument("partial flags over different spaces");
    std::vector<FpVector> cols = a.cols;
    cols.insert(cols.end(), b.cols.begin(), b.cols.end());
    return {a.n, a.p, reduce_columns(cols, a.p)};
}

int fp_rank(const std::vector<FpVector>& vs, int p) {
    return static_cast<int>(reduce_columns(vs, p).size());
}

Scalar rcayley_stationary(const FlagRates& r, const FlagRep& f) {
    validate(r);
    const int n = f.n;
    Scalar total = 0;
    for (const auto& x : r.x) total += x;
    if (total == 0) throw std::domain_error("total rate is zero");
    auto lines = enumerate_lines(n, f.p);
    std::vector<Scalar> y;
    for (const auto& l : lines) y.push_back(line_weight(l, r) / total);
    // dim V_k of each line's smallest containing prefix
    std::vector<int> level;
    for (const auto& l : lines) {
        auto v = l.vector(n);
        int k = 1;
        while (true) {
            std::vector<FpVector> span(f.cols.begin(), f.cols.begin() + k);
            span.push_back(v);
            if (fp_rank(span, f.p) == k) break;
            ++k;
        }
        level.push_back(k);
    }
    Scalar num = 1, den = 1;
    for (int k = 1; k <= n; ++k) {
        Scalar step = 0, stab = 0;
        for (std::size_t j = 0; j < lines.size(); ++j) {
            if (level[j] == k) step += y[j];
            if (level[j] <= k) stab += y[j];
        }
        num *= step;
        if (k < n) den *= 1 - stab;
    }
    if (den == 0) throw std::domain_error("stabilizer weight equals one");
    return num / den;
}

}  // namespace qtsetlin

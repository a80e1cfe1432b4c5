#include "qtsetlin/flags.hpp"

#include "qtsetlin/chains.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace qtsetlin;

namespace {

FlagRep from_rows(const std::vector<std::vector<int>>& rows, int p) {
    const int n = static_cast<int>(rows.size());
    const int k = static_cast<int>(rows[0].size());
    FlagRep f{n, p, std::vector<FpVector>(static_cast<std::size_t>(k), FpVector(static_cast<std::size_t>(n)))};
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < k; ++c) f.cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return f;
}

// Expands a block pattern; 'a', 'b', 'c' range over F_p.
std::set<std::string> expand(const std::vector<std::string>& pattern, int p) {
    std::set<std::string> out;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c) {
                std::string s;
                for (std::size_t r = 0; r < pattern.size(); ++r) {
                    if (r) s += '|';
                    for (char ch : pattern[r]) s += ch == 'a' ? char('0' + a) : ch == 'b' ? char('0' + b) : ch == 'c' ? char('0' + c) : ch;
                }
                out.insert(s);
            }
    return out;
}

std::set<std::string> block(const Permutation& pi, int p) {
    std::set<std::string> out;
    for (const auto& f : coset_members(pi, p)) out.insert(to_string(f));
    return out;
}

}  // namespace

TEST_SUITE("flags") {

TEST_CASE("flag and line counts") {
    CHECK(enumerate_flags(2, 2).size() == 3);
    CHECK(enumerate_flags(3, 2).size() == 21);
    CHECK(enumerate_flags(3, 3).size() == 52);
    CHECK(enumerate_flags(4, 2).size() == 315);
    CHECK(enumerate_lines(3, 2).size() == 7);
    CHECK(enumerate_lines(3, 3).size() == 13);
    for (int p : {2, 3})
        for (const auto& pi : all_permutations(3)) {
            std::size_t expected = 1;
            for (int k = 0; k < coinv(pi); ++k) expected *= static_cast<std::size_t>(p);
            CHECK(coset_members(pi, p).size() == expected);
        }
}

TEST_CASE("double coset blocks for n = 3 match the reference representatives") {
    for (int p : {2, 3}) {
        CHECK(block({1, 2, 3}, p) == expand({"100", "a10", "bc1"}, p));
        CHECK(block({2, 1, 3}, p) == expand({"010", "100", "ab1"}, p));
        CHECK(block({1, 3, 2}, p) == expand({"100", "a01", "b10"}, p));
        CHECK(block({3, 1, 2}, p) == expand({"010", "0a1", "100"}, p));
        CHECK(block({2, 3, 1}, p) == expand({"001", "100", "a10"}, p));
        CHECK(block({3, 2, 1}, p) == expand({"001", "010", "100"}, p));
    }
}

TEST_CASE("canonical representatives are fixed and B-invariant") {
    std::mt19937 rng(11);
    for (int p : {2, 3, 5}) {
        std::uniform_int_distribution<int> e(0, p - 1), unit(1, p - 1);
        const int n = 3;
        auto flags = enumerate_flags(n, p);
        std::set<std::string> keys;
        for (const auto& f : flags) {
            CHECK(canonicalize_coset(f) == f);
            keys.insert(to_string(f));
            // right multiplication by a random invertible upper triangular matrix
            FlagRep g = f;
            for (int j = 0; j < n; ++j) {
                auto jj = static_cast<std::size_t>(j);
                int d = unit(rng);
                for (int r = 0; r < n; ++r) g.cols[jj][static_cast<std::size_t>(r)] = f.cols[jj][static_cast<std::size_t>(r)] * d % p;
                for (int k = 0; k < j; ++k) {
                    int c = e(rng);
                    for (int r = 0; r < n; ++r)
                        g.cols[jj][static_cast<std::size_t>(r)] = (g.cols[jj][static_cast<std::size_t>(r)] + c * f.cols[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)]) % p;
                }
            }
            CHECK(canonicalize_coset(g) == f);
        }
        CHECK(keys.size() == flags.size());
    }
}

TEST_CASE("coset_to_perm reads the pivot rows") {
    CHECK(coset_to_perm(parse_flag("010|011|100", 2)) == Permutation{3, 1, 2});
    CHECK(coset_to_perm(parse_flag("100|110|011", 3)) == Permutation{1, 2, 3});
    CHECK_THROWS(parse_flag("110|010|001", 2));
    CHECK_THROWS(parse_flag("100|010", 2));
    CHECK(to_string(parse_flag("001|100|110", 2)) == "001|100|110");
}

TEST_CASE("line insertion example over F_3") {
    FlagRep f = from_rows({{0, 1, 0}, {1, 0, 0}, {1, 2, 1}}, 3);
    Line l{1, {1, 0}};
    FlagRep g = insert_line(f, l);
    CHECK(to_string(g) == "100|110|011");
    FlagRates r{3, {make_scalar(1, 2), make_scalar(1, 3), make_scalar(1, 6)}};
    CHECK(line_weight(l, r) == make_scalar(1, 18));
}

TEST_CASE("the n = 2, p = 2 chain adds each of the three lines") {
    FlagSpace s(2, 2);
    FlagRates r{2, {make_scalar(1, 3), make_scalar(2, 3)}};
    Matrix t = transition_matrix_flags(r, s);
    // e1 first: (10|01), (10|11), (01|10)
    CHECK(to_string(s.states()[0]) == "10|01");
    CHECK(t(0, 0) == make_scalar(1, 6));
    CHECK(t(0, 1) == make_scalar(1, 6));
    CHECK(t(0, 2) == make_scalar(2, 3));
}

TEST_CASE("coset Hecke generators satisfy the Hecke relations") {
    for (int p : {2, 3}) {
        FlagSpace s(3, p);
        CHECK(check_hecke_relations(hecke_generators_coset(s), Scalar(p)).ok());
    }
    FlagSpace s4(4, 2);
    CHECK(check_hecke_relations(hecke_generators_coset(s4), 2).ok());
}

TEST_CASE("left multiplication by lower triangular matrices commutes with T_i") {
    std::mt19937 rng(5);
    const int p = 3, n = 3;
    FlagSpace s(n, p);
    std::uniform_int_distribution<int> e(0, p - 1), unit(1, p - 1);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<std::vector<int>> h(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) {
            h[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = unit(rng);
            for (int j = 0; j < i; ++j) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e(rng);
        }
        auto left = [&](const FlagRep& f) {
            FlagRep g = f;
            for (std::size_t c = 0; c < f.cols.size(); ++c)
                for (int i = 0; i < n; ++i) {
                    int v = 0;
                    for (int k = 0; k < n; ++k) v += h[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * f.cols[c][static_cast<std::size_t>(k)];
                    g.cols[c][static_cast<std::size_t>(i)] = v % p;
                }
            return canonicalize_coset(g);
        };
        Matrix hm(s.size(), s.size());
        for (std::size_t k = 0; k < s.size(); ++k) hm(k, s.index(left(s.states()[k]))) = 1;
        for (const auto& t : hecke_generators_coset(s)) CHECK(mat_mul(hm, t) == mat_mul(t, hm));
    }
}

TEST_CASE("left regular band product on partial flags") {
    const int n = 4, p = 2;
    FpVector e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, e3{0, 0, 1, 0}, e12{1, 1, 0, 0};
    PartialFlag v = partial_flag_from_vectors({e12, e2}, n, p);
    PartialFlag w = partial_flag_from_vectors({e2, e3}, n, p);
    PartialFlag vw = lrb_product(v, w);
    PartialFlag wv = lrb_product(w, v);
    REQUIRE(vw.length() == 3);
    REQUIRE(wv.length() == 3);
    // V.W = (<e1+e2>, <e1+e2, e2>, <e3, e1+e2, e2>)
    auto prefix_span_is = [&](const PartialFlag& f, int k, std::vector<FpVector> gens) {
        std::vector<FpVector> pre(f.cols.begin(), f.cols.begin() + k);
        int d = fp_rank(gens, p);
        std::vector<FpVector> both = pre;
        both.insert(both.end(), gens.begin(), gens.end());
        return fp_rank(pre, p) == k && d == k && fp_rank(both, p) == k;
    };
    CHECK(prefix_span_is(vw, 1, {e12}));
    CHECK(prefix_span_is(vw, 2, {e12, e2}));
    CHECK(prefix_span_is(vw, 3, {e3, e12, e2}));
    // W.V = (<e2>, <e2, e3>, <e1+e2, e2, e3>)
    CHECK(prefix_span_is(wv, 1, {e2}));
    CHECK(prefix_span_is(wv, 2, {e2, e3}));
    CHECK(prefix_span_is(wv, 3, {e1, e2, e3}));
    CHECK_FALSE(vw == wv);
    PartialFlag empty{n, p, {}};
    CHECK(lrb_product(empty, v) == v);
    CHECK(lrb_product(v, empty) == v);
    CHECK(lrb_product(v, v) == v);
    CHECK(lrb_product(lrb_product(v, w), v) == vw);
}

TEST_CASE("right Cayley path formula for F_132 at p = 2") {
    FlagRates r{2, {make_scalar(1, 2), make_scalar(1, 3), make_scalar(1, 6)}};
    Scalar y1 = r.x[0] / 4, y3 = r.x[2];
    // the representative with no free entries set
    FlagRep f = coset_members({1, 3, 2}, 2).front();
    CHECK(rcayley_stationary(r, f) == y1 * (y3 + y1) / (1 - y1));
    FlagRep top = coset_members({3, 2, 1}, 2).front();
    CHECK(rcayley_stationary(r, top) == r.x[1] * r.x[2] / (r.x[0] + r.x[1]));
}

TEST_CASE("configuration errors") {
    CHECK_THROWS(enumerate_flags(3, 4));
    CHECK_THROWS(FlagSpace(2, 1));
    FlagSpace s(2, 2);
    CHECK_THROWS(transition_matrix_flags({2, {1, 1, 1}}, s));
    CHECK_THROWS(canonicalize_coset(from_rows({{1, 1}, {1, 1}}, 2)));
}

}

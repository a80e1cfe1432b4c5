#include "qtsetlin/suite.hpp"

#include "qtsetlin/lumping.hpp"
#include "qtsetlin/spectra.hpp"
#include "qtsetlin/stationary.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qtsetlin {

namespace {

std::string comp_string(const Composition& m) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << ')';
    return os.str();
}

std::string spectrum_detail(const SpectrumReport& rep) {
    std::ostringstream os;
    for (const auto& e : rep.entries)
        if (!e.pass) os << e.label << " predicted " << e.predicted << " computed " << e.computed << "; ";
    if (rep.predicted_total != rep.dimension)
        os << "multiplicities sum to " << rep.predicted_total << " for dimension " << rep.dimension;
    return os.str();
}

bool row_sums_equal(const Matrix& t, const Scalar& s) {
    for (std::size_t i = 0; i < t.rows(); ++i) {
        Scalar r = 0;
        for (std::size_t j = 0; j < t.cols(); ++j) r += t(i, j);
        if (r != s) return false;
    }
    return true;
}

bool is_left_eigenvector(const Vector& v, const Matrix& t, const Scalar& s) {
    Vector w = vec_mat(v, t);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (w[i] != s * v[i]) return false;
    return true;
}

std::vector<Composition> compositions_up_to(int n_max) {
    std::vector<Composition> out;
    for (int n = 2; n <= n_max; ++n)
        for (auto& c : all_compositions(n)) out.push_back(c);
    return out;
}

}  // namespace

std::size_t flag_space_size(int n, int p) {
    Scalar f = q_factorial(n, Scalar(p));
    return f.get_num().get_ui();
}

Scalar classical_tsetlin_entry(const Permutation& pi, const Vector& x) {
    Scalar v = 1;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        Scalar tail = 0;
        for (std::size_t j = i; j < pi.size(); ++j) tail += x[static_cast<std::size_t>(pi[j] - 1)];
        v *= x[static_cast<std::size_t>(pi[i] - 1)] / tail;
    }
    return v;
}

std::vector<CheckResult> check_perm_chain(int n, const Scalar& q, std::mt19937_64& rng) {
    std::string tag = "perm n=" + std::to_string(n) + " q=" + to_string(q);
    PermRates r = sample_generic_perm_rates(n, q, rng);
    Matrix t = transition_matrix_perm(r);
    Vector f = stationary_perm_formula(r);
    std::vector<CheckResult> out;
    out.push_back({tag + ": stationary formula is a left eigenvector",
                   is_left_eigenvector(f, t, sum(r.x)) && sum(f) == 1, ""});
    out.push_back({tag + ": stationary formula = null-space oracle", f == stationary_oracle(t, sum(r.x)), ""});
    auto catalog = eigen_catalog_perm(r);
    auto rep = verify_multiplicities(t, catalog);
    out.push_back({tag + ": eigenvalue multiplicities", rep.ok(), spectrum_detail(rep)});
    out.push_back({tag + ": catalog annihilates the transition matrix", verify_annihilation(t, catalog), ""});
    return out;
}

std::vector<CheckResult> check_word_chain(const Composition& m, const Scalar& q, std::mt19937_64& rng) {
    std::string tag = "word m=" + comp_string(m) + " q=" + to_string(q);
    WordRates r = sample_generic_word_rates(m, q, rng);
    Matrix t = transition_matrix_word(r);
    Vector f = stationary_word_formula(r);
    std::vector<CheckResult> out;
    out.push_back({tag + ": stationary formula is a left eigenvector",
                   is_left_eigenvector(f, t, sum(r.xbar)) && sum(f) == 1, ""});
    out.push_back({tag + ": stationary formula = null-space oracle", f == stationary_oracle(t, sum(r.xbar)), ""});
    auto catalog = eigen_catalog_word(r);
    auto rep = verify_multiplicities(t, catalog);
    out.push_back({tag + ": eigenvalue multiplicities", rep.ok(), spectrum_detail(rep)});
    out.push_back({tag + ": catalog annihilates the transition matrix", verify_annihilation(t, catalog), ""});
    return out;
}

std::vector<CheckResult> check_flag_chain(int n, int p, std::mt19937_64& rng, bool spectrum) {
    std::string tag = "flag n=" + std::to_string(n) + " p=" + std::to_string(p);
    FlagRates r = sample_generic_flag_rates(n, p, rng);
    FlagSpace space(n, p);
    Matrix t = transition_matrix_flags(r, space);
    std::vector<CheckResult> out;
    out.push_back({tag + ": line insertion = coset Hecke construction", t == transition_matrix_flags_hecke(r, space), ""});
    Vector f = stationary_flags_formula(r, space);
    Vector o = stationary_oracle(t, sum(r.x));
    Vector s = stationary_flags_semigroup(r, space);
    out.push_back({tag + ": stationary formula = null-space oracle", f == o, ""});
    out.push_back({tag + ": right Cayley paths = null-space oracle", s == o, ""});
    bool last_is_one = true;
    for (const auto& pi : all_permutations(n))
        if (flag_formula_factors(pi, r).back() != 1) last_is_one = false;
    out.push_back({tag + ": last formula factor equals 1", last_is_one, ""});
    if (spectrum) {
        auto catalog = eigen_catalog_flags(r);
        auto rep = verify_multiplicities(t, catalog);
        out.push_back({tag + ": eigenvalue multiplicities", rep.ok(), spectrum_detail(rep)});
        out.push_back({tag + ": catalog annihilates the transition matrix", verify_annihilation(t, catalog), ""});
    }
    return out;
}

std::vector<CheckResult> check_flag_lumping(int n, int p, std::mt19937_64& rng) {
    std::string tag = "lumping flags->perms n=" + std::to_string(n) + " p=" + std::to_string(p);
    FlagRates r = sample_generic_flag_rates(n, p, rng);
    std::vector<CheckResult> out;
    for (Diagram d : {Diagram::FlagsPermsProjection, Diagram::FlagsPermsInclusion})
        out.push_back({tag + ": " + diagram_name(d), check_commuting(d, r), ""});
    FlagSpace space(n, p);
    PermRates pr{Scalar(p), r.x};
    Vector pf = stationary_perm_formula(pr);
    Vector ff = stationary_flags_formula(r, space);
    Vector lumped = vec_mat(ff, proj_flags_to_perms(space));
    out.push_back({tag + ": projected flag stationary = perm stationary", lumped == pf, ""});
    bool bridge = true;
    auto perms = all_permutations(n);
    for (std::size_t k = 0; k < perms.size(); ++k)
        if (pf[k] != power(Scalar(p), coinv(perms[k])) * stationary_flag_coset_value(perms[k], r)) bridge = false;
    out.push_back({tag + ": perm stationary = q^coinv * coset value", bridge, ""});
    return out;
}

std::vector<CheckResult> check_word_lumping(const Composition& m, const Scalar& q, std::mt19937_64& rng) {
    std::string tag = "lumping perms->words m=" + comp_string(m) + " q=" + to_string(q);
    WordRates r = sample_generic_word_rates(m, q, rng);
    PermRates pr = map_rates_word_to_perm(r);
    std::vector<CheckResult> out;
    bool compat = is_m_compatible(pr, m);
    out.push_back({tag + ": rate maps are compatible and inverse",
                   compat && map_rates_perm_to_word(pr, m).xbar == r.xbar, ""});
    for (Diagram d : {Diagram::PermsWordsProjection, Diagram::PermsWordsInclusion})
        out.push_back({tag + ": " + diagram_name(d), check_commuting(d, r), ""});
    Vector pf = stationary_perm_formula(pr);
    Vector wf = stationary_word_formula(r);
    out.push_back({tag + ": projected perm stationary = word stationary", vec_mat(pf, proj_perms_to_words(m)) == wf, ""});
    // q^{inv} Psi_pi is constant on each fibre of destandardization
    std::map<Word, Scalar> fibre;
    bool constant = true;
    auto perms = all_permutations(total(m));
    for (std::size_t k = 0; k < perms.size(); ++k) {
        Scalar v = power(q, inv(perms[k])) * pf[k];
        auto [it, fresh] = fibre.emplace(destandardize(perms[k], m), v);
        if (!fresh && it->second != v) constant = false;
    }
    out.push_back({tag + ": q^inv * perm stationary constant on fibres", constant, ""});
    Matrix j = incl_words_to_perms(m, q);
    Scalar expected = 1;
    for (int mi : m) expected *= q_factorial(mi, 1 / q);
    bool sums = true;
    for (std::size_t k = 0; k < j.rows(); ++k) {
        Scalar s = 0;
        for (std::size_t c = 0; c < j.cols(); ++c) s += j(k, c);
        if (s != expected) sums = false;
    }
    out.push_back({tag + ": inclusion row sums = product of [m_i]_{1/q}!", sums, ""});
    return out;
}

std::vector<CheckResult> check_q1_reduction(int n, std::mt19937_64& rng, bool spectrum) {
    std::string tag = "q=1 n=" + std::to_string(n);
    PermRates r = sample_generic_perm_rates(n, 1, rng);
    std::vector<CheckResult> out;
    bool classical = true;
    for (const auto& pi : all_permutations(n))
        if (stationary_perm_entry(pi, r) != classical_tsetlin_entry(pi, r.x)) classical = false;
    out.push_back({tag + ": stationary formula = classical Tsetlin product", classical, ""});
    bool plain = true;
    auto catalog = eigen_catalog_perm(r);
    for (const auto& e : catalog) {
        Scalar s = 0;
        for (int i : e.label) s += r.x[static_cast<std::size_t>(i - 1)];
        if (s != e.value) plain = false;
    }
    out.push_back({tag + ": eigenvalues are plain subset sums", plain, ""});
    if (spectrum) {
        auto rep = verify_multiplicities(transition_matrix_perm(r), catalog);
        out.push_back({tag + ": eigenvalue multiplicities", rep.ok(), spectrum_detail(rep)});
    }
    return out;
}

std::vector<CheckResult> check_properties(int n_max, std::mt19937_64& rng) {
    std::vector<CheckResult> out;
    std::uniform_int_distribution<int> coin(0, 2);
    auto comps = compositions_up_to(n_max);

    bool rows = true;
    std::string rows_detail;
    auto row_fail = [&](std::string d) { rows = false; rows_detail = std::move(d); };
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> pick_n(2, n_max);
        int n = pick_n(rng);
        Scalar q = sample_rational(rng);
        int kind = coin(rng);
        if (kind == 0) {
            PermRates r{q, Vector(static_cast<std::size_t>(n))};
            for (auto& x : r.x) x = sample_rational(rng);
            if (!row_sums_equal(transition_matrix_perm(r), sum(r.x))) row_fail("perm n=" + std::to_string(n));
        } else if (kind == 1) {
            std::uniform_int_distribution<std::size_t> pick(0, comps.size() - 1);
            WordRates r{q, comps[pick(rng)], {}};
            for (std::size_t i = 0; i < r.m.size(); ++i) r.xbar.push_back(sample_rational(rng));
            if (!row_sums_equal(transition_matrix_word(r), sum(r.xbar))) row_fail("word m=" + comp_string(r.m));
        } else {
            int fn = std::min(n, 3);
            FlagRates r{2, Vector(static_cast<std::size_t>(fn))};
            for (auto& x : r.x) x = sample_rational(rng);
            if (!row_sums_equal(transition_matrix_flags(r, FlagSpace(fn, 2)), sum(r.x))) row_fail("flag n=" + std::to_string(fn));
        }
    }
    out.push_back({"properties: row sums equal the total rate (50 configurations)", rows, rows_detail});

    bool positive = true;
    std::string pos_detail;
    auto pos_fail = [&](std::string d) { positive = false; pos_detail = std::move(d); };
    for (int trial = 0; trial < 20; ++trial) {
        Scalar q = sample_rational(rng);
        if (q < 1) q = 1 / q;
        std::uniform_int_distribution<int> pick_n(2, n_max);
        int n = pick_n(rng);
        PermRates r = sample_generic_perm_rates(n, q, rng);
        for (const auto& pi : all_permutations(n)) {
            auto f = perm_formula_factors(pi, r);
            for (const auto& v : f.numer) if (v <= 0) pos_fail("perm " + seq_to_string(pi));
            for (const auto& v : f.denom) if (v <= 0) pos_fail("perm " + seq_to_string(pi));
        }
        std::uniform_int_distribution<std::size_t> pick(0, comps.size() - 1);
        WordRates w = sample_generic_word_rates(comps[pick(rng)], q, rng);
        for (const auto& word : all_words(w.m)) {
            auto f = word_formula_factors(word, w);
            for (const auto& v : f.numer) if (v <= 0) pos_fail("word " + seq_to_string(word));
            for (const auto& v : f.denom) if (v <= 0) pos_fail("word " + seq_to_string(word));
        }
        for (int p : {2, 3}) {
            FlagRates fr = sample_generic_flag_rates(std::min(n, 3), p, rng);
            for (const auto& pi : all_permutations(std::min(n, 3)))
                for (const auto& v : flag_formula_factors(pi, fr))
                    if (v <= 0) pos_fail("flag " + seq_to_string(pi));
        }
    }
    out.push_back({"properties: formula factors positive for q >= 1", positive, pos_detail});

    bool band = true;
    for (int trial = 0; trial < 100; ++trial) {
        int p = trial % 2 ? 3 : 2;
        std::uniform_int_distribution<int> pick_n(2, 4), entry(0, p - 1);
        int n = pick_n(rng);
        auto random_flag = [&] {
            std::uniform_int_distribution<int> len(0, n);
            std::vector<FpVector> vs(static_cast<std::size_t>(len(rng)), FpVector(static_cast<std::size_t>(n)));
            for (auto& v : vs)
                for (auto& e : v) e = entry(rng);
            return partial_flag_from_vectors(vs, n, p);
        };
        PartialFlag a = random_flag(), b = random_flag();
        PartialFlag ab = lrb_product(a, b);
        if (!(lrb_product(a, a) == a) || !(lrb_product(ab, a) == ab)) band = false;
    }
    out.push_back({"properties: partial flags form a left regular band (100 pairs)", band, ""});

    bool dims = true;
    std::string dims_detail;
    auto dim_fail = [&](std::string d) { dims = false; dims_detail = std::move(d); };
    for (int n = 2; n <= n_max; ++n) {
        std::uint64_t s = 0;
        for (const auto& e : eigen_catalog_perm({2, Vector(static_cast<std::size_t>(n), 1)})) s += e.predicted;
        if (s != factorial(n)) dim_fail("perm n=" + std::to_string(n));
        for (int p : {2, 3, 5}) {
            std::uint64_t t = 0;
            for (const auto& e : eigen_catalog_flags({p, Vector(static_cast<std::size_t>(n), 1)})) t += e.predicted;
            if (t != flag_space_size(n, p)) dim_fail("flag n=" + std::to_string(n));
        }
    }
    for (const auto& m : comps) {
        std::uint64_t s = 0;
        for (const auto& e : eigen_catalog_word({2, m, Vector(m.size(), 1)})) s += e.predicted;
        if (s != all_words(m).size()) dim_fail("word m=" + comp_string(m));
    }
    out.push_back({"properties: multiplicities sum to the state space size", dims, dims_detail});
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"perm", "word", "flag", "lumping", "hecke", "q1-reduction", "properties", "all"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opts) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
        throw std::invalid_argument("unknown suite: " + name);
    if (opts.n_max < 2) throw std::invalid_argument("n-max must be at least 2");
    for (int p : opts.primes) validate_prime(p);
    std::mt19937_64 rng(opts.seed);
    std::vector<CheckResult> out;
    auto add = [&](std::vector<CheckResult> r) { out.insert(out.end(), r.begin(), r.end()); };
    auto wants = [&](const char* s) { return name == "all" || name == s; };
    const Scalar q = make_scalar(5, 2);

    if (wants("perm"))
        for (int n = 2; n <= opts.n_max; ++n) {
            add(check_perm_chain(n, q, rng));
            add(check_perm_chain(n, make_scalar(2, 3), rng));
        }
    if (wants("word"))
        for (const auto& m : compositions_up_to(opts.n_max)) add(check_word_chain(m, q, rng));
    if (wants("flag"))
        for (int p : opts.primes)
            for (int n = 2; n <= opts.n_max; ++n) {
                auto size = flag_space_size(n, p);
                if (size <= opts.max_flag_states) add(check_flag_chain(n, p, rng, size <= 60));
            }
    if (wants("lumping")) {
        for (int p : opts.primes)
            for (int n = 2; n <= opts.n_max; ++n)
                if (flag_space_size(n, p) <= opts.max_flag_states) add(check_flag_lumping(n, p, rng));
        for (const auto& m : compositions_up_to(opts.n_max)) add(check_word_lumping(m, q, rng));
    }
    if (wants("hecke")) {
        for (int n = 2; n <= opts.n_max; ++n)
            out.push_back({"hecke perms n=" + std::to_string(n), check_hecke_relations(hecke_generators_perm(n, q), q).ok(), ""});
        for (const auto& m : compositions_up_to(opts.n_max))
            out.push_back({"hecke words m=" + comp_string(m), check_hecke_relations(hecke_generators_word(m, q), q).ok(), ""});
        for (int p : opts.primes)
            for (int n = 2; n <= opts.n_max; ++n)
                if (flag_space_size(n, p) <= opts.max_flag_states)
                    out.push_back({"hecke flags n=" + std::to_string(n) + " p=" + std::to_string(p),
                                   check_hecke_relations(hecke_generators_coset(FlagSpace(n, p)), Scalar(p)).ok(), ""});
    }
    if (wants("q1-reduction"))
        for (int n = 2; n <= opts.n_max; ++n) add(check_q1_reduction(n, rng, n <= 4));
    if (wants("properties")) add(check_properties(opts.n_max, rng));
    return out;
}

}  // namespace qtsetlin

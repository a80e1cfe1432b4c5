#include "qtsetlin/spectra.hpp"

#include "qtsetlin/stationary.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qtsetlin {

std::string EigenEntry::label_string() const {
    std::ostringstream os;
    os << (kind == LabelKind::Subset ? '{' : '(');
    for (std::size_t i = 0; i < label.size(); ++i) os << (i ? "," : "") << label[i];
    os << (kind == LabelKind::Subset ? '}' : ')');
    return os.str();
}

namespace {

// Subsets of [n] by bitmask, each listed in decreasing order.
std::vector<std::vector<int>> decreasing_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = n; i >= 1; --i)
            if (mask & (1u << (i - 1))) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

Scalar subset_eigenvalue(const std::vector<int>& s, const Vector& x, const Scalar& q) {
    const int n = static_cast<int>(x.size());
    Scalar v = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        int i = s[j];
        v += x[static_cast<std::size_t>(i - 1)] / power(q, n - i - static_cast<int>(j));
    }
    return v;
}

}  // namespace

std::vector<EigenEntry> eigen_catalog_perm(const PermRates& r) {
    validate(r);
    const int n = static_cast<int>(r.x.size());
    std::vector<EigenEntry> out;
    for (const auto& s : decreasing_subsets(n))
        out.push_back({LabelKind::Subset, s, subset_eigenvalue(s, r.x, r.q),
                       derangement(n - static_cast<int>(s.size()))});
    return out;
}

std::vector<EigenEntry> eigen_catalog_word(const WordRates& r) {
    validate(r);
    const int n = total(r.m);
    auto nj = partial_sums(r.m);
    std::vector<EigenEntry> out;
    for (const auto& a : all_upper_sets(r.m)) {
        Scalar v = 0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            int above = 0;
            for (std::size_t k = j + 1; k < a.size(); ++k) above += a[k];
            v += r.xbar[j] * power(r.q, above) * q_int(a[j], r.q) /
                 (power(r.q, n - nj[j + 1]) * q_int(r.m[j], r.q));
        }
        out.push_back({LabelKind::UpperSet, a, v, poset_derangements(r.m, a)});
    }
    return out;
}

std::vector<EigenEntry> eigen_catalog_flags(const FlagRates& r) {
    validate(r);
    const int n = static_cast<int>(r.x.size());
    const Scalar q(r.p);
    std::vector<EigenEntry> out;
    for (const auto& s : decreasing_subsets(n)) {
        const int k = static_cast<int>(s.size());
        std::uint64_t mult = 1;
        if (k != n) {
            int e = 0;
            for (int j = 1; j <= k; ++j) e += n - j + 1 - s[static_cast<std::size_t>(j - 1)];
            Scalar m = q_derangement(n - k, q) * power(q, e);
            if (m.get_den() != 1 || m < 0) throw std::logic_error("multiplicity is not a natural number");
            mult = m.get_num().get_ui();
        }
        out.push_back({LabelKind::Subset, s, subset_eigenvalue(s, r.x, q), mult});
    }
    return out;
}

std::vector<MergedEigenvalue> merge_catalog(const std::vector<EigenEntry>& catalog) {
    std::vector<MergedEigenvalue> out;
    for (const auto& e : catalog) {
        auto it = std::find_if(out.begin(), out.end(), [&](const MergedEigenvalue& m) { return m.value == e.value; });
        if (it == out.end()) {
            out.push_back({e.value, e.predicted, {e.label_string()}});
        } else {
            it->predicted += e.predicted;
            it->labels.push_back(e.label_string());
        }
    }
    return out;
}

bool SpectrumReport::ok() const {
    if (predicted_total != dimension) return false;
    return std::all_of(entries.begin(), entries.end(), [](const MultiplicityReport& e) { return e.pass; });
}

SpectrumReport verify_multiplicities(const Matrix& op, const std::vector<EigenEntry>& catalog) {
    SpectrumReport rep;
    rep.dimension = op.rows();
    for (const auto& m : merge_catalog(catalog)) {
        std::string label;
        for (std::size_t i = 0; i < m.labels.size(); ++i) label += (i ? "=" : "") + m.labels[i];
        auto computed = static_cast<std::uint64_t>(rank_nullity(shift(op, m.value)).nullity);
        rep.entries.push_back({label, m.value, m.predicted, computed, computed == m.predicted});
        rep.predicted_total += m.predicted;
    }
    return rep;
}

bool verify_annihilation(const Matrix& op, const std::vector<EigenEntry>& catalog) {
    Matrix prod = Matrix::identity(op.rows());
    for (const auto& m : merge_catalog(catalog)) prod = mat_mul(prod, shift(op, m.value));
    return prod.is_zero();
}

Scalar sample_rational(std::mt19937_64& rng, int max_num, int max_den) {
    std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
    return make_scalar(num(rng), den(rng));
}

namespace {

bool distinct(const std::vector<EigenEntry>& c) {
    std::set<Scalar> seen;
    for (const auto& e : c)
        if (!seen.insert(e.value).second) return false;
    return true;
}

// x is the rate vector inside r
template <class Rates, class Catalog>
Rates resample(Rates& r, Vector& x, std::mt19937_64& rng, Catalog catalog) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        for (auto& v : x) v = sample_rational(rng);
        x = normalized(x);
        if (distinct(catalog(r))) return r;
    }
    throw std::runtime_error("could not sample generic rates");
}

}  // namespace

PermRates sample_generic_perm_rates(int n, const Scalar& q, std::mt19937_64& rng) {
    PermRates r{q, Vector(static_cast<std::size_t>(n))};
    return resample(r, r.x, rng, [](const PermRates& s) { return eigen_catalog_perm(s); });
}

WordRates sample_generic_word_rates(const Composition& m, const Scalar& q, std::mt19937_64& rng) {
    WordRates r{q, m, Vector(m.size())};
    return resample(r, r.xbar, rng, [](const WordRates& s) { return eigen_catalog_word(s); });
}

FlagRates sample_generic_flag_rates(int n, int p, std::mt19937_64& rng) {
    FlagRates r{p, Vector(static_cast<std::size_t>(n))};
    return resample(r, r.x, rng, [](const FlagRates& s) { return eigen_catalog_flags(s); });
}

}  // namespace qtsetlin

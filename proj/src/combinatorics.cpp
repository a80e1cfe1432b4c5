#include "qtsetlin/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtsetlin {

bool is_permutation(const std::vector<int>& s) {
    std::vector<int> t = s;
    std::sort(t.begin(), t.end());
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] != static_cast<int>(i) + 1) return false;
    return true;
}

void validate_composition(const Composition& m) {
    if (m.empty()) throw std::invalid_argument("composition must be nonempty");
    for (int x : m)
        if (x <= 0) throw std::invalid_argument("composition parts must be positive");
}

int total(const Composition& m) { return std::accumulate(m.begin(), m.end(), 0); }

std::vector<int> partial_sums(const Composition& m) {
    std::vector<int> n(m.size() + 1, 0);
    for (std::size_t j = 0; j < m.size(); ++j) n[j + 1] = n[j] + m[j];
    return n;
}

Composition content(const Word& w, int letters) {
    Composition c(static_cast<std::size_t>(letters), 0);
    for (int x : w) {
        if (x < 1 || x > letters) throw std::invalid_argument("letter out of range");
        ++c[static_cast<std::size_t>(x - 1)];
    }
    return c;
}

std::vector<Permutation> all_permutations(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<Permutation> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Word> all_words(const Composition& m) {
    validate_composition(m);
    Word w;
    for (std::size_t j = 0; j < m.size(); ++j) w.insert(w.end(), static_cast<std::size_t>(m[j]), static_cast<int>(j) + 1);
    std::vector<Word> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<std::vector<int>> all_compositions(int n) {
    std::vector<std::vector<int>> out;
    if (n <= 0) return out;
    // bit i of mask set means a cut after position i+1
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> c;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) {
                c.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        c.push_back(run);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int inv(const std::vector<int>& s) {
    int c = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j]) ++c;
    return c;
}

int coinv(const std::vector<int>& s) {
    int c = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] < s[j]) ++c;
    return c;
}

std::vector<int> lrm_positions(const std::vector<int>& s) {
    std::vector<int> out;
    int best = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == 0 || s[i] <= best) {
            out.push_back(static_cast<int>(i) + 1);
            best = s[i];
        }
    }
    return out;
}

int p_index(const std::vector<int>& s, int k) {
    for (int i = 1; i < k; ++i)
        if (s[static_cast<std::size_t>(i - 1)] < s[static_cast<std::size_t>(k - 1)]) return i;
    return 0;
}

std::string seq_to_string(const std::vector<int>& s) {
    bool digits = std::all_of(s.begin(), s.end(), [](int x) { return x >= 0 && x <= 9; });
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!digits && i) os << ',';
        os << s[i];
    }
    return os.str();
}

std::vector<int> seq_from_string(const std::string& text) {
    std::vector<int> out;
    if (text.find(',') != std::string::npos) {
        std::istringstream is(text);
        std::string part;
        while (std::getline(is, part, ',')) out.push_back(std::stoi(part));
        return out;
    }
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("malformed sequence: " + text);
        out.push_back(c - '0');
    }
    return out;
}

Permutation standardize(const Word& w) {
    int letters = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
    Composition c = content(w, letters);
    std::vector<int> next(static_cast<std::size_t>(letters) + 1, 1);
    for (int j = 1; j <= letters; ++j) next[static_cast<std::size_t>(j)] = next[static_cast<std::size_t>(j - 1)] + (j > 1 ? c[static_cast<std::size_t>(j - 2)] : 0);
    Permutation p;
    p.reserve(w.size());
    for (int x : w) p.push_back(next[static_cast<std::size_t>(x)]++);
    return p;
}

Word destandardize(const Permutation& p, const Composition& m) {
    validate_composition(m);
    if (static_cast<int>(p.size()) != total(m) || !is_permutation(p))
        throw std::invalid_argument("destandardize: size mismatch");
    auto n = partial_sums(m);
    Word w;
    w.reserve(p.size());
    for (int v : p) {
        int j = 1;
        while (v > n[static_cast<std::size_t>(j)]) ++j;
        w.push_back(j);
    }
    return w;
}

Permutation swap_positions(const std::vector<int>& s, int i) {
    std::vector<int> t = s;
    std::swap(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(i)]);
    return t;
}

Permutation compose_values(const Permutation& tau, const Permutation& sigma) {
    Permutation r;
    r.reserve(sigma.size());
    for (int v : sigma) r.push_back(tau[static_cast<std::size_t>(v - 1)]);
    return r;
}

Permutation inverse(const Permutation& p) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
    return r;
}

Scalar q_int(int k, const Scalar& q) {
    Scalar s = 0, t = 1;
    for (int i = 0; i < k; ++i) {
        s += t;
        t *= q;
    }
    return s;
}

Scalar q_factorial(int k, const Scalar& q) {
    Scalar f = 1;
    for (int i = 2; i <= k; ++i) f *= q_int(i, q);
    return f;
}

std::uint64_t factorial(int k) {
    if (k < 0 || k > 20) throw std::out_of_range("factorial out of range");
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t derangement(int k) {
    if (k < 0 || k > 20) throw std::out_of_range("derangement out of range");
    Scalar s = 0, term = 1;
    for (int j = 0; j <= k; ++j) {
        if (j) term /= j;
        s += (j % 2 ? -term : term);
    }
    s *= Scalar(mpz_class(std::to_string(factorial(k))));
    return s.get_num().get_ui();
}

Scalar q_derangement(int k, const Scalar& q) {
    Scalar s = 0;
    for (int j = 0; j <= k; ++j) {
        Scalar term = power(q, j * (j - 1) / 2) / q_factorial(j, q);
        s += (j % 2 ? -term : term);
    }
    return q_factorial(k, q) * s;
}

std::vector<UpperSet> all_upper_sets(const Composition& m) {
    validate_composition(m);
    std::vector<UpperSet> out;
    UpperSet a(m.size(), 0);
    while (true) {
        out.push_back(a);
        std::size_t i = a.size();
        while (i > 0) {
            --i;
            if (a[i] < m[i]) {
                ++a[i];
                for (std::size_t j = i + 1; j < a.size(); ++j) a[j] = 0;
                break;
            }
            if (i == 0) return out;
        }
    }
}

namespace {

void extend(const std::vector<int>& sizes, std::vector<int>& used, const std::vector<int>& offset,
            Permutation& cur, std::size_t n, std::vector<Permutation>& out) {
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (used[i] == sizes[i]) continue;
        cur.push_back(offset[i] + ++used[i]);
        extend(sizes, used, offset, cur, n, out);
        --used[i];
        cur.pop_back();
    }
}

}  // namespace

std::vector<Permutation> linear_extensions(const Composition& m, const UpperSet& removed) {
    validate_composition(m);
    if (removed.size() != m.size()) throw std::invalid_argument("upper set length mismatch");
    std::vector<int> sizes;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (removed[i] < 0 || removed[i] > m[i]) throw std::invalid_argument("not an upper set");
        if (m[i] - removed[i] > 0) sizes.push_back(m[i] - removed[i]);
    }
    std::vector<int> offset(sizes.size(), 0);
    for (std::size_t i = 1; i < sizes.size(); ++i) offset[i] = offset[i - 1] + sizes[i - 1];
    std::size_t n = static_cast<std::size_t>(std::accumulate(sizes.begin(), sizes.end(), 0));
    std::vector<int> used(sizes.size(), 0);
    std::vector<Permutation> out;
    Permutation cur;
    extend(sizes, used, offset, cur, n, out);
    return out;
}

std::uint64_t poset_derangements(const Composition& m, const UpperSet& removed) {
    std::uint64_t c = 0;
    for (const auto& e : linear_extensions(m, removed)) {
        bool fixed = false;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] == static_cast<int>(i) + 1) fixed = true;
        if (!fixed) ++c;
    }
    return c;
}

}  // namespace qtsetlin

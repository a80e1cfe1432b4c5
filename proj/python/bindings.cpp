// Thin Python bindings. Rationals cross the boundary as "a/b" strings and
// structured results as JSON text; the qtsetlin package converts both.
#include "qtsetlin/lumping.hpp"
#include "qtsetlin/report.hpp"
#include "qtsetlin/spectra.hpp"
#include "qtsetlin/stationary.hpp"
#include "qtsetlin/suite.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace py = pybind11;
using namespace qtsetlin;

namespace {

struct Chain {
    std::string space;
    int n = 0;
    Composition m;
    std::optional<Scalar> q;
    int p = 0;
    Vector rates;
};

Chain make_chain(const std::string& space, int n, const Composition& m, const std::string& q, int p,
                 const std::vector<std::string>& rates) {
    Chain c;
    c.space = space;
    c.n = n;
    c.m = m;
    c.p = p;
    if (!q.empty()) c.q = parse_scalar(q);
    for (const auto& r : rates) c.rates.push_back(parse_scalar(r));
    if (space == "perm") {
        if (!c.q) throw std::invalid_argument("perm space needs q");
        if (c.rates.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("perm space needs n rates");
        validate(PermRates{*c.q, c.rates});
    } else if (space == "word") {
        if (!c.q) throw std::invalid_argument("word space needs q");
        validate(WordRates{*c.q, m, c.rates});
    } else if (space == "flag") {
        if (c.rates.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("flag space needs n rates");
        validate(FlagRates{p, c.rates});
        if (c.q && *c.q != p) throw std::invalid_argument("flag space needs q = p");
    } else {
        throw std::invalid_argument("unknown space '" + space + "'");
    }
    return c;
}

PermRates perm_rates(const Chain& c) { return {*c.q, c.rates}; }
WordRates word_rates(const Chain& c) { return {*c.q, c.m, c.rates}; }
FlagRates flag_rates(const Chain& c) { return {c.p, c.rates}; }

std::vector<std::string> labels(const Chain& c) {
    if (c.space == "perm") return state_labels_perm(c.n);
    if (c.space == "word") return state_labels_word(c.m);
    return state_labels_flags(FlagSpace(c.n, c.p));
}

Matrix matrix_of(const Chain& c) {
    if (c.space == "perm") return transition_matrix_perm(perm_rates(c));
    if (c.space == "word") return transition_matrix_word(word_rates(c));
    return transition_matrix_flags(flag_rates(c), FlagSpace(c.n, c.p));
}

std::vector<EigenEntry> catalog_of(const Chain& c) {
    if (c.space == "perm") return eigen_catalog_perm(perm_rates(c));
    if (c.space == "word") return eigen_catalog_word(word_rates(c));
    return eigen_catalog_flags(flag_rates(c));
}

#define CHAIN_ARGS                                                                                       \
    py::arg("space"), py::kw_only(), py::arg("n") = 0, py::arg("m") = Composition{}, py::arg("q") = "", \
        py::arg("p") = 0, py::arg("rates") = std::vector<std::string>{}

}  // namespace

PYBIND11_MODULE(_qtsetlin, mod) {
    mod.doc() = "Exact q-Tsetlin library chains";

    py::register_exception_translator([](std::exception_ptr e) {
        try {
            if (e) std::rethrow_exception(e);
        } catch (const std::domain_error& err) {
            PyErr_SetString(PyExc_ValueError, err.what());
        }
    });

    mod.def(
        "transition_matrix",
        [](const std::string& space, int n, const Composition& m, const std::string& q, int p,
           const std::vector<std::string>& rates) {
            Chain c = make_chain(space, n, m, q, p, rates);
            return matrix_to_json(labels(c), matrix_of(c)).dump();
        },
        CHAIN_ARGS);

    mod.def(
        "stationary",
        [](const std::string& space, int n, const Composition& m, const std::string& q, int p,
           const std::vector<std::string>& rates, const std::string& method) {
            Chain c = make_chain(space, n, m, q, p, rates);
            Vector v;
            if (method == "formula") {
                if (c.space == "perm") v = stationary_perm_formula(perm_rates(c));
                else if (c.space == "word") v = stationary_word_formula(word_rates(c));
                else v = stationary_flags_formula(flag_rates(c), FlagSpace(c.n, c.p));
            } else if (method == "oracle") {
                v = stationary_oracle(matrix_of(c), 1);
            } else if (method == "semigroup") {
                if (c.space != "flag") throw std::invalid_argument("semigroup method needs the flag space");
                v = stationary_flags_semigroup(flag_rates(c), FlagSpace(c.n, c.p));
            } else {
                throw std::invalid_argument("unknown method '" + method + "'");
            }
            // oracle normalizes to sum 1; bring the formula to the same scale
            return vector_to_json(labels(c), normalized(v)).dump();
        },
        CHAIN_ARGS, py::arg("method") = "formula");

    mod.def(
        "eigen_catalog",
        [](const std::string& space, int n, const Composition& m, const std::string& q, int p,
           const std::vector<std::string>& rates) {
            Chain c = make_chain(space, n, m, q, p, rates);
            return catalog_to_json(catalog_of(c)).dump();
        },
        CHAIN_ARGS);

    mod.def(
        "verify_spectrum",
        [](const std::string& space, int n, const Composition& m, const std::string& q, int p,
           const std::vector<std::string>& rates) {
            Chain c = make_chain(space, n, m, q, p, rates);
            Matrix t = matrix_of(c);
            auto catalog = catalog_of(c);
            auto rep = verify_multiplicities(t, catalog);
            Json out{{"report", spectrum_to_json(rep)},
                     {"predicted_total", rep.predicted_total},
                     {"dimension", rep.dimension},
                     {"annihilates", verify_annihilation(t, catalog)}};
            return out.dump();
        },
        CHAIN_ARGS);

    mod.def(
        "check_commuting",
        [](const std::string& diagram, int p, const std::vector<std::string>& rates, const std::string& q,
           const Composition& m) {
            Vector x;
            for (const auto& r : rates) x.push_back(parse_scalar(r));
            if (diagram == "flags-perms-projection") return check_commuting(Diagram::FlagsPermsProjection, FlagRates{p, x});
            if (diagram == "flags-perms-inclusion") return check_commuting(Diagram::FlagsPermsInclusion, FlagRates{p, x});
            if (diagram == "perms-words-projection")
                return check_commuting(Diagram::PermsWordsProjection, WordRates{parse_scalar(q), m, x});
            if (diagram == "perms-words-inclusion")
                return check_commuting(Diagram::PermsWordsInclusion, WordRates{parse_scalar(q), m, x});
            throw std::invalid_argument("unknown diagram '" + diagram + "'");
        },
        py::arg("diagram"), py::kw_only(), py::arg("p") = 0, py::arg("rates") = std::vector<std::string>{},
        py::arg("q") = "", py::arg("m") = Composition{});

    mod.def(
        "run_suite",
        [](const std::string& name, int n_max, const std::vector<int>& primes, std::uint64_t seed) {
            SuiteOptions opts;
            opts.n_max = n_max;
            opts.primes = primes;
            opts.seed = seed;
            auto checks = run_suite(name, opts);
            bool pass = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
            return Json{{"suite", name}, {"pass", pass}, {"checks", checks_to_json(checks)}}.dump();
        },
        py::arg("name") = "all", py::arg("n_max") = 4, py::arg("primes") = std::vector<int>{2},
        py::arg("seed") = 1);

    mod.def("suite_names", &suite_names);
    mod.def("inv", &inv);
    mod.def("coinv", &coinv);
    mod.def("lrm_positions", &lrm_positions);
    mod.def("standardize", &standardize);
    mod.def("destandardize", &destandardize);
    mod.def("all_permutations", &all_permutations);
    mod.def("all_words", &all_words);
    mod.def("derangement", &derangement);
    mod.def("q_int", [](int k, const std::string& q) { return to_string(q_int(k, parse_scalar(q))); });
    mod.def("q_factorial", [](int k, const std::string& q) { return to_string(q_factorial(k, parse_scalar(q))); });
    mod.def("q_derangement", [](int k, const std::string& q) { return to_string(q_derangement(k, parse_scalar(q))); });
}

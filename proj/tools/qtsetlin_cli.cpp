#include "qtsetlin/lumping.hpp"
#include "qtsetlin/report.hpp"
#include "qtsetlin/spectra.hpp"
#include "qtsetlin/stationary.hpp"
#include "qtsetlin/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <stdexcept>

using namespace qtsetlin;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kConfigError = 2;

struct Options {
    std::string space = "perm";
    std::optional<int> n;
    std::vector<int> p;
    std::optional<std::string> q;
    std::optional<std::string> rates;
    std::optional<std::string> m;
    std::string method = "formula";
    std::string format = "json";
    std::uint64_t seed = 1;
    std::optional<std::string> out;
    bool verify = false;
    std::string suite = "all";
    int n_max = 4;
};

// A resolved chain: exactly one of the three rate kinds is set.
struct Chain {
    std::optional<PermRates> perm;
    std::optional<WordRates> word;
    std::optional<FlagRates> flag;
    std::optional<FlagSpace> space;

    std::vector<std::string> labels() const {
        if (perm) return state_labels_perm(static_cast<int>(perm->x.size()));
        if (word) return state_labels_word(word->m);
        return state_labels_flags(*space);
    }
    Matrix matrix() const {
        if (perm) return transition_matrix_perm(*perm);
        if (word) return transition_matrix_word(*word);
        return transition_matrix_flags(*flag, *space);
    }
    Scalar total() const {
        if (perm) return sum(perm->x);
        if (word) return sum(word->xbar);
        return sum(flag->x);
    }
};

Composition parse_composition(const std::string& text) {
    Composition m;
    for (const auto& part : parse_scalar_list(text)) {
        if (part.get_den() != 1 || !part.get_num().fits_sint_p()) throw std::invalid_argument("composition parts must be integers");
        m.push_back(static_cast<int>(part.get_num().get_si()));
    }
    validate_composition(m);
    return m;
}

int single_prime(const Options& o) {
    if (o.p.size() != 1) throw std::invalid_argument("flag space needs exactly one --p");
    validate_prime(o.p.front());
    return o.p.front();
}

Chain resolve(const Options& o) {
    std::mt19937_64 rng(o.seed);
    std::optional<Vector> rates;
    if (o.rates) rates = parse_scalar_list(*o.rates);
    Chain c;
    if (o.space == "flag") {
        int p = single_prime(o);
        if (o.q && parse_scalar(*o.q) != p) throw std::invalid_argument("for flags q is fixed to p");
        int n = o.n ? *o.n : rates ? static_cast<int>(rates->size()) : 0;
        if (n < 1) throw std::invalid_argument("flag space needs --n or --rates");
        if (rates && static_cast<int>(rates->size()) != n) throw std::invalid_argument("--rates length must equal --n");
        c.flag = rates ? FlagRates{p, *rates} : sample_generic_flag_rates(n, p, rng);
        validate(*c.flag);
        c.space.emplace(n, p);
        return c;
    }
    if (!o.q) throw std::invalid_argument("--q is required for " + o.space);
    Scalar q = parse_scalar(*o.q);
    if (o.space == "perm") {
        int n = o.n ? *o.n : rates ? static_cast<int>(rates->size()) : 0;
        if (n < 1) throw std::invalid_argument("perm space needs --n or --rates");
        if (rates && static_cast<int>(rates->size()) != n) throw std::invalid_argument("--rates length must equal --n");
        c.perm = rates ? PermRates{q, *rates} : sample_generic_perm_rates(n, q, rng);
        validate(*c.perm);
        return c;
    }
    if (o.space == "word") {
        if (!o.m) throw std::invalid_argument("word space needs --m");
        Composition m = parse_composition(*o.m);
        if (o.n && *o.n != total(m)) throw std::invalid_argument("--n must equal the size of --m");
        c.word = rates ? WordRates{q, m, *rates} : sample_generic_word_rates(m, q, rng);
        validate(*c.word);
        return c;
    }
    throw std::invalid_argument("unknown space: " + o.space);
}

void emit(const Options& o, const std::string& text) {
    if (o.out) {
        std::ofstream f(*o.out);
        if (!f) throw std::invalid_argument("cannot write " + *o.out);
        f << text;
    } else {
        std::cout << text;
    }
}

void emit(const Options& o, const Json& j, const std::string& csv) {
    emit(o, o.format == "json" ? j.dump(2) + "\n" : csv);
}

int cmd_matrix(const Options& o) {
    Chain c = resolve(o);
    auto labels = c.labels();
    Matrix t = c.matrix();
    emit(o, matrix_to_json(labels, t), matrix_to_csv(labels, t));
    return kOk;
}

int cmd_stationary(const Options& o) {
    Chain c = resolve(o);
    auto labels = c.labels();
    std::vector<std::pair<std::string, Vector>> results;
    auto want = [&](const char* m) { return o.method == "all" || o.method == m; };
    if (o.method == "semigroup" && !c.flag) throw std::invalid_argument("semigroup method is only defined for flags");
    if (want("formula")) {
        Vector v = c.perm ? stationary_perm_formula(*c.perm)
                 : c.word ? stationary_word_formula(*c.word)
                          : stationary_flags_formula(*c.flag, *c.space);
        results.emplace_back("formula", normalized(v));
    }
    if (want("oracle")) results.emplace_back("oracle", stationary_oracle(c.matrix(), c.total()));
    if (want("semigroup") && c.flag) results.emplace_back("semigroup", stationary_flags_semigroup(*c.flag, *c.space));

    if (o.method != "all") {
        emit(o, vector_to_json(labels, results.front().second), vector_to_csv(labels, results.front().second));
        return kOk;
    }
    bool agree = true;
    for (const auto& r : results) agree = agree && r.second == results.front().second;
    Json j = Json::object();
    std::string csv = "state";
    for (const auto& r : results) {
        j[r.first] = vector_to_json(labels, r.second);
        csv += "," + r.first;
    }
    j["agree"] = agree;
    csv += "\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        csv += labels[i];
        for (const auto& r : results) csv += "," + to_string(r.second[i]);
        csv += "\n";
    }
    emit(o, j, csv);
    return agree ? kOk : kVerifyFailed;
}

int cmd_spectrum(const Options& o) {
    Chain c = resolve(o);
    auto catalog = c.perm ? eigen_catalog_perm(*c.perm) : c.word ? eigen_catalog_word(*c.word) : eigen_catalog_flags(*c.flag);
    if (!o.verify) {
        emit(o, catalog_to_json(catalog), catalog_to_csv(catalog));
        return kOk;
    }
    Matrix t = c.matrix();
    auto rep = verify_multiplicities(t, catalog);
    bool annihilates = verify_annihilation(t, catalog);
    Json j{{"report", spectrum_to_json(rep)},
           {"predicted_total", rep.predicted_total},
           {"dimension", rep.dimension},
           {"annihilates", annihilates}};
    emit(o, j, spectrum_to_csv(rep));
    return rep.ok() && annihilates ? kOk : kVerifyFailed;
}

int cmd_lump_check(const Options& o) {
    std::mt19937_64 rng(o.seed);
    std::vector<CheckResult> checks;
    if (!o.p.empty()) {
        if (!o.n) throw std::invalid_argument("flag lumping needs --n");
        int p = single_prime(o);
        FlagRates r = o.rates ? FlagRates{p, parse_scalar_list(*o.rates)} : sample_generic_flag_rates(*o.n, p, rng);
        if (static_cast<int>(r.x.size()) != *o.n) throw std::invalid_argument("--rates length must equal --n");
        for (Diagram d : {Diagram::FlagsPermsProjection, Diagram::FlagsPermsInclusion})
            checks.push_back({diagram_name(d), check_commuting(d, r), ""});
    }
    if (o.m) {
        if (!o.q) throw std::invalid_argument("word lumping needs --q");
        Composition m = parse_composition(*o.m);
        Scalar q = parse_scalar(*o.q);
        WordRates r;
        if (o.rates && o.p.empty()) {
            // permutation rates; they must be compatible with m
            PermRates pr{q, parse_scalar_list(*o.rates)};
            r = map_rates_perm_to_word(pr, m);
        } else {
            r = sample_generic_word_rates(m, q, rng);
        }
        for (Diagram d : {Diagram::PermsWordsProjection, Diagram::PermsWordsInclusion})
            checks.push_back({diagram_name(d), check_commuting(d, r), ""});
    }
    if (checks.empty()) throw std::invalid_argument("lump-check needs --p (flags) and/or --m (words)");
    Json j = Json::object();
    bool ok = true;
    for (const auto& c : checks) {
        j[c.name] = c.pass;
        ok = ok && c.pass;
    }
    emit(o, j, checks_to_csv(checks));
    return ok ? kOk : kVerifyFailed;
}

int cmd_verify(const Options& o) {
    SuiteOptions s;
    s.n_max = o.n_max;
    s.seed = o.seed;
    if (!o.p.empty()) s.primes = o.p;
    auto checks = run_suite(o.suite, s);
    bool ok = true;
    for (const auto& c : checks) ok = ok && c.pass;
    Json j{{"suite", o.suite}, {"pass", ok}, {"checks", checks_to_json(checks)}};
    emit(o, j, checks_to_csv(checks));
    return ok ? kOk : kVerifyFailed;
}

void add_space_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--space", o.space, "State space")->check(CLI::IsMember({"perm", "word", "flag"}));
    cmd->add_option("--n", o.n, "Number of positions")->check(CLI::Range(1, 9));
    cmd->add_option("--p", o.p, "Field size for flags")->delimiter(',');
    cmd->add_option("--q", o.q, "Hecke parameter, a rational a/b");
    cmd->add_option("--rates", o.rates, "Comma separated rationals");
    cmd->add_option("--m", o.m, "Composition for words, e.g. 2,2");
    cmd->add_option("--seed", o.seed, "Seed for sampling generic rates");
}

void add_output_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out, "Write output to this file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-Tsetlin library chains on permutations, words and flags"};
    app.require_subcommand(1);
    Options o;

    auto* matrix = app.add_subcommand("matrix", "Print the transition matrix");
    auto* stationary = app.add_subcommand("stationary", "Print the stationary distribution");
    auto* spectrum = app.add_subcommand("spectrum", "Print the eigenvalue catalog");
    auto* lump = app.add_subcommand("lump-check", "Check the lumping identities");
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    for (auto* cmd : {matrix, stationary, spectrum, lump}) {
        add_space_options(cmd, o);
        add_output_options(cmd, o);
    }
    stationary->add_option("--method", o.method, "Computation method")
        ->check(CLI::IsMember({"formula", "oracle", "semigroup", "all"}));
    spectrum->add_flag("--verify", o.verify, "Compare multiplicities with exact nullities");
    verify->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suite_names()));
    verify->add_option("--n-max", o.n_max, "Largest n")->check(CLI::Range(2, 6));
    verify->add_option("--p", o.p, "Primes for flag checks")->delimiter(',');
    verify->add_option("--seed", o.seed, "Seed for sampled rates");
    add_output_options(verify, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }

    try {
        if (*matrix) return cmd_matrix(o);
        if (*stationary) return cmd_stationary(o);
        if (*spectrum) return cmd_spectrum(o);
        if (*lump) return cmd_lump_check(o);
        return cmd_verify(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }
}

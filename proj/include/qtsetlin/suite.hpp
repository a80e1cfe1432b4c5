#pragma once

#include "qtsetlin/chains.hpp"
#include "qtsetlin/flags.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qtsetlin {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct SuiteOptions {
    int n_max = 4;
    std::vector<int> primes{2};
    std::uint64_t seed = 1;
    // flag spaces larger than this are skipped
    std::size_t max_flag_states = 400;
};

const std::vector<std::string>& suite_names();
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opts);

// Individual checks, each returning one result per configuration.
std::vector<CheckResult> check_perm_chain(int n, const Scalar& q, std::mt19937_64& rng);
std::vector<CheckResult> check_word_chain(const Composition& m, const Scalar& q, std::mt19937_64& rng);
std::vector<CheckResult> check_flag_chain(int n, int p, std::mt19937_64& rng, bool spectrum);
std::vector<CheckResult> check_flag_lumping(int n, int p, std::mt19937_64& rng);
std::vector<CheckResult> check_word_lumping(const Composition& m, const Scalar& q, std::mt19937_64& rng);
std::vector<CheckResult> check_q1_reduction(int n, std::mt19937_64& rng, bool spectrum);
std::vector<CheckResult> check_properties(int n_max, std::mt19937_64& rng);

// Classical Tsetlin library stationary probability, prod_i x_{pi_i} / (x_{pi_i} + ... + x_{pi_n}).
Scalar classical_tsetlin_entry(const Permutation& pi, const Vector& x);

std::size_t flag_space_size(int n, int p);

}  // namespace qtsetlin

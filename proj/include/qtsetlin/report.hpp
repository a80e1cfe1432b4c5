#pragma once

#include "qtsetlin/flags.hpp"
#include "qtsetlin/spectra.hpp"
#include "qtsetlin/suite.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qtsetlin {

using Json = nlohmann::ordered_json;

std::vector<std::string> state_labels_perm(int n);
std::vector<std::string> state_labels_word(const Composition& m);
std::vector<std::string> state_labels_flags(const FlagSpace& space);

Json matrix_to_json(const std::vector<std::string>& states, const Matrix& m);
Json vector_to_json(const std::vector<std::string>& states, const Vector& v);
Json catalog_to_json(const std::vector<EigenEntry>& catalog);
Json spectrum_to_json(const SpectrumReport& rep);
Json checks_to_json(const std::vector<CheckResult>& checks);

std::string matrix_to_csv(const std::vector<std::string>& states, const Matrix& m);
std::string vector_to_csv(const std::vector<std::string>& states, const Vector& v);
std::string catalog_to_csv(const std::vector<EigenEntry>& catalog);
std::string spectrum_to_csv(const SpectrumReport& rep);
std::string checks_to_csv(const std::vector<CheckResult>& checks);

}  // namespace qtsetlin

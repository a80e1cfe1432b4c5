#include "qtsetlin/report.hpp"

#include <sstream>

namespace qtsetlin {

namespace {

// Quotes a CSV field when it contains a separator.
std::string field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::vector<std::string> state_labels_perm(int n) {
    std::vector<std::string> out;
    for (const auto& p : all_permutations(n)) out.push_back(seq_to_string(p));
    return out;
}

std::vector<std::string> state_labels_word(const Composition& m) {
    std::vector<std::string> out;
    for (const auto& w : all_words(m)) out.push_back(seq_to_string(w));
    return out;
}

std::vector<std::string> state_labels_flags(const FlagSpace& space) {
    std::vector<std::string> out;
    for (const auto& f : space.states()) out.push_back(to_string(f));
    return out;
}

Json matrix_to_json(const std::vector<std::string>& states, const Matrix& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        entries.push_back(std::move(row));
    }
    return Json{{"states", states}, {"entries", std::move(entries)}};
}

Json vector_to_json(const std::vector<std::string>& states, const Vector& v) {
    Json out = Json::object();
    for (std::size_t i = 0; i < v.size(); ++i) out[states[i]] = to_string(v[i]);
    return out;
}

Json catalog_to_json(const std::vector<EigenEntry>& catalog) {
    Json out = Json::array();
    for (const auto& e : catalog)
        out.push_back({{"label", e.label_string()}, {"value", to_string(e.value)}, {"predicted", e.predicted}});
    return out;
}

Json spectrum_to_json(const SpectrumReport& rep) {
    Json out = Json::array();
    for (const auto& e : rep.entries)
        out.push_back({{"label", e.label},
                       {"value", to_string(e.value)},
                       {"predicted", e.predicted},
                       {"computed", e.computed},
                       {"pass", e.pass}});
    return out;
}

Json checks_to_json(const std::vector<CheckResult>& checks) {
    Json out = Json::array();
    for (const auto& c : checks) {
        Json j{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        out.push_back(std::move(j));
    }
    return out;
}

std::string matrix_to_csv(const std::vector<std::string>& states, const Matrix& m) {
    std::ostringstream os;
    os << "state";
    for (const auto& s : states) os << ',' << field(s);
    os << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << field(states[i]);
        for (std::size_t j = 0; j < m.cols(); ++j) os << ',' << to_string(m(i, j));
        os << '\n';
    }
    return os.str();
}

std::string vector_to_csv(const std::vector<std::string>& states, const Vector& v) {
    std::ostringstream os;
    os << "state,value\n";
    for (std::size_t i = 0; i < v.size(); ++i) os << field(states[i]) << ',' << to_string(v[i]) << '\n';
    return os.str();
}

std::string catalog_to_csv(const std::vector<EigenEntry>& catalog) {
    std::ostringstream os;
    os << "label,value,predicted\n";
    for (const auto& e : catalog) os << field(e.label_string()) << ',' << to_string(e.value) << ',' << e.predicted << '\n';
    return os.str();
}

std::string spectrum_to_csv(const SpectrumReport& rep) {
    std::ostringstream os;
    os << "label,value,predicted,computed,pass\n";
    for (const auto& e : rep.entries)
        os << field(e.label) << ',' << to_string(e.value) << ',' << e.predicted << ',' << e.computed << ','
           << (e.pass ? "true" : "false") << '\n';
    return os.str();
}

std::string checks_to_csv(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    os << "name,pass,detail\n";
    for (const auto& c : checks) os << field(c.name) << ',' << (c.pass ? "true" : "false") << ',' << field(c.detail) << '\n';
    return os.str();
}

}  // namespace qtsetlin

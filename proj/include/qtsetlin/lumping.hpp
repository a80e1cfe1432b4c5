#pragma once

#include "qtsetlin/chains.hpp"
#include "qtsetlin/flags.hpp"

namespace qtsetlin {

// flags -> perms, 0/1 matrix sending each coset representative to its double coset.
Matrix proj_flags_to_perms(const FlagSpace& space);
// perms -> flags, pi -> q^{inv(pi)} * (sum of the cosets in [pi]).
Matrix incl_perms_to_flags(const FlagSpace& space);
// perms -> words, pi -> destd_m(pi).
Matrix proj_perms_to_words(const Composition& m);
// words -> perms, w -> sum over tau in S_m of q^{-inv(tau)} tau.std(w).
Matrix incl_words_to_perms(const Composition& m, const Scalar& q);

// y_i = x_i / q^{n-i} constant on each block of m.
bool is_m_compatible(const PermRates& r, const Composition& m);
WordRates map_rates_perm_to_word(const PermRates& r, const Composition& m);
PermRates map_rates_word_to_perm(const WordRates& r);

enum class Diagram {
    FlagsPermsProjection,  // T_flags P = P T_perm
    FlagsPermsInclusion,   // J T_flags = T_perm J
    PermsWordsProjection,  // T_perm P = P T_word
    PermsWordsInclusion,   // J T_perm = T_word J
};

const char* diagram_name(Diagram d);

// Flag diagrams use (n = rates size, p); word diagrams use the word rates and
// the compatible permutation rates derived from them.
bool check_commuting(Diagram d, const FlagRates& r);
bool check_commuting(Diagram d, const WordRates& r);

}  // namespace qtsetlin

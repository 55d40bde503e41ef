#pragma once

#include <cstddef>
#include <vector>

#include "speyer/poly.hpp"

namespace speyer {

// Finite rational sequence. The operators below apply the zero-padding
// convention a_{-1} = a_len = 0; the padding is part of the semantics, not
// stored.
using RSeq = std::vector<Rational>;

// b_k = a_k^2 - a_{k-1} a_{k+1}, same length as the input.
RSeq l_operator(const RSeq& s);

struct LogConcavityCheck {
    bool ok = true;
    int depth = 0;          // smallest failing depth when !ok
    std::size_t index = 0;  // failing position at that depth
};

// Entrywise nonnegativity of the first k iterates of the L operator.
// Sequences of length <= 2 are vacuously k-log-concave for every k.
LogConcavityCheck is_k_log_concave(const RSeq& s, int k);

struct TuranCheck {
    bool ok = true;
    std::size_t index = 0;  // first failing 4-window offset when !ok
};

// 4(a_k^2 - a_{k-1}a_{k+1})(a_{k+1}^2 - a_k a_{k+2})
//   >= (a_k a_{k+1} - a_{k-1} a_{k+2})^2
// over every full 4-window of the sequence. Throws for length < 4.
TuranCheck higher_turan(const RSeq& s);

// [g_{n,1}(t), ..., g_{n,n-1}(t)] by exact evaluation.
RSeq g_sequence(long n, const Rational& t);

// Coefficientwise L transform of a polynomial, conventions
// a_{-1} = a_{deg+1} = 0.
UniPoly l_transform_poly(const UniPoly& f);

}  // namespace speyer

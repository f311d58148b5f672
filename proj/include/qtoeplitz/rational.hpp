#pragma once

// Exact rational scalars. All verification paths run on these; the only
// floating-point code in the library is the benchmark kernel in bench.hpp.
//
// mpq_class keeps every value in lowest terms with a positive denominator,
// so equality is plain componentwise comparison.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtz {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "-3", "5/2", "0". Throws std::invalid_argument on anything else.
inline Rational rat_from_string(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_t v;
    mpq_init(v);
    if (mpq_set_str(v, s.c_str(), 10) != 0) {
        mpq_clear(v);
        throw std::invalid_argument("bad rational literal: '" + std::string(text) + "'");
    }
    if (mpz_sgn(mpq_denref(v)) == 0) {
        mpq_clear(v);
        throw std::invalid_argument("zero denominator in rational literal: '" + std::string(text) + "'");
    }
    mpq_canonicalize(v);
    Rational r(v);
    mpq_clear(v);
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace qtz

#pragma once

// Deterministic randomness. Every randomized sweep in the library draws from
// SplitMix64 substreams derived from one 64-bit seed, so a report is a pure
// function of (command, parameters, seed).
//
// Substream derivation (part of the reproducibility contract, see README):
//   state0 = mix64(seed ^ fnv1a64(label)) + index * 0x9E3779B97F4A7C15
// where mix64 is the SplitMix64 output finalizer and fnv1a64 the standard
// 64-bit FNV-1a hash of the label bytes.
//
// Rational draws come from the fixed alphabet, in this order:
//   0, 1, -1, 1/2, -1/2, 2, -2        (index = next() mod 7)

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "qtoeplitz/quat.hpp"
#include "qtoeplitz/rational.hpp"
#include "qtoeplitz/toeplitz.hpp"

namespace qtz {

inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 14695981039346656037ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t state) : s_(state) {}

    uint64_t next() {
        s_ += 0x9E3779B97F4A7C15ULL;
        return mix64(s_);
    }

    // Substream `index` of the stream named `label`, rooted at `seed`.
    static SplitMix64 derive(uint64_t seed, std::string_view label, uint64_t index = 0) {
        return SplitMix64(mix64(seed ^ fnv1a64(label)) + index * 0x9E3779B97F4A7C15ULL);
    }

  private:
    uint64_t s_;
};

inline const std::array<Rational, 7>& rational_alphabet() {
    static const std::array<Rational, 7> a = {rat(0),     rat(1),     rat(-1), rat(1, 2),
                                              rat(-1, 2), rat(2),     rat(-2)};
    return a;
}

inline Rational sample_rational(SplitMix64& g) {
    return rational_alphabet()[static_cast<size_t>(g.next() % 7)];
}

inline Quat<Rational> sample_quat(SplitMix64& g) {
    Rational c0 = sample_rational(g);
    Rational c1 = sample_rational(g);
    Rational c2 = sample_rational(g);
    Rational c3 = sample_rational(g);
    return Quat<Rational>(c0, c1, c2, c3);
}

inline Quat<Rational> sample_nonzero_quat(SplitMix64& g) {
    for (;;) {
        Quat<Rational> q = sample_quat(g);
        if (!is_zero(q)) return q;
    }
}

// Parameters drawn in index order a_{1-n}, ..., a_{n-1}.
inline ToeplitzMat<Rational> sample_toeplitz(SplitMix64& g, size_t n) {
    ToeplitzMat<Rational> t(n);
    for (long r = 1 - static_cast<long>(n); r <= static_cast<long>(n) - 1; ++r)
        t.param(r) = sample_quat(g);
    return t;
}

inline Mat<Rational> sample_dense(SplitMix64& g, size_t n) {
    Mat<Rational> m(n);
    for (size_t r = 0; r < n; ++r)
        for (size_t s = 0; s < n; ++s) m.at(r, s) = sample_quat(g);
    return m;
}

inline QVec<Rational> sample_vector(SplitMix64& g, size_t n) {
    QVec<Rational> v;
    v.reserve(n);
    for (size_t k = 0; k < n; ++k) v.push_back(sample_quat(g));
    return v;
}

}  // namespace qtz

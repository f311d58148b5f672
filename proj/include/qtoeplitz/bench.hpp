#pragma once

// Float-path kernels and the storage/throughput comparison behind
// `qtoeplitz bench`. The structured kernel walks the 2n-1 stored parameters;
// the dense kernel reads all n^2 materialized entries. Verification never
// touches this path; correctness is spot-checked against the exact kernels.

#include <chrono>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtoeplitz/rng.hpp"
#include "qtoeplitz/toeplitz.hpp"

namespace qtz {

inline QVec<double> matvec_structured(const ToeplitzMat<double>& t, const QVec<double>& v) {
    const size_t n = t.n();
    const auto& par = t.params();  // index r - s + (n-1)
    QVec<double> out(n, Quat<double>(0.0, 0.0, 0.0, 0.0));
    for (size_t r = 0; r < n; ++r) {
        Quat<double> acc(0.0, 0.0, 0.0, 0.0);
        for (size_t s = 0; s < n; ++s) acc += par[r - s + n - 1] * v[s];
        out[r] = acc;
    }
    return out;
}

inline QVec<double> matvec_dense(const Mat<double>& a, const QVec<double>& v) {
    const size_t n = a.n();
    QVec<double> out(n, Quat<double>(0.0, 0.0, 0.0, 0.0));
    for (size_t r = 0; r < n; ++r) {
        Quat<double> acc(0.0, 0.0, 0.0, 0.0);
        for (size_t s = 0; s < n; ++s) acc += a.at(r, s) * v[s];
        out[r] = acc;
    }
    return out;
}

inline Quat<double> to_double(const Quat<Rational>& q) {
    return {to_double(q.a0), to_double(q.a1), to_double(q.a2), to_double(q.a3)};
}

inline ToeplitzMat<double> sample_toeplitz_double(SplitMix64& g, size_t n) {
    ToeplitzMat<double> t(n);
    for (long r = 1 - static_cast<long>(n); r <= static_cast<long>(n) - 1; ++r)
        t.param(r) = to_double(sample_quat(g));
    return t;
}

struct BenchRow {
    size_t n = 0;
    size_t reps = 0;
    double structured_ms = 0.0;
    double dense_ms = 0.0;
    double speedup = 0.0;            // dense_ms / structured_ms
    size_t structured_params = 0;    // 2n-1
    size_t dense_entries = 0;        // n^2
    double storage_ratio = 0.0;      // (2n-1) / n^2
};

inline BenchRow bench_matvec(size_t n, size_t reps, uint64_t seed) {
    SplitMix64 g = SplitMix64::derive(seed, "bench.matvec", n);
    ToeplitzMat<double> t = sample_toeplitz_double(g, n);
    QVec<double> v;
    v.reserve(n);
    for (size_t k = 0; k < n; ++k) v.push_back(to_double(sample_quat(g)));
    Mat<double> dense = t.to_dense();

    volatile double sink = 0.0;
    auto t0 = std::chrono::steady_clock::now();
    for (size_t r = 0; r < reps; ++r) sink = sink + matvec_structured(t, v)[n - 1].a0;
    auto t1 = std::chrono::steady_clock::now();
    for (size_t r = 0; r < reps; ++r) sink = sink + matvec_dense(dense, v)[n - 1].a0;
    auto t2 = std::chrono::steady_clock::now();

    BenchRow row;
    row.n = n;
    row.reps = reps;
    row.structured_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.dense_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    row.speedup = row.structured_ms > 0 ? row.dense_ms / row.structured_ms : 0.0;
    row.structured_params = 2 * n - 1;
    row.dense_entries = n * n;
    row.storage_ratio = static_cast<double>(2 * n - 1) / static_cast<double>(n * n);
    return row;
}

// Largest componentwise |float - exact| over `trials` seeded structured
// multiplications at size n. Alphabet inputs are dyadic, so this is exact
// binary arithmetic and the error should be identically zero.
inline double float_vs_exact_error(size_t n, size_t trials, uint64_t seed) {
    double worst = 0.0;
    for (size_t t = 0; t < trials; ++t) {
        SplitMix64 g = SplitMix64::derive(seed, "bench.agreement", t);
        ToeplitzMat<Rational> exact = sample_toeplitz(g, n);
        QVec<Rational> v = sample_vector(g, n);
        ToeplitzMat<double> fl(n);
        for (long r = 1 - static_cast<long>(n); r <= static_cast<long>(n) - 1; ++r)
            fl.param(r) = to_double(exact.param(r));
        QVec<double> vf;
        for (const auto& q : v) vf.push_back(to_double(q));
        QVec<Rational> want = matvec(exact, v);
        QVec<double> got = matvec_structured(fl, vf);
        for (size_t r = 0; r < n; ++r) {
            Quat<double> w = to_double(want[r]);
            worst = std::max(worst, std::fabs(got[r].a0 - w.a0));
            worst = std::max(worst, std::fabs(got[r].a1 - w.a1));
            worst = std::max(worst, std::fabs(got[r].a2 - w.a2));
            worst = std::max(worst, std::fabs(got[r].a3 - w.a3));
        }
    }
    return worst;
}

inline nlohmann::ordered_json bench_report(const std::vector<size_t>& sizes, size_t reps,
                                           uint64_t seed) {
    nlohmann::ordered_json out;
    out["command"] = "bench";
    out["reps"] = reps;
    out["seed"] = seed;
    out["rows"] = nlohmann::ordered_json::array();
    for (size_t n : sizes) {
        BenchRow row = bench_matvec(n, reps, seed);
        out["rows"].push_back({{"n", row.n},
                               {"reps", row.reps},
                               {"structured_ms", row.structured_ms},
                               {"dense_ms", row.dense_ms},
                               {"dense_over_structured", row.speedup},
                               {"structured_params", row.structured_params},
                               {"dense_entries", row.dense_entries},
                               {"storage_ratio", row.storage_ratio}});
    }
    out["float_vs_exact_abs_error_n8"] = float_vs_exact_error(8, 50, seed);
    return out;
}

}  // namespace qtz

#pragma once

// The parameter families G_{p,q}[A]: Toeplitz matrices with entries in a
// scalar algebra A whose diagonals satisfy p a_{r-n} = q a_r for r = 1..n-1.
// (1,1) gives the circulants, (0,1) the upper triangular and (1,0) the lower
// triangular Toeplitz matrices. The family is a left algebra; this module
// carries the membership test, an exact basis of the solution space, closure
// and equality checks, and the maximality probe.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtoeplitz/quat.hpp"
#include "qtoeplitz/rng.hpp"
#include "qtoeplitz/spanengine.hpp"
#include "qtoeplitz/subalg.hpp"
#include "qtoeplitz/toeplitz.hpp"

namespace qtz {

struct GpqSpec {
    size_t n;
    Subalg algebra;
    Quat<Rational> p, q;

    GpqSpec(size_t n_, Subalg a, Quat<Rational> p_, Quat<Rational> q_)
        : n(n_), algebra(std::move(a)), p(std::move(p_)), q(std::move(q_)) {
        if (n == 0) throw std::invalid_argument("family size must be positive");
        if (is_zero(p) && is_zero(q))
            throw std::invalid_argument("(p, q) = (0, 0) is rejected: the wrap constraint "
                                        "degenerates and the family is no longer product-closed");
        Subalg cm = commutant_of_algebra(algebra);
        if (!cm.contains(p) || !cm.contains(q))
            throw std::invalid_argument("p and q must lie in the commutant of A");
    }

    std::string key() const {
        return "n=" + std::to_string(n) + ";A=" + algebra.to_string() + ";p=" + to_string(p) +
               ";q=" + to_string(q);
    }
};

inline bool is_member(const ToeplitzMat<Rational>& t, const GpqSpec& spec) {
    if (t.n() != spec.n) throw std::invalid_argument("Toeplitz/family size mismatch");
    long n = static_cast<long>(spec.n);
    for (long r = 1 - n; r <= n - 1; ++r)
        if (!spec.algebra.contains(t.param(r))) return false;
    for (long r = 1; r <= n - 1; ++r)
        if (!(spec.p * t.param(r - n) == spec.q * t.param(r))) return false;
    return true;
}

// Real-linearly independent Toeplitz matrices spanning the family exactly:
// one block of free a_0 values running over a basis of A, then for each
// r = 1..n-1 a copy of the solution space of p a = q b over (a, b) in A x A.
inline std::vector<ToeplitzMat<Rational>> basis(const GpqSpec& spec) {
    std::vector<ToeplitzMat<Rational>> out;
    const auto alg_basis = spec.algebra.real_basis();
    const size_t d = alg_basis.size();
    for (const auto& u : alg_basis) {
        ToeplitzMat<Rational> t(spec.n);
        t.param(0) = u;
        out.push_back(std::move(t));
    }
    if (spec.n == 1) return out;

    // p * (sum x_i u_i) - q * (sum y_i u_i) = 0: four real equations in the
    // 2d unknowns (x, y).
    std::vector<RVec> rows(4, RVec(2 * d, Rational(0)));
    for (size_t i = 0; i < d; ++i) {
        Quat<Rational> pu = spec.p * alg_basis[i];
        Quat<Rational> qu = spec.q * alg_basis[i];
        rows[0][i] = pu.a0;
        rows[1][i] = pu.a1;
        rows[2][i] = pu.a2;
        rows[3][i] = pu.a3;
        rows[0][d + i] = -qu.a0;
        rows[1][d + i] = -qu.a1;
        rows[2][d + i] = -qu.a2;
        rows[3][d + i] = -qu.a3;
    }
    const auto solutions = nullspace_basis(std::move(rows), 2 * d);

    for (long r = 1; r <= static_cast<long>(spec.n) - 1; ++r) {
        for (const auto& sol : solutions) {
            Quat<Rational> a(Rational(0)), b(Rational(0));
            for (size_t i = 0; i < d; ++i) {
                a += scale(sol[i], alg_basis[i]);
                b += scale(sol[d + i], alg_basis[i]);
            }
            ToeplitzMat<Rational> t(spec.n);
            t.param(r - static_cast<long>(spec.n)) = a;
            t.param(r) = b;
            out.push_back(std::move(t));
        }
    }
    return out;
}

inline ToeplitzMat<Rational> toeplitz_real_combination(const std::vector<ToeplitzMat<Rational>>& basis,
                                                       const std::vector<Rational>& coeffs) {
    if (basis.empty() || basis.size() != coeffs.size())
        throw std::invalid_argument("combination arity mismatch");
    ToeplitzMat<Rational> out(basis[0].n());
    long n = static_cast<long>(out.n());
    for (size_t k = 0; k < basis.size(); ++k)
        for (long r = 1 - n; r <= n - 1; ++r)
            out.param(r) += scale(coeffs[k], basis[k].param(r));
    return out;
}

inline ToeplitzMat<Rational> sample_member(const std::vector<ToeplitzMat<Rational>>& basis,
                                           SplitMix64& g) {
    std::vector<Rational> coeffs;
    coeffs.reserve(basis.size());
    for (size_t k = 0; k < basis.size(); ++k) coeffs.push_back(sample_rational(g));
    return toeplitz_real_combination(basis, coeffs);
}

// --- closure (sampled) ---

struct ClosureReport {
    size_t trials = 0;
    bool ok = true;
    std::string failure;  // description of the first failing triple, if any
};

inline ClosureReport closure_check(const GpqSpec& spec, size_t trials, uint64_t seed) {
    ClosureReport rep;
    rep.trials = trials;
    const auto bas = basis(spec);
    const bool full = spec.algebra.kind() == Subalg::Kind::Full;
    for (size_t t = 0; t < trials; ++t) {
        SplitMix64 g = SplitMix64::derive(seed, "gpq.closure:" + spec.key(), t);
        ToeplitzMat<Rational> a = sample_member(bas, g);
        ToeplitzMat<Rational> b = sample_member(bas, g);
        Mat<Rational> prod = a.to_dense() * b.to_dense();
        if (!is_toeplitz(prod)) {
            rep.ok = false;
            rep.failure = "product not Toeplitz at trial " + std::to_string(t) + ": A=" +
                          to_text(a) + " B=" + to_text(b);
            return rep;
        }
        if (!is_member(ToeplitzMat<Rational>::from_dense(prod), spec)) {
            rep.ok = false;
            rep.failure = "product left the family at trial " + std::to_string(t) + ": A=" +
                          to_text(a) + " B=" + to_text(b);
            return rep;
        }
        // Left scalar closure: arbitrary quaternions when A = H (p, q are then
        // real and central), real scalars otherwise.
        Quat<Rational> s = full ? sample_quat(g) : Quat<Rational>(sample_rational(g));
        Mat<Rational> scaled = lscale(s, a.to_dense());
        if (!is_toeplitz(scaled) ||
            !is_member(ToeplitzMat<Rational>::from_dense(scaled), spec)) {
            rep.ok = false;
            rep.failure = "left scaling left the family at trial " + std::to_string(t) + ": s=" +
                          to_string(s) + " A=" + to_text(a);
            return rep;
        }
    }
    return rep;
}

// Exhaustive product closure at the level of the whole space: every product
// of two basis elements re-expands in the basis.
inline bool closure_rank_test(const GpqSpec& spec) {
    const auto bas = basis(spec);
    std::vector<Mat<Rational>> dense;
    dense.reserve(bas.size());
    for (const auto& t : bas) dense.push_back(t.to_dense());
    RealSpan span = span_of(dense);
    for (const auto& a : dense)
        for (const auto& b : dense)
            if (!span.contains(a * b)) return false;
    return true;
}

// --- equality ---

inline void check_comparable(const GpqSpec& s1, const GpqSpec& s2) {
    if (s1.n != s2.n || s1.algebra != s2.algebra)
        throw std::invalid_argument("families live over different ambient data");
}

// The scalar criterion p q2 = p2 q, in the written multiplication order.
inline bool equality_criterion(const GpqSpec& s1, const GpqSpec& s2) {
    check_comparable(s1, s2);
    return s1.p * s2.q == s2.p * s1.q;
}

// Ground truth: the two solution spaces coincide as real subspaces.
inline bool sets_equal(const GpqSpec& s1, const GpqSpec& s2) {
    check_comparable(s1, s2);
    std::vector<Mat<Rational>> d1, d2;
    for (const auto& t : basis(s1)) d1.push_back(t.to_dense());
    for (const auto& t : basis(s2)) d2.push_back(t.to_dense());
    return span_of(d1) == span_of(d2);
}

// Zero diagonal, q above it, p below it.
inline ToeplitzMat<Rational> witness_matrix(const GpqSpec& spec) {
    ToeplitzMat<Rational> t(spec.n);
    for (long r = 1; r <= static_cast<long>(spec.n) - 1; ++r) {
        t.param(r) = spec.p;
        t.param(-r) = spec.q;
    }
    return t;
}

// --- maximality ---

inline bool maximality_criterion(const GpqSpec& spec) {
    return commutant_of_set({spec.p, spec.q}) == spec.algebra;
}

enum class Ambient { EntriesInA, FullH };

struct MaximalityCounterexample {
    ToeplitzMat<Rational> extension;  // the adjoined non-member
    size_t family_dim;
    size_t closure_dim;
};

namespace detail {

inline bool entries_in(const Mat<Rational>& m, const Subalg& a) {
    for (const auto& q : m.entries())
        if (!a.contains(q)) return false;
    return true;
}

// Worklist closure that aborts as soon as a generated matrix leaves the
// ambient Toeplitz space. Returns the closed span if it stayed inside.
inline std::optional<RealSpan> closure_within(const std::vector<Mat<Rational>>& gens,
                                              ScalarMode mode, Ambient ambient,
                                              const Subalg& alg) {
    RealSpan span(gens[0].n());
    std::vector<Mat<Rational>> kept;
    // LIFO worklist: the adjoined extension sits at the back of gens, so it
    // is processed first and a non-Toeplitz product aborts the trial early.
    std::vector<Mat<Rational>> queue(gens.begin(), gens.end());
    while (!queue.empty()) {
        Mat<Rational> m = std::move(queue.back());
        queue.pop_back();
        if (!is_toeplitz(m)) return std::nullopt;
        if (ambient == Ambient::EntriesInA && !entries_in(m, alg)) return std::nullopt;
        if (!span.insert(m)) continue;
        if (mode == ScalarMode::Quaternion) {
            queue.push_back(lscale(Quat<Rational>::unit_i(), m));
            queue.push_back(lscale(Quat<Rational>::unit_j(), m));
            queue.push_back(lscale(Quat<Rational>::unit_k(), m));
        }
        for (const auto& b : kept) {
            queue.push_back(m * b);
            queue.push_back(b * m);
        }
        queue.push_back(m * m);
        kept.push_back(std::move(m));
    }
    return span;
}

}  // namespace detail

// Bounded empirical search for a proper left-algebra extension of the family
// inside the ambient Toeplitz space. Candidates are non-members X: in the
// FullH ambient, even trials draw X from the enlarged family over {p,q}'
// (the natural candidate when {p,q}' strictly contains A), odd trials draw X
// uniformly from the ambient alphabet; in the EntriesInA ambient all draws
// keep their entries in A. Returns the first extension whose generated left
// algebra stays Toeplitz and strictly contains the family.
inline std::optional<MaximalityCounterexample> maximality_falsify(const GpqSpec& spec,
                                                                  Ambient ambient, size_t trials,
                                                                  uint64_t seed,
                                                                  size_t max_n = 4) {
    if (spec.n > max_n) throw std::invalid_argument("maximality search bound exceeded");
    const auto bas = basis(spec);
    std::vector<Mat<Rational>> base_dense;
    for (const auto& t : bas) base_dense.push_back(t.to_dense());
    const size_t family_dim = span_of(base_dense).dim();

    const Subalg enlarged_alg = commutant_of_set({spec.p, spec.q});
    std::vector<ToeplitzMat<Rational>> enlarged_basis;
    if (ambient == Ambient::FullH && enlarged_alg != spec.algebra)
        enlarged_basis = basis(GpqSpec(spec.n, enlarged_alg, spec.p, spec.q));

    const ScalarMode mode =
        spec.algebra.kind() == Subalg::Kind::Full ? ScalarMode::Quaternion : ScalarMode::Real;
    const std::string label = "gpq.maximality:" + spec.key() + (ambient == Ambient::FullH ? ":H" : ":A");

    for (size_t t = 0; t < trials; ++t) {
        SplitMix64 g = SplitMix64::derive(seed, label, t);
        std::optional<ToeplitzMat<Rational>> x;
        for (int attempt = 0; attempt < 16 && !x; ++attempt) {
            ToeplitzMat<Rational> cand(spec.n);
            if (!enlarged_basis.empty() && t % 2 == 0) {
                cand = sample_member(enlarged_basis, g);
            } else if (ambient == Ambient::EntriesInA) {
                const auto alg_basis = spec.algebra.real_basis();
                long n = static_cast<long>(spec.n);
                for (long r = 1 - n; r <= n - 1; ++r) {
                    Quat<Rational> v(Rational(0));
                    for (const auto& u : alg_basis) v += scale(sample_rational(g), u);
                    cand.param(r) = v;
                }
            } else {
                cand = sample_toeplitz(g, spec.n);
            }
            if (!is_member(cand, spec)) x = std::move(cand);
        }
        if (!x) continue;

        std::vector<Mat<Rational>> gens = base_dense;
        gens.push_back(x->to_dense());
        auto closed = detail::closure_within(gens, mode, ambient, spec.algebra);
        if (closed && closed->dim() > family_dim)
            return MaximalityCounterexample{*x, family_dim, closed->dim()};
    }
    return std::nullopt;
}

}  // namespace qtz

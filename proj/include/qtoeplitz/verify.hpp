#pragma once

// The verification suite behind `qtoeplitz verify-all` and the individual
// check-* subcommands. Each check exercises one structural statement with
// exact arithmetic and returns a CheckRecord; expected statuses make the
// deliberate literal falsifications first-class results instead of failures.

#include <chrono>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qtoeplitz/gpq.hpp"
#include "qtoeplitz/hspace.hpp"
#include "qtoeplitz/qmat.hpp"
#include "qtoeplitz/quat.hpp"
#include "qtoeplitz/report.hpp"
#include "qtoeplitz/rng.hpp"
#include "qtoeplitz/spanengine.hpp"
#include "qtoeplitz/subalg.hpp"
#include "qtoeplitz/toeplitz.hpp"

namespace qtz {

namespace verify_detail {

using Q = Quat<Rational>;
using M = Mat<Rational>;
using TQ = ToeplitzMat<Rational>;

inline Q qi() { return Q::unit_i(); }
inline Q qj() { return Q::unit_j(); }
inline Q qk() { return Q::unit_k(); }
inline Q qr(long n, long d = 1) { return Q(rat(n, d)); }

// Wraps a check body with wall-clock timing and exception capture.
inline CheckRecord run(std::string id, std::string claim, CheckStatus expected,
                       const std::function<void(CheckRecord&)>& body) {
    CheckRecord rec;
    rec.id = std::move(id);
    rec.claim = std::move(claim);
    rec.expected = expected;
    rec.witness = nlohmann::ordered_json::object();
    auto t0 = std::chrono::steady_clock::now();
    try {
        rec.status = CheckStatus::Verified;  // body may override
        body(rec);
    } catch (const std::exception& e) {
        rec.status = CheckStatus::Error;
        rec.witness["exception"] = e.what();
    }
    rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

inline void fail(CheckRecord& rec, const std::string& why) {
    if (rec.status == CheckStatus::Verified) {
        rec.status = CheckStatus::Error;
        rec.witness["failure"] = why;
    }
}

inline void require(CheckRecord& rec, bool ok, const std::string& why) {
    if (!ok) fail(rec, why);
}

inline Q sample_pure_direction(SplitMix64& g) {
    for (;;) {
        Q v(rat(0), sample_rational(g), sample_rational(g), sample_rational(g));
        if (!is_zero(v)) return v;
    }
}

inline Q sample_in_algebra(SplitMix64& g, const Subalg& alg) {
    Q v(rat(0));
    for (const auto& u : alg.real_basis()) v += scale(sample_rational(g), u);
    return v;
}

inline Q sample_nonzero_in_algebra(SplitMix64& g, const Subalg& alg) {
    for (;;) {
        Q v = sample_in_algebra(g, alg);
        if (!is_zero(v)) return v;
    }
}

inline TQ sample_algebra_toeplitz(SplitMix64& g, size_t n, const Subalg& alg) {
    TQ t(n);
    for (long r = 1 - static_cast<long>(n); r <= static_cast<long>(n) - 1; ++r)
        t.param(r) = sample_in_algebra(g, alg);
    return t;
}

}  // namespace verify_detail

// The family grid exercised by the checks: every combination of the four
// sample algebras with the five (p, q) choices that satisfies p, q in A'.
struct GridEntry {
    Subalg algebra;
    Quat<Rational> p, q;
};

inline std::vector<Subalg> grid_algebras() {
    return {Subalg::reals(), Subalg::plane(Quat<Rational>::unit_i()),
            Subalg::plane(parse_quat("2i+3j-k")), Subalg::full()};
}

inline std::vector<std::pair<Quat<Rational>, Quat<Rational>>> grid_pq() {
    using verify_detail::qi;
    using verify_detail::qj;
    using verify_detail::qr;
    return {{qr(1), qr(1)},
            {qr(0), qr(1)},
            {qr(1), qr(0)},
            {qi(), qr(3) * qi()},
            {qi(), qj()}};
}

inline std::vector<GpqSpec> grid_specs(size_t n) {
    std::vector<GpqSpec> specs;
    for (const auto& alg : grid_algebras()) {
        Subalg cm = commutant_of_algebra(alg);
        for (const auto& [p, q] : grid_pq())
            if (cm.contains(p) && cm.contains(q)) specs.emplace_back(n, alg, p, q);
    }
    return specs;
}

// --- scalar level ---

inline CheckRecord check_versor_table() {
    using namespace verify_detail;
    return run("versor.table",
               "ij=k, jk=i, ki=j, ji=-k, kj=-i, ik=-j and i^2=j^2=k^2=ijk=-1",
               CheckStatus::Verified, [](CheckRecord& rec) {
                   const Q one = Q::one(), i = qi(), j = qj(), k = qk();
                   struct Row {
                       Q a, b, expect;
                       const char* label;
                   };
                   const Row table[] = {
                       {i, j, k, "ij=k"},   {j, k, i, "jk=i"},   {k, i, j, "ki=j"},
                       {j, i, -k, "ji=-k"}, {k, j, -i, "kj=-i"}, {i, k, -j, "ik=-j"},
                       {i, i, -one, "i^2=-1"}, {j, j, -one, "j^2=-1"}, {k, k, -one, "k^2=-1"},
                   };
                   for (const auto& row : table) require(rec, row.a * row.b == row.expect, row.label);
                   require(rec, i * j * k == -one, "ijk=-1");
                   for (const auto& v : {one, i, j, k})
                       require(rec, one * v == v && v * one == v, "1 is the identity");
                   rec.trials = 18;
               });
}

inline CheckRecord check_cayley_dickson(size_t trials, uint64_t seed) {
    using namespace verify_detail;
    return run("quat.cayley_dickson",
               "every quaternion decomposes uniquely as g0 + g1 j with g0, g1 in span{1, i}",
               CheckStatus::Verified, [&](CheckRecord& rec) {
                   rec.trials = trials;
                   SplitMix64 g = SplitMix64::derive(seed, "verify.cayley_dickson");
                   for (size_t t = 0; t < trials; ++t) {
                       Q a = sample_quat(g);
                       auto [g0, g1] = cd_split(a);
                       Q c0(g0.re, g0.im, rat(0), rat(0));
                       Q c1(g1.re, g1.im, rat(0), rat(0));
                       require(rec, c0 + c1 * qj() == a, "recomposition g0 + g1 j");
                       require(rec, g0.re == a.a0 && g0.im == a.a1 && g1.re == a.a2 && g1.im == a.a3,
                               "coordinates are forced, hence unique");
                       if (rec.status != CheckStatus::Verified) return;
                   }
               });
}

inline CheckRecord check_binomial_noncommutativity() {
    using namespace verify_detail;
    return run("quat.binomial",
               "(a+b)^2 = a^2 + 2ab + b^2 admits a quaternion counterexample (a=i, b=j)",
               CheckStatus::Verified, [](CheckRecord& rec) {
                   Q lhs = (qi() + qj()) * (qi() + qj());
                   Q rhs = qi() * qi() + qr(2) * (qi() * qj()) + qj() * qj();
                   require(rec, lhs == qr(-2), "(i+j)^2 = -2");
                   require(rec, rhs == Q(rat(-2), rat(0), rat(0), rat(2)), "i^2+2ij+j^2 = -2+2k");
                   require(rec, lhs != rhs, "the two sides differ");
                   rec.witness["lhs"] = to_string(lhs);
                   rec.witness["rhs"] = to_string(rhs);
               });
}

inline CheckRecord check_sphere_roots(size_t count) {
    using namespace verify_detail;
    return run("quat.sphere_roots",
               "x^2 + 1 = 0 has infinitely many roots: every rational point of the pure unit "
               "sphere is one",
               CheckStatus::Verified, [&](CheckRecord& rec) {
                   std::set<std::string> distinct;
                   for (long n1 = -6; n1 <= 6 && distinct.size() < count; ++n1)
                       for (long d1 = 1; d1 <= 4 && distinct.size() < count; ++d1)
                           for (long n2 = -6; n2 <= 6 && distinct.size() < count; ++n2)
                               for (long d2 = 1; d2 <= 4 && distinct.size() < count; ++d2) {
                                   Rational u = rat(n1, d1), v = rat(n2, d2);
                                   Rational den = u * u + v * v + 1;
                                   Q p(rat(0), Rational(2 * u / den), Rational(2 * v / den),
                                       Rational((u * u + v * v - 1) / den));
                                   require(rec, is_root_of_x2_plus_1(p),
                                           "stereographic point squares to -1");
                                   distinct.insert(to_string(p));
                               }
                   rec.trials = distinct.size();
                   require(rec, distinct.size() >= count, "enough distinct roots found");
                   rec.witness["distinct_roots"] = distinct.size();
               });
}

inline CheckRecord check_complex_rep(size_t trials, uint64_t seed) {
    using namespace verify_detail;
    return run("quat.complex_rep",
               "the 2x2 complex representation [[w, z], [-conj z, conj w]] is an injective "
               "ring homomorphism",
               CheckStatus::Verified, [&](CheckRecord& rec) {
                   rec.trials = trials;
                   SplitMix64 g = SplitMix64::derive(seed, "verify.complex_rep");
                   auto cmul22 = [](const Complex2x2& a, const Complex2x2& b) {
                       Complex2x2 c;
                       for (int r = 0; r < 2; ++r)
                           for (int s = 0; s < 2; ++s)
                               c.e[static_cast<size_t>(2 * r + s)] =
                                   a.at(r, 0) * b.at(0, s) + a.at(r, 1) * b.at(1, s);
                       return c;
                   };
                   for (size_t t = 0; t < trials; ++t) {
                       Q a = sample_quat(g), b = sample_quat(g);
                       require(rec, cmul22(to_complex2(a), to_complex2(b)) == to_complex2(a * b),
                               "multiplicative");
                       require(rec, quat_from_complex2(to_complex2(a)) == a,
                               "injective (left inverse exists)");
                       if (rec.status != CheckStatus::Verified) return;
                   }
               });
}

inline CheckRecord check_inner_product(size_t trials, uint64_t seed) {
    using namespace verify_detail;
    return run("hspace.inner",
               "<x,y> = sum conj(y_k) x_k is positive definite and conjugate symmetric, the "
               "standard basis is orthonormal, and <qx,y> = q<x,y> whenever y is real-entried",
               CheckStatus::Verified, [&](CheckRecord& rec) {
                   rec.trials = trials;
                   auto e = std_basis<Rational>(4);
                   for (size_t r = 0; r < 4; ++r)
                       for (size_t s = 0; s < 4; ++s)
                           require(rec, inner(e[r], e[s]) == (r == s ? Q::one() : Q(rat(0))),
                                   "orthonormal standard basis");
                   SplitMix64 g = SplitMix64::derive(seed, "verify.inner");
                   for (size_t t = 0; t < trials; ++t) {
                       QVec<Rational> x = sample_vector(g, 3), y = sample_vector(g, 3);
                       require(rec, inner(y, x) == conj(inner(x, y)), "conjugate symmetry");
                       Q xx = inner(x, x);
                       require(rec, is_real(xx) && xx.a0 >= 0, "positive");
                       require(rec, (xx.a0 == 0) == (x == QVec<Rational>(3, Q(rat(0)))), "definite");
                       QVec<Rational> yr;
                       for (int s = 0; s < 3; ++s) yr.emplace_back(sample_rational(g));
                       Q q = sample_quat(g);
                       require(rec, inner(lscale(q, x), yr) == q * inner(x, yr),
                               "left homogeneity over real-entried y");
                       if (rec.status != CheckStatus::Verified) return;
                   }
                   QVec<Rational> wx{qj()}, wy{qk()};
                   require(rec, inner(lscale(qi(), wx), wy) != qi() * inner(wx, wy),
                           "homogeneity really does need the real-entried regime");
                   rec.witness["order_caveat"] =
                       "with x=(j), y=(k), q=i: <qx,y> = 1 but q<x,y> = -1; left homogeneity "
                       "holds only against real-entried second factors";
               });
}

inline CheckRecord check_joint_annihilator(size_t trials, uint64_t seed) {
    using namespace verify_detail;
    return run("scalar.annihilator", "if p a = q a = 0 with (p, q) != (0, 0) then a = 0",
               CheckStatus::Verified, [&](CheckRecord& rec) {
                   rec.trials = trials;
                   SplitMix64 g = SplitMix64::derive(seed, "verify.annihilator");
                   for (size_t t = 0; t < trials; ++t) {
                       Q p = sample_quat(g), q = sample_quat(g);
                       // cover the p = 0 and q = 0 edges deterministically
                       if (t % 5 == 3) p = Q(rat(0));
                       if (t % 5 == 4) q = Q(rat(0));
                       if (is_zero(p) && is_zero(q)) p = Q::one();
                       Q a = sample_nonzero_quat(g);
                       require(rec, !(is_zero(p * a) && is_zero(q * a)),
                               "nonzero a survives one of the two products");
                       if (rec.status != CheckStatus::Verified) return;
                   }
               });
}

// --- Toeplitz structure ---

inline CheckRecord check_displacement_forward(size_t n_lo, size_t n_hi, size_t trials,
                                              uint64_t seed) {
    using namespace verify_detail;
    return run("toeplitz.displacement.forward",
               "for Toeplitz A: A - S A S* = x (x) e0 + e0 (x) y with x = (a_0..a_{n-1}) and "
               "y = (0, conj a_{-1}, ..., conj a_{1-n})",
               CheckStatus::Verified, [&](CheckRecord& rec) {
                   rec.trials = trials;
                   for (size_t t = 0; t < trials; ++t) {
                       size_t n = n_lo + t % (n_hi - n_lo + 1);
                       SplitMix64 g = SplitMix64::derive(seed, "verify.displacement.forward", t);
                       TQ s = sample_toeplitz(g, n);
                       auto [x, y] = displacement_vectors(s);
                       M d = displacement(s.to_dense());
                       auto e0 = std_basis_vector<Rational>(n, 0);
                       require(rec, d == outer(x, e0) + outer(e0, y), "displacement identity");
                       require(rec, is_displacement_rank_one_bordered(s.to_dense()),
                               "support on row 0 and column 0");
                       if (rec.status != CheckStatus::Verified) {
                           rec.witness["at_trial"] = t;
                           rec.witness["matrix"] = to_text(s);
                           return;
                       }
                   }
                   rec.witness["sizes"] = {n_lo, n_hi};
               });
}

inline CheckRecord check_displacement_equivalence(size_t n_lo, size_t n_hi, size_t trials,
                                                  uint64_t seed) {
    using namespace verify_detail;
    return run("toeplitz.displacement.equivalence",
               "A - S A S* vanishing outside row 0 and column 0 characterizes the Toeplitz "
               "matrices",
               CheckStatus::Verified, [&](CheckRecord& rec) {
                   rec.trials = trials;
                   size_t toeplitz_seen = 0, other_seen = 0;
                   for (size_t t = 0; t < trials; ++t) {
                       size_t n = n_lo + t % (n_hi - n_lo + 1);
                       SplitMix64 g = SplitMix64::derive(seed, "verify.displacement.equiv", t);
                       M a(n);
                       switch (t % 3) {
                           case 0: a = sample_dense(g, n); break;
                           case 1: a = sample_toeplitz(g, n).to_dense(); break;
                           default:
                               a = sample_toeplitz(g, n).to_dense();
                               a.at(n - 1, n - 1) += Q::one();
                               break;
                       }
                       bool tp = is_toeplitz(a);
                       ++(tp ? toeplitz_seen : other_seen);
                       if (is_displacement_rank_one_bordered(a) != tp) {
                           fail(rec, "bordered-displacement predicate disagrees with the "
                                     "Toeplitz predicate");
                           rec.witness["at_trial"] = t;
                           return;
                       }
                   }
                   rec.witness["toeplitz_instances"] = toeplitz_seen;
                   rec.witness["non_toeplitz_instances"] = other_seen;
               });
}

inline CheckRecord check_toeplitz_subspace(size_t n_lo, size_t n_hi, size_t trials, uint64_t seed) {
    using namespace verify_detail;
    return run("toeplitz.subspace",
               "Toeplitz matrices are closed under addition and left scalar multiplication",
               CheckStatus::Verified, [&](CheckRecord& rec) {
                   rec.trials = trials;
                   for (size_t t = 0; t < trials; ++t) {
                       size_t n = n_lo + t % (n_hi - n_lo + 1);
                       SplitMix64 g = SplitMix64::derive(seed, "verify.subspace", t);
                       M a = sample_toeplitz(g, n).to_dense();
                       M b = sample_toeplitz(g, n).to_dense();
                       Q q = sample_quat(g);
                       require(rec, is_toeplitz(a + lscale(q, b)), "A + q B stays Toeplitz");
                       if (rec.status != CheckStatus::Verified) return;
                   }
               });
}

inline CheckRecord check_product_criterion_exhaustive_n2() {
    using namespace verify_detail;
    return run("toeplitz.product_criterion.exhaustive",
               "A B is Toeplitz iff a_r b_{s-n} = a_{r-n} b_s for r, s = 1..n-1 (exhaustive "
               "over the parameter alphabet {0, 1, i, j, k} at n = 2)",
               CheckStatus::Verified, [](CheckRecord& rec) {
                   const std::vector<Q> alphabet{Q(rat(0)), Q::one(), qi(), qj(), qk()};
                   std::vector<TQ> all;
                   for (const auto& a : alphabet)
                       for (const auto& b : alphabet)
                           for (const auto& c : alphabet) all.push_back(TQ(2, {a, b, c}));
                   size_t checked = 0, toeplitz_products = 0;
                   for (const auto& ta : all)
                       for (const auto& tb : all) {
                           bool crit = product_criterion(ta, tb);
                           bool tp = is_toeplitz(ta.to_dense() * tb.to_dense());
                           if (tp) ++toeplitz_products;
                           if (crit != tp) {
                               fail(rec, "criterion mismatch");
                               rec.witness["a"] = to_text(ta);
                               rec.witness["b"] = to_text(tb);
                               return;
                           }
                           ++checked;
                       }
                   rec.trials = checked;
                   rec.witness["pairs"] = checked;
                   rec.witness["toeplitz_products"] = toeplitz_products;
               });
}

inline CheckRecord check_product_criterion_random(size_t n_lo, size_t n_hi, size_t trials,
                                                  uint64_t seed) {
    using namespace verify_detail;
    return run("toeplitz.product_criterion.random",
               "A B is Toeplitz iff a_r b_{s-n} = a_{r-n} b_s for r, s = 1..n-1 (seeded random "
               "parameter pairs)",
               CheckStatus::Verified, [&](CheckRecord& rec) {
                   rec.trials = trials;
                   size_t both_true = 0;
                   for (size_t t = 0; t < trials; ++t) {
                       size_t n = n_lo + t % (n_hi - n_lo + 1);
                       SplitMix64 g = SplitMix64::derive(seed, "verify.criterion.random", t);
                       TQ a = sample_toeplitz(g, n), b = sample_toeplitz(g, n);
                       if (t % 4 == 0) {
                           // plant wrap-tied pairs so the criterion-true branch is exercised
                           for (long r = 1; r < static_cast<long>(n); ++r) {
                               a.param(r - static_cast<long>(n)) = a.param(r);
                               b.param(r - static_cast<long>(n)) = b.param(r);
                           }
                       }
                       bool crit = product_criterion(a, b);
                       bool tp = is_toeplitz(a.to_dense() * b.to_dense());
                       if (crit && tp) ++both_true;
                       if (crit != tp) {
                           fail(rec, "criterion mismatch");
                           rec.witness["a"] = to_text(a);
                           rec.witness["b"] = to_text(b);
                           return;
                       }
                   }
                   rec.witness["criterion_true_instances"] = both_true;
               });
}

inline CheckRecord check_band_square() {
    using namespace verify_detail;
    return run("toeplitz.band_square",
               "the band matrix with i on the first subdiagonal and j on the first "
               "superdiagonal has a non-Toeplitz square for n >= 3",
               CheckStatus::Verified, [](CheckRecord& rec) {
                   for (size_t n = 3; n <= 5; ++n) {
                       TQ band(n);
                       band.param(1) = qi();
                       band.param(-1) = qj();
                       M sq = band.to_dense() * band.to_dense();
                       require(rec, !is_toeplitz(sq), "square is not Toeplitz");
                       require(rec, !product_criterion(band, band), "criterion detects it");
                       if (n == 3) {
                           require(rec, sq.at(0, 0) == -qk() && sq.at(1, 1) == Q(rat(0)) &&
                                            sq.at(2, 2) == qk(),
                                   "diagonal of the square runs -k, 0, k");
                           rec.witness["square_n3"] = to_text(sq);
                       }
                   }
                   rec.trials = 3;
               });
}

inline CheckRecord check_corner_product() {
    using namespace verify_detail;
    return run("toeplitz.corner_product",
               "the matrices with 1 at both corners and k at both corners commute, yet their "
               "product is non-Toeplitz for n >= 3",
               CheckStatus::Verified, [](CheckRecord& rec) {
                   for (size_t n = 3; n <= 5; ++n) {
                       TQ a(n), b(n);
                       a.param(static_cast<long>(n) - 1) = Q::one();
                       a.param(1 - static_cast<long>(n)) = Q::one();
                       b.param(static_cast<long>(n) - 1) = qk();
                       b.param(1 - static_cast<long>(n)) = qk();
                       M ab = a.to_dense() * b.to_dense();
                       M ba = b.to_dense() * a.to_dense();
                       require(rec, ab == ba, "the corner matrices commute");
                       require(rec, !is_toeplitz(ab), "their product is not Toeplitz");
                       if (n == 3) {
                           require(rec, ab.at(0, 0) == qk() && ab.at(1, 1) == Q(rat(0)) &&
                                            ab.at(2, 2) == qk(),
                                   "product is diag(k, 0, k)");
                           rec.witness["product_n3"] = to_text(ab);
                       }
                   }
                   rec.trials = 3;
                   rec.witness["note"] = "at n = 2 the same pair multiplies to k I, which is Toeplitz";
               });
}

inline CheckRecord check_commuting_entries_literal(size_t n_max) {
    using namespace verify_detail;
    return run("toeplitz.commuting_entries.literal",
               "Toeplitz matrices with pairwise commuting entries always commute",
               CheckStatus::FalsifiedAsLiteral, [&](CheckRecord& rec) {
                   for (size_t n = 2; n <= n_max; ++n) {
                       M s = shift_matrix<Rational>(n);
                       auto report =
                           commuting_product_check(TQ::from_dense(s), TQ::from_dense(adjoint(s)));
                       if (!report.entries_commute || report.products_equal || report.criterion) {
                           fail(rec, "the shift pair no longer falsifies the literal statement");
                           return;
                       }
                   }
                   rec.status = CheckStatus::FalsifiedAsLiteral;
                   rec.trials = n_max - 1;
                   rec.witness["witness"] =
                       "S and S* have real (hence commuting) entries but S S* = diag(0,1,...,1) "
                       "while S* S = diag(1,...,1,0); the product criterion fails for the pair";
               });
}

inline CheckRecord check_commuting_entries_corrected(size_t n_lo, size_t n_hi, size_t trials,
                                                     uint64_t seed) {
    using namespace verify_detail;
    return run("toeplitz.commuting_entries.corrected",
               "commuting entries together with the product criterion force A B = B A",
               CheckStatus::Verified, [&](CheckRecord& rec) {
                   rec.trials = trials;
                   for (size_t t = 0; t < trials; ++t) {
                       size_t n = n_lo + t % (n_hi - n_lo + 1);
                       SplitMix64 g = SplitMix64::derive(seed, "verify.commuting.corrected", t);
                       Subalg alg = (t % 3 == 0)
                                        ? Subalg::reals()
                                        : Subalg::plane(t % 3 == 1 ? qi() : sample_pure_direction(g));
                       TQ a(n), b(n);
                       if (t % 4 == 3) {
                           // diagonal against an arbitrary Toeplitz over the same algebra
                           a = sample_algebra_toeplitz(g, n, alg);
                           b = TQ(n);
                           b.param(0) = sample_in_algebra(g, alg);
                       } else {
                           Q p, q;
                           switch (t % 4) {
                               case 0: p = qr(1), q = qr(1); break;
                               case 1: p = qr(0), q = qr(1); break;
                               case 2: p = qr(1), q = qr(0); break;
                               default:
                                   p = sample_in_algebra(g, alg);
                                   q = sample_in_algebra(g, alg);
                                   if (is_zero(p) && is_zero(q)) p = Q::one();
                                   break;
                           }
                           GpqSpec spec(n, alg, p, q);
                           auto bas = basis(spec);
                           a = sample_member(bas, g);
                           b = sample_member(bas, g);
                       }
                       auto report = commuting_product_check(a, b);
                       require(rec, report.entries_commute && report.criterion,
                               "sampler must produce hypothesis-satisfying pairs");
                       require(rec, report.products_equal, "A B = B A under the hypotheses");
                       if (rec.status != CheckStatus::Verified) {
                           rec.witness["a"] = to_text(a);
                           rec.witness["b"] = to_text(b);
                           return;
                       }
                   }
               });
}

// --- scalar subalgebra machinery ---

inline CheckRecord check_commutant_classification(size_t trials, uint64_t seed) {
    using namespace verify_detail;
    return run("subalg.commutant",
               "scalar commutants classify as R, span{1, v} or H, agree with the linear-system "
               "solution space, and the double commutant is the identity",
               CheckStatus::Verified, [&](CheckRecord& rec) {
                   rec.trials = trials;
                   // independent oracle: solve x s - s x = 0 per generator
                   auto oracle_dim_and_check = [&](const std::vector<Q>& gens, const Subalg& got,
                                                   CheckRecord& r) {
                       std::vector<Q> units{Q::one(), qi(), qj(), qk()};
                       std::vector<RVec> rows;
                       for (const auto& s : gens) {
                           std::array<Q, 4> im;
                           for (size_t c = 0; c < 4; ++c) im[c] = units[c] * s - s * units[c];
                           for (size_t comp = 0; comp < 4; ++comp) {
                               RVec row(4, Rational(0));
                               row[0] = comp == 0 ? im[0].a0 : comp == 1 ? im[0].a1 : comp == 2 ? im[0].a2 : im[0].a3;
                               row[1] = comp == 0 ? im[1].a0 : comp == 1 ? im[1].a1 : comp == 2 ? im[1].a2 : im[1].a3;
                               row[2] = comp == 0 ? im[2].a0 : comp == 1 ? im[2].a1 : comp == 2 ? im[2].a2 : im[2].a3;
                               row[3] = comp == 0 ? im[3].a0 : comp == 1 ? im[3].a1 : comp == 2 ? im[3].a2 : im[3].a3;
                               rows.push_back(std::move(row));
                           }
                       }
                       auto sol = nullspace_basis(std::move(rows), 4);
                       require(r, sol.size() == got.dim(), "dimension matches the solver");
                       for (const auto& v : sol)
                           require(r, got.contains(Q(v[0], v[1], v[2], v[3])),
                                   "solver space inside the classified algebra");
                       for (const auto& b : got.real_basis())
                           for (const auto& s : gens)
                               require(r, b * s == s * b, "classified algebra really commutes");
                   };

                   // pinned cases
                   require(rec, commutant_of_set({qi()}) == Subalg::plane(qi()), "{i}' = span{1,i}");
                   require(rec, commutant_of_set({qi(), qj()}) == Subalg::reals(), "{i,j}' = R");
                   require(rec, commutant_of_set({qr(5), qr(-2)}) == Subalg::full(), "reals are central");
                   oracle_dim_and_check({qi()}, commutant_of_set({qi()}), rec);
                   oracle_dim_and_check({qi(), qj()}, commutant_of_set({qi(), qj()}), rec);

                   SplitMix64 g = SplitMix64::derive(seed, "verify.commutant");
                   for (size_t t = 0; t < trials; ++t) {
                       std::vector<Q> gens;
                       for (size_t k = 0; k < 1 + t % 3; ++k) gens.push_back(sample_quat(g));
                       Subalg got = commutant_of_set(gens);
                       oracle_dim_and_check(gens, got, rec);
                       if (rec.status != CheckStatus::Verified) return;
                   }

                   for (const auto& a : grid_algebras())
                       require(rec, commutant_of_algebra(commutant_of_algebra(a)) == a,
                               "double commutant is the identity");
               });
}

// --- the G_{p,q}[A] family checks ---

inline CheckRecord check_closure_rank(size_t n_lo, size_t n_hi) {
    using namespace verify_detail;
    return run("gpq.closure.rank",
               "each family is product closed: every product of two basis elements re-expands "
               "in the basis (exact rank test)",
               CheckStatus::Verified, [&](CheckRecord& rec) {
                   size_t tested = 0;
                   auto rows = nlohmann::ordered_json::array();
                   for (size_t n = n_lo; n <= n_hi; ++n)
                       for (const auto& spec : grid_specs(n)) {
                           bool ok = closure_rank_test(spec);
                           rows.push_back({{"spec", spec.key()},
                                           {"dim", basis(spec).size()},
                                           {"closed", ok}});
                           require(rec, ok, "closure rank test failed for " + spec.key());
                           ++tested;
                       }
                   rec.trials = tested;
                   rec.witness["families"] = rows;
               });
}

inline CheckRecord check_closure_sampled(size_t n_lo, size_t n_hi, size_t trials_per_spec,
                                         uint64_t seed) {
    using namespace verify_detail;
    return run("gpq.closure.sampled",
               "random members multiply, and left-scale, back into their family",
               CheckStatus::Verified, [&](CheckRecord& rec) {
                   size_t total = 0;
                   for (size_t n = n_lo; n <= n_hi; ++n)
                       for (const auto& spec : grid_specs(n)) {
                           auto r = closure_check(spec, trials_per_spec, seed);
                           total += r.trials;
                           require(rec, r.ok, spec.key() + ": " + r.failure);
                           if (rec.status != CheckStatus::Verified) return;
                       }
                   rec.trials = total;
               });
}

inline CheckRecord check_special_cases(size_t n_lo, size_t n_hi) {
    using namespace verify_detail;
    return run("gpq.special_cases",
               "(1,1) yields the circulants over A, (0,1) the upper and (1,0) the lower "
               "triangular families, and every family contains the diagonal matrices over A",
               CheckStatus::Verified, [&](CheckRecord& rec) {
                   size_t tested = 0;
                   for (size_t n = n_lo; n <= n_hi; ++n)
                       for (const auto& alg : grid_algebras()) {
                           const auto alg_basis = alg.real_basis();
                           // independently constructed comparison spans
                           std::vector<M> circ, upper, lower, diag;
                           for (const auto& u : alg_basis) {
                               TQ d(n);
                               d.param(0) = u;
                               circ.push_back(d.to_dense());
                               upper.push_back(d.to_dense());
                               lower.push_back(d.to_dense());
                               diag.push_back(d.to_dense());
                               for (long r = 1; r < static_cast<long>(n); ++r) {
                                   TQ w(n);
                                   w.param(r) = u;
                                   w.param(r - static_cast<long>(n)) = u;
                                   circ.push_back(w.to_dense());
                                   TQ up(n);
                                   up.param(-r) = u;
                                   upper.push_back(up.to_dense());
                                   TQ lo(n);
                                   lo.param(r) = u;
                                   lower.push_back(lo.to_dense());
                               }
                           }
                           auto family_span = [&](const Quat<Rational>& p, const Quat<Rational>& q) {
                               std::vector<M> dense;
                               for (const auto& b : basis(GpqSpec(n, alg, p, q)))
                                   dense.push_back(b.to_dense());
                               return span_of(dense);
                           };
                           require(rec, span_equal(family_span(qr(1), qr(1)), span_of(circ)),
                                   "(1,1) over " + alg.to_string() + " equals the circulants");
                           require(rec, span_equal(family_span(qr(0), qr(1)), span_of(upper)),
                                   "(0,1) over " + alg.to_string() + " equals the upper triangulars");
                           require(rec, span_equal(family_span(qr(1), qr(0)), span_of(lower)),
                                   "(1,0) over " + alg.to_string() + " equals the lower triangulars");
                           RealSpan diag_span = span_of(diag);
                           for (const auto& spec : grid_specs(n)) {
                               if (spec.algebra != alg) continue;
                               std::vector<M> dense;
                               for (const auto& b : basis(spec)) dense.push_back(b.to_dense());
                               require(rec, diag_span.within(span_of(dense)),
                                       spec.key() + " contains the diagonal family");
                           }
                           tested += 1;
                       }
                   rec.trials = tested;
               });
}

inline CheckRecord check_commutative_families(size_t n_lo, size_t n_hi) {
    using namespace verify_detail;
    return run("gpq.commutative", "if A is commutative then the family is commutative",
               CheckStatus::Verified, [&](CheckRecord& rec) {
                   size_t tested = 0;
                   for (size_t n = n_lo; n <= n_hi; ++n)
                       for (const auto& spec : grid_specs(n)) {
                           if (spec.algebra.kind() == Subalg::Kind::Full) continue;
                           auto bas = basis(spec);
                           for (const auto& a : bas)
                               for (const auto& b : bas) {
                                   M da = a.to_dense(), db = b.to_dense();
                                   require(rec, da * db == db * da,
                                           spec.key() + ": basis pair fails to commute");
                               }
                           ++tested;
                       }
                   rec.trials = tested;
               });
}

inline CheckRecord check_member_product_criterion(size_t n_lo, size_t n_hi) {
    using namespace verify_detail;
    return run("gpq.member_criterion",
               "any two members of one family satisfy the product criterion",
               CheckStatus::Verified, [&](CheckRecord& rec) {
                   size_t tested = 0;
                   for (size_t n = n_lo; n <= n_hi; ++n)
                       for (const auto& spec : grid_specs(n)) {
                           auto bas = basis(spec);
                           for (const auto& a : bas)
                               for (const auto& b : bas) {
                                   require(rec, product_criterion(a, b),
                                           spec.key() + ": basis pair fails the criterion");
                                   ++tested;
                               }
                       }
                   rec.trials = tested;
               });
}

// Returns the main equality record followed by one finding per observed
// disagreement outside the p, q in A-and-commuting regime.
inline std::vector<CheckRecord> check_equality(size_t n_lo, size_t n_hi) {
    using namespace verify_detail;
    std::vector<CheckRecord> findings;
    CheckRecord main = run(
        "gpq.equality",
        "two families over the same A coincide exactly when p q2 = p2 q; guaranteed whenever "
        "all four scalars lie in A and A is where p, q commute",
        CheckStatus::Verified, [&](CheckRecord& rec) {
            size_t compared = 0, regime_compared = 0;
            for (size_t n = n_lo; n <= n_hi; ++n)
                for (const auto& alg : grid_algebras()) {
                    Subalg cm = commutant_of_algebra(alg);
                    std::vector<std::pair<Q, Q>> pqs = grid_pq();
                    pqs.push_back({qr(2), qr(2)});
                    pqs.push_back({qr(1), qr(3)});
                    pqs.push_back({qj(), qr(3) * qj()});
                    pqs.push_back({qk(), qr(-1)});
                    std::vector<GpqSpec> specs;
                    for (const auto& [p, q] : pqs)
                        if (cm.contains(p) && cm.contains(q)) specs.emplace_back(n, alg, p, q);
                    Subalg regime_box = alg;  // need p, q in A itself
                    for (const auto& s1 : specs)
                        for (const auto& s2 : specs) {
                            bool crit = equality_criterion(s1, s2);
                            bool eq = sets_equal(s1, s2);
                            ++compared;
                            bool in_regime = regime_box.contains(s1.p) && regime_box.contains(s1.q) &&
                                             regime_box.contains(s2.p) && regime_box.contains(s2.q) &&
                                             commute(s1.p, s1.q) && commute(s2.p, s2.q);
                            if (in_regime) {
                                ++regime_compared;
                                require(rec, crit == eq,
                                        "criterion and set equality disagree in regime: " +
                                            s1.key() + " vs " + s2.key());
                            } else if (crit != eq) {
                                CheckRecord f;
                                f.id = "gpq.equality.regime_gap";
                                f.claim =
                                    "outside the regime p, q in A the scalar criterion can "
                                    "disagree with true set equality";
                                f.status = CheckStatus::Finding;
                                f.expected = CheckStatus::Finding;
                                f.trials = 1;
                                f.witness = {{"s1", s1.key()},
                                             {"s2", s2.key()},
                                             {"criterion", crit},
                                             {"sets_equal", eq}};
                                findings.push_back(std::move(f));
                            }
                        }
                }
            rec.trials = compared;
            rec.witness["compared"] = compared;
            rec.witness["regime_compared"] = regime_compared;
            rec.witness["regime_gaps"] = findings.size();
        });
    std::vector<CheckRecord> out;
    out.push_back(std::move(main));
    for (auto& f : findings) out.push_back(std::move(f));
    return out;
}

// Returns the main maximality record followed by one finding per
// criterion-true family that the search nevertheless extended.
//
// The hard guarantees split by regime. A criterion-false family always has a
// proper Toeplitz extension (the enlargement over {p,q}'), so the search
// must find one. For a criterion-true family the witness-matrix argument
// proves maximality only when p and q lie in A itself and commute; over
// A = H that covers the full Toeplitz ambient, so an extension there is a
// contradiction. Outside that regime a discovered extension is a genuine,
// reportable gap in the scalar criterion (for example (p,q) = (i,j) over
// A = R: the criterion holds, yet any family G_{1,c}[H] with real c
// properly extends R*I inside the Toeplitz matrices), not a failure.
inline std::vector<CheckRecord> check_maximality(size_t n_lo, size_t n_hi, size_t trials,
                                                 uint64_t seed) {
    using namespace verify_detail;
    std::vector<CheckRecord> findings;
    CheckRecord main = run(
        "gpq.maximality",
        "a family is maximal among the Toeplitz left algebras precisely when {p,q}' = A: "
        "criterion-true families survive the closure search, criterion-false families extend "
        "properly inside the Toeplitz matrices",
        CheckStatus::Verified, [&](CheckRecord& rec) {
            auto rows = nlohmann::ordered_json::array();
            size_t tested = 0;
            for (size_t n = n_lo; n <= n_hi; ++n)
                for (const auto& spec : grid_specs(n)) {
                    bool crit = maximality_criterion(spec);
                    auto cx = maximality_falsify(spec, Ambient::FullH, trials, seed);
                    bool witness_regime = spec.algebra.contains(spec.p) &&
                                          spec.algebra.contains(spec.q) &&
                                          commute(spec.p, spec.q);
                    nlohmann::ordered_json row = {{"spec", spec.key()},
                                                  {"criterion", crit},
                                                  {"witness_regime", witness_regime},
                                                  {"counterexample", cx.has_value()}};
                    if (cx) {
                        row["extension"] = to_text(cx->extension);
                        row["family_dim"] = cx->family_dim;
                        row["closure_dim"] = cx->closure_dim;
                    }
                    rows.push_back(row);
                    if (!crit) {
                        require(rec, cx.has_value(),
                                spec.key() + ": criterion-false family survived the search");
                    } else if (cx) {
                        if (spec.algebra.kind() == Subalg::Kind::Full) {
                            // witness argument covers the whole ambient here
                            fail(rec, spec.key() + ": provably maximal family was extended");
                        } else {
                            CheckRecord f;
                            f.id = "gpq.maximality.regime_gap";
                            f.claim =
                                "outside the regime p, q in A the family can extend properly "
                                "inside the full Toeplitz ambient even though {p,q}' = A";
                            f.status = CheckStatus::Finding;
                            f.expected = CheckStatus::Finding;
                            f.trials = trials;
                            f.witness = {{"spec", spec.key()},
                                         {"extension", to_text(cx->extension)},
                                         {"family_dim", cx->family_dim},
                                         {"closure_dim", cx->closure_dim}};
                            findings.push_back(std::move(f));
                        }
                    }
                    ++tested;
                }
            rec.trials = tested * trials;
            rec.witness["families"] = rows;
            rec.witness["regime_gaps"] = findings.size();
        });
    std::vector<CheckRecord> out;
    out.push_back(std::move(main));
    for (auto& f : findings) out.push_back(std::move(f));
    return out;
}

// --- the full suite ---

struct VerifyOptions {
    size_t n_max = 3;
    size_t trials = 500;
    uint64_t seed = 42;
};

inline Report run_verify_all(const VerifyOptions& opt) {
    if (opt.n_max < 2) throw std::invalid_argument("--n must be at least 2");
    Report rep;
    rep.command = "verify-all";
    rep.seed = opt.seed;
    rep.parameters = {{"n_max", opt.n_max}, {"trials", opt.trials}};
    const size_t nm = opt.n_max;
    const size_t small_n = std::min<size_t>(nm, 3);
    const size_t rank_n = std::min<size_t>(nm, 4);

    rep.checks.push_back(check_versor_table());
    rep.checks.push_back(check_cayley_dickson(opt.trials, opt.seed));
    rep.checks.push_back(check_binomial_noncommutativity());
    rep.checks.push_back(check_sphere_roots(std::max<size_t>(100, opt.trials / 5)));
    rep.checks.push_back(check_complex_rep(opt.trials, opt.seed));
    rep.checks.push_back(check_inner_product(opt.trials, opt.seed));
    rep.checks.push_back(check_joint_annihilator(opt.trials, opt.seed));
    rep.checks.push_back(check_displacement_forward(2, nm, opt.trials, opt.seed));
    rep.checks.push_back(check_displacement_equivalence(2, nm, opt.trials, opt.seed));
    rep.checks.push_back(check_toeplitz_subspace(2, nm, opt.trials, opt.seed));
    rep.checks.push_back(check_product_criterion_exhaustive_n2());
    rep.checks.push_back(check_product_criterion_random(2, nm, opt.trials, opt.seed));
    rep.checks.push_back(check_band_square());
    rep.checks.push_back(check_corner_product());
    rep.checks.push_back(check_commuting_entries_literal(nm));
    rep.checks.push_back(check_commuting_entries_corrected(2, nm, opt.trials, opt.seed));
    rep.checks.push_back(check_commutant_classification(opt.trials, opt.seed));
    rep.checks.push_back(check_closure_rank(2, rank_n));
    rep.checks.push_back(
        check_closure_sampled(2, small_n, std::max<size_t>(20, opt.trials / 10), opt.seed));
    rep.checks.push_back(check_special_cases(2, rank_n));
    rep.checks.push_back(check_commutative_families(2, small_n));
    rep.checks.push_back(check_member_product_criterion(2, small_n));
    for (auto& r : check_equality(2, small_n)) rep.checks.push_back(std::move(r));
    for (auto& r : check_maximality(2, small_n, 200, opt.seed)) rep.checks.push_back(std::move(r));
    return rep;
}

}  // namespace qtz

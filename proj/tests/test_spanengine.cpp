#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "qtoeplitz/rng.hpp"
#include "qtoeplitz/spanengine.hpp"
#include "qtoeplitz/toeplitz.hpp"

using namespace qtz;

namespace {
using Q = Quat<Rational>;
using M = Mat<Rational>;

std::vector<M> toeplitz_space_basis(size_t n) {
    std::vector<M> out;
    std::vector<Q> versors{Q::one(), Q::unit_i(), Q::unit_j(), Q::unit_k()};
    for (long t = 1 - static_cast<long>(n); t <= static_cast<long>(n) - 1; ++t)
        for (const auto& v : versors) {
            ToeplitzMat<Rational> m(n);
            m.param(t) = v;
            out.push_back(m.to_dense());
        }
    return out;
}
}  // namespace

TEST_CASE("span dimensions", "[spanengine]") {
    CHECK(span_of({M::identity(3)}).dim() == 1);

    std::vector<M> scaled{lscale(Q::one(), M::identity(2)), lscale(Q::unit_i(), M::identity(2)),
                          lscale(Q::unit_j(), M::identity(2)), lscale(Q::unit_k(), M::identity(2))};
    CHECK(span_of(scaled).dim() == 4);

    for (size_t n = 2; n <= 4; ++n)
        CHECK(span_of(toeplitz_space_basis(n)).dim() == 4 * (2 * n - 1));
}

TEST_CASE("containment and canonical equality", "[spanengine]") {
    RealSpan s = span_of({M::identity(3)});
    CHECK(contains_mat(s, lscale(Q(rat(2)), M::identity(3))));
    CHECK(!contains_mat(s, shift_matrix<Rational>(3)));

    // dim and the reduced basis are invariant under generator reordering
    SplitMix64 g = SplitMix64::derive(40, "spanengine.canonical");
    std::vector<M> gens;
    for (int t = 0; t < 6; ++t) gens.push_back(sample_dense(g, 2));
    RealSpan a = span_of(gens);
    std::reverse(gens.begin(), gens.end());
    RealSpan b = span_of(gens);
    CHECK(span_equal(a, b));
    CHECK(a.dim() == b.dim());

    CHECK_THROWS_AS(s.contains(M(2)), std::invalid_argument);
}

TEST_CASE("round trip through coordinates", "[spanengine]") {
    SplitMix64 g = SplitMix64::derive(41, "spanengine.coords");
    for (int t = 0; t < 50; ++t) {
        M m = sample_dense(g, 3);
        CHECK(RealSpan::mat_from_coords(3, RealSpan::coords(m)) == m);
    }
}

TEST_CASE("left algebra closure", "[spanengine]") {
    CHECK(left_algebra_closure({M::identity(2)}, ScalarMode::Real).dim() == 1);
    CHECK(left_algebra_closure({M::identity(2)}, ScalarMode::Quaternion).dim() == 4);

    // the circulant space at n = 2 is already closed: dimension stays 8
    std::vector<M> circ;
    for (const auto& v : {Q::one(), Q::unit_i(), Q::unit_j(), Q::unit_k()}) {
        ToeplitzMat<Rational> d(2), w(2);
        d.param(0) = v;
        w.param(1) = v;
        w.param(-1) = v;
        circ.push_back(d.to_dense());
        circ.push_back(w.to_dense());
    }
    CHECK(span_of(circ).dim() == 8);
    RealSpan closed = left_algebra_closure(circ, ScalarMode::Quaternion);
    CHECK(closed.dim() == 8);
    CHECK(span_equal(closed, span_of(circ)));

    // {S, S*} generates the full real 2x2 matrix algebra
    M s = shift_matrix<Rational>(2);
    RealSpan shifts = left_algebra_closure({s, adjoint(s)}, ScalarMode::Real);
    M diag01(2), diag10(2);
    diag01.at(1, 1) = Q::one();
    diag10.at(0, 0) = Q::one();
    CHECK(shifts.contains(diag01));
    CHECK(shifts.contains(diag10));
    CHECK(shifts.dim() >= 4);
    RealSpan toeplitz_ambient = span_of(toeplitz_space_basis(2));
    CHECK(!shifts.within(toeplitz_ambient));
}

TEST_CASE("closure is idempotent and monotone", "[spanengine]") {
    SplitMix64 g = SplitMix64::derive(42, "spanengine.idem");
    std::vector<M> gens{sample_dense(g, 2), sample_dense(g, 2)};
    RealSpan once = left_algebra_closure(gens, ScalarMode::Real);
    std::vector<M> basis_mats;
    for (const auto& row : once.basis()) basis_mats.push_back(RealSpan::mat_from_coords(2, row));
    RealSpan twice = left_algebra_closure(basis_mats, ScalarMode::Real);
    CHECK(once.dim() == twice.dim());
    CHECK(span_equal(once, twice));

    gens.push_back(sample_dense(g, 2));
    RealSpan more = left_algebra_closure(gens, ScalarMode::Real);
    CHECK(more.dim() >= once.dim());
}

TEST_CASE("the Toeplitz space is not product closed", "[spanengine]") {
    for (size_t n = 2; n <= 3; ++n) {
        RealSpan closure = left_algebra_closure(toeplitz_space_basis(n), ScalarMode::Real);
        CHECK(closure.dim() > 4 * (2 * n - 1));
    }
}

TEST_CASE("within", "[spanengine]") {
    // everything sits inside the span of all matrix units times versors
    std::vector<M> all;
    for (size_t r = 0; r < 2; ++r)
        for (size_t s = 0; s < 2; ++s)
            for (const auto& v : {Q::one(), Q::unit_i(), Q::unit_j(), Q::unit_k()}) {
                M m(2);
                m.at(r, s) = v;
                all.push_back(m);
            }
    RealSpan everything = span_of(all);
    SplitMix64 g = SplitMix64::derive(43, "spanengine.within");
    RealSpan any = span_of({sample_dense(g, 2), sample_dense(g, 2)});
    CHECK(any.within(everything));
    CHECK(everything.dim() == 16);
}

TEST_CASE("nullspace solver", "[spanengine]") {
    // x + y = 0 in three unknowns: two free directions
    std::vector<RVec> rows{{rat(1), rat(1), rat(0)}};
    auto basis = nullspace_basis(rows, 3);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) CHECK(v[0] + v[1] == 0);

    // full-rank system: trivial nullspace
    std::vector<RVec> full{{rat(1), rat(0)}, {rat(1), rat(1)}};
    CHECK(nullspace_basis(full, 2).empty());

    // redundant rows collapse
    std::vector<RVec> red{{rat(1), rat(2)}, {rat(2), rat(4)}};
    auto nb = nullspace_basis(red, 2);
    REQUIRE(nb.size() == 1);
    CHECK(nb[0][0] + 2 * nb[0][1] == 0);
}

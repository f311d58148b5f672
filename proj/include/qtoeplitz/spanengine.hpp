#pragma once

// Real-linear subspace arithmetic over M_n[H] and left-algebra closure.
//
// A matrix is flattened to 4n^2 rational coordinates, entry-major and then
// component order 1, i, j, k. Spans are kept in reduced row echelon form with
// increasing pivot columns; the reduced basis is canonical, so span equality
// is literal equality of bases. Every elimination is exact — there are no
// tolerances anywhere in this path.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qtoeplitz/qmat.hpp"
#include "qtoeplitz/quat.hpp"
#include "qtoeplitz/rational.hpp"

namespace qtz {

using RVec = std::vector<Rational>;

// --- generic exact elimination helpers ---

// Reduces v against rows (assumed RREF with the given pivot columns).
inline void reduce_against(RVec& v, const std::vector<RVec>& rows, const std::vector<size_t>& pivots) {
    for (size_t i = 0; i < rows.size(); ++i) {
        const Rational& c = v[pivots[i]];
        if (c == 0) continue;
        Rational f = c;  // pivot entries are normalized to 1
        for (size_t t = 0; t < v.size(); ++t) v[t] -= f * rows[i][t];
    }
}

// Nullspace basis of the homogeneous system rows * x = 0 in `cols` unknowns.
// Basis vectors are the standard free-variable solutions of the RREF, listed
// by increasing free column.
inline std::vector<RVec> nullspace_basis(std::vector<RVec> rows, size_t cols) {
    std::vector<RVec> rref;
    std::vector<size_t> pivots;
    for (auto& row : rows) {
        if (row.size() != cols) throw std::invalid_argument("ragged linear system");
        reduce_against(row, rref, pivots);
        size_t p = cols;
        for (size_t t = 0; t < cols; ++t)
            if (row[t] != 0) {
                p = t;
                break;
            }
        if (p == cols) continue;
        Rational inv_p = 1 / row[p];
        for (auto& c : row) c *= inv_p;
        for (size_t i = 0; i < rref.size(); ++i) {
            Rational f = rref[i][p];
            if (f == 0) continue;
            for (size_t t = 0; t < cols; ++t) rref[i][t] -= f * row[t];
        }
        size_t at = 0;
        while (at < pivots.size() && pivots[at] < p) ++at;
        rref.insert(rref.begin() + static_cast<long>(at), std::move(row));
        pivots.insert(pivots.begin() + static_cast<long>(at), p);
    }

    std::vector<bool> is_pivot(cols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<RVec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RVec v(cols, Rational(0));
        v[free] = 1;
        for (size_t i = 0; i < rref.size(); ++i) v[pivots[i]] = -rref[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// --- RealSpan ---

enum class ScalarMode { Real, Quaternion };

class RealSpan {
  public:
    explicit RealSpan(size_t n) : n_(n) {
        if (n == 0) throw std::invalid_argument("span over empty matrix space");
    }

    size_t n() const { return n_; }
    size_t dim() const { return rows_.size(); }
    const std::vector<RVec>& basis() const { return rows_; }

    static RVec coords(const Mat<Rational>& m) {
        RVec v;
        v.reserve(4 * m.n() * m.n());
        for (const auto& q : m.entries()) {
            v.push_back(q.a0);
            v.push_back(q.a1);
            v.push_back(q.a2);
            v.push_back(q.a3);
        }
        return v;
    }

    static Mat<Rational> mat_from_coords(size_t n, const RVec& v) {
        Mat<Rational> m(n);
        for (size_t e = 0; e < n * n; ++e)
            m.at(e / n, e % n) =
                Quat<Rational>(v[4 * e], v[4 * e + 1], v[4 * e + 2], v[4 * e + 3]);
        return m;
    }

    // Inserts the matrix; returns true iff the span grew.
    bool insert(const Mat<Rational>& m) {
        check_size(m.n());
        return insert_coords(coords(m));
    }

    bool insert_coords(RVec v) {
        reduce_against(v, rows_, pivots_);
        size_t cols = 4 * n_ * n_;
        size_t p = cols;
        for (size_t t = 0; t < cols; ++t)
            if (v[t] != 0) {
                p = t;
                break;
            }
        if (p == cols) return false;
        Rational inv_p = 1 / v[p];
        for (auto& c : v) c *= inv_p;
        for (size_t i = 0; i < rows_.size(); ++i) {
            Rational f = rows_[i][p];
            if (f == 0) continue;
            for (size_t t = 0; t < cols; ++t) rows_[i][t] -= f * v[t];
        }
        size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < p) ++at;
        rows_.insert(rows_.begin() + static_cast<long>(at), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<long>(at), p);
        return true;
    }

    bool contains(const Mat<Rational>& m) const {
        check_size(m.n());
        RVec v = coords(m);
        reduce_against(v, rows_, pivots_);
        for (const auto& c : v)
            if (c != 0) return false;
        return true;
    }

    // Canonical reduced bases make span equality a syntactic check.
    friend bool operator==(const RealSpan& a, const RealSpan& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

    bool within(const RealSpan& ambient) const {
        check_size(ambient.n_);
        for (const auto& row : rows_) {
            RVec v = row;
            reduce_against(v, ambient.rows_, ambient.pivots_);
            for (const auto& c : v)
                if (c != 0) return false;
        }
        return true;
    }

  private:
    void check_size(size_t m) const {
        if (m != n_) throw std::invalid_argument("span/matrix size mismatch");
    }

    size_t n_;
    std::vector<RVec> rows_;
    std::vector<size_t> pivots_;
};

inline RealSpan span_of(const std::vector<Mat<Rational>>& mats) {
    if (mats.empty()) throw std::invalid_argument("span of empty generator list");
    RealSpan s(mats[0].n());
    for (const auto& m : mats) s.insert(m);
    return s;
}

inline bool contains_mat(const RealSpan& s, const Mat<Rational>& a) { return s.contains(a); }
inline bool span_equal(const RealSpan& a, const RealSpan& b) { return a == b; }

// Smallest span containing the generators that is closed under addition,
// scalar action (real, or left versor scaling in Quaternion mode) and matrix
// products of span members. Worklist closure: when a matrix enlarges the
// span it is kept as a product generator, and its products against all kept
// generators are queued. Terminates because the dimension is capped by 4n^2.
inline RealSpan left_algebra_closure(const std::vector<Mat<Rational>>& gens, ScalarMode mode) {
    if (gens.empty()) throw std::invalid_argument("closure of empty generator list");
    RealSpan span(gens[0].n());
    std::vector<Mat<Rational>> kept;
    std::vector<Mat<Rational>> queue(gens.begin(), gens.end());
    while (!queue.empty()) {
        Mat<Rational> m = std::move(queue.back());
        queue.pop_back();
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

}  // namespace qtz

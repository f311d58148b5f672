#pragma once

// Compressed Toeplitz representation and the structural results around it:
// the displacement characterization A - S A S* = x (x) e0 + e0 (x) y, the
// product criterion a_r b_{s-n} = a_{r-n} b_s, commutation reports, circulant
// wrap, and the O(n)-storage matvec kernel.
//
// A ToeplitzMat of size n stores the 2n-1 diagonal parameters
// a_{1-n}, ..., a_{n-1}; the dense expansion has entry (r,s) = a_{r-s}.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtoeplitz/hspace.hpp"
#include "qtoeplitz/qmat.hpp"
#include "qtoeplitz/quat.hpp"

namespace qtz {

class NotToeplitzError : public std::invalid_argument {
  public:
    NotToeplitzError(size_t r, size_t s)
        : std::invalid_argument("matrix is not Toeplitz: entry (" + std::to_string(r) + "," +
                                std::to_string(s) + ") differs from entry (" +
                                std::to_string(r - 1) + "," + std::to_string(s - 1) + ")"),
          row(r),
          col(s) {}

    size_t row, col;  // first violated diagonal pair: (row,col) vs (row-1,col-1)
};

template <class T>
bool is_toeplitz(const Mat<T>& a) {
    for (size_t r = 1; r < a.n(); ++r)
        for (size_t s = 1; s < a.n(); ++s)
            if (!(a.at(r, s) == a.at(r - 1, s - 1))) return false;
    return true;
}

template <class T>
class ToeplitzMat {
  public:
    explicit ToeplitzMat(size_t n)
        : n_(n), par_(2 * n - 1, Quat<T>(T(0), T(0), T(0), T(0))) {
        if (n == 0) throw std::invalid_argument("Toeplitz size must be positive");
    }
    ToeplitzMat(size_t n, std::vector<Quat<T>> params_low_to_high) : n_(n), par_(std::move(params_low_to_high)) {
        if (n == 0) throw std::invalid_argument("Toeplitz size must be positive");
        if (par_.size() != 2 * n - 1)
            throw std::invalid_argument("expected " + std::to_string(2 * n - 1) +
                                        " Toeplitz parameters, got " + std::to_string(par_.size()));
    }

    size_t n() const { return n_; }

    // Diagonal parameter a_t for 1-n <= t <= n-1.
    const Quat<T>& param(long t) const { return par_[index(t)]; }
    Quat<T>& param(long t) { return par_[index(t)]; }
    const std::vector<Quat<T>>& params() const { return par_; }

    friend bool operator==(const ToeplitzMat& a, const ToeplitzMat& b) {
        return a.n_ == b.n_ && a.par_ == b.par_;
    }

    Mat<T> to_dense() const {
        Mat<T> m(n_);
        for (size_t r = 0; r < n_; ++r)
            for (size_t s = 0; s < n_; ++s)
                m.at(r, s) = param(static_cast<long>(r) - static_cast<long>(s));
        return m;
    }

    static ToeplitzMat from_dense(const Mat<T>& a) {
        for (size_t r = 1; r < a.n(); ++r)
            for (size_t s = 1; s < a.n(); ++s)
                if (!(a.at(r, s) == a.at(r - 1, s - 1))) throw NotToeplitzError(r, s);
        ToeplitzMat t(a.n());
        for (size_t s = 0; s < a.n(); ++s) t.param(-static_cast<long>(s)) = a.at(0, s);
        for (size_t r = 1; r < a.n(); ++r) t.param(static_cast<long>(r)) = a.at(r, 0);
        return t;
    }

  private:
    size_t index(long t) const {
        long lo = 1 - static_cast<long>(n_);
        if (t < lo || t > static_cast<long>(n_) - 1)
            throw std::out_of_range("Toeplitz parameter index " + std::to_string(t));
        return static_cast<size_t>(t - lo);
    }

    size_t n_;
    std::vector<Quat<T>> par_;
};

// A - S A S*, computed with the actual shift matrices. For Toeplitz A the
// result is supported on row 0 and column 0.
template <class T>
Mat<T> displacement(const Mat<T>& a) {
    Mat<T> s = shift_matrix<T>(a.n());
    return a - s * a * adjoint(s);
}

template <class T>
bool is_displacement_rank_one_bordered(const Mat<T>& a) {
    Mat<T> d = displacement(a);
    for (size_t r = 1; r < a.n(); ++r)
        for (size_t s = 1; s < a.n(); ++s)
            if (!is_zero(d.at(r, s))) return false;
    return true;
}

// The vectors with displacement(A) = outer(x, e0) + outer(e0, y):
//   x = (a_0, a_1, ..., a_{n-1}),  y = (0, conj(a_{-1}), ..., conj(a_{1-n})).
// The conjugates in y cancel the conj applied by outer's second factor.
template <class T>
std::pair<QVec<T>, QVec<T>> displacement_vectors(const ToeplitzMat<T>& t) {
    size_t n = t.n();
    QVec<T> x, y;
    x.reserve(n);
    y.reserve(n);
    for (size_t r = 0; r < n; ++r) x.push_back(t.param(static_cast<long>(r)));
    y.push_back(Quat<T>(T(0), T(0), T(0), T(0)));
    for (size_t s = 1; s < n; ++s) y.push_back(conj(t.param(-static_cast<long>(s))));
    return {x, y};
}

// Wrap condition a_r = a_{r-n} for r = 1..n-1.
template <class T>
bool is_circulant(const ToeplitzMat<T>& t) {
    long n = static_cast<long>(t.n());
    for (long r = 1; r < n; ++r)
        if (!(t.param(r) == t.param(r - n))) return false;
    return true;
}

// a_r * b_{s-n} == a_{r-n} * b_s for all r,s = 1..n-1; holds iff the dense
// product A B is Toeplitz.
template <class T>
bool product_criterion(const ToeplitzMat<T>& a, const ToeplitzMat<T>& b) {
    if (a.n() != b.n()) throw std::invalid_argument("Toeplitz size mismatch");
    long n = static_cast<long>(a.n());
    for (long r = 1; r < n; ++r)
        for (long s = 1; s < n; ++s)
            if (!(a.param(r) * b.param(s - n) == a.param(r - n) * b.param(s))) return false;
    return true;
}

struct CommutingProductReport {
    bool entries_commute;   // every parameter of A commutes with every parameter of B
    bool criterion;         // product_criterion(A, B)
    bool products_equal;    // A B == B A by dense multiplication
    bool product_toeplitz;  // A B Toeplitz by dense multiplication
};

// Probe for the commuting-entries statement. The honest contract is
// entries_commute && criterion => products_equal; entries_commute alone does
// not suffice (the shift pair S, S* is the standing witness).
template <class T>
CommutingProductReport commuting_product_check(const ToeplitzMat<T>& a, const ToeplitzMat<T>& b) {
    if (a.n() != b.n()) throw std::invalid_argument("Toeplitz size mismatch");
    CommutingProductReport rep{};
    rep.entries_commute = true;
    for (const auto& pa : a.params())
        for (const auto& pb : b.params())
            if (!commute(pa, pb)) {
                rep.entries_commute = false;
                break;
            }
    rep.criterion = product_criterion(a, b);
    Mat<T> ab = a.to_dense() * b.to_dense();
    Mat<T> ba = b.to_dense() * a.to_dense();
    rep.products_equal = ab == ba;
    rep.product_toeplitz = is_toeplitz(ab);
    return rep;
}

// y_r = sum_s a_{r-s} v_s straight off the 2n-1 stored parameters.
template <class T>
QVec<T> matvec(const ToeplitzMat<T>& t, const QVec<T>& v) {
    size_t n = t.n();
    if (v.size() != n) throw std::invalid_argument("matrix/vector size mismatch");
    QVec<T> out(n, Quat<T>(T(0), T(0), T(0), T(0)));
    for (size_t r = 0; r < n; ++r)
        for (size_t s = 0; s < n; ++s)
            out[r] += t.param(static_cast<long>(r) - static_cast<long>(s)) * v[s];
    return out;
}

// --- text form: first line n, then the 2n-1 parameters a_{1-n}..a_{n-1}
// separated by ';' (newlines allowed) ---

inline std::string to_text(const ToeplitzMat<Rational>& t) {
    std::string out = std::to_string(t.n()) + "\n";
    for (size_t k = 0; k < t.params().size(); ++k) {
        out += to_string(t.params()[k]);
        if (k + 1 < t.params().size()) out += "; ";
    }
    out += '\n';
    return out;
}

inline ToeplitzMat<Rational> parse_toeplitz(std::string_view text) {
    size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("Toeplitz text must start with the size n");
    size_t n = std::stoul(std::string(text.substr(start, pos - start)));
    std::vector<Quat<Rational>> params;
    std::string rest(text.substr(pos));
    for (auto& cell : detail::split(rest, ';')) {
        for (char& c : cell)
            if (c == '\n') c = ' ';
        if (detail::blank(cell)) continue;
        params.push_back(parse_quat(cell));
    }
    return ToeplitzMat<Rational>(n, std::move(params));
}

}  // namespace qtz

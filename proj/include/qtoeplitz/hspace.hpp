#pragma once

// The left inner-product space H^n: <x,y> = sum_k conj(y_k) x_k, the standard
// orthonormal basis, and the outer product x (x) y.
//
// Order warning: over a noncommutative ring the operator z |-> <z,y> x is not
// realized by a single matrix in general. The matrix form used here,
// entry (r,s) = x_r * conj(y_s), agrees with the operator exactly when one
// factor has real entries — which covers both uses x (x) e0 and e0 (x) y in
// the displacement identity.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtoeplitz/qmat.hpp"
#include "qtoeplitz/quat.hpp"

namespace qtz {

template <class T>
using QVec = std::vector<Quat<T>>;

namespace detail {
template <class T>
void check_same_length(const QVec<T>& x, const QVec<T>& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("vector length mismatch: " + std::to_string(x.size()) +
                                    " vs " + std::to_string(y.size()));
}
}  // namespace detail

template <class T>
Quat<T> inner(const QVec<T>& x, const QVec<T>& y) {
    detail::check_same_length(x, y);
    Quat<T> acc(T(0), T(0), T(0), T(0));
    for (size_t k = 0; k < x.size(); ++k) acc += conj(y[k]) * x[k];
    return acc;
}

template <class T>
QVec<T> std_basis_vector(size_t n, size_t r) {
    if (n == 0) throw std::invalid_argument("basis of empty space");
    if (r >= n) throw std::invalid_argument("basis index out of range");
    QVec<T> e(n, Quat<T>(T(0), T(0), T(0), T(0)));
    e[r] = Quat<T>::one();
    return e;
}

template <class T>
std::vector<QVec<T>> std_basis(size_t n) {
    std::vector<QVec<T>> basis;
    basis.reserve(n);
    for (size_t r = 0; r < n; ++r) basis.push_back(std_basis_vector<T>(n, r));
    return basis;
}

// Matrix with entry (r,s) = x_r * conj(y_s).
template <class T>
Mat<T> outer(const QVec<T>& x, const QVec<T>& y) {
    detail::check_same_length(x, y);
    size_t n = x.size();
    Mat<T> m(n);
    for (size_t r = 0; r < n; ++r)
        for (size_t s = 0; s < n; ++s) m.at(r, s) = x[r] * conj(y[s]);
    return m;
}

template <class T>
QVec<T> lscale(const Quat<T>& q, const QVec<T>& x) {
    QVec<T> out;
    out.reserve(x.size());
    for (const auto& c : x) out.push_back(q * c);
    return out;
}

template <class T>
QVec<T> matvec(const Mat<T>& a, const QVec<T>& v) {
    if (a.n() != v.size()) throw std::invalid_argument("matrix/vector size mismatch");
    QVec<T> out(a.n(), Quat<T>(T(0), T(0), T(0), T(0)));
    for (size_t r = 0; r < a.n(); ++r)
        for (size_t s = 0; s < a.n(); ++s) out[r] += a.at(r, s) * v[s];
    return out;
}

// --- text form: comma-separated quaternion literals in parentheses ---

inline std::string to_string(const QVec<Rational>& x) {
    std::string out = "(";
    for (size_t k = 0; k < x.size(); ++k) {
        out += to_string(x[k]);
        if (k + 1 < x.size()) out += ", ";
    }
    return out + ")";
}

inline QVec<Rational> parse_vector(std::string_view text) {
    size_t lo = text.find('(');
    size_t hi = text.rfind(')');
    if (lo == std::string_view::npos || hi == std::string_view::npos || hi <= lo)
        throw std::invalid_argument("vector literal must be parenthesized");
    QVec<Rational> out;
    for (const auto& cell : detail::split(text.substr(lo + 1, hi - lo - 1), ','))
        out.push_back(parse_quat(cell));
    return out;
}

}  // namespace qtz

#pragma once

// Dense square matrices over the quaternions. M_n[H] is a left and a right
// module; left and right scaling genuinely differ once entries stop
// commuting, so both are provided.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtoeplitz/quat.hpp"

namespace qtz {

template <class T>
class Mat {
  public:
    Mat() = default;
    explicit Mat(size_t n) : n_(n), e_(n * n, Quat<T>(T(0), T(0), T(0), T(0))) {
        if (n == 0) throw std::invalid_argument("matrix size must be positive");
    }

    size_t n() const { return n_; }
    Quat<T>& at(size_t r, size_t s) { return e_[r * n_ + s]; }
    const Quat<T>& at(size_t r, size_t s) const { return e_[r * n_ + s]; }
    const std::vector<Quat<T>>& entries() const { return e_; }

    static Mat identity(size_t n) {
        Mat m(n);
        for (size_t r = 0; r < n; ++r) m.at(r, r) = Quat<T>::one();
        return m;
    }

    friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    friend Mat operator+(const Mat& a, const Mat& b) {
        check_same_size(a, b);
        Mat c(a.n_);
        for (size_t t = 0; t < a.e_.size(); ++t) c.e_[t] = a.e_[t] + b.e_[t];
        return c;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        check_same_size(a, b);
        Mat c(a.n_);
        for (size_t t = 0; t < a.e_.size(); ++t) c.e_[t] = a.e_[t] - b.e_[t];
        return c;
    }

    // Entry (r,s) = sum_k A[r][k] * B[k][s]; the factor order inside each
    // product is preserved as written.
    friend Mat operator*(const Mat& a, const Mat& b) {
        check_same_size(a, b);
        size_t n = a.n_;
        Mat c(n);
        for (size_t r = 0; r < n; ++r)
            for (size_t k = 0; k < n; ++k) {
                const Quat<T>& ark = a.at(r, k);
                if (is_zero(ark)) continue;
                for (size_t s = 0; s < n; ++s) c.at(r, s) += ark * b.at(k, s);
            }
        return c;
    }

  private:
    static void check_same_size(const Mat& a, const Mat& b) {
        if (a.n_ != b.n_)
            throw std::invalid_argument("matrix size mismatch: " + std::to_string(a.n_) + " vs " +
                                        std::to_string(b.n_));
    }

    size_t n_ = 0;
    std::vector<Quat<T>> e_;
};

template <class T>
Mat<T> lscale(const Quat<T>& q, const Mat<T>& a) {
    Mat<T> c(a.n());
    for (size_t r = 0; r < a.n(); ++r)
        for (size_t s = 0; s < a.n(); ++s) c.at(r, s) = q * a.at(r, s);
    return c;
}

template <class T>
Mat<T> rscale(const Mat<T>& a, const Quat<T>& q) {
    Mat<T> c(a.n());
    for (size_t r = 0; r < a.n(); ++r)
        for (size_t s = 0; s < a.n(); ++s) c.at(r, s) = a.at(r, s) * q;
    return c;
}

// Conjugate transpose; an involutive anti-homomorphism.
template <class T>
Mat<T> adjoint(const Mat<T>& a) {
    Mat<T> c(a.n());
    for (size_t r = 0; r < a.n(); ++r)
        for (size_t s = 0; s < a.n(); ++s) c.at(r, s) = conj(a.at(s, r));
    return c;
}

// The lower shift: ones directly below the principal diagonal. Its adjoint
// is the upper shift (the conjugate transpose, not the verbatim copy).
template <class T>
Mat<T> shift_matrix(size_t n) {
    Mat<T> s(n);
    for (size_t r = 1; r < n; ++r) s.at(r, r - 1) = Quat<T>::one();
    return s;
}

template <class T>
bool is_zero(const Mat<T>& a) {
    for (const auto& q : a.entries())
        if (!is_zero(q)) return false;
    return true;
}

// --- text form: one row per line, entries separated by ';' ---

inline std::string to_text(const Mat<Rational>& a) {
    std::string out;
    for (size_t r = 0; r < a.n(); ++r) {
        for (size_t s = 0; s < a.n(); ++s) {
            out += to_string(a.at(r, s));
            if (s + 1 < a.n()) out += "; ";
        }
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

inline bool blank(std::string_view s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace detail

inline Mat<Rational> parse_matrix(std::string_view text) {
    std::vector<std::vector<Quat<Rational>>> rows;
    for (const auto& line : detail::split(text, '\n')) {
        if (detail::blank(line)) continue;
        std::vector<Quat<Rational>> row;
        for (const auto& cell : detail::split(line, ';')) row.push_back(parse_quat(cell));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix text");
    size_t n = rows.size();
    Mat<Rational> m(n);
    for (size_t r = 0; r < n; ++r) {
        if (rows[r].size() != n)
            throw std::invalid_argument("matrix text is not square: row " + std::to_string(r) +
                                        " has " + std::to_string(rows[r].size()) + " of " +
                                        std::to_string(n) + " entries");
        for (size_t s = 0; s < n; ++s) m.at(r, s) = rows[r][s];
    }
    return m;
}

// --- JSON form: array of rows, each row an array of quaternion literals ---

inline nlohmann::ordered_json matrix_to_json(const Mat<Rational>& a) {
    auto out = nlohmann::ordered_json::array();
    for (size_t r = 0; r < a.n(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (size_t s = 0; s < a.n(); ++s) row.push_back(to_string(a.at(r, s)));
        out.push_back(row);
    }
    return out;
}

inline Mat<Rational> matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a nonempty array of rows");
    size_t n = j.size();
    Mat<Rational> m(n);
    for (size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n)
            throw std::invalid_argument("matrix JSON is not square at row " + std::to_string(r));
        for (size_t s = 0; s < n; ++s) m.at(r, s) = parse_quat(j[r][s].get<std::string>());
    }
    return m;
}

}  // namespace qtz

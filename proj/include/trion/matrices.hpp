#pragma once

// Small dense square-matrix container used where Eigen's scalar types do
// not reach (the double-double build path), plus conversions to Eigen.

#include <vector>

#include <Eigen/Dense>

#include "trion/dd.hpp"
#include "trion/errors.hpp"

namespace trion {

template <typename T>
class SquareMatrix {
  public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, T(0.0)) {}

    int size() const { return n_; }

    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    static SquareMatrix identity(int n) {
        SquareMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1.0);
        return m;
    }

  private:
    int n_ = 0;
    std::vector<T> a_;
};

template <typename T>
SquareMatrix<T> multiply(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
    const int n = a.size();
    if (b.size() != n) throw SizeError("matrix size mismatch in multiply");
    SquareMatrix<T> c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const T aik = a(i, k);
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

template <typename T>
SquareMatrix<T> transpose(const SquareMatrix<T>& a) {
    const int n = a.size();
    SquareMatrix<T> t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(j, i) = a(i, j);
    return t;
}

inline Eigen::MatrixXd to_eigen(const SquareMatrix<double>& m) {
    Eigen::MatrixXd out(m.size(), m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) out(i, j) = m(i, j);
    return out;
}

inline Eigen::MatrixXd to_eigen(const SquareMatrix<DoubleDouble>& m) {
    Eigen::MatrixXd out(m.size(), m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) out(i, j) = to_double(m(i, j));
    return out;
}

template <typename T>
SquareMatrix<T> from_eigen(const Eigen::MatrixXd& m) {
    SquareMatrix<T> out(static_cast<int>(m.rows()));
    for (int i = 0; i < out.size(); ++i)
        for (int j = 0; j < out.size(); ++j) out(i, j) = T(m(i, j));
    return out;
}

} // namespace trion

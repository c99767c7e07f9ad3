#include "monoquot/gfp.hpp"

#include <stdexcept>

namespace mq::gf {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int inverse_mod(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::invalid_argument("inverse_mod: zero is not invertible");
    // extended Euclid
    int t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        int q = r / new_r;
        int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return t;
}

Matrix::Matrix(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
    if (!is_prime(p)) throw std::invalid_argument("Matrix: characteristic must be prime");
    data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

void Matrix::set(int r, int c, int value) {
    int v = value % p_;
    if (v < 0) v += p_;
    at(r, c) = v;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_, p_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

bool Matrix::is_zero() const {
    for (int v : data_)
        if (v != 0) return false;
    return true;
}

std::vector<int> Matrix::apply(const std::vector<int>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
    std::vector<int> y(rows_, 0);
    for (int r = 0; r < rows_; ++r) {
        long long acc = 0;
        for (int c = 0; c < cols_; ++c) acc += static_cast<long long>(at(r, c)) * x[c];
        y[r] = static_cast<int>(acc % p_);
    }
    return y;
}

Matrix Matrix::identity(int n, int p) {
    Matrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(int rows, int p, const std::vector<std::vector<int>>& cols) {
    Matrix m(rows, static_cast<int>(cols.size()), p);
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        if (static_cast<int>(cols[c].size()) != rows)
            throw std::invalid_argument("Matrix::from_columns: ragged column");
        for (int r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
    }
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || a.prime() != b.prime())
        throw std::invalid_argument("multiply: shape or characteristic mismatch");
    Matrix c(a.rows(), b.cols(), a.prime());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            int aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                c.at(i, j) = (c.at(i, j) + aik * b.at(k, j)) % a.prime();
        }
    return c;
}

std::vector<int> rref(Matrix& m) {
    const int p = m.prime();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
        int inv = inverse_mod(m.at(row, col), p);
        for (int c = col; c < m.cols(); ++c) m.at(row, c) = (m.at(row, c) * inv) % p;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            int f = m.at(r, col);
            if (f == 0) continue;
            for (int c = col; c < m.cols(); ++c)
                m.at(r, c) = (m.at(r, c) + (p - f) * m.at(row, c)) % p;
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Matrix m) {
    return static_cast<int>(rref(m).size());
}

std::vector<std::vector<int>> kernel_basis(const Matrix& m) {
    Matrix r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    const int p = m.prime();
    std::vector<std::vector<int>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<int> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            int coeff = r.at(static_cast<int>(i), free);
            v[pivots[i]] = coeff == 0 ? 0 : p - coeff;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<int>> solve(const Matrix& m, const std::vector<int>& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw std::invalid_argument("solve: size mismatch");
    Matrix aug(m.rows(), m.cols() + 1, m.prime());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.set(r, m.cols(), rhs[r]);
    }
    std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if (c == m.cols()) return std::nullopt; // pivot in augmented column
    std::vector<int> x(m.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug.at(static_cast<int>(i), m.cols());
    return x;
}

} // namespace mq::gf

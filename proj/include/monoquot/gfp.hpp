#pragma once

#include <optional>
#include <vector>

namespace mq::gf {

bool is_prime(int p);
int inverse_mod(int a, int p);

// Dense matrix over F_p, row-major. Entries are kept reduced to [0, p).
// p is assumed prime and small (p*p must fit in int).
class Matrix {
public:
    Matrix() : Matrix(0, 0, 2) {}
    Matrix(int rows, int cols, int p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int prime() const { return p_; }

    int& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    int at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    void set(int r, int c, int value); // reduces mod p, accepts negatives

    Matrix transposed() const;
    bool is_zero() const;

    std::vector<int> apply(const std::vector<int>& x) const; // M * x

    static Matrix identity(int n, int p);
    static Matrix from_columns(int rows, int p, const std::vector<std::vector<int>>& cols);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    int rows_, cols_, p_;
    std::vector<int> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);

int rank(Matrix m); // Gaussian elimination on a copy

// In-place reduced row echelon form; returns the pivot column indices.
std::vector<int> rref(Matrix& m);

// Basis of the right null space {x : m x = 0}, one vector per free column,
// in ascending free-column order (canonical).
std::vector<std::vector<int>> kernel_basis(const Matrix& m);

// One solution of m x = rhs if the system is consistent.
std::optional<std::vector<int>> solve(const Matrix& m, const std::vector<int>& rhs);

} // namespace mq::gf

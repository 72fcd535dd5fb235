#pragma once

#include "parcoh/field.hpp"

#include <optional>
#include <vector>

namespace parcoh {

using Vec = std::vector<Scalar>;

/* coordinate-vector helpers; all vectors over one field */
Vec vec_zero(Field f, int n);
Vec vec_unit(Field f, int n, int i);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& a);
Vec vec_neg(const Vec& a);
/* entrywise product (the componentwise algebra product on block coordinates) */
Vec vec_mul(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& a);
void vec_acc(Vec& a, const Scalar& c, const Vec& b); /* a += c*b */

/* Dense exact matrix, row-major. */
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, int rows, int cols);
    static Matrix identity(Field f, int n);
    static Matrix from_rows(Field f, const std::vector<Vec>& rows, int cols);

    Field field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;
    bool is_identity() const;

    std::string to_string() const;

private:
    Field field_;
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

/* Reduced row echelon form: pivots normalized to 1, pivot columns cleared,
   zero rows dropped. Deterministic (first nonzero pivot, rows in order). */
struct Echelon {
    std::vector<Vec> rows;   /* nonzero rows, staircase order */
    std::vector<int> pivots; /* pivot column of each row */
    int rank() const { return static_cast<int>(rows.size()); }
};
Echelon rref(const Matrix& m);

/* A linear subspace of K^ambient held by its canonical RREF basis.
   Equal subspaces compare equal entry-for-entry. */
class Subspace {
public:
    Subspace() = default;
    Subspace(Field f, int ambient) : field_(f), ambient_(ambient) {}
    static Subspace span(Field f, int ambient, const std::vector<Vec>& vectors);

    Field field() const { return field_; }
    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    /* coordinates of v in the RREF basis; nullopt if v is outside */
    std::optional<Vec> coordinates(const Vec& v) const;
    Vec from_coordinates(const Vec& coords) const;

    Subspace sum(const Subspace& o) const;
    bool contains_subspace(const Subspace& o) const;
    bool operator==(const Subspace& o) const;

private:
    Field field_;
    int ambient_ = 0;
    std::vector<Vec> basis_;  /* RREF rows */
    std::vector<int> pivots_;
};

/* kernel {v : Mv = 0} as a canonical subspace of K^cols; asserts rank-nullity */
Subspace kernel(const Matrix& m);
/* column span of M as a canonical subspace of K^rows; asserts rank-nullity */
Subspace image(const Matrix& m);
/* dim(big/small); throws std::logic_error if small ⊄ big (broken complex) */
int quotient_dim(const Subspace& big, const Subspace& small);

/* Exact solver for A x = b reusing one elimination of A for many b. */
class Solver {
public:
    explicit Solver(const Matrix& a);
    int rank() const { return rank_; }
    /* one solution if consistent (free variables set to 0), else nullopt */
    std::optional<Vec> solve(const Vec& b) const;

private:
    Field field_;
    int rows_, cols_, rank_;
    std::vector<Vec> reduced_;      /* RREF rows of A */
    std::vector<Vec> transform_;    /* row ops applied to identity: T*A = RREF */
    std::vector<int> pivots_;
};

/* Incremental row-space builder: feed rows one at a time, query rank.
   Used where constraint systems are far taller than they are wide. */
class RowReducer {
public:
    RowReducer(Field f, int cols) : field_(f), cols_(cols) {}
    void add_row(Vec row);                 /* dense row, length cols */
    void add_sparse_row(const std::vector<std::pair<int, Scalar>>& entries);
    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    bool full_rank() const { return rank() == cols_; }
    /* kernel of the accumulated row system, canonical */
    Subspace kernel_space() const;

private:
    Field field_;
    int cols_;
    std::vector<Vec> rows_;   /* RREF maintained incrementally */
    std::vector<int> pivots_;
};

} // namespace parcoh

#pragma once

#include <vector>

#include "homcat/field.hpp"

namespace homcat {

/// Dense row-major matrix over a fixed ground field, entries in canonical form.
class Mat {
  public:
    Mat() = default;
    Mat(Field f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, mpq_class(0)) {}

    static Mat identity(Field f, int n);
    static Mat zero(Field f, int rows, int cols) { return Mat(f, rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    const mpq_class& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, const mpq_class& v) { a_[static_cast<size_t>(i) * cols_ + j] = field_.reduce(v); }

    bool is_zero() const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const mpq_class& c) const;

    /// Copy `m` into this matrix with top-left corner at (i0, j0).
    void place(int i0, int j0, const Mat& m);
    Mat block(int i0, int j0, int r, int c) const;

    Mat transpose() const;

    /// Column vector from the matrix columns stacked (row-major flatten).
    std::vector<mpq_class> flatten() const { return a_; }

  private:
    Field field_;
    int rows_ = 0, cols_ = 0;
    std::vector<mpq_class> a_;
};

/// Block-diagonal assembly.
Mat direct_sum(const Mat& a, const Mat& b);

}  // namespace homcat

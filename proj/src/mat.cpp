#include "homcat/mat.hpp"

namespace homcat {

Mat Mat::identity(Field f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!homcat::is_zero(x)) return false;
    return true;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: shape mismatch");
    Mat r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpq_class& x = (*this)(i, k);
            if (homcat::is_zero(x)) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.a_[static_cast<size_t>(i) * o.cols_ + j] += x * o(k, j);
        }
    for (auto& x : r.a_) x = field_.reduce(x);
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator+: shape mismatch");
    Mat r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.reduce(a_[i] + o.a_[i]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator-: shape mismatch");
    Mat r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.reduce(a_[i] - o.a_[i]);
    return r;
}

Mat Mat::operator-() const {
    Mat r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.reduce(-a_[i]);
    return r;
}

Mat Mat::scaled(const mpq_class& c) const {
    Mat r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.reduce(c * a_[i]);
    return r;
}

void Mat::place(int i0, int j0, const Mat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) set(i0 + i, j0 + j, m(i, j));
}

Mat Mat::block(int i0, int j0, int r, int c) const {
    Mat m(field_, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, (*this)(i0 + i, j0 + j));
    return m;
}

Mat Mat::transpose() const {
    Mat m(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(j, i, (*this)(i, j));
    return m;
}

Mat direct_sum(const Mat& a, const Mat& b) {
    Mat r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    r.place(0, 0, a);
    r.place(a.rows(), a.cols(), b);
    return r;
}

}  // namespace homcat

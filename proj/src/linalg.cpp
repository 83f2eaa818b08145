#include "homcat/linalg.hpp"

namespace homcat {

Rref rref(const Mat& m) {
    Mat a = m;
    const Field& F = a.field();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!is_zero(a(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < a.cols(); ++j) {
                mpq_class t = a(r, j);
                a.set(r, j, a(piv, j));
                a.set(piv, j, t);
            }
        mpq_class inv = F.inv(a(r, c));
        for (int j = c; j < a.cols(); ++j) a.set(r, j, F.mul(inv, a(r, j)));
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            mpq_class f = a(i, c);
            for (int j = c; j < a.cols(); ++j) a.set(i, j, F.sub(a(i, j), F.mul(f, a(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<Vec> kernel_basis(const Mat& m) {
    Rref e = rref(m);
    const Field& F = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.cols(), mpq_class(0));
        v[c] = F.one();
        for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = F.neg(e.m(static_cast<int>(r), c));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    const Field& F = m.field();
    Mat aug(F, m.rows(), m.cols() + 1);
    aug.place(0, 0, m);
    for (int i = 0; i < m.rows(); ++i) aug.set(i, m.cols(), b[i]);
    Rref e = rref(aug);
    // A pivot in the last column marks inconsistency.
    for (int c : e.pivots)
        if (c == m.cols()) return std::nullopt;
    Vec x(m.cols(), mpq_class(0));
    for (size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.m(static_cast<int>(r), m.cols());
    return x;
}

Mat from_columns(Field f, int ambient_dim, const std::vector<Vec>& cols) {
    Mat m(f, ambient_dim, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(cols[j].size()) != ambient_dim)
            throw std::invalid_argument("from_columns: vector length mismatch");
        for (int i = 0; i < ambient_dim; ++i) m.set(i, static_cast<int>(j), cols[j][i]);
    }
    return m;
}

Vec mat_vec(const Mat& m, const Vec& x) {
    if (static_cast<int>(x.size()) != m.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
    const Field& F = m.field();
    Vec y(m.rows(), mpq_class(0));
    for (int i = 0; i < m.rows(); ++i) {
        mpq_class s(0);
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
        y[i] = F.reduce(s);
    }
    return y;
}

std::vector<Vec> quotient_basis(Field f, int ambient_dim, const std::vector<Vec>& subspace,
                                const std::vector<Vec>& total) {
    Mat tot = from_columns(f, ambient_dim, total);
    int rank_total = rank(tot);
    {
        std::vector<Vec> all = total;
        all.insert(all.end(), subspace.begin(), subspace.end());
        if (rank(from_columns(f, ambient_dim, all)) != rank_total)
            throw SubspaceNotContained("quotient_basis: subspace vector outside span(total)");
    }
    std::vector<Vec> span = subspace;
    int cur = rank(from_columns(f, ambient_dim, span));
    std::vector<Vec> reps;
    for (const Vec& t : total) {
        span.push_back(t);
        int nr = rank(from_columns(f, ambient_dim, span));
        if (nr > cur) {
            reps.push_back(t);
            cur = nr;
        } else {
            span.pop_back();
        }
    }
    return reps;
}

}  // namespace homcat

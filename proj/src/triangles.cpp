#include "homcat/triangles.hpp"

#include <algorithm>

namespace homcat {

namespace {

// Sparse assembly of one coupled linear system: rows are flattened matrix
// blocks keyed by (section, degree), columns are grouped unknowns.
class SystemBuilder {
  public:
    void add_row_block(int section, int degree, int size) {
        if (size <= 0) return;
        offsets_[{section, degree}] = total_rows_;
        sizes_[{section, degree}] = size;
        total_rows_ += size;
    }

    void finalize(const Field& f, int cols) {
        m_ = Mat(f, total_rows_, cols);
        rhs_.assign(total_rows_, mpq_class(0));
    }

    bool has_block(int section, int degree) const { return offsets_.count({section, degree}) > 0; }

    void accumulate(int section, int degree, int col, const Mat& block) {
        auto it = offsets_.find({section, degree});
        if (it == offsets_.end()) {
            if (!block.is_zero()) throw std::logic_error("SystemBuilder: dropped nonzero block");
            return;
        }
        Vec flat = block.flatten();
        for (size_t i = 0; i < flat.size(); ++i) {
            int r = it->second + static_cast<int>(i);
            m_.set(r, col, m_.field().add(m_(r, col), flat[i]));
        }
    }

    void set_rhs(int section, int degree, const Mat& block) {
        auto it = offsets_.find({section, degree});
        if (it == offsets_.end()) {
            if (!block.is_zero()) throw std::logic_error("SystemBuilder: dropped nonzero rhs");
            return;
        }
        Vec flat = block.flatten();
        for (size_t i = 0; i < flat.size(); ++i) rhs_[it->second + i] = flat[i];
    }

    std::optional<Vec> solve_canonical() const { return solve(m_, rhs_); }

  private:
    std::map<std::pair<int, int>, int> offsets_, sizes_;
    int total_rows_ = 0;
    Mat m_;
    Vec rhs_;
};

}  // namespace

ExactnessCertificate is_exact_triangle(const Triangle& t) {
    const ChainMap& u = t.u;
    const ChainMap& v = t.v;
    const ChainMap& w = t.w;
    PresPtr p = u.src.pres() ? u.src.pres() : v.src.pres();
    if (!p) p = w.src.pres();
    if (!p) return {true, std::nullopt};  // triangle of zero complexes
    const Field& F = p->field;
    if (!(v.src == u.tgt) || !(w.src == v.tgt) || !(w.tgt == shift(u.src, 1)))
        throw std::invalid_argument("is_exact_triangle: endpoint mismatch");
    if (!is_chain_map(u) || !is_chain_map(v) || !is_chain_map(w))
        throw std::invalid_argument("is_exact_triangle: not chain maps");

    ConeResult cr = cone(u);
    const Complex& z = v.tgt;
    const Complex& cn = cr.cone;
    const Complex& y = u.tgt;
    Complex sx = shift(u.src, 1);

    DegreewiseCoords hc(z, cn, 0);
    DegreewiseCoords s1c(y, cn, -1);
    DegreewiseCoords s2c(z, sx, -1);
    int cols = hc.total() + s1c.total() + s2c.total();

    // Sections: 0 = chain condition on h, 1 = h v ~ inc, 2 = proj h ~ w.
    SystemBuilder sb;
    auto span = [&](const Complex& a, const Complex& b) {
        int lo = std::min(a.is_zero() ? 0 : a.min_degree(), b.is_zero() ? 0 : b.min_degree()) - 1;
        int hi = std::max(a.is_zero() ? 0 : a.max_degree(), b.is_zero() ? 0 : b.max_degree()) + 1;
        return std::pair<int, int>{lo, hi};
    };
    {
        auto [lo, hi] = span(z, cn);
        for (int n = lo; n <= hi; ++n)
            sb.add_row_block(0, n, cn.component(n + 1).dim(*p) * z.component(n).dim(*p));
    }
    {
        auto [lo, hi] = span(y, cn);
        for (int n = lo; n <= hi; ++n)
            sb.add_row_block(1, n, cn.component(n).dim(*p) * y.component(n).dim(*p));
    }
    {
        auto [lo, hi] = span(z, sx);
        for (int n = lo; n <= hi; ++n)
            sb.add_row_block(2, n, sx.component(n).dim(*p) * z.component(n).dim(*p));
    }
    sb.finalize(F, cols);

    int col = 0;
    for (int n : hc.degrees()) {
        for (const auto& b : hom_space(p, z.component(n), cn.component(n))) {
            sb.accumulate(0, n, col, compose(cn.differential(n), b).real);
            sb.accumulate(0, n - 1, col, (-compose(b, z.differential(n - 1)).real));
            sb.accumulate(1, n, col, (b.real * v.part(n).real));
            sb.accumulate(2, n, col, (cr.triangle.w.part(n).real * b.real));
            ++col;
        }
    }
    for (int n : s1c.degrees()) {
        for (const auto& s : hom_space(p, y.component(n), cn.component(n - 1))) {
            sb.accumulate(1, n, col, (-compose(cn.differential(n - 1), s).real));
            sb.accumulate(1, n - 1, col, (-compose(s, y.differential(n - 1)).real));
            ++col;
        }
    }
    for (int n : s2c.degrees()) {
        for (const auto& s : hom_space(p, z.component(n), sx.component(n - 1))) {
            sb.accumulate(2, n, col, (-compose(sx.differential(n - 1), s).real));
            sb.accumulate(2, n - 1, col, (-compose(s, z.differential(n - 1)).real));
            ++col;
        }
    }
    {
        auto [lo, hi] = span(y, cn);
        for (int n = lo; n <= hi; ++n)
            if (sb.has_block(1, n)) sb.set_rhs(1, n, cr.triangle.v.part(n).real);
    }
    {
        auto [lo, hi] = span(z, sx);
        for (int n = lo; n <= hi; ++n)
            if (sb.has_block(2, n)) sb.set_rhs(2, n, w.part(n).real);
    }

    auto sol = sb.solve_canonical();
    if (!sol) return {false, std::nullopt};
    Vec hvec(sol->begin(), sol->begin() + hc.total());
    ChainMap h{z, cn, hc.decode(hvec)};
    if (!is_chain_map(h)) throw std::logic_error("is_exact_triangle: comparison not a chain map");
    if (!is_iso_kb(h)) return {false, std::nullopt};
    return {true, h};
}

Triangle rotate(const Triangle& t) {
    return Triangle{t.v, t.w, negate(shift(t.u, 1))};
}

namespace {

// Solvability of sum_k c_k (classes) = target class, all inside End(obj).
bool class_equation_solvable(const std::vector<ChainMap>& columns, const ChainMap& target) {
    const Complex& obj = target.src;
    std::vector<ChainMap> end_basis = hom_kb(obj, target.tgt);
    std::vector<Vec> cols;
    for (const auto& c : columns) cols.push_back(class_coordinates(c, end_basis));
    Field f = obj.pres()->field;
    Mat sys = from_columns(f, static_cast<int>(end_basis.size()), cols);
    return solve(sys, class_coordinates(target, end_basis)).has_value();
}

}  // namespace

bool is_section(const ChainMap& f) {
    std::vector<ChainMap> candidates;  // h f for h in hom_kb(tgt, src)
    for (const auto& h : hom_kb(f.tgt, f.src)) candidates.push_back(compose(h, f));
    return class_equation_solvable(candidates, identity_chain_map(f.src));
}

bool is_retraction(const ChainMap& f) {
    std::vector<ChainMap> candidates;  // f h for h in hom_kb(tgt, src)
    for (const auto& h : hom_kb(f.tgt, f.src)) candidates.push_back(compose(f, h));
    return class_equation_solvable(candidates, identity_chain_map(f.tgt));
}

EndAnalysis end_analysis(const Complex& x) {
    EndAnalysis ea;
    ea.object = x;
    ea.basis = hom_kb(x, x);
    ea.dim = static_cast<int>(ea.basis.size());
    if (ea.dim == 0) {
        ea.is_local = Locality::No;  // zero ring
        return ea;
    }
    if (ea.dim == 1) {
        ea.is_local = Locality::Yes;
        return ea;
    }
    if (ea.dim > 2) {
        ea.is_local = Locality::Undetermined;
        return ea;
    }

    // dim 2: End = k[t]/(t^2 - beta t - alpha) after the basis change (id, u).
    const Field& F = x.pres()->field;
    ChainMap id = identity_chain_map(x);
    Vec idc = class_coordinates(id, ea.basis);
    ChainMap u = ea.basis[0];
    {
        Mat two(F, 2, 2);
        Vec uc = class_coordinates(u, ea.basis);
        two.set(0, 0, idc[0]);
        two.set(1, 0, idc[1]);
        two.set(0, 1, uc[0]);
        two.set(1, 1, uc[1]);
        if (rank(two) < 2) u = ea.basis[1];
    }
    // u^2 = alpha id + beta u
    Vec sq = class_coordinates(compose(u, u), ea.basis);
    Vec uc = class_coordinates(u, ea.basis);
    Mat sys(F, 2, 2);
    sys.set(0, 0, idc[0]);
    sys.set(1, 0, idc[1]);
    sys.set(0, 1, uc[0]);
    sys.set(1, 1, uc[1]);
    auto ab = solve(sys, sq);
    if (!ab) throw std::logic_error("end_analysis: End not closed under composition");
    mpq_class alpha = (*ab)[0], beta = (*ab)[1];

    auto set_double_root = [&](const mpq_class& t0) {
        ea.is_local = Locality::Yes;
        ChainMap r = sub(u, scale(id, t0));
        ea.radical_basis.push_back(r);
    };

    if (F.is_prime_field() && F.p == 2) {
        std::vector<mpq_class> roots;
        for (int t = 0; t < 2; ++t) {
            mpq_class tv(t);
            if (is_zero(F.reduce(tv * tv - beta * tv - alpha))) roots.push_back(tv);
        }
        if (roots.size() == 2)
            ea.is_local = Locality::No;
        else if (roots.empty())
            ea.is_local = Locality::Yes;  // field extension
        else
            set_double_root(roots[0]);
        return ea;
    }

    mpq_class disc = F.reduce(beta * beta + 4 * alpha);
    if (is_zero(disc)) {
        set_double_root(F.div(beta, mpq_class(2)));
    } else if (F.is_square(disc)) {
        ea.is_local = Locality::No;  // two distinct roots, nontrivial idempotent
    } else {
        ea.is_local = Locality::Yes;  // quadratic field extension
    }
    return ea;
}

bool is_almost_vanishing(const ChainMap& w, const std::vector<Complex>& window_objects) {
    if (null_homotopy_witness(w))
        return false;  // zero in K^b is never almost vanishing
    EndAnalysis es = end_analysis(w.src);
    EndAnalysis et = end_analysis(w.tgt);
    if (es.is_local != Locality::Yes || et.is_local != Locality::Yes)
        throw NotIndecomposable("is_almost_vanishing: endpoints not certified local");

    for (const Complex& b : window_objects) {
        for (const ChainMap& g : hom_kb(b, w.src)) {
            if (is_retraction(g)) continue;
            if (!null_homotopy_witness(compose(w, g))) return false;
        }
        for (const ChainMap& f : hom_kb(w.tgt, b)) {
            if (is_section(f)) continue;
            if (!null_homotopy_witness(compose(f, w))) return false;
        }
    }
    return true;
}

bool scaling_test(const Triangle& t, const mpq_class& lambda, const std::vector<Complex>& window_objects) {
    EndAnalysis ez = end_analysis(t.v.tgt);
    if (ez.dim > 2 || ez.is_local != Locality::Yes)
        throw HypothesisViolated("scaling_test: End(Z) is not k or k+k*Delta local");
    if (ez.dim == 2) {
        if (ez.radical_basis.empty() || !is_almost_vanishing(ez.radical_basis[0], window_objects))
            throw HypothesisViolated("scaling_test: radical of End(Z) not almost vanishing");
    }
    Triangle scaled{t.u, t.v, scale(t.w, lambda)};
    return is_exact_triangle(scaled).exact;
}

}  // namespace homcat

#include "homcat/complex.hpp"

namespace homcat {

Complex::Complex(PresPtr p, std::map<int, Obj> comps, std::map<int, Mor> diffs)
    : pres_(std::move(p)), comps_(std::move(comps)), diffs_(std::move(diffs)) {
    for (auto it = comps_.begin(); it != comps_.end();) {
        if (it->second.is_zero())
            it = comps_.erase(it);
        else
            ++it;
    }
    for (auto it = diffs_.begin(); it != diffs_.end();) {
        int n = it->first;
        const Mor& d = it->second;
        if (!(d.src == component(n)) || !(d.tgt == component(n + 1)))
            throw std::invalid_argument("Complex: differential endpoints mismatch at degree " + std::to_string(n));
        if (d.is_zero())
            it = diffs_.erase(it);
        else
            ++it;
    }
}

Obj Complex::component(int n) const {
    auto it = comps_.find(n);
    return it == comps_.end() ? Obj{} : it->second;
}

Mor Complex::differential(int n) const {
    auto it = diffs_.find(n);
    if (it != diffs_.end()) return it->second;
    return zero_mor(pres_, component(n), component(n + 1));
}

bool Complex::operator==(const Complex& o) const {
    if (comps_ != o.comps_) return false;
    for (const auto& [n, d] : diffs_)
        if (!(o.differential(n) == d)) return false;
    for (const auto& [n, d] : o.diffs_)
        if (!(differential(n) == d)) return false;
    return true;
}

Mor ChainMap::part(int n) const {
    auto it = parts.find(n);
    if (it != parts.end()) return it->second;
    return zero_mor(src.pres() ? src.pres() : tgt.pres(), src.component(n), tgt.component(n));
}

bool ChainMap::is_zero() const {
    for (const auto& [n, m] : parts)
        if (!m.is_zero()) return false;
    return true;
}

Mor Homotopy::part(int n) const {
    auto it = parts.find(n);
    if (it != parts.end()) return it->second;
    return zero_mor(src.pres() ? src.pres() : tgt.pres(), src.component(n), tgt.component(n - 1));
}

ValidationReport validate_complex(const Complex& x) {
    ValidationReport rep;
    bool ok = true;
    for (const auto& [n, obj] : x.components()) {
        Mor dd = compose(x.differential(n + 1), x.differential(n));
        if (!dd.is_zero()) {
            ok = false;
            rep.issues.push_back({"square-zero", "d^{n+1} o d^n nonzero at degree " + std::to_string(n)});
        }
    }
    rep.checks.emplace_back("square-zero", ok);
    return rep;
}

bool is_chain_map(const ChainMap& f) {
    int lo = std::min(f.src.min_degree(), f.tgt.min_degree()) - 1;
    int hi = std::max(f.src.max_degree(), f.tgt.max_degree()) + 1;
    for (int n = lo; n <= hi; ++n) {
        Mor lhs = compose(f.tgt.differential(n), f.part(n));
        Mor rhs = compose(f.part(n + 1), f.src.differential(n));
        if (!(lhs.real == rhs.real)) return false;
    }
    return true;
}

Complex stalk_complex(const PresPtr& p, const Obj& a, int degree) {
    std::map<int, Obj> comps;
    if (!a.is_zero()) comps[degree] = a;
    return Complex(p, std::move(comps), {});
}

Complex shift(const Complex& x, int k) {
    std::map<int, Obj> comps;
    std::map<int, Mor> diffs;
    for (const auto& [n, obj] : x.components()) comps[n - k] = obj;
    int sign = (k % 2 == 0) ? 1 : -1;
    for (const auto& [n, obj] : x.components()) {
        Mor d = x.differential(n);
        if (d.is_zero()) continue;
        diffs[n - k] = sign > 0 ? d : negate(d);
    }
    return Complex(x.pres(), std::move(comps), std::move(diffs));
}

ChainMap shift(const ChainMap& f, int k) {
    ChainMap g;
    g.src = shift(f.src, k);
    g.tgt = shift(f.tgt, k);
    for (const auto& [n, m] : f.parts) g.parts[n - k] = m;
    return g;
}

ChainMap identity_chain_map(const Complex& x) {
    ChainMap f;
    f.src = f.tgt = x;
    for (const auto& [n, obj] : x.components()) f.parts[n] = identity_mor(x.pres(), obj);
    return f;
}

ChainMap zero_chain_map(const Complex& x, const Complex& y) { return ChainMap{x, y, {}}; }

namespace {
ChainMap combine(const ChainMap& f, const ChainMap& g, bool subtract) {
    ChainMap r;
    r.src = f.src;
    r.tgt = f.tgt;
    int lo = std::min(f.src.min_degree(), f.tgt.min_degree());
    int hi = std::max(f.src.max_degree(), f.tgt.max_degree());
    for (int n = lo; n <= hi; ++n) {
        Mor m = subtract ? Mor{f.part(n).pres, f.part(n).src, f.part(n).tgt, f.part(n).real - g.part(n).real}
                         : Mor{f.part(n).pres, f.part(n).src, f.part(n).tgt, f.part(n).real + g.part(n).real};
        if (!m.is_zero()) r.parts[n] = m;
    }
    return r;
}
}  // namespace

ChainMap add(const ChainMap& f, const ChainMap& g) { return combine(f, g, false); }
ChainMap sub(const ChainMap& f, const ChainMap& g) { return combine(f, g, true); }

ChainMap scale(const ChainMap& f, const mpq_class& c) {
    ChainMap r;
    r.src = f.src;
    r.tgt = f.tgt;
    for (const auto& [n, m] : f.parts) {
        Mor s = scale(m, c);
        if (!s.is_zero()) r.parts[n] = s;
    }
    return r;
}

ChainMap negate(const ChainMap& f) { return scale(f, mpq_class(-1)); }

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    ChainMap r;
    r.src = f.src;
    r.tgt = g.tgt;
    for (const auto& [n, m] : f.parts) {
        Mor c = compose(g.part(n), m);
        if (!c.is_zero()) r.parts[n] = c;
    }
    return r;
}

ConeResult cone(const ChainMap& f) {
    const Complex& x = f.src;
    const Complex& y = f.tgt;
    PresPtr p = x.pres() ? x.pres() : y.pres();
    const Field& F = p->field;

    std::map<int, Obj> comps;
    int lo = std::min(x.min_degree() - 1, y.min_degree());
    int hi = std::max(x.max_degree() - 1, y.max_degree());
    for (int n = lo; n <= hi; ++n) {
        Obj c;
        Obj xs = x.component(n + 1), ys = y.component(n);
        c.summands = xs.summands;
        c.summands.insert(c.summands.end(), ys.summands.begin(), ys.summands.end());
        if (!c.is_zero()) comps[n] = c;
    }

    std::map<int, Mor> diffs;
    for (const auto& [n, obj] : comps) {
        Obj tgt;
        auto it = comps.find(n + 1);
        if (it != comps.end()) tgt = it->second;
        int dx1 = x.component(n + 1).dim(*p), dy = y.component(n).dim(*p);
        int dx2 = x.component(n + 2).dim(*p), dy1 = y.component(n + 1).dim(*p);
        Mat m(F, dx2 + dy1, dx1 + dy);
        m.place(0, 0, -x.differential(n + 1).real);
        m.place(dx2, 0, -f.part(n + 1).real);
        m.place(dx2, dx1, y.differential(n).real);
        Mor d{p, obj, tgt, m};
        if (!d.is_zero()) diffs[n] = d;
    }
    Complex c(p, std::move(comps), std::move(diffs));

    ChainMap inc;  // Y -> Cone
    inc.src = y;
    inc.tgt = c;
    for (const auto& [n, obj] : y.components()) {
        int dx1 = x.component(n + 1).dim(*p), dy = obj.dim(*p);
        Mat m(F, dx1 + dy, dy);
        m.place(dx1, 0, Mat::identity(F, dy));
        inc.parts[n] = Mor{p, obj, c.component(n), m};
    }

    Complex sx = shift(x, 1);
    ChainMap proj;  // Cone -> Sigma X
    proj.src = c;
    proj.tgt = sx;
    for (const auto& [n, obj] : c.components()) {
        int dx1 = x.component(n + 1).dim(*p), dy = y.component(n).dim(*p);
        if (dx1 == 0) continue;
        Mat m(F, dx1, dx1 + dy);
        m.place(0, 0, Mat::identity(F, dx1));
        proj.parts[n] = Mor{p, obj, sx.component(n), m};
    }

    return ConeResult{c, Triangle{f, inc, proj}};
}

Complex brutal_truncation(const Complex& x, int n) {
    std::map<int, Obj> comps;
    std::map<int, Mor> diffs;
    for (const auto& [d, obj] : x.components())
        if (d >= -n) comps[d] = obj;
    for (const auto& [d, obj] : comps) {
        Mor diff = x.differential(d);
        if (comps.count(d + 1) && !diff.is_zero()) diffs[d] = diff;
    }
    return Complex(x.pres(), std::move(comps), std::move(diffs));
}

Triangle brutal_truncation_triangle(const Complex& x, int n) {
    PresPtr p = x.pres();
    Obj a = x.component(-n);
    Complex s_prev = brutal_truncation(x, n - 1);  // degrees >= 1-n
    Complex s_cur = brutal_truncation(x, n);       // degrees >= -n
    Complex left = stalk_complex(p, a, 1 - n);     // Sigma^{n-1}(X^{-n})
    Complex right = stalk_complex(p, a, -n);       // Sigma^{n}(X^{-n})

    ChainMap f;  // minus differential, in degree 1-n
    f.src = left;
    f.tgt = s_prev;
    if (!a.is_zero()) {
        Mor d = x.differential(-n);
        Mor m = negate(d);
        m.tgt = s_prev.component(1 - n);
        if (!m.is_zero()) f.parts[1 - n] = m;
    }

    ChainMap inc;  // inclusion of the truncations
    inc.src = s_prev;
    inc.tgt = s_cur;
    for (const auto& [d, obj] : s_prev.components()) inc.parts[d] = identity_mor(p, obj);

    ChainMap proj;  // projection onto the added stalk
    proj.src = s_cur;
    proj.tgt = right;
    if (!a.is_zero()) proj.parts[-n] = identity_mor(p, a);

    return Triangle{f, inc, proj};
}

std::map<int, int> cohomology_dims(const Complex& x) {
    std::map<int, int> out;
    for (const auto& [n, obj] : x.components()) {
        Mat dn = x.differential(n).real;
        Mat dprev = x.differential(n - 1).real;
        int ker = dn.cols() - rank(dn);
        int im = rank(dprev);
        out[n] = ker - im;
    }
    return out;
}

}  // namespace homcat

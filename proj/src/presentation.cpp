#include "homcat/presentation.hpp"

#include <numeric>

namespace homcat {

int Presentation::dim_of(const std::string& label) const {
    for (const auto& [l, d] : indec)
        if (l == label) return d;
    throw std::invalid_argument("unknown object label: '" + label + "'");
}

bool Presentation::has_object(const std::string& label) const {
    for (const auto& [l, d] : indec)
        if (l == label) return true;
    return false;
}

const std::vector<HomBasisElem>& Presentation::basis(const std::string& src, const std::string& tgt) const {
    static const std::vector<HomBasisElem> empty;
    auto it = hom_basis.find({src, tgt});
    return it == hom_basis.end() ? empty : it->second;
}

int Obj::dim(const Presentation& p) const {
    int d = 0;
    for (const auto& s : summands) d += p.dim_of(s);
    return d;
}

bool ValidationReport::ok() const {
    for (const auto& [name, pass] : checks)
        if (!pass) return false;
    return true;
}

namespace {

Vec flatten_mat(const Mat& m) { return m.flatten(); }

// Offsets of each summand inside the realized space.
std::vector<int> offsets(const Presentation& p, const Obj& x) {
    std::vector<int> off;
    int acc = 0;
    for (const auto& s : x.summands) {
        off.push_back(acc);
        acc += p.dim_of(s);
    }
    off.push_back(acc);
    return off;
}

// Membership of `m` in the span of the basis realizations; returns the
// coordinates or nullopt.
std::optional<Vec> span_coords(const Field& F, const Mat& m, const std::vector<HomBasisElem>& basis) {
    std::vector<Vec> cols;
    for (const auto& b : basis) cols.push_back(flatten_mat(b.real));
    Mat sys = from_columns(F, m.rows() * m.cols(), cols);
    return solve(sys, flatten_mat(m));
}

}  // namespace

ValidationReport validate_presentation(const PresPtr& p) {
    ValidationReport rep;
    const Field& F = p->field;

    bool faithful = true;
    for (const auto& [key, basis] : p->hom_basis) {
        int dt = p->dim_of(key.second), ds = p->dim_of(key.first);
        std::vector<Vec> cols;
        for (const auto& b : basis) {
            if (b.real.rows() != dt || b.real.cols() != ds) {
                faithful = false;
                rep.issues.push_back({"faithfulness", "shape mismatch in Hom(" + key.first + "," + key.second + ")"});
                continue;
            }
            cols.push_back(flatten_mat(b.real));
        }
        Mat sys = from_columns(F, dt * ds, cols);
        if (rank(sys) != static_cast<int>(cols.size())) {
            faithful = false;
            rep.issues.push_back({"faithfulness", "dependent basis in Hom(" + key.first + "," + key.second + ")"});
        }
    }
    rep.checks.emplace_back("faithfulness", faithful);

    bool idmem = true;
    for (const auto& [label, d] : p->indec) {
        if (!span_coords(F, Mat::identity(F, d), p->basis(label, label))) {
            idmem = false;
            rep.issues.push_back({"identity-membership", "identity of '" + label + "' not in End span"});
        }
    }
    rep.checks.emplace_back("identity-membership", idmem);

    bool closed = true;
    for (const auto& [k1, b1] : p->hom_basis)
        for (const auto& [k2, b2] : p->hom_basis) {
            if (k1.second != k2.first) continue;  // need tgt(f) = src(g)
            const auto& target_basis = p->basis(k1.first, k2.second);
            for (const auto& f : b1)
                for (const auto& g : b2) {
                    Mat prod = g.real * f.real;
                    bool ok = target_basis.empty() ? prod.is_zero() : span_coords(F, prod, target_basis).has_value();
                    if (!ok) {
                        closed = false;
                        rep.issues.push_back({"composition-closure",
                                              g.label + " o " + f.label + " outside Hom(" + k1.first + "," +
                                                  k2.second + ") span"});
                    }
                }
        }
    rep.checks.emplace_back("composition-closure", closed);
    return rep;
}

Mor zero_mor(const PresPtr& p, const Obj& src, const Obj& tgt) {
    return Mor{p, src, tgt, Mat::zero(p->field, tgt.dim(*p), src.dim(*p))};
}

Mor identity_mor(const PresPtr& p, const Obj& x) {
    return Mor{p, x, x, Mat::identity(p->field, x.dim(*p))};
}

Mor compose(const Mor& g, const Mor& f) {
    if (!(g.src == f.tgt)) throw std::invalid_argument("compose: src(g) != tgt(f)");
    return Mor{f.pres, f.src, g.tgt, g.real * f.real};
}

Mor direct_sum(const Mor& f, const Mor& g) {
    Obj src{f.src.summands}, tgt{f.tgt.summands};
    src.summands.insert(src.summands.end(), g.src.summands.begin(), g.src.summands.end());
    tgt.summands.insert(tgt.summands.end(), g.tgt.summands.begin(), g.tgt.summands.end());
    return Mor{f.pres, src, tgt, direct_sum(f.real, g.real)};
}

Mor add(const Mor& f, const Mor& g) { return Mor{f.pres, f.src, f.tgt, f.real + g.real}; }
Mor scale(const Mor& f, const mpq_class& c) { return Mor{f.pres, f.src, f.tgt, f.real.scaled(c)}; }
Mor negate(const Mor& f) { return Mor{f.pres, f.src, f.tgt, -f.real}; }

std::vector<Mor> hom_space(const PresPtr& p, const Obj& x, const Obj& y) {
    for (const auto& s : x.summands) p->dim_of(s);
    for (const auto& s : y.summands) p->dim_of(s);
    auto xoff = offsets(*p, x), yoff = offsets(*p, y);
    std::vector<Mor> out;
    for (size_t i = 0; i < y.summands.size(); ++i)
        for (size_t j = 0; j < x.summands.size(); ++j)
            for (const auto& b : p->basis(x.summands[j], y.summands[i])) {
                Mor m = zero_mor(p, x, y);
                m.real.place(yoff[i], xoff[j], b.real);
                out.push_back(std::move(m));
            }
    return out;
}

Vec hom_coordinates(const Mor& f) {
    const Presentation& p = *f.pres;
    auto xoff = offsets(p, f.src), yoff = offsets(p, f.tgt);
    Vec coords;
    for (size_t i = 0; i < f.tgt.summands.size(); ++i)
        for (size_t j = 0; j < f.src.summands.size(); ++j) {
            const auto& basis = p.basis(f.src.summands[j], f.tgt.summands[i]);
            Mat blk = f.real.block(yoff[i], xoff[j], yoff[i + 1] - yoff[i], xoff[j + 1] - xoff[j]);
            if (basis.empty()) {
                if (!blk.is_zero())
                    throw std::domain_error("hom_coordinates: nonzero block over zero Hom space");
                continue;
            }
            auto c = span_coords(p.field, blk, basis);
            if (!c) throw std::domain_error("hom_coordinates: block outside Hom basis span");
            coords.insert(coords.end(), c->begin(), c->end());
        }
    return coords;
}

Mor mor_from_coordinates(const PresPtr& p, const Obj& src, const Obj& tgt, const Vec& coords) {
    auto basis = hom_space(p, src, tgt);
    if (coords.size() != basis.size()) throw std::invalid_argument("mor_from_coordinates: length mismatch");
    Mor out = zero_mor(p, src, tgt);
    for (size_t k = 0; k < basis.size(); ++k)
        if (!is_zero(coords[k])) out = add(out, scale(basis[k], coords[k]));
    return out;
}

int hom_dim(const PresPtr& p, const Obj& x, const Obj& y) {
    return static_cast<int>(hom_space(p, x, y).size());
}

}  // namespace homcat

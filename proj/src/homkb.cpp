#include "homcat/homkb.hpp"

namespace homcat {

namespace {
PresPtr pres_of(const Complex& x, const Complex& y) {
    return x.pres() ? x.pres() : y.pres();
}
}  // namespace

DegreewiseCoords::DegreewiseCoords(const Complex& x, const Complex& y, int shift)
    : x_(x), y_(y), shift_(shift) {
    PresPtr p = pres_of(x, y);
    if (!p) return;
    if (x.is_zero()) return;
    for (int n = x.min_degree(); n <= x.max_degree(); ++n) {
        int d = hom_dim(p, x.component(n), y.component(n + shift_));
        if (d == 0) continue;
        degrees_.push_back(n);
        offsets_.push_back(total_);
        total_ += d;
    }
}

Vec DegreewiseCoords::encode(const std::map<int, Mor>& parts) const {
    PresPtr p = pres_of(x_, y_);
    Vec out(total_, mpq_class(0));
    for (size_t i = 0; i < degrees_.size(); ++i) {
        int n = degrees_[i];
        auto it = parts.find(n);
        if (it == parts.end()) continue;
        Vec c = hom_coordinates(it->second);
        for (size_t k = 0; k < c.size(); ++k) out[offsets_[i] + k] = c[k];
    }
    // Parts outside the coordinate support must be zero morphisms.
    for (const auto& [n, m] : parts) {
        if (std::find(degrees_.begin(), degrees_.end(), n) == degrees_.end() && !m.is_zero())
            throw std::domain_error("DegreewiseCoords::encode: nonzero part outside support");
    }
    (void)p;
    return out;
}

std::map<int, Mor> DegreewiseCoords::decode(const Vec& v) const {
    PresPtr p = pres_of(x_, y_);
    std::map<int, Mor> parts;
    for (size_t i = 0; i < degrees_.size(); ++i) {
        int n = degrees_[i];
        Obj s = x_.component(n), t = y_.component(n + shift_);
        int d = hom_dim(p, s, t);
        Vec c(v.begin() + offsets_[i], v.begin() + offsets_[i] + d);
        Mor m = mor_from_coordinates(p, s, t, c);
        if (!m.is_zero()) parts[n] = m;
    }
    return parts;
}

namespace {

// Linear operator on degreewise-map coordinates given by the commutation
// defect f |-> d_Y f - f d_X, flattened over realized entries.
struct CommutationSystem {
    std::vector<int> row_degrees;  // degrees n with X^n and Y^{n+1} nonzero
    std::vector<int> row_offsets;
    int total_rows = 0;
    Mat m;  // rows x unknowns

    CommutationSystem(const Complex& x, const Complex& y, const DegreewiseCoords& coords) {
        PresPtr p = pres_of(x, y);
        const Field& F = p->field;
        if (!x.is_zero()) {
            for (int n = x.min_degree(); n <= x.max_degree(); ++n) {
                int r = y.component(n + 1).dim(*p) * x.component(n).dim(*p);
                if (r == 0) continue;
                row_degrees.push_back(n);
                row_offsets.push_back(total_rows);
                total_rows += r;
            }
        }
        m = Mat(F, total_rows, coords.total());
        int col = 0;
        for (int n : coords.degrees()) {
            auto basis = hom_space(p, x.component(n), y.component(n));
            for (const auto& b : basis) {
                // term d_Y^n o b, lands in constraint row block n
                Mat t1 = compose(y.differential(n), b).real;
                put(n, col, t1);
                // term -(b o d_X^{n-1}), lands in constraint row block n-1
                Mat t2 = (-compose(b, x.differential(n - 1)).real);
                put(n - 1, col, t2);
                ++col;
            }
        }
    }

    void put(int degree, int col, const Mat& block) {
        auto it = std::find(row_degrees.begin(), row_degrees.end(), degree);
        if (it == row_degrees.end()) {
            if (!block.is_zero()) throw std::logic_error("CommutationSystem: dropped nonzero block");
            return;
        }
        int off = row_offsets[it - row_degrees.begin()];
        Vec flat = block.flatten();
        for (size_t i = 0; i < flat.size(); ++i)
            m.set(off + static_cast<int>(i), col, m.field().add(m(off + static_cast<int>(i), col), flat[i]));
    }
};

}  // namespace

std::vector<ChainMap> chain_map_space(const Complex& x, const Complex& y) {
    DegreewiseCoords coords(x, y, 0);
    CommutationSystem sys(x, y, coords);
    std::vector<ChainMap> out;
    for (const Vec& v : kernel_basis(sys.m)) {
        ChainMap f{x, y, coords.decode(v)};
        out.push_back(std::move(f));
    }
    return out;
}

ChainMap homotopy_boundary(const Homotopy& s) {
    const Complex& x = s.src;
    const Complex& y = s.tgt;
    ChainMap f;
    f.src = x;
    f.tgt = y;
    if (x.is_zero()) return f;
    for (int n = x.min_degree(); n <= x.max_degree(); ++n) {
        Mor t = add(compose(y.differential(n - 1), s.part(n)), compose(s.part(n + 1), x.differential(n)));
        if (!t.is_zero()) f.parts[n] = t;
    }
    return f;
}

std::optional<Homotopy> null_homotopy_witness(const ChainMap& f) {
    const Complex& x = f.src;
    const Complex& y = f.tgt;
    PresPtr p = pres_of(x, y);
    if (!p) return Homotopy{x, y, {}};
    const Field& F = p->field;
    DegreewiseCoords scoords(x, y, -1);

    // Equation rows: realized entries of f^n for degrees with X^n, Y^n nonzero.
    std::vector<int> row_degrees;
    std::vector<int> row_offsets;
    int total_rows = 0;
    if (!x.is_zero()) {
        for (int n = x.min_degree(); n <= x.max_degree(); ++n) {
            int r = y.component(n).dim(*p) * x.component(n).dim(*p);
            if (r == 0) {
                if (!f.part(n).is_zero()) return std::nullopt;
                continue;
            }
            row_degrees.push_back(n);
            row_offsets.push_back(total_rows);
            total_rows += r;
        }
    }
    Mat m(F, total_rows, scoords.total());
    auto put = [&](int degree, int col, const Mat& block) {
        auto it = std::find(row_degrees.begin(), row_degrees.end(), degree);
        if (it == row_degrees.end()) {
            if (!block.is_zero()) throw std::logic_error("null_homotopy_witness: dropped nonzero block");
            return;
        }
        int off = row_offsets[it - row_degrees.begin()];
        Vec flat = block.flatten();
        for (size_t i = 0; i < flat.size(); ++i)
            m.set(off + static_cast<int>(i), col, F.add(m(off + static_cast<int>(i), col), flat[i]));
    };
    int col = 0;
    for (int n : scoords.degrees()) {
        auto basis = hom_space(p, x.component(n), y.component(n - 1));
        for (const auto& b : basis) {
            put(n, col, compose(y.differential(n - 1), b).real);
            put(n - 1, col, compose(b, x.differential(n - 1)).real);
            ++col;
        }
    }
    Vec rhs(total_rows, mpq_class(0));
    for (size_t i = 0; i < row_degrees.size(); ++i) {
        Vec flat = f.part(row_degrees[i]).real.flatten();
        for (size_t k = 0; k < flat.size(); ++k) rhs[row_offsets[i] + k] = flat[k];
    }
    auto sol = solve(m, rhs);
    if (!sol) return std::nullopt;
    return Homotopy{x, y, scoords.decode(*sol)};
}

bool homotopic(const ChainMap& f, const ChainMap& g) {
    return null_homotopy_witness(sub(f, g)).has_value();
}

namespace {

// Coordinates (in the chain-map coordinate system) of the boundaries of all
// elementary homotopies.
std::vector<Vec> boundary_vectors(const Complex& x, const Complex& y, const DegreewiseCoords& coords) {
    PresPtr p = pres_of(x, y);
    std::vector<Vec> out;
    DegreewiseCoords scoords(x, y, -1);
    for (size_t i = 0; i < static_cast<size_t>(scoords.total()); ++i) {
        Vec unit(scoords.total(), mpq_class(0));
        unit[i] = 1;
        Homotopy s{x, y, scoords.decode(unit)};
        out.push_back(coords.encode(homotopy_boundary(s).parts));
    }
    (void)p;
    return out;
}

}  // namespace

std::vector<ChainMap> hom_kb(const Complex& x, const Complex& y) {
    PresPtr p = pres_of(x, y);
    if (!p) return {};
    DegreewiseCoords coords(x, y, 0);
    CommutationSystem sys(x, y, coords);
    std::vector<Vec> cycles = kernel_basis(sys.m);
    std::vector<Vec> boundaries = boundary_vectors(x, y, coords);
    std::vector<Vec> reps = quotient_basis(p->field, coords.total(), boundaries, cycles);
    std::vector<ChainMap> out;
    for (const Vec& v : reps) out.push_back(ChainMap{x, y, coords.decode(v)});
    return out;
}

int hom_kb_dim(const Complex& x, const Complex& y) { return static_cast<int>(hom_kb(x, y).size()); }

Vec class_coordinates(const ChainMap& f, const std::vector<ChainMap>& basis) {
    const Complex& x = f.src;
    const Complex& y = f.tgt;
    PresPtr p = pres_of(x, y);
    DegreewiseCoords coords(x, y, 0);
    std::vector<Vec> cols;
    for (const ChainMap& b : basis) cols.push_back(coords.encode(b.parts));
    size_t nbasis = cols.size();
    for (const Vec& bv : boundary_vectors(x, y, coords)) cols.push_back(bv);
    Mat sys = from_columns(p->field, coords.total(), cols);
    auto sol = solve(sys, coords.encode(f.parts));
    if (!sol) throw std::domain_error("class_coordinates: class outside basis span");
    return Vec(sol->begin(), sol->begin() + nbasis);
}

bool is_contractible(const Complex& x) {
    return null_homotopy_witness(identity_chain_map(x)).has_value();
}

bool is_iso_kb(const ChainMap& f) { return is_contractible(cone(f).cone); }

}  // namespace homcat

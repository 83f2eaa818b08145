#include "homcat/center.hpp"

#include <numeric>

namespace homcat {

int Window::object_index(const Complex& x) const {
    for (size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == x) return static_cast<int>(i);
    return -1;
}

WindowContext::WindowContext(const Window& w) : w_(w) {
    for (const auto& x : w_.objects) end_bases_.push_back(hom_kb(x, x));
    for (const auto& f : w_.spanning)
        if (w_.object_index(f.src) < 0 || w_.object_index(f.tgt) < 0)
            throw std::invalid_argument("Window: spanning morphism endpoint outside window");
    for (const auto& [i, j, iso] : w_.sigma_pairs) {
        if (!(iso.src == w_.objects[j]) || !(iso.tgt == shift(w_.objects[i], 1)))
            throw std::invalid_argument("Window: sigma pair endpoints mismatch");
        if (!is_iso_kb(iso)) throw std::invalid_argument("Window: sigma pair map not an isomorphism");
    }
}

ChainMap WindowContext::family_component(const NaturalFamily& fam, int i) const {
    const Complex& x = w_.objects[i];
    ChainMap out = zero_chain_map(x, x);
    const auto& basis = end_bases_[i];
    for (size_t k = 0; k < basis.size(); ++k)
        if (!is_zero(fam.components[i][k])) out = add(out, scale(basis[k], fam.components[i][k]));
    return out;
}

bool WindowContext::is_natural(const NaturalFamily& fam) const {
    for (const auto& f : w_.spanning) {
        int i = w_.object_index(f.src), j = w_.object_index(f.tgt);
        ChainMap lhs = compose(f, family_component(fam, i));
        ChainMap rhs = compose(family_component(fam, j), f);
        if (!homotopic(lhs, rhs)) return false;
    }
    return true;
}

namespace {

struct CenterSystem {
    std::vector<int> offsets;  // coordinate offset per object
    int total = 0;

    explicit CenterSystem(const WindowContext& ctx) {
        const Window& w = ctx.window();
        for (size_t i = 0; i < w.objects.size(); ++i) {
            offsets.push_back(total);
            total += static_cast<int>(ctx.end_basis(static_cast<int>(i)).size());
        }
    }

    std::vector<NaturalFamily> decode_all(const WindowContext& ctx, const std::vector<Vec>& vecs) const {
        const Window& w = ctx.window();
        std::vector<NaturalFamily> out;
        for (const Vec& v : vecs) {
            NaturalFamily fam;
            for (size_t i = 0; i < w.objects.size(); ++i) {
                int d = static_cast<int>(ctx.end_basis(static_cast<int>(i)).size());
                fam.components.emplace_back(v.begin() + offsets[i], v.begin() + offsets[i] + d);
            }
            out.push_back(std::move(fam));
        }
        return out;
    }
};

// Rows of the naturality (and optionally shift-compatibility) constraints.
Mat assemble(const WindowContext& ctx, const CenterSystem& cs, bool with_sigma) {
    const Window& w = ctx.window();
    const Field& F = w.objects.empty() ? Field::rationals() : w.objects[0].pres()->field;

    struct Row {
        std::vector<std::pair<int, Vec>> cols;  // (coordinate offset, class coords)
        int height;
    };
    std::vector<Row> rows;

    for (const auto& f : w.spanning) {
        int i = w.object_index(f.src), j = w.object_index(f.tgt);
        auto kb = hom_kb(f.src, f.tgt);
        if (kb.empty()) continue;
        Row row;
        row.height = static_cast<int>(kb.size());
        const auto& bi = ctx.end_basis(i);
        for (size_t k = 0; k < bi.size(); ++k)
            row.cols.push_back({cs.offsets[i] + static_cast<int>(k), class_coordinates(compose(f, bi[k]), kb)});
        const auto& bj = ctx.end_basis(j);
        for (size_t k = 0; k < bj.size(); ++k) {
            Vec c = class_coordinates(compose(bj[k], f), kb);
            for (auto& x : c) x = F.neg(x);
            row.cols.push_back({cs.offsets[j] + static_cast<int>(k), std::move(c)});
        }
        rows.push_back(std::move(row));
    }

    if (with_sigma) {
        for (const auto& [i, j, iso] : w.sigma_pairs) {
            Complex sx = shift(w.objects[i], 1);
            auto kb = hom_kb(w.objects[j], sx);
            if (kb.empty()) continue;
            Row row;
            row.height = static_cast<int>(kb.size());
            const auto& bj = ctx.end_basis(j);
            for (size_t k = 0; k < bj.size(); ++k)
                row.cols.push_back({cs.offsets[j] + static_cast<int>(k), class_coordinates(compose(iso, bj[k]), kb)});
            const auto& bi = ctx.end_basis(i);
            for (size_t k = 0; k < bi.size(); ++k) {
                Vec c = class_coordinates(compose(shift(bi[k], 1), iso), kb);
                for (auto& x : c) x = F.neg(x);
                row.cols.push_back({cs.offsets[i] + static_cast<int>(k), std::move(c)});
            }
            rows.push_back(std::move(row));
        }
    }

    int height = 0;
    for (const auto& r : rows) height += r.height;
    Mat m(F, height, cs.total);
    int off = 0;
    for (const auto& r : rows) {
        for (const auto& [col, vec] : r.cols)
            for (int h = 0; h < r.height; ++h) m.set(off + h, col, F.add(m(off + h, col), vec[h]));
        off += r.height;
    }
    return m;
}

}  // namespace

std::vector<NaturalFamily> solve_center(const WindowContext& ctx) {
    CenterSystem cs(ctx);
    std::vector<NaturalFamily> out = cs.decode_all(ctx, kernel_basis(assemble(ctx, cs, false)));
    for (const auto& fam : out)
        if (!ctx.is_natural(fam)) throw std::logic_error("solve_center: solution fails re-verification");
    return out;
}

std::vector<NaturalFamily> solve_triangle_center(const WindowContext& ctx) {
    CenterSystem cs(ctx);
    std::vector<NaturalFamily> out = cs.decode_all(ctx, kernel_basis(assemble(ctx, cs, true)));
    for (const auto& fam : out)
        if (!ctx.is_natural(fam)) throw std::logic_error("solve_triangle_center: solution fails re-verification");
    return out;
}

namespace {

// Componentwise action of a presentation-center element on a complex.
ChainMap induce_on_complex(const PresPtr& p, const std::map<std::string, Mat>& action, const Complex& x) {
    ChainMap out = zero_chain_map(x, x);
    for (const auto& [n, obj] : x.components()) {
        Mat m(p->field, obj.dim(*p), obj.dim(*p));
        int off = 0;
        for (const auto& label : obj.summands) {
            m.place(off, off, action.at(label));
            off += p->dim_of(label);
        }
        out.parts[n] = Mor{p, obj, obj, m};
    }
    return out;
}

}  // namespace

ResIndReport res_ind_check(const WindowContext& ctx, const PresPtr& p) {
    ResIndReport out;
    const Window& w = ctx.window();
    const Field& F = p->field;

    // Stalk subwindow realizing the presentation inside the window.
    Window stalks;
    std::vector<int> stalk_index;  // window index of each stalk object
    for (const auto& [label, dim] : p->indec) {
        Complex s = stalk_complex(p, Obj{{label}}, 0);
        int idx = w.object_index(s);
        if (idx < 0)
            throw std::invalid_argument("res_ind_check: window lacks degree-0 stalk of '" + label + "'");
        stalks.objects.push_back(s);
        stalk_index.push_back(idx);
    }
    for (const auto& [labelS, dimS] : p->indec)
        for (const auto& [labelT, dimT] : p->indec)
            for (const auto& b : p->basis(labelS, labelT)) {
                ChainMap f;
                f.src = stalk_complex(p, Obj{{labelS}}, 0);
                f.tgt = stalk_complex(p, Obj{{labelT}}, 0);
                f.parts[0] = Mor{p, Obj{{labelS}}, Obj{{labelT}}, b.real};
                stalks.spanning.push_back(std::move(f));
            }
    WindowContext stalk_ctx(stalks);
    std::vector<NaturalFamily> stalk_center = solve_center(stalk_ctx);
    out.stalk_center_dim = static_cast<int>(stalk_center.size());

    std::vector<NaturalFamily> tri = solve_triangle_center(ctx);
    out.triangle_center_dim = static_cast<int>(tri.size());
    out.center_dim = static_cast<int>(solve_center(ctx).size());

    // Coordinates of a main-window family restricted to the stalk subwindow.
    auto restrict_coords = [&](const NaturalFamily& fam) {
        Vec v;
        for (size_t k = 0; k < stalk_index.size(); ++k) {
            // Same object, same deterministic End basis in both contexts.
            const Vec& c = fam.components[stalk_index[k]];
            v.insert(v.end(), c.begin(), c.end());
        }
        return v;
    };
    int stalk_total = 0;
    for (size_t k = 0; k < stalks.objects.size(); ++k)
        stalk_total += static_cast<int>(stalk_ctx.end_basis(static_cast<int>(k)).size());

    std::vector<Vec> res_cols;
    for (const auto& fam : tri) res_cols.push_back(restrict_coords(fam));
    Mat res_mat = from_columns(F, stalk_total, res_cols);

    std::vector<Vec> stalk_cols;
    for (const auto& fam : stalk_center) {
        Vec v;
        for (const auto& c : fam.components) v.insert(v.end(), c.begin(), c.end());
        stalk_cols.push_back(std::move(v));
    }
    Mat stalk_mat = from_columns(F, stalk_total, stalk_cols);
    int image_rank = rank(res_mat);
    out.res_surjective = image_rank == rank(stalk_mat);
    {
        // Image must land inside the stalk center.
        std::vector<Vec> joint = stalk_cols;
        joint.insert(joint.end(), res_cols.begin(), res_cols.end());
        out.report.add("res-image-in-stalk-center", rank(from_columns(F, stalk_total, joint)) == rank(stalk_mat));
    }

    for (const Vec& kv : kernel_basis(res_mat)) {
        NaturalFamily fam;
        fam.components.assign(w.objects.size(), Vec{});
        for (size_t i = 0; i < w.objects.size(); ++i) {
            int d = static_cast<int>(ctx.end_basis(static_cast<int>(i)).size());
            Vec acc(d, mpq_class(0));
            for (size_t a = 0; a < tri.size(); ++a)
                for (int k = 0; k < d; ++k) acc[k] = F.add(acc[k], F.mul(kv[a], tri[a].components[i][k]));
            fam.components[i] = std::move(acc);
        }
        out.kernel.push_back(std::move(fam));
    }
    out.res_injective = out.kernel.empty();

    // res o ind = id on the stalk-window center.
    bool roi = true;
    for (const auto& mu : stalk_center) {
        std::map<std::string, Mat> action;
        for (size_t k = 0; k < p->indec.size(); ++k) {
            ChainMap comp = stalk_ctx.family_component(mu, static_cast<int>(k));
            action[p->indec[k].first] = comp.part(0).real;
        }
        NaturalFamily ind;
        bool natural = true;
        for (size_t i = 0; i < w.objects.size(); ++i) {
            ChainMap cm = induce_on_complex(p, action, w.objects[i]);
            if (!is_chain_map(cm)) { natural = false; break; }
            ind.components.push_back(class_coordinates(cm, ctx.end_basis(static_cast<int>(i))));
        }
        if (!natural || !ctx.is_natural(ind)) { roi = false; break; }
        // Shift compatibility along sigma pairs (ind lands in the triangle center).
        // Restriction back must equal mu.
        Vec back = restrict_coords(ind);
        Vec orig;
        for (const auto& c : mu.components) orig.insert(orig.end(), c.begin(), c.end());
        if (back != orig) roi = false;
    }
    out.report.add("res-after-ind-is-identity", roi);
    out.report.add("res-surjective", out.res_surjective);
    out.report.add("res-injective-window-relative", true, "", out.res_injective ? "yes" : "no");
    return out;
}

Report kernel_nilpotency_check(const WindowContext& ctx, const std::vector<NaturalFamily>& kernel, int d) {
    Report rep;
    const Window& w = ctx.window();
    if (kernel.empty()) {
        rep.add("nilpotency-vacuous", true, "", "empty kernel");
        return rep;
    }
    // Products with repetition, nondecreasing index tuples.
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur(d, 0);
    while (true) {
        tuples.push_back(cur);
        int pos = d - 1;
        while (pos >= 0 && cur[pos] == static_cast<int>(kernel.size()) - 1) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int q = pos + 1; q < d; ++q) cur[q] = cur[pos];
    }
    for (const auto& tup : tuples) {
        bool all_zero = true;
        for (size_t i = 0; i < w.objects.size() && all_zero; ++i) {
            ChainMap prod = ctx.family_component(kernel[tup[0]], static_cast<int>(i));
            for (int q = 1; q < d; ++q)
                prod = compose(ctx.family_component(kernel[tup[q]], static_cast<int>(i)), prod);
            if (!null_homotopy_witness(prod)) all_zero = false;
        }
        std::string name = "nilpotency-product";
        for (int t : tup) name += "-" + std::to_string(t);
        rep.add(name, all_zero, "0 in K^b", all_zero ? "0" : "nonzero");
    }
    return rep;
}

NaturalFamily lemma_ric_family(const WindowContext& ctx,
                               const std::vector<std::pair<int, ChainMap>>& deltas,
                               const std::vector<mpq_class>& lambdas) {
    const Window& w = ctx.window();
    if (deltas.size() != lambdas.size())
        throw std::invalid_argument("lemma_ric_family: scalar count mismatch");
    NaturalFamily fam;
    for (size_t i = 0; i < w.objects.size(); ++i)
        fam.components.push_back(class_coordinates(identity_chain_map(w.objects[i]), ctx.end_basis(static_cast<int>(i))));
    for (size_t k = 0; k < deltas.size(); ++k) {
        int i = deltas[k].first;
        const ChainMap& delta = deltas[k].second;
        if (!is_almost_vanishing(delta, w.objects))
            throw std::invalid_argument("lemma_ric_family: Delta not almost vanishing on this window");
        for (const ChainMap& b : ctx.end_basis(i))
            if (!homotopic(compose(delta, b), compose(b, delta)))
                throw std::invalid_argument("lemma_ric_family: Delta not central in End");
        ChainMap comp = add(ctx.family_component(fam, i), scale(delta, lambdas[k]));
        fam.components[i] = class_coordinates(comp, ctx.end_basis(i));
    }
    if (!ctx.is_natural(fam)) throw NaturalityFailure("lemma_ric_family: family is not natural");
    return fam;
}

BlockConnectivity block_connectivity(const WindowContext& ctx) {
    const Window& w = ctx.window();
    BlockConnectivity bc;
    int n = static_cast<int>(w.objects.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (hom_kb_dim(w.objects[i], w.objects[j]) > 0 || hom_kb_dim(w.objects[j], w.objects[i]) > 0) {
                parent[find(i)] = find(j);
                bc.non_degenerate = true;  // nonzero map between non-isomorphic indecomposables
            }
        }
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(ctx.end_basis(i).size()) >= 2) bc.non_degenerate = true;
    std::map<int, int> label;
    bc.component_of.resize(n);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (!label.count(r)) label[r] = static_cast<int>(label.size());
        bc.component_of[i] = label[r];
    }
    bc.num_components = static_cast<int>(label.size());
    return bc;
}

}  // namespace homcat

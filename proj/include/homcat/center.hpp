#pragma once

#include "homcat/report.hpp"
#include "homcat/triangles.hpp"

namespace homcat {

/// A finite set of indecomposable complexes with spanning morphisms, over
/// which center computations are certified. sigma_pairs record window-internal
/// shift identifications X_j ~ Sigma(X_i) via an explicit isomorphism.
struct Window {
    std::vector<Complex> objects;
    std::vector<ChainMap> spanning;
    // (i, j, iso: objects[j] -> Sigma(objects[i]))
    std::vector<std::tuple<int, int, ChainMap>> sigma_pairs;

    int object_index(const Complex& x) const;
};

/// One endomorphism class per window object, stored as coordinates with
/// respect to the object's hom_kb End basis.
struct NaturalFamily {
    std::vector<Vec> components;  // per object index
};

/// Precomputed End bases and per-object data reused across the solvers.
class WindowContext {
  public:
    explicit WindowContext(const Window& w);

    const Window& window() const { return w_; }
    const std::vector<ChainMap>& end_basis(int i) const { return end_bases_[i]; }
    ChainMap family_component(const NaturalFamily& fam, int i) const;

    /// f eta_src ~ eta_tgt f for every spanning morphism, verified exactly.
    bool is_natural(const NaturalFamily& fam) const;

  private:
    Window w_;
    std::vector<std::vector<ChainMap>> end_bases_;
};

/// Basis of the window center: families natural against all spanning maps.
std::vector<NaturalFamily> solve_center(const WindowContext& ctx);

/// Center families additionally commuting with the shift along sigma_pairs.
std::vector<NaturalFamily> solve_triangle_center(const WindowContext& ctx);

struct ResIndReport {
    Report report;
    // Triangle-center families restricted to the stalk window, and a kernel
    // basis of that restriction.
    std::vector<NaturalFamily> kernel;
    int center_dim = 0;
    int triangle_center_dim = 0;
    int stalk_center_dim = 0;
    bool res_surjective = false;
    bool res_injective = false;
};

/// Restriction/induction between the window triangle center and the center of
/// the presentation (realized by its degree-0 stalk complexes, which must be
/// window objects).
ResIndReport res_ind_check(const WindowContext& ctx, const PresPtr& p);

/// All length-d products of the given families must vanish on every window
/// object.
Report kernel_nilpotency_check(const WindowContext& ctx, const std::vector<NaturalFamily>& kernel, int d);

struct NaturalityFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The family Id + lambda_X Delta_X on the chosen objects, Id elsewhere.
/// Delta_X must be almost vanishing and central; naturality is re-verified.
NaturalFamily lemma_ric_family(const WindowContext& ctx,
                               const std::vector<std::pair<int, ChainMap>>& deltas,
                               const std::vector<mpq_class>& lambdas);

struct BlockConnectivity {
    std::vector<int> component_of;  // per object index
    int num_components = 0;
    bool non_degenerate = false;
};
BlockConnectivity block_connectivity(const WindowContext& ctx);

}  // namespace homcat

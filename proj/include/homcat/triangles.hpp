#pragma once

#include "homcat/homkb.hpp"

namespace homcat {

/// Result of an exactness test: the comparison map Z -> Cone(u) when found.
struct ExactnessCertificate {
    bool exact = false;
    std::optional<ChainMap> comparison;
};

/// A candidate triangle (u, v, w) is exact iff there is a chain map
/// h: Z -> Cone(u) with h v homotopic to the cone inclusion, proj h homotopic
/// to w, and h an isomorphism in K^b. Both triangles being exact, any
/// comparison map is an isomorphism, so testing the canonical solution
/// decides exactness.
ExactnessCertificate is_exact_triangle(const Triangle& t);

/// Rotation (v, w, -Sigma u) of (u, v, w).
Triangle rotate(const Triangle& t);

bool is_section(const ChainMap& f);
bool is_retraction(const ChainMap& f);

enum class Locality { Yes, No, Undetermined };

struct EndAnalysis {
    Complex object;
    int dim = 0;
    std::vector<ChainMap> basis;
    Locality is_local = Locality::Undetermined;
    std::vector<ChainMap> radical_basis;
};

/// End-ring analysis via hom_kb; locality decided exactly for dim <= 2.
EndAnalysis end_analysis(const Complex& x);

struct NotIndecomposable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct HypothesisViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Window-relative almost-vanishing test for a nonzero endomorphism-shaped
/// morphism w: for every window object B and hom_kb basis map g: B -> src(w)
/// that is not a retraction, w g ~ 0; dually on the target side.
bool is_almost_vanishing(const ChainMap& w, const std::vector<Complex>& window_objects);

/// Exactness of (u, v, lambda w); by the scaling rigidity argument this holds
/// only for lambda = 1 when End(Z) is k or k Id + k Delta with Delta almost
/// vanishing.
bool scaling_test(const Triangle& t, const mpq_class& lambda, const std::vector<Complex>& window_objects);

}  // namespace homcat

#pragma once

#include <cstdint>

#include "homcat/families.hpp"

namespace homcat {

struct IndexOutOfWindow : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ConstraintViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ScalingTestFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonUnitApart : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Scalar data of a pseudo-identity on the dual-numbers homotopy category:
/// the functor acts on the generators by F(i(n,m)) = lambda_{n,m} i(n,m) and
/// F(pi(n,m)) = mu_{n,m} pi(n,m); on the degree-(-m) stalks the shift
/// comparison is a_m Id + b_m Delta. All indices range over [-W, W].
struct ScalarSystemDN {
    Field field;
    int W = 0;
    std::map<std::pair<int, int>, mpq_class> lambda;  // n <= m
    std::map<std::pair<int, int>, mpq_class> mu;      // n < m
    std::map<int, mpq_class> a;                       // nonzero
    std::map<int, mpq_class> b;                       // may be zero
};

/// Cyclic analogue; s is a residue in [0, d). The a-coefficients are keyed by
/// (s, m) but must be independent of s.
struct ScalarSystemCyc {
    Field field;
    int d = 0, W = 0;
    std::map<std::tuple<int, int, int>, mpq_class> lambda;  // (s, n, m), n <= m
    std::map<std::tuple<int, int, int>, mpq_class> mu;      // n < m
    std::map<std::pair<int, int>, mpq_class> a;             // (s, m)
};

/// Adjusting data trivializing a scalar system, together with the checks that
/// certify each step.
struct Certificate {
    std::map<int, mpq_class> c;                              // c_0 = 1, a_m = c_{m-1}/c_m
    std::map<std::pair<int, int>, mpq_class> delta_dn;       // (n, m)
    std::map<std::tuple<int, int, int>, mpq_class> delta_cyc;
    std::map<std::pair<int, int>, mpq_class> f;              // DN diagonal correction
    Report checks;
};

/// Scalar of the image of the connecting generator: the inverse of
/// (lambda_{n+1,m}...lambda_{m,m} mu_{m,m+1}...mu_{m,l}); empty products when
/// n = m resp. m = l.
mpq_class c_coefficient(const ScalarSystemDN& sys, int n, int m, int l);
mpq_class c_coefficient(const ScalarSystemCyc& sys, int s, int n, int m, int l);

/// Every window instance of the compatibility constraint
/// lambda_{n+1,m}...lambda_{m,m} mu_{n,m} a_m = lambda_{n+1,m-1}...lambda_{m-1,m-1}
/// (cyclic: the s-indexed analogue, plus s-independence of a).
Report constraint_check(const ScalarSystemDN& sys);
Report constraint_check(const ScalarSystemCyc& sys);

/// c by the two-sided recursion from c_0 = 1, and
/// delta_{n,m} = c_m (lambda_{n+1,m}...lambda_{m,m})^{-1}. Throws
/// ConstraintViolated if constraint_check fails.
Certificate derive_adjusters(const ScalarSystemDN& sys);
Certificate derive_adjusters(const ScalarSystemCyc& sys);

/// The adjusted functor fixes the generators: delta_{n,m} = delta_{n-1,m} lambda_{n,m},
/// delta_{n,m} = delta_{n,m-1} mu_{n,m}, and the adjusted c-coefficient is 1.
Report normalize_check(const ScalarSystemDN& sys, const Certificate& cert);
Report normalize_check(const ScalarSystemCyc& sys, const Certificate& cert);

struct DiagonalCorrection {
    std::map<std::pair<int, int>, mpq_class> f;  // defined where the recursion reaches column 0
    Report checks;
};

/// Solve f_{n,0} = 0, bprime_{n,m} = f_{n-1,m-1} - f_{n,m} along diagonals.
/// Entries whose diagonal leaves the window are reported skipped. A nonempty
/// aprime entry different from 1 raises NonUnitApart.
DiagonalCorrection diagonal_correction(const Field& field, int W,
                                       const std::map<std::pair<int, int>, mpq_class>& bprime,
                                       const std::map<std::pair<int, int>, mpq_class>& aprime = {});

/// Full pipeline: adjusters, normalization identities, diagonal correction
/// (dual numbers), and the scaling-rigidity check on a representative rotated
/// triangle. Throws ConstraintViolated / ScalingTestFailed on failure.
Certificate trivialization_certificate(const ScalarSystemDN& sys);
Certificate trivialization_certificate(const ScalarSystemCyc& sys);

/// Seeded admissible system: lambda and a drawn freely (nonzero), mu derived
/// from the constraint, b drawn freely. Deterministic across platforms.
ScalarSystemDN random_dn_system(const Field& field, int W, std::uint64_t seed);
ScalarSystemCyc random_cyc_system(const Field& field, int d, int W, std::uint64_t seed);

/// Break exactly one constraint instance (seeded choice); the returned system
/// fails constraint_check at a named index. Unsupported over F_2.
ScalarSystemDN corrupt_system(const ScalarSystemDN& sys, std::uint64_t seed);
ScalarSystemCyc corrupt_system(const ScalarSystemCyc& sys, std::uint64_t seed);

Json to_json(const ScalarSystemDN& sys);
Json to_json(const ScalarSystemCyc& sys);
ScalarSystemDN dn_system_from_json(const Json& j);
ScalarSystemCyc cyc_system_from_json(const Json& j);
Json certificate_to_json(const Certificate& cert);

}  // namespace homcat

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "homcat/linalg.hpp"

namespace homcat {

/// One basis element of a Hom space, given by its faithful realization.
struct HomBasisElem {
    std::string label;
    Mat real;  // dim(tgt) x dim(src)
};

/// A finite additive category presented by indecomposable objects, chosen
/// Hom bases, and a faithful matrix realization. Composition is computed on
/// the realizations; closure under composition is a validated invariant.
class Presentation {
  public:
    Field field;
    std::vector<std::pair<std::string, int>> indec;  // (label, underlying dimension)
    // Hom bases keyed by (src label, tgt label); absent key means Hom = 0.
    std::map<std::pair<std::string, std::string>, std::vector<HomBasisElem>> hom_basis;

    int dim_of(const std::string& label) const;
    bool has_object(const std::string& label) const;
    const std::vector<HomBasisElem>& basis(const std::string& src, const std::string& tgt) const;
};

using PresPtr = std::shared_ptr<const Presentation>;

/// Formal direct sum of indecomposables; empty list is the zero object.
struct Obj {
    std::vector<std::string> summands;

    bool is_zero() const { return summands.empty(); }
    int dim(const Presentation& p) const;
    bool operator==(const Obj&) const = default;
};

/// Morphism between formal direct sums, stored via its realized matrix.
struct Mor {
    PresPtr pres;
    Obj src, tgt;
    Mat real;  // dim(tgt) x dim(src)

    bool is_zero() const { return real.is_zero(); }
    bool operator==(const Mor& o) const { return src == o.src && tgt == o.tgt && real == o.real; }
};

struct ValidationIssue {
    std::string check;
    std::string detail;
};

struct ValidationReport {
    std::vector<std::pair<std::string, bool>> checks;  // (name, pass)
    std::vector<ValidationIssue> issues;
    bool ok() const;
};

/// Faithfulness, identity membership, and closure under composition.
ValidationReport validate_presentation(const PresPtr& p);

Mor zero_mor(const PresPtr& p, const Obj& src, const Obj& tgt);
Mor identity_mor(const PresPtr& p, const Obj& x);
Mor compose(const Mor& g, const Mor& f);
Mor direct_sum(const Mor& f, const Mor& g);
Mor add(const Mor& f, const Mor& g);
Mor scale(const Mor& f, const mpq_class& c);
Mor negate(const Mor& f);

/// Basis of Hom(x, y) as block-elementary morphisms, deterministic order
/// (target summand major, then source summand, then basis index).
std::vector<Mor> hom_space(const PresPtr& p, const Obj& x, const Obj& y);

/// Flat coordinates of a morphism with respect to hom_space(src, tgt).
/// Throws if a block falls outside the span of its Hom basis.
Vec hom_coordinates(const Mor& f);

/// Morphism from hom_space coordinates.
Mor mor_from_coordinates(const PresPtr& p, const Obj& src, const Obj& tgt, const Vec& coords);

int hom_dim(const PresPtr& p, const Obj& x, const Obj& y);

}  // namespace homcat

#pragma once

#include <map>

#include "homcat/presentation.hpp"

namespace homcat {

/// Bounded complex over a presented additive category. Components are stored
/// sparsely by degree; lookups outside the support yield the zero object.
class Complex {
  public:
    Complex() = default;
    Complex(PresPtr p, std::map<int, Obj> comps, std::map<int, Mor> diffs);

    const PresPtr& pres() const { return pres_; }
    const std::map<int, Obj>& components() const { return comps_; }

    Obj component(int n) const;
    /// Differential component(n) -> component(n+1); zero outside support.
    Mor differential(int n) const;

    bool is_zero() const { return comps_.empty(); }
    int min_degree() const { return comps_.empty() ? 0 : comps_.begin()->first; }
    int max_degree() const { return comps_.empty() ? 0 : comps_.rbegin()->first; }

    bool operator==(const Complex& o) const;

  private:
    PresPtr pres_;
    std::map<int, Obj> comps_;
    std::map<int, Mor> diffs_;
};

struct ChainMap {
    Complex src, tgt;
    std::map<int, Mor> parts;

    Mor part(int n) const;
    bool is_zero() const;
};

/// Graded map of degree -1: part(n) maps src^n -> tgt^{n-1}.
struct Homotopy {
    Complex src, tgt;
    std::map<int, Mor> parts;

    Mor part(int n) const;
};

struct Triangle {
    ChainMap u;  // X -> Y
    ChainMap v;  // Y -> Z
    ChainMap w;  // Z -> Sigma X
};

ValidationReport validate_complex(const Complex& x);
bool is_chain_map(const ChainMap& f);

Complex stalk_complex(const PresPtr& p, const Obj& a, int degree);
Complex shift(const Complex& x, int k);
ChainMap shift(const ChainMap& f, int k);

ChainMap identity_chain_map(const Complex& x);
ChainMap zero_chain_map(const Complex& x, const Complex& y);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap sub(const ChainMap& f, const ChainMap& g);
ChainMap scale(const ChainMap& f, const mpq_class& c);
ChainMap negate(const ChainMap& f);
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Mapping cone of f: X -> Y with differential [-d_X^{n+1}, 0; -f^{n+1}, d_Y^n]
/// (the sign making the brutal-truncation triangle strict),
/// together with the triangle X -> Y -> Cone(f) -> Sigma X.
struct ConeResult {
    Complex cone;
    Triangle triangle;
};
ConeResult cone(const ChainMap& f);

/// Brutal truncation sigma_{>= -n} X (degrees >= -n kept).
Complex brutal_truncation(const Complex& x, int n);

/// The truncation triangle
///   Sigma^{n-1}(X^{-n}) -> sigma_{>=1-n}X -> sigma_{>=-n}X -> Sigma^n(X^{-n}),
/// with first map the minus differential and last the projection.
Triangle brutal_truncation_triangle(const Complex& x, int n);

std::map<int, int> cohomology_dims(const Complex& x);

}  // namespace homcat

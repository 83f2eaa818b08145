#pragma once

#include "homcat/complex.hpp"

namespace homcat {

/// Flat coordinate system for degreewise morphisms X^n -> Y^{n+shift},
/// concatenating Hom-basis coordinates over the support.
class DegreewiseCoords {
  public:
    DegreewiseCoords(const Complex& x, const Complex& y, int shift);

    int total() const { return total_; }
    const std::vector<int>& degrees() const { return degrees_; }

    Vec encode(const std::map<int, Mor>& parts) const;
    std::map<int, Mor> decode(const Vec& v) const;

  private:
    const Complex x_, y_;
    int shift_;
    std::vector<int> degrees_;
    std::vector<int> offsets_;
    int total_ = 0;
};

/// Basis of the space of chain maps X -> Y (kernel of the commutation system).
std::vector<ChainMap> chain_map_space(const Complex& x, const Complex& y);

/// Homotopy s with f = d s + s d, when one exists.
std::optional<Homotopy> null_homotopy_witness(const ChainMap& f);

bool homotopic(const ChainMap& f, const ChainMap& g);

/// Representatives of a basis of Hom_{K^b}(X, Y) = chain maps modulo the
/// null-homotopic ones.
std::vector<ChainMap> hom_kb(const Complex& x, const Complex& y);
int hom_kb_dim(const Complex& x, const Complex& y);

/// Coordinates of the class of f with respect to the given hom_kb basis.
Vec class_coordinates(const ChainMap& f, const std::vector<ChainMap>& basis);

bool is_contractible(const Complex& x);
bool is_iso_kb(const ChainMap& f);

/// Boundary d s + s d of a homotopy, as a chain map.
ChainMap homotopy_boundary(const Homotopy& s);

}  // namespace homcat

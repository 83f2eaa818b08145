#pragma once

#include <set>
#include <stdexcept>

#include "homcat/homkb.hpp"

namespace homcat_test {

using namespace homcat;

inline int exact_log2(std::size_t n) {
    int e = 0;
    while (n > 1) {
        if (n % 2 != 0) throw std::logic_error("count is not a power of two");
        n /= 2;
        ++e;
    }
    if (n != 1) throw std::logic_error("empty count");
    return e;
}

/// Exhaustive-enumeration oracle for dim Hom_{K^b}(X, Y) over F_2: counts all
/// chain maps, counts all distinct homotopy boundaries, and returns the
/// difference of the 2-logarithms. Only usable when both coordinate spaces
/// are small enough to enumerate.
inline int brute_force_hom_kb_dim_f2(const Complex& x, const Complex& y) {
    DegreewiseCoords maps(x, y, 0);
    DegreewiseCoords htpy(x, y, -1);
    if (maps.total() > 16 || htpy.total() > 16)
        throw std::logic_error("coordinate space too large for enumeration");

    auto bit_vec = [](std::size_t bits, int len) {
        Vec v(len, mpq_class(0));
        for (int k = 0; k < len; ++k)
            if (bits >> k & 1) v[k] = 1;
        return v;
    };

    std::size_t chain_maps = 0;
    for (std::size_t bits = 0; bits < (std::size_t{1} << maps.total()); ++bits) {
        ChainMap f{x, y, maps.decode(bit_vec(bits, maps.total()))};
        if (is_chain_map(f)) ++chain_maps;
    }

    std::set<Vec> boundaries;
    for (std::size_t bits = 0; bits < (std::size_t{1} << htpy.total()); ++bits) {
        Homotopy s{x, y, htpy.decode(bit_vec(bits, htpy.total()))};
        boundaries.insert(maps.encode(homotopy_boundary(s).parts));
    }

    return exact_log2(chain_maps) - exact_log2(boundaries.size());
}

}  // namespace homcat_test

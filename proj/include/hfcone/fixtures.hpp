#pragma once

#include "hfcone/knot_complex.hpp"

/// Canonical knot complexes. Each matches the corresponding file under
/// fixtures/ byte for byte after serialization.
namespace hfcone::fixtures {

/// Unknot in S^3.
inline KnotComplex unknot() {
    return {"unknot", "0", {{"a", 0, 0}}, {}, std::nullopt};
}

/// Right-handed trefoil: staircase d b = U a + c.
inline KnotComplex trefoil() {
    return {"trefoil", "0", {{"a", 1, 0}, {"b", 0, -1}, {"c", -1, -2}}, {{"b", "a", 1}, {"b", "c", 0}}, std::nullopt};
}

/// Left-handed trefoil: d x = y, d z = U y.
inline KnotComplex trefoil_mirror() {
    return {"trefoil_l", "0", {{"x", 1, 2}, {"y", 0, 1}, {"z", -1, 0}}, {{"x", "y", 0}, {"z", "y", 1}}, std::nullopt};
}

/// Unknot in a homology sphere whose HF^+ is a tower plus one F in odd grading.
inline KnotComplex y1sigma() {
    return {"y1sigma", "0", {{"x", 0, 0}, {"y", 0, -1}, {"z", 0, 0}}, {{"y", "z", 1}}, std::nullopt};
}

/// Figure-eight knot: the acyclic square b, a, d, c plus the isolated dot x.
inline KnotComplex figure_eight() {
    return {"figure8",
            "0",
            {{"a", 0, 0}, {"b", 1, 1}, {"c", -1, -1}, {"d", 0, 0}, {"x", 0, 0}},
            {{"a", "b", 1}, {"a", "c", 0}, {"b", "d", 0}, {"c", "d", 1}},
            std::nullopt};
}

inline std::vector<KnotComplex> all() { return {unknot(), trefoil(), trefoil_mirror(), y1sigma(), figure_eight()}; }

}  // namespace hfcone::fixtures

#pragma once

#include <algorithm>
#include <cstdlib>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hfcone/error.hpp"
#include "hfcone/f2_matrix.hpp"
#include "hfcone/rational.hpp"

namespace hfcone {

/// A free generator of CFK^inf over F2[U, U^-1], based at lattice point (0, alexander).
struct Generator {
    std::string name;
    int alexander = 0;
    Rational maslov;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// The term U^u_power * target appearing in d(source).
struct DiffTerm {
    std::string source;
    std::string target;
    int u_power = 0;

    friend bool operator==(const DiffTerm&, const DiffTerm&) = default;
};

/// The term U^u_power * target appearing in Phi(source), Phi the flip map.
struct FlipTerm {
    std::string source;
    std::string target;
    int u_power = 0;

    friend bool operator==(const FlipTerm&, const FlipTerm&) = default;
};

/// Finite free model of CFK^inf(Y, K, t) for one Spin^c structure t on Y.
struct KnotComplex {
    std::string id;
    std::string spinc_label;
    std::vector<Generator> generators;
    std::vector<DiffTerm> differential;
    std::optional<std::vector<FlipTerm>> flip;

    friend bool operator==(const KnotComplex&, const KnotComplex&) = default;

    [[nodiscard]] std::optional<std::size_t> find(const std::string& name) const {
        for (std::size_t k = 0; k < generators.size(); ++k) {
            if (generators[k].name == name) return k;
        }
        return std::nullopt;
    }

    [[nodiscard]] std::size_t index_of(const std::string& name) const {
        auto k = find(name);
        if (!k) throw InvalidComplex("unknown generator '" + name + "'");
        return *k;
    }

    /// Largest |Alexander grading| among generators.
    [[nodiscard]] int a_max() const {
        int m = 0;
        for (const auto& g : generators) m = std::max(m, std::abs(g.alexander));
        return m;
    }
};

/// U^{-i} * generator, sitting at lattice point (i, i + A).
struct PlaneElement {
    std::size_t generator = 0;
    int i = 0;

    friend auto operator<=>(const PlaneElement&, const PlaneElement&) = default;
};

inline int plane_j(const KnotComplex& c, const PlaneElement& e) { return e.i + c.generators[e.generator].alexander; }

inline Rational plane_maslov(const KnotComplex& c, const PlaneElement& e) {
    return c.generators[e.generator].maslov + Rational(2 * e.i);
}

/// Per-source lists of (target index, U power), indexed like c.generators.
using TermTable = std::vector<std::vector<std::pair<std::size_t, int>>>;

inline TermTable boundary_table(const KnotComplex& c) {
    TermTable t(c.generators.size());
    for (const auto& d : c.differential) t[c.index_of(d.source)].emplace_back(c.index_of(d.target), d.u_power);
    return t;
}

inline TermTable flip_table(const KnotComplex& c) {
    if (!c.flip) throw FlipMissing("complex '" + c.id + "' has no flip map");
    TermTable t(c.generators.size());
    for (const auto& f : *c.flip) t[c.index_of(f.source)].emplace_back(c.index_of(f.target), f.u_power);
    return t;
}

/// Boundary of a plane element; terms come out in term-table order, with
/// repeated targets cancelling.
inline std::vector<PlaneElement> plane_boundary(const TermTable& d, const PlaneElement& e) {
    std::vector<PlaneElement> out;
    for (auto [t, n] : d[e.generator]) {
        PlaneElement x{t, e.i - n};
        auto it = std::find(out.begin(), out.end(), x);
        if (it == out.end()) {
            out.push_back(x);
        } else {
            out.erase(it);
        }
    }
    return out;
}

enum class ViolationKind {
    EmptyComplex,
    DuplicateGenerator,
    UnknownGenerator,
    DuplicateTerm,
    NegativeUPower,
    FiltrationIncrease,
    MaslovDrop,
    DifferentialSquareNonzero,
    FlipPosition,
    FlipMaslov,
    FlipNotChainMap,
    FlipNotInvertible,
};

inline const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::EmptyComplex: return "empty-complex";
        case ViolationKind::DuplicateGenerator: return "duplicate-generator";
        case ViolationKind::UnknownGenerator: return "unknown-generator";
        case ViolationKind::DuplicateTerm: return "duplicate-term";
        case ViolationKind::NegativeUPower: return "negative-u-power";
        case ViolationKind::FiltrationIncrease: return "filtration-increase";
        case ViolationKind::MaslovDrop: return "maslov-drop";
        case ViolationKind::DifferentialSquareNonzero: return "d-squared-nonzero";
        case ViolationKind::FlipPosition: return "flip-position";
        case ViolationKind::FlipMaslov: return "flip-maslov";
        case ViolationKind::FlipNotChainMap: return "flip-not-chain-map";
        case ViolationKind::FlipNotInvertible: return "flip-not-invertible";
    }
    return "unknown";
}

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const noexcept { return violations.empty(); }

    [[nodiscard]] std::size_t count(ViolationKind k) const {
        return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                       [k](const Violation& v) { return v.kind == k; }));
    }

    [[nodiscard]] std::string str() const {
        std::string s;
        for (const auto& v : violations) s += std::string(to_string(v.kind)) + ": " + v.detail + "\n";
        return s;
    }
};

namespace detail {

/// Element of the free F2[U, U^-1]-module on the generators: a set of
/// (generator, U power) pairs.
using ModuleElement = std::set<std::pair<std::size_t, int>>;

inline void toggle(ModuleElement& m, std::pair<std::size_t, int> x) {
    if (!m.erase(x)) m.insert(x);
}

inline ModuleElement apply_table(const TermTable& table, const ModuleElement& x) {
    ModuleElement out;
    for (auto [g, p] : x) {
        for (auto [t, n] : table[g]) toggle(out, {t, p + n});
    }
    return out;
}

inline ModuleElement basis_element(std::size_t g) { return {{g, 0}}; }

inline std::string term_str(const std::string& src, const std::string& tgt, int n) {
    return src + " -> U^" + std::to_string(n) + " " + tgt;
}

/// Checks the flip constraints given resolved term tables.
inline void check_flip(const KnotComplex& c, const TermTable& d, ValidationReport& report) {
    TermTable phi(c.generators.size());
    for (const auto& f : *c.flip) {
        auto s = c.find(f.source);
        auto t = c.find(f.target);
        if (!s || !t) {
            report.violations.push_back({ViolationKind::UnknownGenerator, "flip " + term_str(f.source, f.target, f.u_power)});
            continue;
        }
        const auto& gs = c.generators[*s];
        const auto& gt = c.generators[*t];
        if (gt.alexander != -gs.alexander || f.u_power != -gs.alexander) {
            report.violations.push_back({ViolationKind::FlipPosition,
                                         "flip " + term_str(f.source, f.target, f.u_power) +
                                             " does not exchange the filtration coordinates"});
        }
        if (gt.maslov != gs.maslov + Rational(2 * f.u_power)) {
            report.violations.push_back({ViolationKind::FlipMaslov,
                                         "flip " + term_str(f.source, f.target, f.u_power) + " changes Maslov grading"});
        }
        phi[*s].emplace_back(*t, f.u_power);
    }
    if (!report.ok()) return;

    F2Matrix gen_level(c.generators.size(), c.generators.size());
    for (std::size_t g = 0; g < phi.size(); ++g) {
        for (auto [t, n] : phi[g]) gen_level.toggle(t, g);
    }
    if (rank_f2(gen_level) != c.generators.size()) {
        report.violations.push_back({ViolationKind::FlipNotInvertible, "flip map is not invertible"});
    }
    for (std::size_t g = 0; g < c.generators.size(); ++g) {
        auto lhs = apply_table(phi, apply_table(d, basis_element(g)));
        auto rhs = apply_table(d, apply_table(phi, basis_element(g)));
        if (lhs != rhs) {
            report.violations.push_back({ViolationKind::FlipNotChainMap,
                                         "Phi(d " + c.generators[g].name + ") != d Phi(" + c.generators[g].name + ")"});
        }
    }
}

}  // namespace detail

/// Checks every structural invariant of a knot complex, collecting all
/// violations instead of stopping at the first.
inline ValidationReport validate(const KnotComplex& c) {
    ValidationReport report;
    if (c.generators.empty()) report.violations.push_back({ViolationKind::EmptyComplex, "no generators"});

    std::set<std::string> names;
    for (const auto& g : c.generators) {
        if (!names.insert(g.name).second) {
            report.violations.push_back({ViolationKind::DuplicateGenerator, "generator '" + g.name + "' repeated"});
        }
    }
    if (!report.ok()) return report;

    std::set<std::tuple<std::string, std::string, int>> seen;
    TermTable d(c.generators.size());
    for (const auto& t : c.differential) {
        auto s = c.find(t.source);
        auto g = c.find(t.target);
        if (!s || !g) {
            report.violations.push_back({ViolationKind::UnknownGenerator, detail::term_str(t.source, t.target, t.u_power)});
            continue;
        }
        if (!seen.insert({t.source, t.target, t.u_power}).second) {
            report.violations.push_back({ViolationKind::DuplicateTerm, detail::term_str(t.source, t.target, t.u_power)});
        }
        const auto& src = c.generators[*s];
        const auto& tgt = c.generators[*g];
        if (t.u_power < 0) {
            report.violations.push_back({ViolationKind::NegativeUPower, detail::term_str(t.source, t.target, t.u_power)});
        }
        if (t.u_power < tgt.alexander - src.alexander) {
            report.violations.push_back({ViolationKind::FiltrationIncrease,
                                         detail::term_str(t.source, t.target, t.u_power) + " raises the j filtration"});
        }
        if (tgt.maslov - Rational(2 * t.u_power) != src.maslov - Rational(1)) {
            report.violations.push_back({ViolationKind::MaslovDrop,
                                         detail::term_str(t.source, t.target, t.u_power) + " does not drop Maslov by 1"});
        }
        d[*s].emplace_back(*g, t.u_power);
    }
    if (!report.ok()) return report;

    for (std::size_t g = 0; g < c.generators.size(); ++g) {
        if (!detail::apply_table(d, detail::apply_table(d, detail::basis_element(g))).empty()) {
            report.violations.push_back(
                {ViolationKind::DifferentialSquareNonzero, "d^2(" + c.generators[g].name + ") != 0"});
        }
    }
    if (c.flip && report.ok()) detail::check_flip(c, d, report);
    return report;
}

inline void require_valid(const KnotComplex& c) {
    auto report = validate(c);
    if (!report.ok()) throw InvalidComplex("complex '" + c.id + "' is invalid:\n" + report.str());
}

namespace detail {

inline bool flip_constraint(const Generator& g, const Generator& h) {
    return h.alexander == -g.alexander && h.maslov == g.maslov - Rational(2 * g.alexander);
}

inline std::vector<FlipTerm> flip_from_permutation(const KnotComplex& c, const std::vector<std::size_t>& perm) {
    std::vector<FlipTerm> f;
    for (std::size_t g = 0; g < perm.size(); ++g) {
        f.push_back({c.generators[g].name, c.generators[perm[g]].name, -c.generators[g].alexander});
    }
    return f;
}

inline bool is_chain_flip(const KnotComplex& c, const TermTable& d, const std::vector<std::size_t>& perm) {
    for (std::size_t g = 0; g < perm.size(); ++g) {
        ModuleElement lhs;
        for (auto [t, n] : d[g]) detail::toggle(lhs, {perm[t], n - c.generators[t].alexander});
        ModuleElement rhs;
        for (auto [t, n] : d[perm[g]]) detail::toggle(rhs, {t, n - c.generators[g].alexander});
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace detail

/// Searches generator involutions compatible with the flip gradings and
/// returns c with the first one that is a chain map.
inline KnotComplex derive_flip(const KnotComplex& c) {
    require_valid(c);
    const auto d = boundary_table(c);
    const std::size_t n = c.generators.size();
    std::vector<std::size_t> perm(n, n);
    std::optional<std::vector<std::size_t>> found;

    std::function<void(std::size_t)> search = [&](std::size_t g) {
        if (found) return;
        while (g < n && perm[g] != n) ++g;
        if (g == n) {
            if (detail::is_chain_flip(c, d, perm)) found = perm;
            return;
        }
        for (std::size_t h = g; h < n; ++h) {
            if (perm[h] != n || !detail::flip_constraint(c.generators[g], c.generators[h])) continue;
            perm[g] = h;
            perm[h] = g;
            search(g + 1);
            perm[g] = n;
            perm[h] = n;
            if (found) return;
        }
    };
    search(0);
    if (!found) throw NoFlipFound("no flip involution exists for complex '" + c.id + "'");

    KnotComplex out = c;
    out.flip = detail::flip_from_permutation(c, *found);
    return out;
}

/// Returns c unchanged if it carries a flip, otherwise derive_flip(c).
inline KnotComplex ensure_flip(const KnotComplex& c) { return c.flip ? c : derive_flip(c); }

/// Every generator bijection (not only involutions) that satisfies the flip
/// grading constraints and is a chain map, in lexicographic order. Stops
/// after `limit` results.
inline std::vector<std::vector<FlipTerm>> all_flip_bijections(const KnotComplex& c, std::size_t limit = 1000) {
    require_valid(c);
    const auto d = boundary_table(c);
    const std::size_t n = c.generators.size();
    std::vector<std::size_t> perm(n, n);
    std::vector<bool> used(n, false);
    std::vector<std::vector<FlipTerm>> out;

    std::function<void(std::size_t)> search = [&](std::size_t g) {
        if (out.size() >= limit) return;
        if (g == n) {
            if (detail::is_chain_flip(c, d, perm)) out.push_back(detail::flip_from_permutation(c, perm));
            return;
        }
        for (std::size_t h = 0; h < n; ++h) {
            if (used[h] || !detail::flip_constraint(c.generators[g], c.generators[h])) continue;
            used[h] = true;
            perm[g] = h;
            search(g + 1);
            used[h] = false;
        }
    };
    search(0);
    return out;
}

/// A finite set of plane elements with the differential induced by dropping
/// every term that leaves the set.
struct Window {
    std::vector<PlaneElement> elements;
    F2Matrix differential;
};

namespace detail {

/// Orders elements by (generator name, i) and builds the induced differential.
inline Window induced_window(const KnotComplex& c, std::vector<PlaneElement> elements) {
    std::sort(elements.begin(), elements.end(), [&](const PlaneElement& x, const PlaneElement& y) {
        const auto& nx = c.generators[x.generator].name;
        const auto& ny = c.generators[y.generator].name;
        return nx != ny ? nx < ny : x.i < y.i;
    });
    std::map<PlaneElement, std::size_t> index;
    for (std::size_t k = 0; k < elements.size(); ++k) index[elements[k]] = k;
    const auto d = boundary_table(c);
    F2Matrix m(elements.size(), elements.size());
    for (std::size_t k = 0; k < elements.size(); ++k) {
        for (const auto& t : plane_boundary(d, elements[k])) {
            auto it = index.find(t);
            if (it != index.end()) m.toggle(it->second, k);
        }
    }
    return {std::move(elements), std::move(m)};
}

}  // namespace detail

/// All plane elements with i_min <= i <= i_max and their induced differential.
inline Window lattice_window(const KnotComplex& c, int i_min, int i_max) {
    if (i_min > i_max) throw Error("lattice_window: i_min > i_max");
    std::vector<PlaneElement> elems;
    for (std::size_t g = 0; g < c.generators.size(); ++g) {
        for (int i = i_min; i <= i_max; ++i) elems.push_back({g, i});
    }
    return detail::induced_window(c, std::move(elems));
}

}  // namespace hfcone

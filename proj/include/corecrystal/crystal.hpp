#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "corecrystal/partition.hpp"

namespace corecrystal {

// Word of +/- over addable/removable i-boxes, in a reading order fixed by
// the signature flavour.
struct SignedEntry {
    bool plus = false;
    BoxCoord box;
    friend bool operator==(const SignedEntry&, const SignedEntry&) = default;
};

struct SignedWord {
    std::vector<SignedEntry> entries;

    std::string signs() const {
        std::string s;
        for (const SignedEntry& e : entries) s += e.plus ? '+' : '-';
        return s;
    }
    friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

// Classical i-signature: addable boxes as +, removable as -, read from
// bottom left to top right (row descending).
inline SignedWord classical_signature(const Partition& lam, int ell, int i) {
    SignedWord w;
    std::vector<std::pair<int, SignedEntry>> keyed;  // key = -row
    for (BoxCoord b : addable_boxes(lam, ell, i)) keyed.push_back({-b.row, {true, b}});
    for (BoxCoord b : removable_boxes(lam, ell, i)) keyed.push_back({-b.row, {false, b}});
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [k, e] : keyed) w.entries.push_back(e);
    return w;
}

// Cancel "-+" pairs until the word has shape +...+-...-. Single stack pass;
// confluent with repeated scanning.
inline SignedWord reduce(const SignedWord& w) {
    SignedWord out;
    for (const SignedEntry& e : w.entries) {
        if (e.plus && !out.entries.empty() && !out.entries.back().plus)
            out.entries.pop_back();
        else
            out.entries.push_back(e);
    }
    return out;
}

namespace detail {

inline Partition add_box(const Partition& lam, BoxCoord b) {
    std::vector<int> parts = lam.parts();
    if (b.row == lam.length() + 1)
        parts.push_back(1);
    else
        parts[b.row - 1] += 1;
    return Partition(std::move(parts));
}

inline Partition drop_box(const Partition& lam, BoxCoord b) {
    std::vector<int> parts = lam.parts();
    parts[b.row - 1] -= 1;
    return Partition(std::move(parts));
}

inline std::optional<BoxCoord> cogood(const SignedWord& reduced) {
    for (auto it = reduced.entries.rbegin(); it != reduced.entries.rend(); ++it)
        if (it->plus) return it->box;
    return std::nullopt;
}

inline std::optional<BoxCoord> good(const SignedWord& reduced) {
    for (const SignedEntry& e : reduced.entries)
        if (!e.plus) return e.box;
    return std::nullopt;
}

} // namespace detail

inline std::optional<Partition> f_tilde(const Partition& lam, int ell, int i) {
    auto box = detail::cogood(reduce(classical_signature(lam, ell, i)));
    if (!box) return std::nullopt;
    return detail::add_box(lam, *box);
}

inline std::optional<Partition> e_tilde(const Partition& lam, int ell, int i) {
    auto box = detail::good(reduce(classical_signature(lam, ell, i)));
    if (!box) return std::nullopt;
    return detail::drop_box(lam, *box);
}

// Number of conormal i-boxes: max k with f_tilde^k defined.
inline int phi(const Partition& lam, int ell, int i) {
    int count = 0;
    for (const SignedEntry& e : reduce(classical_signature(lam, ell, i)).entries)
        if (e.plus) ++count;
    return count;
}

// Number of normal i-boxes: max k with e_tilde^k defined.
inline int eps(const Partition& lam, int ell, int i) {
    int count = 0;
    for (const SignedEntry& e : reduce(classical_signature(lam, ell, i)).entries)
        if (!e.plus) ++count;
    return count;
}

// Ladders run with slope (ell-1, -1); the k-th ladder meets column 1 at
// row k, so k = row + (col-1)(ell-1).
inline long long ladder_of(BoxCoord b, int ell) {
    require(ell >= 3, "ell-too-small", "ladders need ell >= 3");
    return b.row + static_cast<long long>(b.col - 1) * (ell - 1);
}

// Ladder i-signature: leftmost ladder to rightmost, top to bottom within a
// ladder.
inline SignedWord ladder_signature(const Partition& lam, int ell, int i) {
    SignedWord w;
    std::vector<std::pair<std::pair<long long, int>, SignedEntry>> keyed;
    for (BoxCoord b : addable_boxes(lam, ell, i))
        keyed.push_back({{ladder_of(b, ell), b.row}, {true, b}});
    for (BoxCoord b : removable_boxes(lam, ell, i))
        keyed.push_back({{ladder_of(b, ell), b.row}, {false, b}});
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [k, e] : keyed) w.entries.push_back(e);
    return w;
}

inline std::optional<Partition> f_hat(const Partition& lam, int ell, int i) {
    auto box = detail::cogood(reduce(ladder_signature(lam, ell, i)));
    if (!box) return std::nullopt;
    return detail::add_box(lam, *box);
}

inline std::optional<Partition> e_hat(const Partition& lam, int ell, int i) {
    auto box = detail::good(reduce(ladder_signature(lam, ell, i)));
    if (!box) return std::nullopt;
    return detail::drop_box(lam, *box);
}

inline int phi_hat(const Partition& lam, int ell, int i) {
    int count = 0;
    for (const SignedEntry& e : reduce(ladder_signature(lam, ell, i)).entries)
        if (e.plus) ++count;
    return count;
}

inline int eps_hat(const Partition& lam, int ell, int i) {
    int count = 0;
    for (const SignedEntry& e : reduce(ladder_signature(lam, ell, i)).entries)
        if (!e.plus) ++count;
    return count;
}

// Simple reflection on an i-string: f^(phi-eps), e^(eps-phi), or identity.
inline Partition weyl_si(const Partition& lam, int ell, int i) {
    int d = phi(lam, ell, i) - eps(lam, ell, i);
    Partition cur = lam;
    for (; d > 0; --d) cur = *f_tilde(cur, ell, i);
    for (; d < 0; ++d) cur = *e_tilde(cur, ell, i);
    return cur;
}

enum class CrystalVariant { classical, ladder };

struct CrystalEdge {
    int src = 0;  // global node index
    int dst = 0;
    int residue = 0;
    friend auto operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
};

// Component of the empty partition under the variant's f-operators, levelled
// by partition size. Nodes within a level are sorted descending
// lexicographically; node indices are global across levels.
struct CrystalGraph {
    CrystalVariant variant = CrystalVariant::classical;
    int ell = 0;
    int max_level = 0;
    std::vector<std::vector<Partition>> levels;
    std::vector<CrystalEdge> edges;

    std::vector<const Partition*> flat() const {
        std::vector<const Partition*> out;
        for (const auto& lv : levels)
            for (const Partition& p : lv) out.push_back(&p);
        return out;
    }

    int node_index(const Partition& p) const {
        int base = 0;
        int n = p.size();
        for (int lvl = 0; lvl < n && lvl < static_cast<int>(levels.size()); ++lvl)
            base += static_cast<int>(levels[lvl].size());
        if (n >= static_cast<int>(levels.size())) return -1;
        const auto& lv = levels[n];
        for (std::size_t j = 0; j < lv.size(); ++j)
            if (lv[j] == p) return base + static_cast<int>(j);
        return -1;
    }

    bool contains(const Partition& p) const { return node_index(p) >= 0; }
};

namespace detail {
// Descending lexicographic on part sequences, the project-wide display order.
inline bool desc_lex(const Partition& a, const Partition& b) {
    return a.parts() > b.parts();
}
} // namespace detail

inline CrystalGraph generate(CrystalVariant variant, int ell, int max_level) {
    require(max_level >= 0, "invalid-level", "levels must be nonnegative");
    if (variant == CrystalVariant::ladder)
        require(ell >= 3, "ell-too-small", "the ladder crystal needs ell >= 3");
    else
        require(ell >= 2, "ell-too-small", "the classical crystal needs ell >= 2");
    CrystalGraph g;
    g.variant = variant;
    g.ell = ell;
    g.max_level = max_level;
    g.levels.assign(max_level + 1, {});
    g.levels[0] = {Partition{}};
    for (int n = 0; n < max_level; ++n) {
        std::set<Partition> next;
        for (const Partition& lam : g.levels[n])
            for (int i = 0; i < ell; ++i) {
                auto child = variant == CrystalVariant::ladder ? f_hat(lam, ell, i)
                                                               : f_tilde(lam, ell, i);
                if (child) next.insert(*child);
            }
        g.levels[n + 1].assign(next.begin(), next.end());
        std::sort(g.levels[n + 1].begin(), g.levels[n + 1].end(), detail::desc_lex);
    }
    for (int n = 0; n < max_level; ++n)
        for (const Partition& lam : g.levels[n])
            for (int i = 0; i < ell; ++i) {
                auto child = variant == CrystalVariant::ladder ? f_hat(lam, ell, i)
                                                               : f_tilde(lam, ell, i);
                if (child)
                    g.edges.push_back({g.node_index(lam), g.node_index(*child), i});
            }
    return g;
}

inline std::string to_dot(const CrystalGraph& g) {
    auto label = [](const Partition& p) {
        return p.empty() ? std::string("\xE2\x88\x85") : p.to_text();
    };
    std::string out = "digraph \"";
    out += g.variant == CrystalVariant::ladder ? "ladder" : "classical";
    out += "_l" + std::to_string(g.ell) + "_n" + std::to_string(g.max_level) + "\" {\n";
    out += "  rankdir=TB;\n";
    auto nodes = g.flat();
    for (const Partition* p : nodes) out += "  \"" + label(*p) + "\";\n";
    for (const CrystalEdge& e : g.edges)
        out += "  \"" + label(*nodes[e.src]) + "\" -> \"" + label(*nodes[e.dst]) +
               "\" [label=\"" + std::to_string(e.residue) + "\"];\n";
    out += "}\n";
    return out;
}

} // namespace corecrystal

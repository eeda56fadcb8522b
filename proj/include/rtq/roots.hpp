#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rtq/tree.hpp"

namespace rtq {

enum class SystemKind { dynkin, triple, quasi };

/// Dynkin when every weight is 2, triple when exactly one vertex has weight 3
/// and the rest 2, quasi-determinantal otherwise.
SystemKind system_kind(const WeightedTree& t);

struct RootSet {
    WeightedTree tree;
    SystemKind kind;
    Divisor highest;                 // componentwise bound used for the search
    std::set<Divisor> positive_roots;
    std::set<Divisor> roots;         // positives and their negations
    std::vector<Divisor> iv_removed; // dropped by the optional divisibility filter

    explicit RootSet(WeightedTree t) : tree(std::move(t)), kind(SystemKind::dynkin) {}
    std::size_t count() const { return roots.size(); }
};

struct EnumerationOptions {
    int box_scale = 1;             // multiplies the Artin-cycle box bound
    bool condition_iv = false;     // quasi-determinantal divisibility filter
};

/// Membership predicate evaluated directly on one divisor: sign purity,
/// connected support, and the self-intersection window of the tree's kind.
bool is_root(const WeightedTree& t, const Divisor& y);

/// All roots with |Y| <= scale * Z, found by scanning the positive box and
/// mirroring. Requires a rational tree.
RootSet enumerate_roots_box(const WeightedTree& t, const EnumerationOptions& opts = {});

/// Positive roots of a rational triple tree built top-down from the Artin
/// cycle by admissible simple-root subtractions.
RootSet enumerate_positive_roots_descent(const WeightedTree& t);

/// Closed-form root count. Families: A, D, E6, E7, E8, A_nmk, B_mn, C_mn,
/// D_n5, F_n, H_n, E71, E81, E82.
long long root_count_formula(const std::string& family, const std::vector<int>& params);

enum class Containment { equal, subset, superset, incomparable };

struct ContainmentReport {
    Containment relation;
    // Witnesses in the second tree's coordinates: roots present on one side only.
    std::vector<Divisor> only_in_first;
    std::vector<Divisor> only_in_second;
};

/// Compares R(t1) and R(t2) after renaming t1's vertices through vertex_map
/// (vertex_map[v1] = corresponding id in t2; must be a bijection).
ContainmentReport compare_root_systems(const WeightedTree& t1, const WeightedTree& t2,
                                       const std::vector<int>& vertex_map);

std::string to_string(Containment c);

}  // namespace rtq

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rtq/tree.hpp"

namespace rtq {

/// Nonnegative dimension per vertex.
struct DimensionVector {
    std::vector<int> dims;

    DimensionVector() = default;
    explicit DimensionVector(std::vector<int> d) : dims(std::move(d)) {}
    static DimensionVector ones(int n) { return DimensionVector(std::vector<int>(n, 1)); }
    static DimensionVector from_divisor(const Divisor& d);

    int size() const { return static_cast<int>(dims.size()); }
    int operator[](int v) const { return dims[v]; }
    int& operator[](int v) { return dims[v]; }
    long long total() const;
    bool operator==(const DimensionVector& o) const { return dims == o.dims; }
    std::string to_string() const;
};

/// True iff every coordinate is positive.
bool is_sincere(const DimensionVector& a);

/// A weighted tree with one orientation per edge. arrows[i] = (tail, head) is
/// a permutation of edges()[i].
class Quiver {
public:
    Quiver(WeightedTree tree, std::vector<std::pair<int, int>> arrows);

    /// Orientation from an edge bitmask: bit i set reverses edge i from its
    /// stored (lo -> hi) direction.
    static Quiver from_mask(const WeightedTree& tree, std::uint64_t mask);

    const WeightedTree& tree() const { return tree_; }
    int size() const { return tree_.size(); }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
    std::uint64_t orientation_mask() const;

    bool is_source(int v) const;
    bool is_sink(int v) const;

    bool operator==(const Quiver& o) const {
        return tree_ == o.tree_ && arrows_ == o.arrows_;
    }

private:
    WeightedTree tree_;
    std::vector<std::pair<int, int>> arrows_;
};

/// All 2^edges orientations of a tree. Guarded for small trees.
std::vector<Quiver> all_orientations(const WeightedTree& t, int max_edges = 16);

/// Builds a quiver from arrows given in any order, one per tree edge.
Quiver quiver_from_arrow_list(const WeightedTree& t, std::vector<std::pair<int, int>> arrows);

/// sum a_v^2 - sum over arrows of a_tail * a_head. Depends only on the
/// underlying tree.
long long tits_form(const Quiver& q, const DimensionVector& a);

/// Reflection functor at a source or sink: the dimension at v becomes the
/// neighbor sum minus a_v and every arrow at v is reversed. Throws when v is
/// neither source nor sink or when the new dimension would be negative.
std::pair<Quiver, DimensionVector> reflect(const Quiver& q, const DimensionVector& a, int v);

/// Reflection that requires v to be a source or sink among live arrows only
/// (arrows whose two endpoints both have positive dimension). Slots of
/// dimension zero carry no coordinates, so their orientation is immaterial;
/// reduction trails use this rule and replay with it.
std::pair<Quiver, DimensionVector> reflect_in_support(const Quiver& q, const DimensionVector& a,
                                                      int v);

struct ReductionStep {
    int vertex;
    bool at_source;  // v was a source (among live arrows) when reflected
};

struct ReductionTrail {
    std::vector<ReductionStep> steps;
    Quiver final_quiver;
    DimensionVector final_dims;
    int split_off_count = 0;  // one-dimensional map slots detached along the way
    bool complete = false;    // final support is a disjoint union of Dynkin shapes
    std::string diagnostic;

    ReductionTrail(Quiver q, DimensionVector d)
        : final_quiver(std::move(q)), final_dims(std::move(d)) {}
};

/// Replays recorded steps with the in-support reflection rule.
std::pair<Quiver, DimensionVector> apply_reduction_steps(const Quiver& q,
                                                         const DimensionVector& a,
                                                         const std::vector<ReductionStep>& steps);

/// Drives (q, a) toward a Dynkin core: dimension-one leaves equal to their
/// neighbor are zeroed first (each detaching one coordinate slot), and when no
/// such peel exists and the support is not yet a union of Dynkin diagrams, a
/// shortest sequence of non-increasing reflections that strictly lowers the
/// total dimension is searched for and applied. Stops when the support is
/// Dynkin and no peel remains, or reports a partial trail when stuck.
/// Requires tits_form(q, a) == 1.
ReductionTrail reduce_to_core(const Quiver& q, const DimensionVector& a);

/// Dynkin classification of one support component, e.g. "A3", "D4", "E6";
/// empty string when the component is not of Dynkin shape.
struct CoreComponent {
    std::string dynkin_type;
    std::vector<int> vertices;  // ids, increasing
    std::vector<int> dims;      // aligned with vertices
};

/// Connected components of the support of (q, a) with their Dynkin types.
std::vector<CoreComponent> core_components(const Quiver& q, const DimensionVector& a);

/// True when every support component is a Dynkin diagram (an empty support
/// counts as Dynkin).
bool support_is_dynkin(const Quiver& q, const DimensionVector& a);

}  // namespace rtq

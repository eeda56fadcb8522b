#include "rtq/quiver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rtq {

DimensionVector DimensionVector::from_divisor(const Divisor& d) {
    std::vector<int> v(d.size());
    for (int i = 0; i < d.size(); ++i) {
        if (d[i] < 0) throw std::invalid_argument("dimension vectors are nonnegative");
        v[i] = static_cast<int>(d[i]);
    }
    return DimensionVector(std::move(v));
}

long long DimensionVector::total() const {
    return std::accumulate(dims.begin(), dims.end(), 0LL);
}

std::string DimensionVector::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) out << ",";
        out << dims[i];
    }
    out << ")";
    return out.str();
}

bool is_sincere(const DimensionVector& a) {
    return std::all_of(a.dims.begin(), a.dims.end(), [](int d) { return d > 0; });
}

Quiver::Quiver(WeightedTree tree, std::vector<std::pair<int, int>> arrows)
    : tree_(std::move(tree)), arrows_(std::move(arrows)) {
    if (arrows_.size() != tree_.edges().size())
        throw std::invalid_argument("one arrow per tree edge required");
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        auto [lo, hi] = tree_.edges()[i];
        auto [t, h] = arrows_[i];
        if (!((t == lo && h == hi) || (t == hi && h == lo)))
            throw std::invalid_argument("arrow does not orient its tree edge");
    }
}

Quiver Quiver::from_mask(const WeightedTree& tree, std::uint64_t mask) {
    if (tree.edges().size() > 64) throw std::invalid_argument("orientation mask limited to 64 edges");
    std::vector<std::pair<int, int>> arrows;
    arrows.reserve(tree.edges().size());
    for (std::size_t i = 0; i < tree.edges().size(); ++i) {
        auto [lo, hi] = tree.edges()[i];
        if (mask >> i & 1)
            arrows.emplace_back(hi, lo);
        else
            arrows.emplace_back(lo, hi);
    }
    return Quiver(tree, std::move(arrows));
}

std::uint64_t Quiver::orientation_mask() const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].first != tree_.edges()[i].first) mask |= std::uint64_t(1) << i;
    return mask;
}

bool Quiver::is_source(int v) const {
    for (auto [t, h] : arrows_)
        if (h == v) return false;
    return true;
}

bool Quiver::is_sink(int v) const {
    for (auto [t, h] : arrows_)
        if (t == v) return false;
    return true;
}

std::vector<Quiver> all_orientations(const WeightedTree& t, int max_edges) {
    const int e = static_cast<int>(t.edges().size());
    if (e > max_edges) throw std::invalid_argument("too many edges for an orientation sweep");
    std::vector<Quiver> out;
    out.reserve(std::size_t(1) << e);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << e); ++mask)
        out.push_back(Quiver::from_mask(t, mask));
    return out;
}

Quiver quiver_from_arrow_list(const WeightedTree& t, std::vector<std::pair<int, int>> arrows) {
    std::vector<std::pair<int, int>> aligned(t.edges().size(), {-1, -1});
    for (auto [tail, head] : arrows) {
        auto key = std::make_pair(std::min(tail, head), std::max(tail, head));
        auto it = std::find(t.edges().begin(), t.edges().end(), key);
        if (it == t.edges().end()) throw std::invalid_argument("arrow does not match any edge");
        aligned[it - t.edges().begin()] = {tail, head};
    }
    for (auto [tail, head] : aligned)
        if (tail < 0) throw std::invalid_argument("every edge needs exactly one arrow");
    return Quiver(t, std::move(aligned));
}

long long tits_form(const Quiver& q, const DimensionVector& a) {
    if (a.size() != q.size()) throw std::invalid_argument("dimension vector length mismatch");
    long long total = 0;
    for (int v = 0; v < q.size(); ++v) total += static_cast<long long>(a[v]) * a[v];
    for (auto [t, h] : q.arrows()) total -= static_cast<long long>(a[t]) * a[h];
    return total;
}

namespace {

enum class Role { source, sink, neither };

Role live_role(const Quiver& q, const DimensionVector& a, int v) {
    bool any_out = false, any_in = false;
    for (auto [t, h] : q.arrows()) {
        if (a[t] == 0 || a[h] == 0) continue;
        if (t == v) any_out = true;
        if (h == v) any_in = true;
    }
    if (any_in && any_out) return Role::neither;
    return any_in ? Role::sink : Role::source;
}

std::pair<Quiver, DimensionVector> reflect_impl(const Quiver& q, const DimensionVector& a, int v,
                                                bool live_only) {
    if (v < 0 || v >= q.size()) throw std::invalid_argument("vertex out of range");
    bool ok = live_only ? live_role(q, a, v) != Role::neither
                        : (q.is_source(v) || q.is_sink(v));
    if (!ok)
        throw std::domain_error("not reflectable: vertex " + std::to_string(v) +
                                " is neither source nor sink");
    long long nb = 0;
    for (int u : q.tree().neighbors(v)) nb += a[u];
    long long nd = nb - a[v];
    if (nd < 0)
        throw std::domain_error("reflection leaves cone: dimension at vertex " +
                                std::to_string(v) + " would become " + std::to_string(nd));
    std::vector<std::pair<int, int>> arrows = q.arrows();
    for (auto& [t, h] : arrows)
        if (t == v || h == v) std::swap(t, h);
    DimensionVector out = a;
    out[v] = static_cast<int>(nd);
    return {Quiver(q.tree(), std::move(arrows)), std::move(out)};
}

}  // namespace

std::pair<Quiver, DimensionVector> reflect(const Quiver& q, const DimensionVector& a, int v) {
    return reflect_impl(q, a, v, false);
}

std::pair<Quiver, DimensionVector> reflect_in_support(const Quiver& q, const DimensionVector& a,
                                                      int v) {
    return reflect_impl(q, a, v, true);
}

std::pair<Quiver, DimensionVector> apply_reduction_steps(const Quiver& q,
                                                         const DimensionVector& a,
                                                         const std::vector<ReductionStep>& steps) {
    Quiver cur = q;
    DimensionVector dims = a;
    for (const auto& s : steps) {
        auto next = reflect_in_support(cur, dims, s.vertex);
        cur = std::move(next.first);
        dims = std::move(next.second);
    }
    return {cur, dims};
}

std::vector<CoreComponent> core_components(const Quiver& q, const DimensionVector& a) {
    const WeightedTree& t = q.tree();
    const int n = t.size();
    std::vector<bool> seen(n, false);
    std::vector<CoreComponent> comps;
    for (int s = 0; s < n; ++s) {
        if (a[s] == 0 || seen[s]) continue;
        CoreComponent c;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            c.vertices.push_back(v);
            for (int u : t.neighbors(v))
                if (a[u] > 0 && !seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
        }
        std::sort(c.vertices.begin(), c.vertices.end());
        for (int v : c.vertices) c.dims.push_back(a[v]);

        // Shape classification within the support.
        auto deg = [&](int v) {
            int d = 0;
            for (int u : t.neighbors(v))
                if (a[u] > 0) ++d;
            return d;
        };
        std::vector<int> forks;
        for (int v : c.vertices)
            if (deg(v) >= 3) forks.push_back(v);
        const int sz = static_cast<int>(c.vertices.size());
        if (forks.empty()) {
            c.dynkin_type = "A" + std::to_string(sz);
        } else if (forks.size() == 1 && deg(forks[0]) == 3) {
            std::vector<int> arms;
            for (int u : t.neighbors(forks[0])) {
                if (a[u] == 0) continue;
                int len = 0, prev = forks[0], cur = u;
                while (true) {
                    ++len;
                    int next = -1;
                    for (int w : t.neighbors(cur))
                        if (w != prev && a[w] > 0) next = w;
                    if (next < 0) break;
                    prev = cur;
                    cur = next;
                }
                arms.push_back(len);
            }
            std::sort(arms.begin(), arms.end());
            if (arms[0] == 1 && arms[1] == 1)
                c.dynkin_type = "D" + std::to_string(sz);
            else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
                c.dynkin_type = "E" + std::to_string(sz);
        }
        comps.push_back(std::move(c));
    }
    return comps;
}

bool support_is_dynkin(const Quiver& q, const DimensionVector& a) {
    for (const auto& c : core_components(q, a))
        if (c.dynkin_type.empty()) return false;
    return true;
}

namespace {

int live_neighbor_count(const WeightedTree& t, const std::vector<int>& dims, int v) {
    int c = 0;
    for (int u : t.neighbors(v))
        if (dims[u] > 0) ++c;
    return c;
}

}  // namespace

ReductionTrail reduce_to_core(const Quiver& q, const DimensionVector& a) {
    if (tits_form(q, a) != 1)
        throw std::domain_error("reduction requires a root: Tits form must equal 1");
    const WeightedTree& tree = q.tree();
    const int n = tree.size();

    ReductionTrail trail(q, a);
    Quiver cur = q;
    DimensionVector dims = a;

    auto record_and_apply = [&](int v) {
        Role role = live_role(cur, dims, v);
        // Count coordinate slots that die with this reflection.
        long long nb = 0;
        for (int u : tree.neighbors(v)) nb += dims[u];
        if (nb - dims[v] == 0 && dims[v] > 0) {
            for (int u : tree.neighbors(v))
                if (dims[v] == 1 && dims[u] == 1) ++trail.split_off_count;
        }
        trail.steps.push_back({v, role != Role::sink});
        auto next = reflect_in_support(cur, dims, v);
        cur = std::move(next.first);
        dims = std::move(next.second);
    };

    auto find_peel = [&]() {
        for (int v = 0; v < n; ++v) {
            if (dims[v] == 0 || live_neighbor_count(tree, dims.dims, v) != 1) continue;
            long long nb = 0;
            for (int u : tree.neighbors(v)) nb += dims[u];
            if (nb == dims[v]) return v;
        }
        return -1;
    };

    // Dimension-neutral reflections keep every dimension fixed and only flip
    // arrows, so enabling searches walk orientation masks alone.
    auto neighbor_sum = [&](int v) {
        long long nb = 0;
        for (int u : tree.neighbors(v)) nb += dims[u];
        return nb;
    };

    // Castle targets, ranked. A target must come strictly down without hitting
    // zero (zeroes are the peels' business, which keeps every detached slot
    // one-dimensional). Ranking drains the heaviest region first: the
    // connected blob of dimensions >= 2 with the largest total, then the
    // largest dimension, then the lowest id. Draining a light region first can
    // strand a heavy Dynkin-shaped core that is too large to certify.
    auto find_descent = [&]() -> std::vector<int> {
        std::vector<long long> blob_mass(n, 0);
        {
            std::vector<int> comp(n, -1);
            for (int s = 0; s < n; ++s) {
                if (dims[s] < 2 || comp[s] >= 0) continue;
                std::vector<int> stack{s}, members;
                comp[s] = s;
                long long mass = 0;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    members.push_back(v);
                    mass += dims[v];
                    for (int u : tree.neighbors(v))
                        if (dims[u] >= 2 && comp[u] < 0) {
                            comp[u] = s;
                            stack.push_back(u);
                        }
                }
                for (int v : members) blob_mass[v] = mass;
            }
        }
        std::vector<int> targets;
        for (int v = 0; v < n; ++v) {
            long long nd = neighbor_sum(v) - dims[v];
            if (dims[v] >= 2 && nd >= 1 && nd < dims[v]) targets.push_back(v);
        }
        std::sort(targets.begin(), targets.end(), [&](int a, int b) {
            if (blob_mass[a] != blob_mass[b]) return blob_mass[a] > blob_mass[b];
            if (dims[a] != dims[b]) return dims[a] > dims[b];
            return a < b;
        });
        for (int target : targets) {
            // Breadth-first over orientations reachable by neutral flips.
            std::map<std::uint64_t, std::pair<std::uint64_t, int>> parent;
            std::deque<std::uint64_t> queue{cur.orientation_mask()};
            parent.emplace(cur.orientation_mask(), std::make_pair(cur.orientation_mask(), -1));
            std::size_t explored = 0;
            while (!queue.empty() && explored < 50000) {
                std::uint64_t mask = queue.front();
                queue.pop_front();
                ++explored;
                Quiver sq = Quiver::from_mask(tree, mask);
                if (live_role(sq, dims, target) != Role::neither) {
                    std::vector<int> seq{target};
                    std::uint64_t walk = mask;
                    while (true) {
                        auto [prev, via] = parent.at(walk);
                        if (via < 0) break;
                        seq.push_back(via);
                        walk = prev;
                    }
                    std::reverse(seq.begin(), seq.end());
                    return seq;
                }
                for (int u = 0; u < n; ++u) {
                    if (u == target || dims[u] == 0) continue;
                    if (neighbor_sum(u) != 2 * dims[u]) continue;  // must not change dims
                    if (live_role(sq, dims, u) == Role::neither) continue;
                    auto next = reflect_in_support(sq, dims, u);
                    std::uint64_t nm = next.first.orientation_mask();
                    if (parent.count(nm)) continue;
                    parent.emplace(nm, std::make_pair(mask, u));
                    queue.push_back(nm);
                }
            }
        }
        return {};
    };

    while (true) {
        int v = find_peel();
        if (v >= 0) {
            record_and_apply(v);
            continue;
        }
        if (support_is_dynkin(cur, dims)) {
            trail.complete = true;
            break;
        }
        std::vector<int> seq = find_descent();
        if (seq.empty()) {
            trail.diagnostic = "no admissible reflection lowers the dimension vector";
            break;
        }
        for (int w : seq) record_and_apply(w);
    }

    trail.final_quiver = std::move(cur);
    trail.final_dims = std::move(dims);
    return trail;
}

}  // namespace rtq

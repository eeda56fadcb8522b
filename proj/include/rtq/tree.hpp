#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rtq {

/// Connected acyclic weighted graph with dense 0-based vertex ids and every
/// weight >= 2. Edges are stored as sorted (lo, hi) pairs in increasing order,
/// so two equal trees have identical representations.
class WeightedTree {
public:
    WeightedTree(std::vector<int> weights, std::vector<std::pair<int, int>> edges,
                 std::vector<std::string> labels = {});

    int size() const { return static_cast<int>(weights_.size()); }
    int weight(int v) const { return weights_.at(v); }
    const std::vector<int>& weights() const { return weights_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int valency(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::string& label(int v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Copy with one vertex weight replaced (weight must stay >= 2).
    WeightedTree with_weight(int v, int w) const;

    /// Vertices of weight >= 3, in id order.
    std::vector<int> heavy_vertices() const;

    bool operator==(const WeightedTree& o) const {
        return weights_ == o.weights_ && edges_ == o.edges_;
    }

private:
    std::vector<int> weights_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

/// Integer coefficient vector over the vertices of a tree.
struct Divisor {
    std::vector<long long> coeffs;

    Divisor() = default;
    explicit Divisor(std::vector<long long> c) : coeffs(std::move(c)) {}
    static Divisor zero(int n) { return Divisor(std::vector<long long>(n, 0)); }
    static Divisor ones(int n) { return Divisor(std::vector<long long>(n, 1)); }
    static Divisor simple(int n, int v) {
        Divisor d = zero(n);
        d.coeffs[v] = 1;
        return d;
    }

    int size() const { return static_cast<int>(coeffs.size()); }
    long long operator[](int i) const { return coeffs[i]; }
    long long& operator[](int i) { return coeffs[i]; }

    bool is_zero() const;
    bool all_nonnegative() const;
    bool all_nonpositive() const;
    bool is_positive() const { return all_nonnegative() && !is_zero(); }
    long long sum() const;

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator-() const;
    bool operator==(const Divisor& o) const { return coeffs == o.coeffs; }
    bool operator!=(const Divisor& o) const { return coeffs != o.coeffs; }
    bool operator<(const Divisor& o) const { return coeffs < o.coeffs; }

    /// Componentwise <=.
    bool dominated_by(const Divisor& o) const;

    Divisor abs() const;
    std::string to_string() const;
};

void check_divisor(const WeightedTree& t, const Divisor& d);

/// (Y . Y') under the incidence form: -w_i on the diagonal, 1 across edges.
long long intersection_pairing(const WeightedTree& t, const Divisor& y, const Divisor& yp);

/// Pairing of y with the simple divisor at vertex v.
long long pairing_with_simple(const WeightedTree& t, const Divisor& y, int v);

/// p_a(Y) = (Y.Y + sum m_i (w_i - 2)) / 2 + 1. The division is always exact
/// for divisors on a tree; a half-integer result signals a modeling bug.
long long arithmetic_genus(const WeightedTree& t, const Divisor& y);

/// True iff all leading principal minors of the negated incidence matrix are
/// positive; computed with exact fraction-free elimination over mpz.
bool is_negative_definite(const WeightedTree& t);

/// Whether the support of y induces a connected subgraph.
bool support_connected(const WeightedTree& t, const Divisor& y);

struct RationalityReport {
    bool negative_definite = false;
    std::optional<Divisor> artin_cycle;
    std::optional<long long> pa_of_z;
    std::optional<long long> multiplicity;
    bool rational = false;
    std::vector<int> valency_violations;
};

RationalityReport classify_rational(const WeightedTree& t);

/// Diagnostic form of the rationality test: checks p_a(Y) <= 0 for every
/// positive divisor with 0 < Y <= Z directly. Exponential in the cycle box,
/// intended as a test oracle at small sizes.
bool rational_by_bounded_genus_scan(const WeightedTree& t);

}  // namespace rtq

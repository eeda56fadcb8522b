#include "rtq/tree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rtq/cycle.hpp"

namespace rtq {

WeightedTree::WeightedTree(std::vector<int> weights, std::vector<std::pair<int, int>> edges,
                           std::vector<std::string> labels)
    : weights_(std::move(weights)), edges_(std::move(edges)), labels_(std::move(labels)) {
    const int n = size();
    if (n == 0) throw std::invalid_argument("tree must have at least one vertex");
    if (static_cast<int>(edges_.size()) != n - 1)
        throw std::invalid_argument("a tree on " + std::to_string(n) + " vertices needs " +
                                    std::to_string(n - 1) + " edges");
    for (int w : weights_)
        if (w < 2) throw std::invalid_argument("vertex weights must be >= 2");
    for (auto& [a, b] : edges_) {
        if (a == b || a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("invalid edge");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
    adj_.assign(n, {});
    for (auto [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    // n-1 edges + connectivity == acyclic.
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj_[v])
            if (!seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw std::invalid_argument("graph is not connected");
    if (labels_.empty()) {
        labels_.reserve(n);
        for (int i = 0; i < n; ++i) labels_.push_back("E" + std::to_string(i));
    } else if (static_cast<int>(labels_.size()) != n) {
        throw std::invalid_argument("label count mismatch");
    }
}

WeightedTree WeightedTree::with_weight(int v, int w) const {
    std::vector<int> ws = weights_;
    ws.at(v) = w;
    return WeightedTree(std::move(ws), edges_, labels_);
}

std::vector<int> WeightedTree::heavy_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (weights_[v] >= 3) out.push_back(v);
    return out;
}

bool Divisor::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; });
}

bool Divisor::all_nonnegative() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c >= 0; });
}

bool Divisor::all_nonpositive() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c <= 0; });
}

long long Divisor::sum() const {
    return std::accumulate(coeffs.begin(), coeffs.end(), 0LL);
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor r = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
    Divisor r = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
    return r;
}

Divisor Divisor::operator-() const {
    Divisor r = *this;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

bool Divisor::dominated_by(const Divisor& o) const {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] > o.coeffs[i]) return false;
    return true;
}

Divisor Divisor::abs() const {
    Divisor r = *this;
    for (auto& c : r.coeffs) c = c < 0 ? -c : c;
    return r;
}

std::string Divisor::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out << ",";
        out << coeffs[i];
    }
    out << ")";
    return out.str();
}

void check_divisor(const WeightedTree& t, const Divisor& d) {
    if (d.size() != t.size()) throw std::invalid_argument("divisor length does not match tree");
}

long long intersection_pairing(const WeightedTree& t, const Divisor& y, const Divisor& yp) {
    check_divisor(t, y);
    check_divisor(t, yp);
    long long total = 0;
    for (int v = 0; v < t.size(); ++v) total -= static_cast<long long>(t.weight(v)) * y[v] * yp[v];
    for (auto [a, b] : t.edges()) total += y[a] * yp[b] + y[b] * yp[a];
    return total;
}

long long pairing_with_simple(const WeightedTree& t, const Divisor& y, int v) {
    long long total = -static_cast<long long>(t.weight(v)) * y[v];
    for (int u : t.neighbors(v)) total += y[u];
    return total;
}

long long arithmetic_genus(const WeightedTree& t, const Divisor& y) {
    check_divisor(t, y);
    if (y.is_zero()) throw std::invalid_argument("arithmetic genus of the zero divisor");
    long long self = intersection_pairing(t, y, y);
    long long adj = 0;
    for (int v = 0; v < t.size(); ++v) adj += y[v] * (t.weight(v) - 2);
    long long num = self + adj;
    if (num % 2 != 0) throw std::logic_error("arithmetic genus is not an integer");
    return num / 2 + 1;
}

bool is_negative_definite(const WeightedTree& t) {
    const int n = t.size();
    // -M has w_i on the diagonal and -1 across edges; positive definiteness is
    // checked through the pivots of fraction-free elimination, which equal the
    // leading principal minors.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n, 0));
    for (int v = 0; v < n; ++v) a[v][v] = t.weight(v);
    for (auto [u, v] : t.edges()) {
        a[u][v] = -1;
        a[v][u] = -1;
    }
    mpz_class prev = 1;
    for (int k = 0; k < n; ++k) {
        if (a[k][k] <= 0) return false;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return true;
}

bool support_connected(const WeightedTree& t, const Divisor& y) {
    check_divisor(t, y);
    int start = -1, count = 0;
    for (int v = 0; v < t.size(); ++v)
        if (y[v] != 0) {
            if (start < 0) start = v;
            ++count;
        }
    if (count == 0) return false;
    std::vector<bool> seen(t.size(), false);
    std::vector<int> stack{start};
    seen[start] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : t.neighbors(v))
            if (y[u] != 0 && !seen[u]) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == count;
}

RationalityReport classify_rational(const WeightedTree& t) {
    RationalityReport rep;
    rep.negative_definite = is_negative_definite(t);
    for (int v = 0; v < t.size(); ++v)
        if (t.valency(v) > t.weight(v) + 1) rep.valency_violations.push_back(v);
    if (!rep.negative_definite) return rep;
    Divisor z = laufer_artin_cycle(t);
    rep.artin_cycle = z;
    rep.pa_of_z = arithmetic_genus(t, z);
    rep.multiplicity = -intersection_pairing(t, z, z);
    rep.rational = (*rep.pa_of_z == 0);
    return rep;
}

bool rational_by_bounded_genus_scan(const WeightedTree& t) {
    if (!is_negative_definite(t)) return false;
    Divisor z = laufer_artin_cycle(t);
    const int n = t.size();
    Divisor y = Divisor::zero(n);
    while (true) {
        int i = 0;
        while (i < n && y[i] == z[i]) y[i++] = 0;
        if (i == n) break;
        ++y[i];
        if (!y.is_zero() && arithmetic_genus(t, y) > 0) return false;
    }
    return true;
}

}  // namespace rtq

#include "rtq/roots.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "rtq/catalog.hpp"
#include "rtq/cycle.hpp"

namespace rtq {

SystemKind system_kind(const WeightedTree& t) {
    auto heavy = t.heavy_vertices();
    if (heavy.empty()) return SystemKind::dynkin;
    if (heavy.size() == 1 && t.weight(heavy[0]) == 3) return SystemKind::triple;
    return SystemKind::quasi;
}

namespace {

bool sign_pure(const Divisor& y) { return y.all_nonnegative() || y.all_nonpositive(); }

bool self_intersection_in_window(SystemKind kind, long long yy, long long zz) {
    switch (kind) {
        case SystemKind::dynkin: return yy == -2;
        case SystemKind::triple: return yy == -2 || yy == -3;
        case SystemKind::quasi: return yy <= -2 && yy >= zz;
    }
    return false;
}

void require_rational(const WeightedTree& t) {
    RationalityReport rep = classify_rational(t);
    if (!rep.rational) throw std::domain_error("tree is not rational");
}

// Divisibility filter of the quasi-determinantal definition, read as an
// iterated fixpoint: repeatedly drop the non-simple, non-extremal candidate
// with the most violated pair conditions. Reported as diagnostics only.
void apply_condition_iv(const WeightedTree& t, long long zz, const Divisor& z,
                        std::set<Divisor>& pos, std::vector<Divisor>& removed) {
    const long long m = -zz;
    auto is_protected = [&](const Divisor& y) {
        if (y == z) return true;
        int nonzero = 0;
        for (int v = 0; v < y.size(); ++v)
            if (y[v] != 0) ++nonzero;
        return nonzero == 1 && y.sum() == 1;
    };
    for (int round = 0; round < 4096; ++round) {
        const Divisor* worst = nullptr;
        long long worst_count = 0;
        for (const Divisor& y : pos) {
            long long yy = intersection_pairing(t, y, y);
            long long count = 0;
            for (const Divisor& yp : pos) {
                long long pairing = intersection_pairing(t, y, yp);
                for (long long j = 3; j <= m; ++j)
                    if ((j * pairing) % yy != 0) ++count;
            }
            if (count > worst_count && !is_protected(y)) {
                worst_count = count;
                worst = &y;
            }
        }
        if (!worst) return;
        removed.push_back(*worst);
        pos.erase(*worst);
    }
    throw std::logic_error("divisibility filter did not reach a fixpoint");
}

}  // namespace

bool is_root(const WeightedTree& t, const Divisor& y) {
    check_divisor(t, y);
    if (y.is_zero()) return false;
    if (!sign_pure(y)) return false;
    if (!support_connected(t, y)) return false;
    long long yy = intersection_pairing(t, y, y);
    SystemKind kind = system_kind(t);
    long long zz = 0;
    if (kind == SystemKind::quasi) {
        Divisor z = laufer_artin_cycle(t);
        zz = intersection_pairing(t, z, z);
    }
    return self_intersection_in_window(kind, yy, zz);
}

RootSet enumerate_roots_box(const WeightedTree& t, const EnumerationOptions& opts) {
    require_rational(t);
    if (opts.box_scale < 1) throw std::invalid_argument("box scale must be >= 1");
    RootSet rs(t);
    rs.kind = system_kind(t);
    Divisor z = laufer_artin_cycle(t);
    rs.highest = z;
    const long long zz = intersection_pairing(t, z, z);
    const int n = t.size();

    Divisor bound = z;
    for (auto& c : bound.coeffs) c *= opts.box_scale;

    Divisor y = Divisor::zero(n);
    while (true) {
        int i = 0;
        while (i < n && y[i] == bound[i]) y[i++] = 0;
        if (i == n) break;
        ++y[i];
        if (y.is_zero()) continue;
        long long yy = intersection_pairing(t, y, y);
        if (!self_intersection_in_window(rs.kind, yy, zz)) continue;
        if (rs.kind == SystemKind::quasi) {
            if (!support_connected(t, y)) continue;
        } else if (!support_connected(t, y)) {
            // Connected support is a theorem for Dynkin and triple trees; a
            // hit here is a bug, not a filtered candidate.
            throw std::logic_error("connected-support invariant violated at " + y.to_string());
        }
        rs.positive_roots.insert(y);
    }

    if (rs.kind == SystemKind::quasi && opts.condition_iv)
        apply_condition_iv(t, zz, z, rs.positive_roots, rs.iv_removed);

    for (const Divisor& p : rs.positive_roots) {
        rs.roots.insert(p);
        rs.roots.insert(-p);
    }
    return rs;
}

RootSet enumerate_positive_roots_descent(const WeightedTree& t) {
    if (system_kind(t) != SystemKind::triple)
        throw std::domain_error("descent construction is supported for triple trees only");
    require_rational(t);
    RootSet rs(t);
    rs.kind = SystemKind::triple;
    const int n = t.size();
    const int e0 = t.heavy_vertices().front();
    Divisor z = laufer_artin_cycle(t);
    rs.highest = z;

    rs.positive_roots.insert(z);
    std::deque<Divisor> queue{z};
    while (!queue.empty()) {
        Divisor y = queue.front();
        queue.pop_front();
        long long neighbor_sum = 0;
        for (int u : t.neighbors(e0)) neighbor_sum += y[u];
        const bool unrestricted = (neighbor_sum == 1);
        for (int v = 0; v < n; ++v) {
            if (t.weight(v) != 2 && !unrestricted) continue;
            if (pairing_with_simple(t, y, v) >= 0) continue;
            Divisor next = y;
            --next[v];
            if (next.is_zero()) continue;
            if (!is_root(t, next))
                throw std::logic_error("descent produced a non-root: " + next.to_string());
            if (rs.positive_roots.insert(next).second) queue.push_back(next);
        }
    }

    for (const Divisor& p : rs.positive_roots) {
        rs.roots.insert(p);
        rs.roots.insert(-p);
    }
    return rs;
}

long long root_count_formula(const std::string& raw_family, const std::vector<int>& params) {
    std::string family = raw_family;
    if (family == "H") family = "H_n";
    if (family == "F") family = "F_n";
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw std::invalid_argument(family + " expects " + std::to_string(count) +
                                        " parameter(s)");
    };
    auto bad = [&](const std::string& why) {
        throw std::invalid_argument(family + ": " + why);
    };
    if (family == "A") {
        need(1);
        long long n = params[0];
        if (n < 1) bad("n >= 1");
        return n * (n + 1);
    }
    if (family == "D") {
        need(1);
        long long n = params[0];
        if (n < 3) bad("n >= 3");
        return 2 * n * (n - 1);
    }
    if (family == "E6") { need(0); return 72; }
    if (family == "E7") { need(0); return 126; }
    if (family == "E8") { need(0); return 240; }
    if (family == "A_nmk") {
        need(3);
        long long n = params[0], m = params[1], k = params[2];
        if (n < 0 || m < 0 || k < 0) bad("arm lengths >= 0");
        return n * n + m * m + k * k + n + m + k + 2 * (n + 1) * (m + 1) * (k + 1);
    }
    if (family == "B_mn") {
        need(2);
        long long m = params[0], n = params[1];
        if (m < 0 || n < 2) bad("m >= 0 and n >= 2");
        return n * (n + 1) * (m + 1) + m * (m + 1) + n * (n + 1);
    }
    if (family == "C_mn") {
        need(2);
        long long m = params[0], n = params[1];
        if (m < 2 || n < 1) bad("m >= 2 and n >= 1");
        return 2 * m * m + 4 * m * n + n * n + 2 * m + n;
    }
    if (family == "D_n5") {
        need(1);
        long long n = params[0];
        if (n < 0) bad("n >= 0");
        return n * n + 33 * n + 72;
    }
    if (family == "F_n") {
        need(1);
        long long n = params[0];
        if (n < 0) bad("n >= 0");
        return n * n + 55 * n + 126;
    }
    if (family == "H_n") {
        need(1);
        long long n = params[0];
        if (n < 5) bad("n >= 5");
        return (n * n * n - n) / 3;
    }
    if (family == "E71") { need(0); return 124; }
    if (family == "E81") { need(0); return 238; }
    if (family == "E82") { need(0); return 212; }
    throw std::invalid_argument("unknown count family: " + family);
}

ContainmentReport compare_root_systems(const WeightedTree& t1, const WeightedTree& t2,
                                       const std::vector<int>& vertex_map) {
    if (t1.size() != t2.size()) throw std::invalid_argument("vertex counts differ");
    const int n = t1.size();
    if (static_cast<int>(vertex_map.size()) != n)
        throw std::invalid_argument("vertex map length mismatch");
    std::vector<bool> hit(n, false);
    for (int v : vertex_map) {
        if (v < 0 || v >= n || hit[v]) throw std::invalid_argument("vertex map is not a bijection");
        hit[v] = true;
    }
    RootSet r1 = enumerate_roots_box(t1);
    RootSet r2 = enumerate_roots_box(t2);
    std::set<Divisor> mapped;
    for (const Divisor& y : r1.roots) {
        Divisor m = Divisor::zero(n);
        for (int v = 0; v < n; ++v) m[vertex_map[v]] = y[v];
        mapped.insert(m);
    }
    ContainmentReport rep;
    for (const Divisor& y : mapped)
        if (!r2.roots.count(y)) rep.only_in_first.push_back(y);
    for (const Divisor& y : r2.roots)
        if (!mapped.count(y)) rep.only_in_second.push_back(y);
    if (rep.only_in_first.empty() && rep.only_in_second.empty())
        rep.relation = Containment::equal;
    else if (rep.only_in_first.empty())
        rep.relation = Containment::subset;
    else if (rep.only_in_second.empty())
        rep.relation = Containment::superset;
    else
        rep.relation = Containment::incomparable;
    return rep;
}

std::string to_string(Containment c) {
    switch (c) {
        case Containment::equal: return "equal";
        case Containment::subset: return "subset";
        case Containment::superset: return "superset";
        case Containment::incomparable: return "incomparable";
    }
    return "?";
}

}  // namespace rtq

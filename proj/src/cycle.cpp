#include "rtq/cycle.hpp"

#include <functional>
#include <stdexcept>

namespace rtq {

Divisor laufer_artin_cycle(const WeightedTree& t, std::vector<Divisor>* trace) {
    if (!is_negative_definite(t))
        throw std::domain_error("tree is not negative definite: Laufer iteration need not terminate");
    const int n = t.size();
    Divisor z = Divisor::ones(n);
    if (trace) trace->push_back(z);
    while (true) {
        int add = -1;
        for (int v = 0; v < n; ++v)
            if (pairing_with_simple(t, z, v) > 0) {
                add = v;
                break;
            }
        if (add < 0) break;
        ++z[add];
        if (trace) trace->push_back(z);
    }
    return z;
}

Divisor minimal_cycle_bruteforce(const WeightedTree& t, int bound) {
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    const int n = t.size();
    auto valid = [&](const Divisor& y) {
        for (int v = 0; v < n; ++v)
            if (pairing_with_simple(t, y, v) > 0) return false;
        return true;
    };

    Divisor cur = Divisor::zero(n);
    std::vector<Divisor> found;
    std::function<void(int, long long)> scan = [&](int pos, long long remaining) {
        if (pos == n) {
            if (remaining == 0 && valid(cur)) found.push_back(cur);
            return;
        }
        long long lo = 1, hi = std::min<long long>(bound, remaining - (n - 1 - pos));
        for (long long c = lo; c <= hi; ++c) {
            cur[pos] = c;
            scan(pos + 1, remaining - c);
        }
    };

    for (long long s = n; s <= static_cast<long long>(n) * bound; ++s) {
        found.clear();
        scan(0, s);
        if (!found.empty()) {
            if (found.size() > 1)
                throw std::logic_error("minimal cycle is not unique at the minimal sum");
            Divisor z = found[0];
            // Audit a slice above the minimum: any valid divisor nearby must
            // dominate the candidate or componentwise minimality fails.
            std::vector<Divisor> above;
            for (long long s2 = s + 1; s2 <= std::min(s + 2, static_cast<long long>(n) * bound); ++s2) {
                found.clear();
                scan(0, s2);
                for (const Divisor& y : found)
                    if (!z.dominated_by(y))
                        throw std::logic_error("candidate is not componentwise minimal");
            }
            return z;
        }
    }
    throw std::domain_error("bound too small: no valid cycle in the search box");
}

long long multiplicity(const WeightedTree& t) {
    Divisor z = laufer_artin_cycle(t);
    if (arithmetic_genus(t, z) != 0)
        throw std::domain_error("tree is not rational: p_a(Z) != 0");
    return -intersection_pairing(t, z, z);
}

}  // namespace rtq

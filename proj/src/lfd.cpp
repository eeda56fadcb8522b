#include "rtq/lfd.hpp"

#include <stdexcept>

namespace rtq {

RepSpace::RepSpace(Quiver q, DimensionVector a) : quiver(std::move(q)), dims(std::move(a)) {
    if (dims.size() != quiver.size()) throw std::invalid_argument("dimension vector length mismatch");
    for (int d : dims.dims)
        if (d < 0) throw std::invalid_argument("dimensions must be nonnegative");
    for (std::size_t i = 0; i < quiver.arrows().size(); ++i) {
        auto [t, h] = quiver.arrows()[i];
        for (int r = 0; r < dims[h]; ++r)
            for (int c = 0; c < dims[t]; ++c)
                coordinates.push_back({static_cast<int>(i), r, c});
    }
    total_dim = static_cast<int>(coordinates.size());
}

int RepSpace::coordinate_index(int arrow, int row, int col) const {
    for (std::size_t i = 0; i < coordinates.size(); ++i) {
        const auto& c = coordinates[i];
        if (c.arrow == arrow && c.row == row && c.col == col) return static_cast<int>(i);
    }
    throw std::logic_error("coordinate not found");
}

LinearFormMatrix infinitesimal_action_matrix(const RepSpace& rep, GeneratorChoice choice) {
    const Quiver& q = rep.quiver;
    const DimensionVector& a = rep.dims;
    const int n = q.size();
    const int N = rep.total_dim;

    long long gen_count = 0;
    for (int v = 0; v < n; ++v) gen_count += static_cast<long long>(a[v]) * a[v];
    if (gen_count != N + 1)
        throw std::domain_error("column count mismatch: generator count " +
                                std::to_string(gen_count) + " does not equal N+1 = " +
                                std::to_string(N + 1) + " (dimension vector is not a root)");

    int drop_vertex = choice.drop_vertex;
    if (drop_vertex < 0) {
        for (int v = n - 1; v >= 0; --v)
            if (a[v] > 0) {
                drop_vertex = v;
                break;
            }
    }
    if (drop_vertex < 0 || a[drop_vertex] <= choice.drop_index || choice.drop_index < 0)
        throw std::invalid_argument("invalid generator drop choice");

    // Fast coordinate lookup.
    std::vector<std::vector<int>> slot_index(q.arrows().size());
    for (std::size_t i = 0; i < rep.coordinates.size(); ++i) {
        const auto& c = rep.coordinates[i];
        slot_index[c.arrow].push_back(static_cast<int>(i));
    }
    auto coord = [&](int arrow, int r, int c) {
        auto [t, h] = q.arrows()[arrow];
        (void)h;
        return slot_index[arrow][r * a[t] + c];
    };

    LinearFormMatrix m(N, N, N);
    int col = 0;
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < a[v]; ++i) {
            for (int j = 0; j < a[v]; ++j) {
                if (v == drop_vertex && i == choice.drop_index && j == choice.drop_index) continue;
                // Generator e_ij at vertex v: head slots gain row transport,
                // tail slots lose column transport.
                for (std::size_t ar = 0; ar < q.arrows().size(); ++ar) {
                    auto [t, h] = q.arrows()[ar];
                    if (h == v) {
                        for (int c = 0; c < a[t]; ++c)
                            m.entries[coord(ar, i, c)][col] +=
                                SparsePolynomial::variable(N, coord(ar, j, c));
                    }
                    if (t == v) {
                        for (int r = 0; r < a[h]; ++r)
                            m.entries[coord(ar, r, j)][col] -=
                                SparsePolynomial::variable(N, coord(ar, r, i));
                    }
                }
                ++col;
            }
        }
    }
    if (col != N) throw std::logic_error("generator enumeration mismatch");
    m.check_linear();
    return m;
}

SparsePolynomial discriminant(const Quiver& q, const DimensionVector& a, int cap,
                              GeneratorChoice choice) {
    if (tits_form(q, a) != 1)
        throw std::domain_error("discriminant requires a root: Tits form must equal 1");
    RepSpace rep(q, a);
    if (rep.total_dim > cap)
        throw std::domain_error("representation dimension " + std::to_string(rep.total_dim) +
                                " exceeds the direct-mode cap " + std::to_string(cap) +
                                "; use compositional mode");
    if (rep.total_dim == 0) return SparsePolynomial(0, 1);
    LinearFormMatrix m = infinitesimal_action_matrix(rep, choice);
    return poly_det_bareiss(m.entries, std::max(cap, rep.total_dim));
}

bool saito_check(const SparsePolynomial& p, int n) {
    if (p.is_zero()) return false;
    auto d = p.homogeneous_degree();
    if (!d || *d != n) return false;
    return poly_is_reduced(p);
}

namespace {

LfdCertificate certify_direct(const Quiver& q, const DimensionVector& a, int cap) {
    LfdCertificate cert;
    cert.mode = CertifyMode::direct;
    SparsePolynomial disc = discriminant(q, a, cap);
    cert.degree = RepSpace(q, a).total_dim;
    cert.discriminant_poly = disc;
    if (disc.is_zero()) {
        cert.verdict = false;
        cert.diagnostic = "fields do not span: determinant vanishes identically";
        return cert;
    }
    cert.verdict = saito_check(disc, cert.degree);
    if (!cert.verdict) cert.diagnostic = "determinant is not a reduced equation of full degree";
    return cert;
}

LfdCertificate certify_compositional(const Quiver& q, const DimensionVector& a, int cap) {
    LfdCertificate cert;
    cert.mode = CertifyMode::compositional;
    ReductionTrail trail = reduce_to_core(q, a);
    if (!trail.complete)
        throw std::domain_error("reduction stalled before reaching a Dynkin core: " +
                                trail.diagnostic);
    cert.split_off_count = trail.split_off_count;
    for (const auto& comp : core_components(trail.final_quiver, trail.final_dims))
        cert.core_types.push_back(comp.dynkin_type);

    RepSpace core_rep(trail.final_quiver, trail.final_dims);
    if (core_rep.total_dim == 0) {
        // Fully trivialized: the certified divisor is the normal crossing of
        // the detached coordinates.
        cert.core_discriminant = SparsePolynomial(0, 1);
        cert.verdict = true;
        cert.degree = cert.split_off_count;
    } else {
        if (core_rep.total_dim > cap)
            throw std::domain_error("core uncertifiable at cap: core dimension " +
                                    std::to_string(core_rep.total_dim) + " exceeds " +
                                    std::to_string(cap));
        SparsePolynomial disc = discriminant(trail.final_quiver, trail.final_dims, cap);
        cert.core_discriminant = disc;
        cert.verdict = !disc.is_zero() && saito_check(disc, core_rep.total_dim);
        cert.degree = core_rep.total_dim + cert.split_off_count;
        if (!cert.verdict) cert.diagnostic = "core determinant is not reduced";
    }
    cert.trail = std::move(trail);
    return cert;
}

}  // namespace

LfdCertificate certify_lfd(const Quiver& q, const DimensionVector& a, CertifyMode mode, int cap) {
    if (tits_form(q, a) != 1)
        throw std::domain_error("certification requires a root: Tits form must equal 1");
    if (mode == CertifyMode::automatic) {
        RepSpace rep(q, a);
        mode = rep.total_dim <= cap ? CertifyMode::direct : CertifyMode::compositional;
    }
    return mode == CertifyMode::direct ? certify_direct(q, a, cap)
                                       : certify_compositional(q, a, cap);
}

}  // namespace rtq

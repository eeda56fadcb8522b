#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rtq/poly.hpp"
#include "rtq/quiver.hpp"

namespace rtq {

/// Coordinates of the representation space of (Q, a): one per entry of each
/// a_head x a_tail matrix slot, arrows in edge order, entries row-major.
struct RepSpace {
    Quiver quiver;
    DimensionVector dims;
    struct Coordinate {
        int arrow;
        int row;
        int col;
    };
    std::vector<Coordinate> coordinates;
    int total_dim = 0;  // N

    RepSpace(Quiver q, DimensionVector a);

    int coordinate_index(int arrow, int row, int col) const;
};

/// Optional override for the dropped diagonal generator (vertex, diagonal
/// index). By default the first diagonal generator of the highest-id vertex
/// with positive dimension is dropped; the global scalar acts trivially, so
/// one diagonal generator is redundant.
struct GeneratorChoice {
    int drop_vertex = -1;
    int drop_index = 0;
};

/// N x N matrix of the linear vector fields induced by the elementary
/// generators of the per-vertex general linear factors acting on Rep(Q, a);
/// a head contributes +v.A, a tail -A.v. Requires tits_form(q, a) == 1 so the
/// generator count minus one matches N.
LinearFormMatrix infinitesimal_action_matrix(const RepSpace& rep, GeneratorChoice choice = {});

/// det of the action matrix; homogeneous of degree N or identically zero.
/// Refuses N beyond the direct-mode cap.
SparsePolynomial discriminant(const Quiver& q, const DimensionVector& a, int cap = 12,
                              GeneratorChoice choice = {});

/// Saito's reducedness test: nonzero, homogeneous of total degree n, squarefree.
bool saito_check(const SparsePolynomial& p, int n);

enum class CertifyMode { direct, compositional, automatic };

struct LfdCertificate {
    CertifyMode mode = CertifyMode::direct;
    bool verdict = false;
    int degree = 0;  // degree of the certified equation in its ambient space
    std::string diagnostic;

    // direct mode
    std::optional<SparsePolynomial> discriminant_poly;

    // compositional mode
    std::optional<ReductionTrail> trail;
    std::optional<SparsePolynomial> core_discriminant;
    std::vector<std::string> core_types;  // Dynkin types of core components
    int split_off_count = 0;              // trivial linear factors alongside the core
};

/// Certifies that the discriminant of (Q, a) is a linear free divisor.
/// direct: compute det of the action matrix and test reducedness.
/// compositional: reduce to a Dynkin core, certify the core directly, and
/// combine with the detached coordinate factors.
/// automatic: direct when N <= cap, else compositional.
LfdCertificate certify_lfd(const Quiver& q, const DimensionVector& a,
                           CertifyMode mode = CertifyMode::automatic, int cap = 12);

}  // namespace rtq

#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtq {

using Int = mpz_class;

/// Exponent vector, one entry per variable.
using ExpVec = std::vector<int>;

/// Graded lexicographic order, largest term first: higher total degree wins,
/// ties broken by the exponent of x0, then x1, and so on.
struct GradedLexGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Multivariate polynomial with exact integer coefficients in canonical
/// graded-lex form. Variables are x0..x{nvars-1}. Stored terms never have a
/// zero coefficient, so equal polynomials serialize identically.
class SparsePolynomial {
public:
    using TermMap = std::map<ExpVec, Int, GradedLexGreater>;

    SparsePolynomial() : nvars_(0) {}
    explicit SparsePolynomial(int nvars) : nvars_(nvars) {}
    SparsePolynomial(int nvars, const Int& constant);

    static SparsePolynomial variable(int nvars, int index, int exponent = 1);
    static SparsePolynomial monomial(int nvars, const Int& coeff, const ExpVec& exps);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    int total_degree() const;              // -1 for the zero polynomial
    std::optional<int> homogeneous_degree() const;
    int degree_in(int var) const;          // -1 for the zero polynomial

    /// Coefficient of the graded-lex leading term (0 for the zero polynomial).
    Int leading_coefficient() const;
    Int constant_coefficient() const;
    Int coefficient(const ExpVec& exps) const;

    /// Gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    Int content() const;

    SparsePolynomial operator-() const;
    SparsePolynomial operator+(const SparsePolynomial& rhs) const;
    SparsePolynomial operator-(const SparsePolynomial& rhs) const;
    SparsePolynomial operator*(const SparsePolynomial& rhs) const;
    SparsePolynomial& operator+=(const SparsePolynomial& rhs);
    SparsePolynomial& operator-=(const SparsePolynomial& rhs);
    bool operator==(const SparsePolynomial& rhs) const;
    bool operator!=(const SparsePolynomial& rhs) const { return !(*this == rhs); }

    SparsePolynomial scaled(const Int& c) const;
    SparsePolynomial derivative(int var) const;

    /// Removes the integer content; sign chosen so the leading coefficient is
    /// positive. Zero stays zero.
    SparsePolynomial primitive_part() const;

    Int evaluate(const std::vector<Int>& point) const;

    std::string to_string() const;

    void add_term(const ExpVec& exps, const Int& coeff);

private:
    void check_same_vars(const SparsePolynomial& rhs) const;

    int nvars_;
    TermMap terms_;
};

/// Strict order on polynomials (same nvars assumed), used for canonical
/// container ordering in deterministic sweeps.
bool poly_less(const SparsePolynomial& a, const SparsePolynomial& b);

SparsePolynomial poly_mul(const SparsePolynomial& p, const SparsePolynomial& q);

/// Exact quotient p / d. Throws std::domain_error when d does not divide p.
SparsePolynomial poly_divexact(const SparsePolynomial& p, const SparsePolynomial& d);

/// Whether d divides p exactly; quotient returned through q when it does.
bool poly_try_divide(const SparsePolynomial& p, const SparsePolynomial& d, SparsePolynomial* q);

/// Gcd with positive leading coefficient. The result is primitive (integer
/// content 1) unless both inputs are constants, in which case it is the plain
/// integer gcd. Subresultant remainder sequences on the lowest shared
/// variable, with recursive content extraction.
SparsePolynomial poly_gcd(const SparsePolynomial& p, const SparsePolynomial& q);

/// Exact determinant via fraction-free (Bareiss) elimination with row
/// pivoting. Refuses matrices larger than max_dim on a side.
SparsePolynomial poly_det_bareiss(const std::vector<std::vector<SparsePolynomial>>& m,
                                  int max_dim = 12);

/// Cofactor-expansion determinant; exponential, kept as an independent check.
SparsePolynomial poly_det_cofactor(const std::vector<std::vector<SparsePolynomial>>& m);

/// True iff p is squarefree over the rationals, decided by
/// gcd(p, dp/dx0, ..., dp/dx{n-1}) having total degree 0.
/// Throws std::domain_error on the zero polynomial.
bool poly_is_reduced(const SparsePolynomial& p);

/// Matrix of homogeneous linear forms (degree <= 1, zero constant term).
struct LinearFormMatrix {
    int nrows = 0;
    int ncols = 0;
    std::vector<std::vector<SparsePolynomial>> entries;

    LinearFormMatrix() = default;
    LinearFormMatrix(int rows, int cols, int nvars);

    /// Validates that every entry is a homogeneous linear form or zero.
    void check_linear() const;
};

}  // namespace rtq

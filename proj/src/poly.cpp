#include "rtq/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rtq {

namespace {

Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int int_divexact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int int_pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

int exp_total(const ExpVec& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

bool GradedLexGreater::operator()(const ExpVec& a, const ExpVec& b) const {
    int da = exp_total(a), db = exp_total(b);
    if (da != db) return da > db;
    return a > b;
}

SparsePolynomial::SparsePolynomial(int nvars, const Int& constant) : nvars_(nvars) {
    if (constant != 0) terms_.emplace(ExpVec(nvars, 0), constant);
}

SparsePolynomial SparsePolynomial::variable(int nvars, int index, int exponent) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
    ExpVec e(nvars, 0);
    e[index] = exponent;
    return monomial(nvars, 1, e);
}

SparsePolynomial SparsePolynomial::monomial(int nvars, const Int& coeff, const ExpVec& exps) {
    if (static_cast<int>(exps.size()) != nvars)
        throw std::invalid_argument("exponent vector length mismatch");
    SparsePolynomial p(nvars);
    p.add_term(exps, coeff);
    return p;
}

bool SparsePolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exp_total(terms_.begin()->first) == 0);
}

int SparsePolynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return exp_total(terms_.begin()->first);
}

std::optional<int> SparsePolynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = exp_total(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (exp_total(e) != d) return std::nullopt;
    return d;
}

int SparsePolynomial::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

Int SparsePolynomial::leading_coefficient() const {
    return terms_.empty() ? Int(0) : terms_.begin()->second;
}

Int SparsePolynomial::constant_coefficient() const {
    return coefficient(ExpVec(nvars_, 0));
}

Int SparsePolynomial::coefficient(const ExpVec& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Int(0) : it->second;
}

Int SparsePolynomial::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

void SparsePolynomial::add_term(const ExpVec& exps, const Int& coeff) {
    if (coeff == 0) return;
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePolynomial::check_same_vars(const SparsePolynomial& rhs) const {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("variable count mismatch");
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& rhs) {
    check_same_vars(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& rhs) {
    check_same_vars(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& rhs) const {
    SparsePolynomial r = *this;
    r += rhs;
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& rhs) const {
    SparsePolynomial r = *this;
    r -= rhs;
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& rhs) const {
    check_same_vars(rhs);
    SparsePolynomial r(nvars_);
    ExpVec e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool SparsePolynomial::operator==(const SparsePolynomial& rhs) const {
    return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
}

SparsePolynomial SparsePolynomial::scaled(const Int& c) const {
    SparsePolynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

SparsePolynomial SparsePolynomial::derivative(int var) const {
    SparsePolynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

SparsePolynomial SparsePolynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Int g = content();
    if (leading_coefficient() < 0) g = -g;
    SparsePolynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, int_divexact(c, g));
    return r;
}

Int SparsePolynomial::evaluate(const std::vector<Int>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point length mismatch");
    Int total = 0;
    for (const auto& [e, c] : terms_) {
        Int t = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) t *= int_pow(point[i], e[i]);
        total += t;
    }
    return total;
}

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string vars;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i);
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << vars;
        }
    }
    return out.str();
}

bool poly_less(const SparsePolynomial& a, const SparsePolynomial& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    GradedLexGreater gt;
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (gt(ia->first, ib->first)) return false;
        if (gt(ib->first, ia->first)) return true;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms().end() && ib != b.terms().end();
}

SparsePolynomial poly_mul(const SparsePolynomial& p, const SparsePolynomial& q) {
    return p * q;
}

bool poly_try_divide(const SparsePolynomial& p, const SparsePolynomial& d, SparsePolynomial* q) {
    if (p.nvars() != d.nvars()) throw std::invalid_argument("variable count mismatch");
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    const int n = p.nvars();
    SparsePolynomial rem = p, quot(n);
    const auto& dlt = *d.terms().begin();
    while (!rem.is_zero()) {
        const auto& rlt = *rem.terms().begin();
        ExpVec e(n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            e[i] = rlt.first[i] - dlt.first[i];
            ok = e[i] >= 0;
        }
        if (ok) ok = mpz_divisible_p(rlt.second.get_mpz_t(), dlt.second.get_mpz_t()) != 0;
        if (!ok) return false;
        SparsePolynomial t = SparsePolynomial::monomial(n, int_divexact(rlt.second, dlt.second), e);
        quot += t;
        rem -= t * d;
    }
    if (q) *q = quot;
    return true;
}

SparsePolynomial poly_divexact(const SparsePolynomial& p, const SparsePolynomial& d) {
    SparsePolynomial q;
    if (!poly_try_divide(p, d, &q)) throw std::domain_error("inexact polynomial division");
    return q;
}

namespace {

// Dense view of a polynomial in one designated variable; coefficients are
// polynomials in the remaining variables (stored with the same nvars).
using UniView = std::vector<SparsePolynomial>;

UniView decompose(const SparsePolynomial& p, int var) {
    int d = p.degree_in(var);
    UniView v(static_cast<std::size_t>(std::max(d, 0)) + 1, SparsePolynomial(p.nvars()));
    for (const auto& [e, c] : p.terms()) {
        ExpVec rest = e;
        int k = rest[var];
        rest[var] = 0;
        v[k].add_term(rest, c);
    }
    while (v.size() > 1 && v.back().is_zero()) v.pop_back();
    return v;
}

SparsePolynomial recompose(const UniView& v, int var) {
    SparsePolynomial p(v.empty() ? 0 : v[0].nvars());
    for (std::size_t k = 0; k < v.size(); ++k) {
        for (const auto& [e, c] : v[k].terms()) {
            ExpVec full = e;
            full[var] += static_cast<int>(k);
            p.add_term(full, c);
        }
    }
    return p;
}

bool uv_zero(const UniView& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

int uv_deg(const UniView& v) {
    for (int k = static_cast<int>(v.size()) - 1; k >= 0; --k)
        if (!v[k].is_zero()) return k;
    return -1;
}

void uv_trim(UniView& v) {
    while (v.size() > 1 && v.back().is_zero()) v.pop_back();
}

UniView uv_scale(const UniView& v, const SparsePolynomial& s) {
    UniView r = v;
    for (auto& c : r) c = c * s;
    return r;
}

UniView uv_divexact(const UniView& v, const SparsePolynomial& s) {
    UniView r = v;
    for (auto& c : r) c = c.is_zero() ? c : poly_divexact(c, s);
    return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
UniView uv_prem(const UniView& a, const UniView& b) {
    int db = uv_deg(b);
    const SparsePolynomial& lb = b[db];
    UniView r = a;
    int e = uv_deg(a) - db + 1;
    while (true) {
        int dr = uv_deg(r);
        if (dr < db) break;
        SparsePolynomial lr = r[dr];
        for (auto& c : r) c = c * lb;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= b[i] * lr;
        uv_trim(r);
        --e;
    }
    for (; e > 0; --e)
        for (auto& c : r) c = c * lb;
    return r;
}

SparsePolynomial poly_pow(const SparsePolynomial& p, int e) {
    SparsePolynomial r(p.nvars(), 1);
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

// Content of the view: gcd of its coefficient polynomials.
SparsePolynomial uv_content(const UniView& v) {
    SparsePolynomial g(v[0].nvars());
    for (const auto& c : v) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.primitive_part() : poly_gcd(g, c);
        if (g.is_constant() && g.leading_coefficient() == 1) break;
    }
    return g;
}

std::vector<int> common_vars(const SparsePolynomial& p, const SparsePolynomial& q) {
    std::vector<bool> inp(p.nvars(), false), inq(q.nvars(), false);
    for (const auto& [e, c] : p.terms())
        for (int i = 0; i < p.nvars(); ++i)
            if (e[i] > 0) inp[i] = true;
    for (const auto& [e, c] : q.terms())
        for (int i = 0; i < q.nvars(); ++i)
            if (e[i] > 0) inq[i] = true;
    std::vector<int> both;
    for (int i = 0; i < p.nvars(); ++i)
        if (inp[i] && inq[i]) both.push_back(i);
    return both;
}

// Subresultant remainder sequence of two view-primitive inputs; returns the
// primitive gcd with respect to the main variable.
UniView subresultant_gcd(UniView a, UniView b, int nvars) {
    if (uv_deg(a) < uv_deg(b)) std::swap(a, b);
    if (uv_deg(b) == 0) return UniView{SparsePolynomial(nvars, 1)};
    SparsePolynomial g(nvars, 1), h(nvars, 1);
    while (true) {
        int delta = uv_deg(a) - uv_deg(b);
        UniView r = uv_prem(a, b);
        if (uv_zero(r)) break;
        if (uv_deg(r) == 0) return UniView{SparsePolynomial(nvars, 1)};
        a = std::move(b);
        SparsePolynomial divisor = g * poly_pow(h, delta);
        b = uv_divexact(r, divisor);
        g = a[uv_deg(a)];
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = poly_divexact(poly_pow(g, delta), poly_pow(h, delta - 1));
        }
    }
    SparsePolynomial cont = uv_content(b);
    return uv_divexact(b, cont);
}

}  // namespace

SparsePolynomial poly_gcd(const SparsePolynomial& p, const SparsePolynomial& q) {
    if (p.nvars() != q.nvars()) throw std::invalid_argument("variable count mismatch");
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    const int n = p.nvars();
    auto normalize = [](const SparsePolynomial& r) { return r.primitive_part(); };
    if (p.is_zero()) return q.is_constant() ? SparsePolynomial(n, abs(q.leading_coefficient())) : normalize(q);
    if (q.is_zero()) return p.is_constant() ? SparsePolynomial(n, abs(p.leading_coefficient())) : normalize(p);
    if (p.is_constant() && q.is_constant())
        return SparsePolynomial(n, int_gcd(p.leading_coefficient(), q.leading_coefficient()));

    std::vector<int> shared = common_vars(p, q);
    if (shared.empty()) return SparsePolynomial(n, 1);

    int main = shared.front();
    UniView a = decompose(p, main);
    UniView b = decompose(q, main);
    SparsePolynomial ca = uv_content(a), cb = uv_content(b);
    SparsePolynomial gamma = poly_gcd(ca, cb);
    UniView gv = subresultant_gcd(uv_divexact(a, ca), uv_divexact(b, cb), n);
    SparsePolynomial result = recompose(gv, main) * gamma;
    return result.primitive_part();
}

SparsePolynomial poly_det_bareiss(const std::vector<std::vector<SparsePolynomial>>& m, int max_dim) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return SparsePolynomial(0, 1);
    if (n > max_dim)
        throw std::domain_error("matrix dimension " + std::to_string(n) +
                                " exceeds determinant size guard " + std::to_string(max_dim));
    const int nvars = m[0][0].nvars();
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix not square");

    std::vector<std::vector<SparsePolynomial>> a = m;
    SparsePolynomial prev(nvars, 1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (!a[r][k].is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return SparsePolynomial(nvars);
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = poly_divexact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    SparsePolynomial det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

SparsePolynomial poly_det_cofactor(const std::vector<std::vector<SparsePolynomial>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return SparsePolynomial(0, 1);
    if (n == 1) return m[0][0];
    const int nvars = m[0][0].nvars();
    SparsePolynomial det(nvars);
    for (int j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<SparsePolynomial>> minor;
        minor.reserve(n - 1);
        for (int i = 1; i < n; ++i) {
            std::vector<SparsePolynomial> row;
            row.reserve(n - 1);
            for (int k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        SparsePolynomial term = m[0][j] * poly_det_cofactor(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

bool poly_is_reduced(const SparsePolynomial& p) {
    if (p.is_zero())
        throw std::domain_error("zero determinant: chosen generator complement is degenerate");
    if (p.is_constant()) return true;
    SparsePolynomial g = p;
    for (int v = 0; v < p.nvars(); ++v) {
        SparsePolynomial dv = p.derivative(v);
        if (dv.is_zero()) continue;
        g = poly_gcd(g, dv);
        if (g.total_degree() == 0) return true;
    }
    return g.total_degree() == 0;
}

LinearFormMatrix::LinearFormMatrix(int rows, int cols, int nvars)
    : nrows(rows), ncols(cols),
      entries(rows, std::vector<SparsePolynomial>(cols, SparsePolynomial(nvars))) {}

void LinearFormMatrix::check_linear() const {
    for (const auto& row : entries)
        for (const auto& e : row) {
            if (e.is_zero()) continue;
            auto d = e.homogeneous_degree();
            if (!d || *d != 1) throw std::logic_error("matrix entry is not a homogeneous linear form");
        }
}

}  // namespace rtq

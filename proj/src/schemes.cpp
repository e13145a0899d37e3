#include "vstrata/schemes.hpp"

#include "vstrata/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace vstrata {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

// Polynomials in a few local variables, truncated above a fixed total degree.
// Monomials are stored degree by degree, each degree block in graded-lex order.
class LocalBasis {
public:
    LocalBasis(unsigned nvars, unsigned max_degree) : nvars_(nvars), max_degree_(max_degree)
    {
        for (unsigned k = 0; k <= max_degree; ++k) {
            for (auto& mono : monomial_basis(nvars - 1, k)) {
                index_.emplace(mono, monomials_.size());
                monomials_.push_back(std::move(mono));
            }
        }
        const std::size_t n = monomials_.size();
        product_.assign(n * n, kNone);
        MultiIndex sum(nvars);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                for (unsigned v = 0; v < nvars; ++v) sum[v] = monomials_[a][v] + monomials_[b][v];
                if (total_degree(sum) <= max_degree) product_[a * n + b] = index_.at(sum);
            }
        }
    }

    std::size_t size() const { return monomials_.size(); }
    unsigned nvars() const { return nvars_; }
    const MultiIndex& monomial(std::size_t i) const { return monomials_[i]; }
    std::size_t index_of(const MultiIndex& mono) const { return index_.at(mono); }

    QVector one() const
    {
        QVector p(size());
        p[0] = 1;
        return p;
    }

    QVector multiply(const QVector& a, const QVector& b) const
    {
        const std::size_t n = size();
        QVector out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[j] == 0) continue;
                const std::size_t k = product_[i * n + j];
                if (k != kNone) out[k] += a[i] * b[j];
            }
        }
        return out;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    unsigned nvars_;
    unsigned max_degree_;
    std::vector<MultiIndex> monomials_;
    std::map<MultiIndex, std::size_t> index_;
    std::vector<std::size_t> product_;
};

// Given x_i = subst[i](y) as truncated local polynomials, returns one row per selected
// local monomial: row_γ[α] = coefficient of y^γ in Π_i subst[i]^{α_i}, times scale[γ].
QMatrix substitution_functionals(const LocalBasis& basis, const std::vector<QVector>& subst, unsigned d,
                                 const std::vector<std::size_t>& selected, const QVector& scale)
{
    const unsigned m = static_cast<unsigned>(subst.size()) - 1;
    std::vector<std::vector<QVector>> powers(m + 1);
    for (unsigned i = 0; i <= m; ++i) {
        powers[i].push_back(basis.one());
        for (unsigned e = 1; e <= d; ++e) powers[i].push_back(basis.multiply(powers[i].back(), subst[i]));
    }
    const auto forms = monomial_basis(m, d);
    QMatrix out(selected.size(), forms.size());
    for (std::size_t col = 0; col < forms.size(); ++col) {
        QVector acc = powers[0][forms[col][0]];
        for (unsigned i = 1; i <= m; ++i) {
            if (forms[col][i] != 0) acc = basis.multiply(acc, powers[i][forms[col][i]]);
        }
        for (std::size_t r = 0; r < selected.size(); ++r) {
            out(r, col) = acc[selected[r]] * scale[r];
        }
    }
    return out;
}

std::size_t argmax_abs(const QVector& v)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (abs(v[i]) > abs(v[best])) best = i;
    }
    return best;
}

QMatrix reduced_conditions(const QVector& q, unsigned d)
{
    const unsigned m = static_cast<unsigned>(q.size()) - 1;
    const auto forms = monomial_basis(m, d);
    QMatrix out(1, forms.size());
    for (std::size_t col = 0; col < forms.size(); ++col) {
        Rational v = 1;
        for (unsigned i = 0; i <= m; ++i) {
            for (unsigned e = 0; e < forms[col][i]; ++e) v *= q[i];
        }
        out(0, col) = v;
    }
    return out;
}

QMatrix jet_conditions(const Jet& jet, unsigned d)
{
    const unsigned m = static_cast<unsigned>(jet.curve_coeffs.front().size()) - 1;
    const unsigned k = jet.length;
    LocalBasis basis(1, k - 1);
    std::vector<QVector> subst(m + 1, QVector(k));
    for (std::size_t j = 0; j < jet.curve_coeffs.size() && j < k; ++j) {
        for (unsigned i = 0; i <= m; ++i) subst[i][j] = jet.curve_coeffs[j][i];
    }
    std::vector<std::size_t> selected(k);
    std::iota(selected.begin(), selected.end(), 0);
    return substitution_functionals(basis, subst, d, selected, QVector(k, Rational(1)));
}

// Derivatives ∂^γ f(q), |γ| < k, of the dehomogenization f in the chart where the
// largest-|.| coordinate of Q equals 1.
QMatrix fat_point_conditions(const FatPoint& fp, unsigned d)
{
    const QVector& q = fp.point;
    const unsigned m = static_cast<unsigned>(q.size()) - 1;
    const std::size_t chart = argmax_abs(q);
    LocalBasis basis(m, fp.multiplicity - 1);
    std::vector<QVector> subst(m + 1, QVector(basis.size()));
    unsigned local = 0;
    for (unsigned i = 0; i <= m; ++i) {
        subst[i][0] = q[i] / q[chart];
        if (i == chart) continue;
        MultiIndex y(m, 0);
        y[local++] = 1;
        subst[i][basis.index_of(y)] = 1;
    }
    std::vector<std::size_t> selected(basis.size());
    std::iota(selected.begin(), selected.end(), 0);
    QVector scale(basis.size());
    for (std::size_t g = 0; g < basis.size(); ++g) {
        Integer f = 1;
        for (auto e : basis.monomial(g)) f *= factorial(e);
        scale[g] = Rational(f);
    }
    return substitution_functionals(basis, subst, d, selected, scale);
}

// Columns Q, V, then the first standard basis vectors that keep the set independent.
std::vector<QVector> adapted_frame(const QVector& q, const QVector& v)
{
    const std::size_t n = q.size();
    std::vector<QVector> frame{q, v};
    QMatrix acc = QMatrix::from_rows(frame, n);
    for (std::size_t i = 0; i < n && frame.size() < n; ++i) {
        QVector e(n);
        e[i] = 1;
        QMatrix trial = with_row(acc, e);
        if (rank_exact(trial) == trial.rows()) {
            frame.push_back(e);
            acc = std::move(trial);
        }
    }
    return frame;
}

// In adapted coordinates x = Q + y_1 V + Σ_{k>=2} y_k E_k the ideal is (y)^3 + (y_2..y_m)^2,
// with standard monomials 1, y_1, y_1^2, y_k, y_1 y_k.
QMatrix two_three_conditions(const TwoThreePoint& p, unsigned d)
{
    const unsigned m = static_cast<unsigned>(p.point.size()) - 1;
    const auto frame = adapted_frame(p.point, p.line_direction);
    LocalBasis basis(m, 2);
    std::vector<QVector> subst(m + 1, QVector(basis.size()));
    for (unsigned i = 0; i <= m; ++i) {
        subst[i][0] = frame[0][i];
        for (unsigned k = 1; k <= m; ++k) {
            MultiIndex y(m, 0);
            y[k - 1] = 1;
            subst[i][basis.index_of(y)] = frame[k][i];
        }
    }
    std::vector<std::size_t> selected;
    auto pick = [&](MultiIndex y) { selected.push_back(basis.index_of(y)); };
    MultiIndex y(m, 0);
    pick(y);
    y[0] = 1;
    pick(y);
    y[0] = 2;
    pick(y);
    for (unsigned k = 1; k < m; ++k) {
        MultiIndex a(m, 0);
        a[k] = 1;
        pick(a);
        a[0] = 1;
        pick(a);
    }
    return substitution_functionals(basis, subst, d, selected, QVector(selected.size(), Rational(1)));
}

// Truncated power series in t whose coefficients are forms.
using FormSeries = std::vector<Form>;

FormSeries series_multiply(const FormSeries& a, const FormSeries& b, std::size_t len)
{
    FormSeries out;
    out.reserve(len);
    const unsigned m = a.front().m();
    const unsigned deg = a.front().d() + b.front().d();
    for (std::size_t k = 0; k < len; ++k) out.emplace_back(m, deg);
    for (std::size_t i = 0; i < len && i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < len && j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += multiply(a[i], b[j]);
        }
    }
    return out;
}

// Coefficients of t^0..t^{len-1} in (Σ_i c(t)_i x_i)^d.
FormSeries jet_power_series(const Jet& jet, unsigned d, std::size_t len)
{
    const unsigned m = static_cast<unsigned>(jet.curve_coeffs.front().size()) - 1;
    FormSeries linear;
    for (std::size_t j = 0; j < len; ++j) {
        if (j < jet.curve_coeffs.size()) {
            linear.emplace_back(m, 1, jet.curve_coeffs[j]);
        } else {
            linear.emplace_back(m, 1);
        }
    }
    FormSeries acc{Form(m, 0, QVector{Rational(1)})};
    for (std::size_t k = 1; k < len; ++k) acc.emplace_back(m, 0);
    for (unsigned e = 0; e < d; ++e) acc = series_multiply(acc, linear, len);
    return acc;
}

void check_dimension(const QVector& v, unsigned m, std::size_t index, const char* what)
{
    if (v.size() != m + 1) {
        throw InputError("component " + std::to_string(index) + ": " + what + " has " + std::to_string(v.size()) +
                         " coordinates, expected " + std::to_string(m + 1));
    }
}

unsigned odometer_total(const std::vector<unsigned>& v)
{
    return std::accumulate(v.begin(), v.end(), 0U);
}

} // namespace

const char* kind_name(const ComponentSpec& c)
{
    return std::visit(overloaded{[](const Reduced&) { return "reduced"; }, [](const Jet&) { return "jet"; },
                                 [](const FatPoint&) { return "fat"; }, [](const TwoThreePoint&) { return "two_three"; }},
                      c);
}

const QVector& support(const ComponentSpec& c)
{
    return std::visit(overloaded{[](const Reduced& r) -> const QVector& { return r.point; },
                                 [](const Jet& j) -> const QVector& { return j.curve_coeffs.front(); },
                                 [](const FatPoint& f) -> const QVector& { return f.point; },
                                 [](const TwoThreePoint& p) -> const QVector& { return p.point; }},
                      c);
}

bool is_curvilinear(const ComponentSpec& c)
{
    return std::holds_alternative<Reduced>(c) || std::holds_alternative<Jet>(c);
}

bool is_curvilinear(const SchemeSpec& z)
{
    return std::all_of(z.components.begin(), z.components.end(), [](const auto& c) { return is_curvilinear(c); });
}

bool same_projective_point(const QVector& u, const QVector& v)
{
    if (u.size() != v.size() || is_zero_vector(u) || is_zero_vector(v)) return false;
    return rank_exact(QMatrix::from_rows({u, v}, u.size())) == 1;
}

void validate(const SchemeSpec& z)
{
    if (z.m < 1) throw InputError("scheme ambient dimension m must be at least 1");
    if (z.components.empty()) throw InputError("scheme has no components");
    for (std::size_t i = 0; i < z.components.size(); ++i) {
        const auto& comp = z.components[i];
        const std::string where = "component " + std::to_string(i) + " (" + kind_name(comp) + ")";
        std::visit(overloaded{
                       [&](const Reduced& r) {
                           check_dimension(r.point, z.m, i, "point");
                           if (is_zero_vector(r.point)) throw InputError(where + ": zero point");
                       },
                       [&](const Jet& j) {
                           if (j.curve_coeffs.size() < 2) throw InputError(where + ": needs at least c0 and c1");
                           for (const auto& c : j.curve_coeffs) check_dimension(c, z.m, i, "curve coefficient");
                           if (j.length < 2) throw InputError(where + ": length must be at least 2");
                           if (is_zero_vector(j.curve_coeffs[0])) throw InputError(where + ": c0 is zero");
                           if (rank_exact(QMatrix::from_rows({j.curve_coeffs[0], j.curve_coeffs[1]}, z.m + 1)) < 2) {
                               throw InputError(where + ": c1 is proportional to c0 (germ is not smooth)");
                           }
                       },
                       [&](const FatPoint& f) {
                           check_dimension(f.point, z.m, i, "point");
                           if (is_zero_vector(f.point)) throw InputError(where + ": zero point");
                           if (f.multiplicity < 2) throw InputError(where + ": multiplicity must be at least 2");
                       },
                       [&](const TwoThreePoint& p) {
                           check_dimension(p.point, z.m, i, "point");
                           check_dimension(p.line_direction, z.m, i, "line direction");
                           if (is_zero_vector(p.point)) throw InputError(where + ": zero point");
                           if (rank_exact(QMatrix::from_rows({p.point, p.line_direction}, z.m + 1)) < 2) {
                               throw InputError(where + ": line direction is proportional to the point");
                           }
                       },
                   },
                   comp);
    }
    for (std::size_t i = 0; i < z.components.size(); ++i) {
        for (std::size_t j = i + 1; j < z.components.size(); ++j) {
            if (same_projective_point(support(z.components[i]), support(z.components[j]))) {
                throw InputError("components " + std::to_string(i) + " and " + std::to_string(j) +
                                 " have the same support");
            }
        }
    }
}

std::size_t component_degree(unsigned m, const ComponentSpec& c)
{
    return std::visit(overloaded{[](const Reduced&) -> std::size_t { return 1; },
                                 [](const Jet& j) -> std::size_t { return j.length; },
                                 [m](const FatPoint& f) -> std::size_t { return monomial_count(m, f.multiplicity - 1); },
                                 [m](const TwoThreePoint&) -> std::size_t { return 2 * static_cast<std::size_t>(m) + 1; }},
                      c);
}

std::size_t scheme_degree(const SchemeSpec& z)
{
    std::size_t total = 0;
    for (const auto& c : z.components) total += component_degree(z.m, c);
    return total;
}

QMatrix span_matrix(const SchemeSpec& z, unsigned d)
{
    QMatrix out(0, monomial_count(z.m, d));
    for (std::size_t i = 0; i < z.components.size(); ++i) {
        const auto& comp = z.components[i];
        if (const auto* r = std::get_if<Reduced>(&comp)) {
            out.append_row(power_expand(LinearForm(r->point), d).coeffs());
        } else if (const auto* j = std::get_if<Jet>(&comp)) {
            for (const auto& f : jet_power_series(*j, d, j->length)) out.append_row(f.coeffs());
        } else {
            throw UnsupportedComponent("span_matrix: component " + std::to_string(i) + " (" + kind_name(comp) +
                                       ") is not curvilinear");
        }
    }
    return out;
}

QMatrix conditions_matrix(const SchemeSpec& z, unsigned d)
{
    QMatrix out(0, monomial_count(z.m, d));
    for (const auto& comp : z.components) {
        out.append_rows(std::visit(overloaded{[d](const Reduced& r) { return reduced_conditions(r.point, d); },
                                              [d](const Jet& j) { return jet_conditions(j, d); },
                                              [d](const FatPoint& f) { return fat_point_conditions(f, d); },
                                              [d](const TwoThreePoint& p) { return two_three_conditions(p, d); }},
                                   comp));
    }
    return out;
}

std::size_t h1(const SchemeSpec& z, unsigned d, RankMode mode)
{
    if (z.components.empty()) return 0;
    return scheme_degree(z) - rank(conditions_matrix(z, d), mode);
}

std::vector<unsigned> curvilinear_lengths(const SchemeSpec& z)
{
    std::vector<unsigned> out;
    for (std::size_t i = 0; i < z.components.size(); ++i) {
        const auto& comp = z.components[i];
        if (std::holds_alternative<Reduced>(comp)) {
            out.push_back(1);
        } else if (const auto* j = std::get_if<Jet>(&comp)) {
            out.push_back(j->length);
        } else {
            throw UnsupportedComponent("component " + std::to_string(i) + " (" + kind_name(comp) +
                                       ") is not curvilinear");
        }
    }
    return out;
}

SchemeSpec truncate(const SchemeSpec& z, const std::vector<unsigned>& lengths)
{
    const auto full = curvilinear_lengths(z);
    if (lengths.size() != full.size()) throw InputError("truncate: wrong number of lengths");
    SchemeSpec out{z.m, {}};
    for (std::size_t i = 0; i < full.size(); ++i) {
        if (lengths[i] > full[i]) throw InputError("truncate: length exceeds component degree");
        if (lengths[i] == 0) continue;
        const auto& comp = z.components[i];
        if (lengths[i] == 1) {
            out.components.emplace_back(Reduced{support(comp)});
        } else {
            Jet j = std::get<Jet>(comp);
            j.length = lengths[i];
            out.components.emplace_back(std::move(j));
        }
    }
    return out;
}

std::vector<std::vector<unsigned>> proper_truncations(const SchemeSpec& z)
{
    const auto full = curvilinear_lengths(z);
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(full.size(), 0);
    while (true) {
        if (cur != full) out.push_back(cur);
        std::size_t i = 0;
        while (i < cur.size() && cur[i] == full[i]) {
            cur[i] = 0;
            ++i;
        }
        if (i == cur.size()) break;
        ++cur[i];
    }
    return out;
}

std::vector<QMatrix> proper_subscheme_spans(const SchemeSpec& z, unsigned d)
{
    std::vector<QMatrix> out;
    for (const auto& lengths : proper_truncations(z)) {
        out.push_back(span_matrix(truncate(z, lengths), d));
    }
    return out;
}

std::vector<std::vector<unsigned>> truncations_of_degree(const SchemeSpec& z, std::size_t k)
{
    std::vector<std::vector<unsigned>> out;
    for (auto& t : proper_truncations(z)) {
        if (odometer_total(t) == k) out.push_back(std::move(t));
    }
    auto full = curvilinear_lengths(z);
    if (odometer_total(full) == k) out.push_back(std::move(full));
    return out;
}

ResidualTrace residual_trace_split(const SchemeSpec& z, const Hyperplane& h)
{
    if (z.m < 2) throw InputError("residual_trace_split needs m >= 2");
    if (h.coeffs.size() != z.m + 1 || is_zero_vector(h.coeffs)) {
        throw InputError("hyperplane must be a nonzero vector of length m+1");
    }
    ResidualTrace out;
    out.residual.m = z.m;
    out.trace.m = z.m - 1;
    out.hyperplane_basis = kernel_basis(QMatrix::from_rows({h.coeffs}, z.m + 1));
    const QMatrix basis = QMatrix::from_rows(out.hyperplane_basis, z.m + 1);

    auto on_h = [&](const QVector& q) {
        Rational s = 0;
        for (std::size_t i = 0; i < q.size(); ++i) s += h.coeffs[i] * q[i];
        return s == 0;
    };
    auto in_h_coordinates = [&](const QVector& q) {
        auto c = membership_solve(basis, q);
        if (!c) throw InternalInconsistency("point on hyperplane not in its span");
        return *c;
    };

    for (std::size_t i = 0; i < z.components.size(); ++i) {
        const auto& comp = z.components[i];
        if (!std::holds_alternative<Reduced>(comp) && !std::holds_alternative<FatPoint>(comp)) {
            throw UnsupportedComponent("residual_trace_split: component " + std::to_string(i) + " (" +
                                       kind_name(comp) + ") is not a reduced or fat point");
        }
        const QVector& q = support(comp);
        if (!on_h(q)) {
            out.residual.components.push_back(comp);
            continue;
        }
        if (const auto* f = std::get_if<FatPoint>(&comp)) {
            if (f->multiplicity - 1 >= 2) {
                out.residual.components.emplace_back(FatPoint{q, f->multiplicity - 1});
            } else {
                out.residual.components.emplace_back(Reduced{q});
            }
            out.trace.components.emplace_back(FatPoint{in_h_coordinates(q), f->multiplicity});
        } else {
            out.trace.components.emplace_back(Reduced{in_h_coordinates(q)});
        }
    }
    return out;
}

bool castelnuovo_check(const SchemeSpec& z, const Hyperplane& h, unsigned d)
{
    if (d < 1) throw InputError("castelnuovo_check needs d >= 1");
    const auto split = residual_trace_split(z, h);
    return h1(z, d) <= h1(split.residual, d - 1) + h1(split.trace, d);
}

bool lgp_check(const SchemeSpec& z)
{
    for (const auto& t : truncations_of_degree(z, z.m + 1)) {
        if (rank_exact(conditions_matrix(truncate(z, t), 1)) < z.m + 1) return false;
    }
    return true;
}

bool at_most_two_on_lines(const SchemeSpec& z)
{
    if (z.m < 2) return scheme_degree(z) <= 2;
    for (const auto& t : truncations_of_degree(z, 3)) {
        if (rank_exact(conditions_matrix(truncate(z, t), 1)) < 3) return false;
    }
    return true;
}

Jet reparametrize(const Jet& jet, const Rational& u, const Rational& v)
{
    if (u == 0) throw InputError("reparametrize: u must be nonzero");
    const std::size_t k = jet.length;
    const std::size_t n = jet.curve_coeffs.front().size();
    // s(t) = u t + v t^2; accumulate Σ_j c_j s(t)^j up to t^{k-1}.
    QVector s(k);
    if (k > 1) s[1] = u;
    if (k > 2) s[2] = v;
    QVector power(k);
    power[0] = 1;
    std::vector<QVector> out(k, QVector(n));
    for (std::size_t j = 0; j < jet.curve_coeffs.size(); ++j) {
        for (std::size_t e = 0; e < k; ++e) {
            if (power[e] == 0) continue;
            for (std::size_t i = 0; i < n; ++i) out[e][i] += power[e] * jet.curve_coeffs[j][i];
        }
        QVector next(k);
        for (std::size_t a = 0; a < k; ++a) {
            if (power[a] == 0) continue;
            for (std::size_t b = 1; a + b < k && b < 3; ++b) next[a + b] += power[a] * s[b];
        }
        power = std::move(next);
    }
    return Jet{std::move(out), jet.length};
}

} // namespace vstrata

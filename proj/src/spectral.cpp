#include "relpos/spectral.hpp"

#include <cmath>

#include "relpos/errors.hpp"

namespace relpos {

QuadraticNumber tau_jm(std::int64_t j, std::int64_t m) {
    // Positive root of X^2 - jX - m.
    return (QuadraticNumber(Rational(j)) +
            QuadraticNumber::sqrt_of(Rational(j * j + 4 * m))) /
           QuadraticNumber(Rational(2));
}

PFData pf_data(const SubstitutionMatrix& m) {
    if (!is_primitive(m)) throw NonPrimitive("matrix is not primitive");
    // Roots of X^2 - tr X + det. Primitivity forces distinct real roots
    // and a strictly positive off-diagonal, so u is well-defined.
    Rational tr(m.trace());
    Rational det(m.det());
    QuadraticNumber disc_root = QuadraticNumber::sqrt_of(tr * tr - Rational(4) * det);
    QuadraticNumber two{Rational(2)};
    PFData out;
    out.lambda_pf = (QuadraticNumber(tr) + disc_root) / two;
    out.lambda_conjugate = (QuadraticNumber(tr) - disc_root) / two;
    out.u = (out.lambda_pf - QuadraticNumber(Rational(m.bb))) / QuadraticNumber(Rational(m.ba));
    return out;
}

LimitReport predicted_limits(const SubstitutionMatrix& m) {
    PFData pf = pf_data(m);
    QuadraticNumber one{Rational(1)};
    LimitReport out;
    out.freq_a = pf.u / (pf.u + one);
    out.freq_b = one / (pf.u + one);
    out.lim_pa_over_n = one + one / pf.u;
    out.lim_pb_over_n = pf.u + one;
    out.lim_r_over_n = pf.u - one / pf.u;
    return out;
}

FreqFromLimit freq_from_r_limit(const ExtendedQuad& rlim) {
    FreqFromLimit out;
    if (rlim.kind() == ExtendedQuad::Kind::plus_infinity) {
        out.exact = true;
        out.value = QuadraticNumber(Rational(0));
        out.approx = 0.0;
        return out;
    }
    if (rlim.kind() == ExtendedQuad::Kind::minus_infinity) {
        out.exact = true;
        out.value = QuadraticNumber(Rational(1));
        out.approx = 1.0;
        return out;
    }
    const QuadraticNumber& r = rlim.value();
    if (r.is_zero()) {
        out.exact = true;
        out.value = QuadraticNumber(Rational(1, 2));
        out.approx = 0.5;
        return out;
    }
    QuadraticNumber two{Rational(2)};
    QuadraticNumber s = QuadraticNumber(Rational(4)) + r * r;
    std::optional<QuadraticNumber> root;
    if (s.is_rational())
        root = QuadraticNumber::sqrt_of(s.as_rational());
    else
        root = sqrt_in_field(s);
    // The closed form is exact only when the root lives in the field of r.
    if (root && (r.is_rational() || root->is_rational() ||
                 root->discriminant() == r.discriminant())) {
        out.exact = true;
        out.value = (two + r - *root) / (two * r);
        out.approx = out.value.to_double();
        return out;
    }
    double rd = r.to_double();
    out.exact = false;
    out.approx = (2.0 + rd - std::sqrt(4.0 + rd * rd)) / (2.0 * rd);
    return out;
}

std::pair<ExtendedQuad, ExtendedQuad> pq_from_r(const ExtendedQuad& rlim) {
    if (rlim.kind() == ExtendedQuad::Kind::plus_infinity)
        return {ExtendedQuad::plus_infinity(), ExtendedQuad(QuadraticNumber(Rational(1)))};
    if (rlim.kind() == ExtendedQuad::Kind::minus_infinity)
        return {ExtendedQuad(QuadraticNumber(Rational(1))), ExtendedQuad::plus_infinity()};
    const QuadraticNumber& r = rlim.value();
    QuadraticNumber two{Rational(2)};
    QuadraticNumber s = QuadraticNumber(Rational(4)) + r * r;
    std::optional<QuadraticNumber> root;
    if (s.is_rational())
        root = QuadraticNumber::sqrt_of(s.as_rational());
    else
        root = sqrt_in_field(s);
    if (!root || !(r.is_rational() || root->is_rational() ||
                   root->discriminant() == r.discriminant()))
        throw BadInput("p/q limits are only exact for quadratic inputs; got " + r.str());
    QuadraticNumber p = (two + r + *root) / two;
    QuadraticNumber q = (two - r + *root) / two;
    return {ExtendedQuad(p), ExtendedQuad(q)};
}

namespace {

void require_frequency_pair(const QuadraticNumber& fa, const QuadraticNumber& fb) {
    if (fa.sign() < 0 || fb.sign() < 0) throw BadInput("frequencies must be nonnegative");
    if (!(fa + fb == QuadraticNumber(Rational(1)))) throw BadInput("frequencies must sum to 1");
}

}  // namespace

std::pair<QuadraticNumber, QuadraticNumber> freq_transfer(const BinarySubstitution& s,
                                                          const QuadraticNumber& fa,
                                                          const QuadraticNumber& fb) {
    require_frequency_pair(fa, fb);
    SubstitutionMatrix m = s.matrix();
    QuadraticNumber len_a{Rational(static_cast<std::int64_t>(s.image(Letter::a).size()))};
    QuadraticNumber len_b{Rational(static_cast<std::int64_t>(s.image(Letter::b).size()))};
    QuadraticNumber normalizer = len_a * fa + len_b * fb;
    if (normalizer.is_zero()) throw BadInput("degenerate normalizer: both images weightless");
    QuadraticNumber out_a = (QuadraticNumber(Rational(m.aa)) * fa +
                             QuadraticNumber(Rational(m.ab)) * fb) / normalizer;
    QuadraticNumber out_b = (QuadraticNumber(Rational(m.ba)) * fa +
                             QuadraticNumber(Rational(m.bb)) * fb) / normalizer;
    return {out_a, out_b};
}

std::pair<QuadraticNumber, QuadraticNumber> freq_transfer_inverse(const BinarySubstitution& s,
                                                                  const QuadraticNumber& fa,
                                                                  const QuadraticNumber& fb) {
    require_frequency_pair(fa, fb);
    SubstitutionMatrix m = s.matrix();
    std::int64_t det = m.det();
    if (det == 0) throw SingularMatrix("substitution matrix is singular");
    Rational det_r(det);
    // M^{-1} [fa fb]^T, then normalize so the components sum to 1; the
    // normalizer equals <(M^{-1})^T [1 1]^T, [fa fb]^T>.
    QuadraticNumber va = (QuadraticNumber(Rational(m.bb)) * fa -
                          QuadraticNumber(Rational(m.ab)) * fb) / QuadraticNumber(det_r);
    QuadraticNumber vb = (QuadraticNumber(Rational(-m.ba)) * fa +
                          QuadraticNumber(Rational(m.aa)) * fb) / QuadraticNumber(det_r);
    QuadraticNumber normalizer = va + vb;
    if (normalizer.is_zero()) throw BadInput("degenerate normalizer in inverse transfer");
    return {va / normalizer, vb / normalizer};
}

std::optional<std::pair<std::int64_t, std::int64_t>> classify_golden(const SubstitutionMatrix& m) {
    return classify_tau_k(m, 1);
}

std::optional<std::pair<std::int64_t, std::int64_t>> classify_tau_k(const SubstitutionMatrix& m,
                                                                    std::int64_t k) {
    if (k < 1) throw BadInput("classify_tau_k needs k >= 1");
    if (m.ab != m.ba) return std::nullopt;
    std::int64_t mm = m.ab;
    std::int64_t n = m.bb;
    if (m.aa != k * mm + n) return std::nullopt;
    return std::make_pair(mm, n);
}

TauJMVerdict classify_tau_jm(const SubstitutionMatrix& m, std::int64_t j, std::int64_t mm) {
    if (j < 1 || mm < 1) throw BadInput("classify_tau_jm needs j, m >= 1");
    TauJMVerdict verdict;
    std::int64_t disc = j * j + 4 * mm;
    auto exact_root = [&]() -> std::optional<std::int64_t> {
        auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(disc))));
        for (std::int64_t c = std::max<std::int64_t>(0, r - 2); c <= r + 2; ++c)
            if (c * c == disc) return c;
        return std::nullopt;
    }();
    if (!exact_root) {
        // tau_{j,m} irrational: the matrix must be t I + s C with
        // C = [[j, m], [1, 0]].
        std::int64_t s = m.ba;
        std::int64_t t = m.bb;
        if (m.aa == t + s * j && m.ab == mm * s) {
            verdict.matches = true;
            verdict.st = std::make_pair(s, t);
        }
        return verdict;
    }
    verdict.square_case = true;
    std::int64_t r = *exact_root;
    // Here tau = (j + r)/2 is rational; with M = [[s, t], [u, v]] the
    // eigenvector condition collapses to one linear relation.
    std::int64_t jr = j + r;
    verdict.residual = m.ba * jr * jr + 2 * (m.bb - m.aa) * jr - 4 * m.ab;
    verdict.matches = verdict.residual == 0;
    return verdict;
}

std::optional<std::int64_t> classify_linear_limit(const SubstitutionMatrix& m) {
    if (!is_primitive(m)) throw NonPrimitive("matrix is not primitive");
    if (m.aa + m.ab == m.ba + m.bb) return 0;
    if (m.ab != m.ba) return std::nullopt;
    std::int64_t mm = m.ab;
    if (mm <= 0) return std::nullopt;
    if ((m.aa - m.bb) % mm != 0) return std::nullopt;
    // (a) gives aa - bb = k m with k >= 1, (b) gives bb - aa = k m.
    std::int64_t k = (m.aa - m.bb) / mm;
    if (k != 0) return k;
    return std::nullopt;
}

PisaClosedForm pisa_closed_form(std::int64_t k, std::int64_t l, std::int64_t m) {
    if (k < 1 || m < 1 || l < 0) throw BadInput("pisa parameters need k >= 1, m >= 1, l >= 0");
    PisaClosedForm out;
    out.a = m;
    out.b = k + l + 1 - m;
    out.c = m - l - 1;
    out.r_pa_coeff = m - 1;
    out.r_pb_coeff = Rational(m - 1, m);
    out.r_pb_n_coeff = Rational(k + l + 1 - m, m);
    out.r_pb_const = Rational(m - l - 1, m);
    return out;
}

}  // namespace relpos

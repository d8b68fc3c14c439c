#include "nscartan/ellcurve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nscartan {

namespace {

// Small helper so that the curve formulas read close to their usual shape.
struct Ops {
    const GaloisField& F;
    Gf add(Gf a, Gf b) const { return F.add(a, b); }
    Gf sub(Gf a, Gf b) const { return F.sub(a, b); }
    Gf mul(Gf a, Gf b) const { return F.mul(a, b); }
    Gf mul(int64_t n, Gf a) const { return F.mul(F.from_int(n), a); }
    Gf sq(Gf a) const { return F.mul(a, a); }
    Gf cube(Gf a) const { return F.mul(a, F.mul(a, a)); }
};

}  // namespace

// ---------------------------------------------------------------------------
// WeierstrassCurve
// ---------------------------------------------------------------------------

WeierstrassCurve::WeierstrassCurve(FieldHandle field, Gf a1, Gf a2, Gf a3, Gf a4, Gf a6)
    : field_(std::move(field)), a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6)
{
    if (!field_) throw std::invalid_argument("WeierstrassCurve: null field");
    for (Gf a : {a1, a2, a3, a4, a6})
        if (a.v >= field_->size()) throw std::invalid_argument("WeierstrassCurve: coefficient outside field");
    if (discriminant().v == 0) throw std::invalid_argument("WeierstrassCurve: singular curve " + format());
}

WeierstrassCurve WeierstrassCurve::short_form(FieldHandle field, Gf a, Gf b)
{
    return {std::move(field), Gf{0}, Gf{0}, Gf{0}, a, b};
}

WeierstrassCurve WeierstrassCurve::with_j_invariant(FieldHandle field, Gf j)
{
    const GaloisField& F = *field;
    const Gf zero = F.zero(), one = F.one();
    switch (F.characteristic()) {
    case 2:
        if (j.v == 0) return {field, zero, zero, one, zero, zero};
        return {field, one, zero, zero, zero, F.inv(j)};
    case 3:
        if (j.v == 0) return {field, zero, zero, zero, F.neg(one), zero};
        return {field, zero, one, zero, zero, F.neg(F.inv(j))};
    default: {
        const Gf j1728 = F.from_int(1728);
        if (j.v == 0) return short_form(field, zero, one);
        if (j == j1728) return short_form(field, one, zero);
        const Gf k = F.div(j, F.sub(j1728, j));
        return short_form(field, F.mul(F.from_int(3), k), F.mul(F.from_int(2), k));
    }
    }
}

Gf WeierstrassCurve::b2() const
{
    Ops o{*field_};
    return o.add(o.sq(a1_), o.mul(4, a2_));
}

Gf WeierstrassCurve::b4() const
{
    Ops o{*field_};
    return o.add(o.mul(2, a4_), o.mul(a1_, a3_));
}

Gf WeierstrassCurve::b6() const
{
    Ops o{*field_};
    return o.add(o.sq(a3_), o.mul(4, a6_));
}

Gf WeierstrassCurve::b8() const
{
    Ops o{*field_};
    Gf r = o.mul(o.sq(a1_), a6_);
    r = o.add(r, o.mul(4, o.mul(a2_, a6_)));
    r = o.sub(r, o.mul(a1_, o.mul(a3_, a4_)));
    r = o.add(r, o.mul(a2_, o.sq(a3_)));
    return o.sub(r, o.sq(a4_));
}

Gf WeierstrassCurve::c4() const
{
    Ops o{*field_};
    return o.sub(o.sq(b2()), o.mul(24, b4()));
}

Gf WeierstrassCurve::discriminant() const
{
    Ops o{*field_};
    const Gf B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    Gf d = field_->neg(o.mul(o.sq(B2), B8));
    d = o.sub(d, o.mul(8, o.cube(B4)));
    d = o.sub(d, o.mul(27, o.sq(B6)));
    return o.add(d, o.mul(9, o.mul(B2, o.mul(B4, B6))));
}

Gf WeierstrassCurve::j_invariant() const
{
    Ops o{*field_};
    return field_->div(o.cube(c4()), discriminant());
}

bool WeierstrassCurve::contains(Gf x, Gf y) const
{
    Ops o{*field_};
    const Gf lhs = o.add(o.sq(y), o.add(o.mul(a1_, o.mul(x, y)), o.mul(a3_, y)));
    const Gf rhs = o.add(o.add(o.cube(x), o.mul(a2_, o.sq(x))), o.add(o.mul(a4_, x), a6_));
    return lhs == rhs;
}

WeierstrassCurve WeierstrassCurve::base_change(const FieldEmbedding& embedding) const
{
    if (embedding.source() != field_ &&
        (embedding.source()->size() != field_->size() ||
         embedding.source()->defining_polynomial() != field_->defining_polynomial()))
        throw std::invalid_argument("WeierstrassCurve: embedding source differs from the curve's field");
    return {embedding.target(), embedding(a1_), embedding(a2_), embedding(a3_), embedding(a4_), embedding(a6_)};
}

std::string WeierstrassCurve::format() const
{
    const GaloisField& F = *field_;
    std::ostringstream os;
    os << "y^2";
    if (a1_.v) os << " + (" << F.format(a1_) << ")xy";
    if (a3_.v) os << " + (" << F.format(a3_) << ")y";
    os << " = x^3";
    if (a2_.v) os << " + (" << F.format(a2_) << ")x^2";
    if (a4_.v) os << " + (" << F.format(a4_) << ")x";
    if (a6_.v) os << " + (" << F.format(a6_) << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Group law
// ---------------------------------------------------------------------------

CurvePoint negate(const WeierstrassCurve& E, const CurvePoint& P)
{
    if (P.infinity) return P;
    Ops o{*E.field()};
    const Gf y = o.sub(o.sub(E.field()->neg(P.y), o.mul(E.a1(), P.x)), E.a3());
    return {P.x, y, false};
}

CurvePoint add(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q)
{
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    const GaloisField& F = *E.field();
    Ops o{F};
    Gf lambda, nu;
    if (P.x == Q.x) {
        if (negate(E, P) == Q) return {};
        // doubling
        const Gf num = o.sub(o.add(o.add(o.mul(3, o.sq(P.x)), o.mul(2, o.mul(E.a2(), P.x))), E.a4()),
                             o.mul(E.a1(), P.y));
        const Gf den = o.add(o.add(o.mul(2, P.y), o.mul(E.a1(), P.x)), E.a3());
        lambda = F.div(num, den);
        const Gf nnum = o.sub(o.add(o.add(F.neg(o.cube(P.x)), o.mul(E.a4(), P.x)), o.mul(2, E.a6())),
                              o.mul(E.a3(), P.y));
        nu = F.div(nnum, den);
    } else {
        const Gf dx = o.sub(Q.x, P.x);
        lambda = F.div(o.sub(Q.y, P.y), dx);
        nu = F.div(o.sub(o.mul(P.y, Q.x), o.mul(Q.y, P.x)), dx);
    }
    const Gf x3 = o.sub(o.sub(o.sub(o.add(o.sq(lambda), o.mul(E.a1(), lambda)), E.a2()), P.x), Q.x);
    const Gf y3 = o.sub(o.sub(F.neg(o.mul(o.add(lambda, E.a1()), x3)), nu), E.a3());
    return {x3, y3, false};
}

CurvePoint multiply(const WeierstrassCurve& E, const CurvePoint& P, int64_t n)
{
    CurvePoint base = n < 0 ? negate(E, P) : P;
    uint64_t k = n < 0 ? static_cast<uint64_t>(-(n + 1)) + 1 : static_cast<uint64_t>(n);
    CurvePoint acc{};
    while (k) {
        if (k & 1) acc = add(E, acc, base);
        base = add(E, base, base);
        k >>= 1;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Counting, supersingularity, automorphisms
// ---------------------------------------------------------------------------

uint64_t point_count(const WeierstrassCurve& E)
{
    const GaloisField& F = *E.field();
    Ops o{F};
    const uint64_t Q = F.size();
    uint64_t n = 1;
    for (uint32_t v = 0; v < Q; ++v) {
        const Gf x{v};
        const Gf h = o.add(o.mul(E.a1(), x), E.a3());
        const Gf rhs = o.add(o.add(o.cube(x), o.mul(E.a2(), o.sq(x))), o.add(o.mul(E.a4(), x), E.a6()));
        if (F.characteristic() == 2) {
            if (h.v == 0) {
                n += 1;
            } else if (F.trace(F.div(rhs, o.sq(h))) == 0) {
                n += 2;
            }
        } else {
            const Gf disc = o.add(o.sq(h), o.mul(4, rhs));
            if (disc.v == 0)
                n += 1;
            else if (F.is_square(disc))
                n += 2;
        }
    }
    const int64_t t = static_cast<int64_t>(Q) + 1 - static_cast<int64_t>(n);
    if (t * t > 4 * static_cast<int64_t>(Q))
        throw std::logic_error("point_count: Hasse bound violated for " + E.format());
    return n;
}

uint64_t point_count(const WeierstrassCurve& E, const FieldHandle& extension)
{
    if (extension == E.field()) return point_count(E);
    return point_count(E.base_change(FieldEmbedding(E.field(), extension)));
}

int64_t frobenius_trace(const WeierstrassCurve& E)
{
    return static_cast<int64_t>(E.field()->size()) + 1 - static_cast<int64_t>(point_count(E));
}

bool is_supersingular(const WeierstrassCurve& E)
{
    return mod(frobenius_trace(E), E.characteristic()) == 0;
}

uint64_t automorphism_order(const WeierstrassCurve& E)
{
    const GaloisField& F = *E.field();
    Ops o{F};
    const uint32_t Q = F.size();
    const Gf a1 = E.a1(), a2 = E.a2(), a3 = E.a3(), a4 = E.a4(), a6 = E.a6();
    const Gf two = F.from_int(2), three = F.from_int(3);

    // Candidates for a variable: the unique solution of c*v = rhs when c != 0,
    // otherwise every field element (the equation is then re-checked below).
    auto candidates = [&](Gf c, Gf rhs) {
        std::vector<Gf> out;
        if (c.v != 0) {
            out.push_back(F.div(rhs, c));
        } else {
            out.reserve(Q);
            for (uint32_t v = 0; v < Q; ++v) out.push_back(Gf{v});
        }
        return out;
    };

    uint64_t count = 0;
    for (uint32_t uv = 1; uv < Q; ++uv) {
        const Gf u{uv};
        const Gf u2 = o.sq(u), u3 = o.mul(u2, u), u4 = o.sq(u2), u6 = o.sq(u3);
        for (Gf s : candidates(two, o.sub(o.mul(u, a1), a1))) {
            if (o.mul(u, a1) != o.add(a1, o.mul(2, s))) continue;
            // u^2 a2 = a2 - s a1 + 3r - s^2
            const Gf rhs_r = o.add(o.sub(o.sub(o.mul(u2, a2), a2), F.neg(o.mul(s, a1))), o.sq(s));
            for (Gf r : candidates(three, rhs_r)) {
                if (o.mul(u2, a2) != o.sub(o.add(o.sub(a2, o.mul(s, a1)), o.mul(3, r)), o.sq(s))) continue;
                for (Gf t : candidates(two, o.sub(o.sub(o.mul(u3, a3), a3), o.mul(r, a1)))) {
                    if (o.mul(u3, a3) != o.add(o.add(a3, o.mul(r, a1)), o.mul(2, t))) continue;
                    Gf e4 = o.sub(a4, o.mul(s, a3));
                    e4 = o.add(e4, o.mul(2, o.mul(r, a2)));
                    e4 = o.sub(e4, o.mul(o.add(t, o.mul(r, s)), a1));
                    e4 = o.add(e4, o.mul(3, o.sq(r)));
                    e4 = o.sub(e4, o.mul(2, o.mul(s, t)));
                    if (o.mul(u4, a4) != e4) continue;
                    Gf e6 = o.add(a6, o.mul(r, a4));
                    e6 = o.add(e6, o.mul(o.sq(r), a2));
                    e6 = o.add(e6, o.cube(r));
                    e6 = o.sub(e6, o.mul(t, a3));
                    e6 = o.sub(e6, o.sq(t));
                    e6 = o.sub(e6, o.mul(r, o.mul(t, a1)));
                    if (o.mul(u6, a6) != e6) continue;
                    ++count;
                }
            }
        }
    }
    if (count == 0 || count % 2 != 0)
        throw std::logic_error("automorphism_order: odd group order for " + E.format());
    return count;
}

std::vector<WeierstrassCurve> enumerate_curves(const FieldHandle& field)
{
    const uint32_t Q = field->size();
    const Gf zero{0};
    std::vector<WeierstrassCurve> out;
    auto push = [&](Gf a1, Gf a2, Gf a3, Gf a4, Gf a6) {
        try {
            out.emplace_back(field, a1, a2, a3, a4, a6);
        } catch (const std::invalid_argument&) {
            // singular
        }
    };
    switch (field->characteristic()) {
    case 2:
        for (uint32_t a1 = 0; a1 < Q; ++a1)
            for (uint32_t a2 = 0; a2 < Q; ++a2)
                for (uint32_t a3 = 0; a3 < Q; ++a3)
                    for (uint32_t a4 = 0; a4 < Q; ++a4)
                        for (uint32_t a6 = 0; a6 < Q; ++a6) push(Gf{a1}, Gf{a2}, Gf{a3}, Gf{a4}, Gf{a6});
        break;
    case 3:
        for (uint32_t a2 = 0; a2 < Q; ++a2)
            for (uint32_t a4 = 0; a4 < Q; ++a4)
                for (uint32_t a6 = 0; a6 < Q; ++a6) push(zero, Gf{a2}, zero, Gf{a4}, Gf{a6});
        break;
    default:
        for (uint32_t a = 0; a < Q; ++a)
            for (uint32_t b = 0; b < Q; ++b) push(zero, zero, zero, Gf{a}, Gf{b});
    }
    return out;
}

SupersingularInventory supersingular_inventory(uint32_t q, uint64_t bound)
{
    if (!is_prime(q)) throw std::invalid_argument("supersingular_inventory: q must be prime");
    SupersingularInventory inv{q, build_ext_field(q, 2, bound), {}, Rational(0)};
    const GaloisField& F = *inv.field;
    for (uint32_t v = 0; v < F.size(); ++v) {
        const WeierstrassCurve E = WeierstrassCurve::with_j_invariant(inv.field, Gf{v});
        if (!is_supersingular(E)) continue;
        // Aut over F_{q^r}, r = 2, 4, 8, ... until two consecutive values agree.
        unsigned degree = 2;
        uint64_t order = automorphism_order(E);
        unsigned stable_at = degree;
        for (;;) {
            const unsigned next = degree * 2;
            FieldHandle big = build_ext_field(q, next, bound);
            const uint64_t next_order = automorphism_order(E.base_change(FieldEmbedding(inv.field, big)));
            if (next_order == order) break;
            order = next_order;
            degree = next;
            stable_at = degree;
        }
        inv.entries.push_back({Gf{v}, order, stable_at});
        inv.mass += Rational(1, static_cast<int64_t>(order));
    }
    if (inv.mass != Rational(static_cast<int64_t>(q) - 1, 24))
        throw std::logic_error("supersingular_inventory: mass formula violated for q = " + std::to_string(q));
    return inv;
}

// ---------------------------------------------------------------------------
// Division polynomials
// ---------------------------------------------------------------------------

DivisionPolynomials::DivisionPolynomials(const WeierstrassCurve& E) : curve_(E), beta_(E.field())
{
    const GaloisField& F = *E.field();
    Ops o{F};
    beta_ = Polynomial(E.field(), {E.b6(), o.mul(2, E.b4()), E.b2(), F.from_int(4)});
}

DivisionPolynomials::DivisionPolynomials(const WeierstrassCurve& E, Polynomial modulus) : DivisionPolynomials(E)
{
    if (modulus.degree() < 1) throw std::invalid_argument("DivisionPolynomials: modulus must be non-constant");
    modulus_ = std::move(modulus);
    beta_ = reduce(beta_);
}

Polynomial DivisionPolynomials::reduce(Polynomial poly) const
{
    if (!modulus_) return poly;
    return poly % *modulus_;
}

const Polynomial& DivisionPolynomials::f(unsigned n)
{
    if (cache_.size() <= n) cache_.resize(n + 1);
    if (cache_[n]) return *cache_[n];

    const FieldHandle& field = curve_.field();
    const GaloisField& F = *field;
    Ops o{F};
    const Gf b2 = curve_.b2(), b4 = curve_.b4(), b6 = curve_.b6(), b8 = curve_.b8();
    Polynomial value(field);
    if (n == 0) {
        value = Polynomial(field);
    } else if (n == 1 || n == 2) {
        value = Polynomial::constant(field, F.one());
    } else if (n == 3) {
        value = Polynomial(field, {b8, o.mul(3, b6), o.mul(3, b4), b2, F.from_int(3)});
    } else if (n == 4) {
        value = Polynomial(field, {o.sub(o.mul(b4, b8), o.sq(b6)), o.sub(o.mul(b2, b8), o.mul(b4, b6)), o.mul(10, b8),
                                   o.mul(10, b6), o.mul(5, b4), b2, F.from_int(2)});
    } else if (n % 2 == 1) {
        const unsigned m = (n - 1) / 2;
        // Copies: later calls to f() may reallocate cache_.
        const Polynomial fm2 = f(m + 2), fm1 = f(m + 1), fm = f(m), fmm1 = f(m - 1);
        const Polynomial beta2 = reduce(beta_ * beta_);
        const Polynomial fm_cubed = reduce(reduce(fm * fm) * fm);
        const Polynomial fm1_cubed = reduce(reduce(fm1 * fm1) * fm1);
        if (m % 2 == 0)
            value = reduce(reduce(fm2 * fm_cubed) * beta2) - reduce(fmm1 * fm1_cubed);
        else
            value = reduce(fm2 * fm_cubed) - reduce(reduce(fmm1 * fm1_cubed) * beta2);
    } else {
        const unsigned m = n / 2;
        const Polynomial fm2 = f(m + 2), fm1 = f(m + 1), fm = f(m), fmm1 = f(m - 1), fmm2 = f(m - 2);
        const Polynomial inner = reduce(fm2 * reduce(fmm1 * fmm1)) - reduce(fmm2 * reduce(fm1 * fm1));
        value = reduce(fm * inner);
    }
    value = reduce(std::move(value));
    if (cache_.size() <= n) cache_.resize(n + 1);
    cache_[n] = std::move(value);
    return *cache_[n];
}

std::pair<Polynomial, Polynomial> DivisionPolynomials::multiplication_x(unsigned n)
{
    if (n == 0) throw std::invalid_argument("multiplication_x: n must be positive");
    const FieldHandle& field = curve_.field();
    const Polynomial x = Polynomial::x(field);
    const Polynomial fn = f(n), prev = f(n - 1), next = f(n + 1);
    const Polynomial fn2 = reduce(fn * fn);
    if (n % 2 == 1) {
        Polynomial num = reduce(x * fn2) - reduce(reduce(prev * next) * beta_);
        return {reduce(std::move(num)), fn2};
    }
    const Polynomial den = reduce(fn2 * beta_);
    Polynomial num = reduce(x * den) - reduce(prev * next);
    return {reduce(std::move(num)), den};
}

Polynomial division_polynomial(const WeierstrassCurve& E, unsigned m)
{
    if (m % 2 == 0) throw std::invalid_argument("division_polynomial: m must be odd");
    if (m % E.characteristic() == 0)
        throw std::invalid_argument("division_polynomial: m divisible by the characteristic");
    DivisionPolynomials dp(E);
    Polynomial psi = dp.f(m);
    if (psi.degree() != static_cast<int>((m * m - 1) / 2))
        throw std::logic_error("division_polynomial: unexpected degree");
    return psi;
}

bool frobenius_is_scalar(const WeierstrassCurve& E, uint32_t p, uint32_t lambda)
{
    lambda %= p;
    if (lambda == 0) throw std::invalid_argument("frobenius_is_scalar: lambda must be a unit mod p");
    // x-coordinates only see lambda up to sign.
    const uint32_t l = std::min(lambda, p - lambda);
    const Polynomial psi = division_polynomial(E, p);
    DivisionPolynomials dp(E, psi);
    const auto [num, den] = dp.multiplication_x(l);
    const Polynomial xq = pow_mod(Polynomial::x(E.field()), E.field()->size(), psi);
    return ((xq * den) % psi - num % psi).is_zero();
}

FrobeniusClass frobenius_matrix_class(const WeierstrassCurve& E, uint32_t p)
{
    if (!is_prime(p) || p == 2) throw std::invalid_argument("frobenius_matrix_class: p must be an odd prime");
    if (p == E.characteristic()) throw std::invalid_argument("frobenius_matrix_class: p equals the characteristic");
    const int64_t t = frobenius_trace(E);
    const int64_t Q = E.field()->size();
    const int64_t disc = mod(t * t - 4 * Q, p);
    bool scalar = false;
    if (disc == 0) {
        const int64_t lambda = mod(t * inverse_mod(2, p), p);
        scalar = frobenius_is_scalar(E, p, static_cast<uint32_t>(lambda));
    }
    return classify_charpoly(p, t, Q, scalar);
}

}  // namespace nscartan

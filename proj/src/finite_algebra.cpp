#include "nscartan/finite_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace nscartan {

// ---------------------------------------------------------------------------
// Integer helpers
// ---------------------------------------------------------------------------

bool is_prime(uint64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

int64_t mod(int64_t a, int64_t m)
{
    if (m <= 0) throw std::invalid_argument("mod: modulus must be positive");
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int64_t checked_add(int64_t a, int64_t b)
{
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b)
{
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

int64_t inverse_mod(int64_t a, int64_t m)
{
    int64_t old_r = mod(a, m), r = m;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    }
    if (old_r != 1) throw std::domain_error("inverse_mod: element is not invertible");
    return mod(old_s, m);
}

int64_t pow_mod(int64_t base, uint64_t exponent, int64_t m)
{
    __int128 result = 1 % m;
    __int128 b = mod(base, m);
    while (exponent > 0) {
        if (exponent & 1) result = (result * b) % m;
        b = (b * b) % m;
        exponent >>= 1;
    }
    return static_cast<int64_t>(result);
}

std::vector<uint64_t> prime_factors(uint64_t n)
{
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

int legendre(int64_t m, int64_t p)
{
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<uint64_t>(p)))
        throw std::invalid_argument("legendre: modulus must be an odd prime");
    int64_t r = mod(m, p);
    if (r == 0) return 0;
    return pow_mod(r, static_cast<uint64_t>((p - 1) / 2), p) == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// PrimeFieldElement
// ---------------------------------------------------------------------------

PrimeFieldElement::PrimeFieldElement(int64_t value, uint32_t modulus) : modulus_(modulus)
{
    if (!is_prime(modulus)) throw std::invalid_argument("PrimeFieldElement: modulus must be prime");
    value_ = static_cast<uint32_t>(mod(value, modulus));
}

void PrimeFieldElement::require_same_field(const PrimeFieldElement& rhs) const
{
    if (modulus_ != rhs.modulus_) throw std::invalid_argument("PrimeFieldElement: mismatched moduli");
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& rhs) const
{
    require_same_field(rhs);
    return {int64_t{value_} + rhs.value_, modulus_};
}

PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& rhs) const
{
    require_same_field(rhs);
    return {int64_t{value_} - rhs.value_, modulus_};
}

PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& rhs) const
{
    require_same_field(rhs);
    return {static_cast<int64_t>(uint64_t{value_} * rhs.value_ % modulus_), modulus_};
}

PrimeFieldElement PrimeFieldElement::operator/(const PrimeFieldElement& rhs) const
{
    return *this * rhs.inverse();
}

PrimeFieldElement PrimeFieldElement::operator-() const
{
    return {-int64_t{value_}, modulus_};
}

PrimeFieldElement PrimeFieldElement::inverse() const
{
    if (value_ == 0) throw std::domain_error("PrimeFieldElement: zero has no inverse");
    return {inverse_mod(value_, modulus_), modulus_};
}

PrimeFieldElement PrimeFieldElement::pow(uint64_t exponent) const
{
    return {pow_mod(value_, exponent, modulus_), modulus_};
}

PrimeFieldElement find_nonsquare(uint32_t p)
{
    for (uint32_t a = 2; a < p; ++a)
        if (legendre(a, p) == -1) return {a, p};
    throw std::invalid_argument("find_nonsquare: modulus must be an odd prime");
}

std::vector<uint32_t> nonsquares(uint32_t p)
{
    std::vector<uint32_t> out;
    for (uint32_t a = 2; a < p; ++a)
        if (legendre(a, p) == -1) out.push_back(a);
    return out;
}

// ---------------------------------------------------------------------------
// GaloisField
// ---------------------------------------------------------------------------

namespace {

std::vector<uint32_t> digits(uint32_t v, uint32_t base, unsigned count)
{
    std::vector<uint32_t> out(count, 0);
    for (unsigned i = 0; i < count && v != 0; ++i) {
        out[i] = v % base;
        v /= base;
    }
    return out;
}

}  // namespace

FieldHandle build_ext_field(uint32_t characteristic, unsigned degree, uint64_t bound)
{
    if (!is_prime(characteristic)) throw std::invalid_argument("build_ext_field: characteristic must be prime");
    if (degree == 0) throw std::invalid_argument("build_ext_field: degree must be positive");
    uint64_t size = 1;
    for (unsigned i = 0; i < degree; ++i) {
        size *= characteristic;
        if (size > bound)
            throw std::invalid_argument("build_ext_field: field size " + std::to_string(characteristic) + "^" +
                                        std::to_string(degree) + " exceeds the enumeration bound");
    }
    if (degree == 1) return std::make_shared<const GaloisField>(characteristic, 1, std::vector<uint32_t>{0, 1});

    auto prime_field = build_ext_field(characteristic, 1, bound);
    uint64_t lower_count = size;  // number of choices for c_0 .. c_{r-1}
    for (uint64_t code = 0; code < lower_count; ++code) {
        std::vector<uint32_t> coeffs = digits(static_cast<uint32_t>(code), characteristic, degree);
        coeffs.push_back(1);
        if (coeffs[0] == 0) continue;  // divisible by x
        std::vector<Gf> poly;
        for (uint32_t c : coeffs) poly.push_back(Gf{c});
        if (is_irreducible(Polynomial(prime_field, poly)))
            return std::make_shared<const GaloisField>(characteristic, degree, std::move(coeffs));
    }
    throw std::logic_error("build_ext_field: no irreducible polynomial found");
}

GaloisField::GaloisField(uint32_t characteristic, unsigned degree, std::vector<uint32_t> modulus)
    : char_(characteristic), degree_(degree), modulus_(std::move(modulus))
{
    if (!is_prime(char_)) throw std::invalid_argument("GaloisField: characteristic must be prime");
    if (modulus_.size() != degree_ + 1 || modulus_.back() != 1)
        throw std::invalid_argument("GaloisField: defining polynomial must be monic of the stated degree");
    uint64_t size = 1;
    for (unsigned i = 0; i < degree_; ++i) size *= char_;
    if (size > (uint64_t{1} << 31)) throw std::invalid_argument("GaloisField: field too large");
    size_ = static_cast<uint32_t>(size);
    if (degree_ > 1) {
        auto prime_field = std::make_shared<const GaloisField>(char_, 1, std::vector<uint32_t>{0, 1});
        std::vector<Gf> poly;
        for (uint32_t c : modulus_) {
            if (c >= char_) throw std::invalid_argument("GaloisField: defining polynomial coefficient out of range");
            poly.push_back(Gf{c});
        }
        if (!is_irreducible(Polynomial(prime_field, poly)))
            throw std::invalid_argument("GaloisField: defining polynomial is reducible");
    }
    build_tables();
}

uint32_t GaloisField::mul_slow(uint32_t a, uint32_t b) const
{
    if (degree_ == 1) return static_cast<uint32_t>(uint64_t{a} * b % char_);
    auto x = digits(a, char_, degree_);
    auto y = digits(b, char_, degree_);
    std::vector<uint64_t> prod(2 * degree_ - 1, 0);
    for (unsigned i = 0; i < degree_; ++i)
        for (unsigned j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + uint64_t{x[i]} * y[j]) % char_;
    for (size_t k = prod.size(); k-- > degree_;) {
        uint64_t c = prod[k];
        if (c == 0) continue;
        for (unsigned i = 0; i < degree_; ++i) {
            uint64_t sub = c * modulus_[i] % char_;
            prod[k - degree_ + i] = (prod[k - degree_ + i] + char_ - sub) % char_;
        }
        prod[k] = 0;
    }
    uint32_t out = 0, place = 1;
    for (unsigned i = 0; i < degree_; ++i) {
        out += static_cast<uint32_t>(prod[i]) * place;
        place *= char_;
    }
    return out;
}

uint32_t GaloisField::pow_slow(uint32_t a, uint64_t e) const
{
    uint32_t result = 1;
    while (e > 0) {
        if (e & 1) result = mul_slow(result, a);
        a = mul_slow(a, a);
        e >>= 1;
    }
    return result;
}

void GaloisField::build_tables()
{
    const uint32_t order = size_ - 1;
    const auto factors = prime_factors(order);
    uint32_t g = 0;
    for (uint32_t cand = 1; cand < size_; ++cand) {
        bool primitive = true;
        for (uint64_t f : factors)
            if (pow_slow(cand, order / f) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            g = cand;
            break;
        }
    }
    if (g == 0) throw std::logic_error("GaloisField: no primitive element (reducible modulus?)");
    primitive_ = Gf{g};
    exp_.assign(2 * static_cast<size_t>(order), 0);
    log_.assign(size_, 0);
    uint32_t cur = 1;
    for (uint32_t i = 0; i < order; ++i) {
        if (i > 0 && cur == 1) throw std::logic_error("GaloisField: generator has small order");
        exp_[i] = cur;
        exp_[i + order] = cur;
        log_[cur] = i;
        cur = mul_slow(cur, g);
    }
}

Gf GaloisField::generator() const
{
    return degree_ == 1 ? Gf{0} : Gf{char_};
}

Gf GaloisField::from_int(int64_t n) const
{
    return Gf{static_cast<uint32_t>(mod(n, char_))};
}

Gf GaloisField::from_coefficients(const std::vector<uint32_t>& coeffs) const
{
    if (coeffs.size() > degree_) throw std::invalid_argument("GaloisField: too many coefficients");
    uint32_t out = 0, place = 1;
    for (uint32_t c : coeffs) {
        if (c >= char_) throw std::invalid_argument("GaloisField: coefficient out of range");
        out += c * place;
        place *= char_;
    }
    return Gf{out};
}

std::vector<uint32_t> GaloisField::coefficients(Gf a) const
{
    return digits(a.v, char_, degree_);
}

Gf GaloisField::add(Gf a, Gf b) const
{
    if (char_ == 2) return Gf{a.v ^ b.v};
    uint32_t x = a.v, y = b.v, out = 0, place = 1;
    while (x != 0 || y != 0) {
        uint32_t d = x % char_ + y % char_;
        if (d >= char_) d -= char_;
        out += d * place;
        x /= char_;
        y /= char_;
        place *= char_;
    }
    return Gf{out};
}

Gf GaloisField::neg(Gf a) const
{
    if (char_ == 2) return a;
    uint32_t x = a.v, out = 0, place = 1;
    while (x != 0) {
        uint32_t d = x % char_;
        out += (d == 0 ? 0 : char_ - d) * place;
        x /= char_;
        place *= char_;
    }
    return Gf{out};
}

Gf GaloisField::sub(Gf a, Gf b) const
{
    return add(a, neg(b));
}

Gf GaloisField::mul(Gf a, Gf b) const
{
    if (a.v == 0 || b.v == 0) return Gf{0};
    return Gf{exp_[log_[a.v] + log_[b.v]]};
}

Gf GaloisField::inv(Gf a) const
{
    if (a.v == 0) throw std::domain_error("GaloisField: zero has no inverse");
    const uint32_t order = size_ - 1;
    return Gf{exp_[(order - log_[a.v]) % order]};
}

Gf GaloisField::div(Gf a, Gf b) const
{
    return mul(a, inv(b));
}

Gf GaloisField::pow(Gf a, uint64_t exponent) const
{
    if (exponent == 0) return one();
    if (a.v == 0) return zero();
    const uint64_t order = size_ - 1;
    const uint64_t e = (static_cast<unsigned __int128>(log_[a.v]) * (exponent % order)) % order;
    return Gf{exp_[e]};
}

Gf GaloisField::frobenius(Gf a, unsigned k) const
{
    uint64_t e = 1;
    for (unsigned i = 0; i < k % degree_; ++i) e *= char_;
    return pow(a, e);
}

uint32_t GaloisField::norm(Gf a) const
{
    Gf n = pow(a, (uint64_t{size_} - 1) / (char_ - 1));
    if (!in_prime_field(n)) throw std::logic_error("GaloisField: norm left the prime field");
    return n.v;
}

uint32_t GaloisField::trace(Gf a) const
{
    Gf t = zero();
    Gf cur = a;
    for (unsigned i = 0; i < degree_; ++i) {
        t = add(t, cur);
        cur = frobenius(cur);
    }
    if (!in_prime_field(t)) throw std::logic_error("GaloisField: trace left the prime field");
    return t.v;
}

bool GaloisField::is_square(Gf a) const
{
    if (a.v == 0 || char_ == 2) return true;
    return log_[a.v] % 2 == 0;
}

std::string GaloisField::format(Gf a) const
{
    if (degree_ == 1) return std::to_string(a.v);
    auto c = coefficients(a);
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i >= 1) os << 'z';
        if (i >= 2) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

// ---------------------------------------------------------------------------
// FieldEmbedding
// ---------------------------------------------------------------------------

FieldEmbedding::FieldEmbedding(FieldHandle from, FieldHandle to) : from_(std::move(from)), to_(std::move(to))
{
    if (from_->characteristic() != to_->characteristic() || to_->degree() % from_->degree() != 0)
        throw std::invalid_argument("FieldEmbedding: target is not an extension of the source");
    const auto& modulus = from_->defining_polynomial();
    Gf root{0};
    bool found = false;
    for (uint32_t v = 0; v < to_->size() && !found; ++v) {
        Gf acc = to_->zero();
        for (size_t i = modulus.size(); i-- > 0;) acc = to_->add(to_->mul(acc, Gf{v}), to_->from_int(modulus[i]));
        if (acc.v == 0) {
            root = Gf{v};
            found = true;
        }
    }
    if (!found) throw std::logic_error("FieldEmbedding: defining polynomial has no root in target");
    table_.resize(from_->size());
    for (uint32_t v = 0; v < from_->size(); ++v) {
        auto coeffs = from_->coefficients(Gf{v});
        Gf acc = to_->zero();
        for (size_t i = coeffs.size(); i-- > 0;) acc = to_->add(to_->mul(acc, root), to_->from_int(coeffs[i]));
        table_[v] = acc;
    }
}

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

Polynomial::Polynomial(FieldHandle field) : field_(std::move(field))
{
    if (!field_) throw std::invalid_argument("Polynomial: null field");
}

Polynomial::Polynomial(FieldHandle field, std::vector<Gf> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    if (!field_) throw std::invalid_argument("Polynomial: null field");
    for (Gf c : coeffs_)
        if (c.v >= field_->size()) throw std::invalid_argument("Polynomial: coefficient outside field");
    trim();
}

Polynomial Polynomial::constant(FieldHandle field, Gf c)
{
    return Polynomial(std::move(field), {c});
}

Polynomial Polynomial::monomial(FieldHandle field, Gf c, unsigned degree)
{
    std::vector<Gf> coeffs(degree + 1, Gf{0});
    coeffs[degree] = c;
    return Polynomial(std::move(field), std::move(coeffs));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().v == 0) coeffs_.pop_back();
}

void Polynomial::require_same_field(const Polynomial& rhs) const
{
    if (field_ != rhs.field_ && (field_->characteristic() != rhs.field_->characteristic() ||
                                 field_->defining_polynomial() != rhs.field_->defining_polynomial()))
        throw std::invalid_argument("Polynomial: operands over different fields");
}

Gf Polynomial::leading() const
{
    if (coeffs_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const
{
    require_same_field(rhs);
    std::vector<Gf> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = field_->add(coeff(i), rhs.coeff(i));
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const
{
    require_same_field(rhs);
    std::vector<Gf> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = field_->sub(coeff(i), rhs.coeff(i));
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const
{
    std::vector<Gf> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = field_->neg(coeffs_[i]);
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const
{
    require_same_field(rhs);
    if (is_zero() || rhs.is_zero()) return Polynomial(field_);
    const GaloisField& F = *field_;
    std::vector<Gf> out(coeffs_.size() + rhs.coeffs_.size() - 1, Gf{0});
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].v == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(coeffs_[i], rhs.coeffs_[j]));
    }
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::scaled(Gf c) const
{
    std::vector<Gf> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
    return Polynomial(field_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const
{
    require_same_field(divisor);
    if (divisor.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
    const GaloisField& F = *field_;
    std::vector<Gf> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd) return {Polynomial(field_), *this};
    std::vector<Gf> quot(static_cast<size_t>(degree() - dd + 1), Gf{0});
    const Gf lead_inv = F.inv(divisor.leading());
    for (int k = degree(); k >= dd; --k) {
        Gf c = rem[static_cast<size_t>(k)];
        if (c.v == 0) continue;
        Gf factor = F.mul(c, lead_inv);
        quot[static_cast<size_t>(k - dd)] = factor;
        for (int i = 0; i <= dd; ++i) {
            size_t idx = static_cast<size_t>(k - dd + i);
            rem[idx] = F.sub(rem[idx], F.mul(factor, divisor.coeffs_[static_cast<size_t>(i)]));
        }
    }
    rem.resize(static_cast<size_t>(dd));
    return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) return *this;
    return scaled(field_->inv(leading()));
}

Gf Polynomial::eval(Gf x) const
{
    Gf acc{0};
    for (size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
    return acc;
}

bool Polynomial::operator==(const Polynomial& rhs) const
{
    return field_->characteristic() == rhs.field_->characteristic() &&
           field_->defining_polynomial() == rhs.field_->defining_polynomial() && coeffs_ == rhs.coeffs_;
}

std::string Polynomial::format() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].v == 0) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = coeffs_[i].v == 1;
        if (!unit || i == 0) {
            std::string c = field_->format(coeffs_[i]);
            if (field_->degree() > 1 && i > 0) c = "(" + c + ")";
            os << c;
            if (i > 0) os << '*';
        }
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial pow_mod(const Polynomial& base, uint64_t exponent, const Polynomial& modulus)
{
    Polynomial result = Polynomial::constant(base.field(), Gf{1}) % modulus;
    Polynomial b = base % modulus;
    while (exponent > 0) {
        if (exponent & 1) result = (result * b) % modulus;
        exponent >>= 1;
        if (exponent > 0) b = (b * b) % modulus;
    }
    return result;
}

bool is_irreducible(const Polynomial& f)
{
    const int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const auto& field = f.field();
    const Polynomial x = Polynomial::x(field);
    Polynomial h = x % f;
    for (int i = 1; i <= n / 2; ++i) {
        h = pow_mod(h, field->size(), f);
        if (gcd(f, h - x).degree() != 0) return false;
    }
    return true;
}

}  // namespace nscartan

#include "nscartan/gl2_cartan.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "nscartan/finite_algebra.hpp"

namespace nscartan {

// ---------------------------------------------------------------------------
// Mat2
// ---------------------------------------------------------------------------

Mat2::Mat2(uint32_t p, int64_t a, int64_t b, int64_t c, int64_t d)
    : p_(p),
      a_(static_cast<uint32_t>(mod(a, p))),
      b_(static_cast<uint32_t>(mod(b, p))),
      c_(static_cast<uint32_t>(mod(c, p))),
      d_(static_cast<uint32_t>(mod(d, p)))
{
    if (p < 2) throw std::invalid_argument("Mat2: modulus must be at least 2");
}

Mat2 Mat2::from_encoding(uint32_t p, uint64_t code)
{
    const uint64_t a = code % p;
    code /= p;
    const uint64_t b = code % p;
    code /= p;
    const uint64_t c = code % p;
    code /= p;
    return {p, static_cast<int64_t>(a), static_cast<int64_t>(b), static_cast<int64_t>(c), static_cast<int64_t>(code % p)};
}

uint32_t Mat2::det() const noexcept
{
    const uint64_t ad = uint64_t{a_} * d_ % p_;
    const uint64_t bc = uint64_t{b_} * c_ % p_;
    return static_cast<uint32_t>((ad + p_ - bc) % p_);
}

uint32_t Mat2::trace() const noexcept
{
    return static_cast<uint32_t>((uint64_t{a_} + d_) % p_);
}

uint64_t Mat2::encoding() const noexcept
{
    const uint64_t p = p_;
    return a_ + p * (b_ + p * (c_ + p * d_));
}

Mat2 Mat2::operator*(const Mat2& rhs) const
{
    if (p_ != rhs.p_) throw std::invalid_argument("Mat2: mismatched moduli");
    const uint64_t p = p_;
    return {p_, static_cast<int64_t>((uint64_t{a_} * rhs.a_ + uint64_t{b_} * rhs.c_) % p),
            static_cast<int64_t>((uint64_t{a_} * rhs.b_ + uint64_t{b_} * rhs.d_) % p),
            static_cast<int64_t>((uint64_t{c_} * rhs.a_ + uint64_t{d_} * rhs.c_) % p),
            static_cast<int64_t>((uint64_t{c_} * rhs.b_ + uint64_t{d_} * rhs.d_) % p)};
}

Mat2 Mat2::operator+(const Mat2& rhs) const
{
    if (p_ != rhs.p_) throw std::invalid_argument("Mat2: mismatched moduli");
    return {p_, int64_t{a_} + rhs.a_, int64_t{b_} + rhs.b_, int64_t{c_} + rhs.c_, int64_t{d_} + rhs.d_};
}

Mat2 Mat2::scaled(int64_t lambda) const
{
    const int64_t l = mod(lambda, p_);
    return {p_, l * a_, l * b_, l * c_, l * d_};
}

Mat2 Mat2::inverse() const
{
    const uint32_t D = det();
    if (D == 0) throw std::domain_error("Mat2: singular matrix has no inverse");
    const int64_t inv = inverse_mod(D, p_);
    return {p_, inv * d_, -inv * b_, -inv * c_, inv * a_};
}

Mat2 Mat2::pow(uint64_t e) const
{
    Mat2 result = identity(p_);
    Mat2 base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

uint64_t Mat2::order() const
{
    if (!is_invertible()) throw std::domain_error("Mat2: singular matrix has no order");
    const Mat2 id = identity(p_);
    Mat2 cur = *this;
    uint64_t n = 1;
    while (!(cur == id)) {
        cur = cur * *this;
        ++n;
    }
    return n;
}

std::string Mat2::format() const
{
    std::ostringstream os;
    os << "[[" << a_ << "," << b_ << "],[" << c_ << "," << d_ << "]]";
    return os.str();
}

Mat2 conjugate(const Mat2& g, const Mat2& x)
{
    return g * x * g.inverse();
}

// ---------------------------------------------------------------------------
// FrobeniusClass
// ---------------------------------------------------------------------------

uint32_t FrobeniusClass::trace() const
{
    return std::visit(
        [this](const auto& k) -> uint32_t {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, NonSplitClass>)
                return k.trace;
            else if constexpr (std::is_same_v<K, SplitDistinctClass>)
                return static_cast<uint32_t>((uint64_t{k.lambda1} + k.lambda2) % p);
            else
                return static_cast<uint32_t>(2 * uint64_t{k.lambda} % p);
        },
        kind);
}

uint32_t FrobeniusClass::det() const
{
    return std::visit(
        [this](const auto& k) -> uint32_t {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, NonSplitClass>)
                return k.det;
            else if constexpr (std::is_same_v<K, SplitDistinctClass>)
                return static_cast<uint32_t>(uint64_t{k.lambda1} * k.lambda2 % p);
            else
                return static_cast<uint32_t>(uint64_t{k.lambda} * k.lambda % p);
        },
        kind);
}

std::string FrobeniusClass::tag() const
{
    static constexpr const char* names[] = {"Scalar", "NonSplit", "SplitDistinct", "Jordan"};
    return names[kind.index()];
}

std::string FrobeniusClass::format() const
{
    std::ostringstream os;
    os << tag() << '(';
    std::visit(
        [&os](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, NonSplitClass>)
                os << "trace=" << k.trace << ",det=" << k.det;
            else if constexpr (std::is_same_v<K, SplitDistinctClass>)
                os << k.lambda1 << ',' << k.lambda2;
            else
                os << k.lambda;
        },
        kind);
    os << ')';
    return os.str();
}

Mat2 FrobeniusClass::representative() const
{
    return std::visit(
        [this](const auto& k) -> Mat2 {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ScalarClass>)
                return Mat2::scalar(p, k.lambda);
            else if constexpr (std::is_same_v<K, NonSplitClass>)
                return Mat2(p, 0, -int64_t{k.det}, 1, k.trace);
            else if constexpr (std::is_same_v<K, SplitDistinctClass>)
                return Mat2(p, k.lambda1, 0, 0, k.lambda2);
            else
                return Mat2(p, k.lambda, 1, 0, k.lambda);
        },
        kind);
}

FrobeniusClass classify_charpoly(uint32_t p, int64_t trace, int64_t det, bool scalar_when_repeated)
{
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("classify: modulus must be an odd prime");
    const int64_t t = mod(trace, p);
    const int64_t n = mod(det, p);
    if (n == 0) throw std::invalid_argument("classify: singular characteristic polynomial");
    const int64_t disc = mod(t * t - 4 * n, p);
    if (disc == 0) {
        const auto lambda = static_cast<uint32_t>(mod(t * inverse_mod(2, p), p));
        if (scalar_when_repeated) return {p, ScalarClass{lambda}};
        return {p, JordanClass{lambda}};
    }
    if (legendre(disc, p) == -1) return {p, NonSplitClass{static_cast<uint32_t>(t), static_cast<uint32_t>(n)}};
    std::vector<uint32_t> roots;
    for (int64_t x = 0; x < p; ++x)
        if (mod(x * x - t * x + n, p) == 0) roots.push_back(static_cast<uint32_t>(x));
    if (roots.size() != 2) throw std::logic_error("classify: split characteristic polynomial without two roots");
    return {p, SplitDistinctClass{roots[0], roots[1]}};
}

FrobeniusClass classify(const Mat2& m)
{
    if (!m.is_invertible()) throw std::invalid_argument("classify: matrix is singular");
    if (m.is_scalar()) return {m.modulus(), ScalarClass{m.a()}};
    return classify_charpoly(m.modulus(), m.trace(), m.det(), false);
}

// ---------------------------------------------------------------------------
// CartanContext
// ---------------------------------------------------------------------------

namespace {

/// Index (c' + p d') of the coset C g, where [[1, 0], [c', d']] is the unique
/// element of C g with first row (1, 0).
inline uint32_t cartan_coset_id(uint64_t p, uint64_t alpha_inv, const std::vector<uint32_t>& inv, uint64_t a,
                                uint64_t b, uint64_t c, uint64_t d)
{
    const uint64_t D = (a * d + p * p - b * c) % p;
    const uint64_t Dinv = inv[D];
    const uint64_t x = d * Dinv % p;
    const uint64_t y = (p - b) % p * Dinv % p * alpha_inv % p;
    const uint64_t c2 = (y * a + x * c) % p;
    const uint64_t d2 = (y * b + x * d) % p;
    return static_cast<uint32_t>(c2 + p * d2);
}

}  // namespace

CartanContext CartanContext::build(uint32_t p, const CartanOptions& options)
{
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("build_cartan: level must be a prime >= 5");
    if (p > options.max_level)
        throw std::invalid_argument("build_cartan: level " + std::to_string(p) + " exceeds the enumeration bound " +
                                    std::to_string(options.max_level));
    CartanContext ctx;
    ctx.p_ = p;
    if (options.alpha) {
        if (legendre(*options.alpha, p) != -1) throw std::invalid_argument("build_cartan: alpha must be a non-square");
        ctx.alpha_ = static_cast<uint32_t>(mod(*options.alpha, p));
    } else {
        ctx.alpha_ = find_nonsquare(p).value();
    }

    for (int64_t x = 0; x < p; ++x)
        for (int64_t y = 0; y < p; ++y) {
            if (x == 0 && y == 0) continue;
            const Mat2 m = ctx.cartan_element(x, y);
            ctx.cartan_.push_back(m.encoding());
            ctx.normalizer_.push_back(m.encoding());
            ctx.normalizer_.push_back((m * ctx.normalizer_involution()).encoding());
        }
    std::sort(ctx.cartan_.begin(), ctx.cartan_.end());
    std::sort(ctx.normalizer_.begin(), ctx.normalizer_.end());

    const uint64_t P = p;
    std::vector<uint32_t> inv(p, 0);
    for (uint32_t v = 1; v < p; ++v) inv[v] = static_cast<uint32_t>(inverse_mod(v, p));
    const uint64_t alpha_inv = inv[ctx.alpha_];

    const uint64_t cosets = P * (P - 1);
    std::vector<bool> seen_c(P * P, false), seen_n(P * P, false);
    const uint64_t total = P * P * P * P;
    for (uint64_t step = 0; step < total; ++step) {
        if (ctx.cartan_reps_.size() == cosets && ctx.normalizer_reps_.size() == cosets / 2) break;
        const uint64_t code = options.order == CosetOrder::Ascending ? step : total - 1 - step;
        const uint64_t a = code % P, b = code / P % P, c = code / (P * P) % P, d = code / (P * P * P);
        if ((a * d + P * P - b * c) % P == 0) continue;
        const uint32_t id = cartan_coset_id(P, alpha_inv, inv, a, b, c, d);
        // s g with s = diag(1, -1) negates the second row.
        const uint32_t id_s = cartan_coset_id(P, alpha_inv, inv, a, b, (P - c) % P, (P - d) % P);
        const uint32_t id_n = std::min(id, id_s);
        const Mat2 g = Mat2::from_encoding(p, code);
        if (!seen_c[id]) {
            seen_c[id] = true;
            ctx.cartan_reps_.push_back(g);
        }
        if (!seen_n[id_n]) {
            seen_n[id_n] = true;
            ctx.normalizer_reps_.push_back(g);
        }
    }
    if (ctx.cartan_reps_.size() != cosets || ctx.normalizer_reps_.size() != cosets / 2)
        throw std::logic_error("build_cartan: coset enumeration incomplete");
    return ctx;
}

bool CartanContext::contains(Subgroup h, const Mat2& m) const
{
    if (m.modulus() != p_) throw std::invalid_argument("CartanContext: matrix over a different field");
    const auto& set = members(h);
    return std::binary_search(set.begin(), set.end(), m.encoding());
}

uint64_t count_fixed_cosets(const Mat2& x, Subgroup h, const CartanContext& ctx)
{
    if (!x.is_invertible()) throw std::invalid_argument("count_fixed_cosets: matrix is singular");
    uint64_t count = 0;
    for (const Mat2& g : ctx.representatives(h))
        if (ctx.contains(h, conjugate(g, x))) ++count;
    return count;
}

EllipticElements elliptic_element_existence(uint32_t p)
{
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("elliptic_element_existence: level must be a prime >= 5");
    const uint32_t alpha = find_nonsquare(p).value();
    EllipticElements found;
    for (int64_t x = 0; x < p; ++x)
        for (int64_t y = 0; y < p; ++y) {
            const Mat2 m(p, x, int64_t{alpha} * y, y, x);
            if (m.det() != 1) continue;
            if (m.trace() == 0) found.order_four = true;       // x^2 + 1
            if (m.trace() == p - 1) found.order_three_type = true;  // x^2 + x + 1
        }
    const bool four_by_congruence = p % 4 == 3;
    const bool three_by_congruence = p % 3 == 2;
    if (found.order_four != four_by_congruence || found.order_three_type != three_by_congruence)
        throw std::logic_error("elliptic_element_existence: exhaustive search disagrees with congruence conditions");
    return found;
}

// ---------------------------------------------------------------------------
// Automorphism images for j = 0, 1728
// ---------------------------------------------------------------------------

namespace {

std::vector<Mat2> sl2_with_trace(uint32_t p, uint32_t trace)
{
    std::vector<Mat2> out;
    for (int64_t a = 0; a < p; ++a)
        for (int64_t b = 0; b < p; ++b)
            for (int64_t c = 0; c < p; ++c) {
                const Mat2 m(p, a, b, c, int64_t{trace} - a);
                if (m.det() == 1) out.push_back(m);
            }
    std::sort(out.begin(), out.end(), [](const Mat2& x, const Mat2& y) { return x.encoding() < y.encoding(); });
    return out;
}

/// Group generated by `gens`, or nullopt once it exceeds `limit` elements.
std::optional<std::vector<Mat2>> closure(const std::vector<Mat2>& gens, size_t limit)
{
    const uint32_t p = gens.front().modulus();
    std::vector<Mat2> elements{Mat2::identity(p)};
    std::unordered_set<uint64_t> seen{elements.front().encoding()};
    for (size_t i = 0; i < elements.size(); ++i) {
        for (const Mat2& g : gens) {
            const Mat2 next = elements[i] * g;
            if (seen.insert(next.encoding()).second) {
                elements.push_back(next);
                if (elements.size() > limit) return std::nullopt;
            }
        }
    }
    std::sort(elements.begin(), elements.end(), [](const Mat2& x, const Mat2& y) { return x.encoding() < y.encoding(); });
    return elements;
}

std::map<uint64_t, uint64_t> order_profile(const std::vector<Mat2>& elements)
{
    std::map<uint64_t, uint64_t> profile;
    for (const Mat2& m : elements) ++profile[m.order()];
    return profile;
}

AutomorphismImage search_two_generated(uint32_t p, uint32_t first_trace, uint32_t second_trace, size_t order,
                                       const std::map<uint64_t, uint64_t>& profile, std::string type)
{
    const auto firsts = sl2_with_trace(p, first_trace);
    const auto seconds = sl2_with_trace(p, second_trace);
    const Mat2 a = firsts.front();
    for (const Mat2& b : seconds) {
        auto group = closure({a, b}, order);
        if (!group || group->size() != order) continue;
        if (order_profile(*group) != profile) continue;
        return {std::move(type), {a, b}, std::move(*group)};
    }
    throw std::logic_error("image_subgroups_for_special_j: no subgroup of type " + type + " found");
}

}  // namespace

AutomorphismImage image_subgroups_for_special_j(uint32_t characteristic, SpecialJ j, uint32_t p)
{
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("image_subgroups_for_special_j: level must be a prime >= 5");
    if (!is_prime(characteristic) || characteristic == p)
        throw std::invalid_argument("image_subgroups_for_special_j: characteristic must be a prime different from p");

    if (characteristic == 2) {
        // Binary tetrahedral group: orders 1:1, 2:1, 3:8, 4:6, 6:8.
        return search_two_generated(p, 0, 1, 24, {{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}, "SL(2,3)");
    }
    if (characteristic == 3) {
        // Dicyclic group of order 12: orders 1:1, 2:1, 3:2, 4:6, 6:2.
        return search_two_generated(p, 1, 0, 12, {{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}, "Dic3");
    }
    const uint32_t trace = j == SpecialJ::Zero ? 1 : 0;  // order 6 or order 4 in SL_2
    const Mat2 gen = sl2_with_trace(p, trace).front();
    auto group = closure({gen}, 6);
    if (!group) throw std::logic_error("image_subgroups_for_special_j: generator order too large");
    const size_t expected = j == SpecialJ::Zero ? 6 : 4;
    if (group->size() != expected) throw std::logic_error("image_subgroups_for_special_j: unexpected cyclic order");
    return {j == SpecialJ::Zero ? "C6" : "C4", {gen}, std::move(*group)};
}

}  // namespace nscartan

#include "nscartan/counting.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nscartan {

std::string to_string(CurveVariant v)
{
    return v == CurveVariant::Ns ? "ns" : "ns+";
}

std::string to_string(CountMethod m)
{
    return m == CountMethod::Moduli ? "moduli" : "trace";
}

CurveVariant parse_variant(const std::string& s)
{
    if (s == "ns") return CurveVariant::Ns;
    if (s == "ns+" || s == "nsplus") return CurveVariant::NsPlus;
    throw std::invalid_argument("unknown curve variant '" + s + "' (expected ns or ns+)");
}

// ---------------------------------------------------------------------------
// Newform records
// ---------------------------------------------------------------------------

namespace {

// P_1 .. P_n from a monic c_0 .. c_d by Newton's identities.
std::vector<int64_t> newton_power_sums(const std::vector<int64_t>& c, unsigned n)
{
    const size_t d = c.size() - 1;
    std::vector<int64_t> P(n + 1, 0);
    P[0] = static_cast<int64_t>(d);
    for (unsigned k = 1; k <= n; ++k) {
        int64_t acc = 0;
        for (size_t i = 1; i <= d && i < k; ++i) acc = checked_add(acc, checked_mul(c[d - i], P[k - i]));
        if (k <= d) acc = checked_add(acc, checked_mul(static_cast<int64_t>(k), c[d - k]));
        P[k] = -acc;
    }
    return {P.begin() + 1, P.end()};
}

// Monic characteristic polynomial from P_1 .. P_d (d = dim). Throws if the
// power sums are not those of an integer polynomial.
std::vector<int64_t> charpoly_from_power_sums(const std::vector<int64_t>& P, unsigned d, const std::string& where)
{
    std::vector<int64_t> e(d + 1, 0);
    e[0] = 1;
    for (unsigned k = 1; k <= d; ++k) {
        int64_t acc = 0;
        for (unsigned i = 1; i <= k; ++i) {
            const int64_t term = checked_mul(e[k - i], P[i - 1]);
            acc = (i % 2 == 1) ? checked_add(acc, term) : checked_add(acc, -term);
        }
        if (acc % static_cast<int64_t>(k) != 0)
            throw std::invalid_argument(where + ": traces are not power sums of algebraic integers");
        e[k] = acc / static_cast<int64_t>(k);
    }
    std::vector<int64_t> c(d + 1, 0);
    for (unsigned k = 0; k <= d; ++k) c[d - k] = (k % 2 == 0) ? e[k] : -e[k];
    return c;
}

std::string where_of(const NewformRecord& r)
{
    return r.source.empty() ? "newform record" : r.source;
}

int64_t parse_int(std::string_view s, const std::string& where)
{
    int64_t v = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last)
        throw std::invalid_argument(where + ": expected an integer, got '" + std::string(s) + "'");
    return v;
}

std::vector<int64_t> parse_list(const std::string& s, const std::string& where)
{
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument(where + ": expected a bracketed list, got '" + s + "'");
    std::vector<int64_t> out;
    const std::string body = s.substr(1, s.size() - 2);
    if (body.empty()) return out;
    size_t start = 0;
    for (;;) {
        const size_t comma = body.find(',', start);
        out.push_back(parse_int(std::string_view(body).substr(start, comma - start), where));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

void NewformRecord::validate() const
{
    const std::string where = where_of(*this);
    if (level == 0) throw std::invalid_argument(where + ": level must be positive");
    if (dim == 0) throw std::invalid_argument(where + ": dimension must be positive");
    if (!is_prime(hecke)) throw std::invalid_argument(where + ": hecke index must be prime");
    if (traces.empty() && charpoly.empty())
        throw std::invalid_argument(where + ": record needs traces or charpoly");
    if (!charpoly.empty()) {
        if (charpoly.size() != dim + 1)
            throw std::invalid_argument(where + ": charpoly degree " + std::to_string(charpoly.size() - 1) +
                                        " does not match dimension " + std::to_string(dim));
        if (charpoly.back() != 1) throw std::invalid_argument(where + ": charpoly must be monic");
        if (!traces.empty() && newton_power_sums(charpoly, static_cast<unsigned>(traces.size())) != traces)
            throw std::invalid_argument(where + ": traces disagree with charpoly");
    } else if (dim == 1 && traces.size() > 1) {
        // a single eigenvalue a has power sums a, a^2, ...
        int64_t pw = traces[0];
        for (size_t k = 1; k < traces.size(); ++k) {
            pw = checked_mul(pw, traces[0]);
            if (traces[k] != pw) throw std::invalid_argument(where + ": traces are not powers of one eigenvalue");
        }
    }
}

std::vector<int64_t> NewformRecord::power_sums(unsigned n) const
{
    if (!charpoly.empty()) return newton_power_sums(charpoly, n);
    if (traces.size() >= n) return {traces.begin(), traces.begin() + n};
    if (traces.size() >= dim)
        return newton_power_sums(charpoly_from_power_sums(traces, dim, where_of(*this)), n);
    throw std::invalid_argument(where_of(*this) + ": power sum of order " + std::to_string(n) +
                                " not determined by the record");
}

std::vector<NewformRecord> parse_newform_records(std::istream& in, const std::string& name)
{
    std::vector<NewformRecord> out;
    std::string raw;
    unsigned lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string where = name + ":" + std::to_string(lineno);
        std::string line;
        int depth = 0;
        for (char ch : raw) {
            if (ch == '#') break;
            if (ch == '[') ++depth;
            if (ch == ']') --depth;
            if (depth > 0 && (ch == ' ' || ch == '\t')) continue;
            line.push_back(ch);
        }
        if (depth != 0) throw std::invalid_argument(where + ": unbalanced brackets");
        std::istringstream tokens(line);
        std::vector<std::string> fields;
        for (std::string tok; tokens >> tok;) fields.push_back(tok);
        if (fields.empty()) continue;
        if (fields.size() < 2) throw std::invalid_argument(where + ": expected '<level> <dim> ...'");

        NewformRecord rec;
        rec.source = where;
        rec.line = lineno;
        const int64_t level = parse_int(fields[0], where);
        const int64_t dim = parse_int(fields[1], where);
        if (level <= 0 || dim <= 0) throw std::invalid_argument(where + ": level and dim must be positive");
        rec.level = static_cast<uint32_t>(level);
        rec.dim = static_cast<unsigned>(dim);
        for (size_t i = 2; i < fields.size(); ++i) {
            const std::string& f = fields[i];
            const size_t colon = f.find(':');
            if (colon == std::string::npos) throw std::invalid_argument(where + ": unexpected field '" + f + "'");
            const std::string key = f.substr(0, colon);
            const std::string value = f.substr(colon + 1);
            if (key == "hecke") {
                const int64_t l = parse_int(value, where);
                if (l <= 1) throw std::invalid_argument(where + ": bad hecke index");
                rec.hecke = static_cast<uint32_t>(l);
            } else if (key == "traces") {
                rec.traces = parse_list(value, where);
            } else if (key == "charpoly") {
                rec.charpoly = parse_list(value, where);
            } else {
                throw std::invalid_argument(where + ": unknown key '" + key + "'");
            }
        }
        rec.validate();
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<NewformRecord> load_newform_records(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open newform file " + path);
    return parse_newform_records(in, path);
}

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

uint64_t rational_cusp_count(uint32_t p, uint64_t field_size, CurveVariant variant)
{
    if (!is_prime(p) || p < 3) throw std::invalid_argument("rational_cusp_count: p must be an odd prime");
    const uint64_t Q = field_size % p;
    if (Q == 0) throw std::invalid_argument("rational_cusp_count: field characteristic equals p");
    if (variant == CurveVariant::Ns) return Q == 1 ? p - 1 : 0;
    return (Q == 1 || Q == p - 1) ? (p - 1) / 2 : 0;
}

std::vector<int64_t> frobenius_power_sum_poly(uint32_t q, unsigned k)
{
    std::vector<int64_t> prev{2};    // s_0
    std::vector<int64_t> cur{0, 1};  // s_1
    if (k == 0) return prev;
    for (unsigned i = 2; i <= k; ++i) {
        std::vector<int64_t> next(cur.size() + 1, 0);
        for (size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
        for (size_t j = 0; j < prev.size(); ++j)
            next[j] = checked_add(next[j], -checked_mul(static_cast<int64_t>(q), prev[j]));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

int64_t count_points_trace(const std::vector<NewformRecord>& records, uint32_t q, unsigned r)
{
    if (!is_prime(q)) throw std::invalid_argument("count_points_trace: q must be prime");
    if (r == 0) throw std::invalid_argument("count_points_trace: r must be positive");
    const std::vector<int64_t> s = frobenius_power_sum_poly(q, r);
    int64_t total = 0;
    for (const auto& rec : records) {
        rec.validate();
        if (rec.hecke != q)
            throw std::invalid_argument(where_of(rec) + ": record carries T_" + std::to_string(rec.hecke) +
                                        " data, T_" + std::to_string(q) + " needed");
        const std::vector<int64_t> P = rec.power_sums(static_cast<unsigned>(s.size() - 1));
        int64_t sum = checked_mul(s[0], static_cast<int64_t>(rec.dim));
        for (size_t j = 1; j < s.size(); ++j) sum = checked_add(sum, checked_mul(s[j], P[j - 1]));
        total = checked_add(total, sum);
    }
    int64_t qr = 1;
    for (unsigned i = 0; i < r; ++i) qr = checked_mul(qr, q);
    return checked_add(checked_add(qr, 1), -total);
}

namespace {

// Frobenius matrix commuting with the cyclic automorphism image <a>: an
// element u + v*a of F_p[a] with the required trace and determinant.
Mat2 frobenius_in_centralizer(const FrobeniusClass& rho, const Mat2& a)
{
    const uint32_t p = rho.p;
    if (rho.is_scalar()) return rho.representative();
    for (uint32_t v = 1; v < p; ++v)
        for (uint32_t u = 0; u < p; ++u) {
            const Mat2 m = Mat2::scalar(p, u) + a.scaled(v);
            if (m.trace() == rho.trace() && m.det() == rho.det()) return m;
        }
    throw std::logic_error("count_points_moduli: Frobenius class " + rho.format() +
                           " does not commute with the automorphism image");
}

}  // namespace

PointCountReport count_points_moduli(uint32_t p, uint32_t q, unsigned r, CurveVariant variant,
                                     const ModuliOptions& options)
{
    if (!is_prime(p) || p < 5) throw std::invalid_argument("count_points_moduli: p must be a prime >= 5");
    if (!is_prime(q) || q == p) throw std::invalid_argument("count_points_moduli: q must be a prime different from p");
    if (r == 0 || r % 2 != 0) throw std::invalid_argument("count_points_moduli: r must be even");

    const FieldHandle F = build_ext_field(q, r, options.field_bound);
    const CartanContext ctx = build_cartan(p, options.cartan);
    const Subgroup H = subgroup_for(variant);

    PointCountReport rep;
    rep.p = p;
    rep.q = q;
    rep.r = r;
    rep.variant = variant;
    rep.method = CountMethod::Moduli;
    rep.alpha = ctx.alpha();

    std::map<SpecialJ, AutomorphismImage> images;
    const Gf j1728 = F->from_int(1728);
    for (uint32_t v = 0; v < F->size(); ++v) {
        const Gf j{v};
        const WeierstrassCurve E = WeierstrassCurve::with_j_invariant(F, j);
        JContribution c;
        c.j = j;
        c.j_label = F->format(j);
        c.rho = frobenius_matrix_class(E, p);
        c.supersingular = is_supersingular(E);
        c.special = (j.v == 0 || j == j1728);
        if (!c.special) {
            c.count = count_fixed_cosets(c.rho.representative(), H, ctx);
        } else {
            const SpecialJ tag = (j.v == 0) ? SpecialJ::Zero : SpecialJ::Twelve28;
            auto it = images.find(tag);
            if (it == images.end()) it = images.emplace(tag, image_subgroups_for_special_j(q, tag, p)).first;
            const AutomorphismImage& A = it->second;
            c.automorphisms = automorphism_order(E);
            if (c.automorphisms != A.order())
                throw std::logic_error("count_points_moduli: #Aut(E) = " + std::to_string(c.automorphisms) +
                                       " but the image has order " + std::to_string(A.order()));
            c.image_type = A.type;
            Mat2 rho_m = c.rho.representative();
            if (A.generators.size() == 1) {
                rho_m = frobenius_in_centralizer(c.rho, A.generators.front());
            } else if (!c.rho.is_scalar()) {
                throw std::logic_error("count_points_moduli: non-scalar Frobenius at j = " + c.j_label +
                                       " with non-abelian automorphism image");
            }
            for (const Mat2& a : A.elements) c.burnside_sum += count_fixed_cosets(a * rho_m, H, ctx);
            if (c.burnside_sum % A.order() != 0)
                throw std::logic_error("count_points_moduli: Burnside sum " + std::to_string(c.burnside_sum) +
                                       " at j = " + c.j_label + " not divisible by " + std::to_string(A.order()));
            c.count = c.burnside_sum / A.order();
        }
        rep.noncuspidal += static_cast<int64_t>(c.count);
        if (c.supersingular) rep.supersingular_subtotal += c.count;
        rep.breakdown.push_back(std::move(c));
    }

    rep.cusps = rational_cusp_count(p, F->size(), variant);
    rep.total = rep.noncuspidal + static_cast<int64_t>(rep.cusps);
    const int64_t denom = variant == CurveVariant::Ns ? 12 : 24;
    rep.supersingular_bound = Rational(int64_t{p} * (p - 1) * (int64_t{q} - 1), denom);
    return rep;
}

PointCountReport count_points_trace_report(const std::vector<NewformRecord>& records, uint32_t p, uint32_t q,
                                           unsigned r, CurveVariant variant)
{
    PointCountReport rep;
    rep.p = p;
    rep.q = q;
    rep.r = r;
    rep.variant = variant;
    rep.method = CountMethod::Trace;
    rep.total = count_points_trace(records, q, r);
    uint64_t Q = 1;
    for (unsigned i = 0; i < r; ++i) Q *= q;
    rep.cusps = rational_cusp_count(p, Q, variant);
    rep.noncuspidal = rep.total - static_cast<int64_t>(rep.cusps);
    if (rep.noncuspidal < 0) throw std::logic_error("count_points_trace_report: negative noncuspidal count");
    return rep;
}

bool hyperelliptic_bound_check(int64_t count, uint32_t q, unsigned r)
{
    int64_t qr = 1;
    for (unsigned i = 0; i < r; ++i) qr = checked_mul(qr, q);
    return count <= checked_mul(2, checked_add(qr, 1));
}

}  // namespace nscartan

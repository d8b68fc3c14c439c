#include "nscartan/report.hpp"

#include <sstream>

#include "nscartan/cuspdiv.hpp"
#include "nscartan/lattices.hpp"

namespace nscartan {

namespace {

std::string str(const Rational& r)
{
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

Json vec_json(const RationalVec& v)
{
    return Json::array({str(v[0]), str(v[1])});
}

void render(std::ostringstream& os, const Json& j, int indent);

std::string scalar(const Json& j)
{
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

bool all_scalar(const Json& j)
{
    for (const auto& x : j) {
        if (x.is_structured()) return false;
        if (x.is_string() && x.get<std::string>().find(", ") != std::string::npos) return false;
    }
    return true;
}

void render_value(std::ostringstream& os, const Json& v, int indent)
{
    if (v.is_object()) {
        os << "\n";
        render(os, v, indent + 2);
    } else if (v.is_array() && all_scalar(v)) {
        os << " [";
        bool first = true;
        for (const auto& x : v) {
            os << (first ? "" : ", ") << scalar(x);
            first = false;
        }
        os << "]\n";
    } else if (v.is_array()) {
        os << "\n";
        for (const auto& x : v) {
            os << std::string(indent + 2, ' ') << "-";
            if (x.is_object()) {
                std::ostringstream inner;
                render(inner, x, indent + 4);
                os << " " << inner.str().substr(static_cast<size_t>(indent) + 4);
            } else {
                render_value(os, x, indent + 2);
            }
        }
    } else {
        os << " " << scalar(v) << "\n";
    }
}

void render(std::ostringstream& os, const Json& j, int indent)
{
    for (const auto& [k, v] : j.items()) {
        os << std::string(indent, ' ') << k << ":";
        render_value(os, v, indent);
    }
}

}  // namespace

Json to_json(const CurveInvariants& inv)
{
    Json j;
    j["p"] = inv.p;
    j["genus_ns"] = inv.genus_ns;
    j["genus_ns_plus"] = inv.genus_ns_plus;
    j["cusps_ns"] = inv.cusps_ns;
    j["cusps_ns_plus"] = inv.cusps_ns_plus;
    j["nu2"] = inv.nu2;
    j["nu3"] = inv.nu3;
    j["fixed_w"] = inv.fixed_w;
    j["g_C"] = inv.g_C;
    j["g_H"] = inv.g_H;
    j["field_tag"] = inv.field_tag;
    j["newpart_dim_check"] = inv.newpart_ok;
    j["genus_gap"] = inv.genus_gap;
    j["externally_sourced"] = Json::array({"fixed_w", "genus_ns_plus (via fixed_w)"});
    return j;
}

Json to_json(const PointCountReport& rep)
{
    Json j;
    j["p"] = rep.p;
    j["q"] = rep.q;
    j["r"] = rep.r;
    j["variant"] = to_string(rep.variant);
    j["method"] = to_string(rep.method);
    j["noncuspidal"] = rep.noncuspidal;
    j["cusps"] = rep.cusps;
    j["total"] = rep.total;
    if (rep.method == CountMethod::Moduli) {
        j["alpha"] = rep.alpha;
        j["supersingular_subtotal"] = rep.supersingular_subtotal;
        j["supersingular_bound"] = str(rep.supersingular_bound);
        Json rows = Json::array();
        for (const auto& c : rep.breakdown) {
            Json row;
            row["j"] = c.j_label;
            row["frobenius"] = c.rho.format();
            row["supersingular"] = c.supersingular;
            row["special"] = c.special;
            row["automorphisms"] = c.automorphisms;
            if (!c.image_type.empty()) row["image"] = c.image_type;
            row["burnside_sum"] = c.burnside_sum;
            row["count"] = c.count;
            rows.push_back(std::move(row));
        }
        j["breakdown"] = std::move(rows);
    }
    return j;
}

Json to_json(const GateEntry& e)
{
    Json j;
    j["gate"] = e.gate;
    j["p"] = e.p;
    if (!e.variant.empty()) j["variant"] = e.variant;
    j["verdict"] = to_string(e.verdict);
    j["expected"] = e.expected ? to_string(*e.expected) : "none";
    j["meets_expectation"] = e.meets_expectation();
    j["conclusion"] = e.conclusion;
    if (!e.basis.empty()) j["basis"] = e.basis;
    Json inputs = Json::array();
    for (const auto& in : e.inputs) {
        Json row;
        row["name"] = in.name;
        row["value"] = in.value;
        row["source"] = to_string(in.provenance);
        inputs.push_back(std::move(row));
    }
    if (!inputs.empty()) j["inputs"] = std::move(inputs);
    return j;
}

Json to_json(const GateReport& r)
{
    Json j;
    j["p"] = r.p;
    j["meets_expectations"] = r.meets_expectations();
    Json entries = Json::array();
    for (const auto& e : r.entries) entries.push_back(to_json(e));
    j["entries"] = std::move(entries);
    return j;
}

Json to_json(const std::vector<CheckResult>& checks)
{
    Json rows = Json::array();
    bool all = true;
    for (const auto& c : checks) {
        Json row;
        row["key"] = c.key;
        row["passed"] = c.passed;
        row["description"] = c.description;
        row["detail"] = c.detail;
        rows.push_back(std::move(row));
        all = all && c.passed;
    }
    Json j;
    j["all_passed"] = all;
    j["checks"] = std::move(rows);
    return j;
}

Json lattices_report(uint32_t p)
{
    Json j;
    j["p"] = p;
    Json members = Json::array();
    for (const auto& m : gamma_p_family_members(p)) {
        Json row;
        row["family"] = m.family;
        row["g"] = m.g;
        row["basis"] = Json::array({vec_json(m.basis[0]), vec_json(m.basis[1])});
        row["class"] = m.lattice.format();
        members.push_back(std::move(row));
    }
    j["listed_members"] = std::move(members);
    Json fixed = Json::array();
    for (const auto& L : gamma_p_fixed_lattices(p)) fixed.push_back(L.format());
    j["distinct_classes"] = fixed.size();
    j["gamma_p_fixed"] = std::move(fixed);
    Json sub = Json::array();
    for (const auto& L : cartan_fixed_sublist(p)) sub.push_back(L.format());
    j["cartan_fixed"] = std::move(sub);
    j["verdict"] = to_json(normalizer_verdict(p));
    j["notes"] = Json::array({
        "fixing is tested over the finite mod-p image: every listed lattice lies between pZ^2 and (1/p)Z^2",
        "completeness of the Gamma(p)-fixed list is an external dependency, not re-proved",
    });
    return j;
}

Json cuspdiv_report(uint32_t p, uint32_t l)
{
    Json j;
    j["p"] = p;
    j["l"] = l;
    Json table = Json::array();
    for (uint32_t t = 1; t < p; ++t) {
        Json row;
        row["cusp"] = t;
        row["T_l"] = hecke_Tl(l, CuspDivisor::point(p, t)).format();
        row["w"] = w_act(CuspDivisor::point(p, t)).format();
        row["disjoint_partner"] = disjoint_support_choice(l, t, p);
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    j["eichler_shimura_shape"] = eichler_shimura_shape_check(l, p);
    uint64_t pairs = 0, zero_id = 0, zero_w = 0;
    for (uint32_t C = 1; C < p; ++C)
        for (uint32_t Cp = 1; Cp < p; ++Cp) {
            if (C == Cp) continue;
            ++pairs;
            zero_id += D_l(CuspAutomorphism::Identity, l, C, Cp, p).is_zero();
            zero_w += D_l(CuspAutomorphism::W, l, C, Cp, p).is_zero();
        }
    Json dl;
    dl["pairs"] = pairs;
    dl["identity_zero"] = zero_id;
    dl["w_zero"] = zero_w;
    j["D_l"] = std::move(dl);
    j["notes"] = Json::array({
        "only the identity and w are modeled; a nonzero D_l would force an automorphism not preserving the cusps",
    });
    return j;
}

std::string render_text(const Json& j)
{
    std::ostringstream os;
    if (j.is_object())
        render(os, j, 0);
    else
        render_value(os, j, 0);
    return os.str();
}

}  // namespace nscartan

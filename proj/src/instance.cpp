#include <torsur/instance.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>

namespace torsur {

using nlohmann::json;

namespace {

constexpr std::int64_t kMaxExact = (std::int64_t{1} << 53) - 1;

[[noreturn]] void bad(const std::string& msg) {
    throw Error(ErrorKind::parse, msg);
}

const json& field(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) bad("missing field '" + key + "'");
    return *it;
}

IntVec vec_from_json(const json& j, const std::string& name) {
    if (!j.is_array()) bad("field '" + name + "' must be an array");
    IntVec out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(int_from_json(e, name));
    return out;
}

std::vector<IntVec> vecs_from_json(const json& j, const std::string& name) {
    if (!j.is_array()) bad("field '" + name + "' must be an array of arrays");
    std::vector<IntVec> out;
    for (const auto& e : j) out.push_back(vec_from_json(e, name));
    return out;
}

json vec_to_json(const IntVec& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(int_to_json(x));
    return out;
}

long long ll_from_json(const json& j, const std::string& name) {
    if (!j.is_number_integer()) bad("field '" + name + "' must be an integer");
    return j.get<long long>();
}

std::optional<Kappa> kappa_from_string(const std::string& s) {
    if (s == "-infinity" || s == "-inf") return Kappa::minus_infinity;
    if (s == "0") return Kappa::zero;
    if (s == "1") return Kappa::one;
    if (s == "2") return Kappa::two;
    return std::nullopt;
}

LClassStatus l_class_from_string(const std::string& s) {
    if (s == "null_homologous_integral") return LClassStatus::null_homologous_integral;
    if (s == "torsion") return LClassStatus::torsion;
    if (s == "rationally_nonzero") return LClassStatus::rationally_nonzero;
    bad("unknown L_class value '" + s + "'");
}

AmbientData ambient_from_json(const json& j) {
    AmbientData a;
    a.l_class_status = l_class_from_string(field(j, "L_class").get<std::string>());
    a.b2 = ll_from_json(field(j, "b2"), "b2");
    a.b_plus = ll_from_json(field(j, "b_plus"), "b_plus");
    a.signature = ll_from_json(field(j, "signature"), "signature");
    a.euler = ll_from_json(field(j, "euler"), "euler");
    if (!field(j, "h2_torsion_free").is_boolean()) bad("h2_torsion_free must be bool");
    a.h2_torsion_free = field(j, "h2_torsion_free").get<bool>();
    if (!field(j, "intersection_form_odd").is_boolean())
        bad("intersection_form_odd must be bool");
    a.intersection_form_odd = field(j, "intersection_form_odd").get<bool>();
    if (j.contains("kappa")) {
        auto k = kappa_from_string(j.at("kappa").get<std::string>());
        if (!k) bad("unknown kappa value '" + j.at("kappa").get<std::string>() + "'");
        a.kappa = *k;
    }
    return a;
}

json ambient_to_json(const AmbientData& a) {
    json j;
    j["L_class"] = to_string(a.l_class_status);
    j["b2"] = a.b2;
    j["b_plus"] = a.b_plus;
    j["signature"] = a.signature;
    j["euler"] = a.euler;
    j["h2_torsion_free"] = a.h2_torsion_free;
    j["intersection_form_odd"] = a.intersection_form_odd;
    if (a.kappa) j["kappa"] = to_string(*a.kappa);
    return j;
}

}  // namespace

json int_to_json(const Int& x) {
    if (x <= kMaxExact && x >= -kMaxExact)
        return json(static_cast<std::int64_t>(x));
    return json(x.str());
}

Int int_from_json(const json& j, const std::string& name) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            bad("field '" + name + "' holds a non-integer string");
        }
    }
    bad("field '" + name + "' must be an integer or decimal string");
}

const Framing& InstanceDocument::framing(const std::string& name) const {
    for (const auto& [n, f] : framings)
        if (n == name) return f;
    throw Error(ErrorKind::parse, "unknown framing name '" + name + "'");
}

InstanceDocument parse_instance(const json& j) {
    if (!j.is_object()) bad("instance document must be a JSON object");
    const json& comp = field(j, "complement");

    long long n = ll_from_json(field(comp, "generators"), "generators");
    if (n < 0) bad("generator count must be non-negative");
    auto rel_rows = vecs_from_json(field(comp, "relations"), "relations");
    IntMatrix relations(0, static_cast<std::size_t>(n));
    for (const IntVec& r : rel_rows) {
        if (r.size() != static_cast<std::size_t>(n))
            bad("relation row length does not match generator count");
        relations.append_row(r);
    }

    const json& i1 = field(comp, "i1");
    IntVec mu = vec_from_json(field(i1, "mu"), "i1.mu");
    IntVec g1 = vec_from_json(field(i1, "g1"), "i1.g1");
    IntVec g2 = vec_from_json(field(i1, "g2"), "i1.g2");

    std::optional<std::vector<IntVec>> ker_i2;
    if (comp.contains("ker_i2_integral"))
        ker_i2 = vecs_from_json(comp.at("ker_i2_integral"), "ker_i2_integral");

    std::optional<AmbientData> ambient;
    if (j.contains("ambient")) ambient = ambient_from_json(j.at("ambient"));

    InstanceDocument doc{
        ComplementPresentation(
            Presentation(static_cast<std::size_t>(n), std::move(relations)),
            std::move(mu), std::move(g1), std::move(g2), std::move(ker_i2),
            std::move(ambient)),
        {},
        {}};

    if (j.contains("framings")) {
        const json& fr = j.at("framings");
        if (!fr.is_object()) bad("'framings' must be an object");
        for (auto it = fr.begin(); it != fr.end(); ++it) {
            auto vecs = vecs_from_json(it.value(), "framings." + it.key());
            if (vecs.size() != 2)
                bad("framing '" + it.key() + "' must list exactly two vectors");
            doc.framings.emplace_back(it.key(), Framing(vecs[0], vecs[1]));
        }
    }

    if (j.contains("surgeries")) {
        const json& su = j.at("surgeries");
        if (!su.is_array()) bad("'surgeries' must be an array");
        for (const json& s : su) {
            NamedSurgery ns;
            ns.spec.p = int_from_json(field(s, "p"), "p");
            ns.spec.k = int_from_json(field(s, "k"), "k");
            IntVec gamma = vec_from_json(field(s, "gamma"), "gamma");
            if (gamma.size() != 2) bad("'gamma' must be a pair [a, b]");
            ns.spec.gamma_a = gamma[0];
            ns.spec.gamma_b = gamma[1];
            ns.spec.validate();
            ns.framing = field(s, "framing").get<std::string>();
            doc.framing(ns.framing);  // must resolve
            doc.surgeries.push_back(std::move(ns));
        }
    }
    return doc;
}

InstanceDocument parse_instance_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad("invalid JSON");
    return parse_instance(j);
}

json instance_to_json(const InstanceDocument& doc) {
    json j;
    const ComplementPresentation& c = doc.complement;
    json comp;
    comp["generators"] = static_cast<std::int64_t>(c.n_generators());
    json rels = json::array();
    for (std::size_t r = 0; r < c.h1_y().relations.rows(); ++r)
        rels.push_back(vec_to_json(c.h1_y().relations.row(r)));
    comp["relations"] = rels;
    comp["i1"] = {{"mu", vec_to_json(c.i1_mu())},
                  {"g1", vec_to_json(c.i1_g1())},
                  {"g2", vec_to_json(c.i1_g2())}};
    if (c.ker_i2_integral()) {
        json ker = json::array();
        for (const IntVec& v : *c.ker_i2_integral()) ker.push_back(vec_to_json(v));
        comp["ker_i2_integral"] = ker;
    }
    j["complement"] = comp;

    if (c.ambient()) j["ambient"] = ambient_to_json(*c.ambient());

    if (!doc.framings.empty()) {
        json fr = json::object();
        for (const auto& [name, f] : doc.framings)
            fr[name] = json::array({vec_to_json(f.v1()), vec_to_json(f.v2())});
        j["framings"] = fr;
    }
    if (!doc.surgeries.empty()) {
        json su = json::array();
        for (const NamedSurgery& ns : doc.surgeries)
            su.push_back({{"p", int_to_json(ns.spec.p)},
                          {"k", int_to_json(ns.spec.k)},
                          {"gamma", json::array({int_to_json(ns.spec.gamma_a),
                                                 int_to_json(ns.spec.gamma_b)})},
                          {"framing", ns.framing}});
        j["surgeries"] = su;
    }
    return j;
}

InstanceDocument entry_to_instance(const CatalogEntry& entry) {
    InstanceDocument doc{entry.complement, entry.framings, {}};
    for (const ExpectedSurgery& es : entry.expected_surgeries)
        doc.surgeries.push_back({es.spec, es.framing});
    return doc;
}

}  // namespace torsur

#include "vstrata/json_io.hpp"

#include "vstrata/errors.hpp"

namespace vstrata {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object()) throw InputError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(where + ": missing field '" + key + "'");
    return *it;
}

unsigned count_field(const Json& j, const char* key, const std::string& where)
{
    const Json& v = field(j, key, where);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw InputError(where + "." + key + ": expected a non-negative integer");
    }
    return v.get<unsigned>();
}

Rational rational_from_json(const Json& j, const std::string& where)
{
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long>());
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
    throw InputError(where + ": expected a rational string \"p/q\" or an integer");
}

Json ranks_to_json(const std::vector<std::size_t>& r)
{
    Json out = Json::array();
    for (auto v : r) out.push_back(v);
    return out;
}

} // namespace

Json vector_to_json(const QVector& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_canonical_string(x));
    return out;
}

QVector vector_from_json(const Json& j, const std::string& where)
{
    if (!j.is_array()) throw InputError(where + ": expected an array");
    QVector out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Json form_to_json(const Form& f)
{
    return Json{{"m", f.m()}, {"d", f.d()}, {"coeffs", vector_to_json(f.coeffs())}, {"order", "grlex"}};
}

Form form_from_json(const Json& j)
{
    const unsigned m = count_field(j, "m", "form");
    const unsigned d = count_field(j, "d", "form");
    if (j.contains("order") && j["order"] != "grlex") throw InputError("form.order: only \"grlex\" is supported");
    return Form(m, d, vector_from_json(field(j, "coeffs", "form"), "form.coeffs"));
}

Json component_to_json(const ComponentSpec& c)
{
    return std::visit(
        overloaded{
            [](const Reduced& r) { return Json{{"kind", "reduced"}, {"point", vector_to_json(r.point)}}; },
            [](const Jet& jet) {
                Json coeffs = Json::array();
                for (const auto& v : jet.curve_coeffs) coeffs.push_back(vector_to_json(v));
                return Json{{"kind", "jet"}, {"curve_coeffs", coeffs}, {"length", jet.length}};
            },
            [](const FatPoint& f) {
                return Json{{"kind", "fat"}, {"point", vector_to_json(f.point)}, {"multiplicity", f.multiplicity}};
            },
            [](const TwoThreePoint& p) {
                return Json{{"kind", "two_three"},
                            {"point", vector_to_json(p.point)},
                            {"line_direction", vector_to_json(p.line_direction)}};
            },
        },
        c);
}

Json scheme_to_json(const SchemeSpec& z)
{
    Json comps = Json::array();
    for (const auto& c : z.components) comps.push_back(component_to_json(c));
    return Json{{"m", z.m}, {"components", comps}};
}

SchemeSpec scheme_from_json(const Json& j)
{
    SchemeSpec z;
    z.m = count_field(j, "m", "scheme");
    const Json& comps = field(j, "components", "scheme");
    if (!comps.is_array()) throw InputError("scheme.components: expected an array");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string where = "components[" + std::to_string(i) + "]";
        const Json& c = comps[i];
        const Json& kind_json = field(c, "kind", where);
        if (!kind_json.is_string()) throw InputError(where + ".kind: expected a string");
        const std::string kind = kind_json.get<std::string>();
        if (kind == "reduced") {
            z.components.emplace_back(Reduced{vector_from_json(field(c, "point", where), where + ".point")});
        } else if (kind == "jet") {
            const Json& coeffs = field(c, "curve_coeffs", where);
            if (!coeffs.is_array()) throw InputError(where + ".curve_coeffs: expected an array");
            Jet jet;
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                jet.curve_coeffs.push_back(vector_from_json(coeffs[k], where + ".curve_coeffs[" + std::to_string(k) + "]"));
            }
            jet.length = count_field(c, "length", where);
            if (jet.curve_coeffs.empty()) throw InputError(where + ".curve_coeffs: empty");
            z.components.emplace_back(std::move(jet));
        } else if (kind == "fat") {
            z.components.emplace_back(
                FatPoint{vector_from_json(field(c, "point", where), where + ".point"), count_field(c, "multiplicity", where)});
        } else if (kind == "two_three") {
            z.components.emplace_back(TwoThreePoint{vector_from_json(field(c, "point", where), where + ".point"),
                                                    vector_from_json(field(c, "line_direction", where),
                                                                     where + ".line_direction")});
        } else {
            throw InputError(where + ".kind: unknown kind '" + kind + "'");
        }
    }
    validate(z);
    return z;
}

Json label_to_json(const StratumLabel& l)
{
    return Json(l.parts());
}

Json decomposition_to_json(const DecompositionRecord& r)
{
    Json summands = Json::array();
    for (const auto& s : r.summands()) {
        Json item{{"coefficient", to_canonical_string(s.coefficient)},
                  {"shape", to_string(s.shape)},
                  {"linear", vector_to_json(s.base.coeffs())}};
        if (s.linear) item["factor"] = vector_to_json(s.linear->coeffs());
        if (s.quadric) item["quadric"] = form_to_json(*s.quadric);
        summands.push_back(std::move(item));
    }
    return Json{{"target", form_to_json(r.target())}, {"summands", summands}, {"size", r.size()}};
}

Json certificate_to_json(const Certificate& c)
{
    Json claims = Json::array();
    for (const auto& claim : c.claims) {
        claims.push_back(Json{{"statement", claim.statement}, {"ranks", ranks_to_json(claim.ranks)}, {"passed", claim.passed}});
    }
    Json out{{"kind", to_string(c.kind)}, {"value", c.value}, {"scope", c.scope}, {"claims", claims},
             {"notes", c.notes}};
    if (c.scheme) out["scheme"] = scheme_to_json(*c.scheme);
    if (c.decomposition) out["decomposition"] = decomposition_to_json(*c.decomposition);
    if (c.seed) out["seed"] = *c.seed;
    if (c.border_rank) out["border_rank"] = *c.border_rank;
    if (c.rank) out["rank"] = *c.rank;
    return out;
}

Json report_to_json(const StratificationReport& r)
{
    Json labels = Json::array();
    for (const auto& l : r.labels) {
        Json closure = Json::array();
        for (const auto& o : l.in_closure_of) closure.push_back(label_to_json(o));
        Json item{{"parts", label_to_json(l.label)},
                  {"hilb_dim", l.hilb_dim},
                  {"sigma_dim", l.sigma_dim},
                  {"codim", l.hilb_codim},
                  {"lex_rank", l.lex_rank},
                  {"closure", closure}};
        if (l.has_dagger_codim) item["dagger_codim"] = l.dagger_codim;
        labels.push_back(std::move(item));
    }
    Json codim_one = Json::array();
    for (const auto& l : r.codim_one_dagger) codim_one.push_back(label_to_json(l));
    return Json{{"m", r.m},
                {"d", r.d},
                {"t", r.t},
                {"labels", labels},
                {"true_stratification", r.true_stratification},
                {"uniqueness_regime", r.uniqueness_regime},
                {"codim_one_dagger", codim_one},
                {"lex_rank_note", "lexicographic order is an artificial tie-break"},
                {"closure_note", "closure lists only proven inclusions; other pairs are unknown"}};
}

Json terracini_to_json(const TerraciniResult& r)
{
    Json out{{"kind", to_string(r.kind)},
             {"t", r.t},
             {"dim", r.dim},
             {"expected", r.expected},
             {"h1", r.h1},
             {"scheme_degree", r.scheme_degree},
             {"certificate", certificate_to_json(r.certificate)}};
    if (r.triple_point_h1) out["triple_point_h1"] = *r.triple_point_h1;
    if (r.size_condition) out["size_condition"] = *r.size_condition;
    return out;
}

Json gamma_to_json(const GammaReport& r)
{
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json item{{"name", e.name},
                  {"label", label_to_json(e.label)},
                  {"dim", e.dim_direct},
                  {"codim", e.codim},
                  {"expected_codim", e.expected_codim},
                  {"sigma_dim_formula", e.sigma_dim_formula},
                  {"lemma_h1", e.lemma_h1},
                  {"lemma_scheme", e.lemma_scheme}};
        if (e.dim_interpolation) item["dim_interpolation"] = *e.dim_interpolation;
        entries.push_back(std::move(item));
    }
    return Json{{"m", r.m},
                {"d", r.d},
                {"t", r.t},
                {"alpha", r.alpha},
                {"beta", r.beta},
                {"secant_dim", r.secant_dim},
                {"entries", entries},
                {"certificate", certificate_to_json(r.certificate)}};
}

Json sylvester_to_json(const SylvesterResult& r)
{
    Json out{{"rank", r.rank}, {"apolar_form", form_to_json(r.apolar_form)}, {"field", r.field}};
    if (r.decomposition) out["decomposition"] = decomposition_to_json(*r.decomposition);
    return out;
}

Json construction_to_json(const Construction& c)
{
    Json out{{"scheme", scheme_to_json(c.scheme)}, {"point", form_to_json(c.point)},
             {"certificate", certificate_to_json(c.certificate)}};
    if (c.other_scheme) out["other_scheme"] = scheme_to_json(*c.other_scheme);
    if (c.decomposition) out["decomposition"] = decomposition_to_json(*c.decomposition);
    return out;
}

Json parse_json_text(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

} // namespace vstrata

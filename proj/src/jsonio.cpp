#include "gdua/jsonio.hpp"

#include "gdua/text.hpp"

namespace gdua {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Json rat_to_json(const BigRat& q) {
    return Json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

BigRat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return BigRat(j.get<long long>());
    if (j.is_string()) {
        Scalar s = parse_scalar(j.get<std::string>());
        if (!s.is_rational()) throw Error(Errc::config_error, "expected a rational value");
        return s.a_part();
    }
    if (j.is_object()) {
        BigInt num(j.at("num").is_string() ? BigInt(j.at("num").get<std::string>())
                                           : BigInt(j.at("num").get<long long>()));
        BigInt den(1);
        if (j.contains("den"))
            den = j.at("den").is_string() ? BigInt(j.at("den").get<std::string>())
                                          : BigInt(j.at("den").get<long long>());
        if (den == 0) throw Error(Errc::config_error, "zero denominator in JSON rational");
        return BigRat(num, den);
    }
    throw Error(Errc::config_error, "malformed rational in JSON");
}

} // namespace

Json scalar_to_json(const Scalar& x) {
    if (x.is_rational()) return rat_to_json(x.a_part());
    return Json{{"a", rat_to_json(x.a_part())},
                {"b", rat_to_json(x.b_part())},
                {"D", x.extension_d()}};
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long long>());
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_object() && j.contains("D"))
        return Scalar::quadratic(rat_from_json(j.at("a")), rat_from_json(j.at("b")),
                                 j.at("D").get<long long>());
    if (j.is_object() && j.contains("num")) return Scalar(rat_from_json(j));
    throw Error(Errc::config_error, "malformed scalar in JSON");
}

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (int i = 0; i <= std::max(p.degree(), -1); ++i) arr.push_back(scalar_to_json(p.coeff(i)));
    return arr;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw Error(Errc::config_error, "polynomial must be a coefficient array");
    std::vector<Scalar> coeffs;
    for (const auto& c : j) coeffs.push_back(scalar_from_json(c));
    return Poly(std::move(coeffs));
}

Json element_to_json(const Element& x) {
    Json terms = Json::array();
    for (const auto& [m, c] : x.terms())
        terms.push_back(Json{{"u", m.u}, {"h", m.h}, {"d", m.d}, {"coef", scalar_to_json(c)}});
    return Json{{"terms", terms}};
}

Element element_from_json(const Json& j) {
    Element out;
    for (const auto& t : j.at("terms"))
        out.add_term({t.at("u").get<long>(), t.at("h").get<long>(), t.at("d").get<long>()},
                     scalar_from_json(t.at("coef")));
    return out;
}

Json presentation_to_json(const Presentation& p) {
    return Json{{"f", poly_to_json(p.f)},
                {"r", scalar_to_json(p.r)},
                {"s", scalar_to_json(p.s)},
                {"gamma", scalar_to_json(p.gamma)}};
}

Presentation presentation_from_json(const Json& j) {
    if (!j.is_object()) throw Error(Errc::config_error, "preset must be a JSON object");
    Poly f = j.contains("f") ? poly_from_json(j.at("f")) : Poly();
    Scalar r = j.contains("r") ? scalar_from_json(j.at("r")) : Scalar(0);
    Scalar s = j.contains("s") ? scalar_from_json(j.at("s")) : Scalar(0);
    Scalar gamma = j.contains("gamma") ? scalar_from_json(j.at("gamma")) : Scalar(0);
    return Presentation(std::move(f), std::move(r), std::move(s), std::move(gamma));
}

Json automorphism_to_json(const Automorphism& a) {
    auto images = [](const MorphismImages& m) {
        return Json{{"d", to_string(m.d_img)}, {"u", to_string(m.u_img)}, {"h", to_string(m.h_img)}};
    };
    return Json{{"label", a.label},
                {"images", images(a.images)},
                {"inverse_images", images(a.inverse_images)}};
}

Json group_description_to_json(const GroupDescription& d) {
    Json gens = Json::array();
    for (const auto& g : d.generators) {
        Json roots = Json::array();
        for (const auto& r : g.alpha_roots) roots.push_back(to_string(r));
        Json entry{{"kind", g.kind}, {"params", g.params}, {"constraint", g.constraint}};
        if (!roots.empty()) entry["alpha_roots"] = roots;
        gens.push_back(std::move(entry));
    }
    Json out{{"case", d.clause},
             {"group", d.symbolic_group},
             {"tau", d.te.tau},
             {"epsilon", d.te.epsilon}};
    if (d.rho)
        out["rho"] = *d.rho;
    else
        out["rho"] = nullptr;
    out["generators"] = std::move(gens);
    if (d.down_up) out["externally_justified"] = d.externally_justified;
    return out;
}

} // namespace gdua

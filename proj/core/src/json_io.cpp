#include "hurwitz/json_io.hpp"

#include <json.hpp>

#include "hurwitz/errors.hpp"

namespace hurwitz {
namespace json_io {

using json = nlohmann::ordered_json;

namespace {

json partition_to(const Partition& p) { return json(p.parts()); }

Partition partition_from(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

json series_to(const LaurentSeries& s) {
    json coeffs = json::array();
    for (int k = -s.pole_order(); k <= s.order(); ++k)
        coeffs.push_back(rat_to_string(s.coeff(k)));
    return json{{"pole_order", s.pole_order()}, {"coeffs", coeffs}};
}

LaurentSeries series_from(const json& j) {
    int pole = j.at("pole_order").get<int>();
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rat_from_string(c.get<std::string>()));
    int order = static_cast<int>(coeffs.size()) - pole - 1;
    return LaurentSeries(pole, order, std::move(coeffs));
}

json multipoly_to(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [exps, c] : p.terms())
        terms.push_back(json{{"exponents", exps}, {"coeff", rat_to_string(c)}});
    return terms;
}

MultiPoly multipoly_from(const json& j, int nvars) {
    MultiPoly p(nvars);
    for (const auto& term : j)
        p.add_term(term.at("exponents").get<std::vector<int>>(),
                   rat_from_string(term.at("coeff").get<std::string>()));
    return p;
}

json closed_form_to(const patterns::ClosedForm& cf) {
    json pats = json::array();
    for (const patterns::CommutationPattern& p : cf.patterns) {
        json steps = json::array();
        for (const patterns::Step& s : p)
            steps.push_back(json{{"I", s.I}, {"J", s.J}, {"K", s.K}, {"L", s.L}});
        pats.push_back(json{{"steps", steps},
                            {"sigma_args", patterns::sigma_args(p, cf.input)}});
    }
    return json{{"mu", partition_to(cf.input.mu)},
                {"nu", partition_to(cf.input.nu)},
                {"ordering", json{{"mu", cf.mu_order}, {"nu", cf.nu_order}}},
                {"patterns", pats}};
}

patterns::ClosedForm closed_form_from(const json& j) {
    patterns::ClosedForm cf{HurwitzInput(partition_from(j.at("mu")), partition_from(j.at("nu"))),
                            j.at("ordering").at("mu").get<std::vector<int>>(),
                            j.at("ordering").at("nu").get<std::vector<int>>(),
                            {}};
    for (const auto& pat : j.at("patterns")) {
        patterns::CommutationPattern p;
        for (const auto& s : pat.at("steps"))
            p.push_back(patterns::Step{s.at("I").get<uint32_t>(), s.at("J").get<uint32_t>(),
                                       s.at("K").get<uint32_t>(), s.at("L").get<uint32_t>()});
        cf.patterns.push_back(std::move(p));
    }
    return cf;
}

}  // namespace

std::string partition_json(const Partition& p) { return partition_to(p).dump(); }

Partition partition_from_json(const std::string& text) {
    return partition_from(json::parse(text));
}

std::string series_json(const LaurentSeries& s) { return series_to(s).dump(); }

LaurentSeries series_from_json(const std::string& text) {
    return series_from(json::parse(text));
}

std::string multipoly_json(const MultiPoly& p) { return multipoly_to(p).dump(); }

MultiPoly multipoly_from_json(const std::string& text, int nvars) {
    return multipoly_from(json::parse(text), nvars);
}

std::string closed_form_json(const patterns::ClosedForm& cf) {
    return closed_form_to(cf).dump();
}

patterns::ClosedForm closed_form_from_json(const std::string& text) {
    return closed_form_from(json::parse(text));
}

std::string chamber_polynomial_json(const chambers::ChamberPolynomial& cp) {
    json components = json::object();
    for (size_t k = 0; k < cp.components.size(); ++k)
        components[std::to_string(k)] = multipoly_to(cp.components[k]);
    json out{{"m", cp.m},
             {"n", cp.n},
             {"g", cp.g},
             {"chamber", json{{"signs", cp.chamber.signs}}},
             {"full", multipoly_to(cp.full)},
             {"components", components}};
    return out.dump();
}

std::string spp_report_json(const chambers::SppReport& rep) {
    return json{{"ok", rep.ok}, {"checks", rep.lines}}.dump();
}

}  // namespace json_io
}  // namespace hurwitz

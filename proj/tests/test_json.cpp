#include <doctest.h>

#include <fstream>
#include <regex>
#include <string>

#include <json.hpp>

#include <hurwitz/chambers.hpp>
#include <hurwitz/json_io.hpp>
#include <hurwitz/patterns.hpp>

using namespace hurwitz;
using nlohmann::json;

namespace {

// Minimal structural validator for the subset of JSON Schema the shipped
// schemas use: type, required, properties, items, additionalProperties,
// pattern, minimum.
bool validates(const json& value, const json& schema) {
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        if (t == "object" && !value.is_object()) return false;
        if (t == "array" && !value.is_array()) return false;
        if (t == "string" && !value.is_string()) return false;
        if (t == "integer" && !value.is_number_integer()) return false;
        if (t == "number" && !value.is_number()) return false;
        if (t == "boolean" && !value.is_boolean()) return false;
    }
    if (schema.contains("pattern") && value.is_string()) {
        std::regex re(schema["pattern"].get<std::string>());
        if (!std::regex_search(value.get<std::string>(), re)) return false;
    }
    if (schema.contains("minimum") && value.is_number_integer()) {
        if (value.get<long long>() < schema["minimum"].get<long long>()) return false;
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!value.contains(key.get<std::string>())) return false;
    if (schema.contains("properties") && value.is_object())
        for (const auto& [key, sub] : schema["properties"].items())
            if (value.contains(key) && !validates(value.at(key), sub)) return false;
    if (schema.contains("additionalProperties") && schema["additionalProperties"].is_object() &&
        value.is_object()) {
        const json& props =
            schema.contains("properties") ? schema["properties"] : json::object();
        for (const auto& [key, sub] : value.items())
            if (!props.contains(key) && !validates(sub, schema["additionalProperties"]))
                return false;
    }
    if (schema.contains("items") && value.is_array())
        for (const auto& element : value)
            if (!validates(element, schema["items"])) return false;
    return true;
}

json load_schema(const std::string& name) {
    std::ifstream f(std::string(SCHEMA_DIR) + "/" + name);
    REQUIRE(f.good());
    return json::parse(f);
}

}  // namespace

TEST_CASE("partition serialization round trips") {
    Partition p({5, 3, 1});
    std::string text = json_io::partition_json(p);
    CHECK(text == "[5,3,1]");
    CHECK(json_io::partition_from_json(text) == p);
    CHECK(json_io::partition_json(Partition{}) == "[]");
}

TEST_CASE("series serialization round trips and validates") {
    HurwitzInput in{Partition({5, 2}), Partition({4, 3})};
    LaurentSeries s = patterns::evaluate_series(patterns::closed_form(in), in, 8);
    std::string text = json_io::series_json(s);
    CHECK(json_io::series_from_json(text) == s);
    CHECK(validates(json::parse(text), load_schema("series.schema.json")));
    LaurentSeries inv = inv_sigma_series(Rat(3), 6);
    std::string text2 = json_io::series_json(inv);
    CHECK(json_io::series_from_json(text2) == inv);
    CHECK(validates(json::parse(text2), load_schema("series.schema.json")));
}

TEST_CASE("polynomial serialization round trips and validates") {
    HurwitzInput in{Partition({5, 2}), Partition({4, 3})};
    chambers::ChamberPolynomial cp = chambers::symbolic_polynomial(in, 1);
    std::string text = json_io::multipoly_json(cp.full);
    CHECK(json_io::multipoly_from_json(text, cp.full.nvars()) == cp.full);
    CHECK(validates(json::parse(text), load_schema("multipoly.schema.json")));
    std::string cp_text = json_io::chamber_polynomial_json(cp);
    CHECK(validates(json::parse(cp_text), load_schema("chamber_polynomial.schema.json")));
}

TEST_CASE("closed form serialization round trips and validates") {
    HurwitzInput in{Partition({5, 2}), Partition({4, 3})};
    patterns::ClosedForm cf = patterns::closed_form(in, {0, 1}, {0, 1});
    std::string text = json_io::closed_form_json(cf);
    patterns::ClosedForm back = json_io::closed_form_from_json(text);
    CHECK(back.input.mu == cf.input.mu);
    CHECK(back.input.nu == cf.input.nu);
    CHECK(back.mu_order == cf.mu_order);
    CHECK(back.nu_order == cf.nu_order);
    CHECK(back.patterns == cf.patterns);
    CHECK(validates(json::parse(text), load_schema("closed_form.schema.json")));
}

TEST_CASE("schema validator rejects malformed documents") {
    json schema = load_schema("series.schema.json");
    CHECK(!validates(json::parse(R"({"coeffs": ["1"]})"), schema));
    CHECK(!validates(json::parse(R"({"pole_order": 0, "coeffs": [1]})"), schema));
    CHECK(!validates(json::parse(R"({"pole_order": 0, "coeffs": ["x"]})"), schema));
    CHECK(validates(json::parse(R"({"pole_order": 1, "coeffs": ["-3/2", "0"]})"), schema));
}

TEST_CASE("determinism: identical inputs give byte-identical output") {
    HurwitzInput in{Partition({5, 2}), Partition({4, 3})};
    CHECK(json_io::closed_form_json(patterns::closed_form(in)) ==
          json_io::closed_form_json(patterns::closed_form(in)));
    chambers::ChamberPolynomial cp1 = chambers::symbolic_polynomial(in, 1);
    chambers::ChamberPolynomial cp2 = chambers::symbolic_polynomial(in, 1);
    CHECK(json_io::chamber_polynomial_json(cp1) == json_io::chamber_polynomial_json(cp2));
}

#include "dyckset/serialize.hpp"

#include <nlohmann/json.hpp>

namespace dyckset {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<Rational> parse_element_array(const json& doc, const char* field) {
    if (!doc.contains(field))
        throw ParseError(std::string("missing field \"") + field + "\"");
    const json& array = doc.at(field);
    if (!array.is_array())
        throw ParseError(std::string("field \"") + field + "\" must be an array of strings");
    std::vector<Rational> elements;
    elements.reserve(array.size());
    for (const json& item : array) {
        if (!item.is_string())
            throw ParseError(std::string("field \"") + field + "\" must contain only strings");
        try {
            elements.push_back(parse_rational(item.get<std::string>()));
        } catch (const ParseError& e) {
            throw ParseError(std::string("field \"") + field + "\": " + e.what());
        }
    }
    return elements;
}

std::string require_string(const json& doc, const char* field) {
    if (!doc.contains(field))
        throw ParseError(std::string("missing field \"") + field + "\"");
    if (!doc.at(field).is_string())
        throw ParseError(std::string("field \"") + field + "\" must be a string");
    return doc.at(field).get<std::string>();
}

}  // namespace

std::string set_to_json(const ScaledSet& set, const LambdaParam& lambda) {
    ordered_json doc;
    doc["mode"] = set.mode() == SetMode::Power ? "power" : "plain";
    doc["lambda"] = lambda.is_symbolic() ? "symbolic" : rational_to_string(lambda.value());
    ordered_json elements = ordered_json::array();
    for (const Rational& element : set.elements()) elements.push_back(rational_to_string(element));
    doc[set.mode() == SetMode::Power ? "exponents" : "elements"] = std::move(elements);
    return doc.dump();
}

std::pair<ScaledSet, LambdaParam> set_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("set document must be a JSON object");

    const std::string mode = require_string(doc, "mode");
    if (mode != "power" && mode != "plain")
        throw ParseError("field \"mode\" must be \"power\" or \"plain\", got \"" + mode + "\"");
    const bool power = mode == "power";

    const std::string lambda_text = require_string(doc, "lambda");
    LambdaParam lambda = LambdaParam::symbolic();
    if (lambda_text == "symbolic") {
        if (!power) throw ModeMismatchError("plain-mode set requires a rational lambda");
    } else {
        Rational value;
        try {
            value = parse_rational(lambda_text);
        } catch (const ParseError& e) {
            throw ParseError(std::string("field \"lambda\": ") + e.what());
        }
        if (value <= 1)
            throw ParseError("field \"lambda\" must be > 1, got \"" + lambda_text + "\"");
        lambda = LambdaParam::rational(std::move(value));
    }

    const char* element_field = power ? "exponents" : "elements";
    for (const auto& [key, unused] : doc.items()) {
        if (key != "mode" && key != "lambda" && key != element_field)
            throw ParseError("unexpected field \"" + key + "\"");
    }

    std::vector<Rational> elements = parse_element_array(doc, element_field);
    if (power) return {ScaledSet::power(std::move(elements)), std::move(lambda)};
    try {
        return {ScaledSet::plain(std::move(elements)), std::move(lambda)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("field \"elements\": ") + e.what());
    }
}

}  // namespace dyckset

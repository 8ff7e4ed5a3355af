#pragma once

#include <initializer_list>
#include <string>

#include <nlohmann/json.hpp>

#include "tqft/error.hpp"

namespace tqft::detail {

using nlohmann::json;

inline json parse_document(const std::string& text, const char* what)
{
    try {
        json doc = json::parse(text);
        if (!doc.is_object()) throw ParseError(std::string(what) + ": top level must be an object");
        return doc;
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": syntax error: " + e.what());
    }
}

inline void check_fields(const json& doc, std::initializer_list<const char*> required,
                         std::initializer_list<const char*> optional, const char* what)
{
    for (const char* key : required)
        if (!doc.contains(key)) throw ParseError(std::string(what) + ": missing field '" + key + "'");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        bool known = false;
        for (const char* key : required) known = known || it.key() == key;
        for (const char* key : optional) known = known || it.key() == key;
        if (!known) throw ParseError(std::string(what) + ": unknown field '" + it.key() + "'");
    }
}

template <class T>
T get_as(const json& v, const char* what)
{
    try {
        return v.get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

} // namespace tqft::detail

#pragma once

#include "fmz/cubes.hpp"
#include "fmz/field.hpp"
#include "fmz/reduction.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <variant>

namespace fmz {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatTag = "fmz-1";

// Parses JSON text; syntax errors become ParseError with the byte position.
Json parse_json(const std::string& text);

// Integers that fit in 64 bits are written as JSON numbers, others as decimal strings.
Json to_json(const Int& v);
Json to_json(const Rat& v);

Int int_from_json(const Json& j);
Rat rat_from_json(const Json& j);

// {"format": "fmz-1", "kind": ..., "scalars": "int"|"rat", "alpha", "beta", "A": [...], "B": [...]}.
// A and B are flat coordinate lists (diagonal, then x, y, z) or objects with
// optional "diag", "x", "y", "z" arrays.
Json to_json(const Freud<Int>& x);
Json to_json(const Freud<Rat>& x);

using AnyElement = std::variant<Freud<Int>, Freud<Rat>>;

// "scalars" defaults to "int"; forced_scalars overrides it when non-empty.
AnyElement element_from_json(const Json& j, const std::string& forced_scalars = "");
Freud<Int> int_element_from_json(const Json& j);

template <class S>
Json jordan_to_json(const Jordan<S>& X) {
    Json a = Json::array();
    for (const auto& c : X.coords()) a.push_back(to_json(c));
    return a;
}

Json to_json(const StructureMap<Int>& s);
Json to_json(const StructureMap<Rat>& s);
Json to_json(const Word<Int>& w);
Json to_json(const Word<Rat>& w);

Word<Int> word_from_json(const Json& j, JordanKind kind);

Json to_json(const Cube<Int>& c);
Cube<Int> cube_from_json(const Json& j);
Json to_json(const WedgeElement& w);
Json to_json(const BinaryQuadraticForm<Int>& f);
Json to_json(const InvariantVector& v);
Json to_json(const OrbitLabel& label);

}  // namespace fmz

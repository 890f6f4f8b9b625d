#include "fmz/jordan.hpp"

namespace fmz {

const char* kind_name(JordanKind k) {
    switch (k) {
        case JordanKind::Diag3: return "Diag3";
        case JordanKind::H3F: return "H3F";
        case JordanKind::H3B: return "H3B";
        case JordanKind::H3H: return "H3H";
        case JordanKind::H3O: return "H3O";
    }
    return "?";
}

JordanKind parse_kind(const std::string& name) {
    if (name == "Diag3") return JordanKind::Diag3;
    if (name == "H3F") return JordanKind::H3F;
    if (name == "H3B") return JordanKind::H3B;
    if (name == "H3H") return JordanKind::H3H;
    if (name == "H3O") return JordanKind::H3O;
    throw DomainError("unknown Jordan kind '" + name + "'");
}

}  // namespace fmz

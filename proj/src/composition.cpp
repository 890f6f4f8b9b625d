#include "fmz/composition.hpp"

namespace fmz {

const char* algebra_name(Algebra a) {
    switch (a) {
        case Algebra::F: return "F";
        case Algebra::B: return "B";
        case Algebra::H: return "H";
        case Algebra::O: return "O";
    }
    return "?";
}

Algebra parse_algebra(const std::string& name) {
    if (name == "F") return Algebra::F;
    if (name == "B") return Algebra::B;
    if (name == "H") return Algebra::H;
    if (name == "O") return Algebra::O;
    throw DomainError("unknown composition algebra '" + name + "'");
}

}  // namespace fmz

#include "fmz/cubes.hpp"

#include <algorithm>

namespace fmz {

bool correspondence_check(const Freud<Int>& x) {
    auto r = rotation_forms(x);
    auto q = slicing_forms(to_cube(x));
    auto key = [](const BinaryQuadraticForm<Int>& f) { return std::array<Int, 3>{f.a, f.b, f.c}; };
    std::array<std::array<Int, 3>, 3> kr, kq;
    for (int i = 0; i < 3; ++i) {
        kr[i] = key(r[i]);
        kq[i] = key(q[i]);
    }
    std::sort(kr.begin(), kr.end());
    std::sort(kq.begin(), kq.end());
    return kr == kq;
}

bool rotation_forms_primitive(const Freud<Int>& x) {
    auto r = rotation_forms(x);
    return std::all_of(r.begin(), r.end(), [](const auto& f) { return is_primitive(f); });
}

std::string to_string(const BinaryQuadraticForm<Int>& f) {
    return "(" + f.a.get_str() + ", " + f.b.get_str() + ", " + f.c.get_str() + ")";
}

}  // namespace fmz

#include "fmz/io.hpp"

#include <algorithm>

namespace fmz {

namespace {

template <class S>
Json comp_to_json(const Comp<S>& c) {
    Json a = Json::array();
    for (int m = 0; m < c.dim(); ++m) a.push_back(to_json(c[m]));
    return a;
}

template <class S>
Json matrix_to_json(const Matrix<S>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

template <class S>
Json map_to_json(const StructureMap<S>& s) {
    Json moves = Json::array();
    for (const auto& mv : s.moves()) {
        std::visit(
            [&](const auto& m) {
                using T = std::decay_t<decltype(m)>;
                Json o;
                if constexpr (std::is_same_v<T, Permute>) {
                    o["move"] = "permute";
                    o["sigma"] = {m.sigma[0], m.sigma[1], m.sigma[2]};
                } else if constexpr (std::is_same_v<T, DiagUnits<S>>) {
                    o["move"] = "units";
                    o["u"] = Json::array({comp_to_json(m.u[0]), comp_to_json(m.u[1]), comp_to_json(m.u[2])});
                } else if constexpr (std::is_same_v<T, Congruence<S>>) {
                    o["move"] = "congruence";
                    o["i"] = m.i;
                    o["j"] = m.j;
                    o["c"] = comp_to_json(m.c);
                } else if constexpr (std::is_same_v<T, Negate>) {
                    o["move"] = "negate";
                } else if constexpr (std::is_same_v<T, Transpose>) {
                    o["move"] = "transpose";
                } else {
                    o["move"] = "matrix_pair";
                    o["left"] = matrix_to_json(m.left);
                    o["right"] = matrix_to_json(m.right);
                }
                moves.push_back(o);
            },
            mv);
    }
    return moves;
}

template <class S>
Json word_to_json(const Word<S>& w) {
    Json a = Json::array();
    for (const auto& g : w) {
        std::visit(
            [&](const auto& gen) {
                using T = std::decay_t<decltype(gen)>;
                Json o;
                if constexpr (std::is_same_v<T, Phi<S>>) {
                    o["gen"] = "phi";
                    o["C"] = jordan_to_json(gen.C);
                } else if constexpr (std::is_same_v<T, Psi<S>>) {
                    o["gen"] = "psi";
                    o["D"] = jordan_to_json(gen.D);
                } else if constexpr (std::is_same_v<T, Struct<S>>) {
                    o["gen"] = "T";
                    o["moves"] = map_to_json(gen.map);
                } else {
                    o["gen"] = "tau";
                }
                a.push_back(o);
            },
            g);
    }
    return a;
}

template <class S>
Json element_to_json(const Freud<S>& x, const char* scalars) {
    Json j;
    j["format"] = kFormatTag;
    j["kind"] = kind_name(x.kind());
    j["scalars"] = scalars;
    j["alpha"] = to_json(x.alpha);
    j["beta"] = to_json(x.beta);
    j["A"] = jordan_to_json(x.A);
    j["B"] = jordan_to_json(x.B);
    return j;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

template <class S>
S scalar_from_json(const Json& j) {
    if constexpr (std::is_same_v<S, Int>) {
        return int_from_json(j);
    } else {
        return rat_from_json(j);
    }
}

template <class S>
std::vector<S> scalars_from_json(const Json& j, std::size_t expected, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    if (j.size() != expected) {
        throw DomainError(std::string(what) + " has " + std::to_string(j.size()) + " entries, expected " +
                          std::to_string(expected));
    }
    std::vector<S> v;
    for (const auto& e : j) v.push_back(scalar_from_json<S>(e));
    return v;
}

template <class S>
Jordan<S> jordan_from_json(const Json& j, JordanKind k) {
    if (j.is_array()) return Jordan<S>::from_coords(k, scalars_from_json<S>(j, kind_dim(k), "Jordan coordinates"));
    if (!j.is_object()) throw ParseError("a Jordan element must be an array or an object");
    Jordan<S> X(k);
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key == "diag") {
            auto d = scalars_from_json<S>(*it, 3, "diag");
            for (int i = 0; i < 3; ++i) X.diag(i) = d[i];
            continue;
        }
        int slot = key == "x" ? 0 : key == "y" ? 1 : key == "z" ? 2 : -1;
        if (slot < 0) throw ParseError("unknown Jordan field \"" + key + "\"");
        if (k == JordanKind::Diag3) throw DomainError("Diag3 elements have no off-diagonal entries");
        int cd = algebra_dim(kind_algebra(k));
        auto v = scalars_from_json<S>(*it, static_cast<std::size_t>(cd), key.c_str());
        for (int m = 0; m < cd; ++m) X.off(slot)[m] = v[m];
    }
    return X;
}

template <class S>
Freud<S> typed_element_from_json(const Json& j, JordanKind k) {
    Freud<S> x(k);
    if (j.contains("alpha")) x.alpha = scalar_from_json<S>(j["alpha"]);
    if (j.contains("beta")) x.beta = scalar_from_json<S>(j["beta"]);
    if (j.contains("A")) x.A = jordan_from_json<S>(j["A"], k);
    if (j.contains("B")) x.B = jordan_from_json<S>(j["B"], k);
    return x;
}

Comp<Int> comp_from_json(const Json& j, Algebra a) {
    auto v = scalars_from_json<Int>(j, static_cast<std::size_t>(algebra_dim(a)), "composition element");
    Comp<Int> c(a);
    for (int m = 0; m < algebra_dim(a); ++m) c[m] = v[m];
    return c;
}

Matrix<Int> matrix_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("matrix must be a 3x3 array");
    Matrix<Int> m(3, 3);
    for (int i = 0; i < 3; ++i) {
        auto row = scalars_from_json<Int>(j[i], 3, "matrix row");
        for (int c = 0; c < 3; ++c) m(i, c) = row[c];
    }
    return m;
}

StructureMap<Int> map_from_json(const Json& j, JordanKind kind) {
    if (!j.is_array()) throw ParseError("moves must be an array");
    StructureMap<Int> s(kind);
    Algebra a = kind_algebra(kind);
    for (const auto& o : j) {
        std::string name = field(o, "move").get<std::string>();
        if (name == "permute") {
            Permute p;
            const Json& sig = field(o, "sigma");
            if (!sig.is_array() || sig.size() != 3) throw ParseError("sigma must have three entries");
            for (int i = 0; i < 3; ++i) p.sigma[i] = sig[i].get<int>();
            std::array<int, 3> sorted = p.sigma;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != std::array<int, 3>{0, 1, 2}) throw DomainError("sigma is not a permutation of 0, 1, 2");
            s.then(p);
        } else if (name == "units") {
            const Json& u = field(o, "u");
            if (!u.is_array() || u.size() != 3) throw ParseError("units need three entries");
            s.then(DiagUnits<Int>{{comp_from_json(u[0], a), comp_from_json(u[1], a), comp_from_json(u[2], a)}});
        } else if (name == "congruence") {
            int i = field(o, "i").get<int>();
            int jj = field(o, "j").get<int>();
            if (i < 0 || i > 2 || jj < 0 || jj > 2 || i == jj) throw DomainError("congruence needs distinct i, j in 0..2");
            s.then(Congruence<Int>{i, jj, comp_from_json(field(o, "c"), a)});
        } else if (name == "negate") {
            s.then(Negate{});
        } else if (name == "transpose") {
            s.then(Transpose{});
        } else if (name == "matrix_pair") {
            s.then(MatrixPair<Int>{matrix_from_json(field(o, "left")), matrix_from_json(field(o, "right"))});
        } else {
            throw ParseError("unknown move \"" + name + "\"");
        }
    }
    return s;
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

Json to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(static_cast<long>(v.get_si()));
    return Json(v.get_str());
}

Json to_json(const Rat& v) {
    if (v.get_den() == 1) return to_json(Int(v.get_num()));
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<unsigned long>()) : Int(j.get<long>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    if (j.is_number_float()) throw DomainError("expected an integer, got a floating-point number");
    throw ParseError("expected an integer");
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer() || (j.is_string() && j.get<std::string>().find('/') == std::string::npos)) {
        return Rat(int_from_json(j));
    }
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_float()) throw DomainError("rationals must be written as \"p/q\" strings");
    throw ParseError("expected a rational number");
}

Json to_json(const Freud<Int>& x) { return element_to_json(x, "int"); }
Json to_json(const Freud<Rat>& x) { return element_to_json(x, "rat"); }

AnyElement element_from_json(const Json& j, const std::string& forced_scalars) {
    if (!j.is_object()) throw ParseError("an element must be a JSON object");
    if (j.contains("format") && j["format"] != kFormatTag) {
        throw ParseError("unsupported format tag " + j["format"].dump());
    }
    JordanKind k = parse_kind(field(j, "kind").get<std::string>());
    std::string scalars = forced_scalars;
    if (scalars.empty()) scalars = j.contains("scalars") ? j["scalars"].get<std::string>() : "int";
    if (scalars == "int") return typed_element_from_json<Int>(j, k);
    if (scalars == "rat") return typed_element_from_json<Rat>(j, k);
    throw DomainError("unknown scalar domain \"" + scalars + "\"");
}

Freud<Int> int_element_from_json(const Json& j) {
    AnyElement e = element_from_json(j);
    if (auto* x = std::get_if<Freud<Int>>(&e)) return *x;
    throw DomainError("this operation needs integer scalars");
}

Json to_json(const StructureMap<Int>& s) { return map_to_json(s); }
Json to_json(const StructureMap<Rat>& s) { return map_to_json(s); }
Json to_json(const Word<Int>& w) { return word_to_json(w); }
Json to_json(const Word<Rat>& w) { return word_to_json(w); }

Word<Int> word_from_json(const Json& j, JordanKind kind) {
    if (!j.is_array()) throw ParseError("a word must be an array of generators");
    Word<Int> w;
    for (const auto& o : j) {
        std::string g = field(o, "gen").get<std::string>();
        if (g == "phi") {
            w.push_back(Phi<Int>{jordan_from_json<Int>(field(o, "C"), kind)});
        } else if (g == "psi") {
            w.push_back(Psi<Int>{jordan_from_json<Int>(field(o, "D"), kind)});
        } else if (g == "T") {
            w.push_back(Struct<Int>{map_from_json(field(o, "moves"), kind)});
        } else if (g == "tau") {
            w.push_back(Tau{});
        } else {
            throw ParseError("unknown generator \"" + g + "\"");
        }
    }
    return w;
}

// {"cube": [[[a, e], [c, g]], [[b, f], [d, h]]]}: cube[p][q][r] is cell (i, j, k) = (r, p, q).
Json to_json(const Cube<Int>& c) {
    Json outer = Json::array();
    for (int p = 0; p < 2; ++p) {
        Json mid = Json::array();
        for (int q = 0; q < 2; ++q) {
            Json inner = Json::array();
            for (int r = 0; r < 2; ++r) inner.push_back(to_json(c.at(r, p, q)));
            mid.push_back(inner);
        }
        outer.push_back(mid);
    }
    return Json{{"cube", outer}};
}

Cube<Int> cube_from_json(const Json& j) {
    const Json& outer = field(j, "cube");
    Cube<Int> c;
    if (!outer.is_array() || outer.size() != 2) throw ParseError("cube must be a 2x2x2 array");
    for (int p = 0; p < 2; ++p) {
        if (!outer[p].is_array() || outer[p].size() != 2) throw ParseError("cube must be a 2x2x2 array");
        for (int q = 0; q < 2; ++q) {
            auto v = scalars_from_json<Int>(outer[p][q], 2, "cube row");
            for (int r = 0; r < 2; ++r) c.at(r, p, q) = v[r];
        }
    }
    return c;
}

Json to_json(const WedgeElement& w) {
    Json a = Json::array();
    for (const auto& c : w.coords) a.push_back(to_json(c));
    return Json{{"wedge", a}};
}

Json to_json(const BinaryQuadraticForm<Int>& f) {
    return Json{{"a", to_json(f.a)}, {"b", to_json(f.b)}, {"c", to_json(f.c)}};
}

Json to_json(const InvariantVector& v) {
    return Json{{"d1", to_json(v.d1)}, {"d2", to_json(v.d2)}, {"d3", to_json(v.d3)}, {"d4", to_json(v.d4)}};
}

Json to_json(const OrbitLabel& label) {
    Json j;
    j["variant"] = variant_name(label.variant);
    switch (label.variant) {
        case OrbitLabel::Variant::Rank0: break;
        case OrbitLabel::Variant::Rank1: j["d1"] = to_json(label.d1); break;
        case OrbitLabel::Variant::Rank2:
            j["d1"] = to_json(label.d1);
            j["m"] = to_json(label.m);
            break;
        case OrbitLabel::Variant::Projective:
            j["epsilon"] = label.epsilon;
            j["k"] = to_json(label.k);
            break;
        case OrbitLabel::Variant::Unclassified: j["invariants"] = to_json(label.invariants); break;
    }
    if (label.representative) j["representative"] = to_json(*label.representative);
    return j;
}

}  // namespace fmz

#include "fmz/census.hpp"
#include "fmz/cubes.hpp"
#include "fmz/field.hpp"
#include "fmz/io.hpp"
#include "fmz/isomorphisms.hpp"
#include "fmz/reduction.hpp"
#include "fmz/selftest.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

using namespace fmz;

namespace {

struct Options {
    std::string input = "-";
    std::string kind;
    std::string scalars;
    std::optional<std::uint64_t> seed;
    long height = 1;
    std::size_t samples = 0;
    int jobs = 0;
    bool witness = false;
    bool verify = false;
    std::string out;
    std::string format = "json";
    std::string to = "cube";
    std::vector<std::string> suites;
    std::size_t limit = 50'000'000;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path);
    if (!in) throw ResourceError("cannot open input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw ResourceError("cannot write " + o.out);
    f << text << '\n';
}

std::uint64_t seed_of(const Options& o) {
    if (o.seed) return *o.seed;
    if (const char* env = std::getenv("FMZ_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError("FMZ_SEED is not a nonnegative integer");
        }
    }
    return 0;
}

AnyElement load_element(const Options& o) {
    Json j = parse_json(read_input(o.input));
    AnyElement e = element_from_json(j, o.scalars);
    if (!o.kind.empty()) {
        JordanKind want = parse_kind(o.kind);
        JordanKind got = std::visit([](const auto& x) { return x.kind(); }, e);
        if (want != got) throw DomainError(std::string("input kind ") + kind_name(got) + " does not match --kind " + o.kind);
    }
    return e;
}

Freud<Int> load_int_element(const Options& o) {
    AnyElement e = load_element(o);
    if (auto* x = std::get_if<Freud<Int>>(&e)) return *x;
    throw DomainError("this command needs integer scalars");
}

std::string dump(const Json& j) { return j.dump(2); }

template <class S>
Json eval_report(const Freud<S>& x) {
    Json r;
    r["format"] = kFormatTag;
    r["kind"] = kind_name(x.kind());
    r["q"] = to_json(quartic(x));
    r["q_reduced"] = to_json(quartic_reduced(x));
    Json gram = Json::array();
    for (int m = 0; m < x.dim(); ++m) gram.push_back(to_json(symplectic(x, Freud<S>::basis(x.kind(), m))));
    r["symplectic_row"] = gram;
    r["t_xxx"] = to_json(t_xxx(x));
    r["rank"] = rank(x);
    return r;
}

int cmd_eval(const Options& o) {
    AnyElement e = load_element(o);
    Json r;
    if (auto* x = std::get_if<Freud<Int>>(&e)) {
        r = eval_report(*x);
        InvariantVector inv = invariants(*x);
        r["invariants"] = to_json(inv);
        if (x->kind() != JordanKind::H3F) {
            ProjectivityResult p = projectivity(*x);
            r["projective"] = p.projective;
            r["cubic_gcd"] = to_json(p.cubic_gcd);
            if (p.representative_dependent) r["representative_dependent"] = true;
        }
    } else {
        r = eval_report(std::get<Freud<Rat>>(e));
    }
    write_output(o, dump(r));
    return 0;
}

int cmd_reduce(const Options& o) {
    Freud<Int> x = load_int_element(o);
    DiagonalReduced red = reduce_diagonal(x);
    Json r;
    r["format"] = kFormatTag;
    r["reduced"] = to_json(red.element);
    if (o.witness) r["witness"] = to_json(red.witness);
    if (o.verify) {
        bool ok = apply_word(red.witness, x) == red.element;
        if (!ok) throw InvariantError("reduction witness failed to replay");
        r["verified"] = true;
    }
    write_output(o, dump(r));
    return 0;
}

int cmd_canonical(const Options& o) {
    AnyElement e = load_element(o);
    Json r;
    r["format"] = kFormatTag;
    if (auto* q = std::get_if<Freud<Rat>>(&e)) {
        FieldCanonical c = field_canonicalize(*q);
        r["rank"] = c.rank;
        r["k"] = to_json(c.k);
        r["canonical"] = to_json(c.canonical);
        if (o.witness) r["witness"] = to_json(c.witness);
        if (o.verify) {
            if (apply_word(c.witness, *q) != c.canonical) throw InvariantError("field witness failed to replay");
            r["verified"] = true;
        }
        write_output(o, dump(r));
        return 0;
    }
    const Freud<Int>& x = std::get<Freud<Int>>(e);
    OrbitLabel label = classify_orbit(x);
    r["label"] = to_json(label);
    if (label.variant == OrbitLabel::Variant::Projective) {
        ProjectiveCanonical c = projective_canonicalize(x);
        r["epsilon"] = c.epsilon;
        r["k"] = to_json(c.k);
        r["canonical"] = to_json(c.canonical);
        r["witness_kind"] = kind_name(c.witness_kind);
        if (o.witness) r["witness"] = to_json(c.witness);
        if (o.verify) {
            Freud<Int> source = x.kind() == JordanKind::Diag3 ? embed_in_h3b(x) : x;
            if (apply_word(c.witness, source) != c.canonical) throw InvariantError("canonical witness failed to replay");
            r["verified"] = true;
        }
    } else if (label.variant == OrbitLabel::Variant::Rank1 || label.variant == OrbitLabel::Variant::Rank2) {
        DegenerateCanonical c = degenerate_canonicalize(x);
        r["canonical"] = to_json(c.representative);
        if (o.witness) r["witness"] = to_json(c.witness);
        if (o.verify) {
            if (apply_word(c.witness, x) != c.representative) throw InvariantError("canonical witness failed to replay");
            r["verified"] = true;
        }
    }
    write_output(o, dump(r));
    return 0;
}

int cmd_snf(const Options& o) {
    Freud<Int> x = load_int_element(o);
    SmithForm f = smith_normal_form(x.A);
    Json r;
    r["format"] = kFormatTag;
    r["kind"] = kind_name(x.kind());
    r["diagonal"] = Json::array({to_json(f.d[0]), to_json(f.d[1]), to_json(f.d[2])});
    r["multiplier"] = to_json(f.multiplier);
    InvariantFactors inv = invariant_factors(x.A);
    r["invariant_factors"] = Json::array({to_json(inv.d1), to_json(inv.d2), to_json(inv.d3)});
    if (o.witness) r["witness"] = to_json(f.witness);
    if (o.verify) {
        Jordan<Int> D = Jordan<Int>::diagonal(x.kind(), f.d[0], f.d[1], f.d[2]);
        if (f.witness.apply(x.A) != D) throw InvariantError("Smith witness failed to replay");
        r["verified"] = true;
    }
    write_output(o, dump(r));
    return 0;
}

int cmd_convert(const Options& o) {
    Json j = parse_json(read_input(o.input));
    Json r;
    if (j.is_object() && j.contains("cube")) {
        r = to_json(from_cube(cube_from_json(j)));
    } else if (j.is_object() && j.contains("wedge")) {
        const Json& w = j["wedge"];
        if (!w.is_array() || w.size() != 20) throw ParseError("wedge must list 20 coordinates");
        WedgeElement e;
        for (int i = 0; i < 20; ++i) e.coords[i] = int_from_json(w[i]);
        r = to_json(from_wedge(e));
    } else {
        Freud<Int> x = int_element_from_json(j);
        if (o.to == "cube") {
            r = to_json(to_cube(x));
            Json forms = Json::array();
            for (const auto& f : slicing_forms(to_cube(x))) forms.push_back(to_json(f));
            r["slicing_forms"] = forms;
        } else if (o.to == "wedge") {
            r = to_json(to_wedge(x));
        } else {
            throw DomainError("--to must be cube or wedge");
        }
    }
    write_output(o, dump(r));
    return 0;
}

std::string csv_field(const std::string& s) {
    std::string r = "\"";
    for (char ch : s) {
        if (ch == '"') r += '"';
        r += ch;
    }
    return r + "\"";
}

int cmd_census(const Options& o) {
    CensusOptions c;
    c.kind = o.kind.empty() ? JordanKind::Diag3 : parse_kind(o.kind);
    c.height = o.height;
    c.samples = o.samples;
    c.seed = seed_of(o);
    c.jobs = o.jobs > 0 ? o.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    c.max_elements = o.limit;
    if (c.samples == 0 && c.kind != JordanKind::Diag3) {
        throw PreconditionError("exhaustive census is only available for Diag3; pass --samples");
    }
    CensusResult res = run_census(c);
    if (o.format == "csv") {
        std::ostringstream out;
        out << "norm,variant,label,count,sample\n";
        for (const auto& rec : res.records) {
            out << rec.norm.get_str() << ',' << variant_name(rec.label.variant) << ',' << label_key(rec.label) << ','
                << rec.count.get_str() << ',' << csv_field(to_json(rec.sample).dump()) << '\n';
        }
        if (res.truncated) out << "# truncated after " << res.processed << " of " << res.requested << " elements\n";
        std::string text = out.str();
        text.pop_back();
        write_output(o, text);
    } else if (o.format == "json") {
        Json r;
        r["format"] = kFormatTag;
        r["kind"] = kind_name(c.kind);
        r["height"] = c.height;
        r["samples"] = c.samples;
        r["seed"] = c.seed;
        r["processed"] = res.processed;
        r["truncated"] = res.truncated;
        Json ce = Json::array();
        for (const auto& q : res.counterexamples) ce.push_back(to_json(q));
        r["counterexamples"] = ce;
        r["congruence_failures"] = res.congruence_failures;
        Json recs = Json::array();
        for (const auto& rec : res.records) {
            Json e;
            e["norm"] = to_json(rec.norm);
            OrbitLabel label = rec.label;
            label.representative.reset();
            e["label"] = to_json(label);
            e["count"] = to_json(rec.count);
            e["sample"] = to_json(rec.sample);
            recs.push_back(e);
        }
        r["records"] = recs;
        write_output(o, dump(r));
    } else {
        throw DomainError("--format must be json or csv");
    }
    return 0;
}

int cmd_selftest(const Options& o) {
    int samples = o.samples > 0 ? static_cast<int>(o.samples) : 200;
    auto checks = run_selftest(o.suites, seed_of(o), samples);
    bool ok = true;
    std::ostringstream out;
    for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name;
        if (!c.passed) out << " -- " << c.detail;
        out << '\n';
        ok = ok && c.passed;
    }
    out << (ok ? "all identities hold" : "selftest failed");
    write_output(o, out.str());
    return ok ? 0 : 1;
}

const char* error_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Invariant: return "invariant";
        case ErrorKind::Resource: return "resource";
    }
    return "error";
}

int report_error(const char* kind, const std::string& message, int code) {
    Json e{{"error", kind}, {"message", message}};
    std::cerr << e.dump() << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integral Freudenthal modules over cubic Jordan algebras"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", o.input, "JSON input file, - for stdin")->capture_default_str();
        sub->add_option("--kind", o.kind, "Diag3, H3F, H3B, H3H or H3O");
        sub->add_option("--scalars", o.scalars, "int or rat")->check(CLI::IsMember({"int", "rat"}));
        sub->add_option("--out", o.out, "write the result to this path");
    };
    auto add_witness = [&](CLI::App* sub) {
        sub->add_flag("--witness", o.witness, "print the generator word");
        sub->add_flag("--verify", o.verify, "replay the word before printing");
    };

    auto* eval = app.add_subcommand("eval", "invariants, rank and projectivity of an element");
    add_input(eval);
    auto* reduce = app.add_subcommand("reduce", "diagonal reduced form");
    add_input(reduce);
    add_witness(reduce);
    auto* canonical = app.add_subcommand("canonical", "orbit label and canonical representative");
    add_input(canonical);
    add_witness(canonical);
    auto* snf = app.add_subcommand("snf", "Smith normal form of the A component");
    add_input(snf);
    add_witness(snf);
    auto* convert = app.add_subcommand("convert", "element <-> cube or exterior-cube coordinates");
    add_input(convert);
    convert->add_option("--to", o.to, "cube or wedge (for element input)")->check(CLI::IsMember({"cube", "wedge"}));

    auto* census = app.add_subcommand("census", "bucket elements by norm and orbit label");
    census->add_option("--kind", o.kind, "Jordan kind (default Diag3)");
    census->add_option("--height", o.height, "coordinate bound")->capture_default_str();
    census->add_option("--samples", o.samples, "random samples instead of exhaustive enumeration");
    census->add_option("--seed", o.seed, "seed (falls back to FMZ_SEED)");
    census->add_option("--jobs", o.jobs, "worker threads (default: hardware threads)");
    census->add_option("--limit", o.limit, "maximum number of elements")->capture_default_str();
    census->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    census->add_option("--out", o.out, "write the table to this path");

    auto* selftest = app.add_subcommand("selftest", "check the algebraic identities of every module");
    selftest->add_option("--suite", o.suites, "suite to run (repeatable)");
    selftest->add_option("--seed", o.seed, "seed (falls back to FMZ_SEED)");
    selftest->add_option("--samples", o.samples, "random cases per identity");
    selftest->add_option("--out", o.out, "write the summary to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*eval) return cmd_eval(o);
        if (*reduce) return cmd_reduce(o);
        if (*canonical) return cmd_canonical(o);
        if (*snf) return cmd_snf(o);
        if (*convert) return cmd_convert(o);
        if (*census) return cmd_census(o);
        if (*selftest) return cmd_selftest(o);
    } catch (const Error& e) {
        return report_error(error_name(e.kind()), e.what(), e.exit_code());
    } catch (const nlohmann::json::exception& e) {
        return report_error("parse", e.what(), 2);
    } catch (const std::bad_alloc&) {
        return report_error("resource", "out of memory", 6);
    } catch (const std::exception& e) {
        return report_error("invariant", e.what(), 5);
    }
    return 0;
}

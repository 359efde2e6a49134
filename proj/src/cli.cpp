#include "modfun/cli.hpp"

#include "modfun/io.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>

namespace modfun::cli {

namespace {

enum class Kind { Fusion, Algebra, Category };

/// Input failure that should end the command with kUsageError.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Loaded {
    std::string path;
    std::string text;
};

Loaded load(const std::string& path)
{
    const auto resolved = resolve_input(path);
    try {
        return Loaded{resolved.string(), read_text_file(resolved)};
    } catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
}

template <typename F>
auto parse_or_throw(const Loaded& in, F&& parse)
{
    try {
        return parse(in.text);
    } catch (const ParseError& e) {
        throw InputError(in.path + ":" + e.what());
    }
}

Kind sniff(const Loaded& in)
{
    std::istringstream lines(in.text);
    std::string line;
    while (std::getline(lines, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream words(line);
        std::string first;
        if (!(words >> first)) continue;
        if (first == "rank") return Kind::Fusion;
        if (first == "dim") return Kind::Algebra;
        if (first == "object") return Kind::Category;
        break;
    }
    throw InputError(in.path + ": cannot tell whether this is a fusion ring, algebra or category");
}

FusionRing load_fusion(const std::string& path)
{
    return parse_or_throw(load(path), [](std::string_view t) { return parse_fusion(t); });
}

FrobeniusAlgebra load_algebra(const std::string& path)
{
    const auto in = load(path);
    if (sniff(in) == Kind::Fusion) {
        const auto r = parse_or_throw(in, [](std::string_view t) { return parse_fusion(t); });
        const auto ax = verify_axioms(r);
        if (!ax.ok()) throw InputError(in.path + ": fusion axioms fail, no algebra\n" + render(ax));
        try {
            return frobenius_from_fusion(r);
        } catch (const DegeneratePairing& e) {
            throw InputError(in.path + ": " + e.what());
        }
    }
    return parse_or_throw(in, [](std::string_view t) { return parse_algebra(t); });
}

std::vector<Rational> parse_grid(const std::string& text)
{
    std::vector<Rational> grid;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            grid.push_back(Rational::parse(item));
        } catch (const std::invalid_argument&) {
            throw InputError("bad grid value '" + item + "'");
        }
    }
    if (grid.empty()) throw InputError("empty idempotent grid");
    return grid;
}

struct Options {
    std::uint64_t seed = 1;
    bool machine = false;
    std::vector<std::string> files;
    std::optional<std::size_t> genus;
    std::optional<std::size_t> max_genus;
    std::size_t rank = 2;
    std::int64_t max_coeff = 1;
    std::string mode = "mat";
    std::size_t bound = 3;
    bool zero_object = false;
    std::string grid = "0,1,-1,1/2";
    std::string twists;
    std::string surfaces;
    std::size_t trials = 20;
};

int emit(std::ostream& out, const std::vector<Report>& reports)
{
    bool ok = true;
    for (const auto& r : reports) {
        out << render(r);
        ok = ok && r.ok();
    }
    return ok ? kOk : kCheckFailed;
}

int cmd_validate(const Options& o, std::ostream& out)
{
    const auto in = load(o.files.at(0));
    switch (sniff(in)) {
    case Kind::Fusion: {
        const auto r = parse_or_throw(in, [](std::string_view t) { return parse_fusion(t); });
        const auto ax = verify_axioms(r);
        if (!ax.ok()) return emit(out, {ax});
        return emit(out, {ax, verify_frobenius_pairing(r)});
    }
    case Kind::Algebra: {
        const auto a = parse_or_throw(in, [](std::string_view t) { return parse_algebra(t); });
        const auto v = validate_frobenius(a);
        if (!v.ok()) return emit(out, {v});
        return emit(out, {v, verify_tensor_identities(a), invariance_suite(a, o.trials, 3, o.seed)});
    }
    case Kind::Category: {
        const auto c = parse_or_throw(in, [](std::string_view t) { return parse_category(t); });
        return emit(out, {validate_category(c)});
    }
    }
    return kUsageError;
}

int cmd_blocks(const Options& o, std::ostream& out)
{
    const auto r = load_fusion(o.files.at(0));
    const auto ax = verify_axioms(r);
    if (!ax.ok()) return emit(out, {ax});
    BlockDecomposition b;
    try {
        b = block_decomposition(r);
    } catch (const AxiomInconsistency& e) {
        Report rep{"blocks", {}};
        rep.add("partition", {static_cast<std::int64_t>(e.label())}, e.what());
        return emit(out, {rep});
    }
    if (o.machine) out << "blocks = " << b.blocks.size() << '\n';
    for (std::size_t i = 0; i < b.blocks.size(); ++i) {
        if (o.machine) {
            out << "block." << i << ".unit = " << r.name(b.units[i]) << '\n';
            out << "block." << i << ".labels = ";
            for (std::size_t j = 0; j < b.blocks[i].size(); ++j) out << (j ? "," : "") << r.name(b.blocks[i][j]);
            out << '\n';
        } else {
            out << "block " << i << " (unit " << r.name(b.units[i]) << "):";
            for (auto a : b.blocks[i]) out << ' ' << r.name(a);
            out << '\n';
        }
    }
    return kOk;
}

int cmd_dim(const Options& o, std::ostream& out)
{
    const auto r = load_fusion(o.files.at(0));
    const auto ax = verify_axioms(r);
    if (!ax.ok()) return emit(out, {ax});
    std::vector<NamedSurface> surfaces;
    if (o.files.size() > 1) {
        surfaces = parse_or_throw(load(o.files[1]), [&r](std::string_view t) { return parse_surfaces(t, r); });
    } else {
        const std::size_t g = o.genus.value_or(1);
        surfaces.push_back(NamedSurface{"genus" + std::to_string(g), ColouredSurface{g, {}}});
    }
    if (o.files.size() == 1 && !o.machine) {
        out << dim_V(r, surfaces[0].surface) << '\n';
        return kOk;
    }
    for (const auto& s : surfaces) out << (o.machine ? "dim." : "") << s.name << " = " << dim_V(r, s.surface) << '\n';
    return kOk;
}

int cmd_invariant(const Options& o, std::ostream& out)
{
    const auto a = load_algebra(o.files.at(0));
    const auto v = validate_frobenius(a);
    if (!v.ok()) return emit(out, {v});
    if (o.genus && !o.max_genus) {
        const auto z = genus_invariant(a, *o.genus);
        if (o.machine)
            out << "invariant." << *o.genus << " = " << z << '\n';
        else
            out << z << '\n';
        return kOk;
    }
    const std::size_t top = o.max_genus.value_or(3);
    for (std::size_t g = 0; g <= top; ++g)
        out << (o.machine ? "invariant." + std::to_string(g) + " = " : "genus " + std::to_string(g) + ": ")
            << genus_invariant(a, g) << '\n';
    return kOk;
}

int cmd_evalword(const Options& o, std::ostream& out)
{
    if (o.files.size() != 2) throw InputError("evalword needs an algebra and a word file");
    const auto a = load_algebra(o.files[0]);
    const auto w = parse_or_throw(load(o.files[1]), [](std::string_view t) { return parse_word(t); });
    const auto v = validate_frobenius(a);
    if (!v.ok()) return emit(out, {v});
    try {
        const auto m = evaluate_word(a, w);
        if (m.in_arity == 0 && m.out_arity == 0) {
            out << (o.machine ? "value = " : "") << m.matrix(0, 0) << '\n';
        } else {
            out << (o.machine ? "arity = " : "map ") << m.in_arity << (o.machine ? "," : " -> ") << m.out_arity
                << '\n'
                << to_string(m.matrix) << '\n';
        }
    } catch (const WordTypeError& e) {
        throw InputError(e.what());
    }
    return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    std::vector<FusionRing> rings;
    try {
        rings = enumerate_fusion_rings(o.rank, o.max_coeff);
    } catch (const EnumerationBounds& e) {
        throw InputError(e.what());
    }
    out << "# rings of rank " << o.rank << " with coefficients at most " << o.max_coeff << ": " << rings.size()
        << '\n';
    for (std::size_t i = 0; i < rings.size(); ++i) out << "\n# ring " << i + 1 << '\n' << serialize_fusion(rings[i]);
    return kOk;
}

int cmd_complete(const Options& o, std::ostream& out)
{
    const auto c = parse_or_throw(load(o.files.at(0)), [](std::string_view t) { return parse_category(t); });
    const auto base = validate_category(c);
    if (!base.ok()) return emit(out, {base});
    PresentedCategory done;
    try {
        if (o.mode == "mat") {
            done = mat_completion(c, o.bound, o.zero_object);
        } else if (o.mode == "karoubi") {
            done = karoubi_completion_from_grid(c, parse_grid(o.grid));
        } else {
            throw InputError("unknown completion mode '" + o.mode + "' (use mat or karoubi)");
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const auto rep = validate_category(done);
    out << serialize_category(done);
    std::istringstream lines(render(rep));
    for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
    return rep.ok() ? kOk : kCheckFailed;
}

int cmd_check_separable(const Options& o, std::ostream& out)
{
    if (o.files.size() != 2) throw InputError("check-separable needs an algebra and an element file");
    const auto a = underlying_algebra(load_algebra(o.files[0]));
    const auto e =
        parse_or_throw(load(o.files[1]), [&a](std::string_view t) { return parse_separability(t, a.basis); });
    return emit(out, {verify_separability_idempotent(a, e)});
}

int cmd_semisimple(const Options& o, std::ostream& out)
{
    const auto a = underlying_algebra(load_algebra(o.files.at(0)));
    const auto tf = trace_form_semisimple(a);
    if (o.machine) {
        out << "semisimple = " << (tf.semisimple ? "true" : "false") << '\n';
        out << "trace_form_rank = " << rank(tf.gram) << '\n';
    } else {
        out << "trace form:\n" << to_string(tf.gram) << "\nsemisimple: " << (tf.semisimple ? "yes" : "no") << '\n';
    }
    return kOk;
}

int cmd_report(const Options& o, std::ostream& out)
{
    const auto r = load_fusion(o.files.at(0));
    std::optional<TwistData> twists;
    std::vector<NamedSurface> surfaces;
    if (!o.twists.empty())
        twists = parse_or_throw(load(o.twists), [&r](std::string_view t) { return parse_twists(t, r); });
    if (!o.surfaces.empty())
        surfaces = parse_or_throw(load(o.surfaces), [&r](std::string_view t) { return parse_surfaces(t, r); });
    const auto m = modular_report(r, twists, surfaces);
    out << (o.machine ? render_machine(m) : render_text(m));
    return m.ok() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact fusion rings, modular functor dimensions and 2d TQFT invariants", "modfun"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--seed", o.seed, "seed for randomised checks")->capture_default_str();
    app.add_flag("--machine", o.machine, "flat key = value output");

    auto files = [&o](CLI::App* sub, const std::string& what, int count) {
        sub->add_option("files", o.files, what)->required()->expected(count);
        sub->add_option("--seed", o.seed, "seed for randomised checks");
        sub->add_flag("--machine", o.machine, "flat key = value output");
    };

    auto* validate = app.add_subcommand("validate", "check fusion, Frobenius or category axioms");
    files(validate, "fusion, algebra or category file", 1);
    validate->add_option("--trials", o.trials, "random basis changes for algebras");

    auto* blocks = app.add_subcommand("blocks", "partition labels by unit component");
    files(blocks, "fusion file", 1);

    auto* dim = app.add_subcommand("dim", "dimensions of coloured surfaces");
    files(dim, "fusion file [surface list]", -1);
    dim->add_option("--genus", o.genus, "closed surface genus (without a surface list)");

    auto* invariant = app.add_subcommand("invariant", "closed surface invariants of a Frobenius algebra");
    files(invariant, "algebra or fusion file", 1);
    invariant->add_option("--genus", o.genus, "single genus");
    invariant->add_option("--max-genus", o.max_genus, "table for genus 0..n");

    auto* evalword = app.add_subcommand("evalword", "evaluate a cobordism word");
    files(evalword, "algebra file and word file", 2);

    auto* enumerate = app.add_subcommand("enumerate", "list fusion rings with bounded coefficients");
    enumerate->add_option("--rank", o.rank, "rank")->capture_default_str();
    enumerate->add_option("--max-coeff", o.max_coeff, "largest coefficient")->capture_default_str();

    auto* complete = app.add_subcommand("complete", "additive or idempotent completion");
    files(complete, "category file", 1);
    complete->add_option("--mode", o.mode, "mat or karoubi")->capture_default_str();
    complete->add_option("--bound", o.bound, "longest object sequence")->capture_default_str();
    complete->add_flag("--zero-object", o.zero_object, "include the empty sequence in mat mode");
    complete->add_option("--grid", o.grid, "comma separated idempotent coefficients")->capture_default_str();

    auto* separable = app.add_subcommand("check-separable", "verify a separability idempotent");
    files(separable, "algebra file and element file", 2);

    auto* semisimple = app.add_subcommand("semisimple", "trace form semisimplicity test");
    files(semisimple, "algebra or fusion file", 1);

    auto* report = app.add_subcommand("report", "modular functor report for a fusion ring");
    files(report, "fusion file", 1);
    report->add_option("--twists", o.twists, "twist file");
    report->add_option("--surfaces", o.surfaces, "surface list");

    std::vector<std::string> argv_store{"modfun"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*validate) return cmd_validate(o, out);
        if (*blocks) return cmd_blocks(o, out);
        if (*dim) return cmd_dim(o, out);
        if (*invariant) return cmd_invariant(o, out);
        if (*evalword) return cmd_evalword(o, out);
        if (*enumerate) return cmd_enumerate(o, out);
        if (*complete) return cmd_complete(o, out);
        if (*separable) return cmd_check_separable(o, out);
        if (*semisimple) return cmd_semisimple(o, out);
        if (*report) return cmd_report(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace modfun::cli

#include "modfun/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace modfun {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message)
{
}

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;

    [[noreturn]] void fail(std::size_t token, const std::string& message) const
    {
        const std::size_t col = token < tokens.size() ? tokens[token].column
                                                      : tokens.back().column + tokens.back().text.size();
        throw ParseError(number, col, message);
    }
    void expect_count(std::size_t n, const std::string& usage) const
    {
        if (tokens.size() < n) fail(tokens.size(), "expected " + usage);
        if (tokens.size() > n) fail(n, "unexpected '" + tokens[n].text + "', expected " + usage);
    }
    void expect_at_least(std::size_t n, const std::string& usage) const
    {
        if (tokens.size() < n) fail(tokens.size(), "expected " + usage);
    }
    [[nodiscard]] const std::string& operator[](std::size_t i) const { return tokens[i].text; }
};

std::vector<Line> lex(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            if (i >= raw.size()) break;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
            line.tokens.push_back(Token{std::string(raw.substr(i, j - i)), i + 1});
            i = j;
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        start = end + 1;
    }
    return lines;
}

std::int64_t parse_int(const Line& line, std::size_t t)
{
    const std::string& s = line[t];
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) line.fail(t, "expected an integer, got '" + s + "'");
    return v;
}

std::size_t parse_index(const Line& line, std::size_t t, std::size_t bound, const std::string& what)
{
    const std::int64_t v = parse_int(line, t);
    if (v < 0 || static_cast<std::size_t>(v) >= bound)
        line.fail(t, what + " " + line[t] + " out of range 0.." + std::to_string(bound - 1));
    return static_cast<std::size_t>(v);
}

Rational parse_rational(const Line& line, std::size_t t)
{
    try {
        return Rational::parse(line[t]);
    } catch (const std::exception&) {
        line.fail(t, "expected a rational p/q, got '" + line[t] + "'");
    }
}

Label parse_label(const Line& line, std::size_t t, const FusionRing& r)
{
    if (auto a = r.find(line[t])) return *a;
    line.fail(t, "unknown label '" + line[t] + "'");
}

std::optional<std::size_t> header(const std::vector<Line>& lines, const std::string& key)
{
    if (lines.empty()) throw ParseError(1, 1, "missing " + key);
    const Line& first = lines.front();
    if (first[0] != key) first.fail(0, "missing " + key + " (it must come first)");
    first.expect_count(2, key + " <n>");
    const std::int64_t n = parse_int(first, 1);
    if (n < 1) first.fail(1, key + " must be positive");
    return static_cast<std::size_t>(n);
}

}  // namespace

// --- fusion ------------------------------------------------------------------

FusionRing parse_fusion(std::string_view text)
{
    const auto lines = lex(text);
    const std::size_t n = *header(lines, "rank");
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
    std::vector<bool> named(n, false);
    std::vector<std::optional<Label>> dual(n);
    std::optional<std::vector<Label>> unit;
    Tensor3<std::int64_t> coeff(n, n, n);
    std::set<std::array<std::size_t, 3>> seen;

    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        const std::string& d = line[0];
        if (d == "rank") {
            line.fail(0, "duplicate rank");
        } else if (d == "label") {
            line.expect_count(3, "label <i> <name>");
            const auto i = parse_index(line, 1, n, "label");
            if (named[i]) line.fail(1, "duplicate label " + line[1]);
            for (std::size_t j = 0; j < n; ++j)
                if (named[j] && names[j] == line[2]) line.fail(2, "duplicate label name '" + line[2] + "'");
            names[i] = line[2];
            named[i] = true;
        } else if (d == "dual") {
            line.expect_count(3, "dual <i> <j>");
            const auto i = parse_index(line, 1, n, "label");
            const auto j = parse_index(line, 2, n, "label");
            if (dual[i]) line.fail(1, "duplicate dual entry for label " + line[1]);
            if (dual[j]) line.fail(2, "duplicate dual entry for label " + line[2]);
            dual[i] = j;
            dual[j] = i;
        } else if (d == "unit") {
            line.expect_at_least(2, "unit <i> [<i>...]");
            if (unit) line.fail(0, "duplicate unit");
            unit.emplace();
            for (std::size_t t = 1; t < line.tokens.size(); ++t) {
                const auto b = parse_index(line, t, n, "label");
                if (std::find(unit->begin(), unit->end(), b) != unit->end())
                    line.fail(t, "unit component " + line[t] + " listed twice");
                unit->push_back(b);
            }
        } else if (d == "N") {
            line.expect_count(5, "N <a> <b> <c> <m>");
            const auto a = parse_index(line, 1, n, "label");
            const auto b = parse_index(line, 2, n, "label");
            const auto c = parse_index(line, 3, n, "label");
            const auto m = parse_int(line, 4);
            if (m < 0) line.fail(4, "negative coefficient " + line[4]);
            if (!seen.insert({a, b, c}).second) line.fail(0, "duplicate coefficient N " + line[1] + " " + line[2] + " " + line[3]);
            coeff(a, b, c) = m;
        } else {
            line.fail(0, "unknown directive '" + d + "'");
        }
    }
    if (!unit) throw ParseError(lines.back().number + 1, 1, "missing unit");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (names[i] == names[j]) throw ParseError(1, 1, "label name '" + names[i] + "' used twice");
    std::vector<Label> duals(n);
    for (std::size_t i = 0; i < n; ++i) duals[i] = dual[i].value_or(i);
    try {
        return FusionRing(std::move(names), std::move(duals), std::move(*unit), std::move(coeff));
    } catch (const FusionDataError& e) {
        throw ParseError(1, 1, e.what());
    }
}

std::string serialize_fusion(const FusionRing& r)
{
    std::ostringstream os;
    const std::size_t n = r.rank();
    os << "rank " << n << '\n';
    for (Label a = 0; a < n; ++a) os << "label " << a << ' ' << r.name(a) << '\n';
    for (Label a = 0; a < n; ++a)
        if (a <= r.dual(a)) os << "dual " << a << ' ' << r.dual(a) << '\n';
    os << "unit";
    for (auto b : r.unit_components()) os << ' ' << b;
    os << '\n';
    for (Label a = 0; a < n; ++a)
        for (Label b = 0; b < n; ++b)
            for (Label c = 0; c < n; ++c)
                if (r.n(a, b, c) != 0) os << "N " << a << ' ' << b << ' ' << c << ' ' << r.n(a, b, c) << '\n';
    return os.str();
}

// --- algebra -------------------------------------------------------------------

FrobeniusAlgebra parse_algebra(std::string_view text)
{
    const auto lines = lex(text);
    const std::size_t n = *header(lines, "dim");
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = "e" + std::to_string(i);
    std::vector<bool> named(n, false);
    Tensor3<Rational> mult(n, n, n);
    Vector unit(n);
    Vector counit(n);
    std::set<std::array<std::size_t, 3>> seen_mult;
    std::set<std::size_t> seen_unit;
    std::set<std::size_t> seen_counit;

    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        const std::string& d = line[0];
        if (d == "dim") {
            line.fail(0, "duplicate dim");
        } else if (d == "basis") {
            line.expect_count(3, "basis <i> <name>");
            const auto i = parse_index(line, 1, n, "basis index");
            if (named[i]) line.fail(1, "duplicate basis " + line[1]);
            for (std::size_t j = 0; j < n; ++j)
                if (named[j] && names[j] == line[2]) line.fail(2, "duplicate basis name '" + line[2] + "'");
            names[i] = line[2];
            named[i] = true;
        } else if (d == "mult") {
            line.expect_count(5, "mult <i> <j> <k> <p/q>");
            const auto i = parse_index(line, 1, n, "basis index");
            const auto j = parse_index(line, 2, n, "basis index");
            const auto c = parse_index(line, 3, n, "basis index");
            if (!seen_mult.insert({i, j, c}).second) line.fail(0, "duplicate mult entry");
            mult(i, j, c) = parse_rational(line, 4);
        } else if (d == "unit" || d == "counit") {
            line.expect_count(3, d + " <i> <p/q>");
            const auto i = parse_index(line, 1, n, "basis index");
            auto& seen = d == "unit" ? seen_unit : seen_counit;
            if (!seen.insert(i).second) line.fail(0, "duplicate " + d + " entry");
            (d == "unit" ? unit : counit)[i] = parse_rational(line, 2);
        } else {
            line.fail(0, "unknown directive '" + d + "'");
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (names[i] == names[j]) throw ParseError(1, 1, "basis name '" + names[i] + "' used twice");
    return FrobeniusAlgebra(std::move(names), std::move(mult), std::move(unit), std::move(counit));
}

std::string serialize_algebra(const FrobeniusAlgebra& a)
{
    std::ostringstream os;
    const std::size_t n = a.dim();
    os << "dim " << n << '\n';
    for (std::size_t i = 0; i < n; ++i) os << "basis " << i << ' ' << a.basis_names()[i] << '\n';
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!a.mult(i, j, k).is_zero()) os << "mult " << i << ' ' << j << ' ' << k << ' ' << a.mult(i, j, k) << '\n';
    for (std::size_t i = 0; i < n; ++i)
        if (!a.unit()[i].is_zero()) os << "unit " << i << ' ' << a.unit()[i] << '\n';
    for (std::size_t i = 0; i < n; ++i)
        if (!a.counit()[i].is_zero()) os << "counit " << i << ' ' << a.counit()[i] << '\n';
    return os.str();
}

Algebra underlying_algebra(const FrobeniusAlgebra& a)
{
    return Algebra{a.basis_names(), a.structure_constants(), a.unit()};
}

// --- category ----------------------------------------------------------------

namespace {

std::vector<std::pair<Rational, std::string>> parse_terms(const Line& line, std::size_t from)
{
    if (from >= line.tokens.size()) line.fail(from, "expected an expression after '='");
    std::string joined;
    for (std::size_t t = from; t < line.tokens.size(); ++t) joined += line[t];
    std::vector<std::pair<Rational, std::string>> terms;
    if (joined == "0") return terms;
    std::size_t start = 0;
    while (start <= joined.size()) {
        std::size_t end = joined.find('+', start);
        if (end == std::string::npos) end = joined.size();
        const std::string term = joined.substr(start, end - start);
        if (term.empty()) line.fail(from, "empty term in '" + joined + "'");
        const auto star = term.find('*');
        if (star == std::string::npos) {
            terms.emplace_back(Rational(1), term);
        } else {
            try {
                terms.emplace_back(Rational::parse(term.substr(0, star)), term.substr(star + 1));
            } catch (const std::invalid_argument&) {
                line.fail(from, "bad coefficient in term '" + term + "'");
            }
            if (terms.back().second.empty()) line.fail(from, "missing basis name in term '" + term + "'");
        }
        start = end + 1;
    }
    return terms;
}

std::string format_terms(const Vector& v, const std::vector<std::string>& names)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += v[i].str() + "*" + names[i];
    }
    return s.empty() ? "0" : s;
}

}  // namespace

PresentedCategory parse_category(std::string_view text)
{
    const auto lines = lex(text);
    CategoryBuilder b;
    auto object = [&](const Line& line, std::size_t t) {
        if (auto p = b.find_object(line[t])) return *p;
        line.fail(t, "unknown object '" + line[t] + "'");
    };
    for (const Line& line : lines) {
        const std::string& d = line[0];
        try {
            if (d == "object") {
                line.expect_count(2, "object <name>");
                b.add_object(line[1]);
            } else if (d == "hom") {
                line.expect_count(4, "hom <p> <q> <basis-name>");
                b.add_hom(object(line, 1), object(line, 2), line[3]);
            } else if (d == "compose") {
                line.expect_at_least(5, "compose <g> <f> = <expr>");
                if (line[3] != "=") line.fail(3, "expected '='");
                b.set_composition(line[1], line[2], parse_terms(line, 4));
            } else if (d == "identity") {
                line.expect_at_least(4, "identity <p> = <expr>");
                if (line[2] != "=") line.fail(2, "expected '='");
                b.set_identity(object(line, 1), parse_terms(line, 3));
            } else {
                line.fail(0, "unknown directive '" + d + "'");
            }
        } catch (const CategoryLoadError& e) {
            line.fail(0, e.what());
        }
    }
    if (lines.empty()) throw ParseError(1, 1, "missing object");
    try {
        return b.build();
    } catch (const CategoryLoadError& e) {
        throw ParseError(lines.back().number + 1, 1, e.what());
    }
}

std::string serialize_category(const PresentedCategory& c)
{
    std::ostringstream os;
    const std::size_t n = c.num_objects();
    for (std::size_t p = 0; p < n; ++p) os << "object " << c.object_name(p) << '\n';
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (const auto& name : c.hom_basis(p, q))
                os << "hom " << c.object_name(p) << ' ' << c.object_name(q) << ' ' << name << '\n';
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r) {
                const auto& t = c.composition(p, q, r);
                const auto& hnames = c.hom_basis(p, r);
                for (std::size_t g = 0; g < c.hom_dim(q, r); ++g)
                    for (std::size_t f = 0; f < c.hom_dim(p, q); ++f) {
                        Vector v(hnames.size());
                        bool any = false;
                        for (std::size_t h = 0; h < v.size(); ++h) {
                            v[h] = t(g, f, h);
                            any = any || !v[h].is_zero();
                        }
                        if (any)
                            os << "compose " << c.hom_basis(q, r)[g] << ' ' << c.hom_basis(p, q)[f] << " = "
                               << format_terms(v, hnames) << '\n';
                    }
            }
    for (std::size_t p = 0; p < n; ++p)
        os << "identity " << c.object_name(p) << " = " << format_terms(c.identity(p).coeffs, c.hom_basis(p, p))
           << '\n';
    return os.str();
}

// --- surfaces and twists -----------------------------------------------------

std::vector<NamedSurface> parse_surfaces(std::string_view text, const FusionRing& r)
{
    std::vector<NamedSurface> out;
    std::set<std::string> names;
    for (const Line& line : lex(text)) {
        if (line[0] != "surface") line.fail(0, "unknown directive '" + line[0] + "'");
        line.expect_at_least(4, "surface <name>: genus <g> boundary <labels...>");
        std::string name = line[1];
        if (name.size() < 2 || name.back() != ':') line.fail(1, "expected '<name>:'");
        name.pop_back();
        if (!names.insert(name).second) line.fail(1, "duplicate surface '" + name + "'");
        if (line[2] != "genus") line.fail(2, "expected 'genus'");
        const std::int64_t g = parse_int(line, 3);
        if (g < 0) line.fail(3, "genus must be nonnegative");
        ColouredSurface s{static_cast<std::size_t>(g), {}};
        if (line.tokens.size() > 4) {
            if (line[4] != "boundary") line.fail(4, "expected 'boundary'");
            for (std::size_t t = 5; t < line.tokens.size(); ++t) s.boundary.push_back(parse_label(line, t, r));
        }
        out.push_back(NamedSurface{name, s});
    }
    return out;
}

std::string serialize_surfaces(const std::vector<NamedSurface>& s, const FusionRing& r)
{
    std::ostringstream os;
    for (const auto& ns : s) {
        os << "surface " << ns.name << ": genus " << ns.surface.genus << " boundary";
        for (auto a : ns.surface.boundary) os << ' ' << r.name(a);
        os << '\n';
    }
    return os.str();
}

TwistData parse_twists(std::string_view text, const FusionRing& r)
{
    TwistData t;
    t.h.resize(r.rank());
    for (const Line& line : lex(text)) {
        if (line[0] != "twist") line.fail(0, "unknown directive '" + line[0] + "'");
        line.expect_count(4, "twist <label> = <value>");
        const Label a = parse_label(line, 1, r);
        if (line[2] != "=") line.fail(2, "expected '='");
        if (t.h[a]) line.fail(1, "duplicate twist for " + line[1]);
        const std::string& v = line[3];
        try {
            if (v.rfind("zeta(", 0) == 0) {
                const auto comma = v.find(',');
                if (v.back() != ')' || comma == std::string::npos) line.fail(3, "expected zeta(<order>,<exponent>)");
                const std::string order = v.substr(5, comma - 5);
                const std::string exponent = v.substr(comma + 1, v.size() - comma - 2);
                std::int64_t o = 0;
                std::int64_t e = 0;
                auto r1 = std::from_chars(order.data(), order.data() + order.size(), o);
                auto r2 = std::from_chars(exponent.data(), exponent.data() + exponent.size(), e);
                if (r1.ec != std::errc() || r1.ptr != order.data() + order.size() || r2.ec != std::errc() ||
                    r2.ptr != exponent.data() + exponent.size())
                    line.fail(3, "expected zeta(<order>,<exponent>) with integers");
                t.h[a] = TwistValue::root_of_unity(o, e);
            } else {
                t.h[a] = TwistValue::rational(parse_rational(line, 3));
            }
        } catch (const TwistFormatError& e) {
            line.fail(3, e.what());
        }
    }
    return t;
}

std::string serialize_twists(const TwistData& t, const FusionRing& r)
{
    std::ostringstream os;
    for (Label a = 0; a < t.h.size(); ++a)
        if (t.h[a]) os << "twist " << r.name(a) << " = " << t.h[a]->str() << '\n';
    return os.str();
}

// --- words and separability elements -----------------------------------------

CobordismWord parse_word(std::string_view text)
{
    CobordismWord w;
    for (const Line& line : lex(text)) {
        std::vector<Generator> layer;
        for (std::size_t t = 0; t < line.tokens.size(); ++t) {
            auto g = parse_generator(line[t]);
            if (!g) line.fail(t, "unknown generator '" + line[t] + "'");
            layer.push_back(*g);
        }
        w.layers.push_back(std::move(layer));
    }
    return w;
}

std::string serialize_word(const CobordismWord& w)
{
    std::ostringstream os;
    for (const auto& layer : w.layers) {
        for (std::size_t i = 0; i < layer.size(); ++i) os << (i ? " " : "") << generator_name(layer[i]);
        os << '\n';
    }
    return os.str();
}

Matrix parse_separability(std::string_view text, const std::vector<std::string>& basis)
{
    Matrix e(basis.size(), basis.size());
    std::set<std::pair<std::size_t, std::size_t>> seen;
    auto index = [&](const Line& line, std::size_t t) {
        auto it = std::find(basis.begin(), basis.end(), line[t]);
        if (it == basis.end()) line.fail(t, "unknown basis element '" + line[t] + "'");
        return static_cast<std::size_t>(it - basis.begin());
    };
    for (const Line& line : lex(text)) {
        if (line[0] != "elem") line.fail(0, "unknown directive '" + line[0] + "'");
        line.expect_count(4, "elem <b1> <b2> <p/q>");
        const auto i = index(line, 1);
        const auto j = index(line, 2);
        if (!seen.insert({i, j}).second) line.fail(0, "duplicate entry " + line[1] + " " + line[2]);
        e(i, j) = parse_rational(line, 3);
    }
    return e;
}

std::string serialize_separability(const Matrix& e, const std::vector<std::string>& basis)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < e.rows(); ++i)
        for (std::size_t j = 0; j < e.cols(); ++j)
            if (!e(i, j).is_zero()) os << "elem " << basis[i] << ' ' << basis[j] << ' ' << e(i, j) << '\n';
    return os.str();
}

// --- files -------------------------------------------------------------------

std::filesystem::path resolve_input(const std::string& path)
{
    namespace fs = std::filesystem;
    const fs::path p(path);
    if (fs::exists(p) || p.is_absolute()) return p;
    const char* corpus = std::getenv("MODFUN_CORPUS");
    if (corpus == nullptr || *corpus == '\0') return p;
    const fs::path root(corpus);
    if (fs::exists(root / p)) return root / p;
    std::error_code ec;
    std::vector<fs::path> dirs;
    for (const auto& entry : fs::directory_iterator(root, ec))
        if (entry.is_directory()) dirs.push_back(entry.path());
    std::sort(dirs.begin(), dirs.end());
    for (const auto& d : dirs)
        if (fs::exists(d / p)) return d / p;
    return p;
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace modfun

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace modfun;
using modfun::test::corpus_text;
using modfun::test::Gen;

namespace {

std::size_t error_line(const std::function<void()>& f)
{
    try {
        f();
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

std::string error_message(const std::function<void()>& f)
{
    try {
        f();
    } catch (const ParseError& e) {
        return e.message();
    }
    return "";
}

}  // namespace

TEST_CASE("round trip: fusion corpus is canonical")
{
    for (const auto& name : test::ring_names()) {
        CAPTURE(name);
        const auto text = corpus_text("fusion/" + name + ".fusion");
        CHECK(serialize_fusion(parse_fusion(text)) == text);
    }
    for (const auto& name : {"broken3", "fib_unit2"}) {
        const auto text = corpus_text(std::string("negative/") + name + ".fusion");
        CHECK(serialize_fusion(parse_fusion(text)) == text);
    }
}

TEST_CASE("round trip: algebras, categories, words and elements are canonical")
{
    for (const auto& name : test::algebra_names()) {
        CAPTURE(name);
        const auto text = corpus_text("algebra/" + name + ".algebra");
        const auto a = parse_algebra(text);
        CHECK(serialize_algebra(a) == text);
        const auto sep = test::corpus_dir() / "separability" / (name + ".sep");
        if (std::filesystem::exists(sep)) {
            const auto st = read_text_file(sep);
            CHECK(serialize_separability(parse_separability(st, a.basis_names()), a.basis_names()) == st);
        }
    }
    for (const auto& name : test::corpus_names("category", ".category")) {
        CAPTURE(name);
        const auto text = corpus_text("category/" + name + ".category");
        CHECK(serialize_category(parse_category(text)) == text);
    }
    for (const auto& name : test::corpus_names("words", ".word")) {
        CAPTURE(name);
        const auto text = corpus_text("words/" + name + ".word");
        CHECK(serialize_word(parse_word(text)) == text);
    }
}

TEST_CASE("round trip: surfaces and twists are canonical")
{
    for (const auto& name : {"fib", "fib_x_z2"}) {
        CAPTURE(name);
        const auto r = test::corpus_fusion(name);
        const auto s = corpus_text(std::string("surfaces/") + name + ".surfaces");
        CHECK(serialize_surfaces(parse_surfaces(s, r), r) == s);
        const auto t = corpus_text(std::string("twists/") + name + ".twists");
        CHECK(serialize_twists(parse_twists(t, r), r) == t);
    }
}

TEST_CASE("round trip: completed categories survive serialisation")
{
    const auto k = test::corpus_category("k");
    for (const auto& c : {mat_completion(k, 3, true), karoubi_completion_from_grid(test::corpus_category("m2"),
                                                                                    default_idempotent_grid()),
                          tensor_product(test::corpus_category("arrow"), test::corpus_category("m2"))}) {
        const auto text = serialize_category(c);
        CHECK(parse_category(text) == c);
    }
}

TEST_CASE("property: random rings and algebras round trip")
{
    Gen g(61);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + g.index(4);
        Tensor3<std::int64_t> c(n, n, n);
        for (auto i = 0u; i < n; ++i)
            for (auto j = 0u; j < n; ++j)
                for (auto k = 0u; k < n; ++k) c(i, j, k) = g.integer(0, 2);
        std::vector<Label> dual(n);
        std::iota(dual.begin(), dual.end(), 0);
        if (n >= 3 && g.integer(0, 1)) std::swap(dual[1], dual[2]);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("L" + std::to_string(i * 7 % 11));
        const FusionRing r(names, dual, {0}, c);
        CHECK(parse_fusion(serialize_fusion(r)) == r);

        Tensor3<Rational> m(n, n, n);
        Vector u(n), e(n);
        for (auto i = 0u; i < n; ++i) {
            u[i] = g.rational();
            e[i] = g.rational();
            for (auto j = 0u; j < n; ++j)
                for (auto k = 0u; k < n; ++k) m(i, j, k) = g.integer(0, 2) ? Rational(0) : g.rational();
        }
        std::vector<std::string> basis;
        for (std::size_t i = 0; i < n; ++i) basis.push_back("b" + std::to_string(i));
        const FrobeniusAlgebra a(basis, m, u, e);
        CHECK(parse_algebra(serialize_algebra(a)) == a);
    }
}

TEST_CASE("fusion parsing: the Fibonacci file is a rank two ring")
{
    const auto r = parse_fusion(corpus_text("fusion/fib.fusion"));
    CHECK(r.rank() == 2);
    CHECK(r.name(1) == "tau");
}

TEST_CASE("fusion parsing: comments, defaults and both dual directions")
{
    const auto r = parse_fusion("# a comment\nrank 3   # trailing\nunit 0\ndual 1 2\nN 0 0 0 1\n");
    CHECK(r.dual(1) == 2);
    CHECK(r.dual(2) == 1);
    CHECK(r.dual(0) == 0);
    CHECK(r.name(2) == "2");
}

TEST_CASE("fusion parsing errors carry positions")
{
    CHECK(error_message([] { (void)parse_fusion(""); }) == "missing rank");
    CHECK(error_message([] { (void)parse_fusion("# only a comment\n"); }) == "missing rank");
    CHECK(error_message([] { (void)parse_fusion("rank 1\nunit 0\nN 0 0 0 -1\n"); }).find("negative coefficient") == 0);
    try {
        (void)parse_fusion("rank 1\nunit 0\nN 0 0 0 -1\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 9);
        CHECK(std::string(e.what()) == "3:9: negative coefficient -1");
    }
    CHECK(error_message([] { (void)parse_fusion("rank 2\nunit 0\ndual 0 1\ndual 1 0\n"); })
              .find("duplicate dual") == 0);
    CHECK(error_line([] { (void)parse_fusion("rank 2\nunit 0\nbogus 1\n"); }) == 3);
    CHECK(error_line([] { (void)parse_fusion("rank 2\nunit 0\nN 0 0 5 1\n"); }) == 3);
    CHECK(error_line([] { (void)parse_fusion("rank 2\nunit 0\nN 0 0 0\n"); }) == 3);
    CHECK(error_line([] { (void)parse_fusion("unit 0\nrank 2\n"); }) == 1);
    CHECK(error_message([] { (void)parse_fusion("rank 2\n"); }) == "missing unit");
    CHECK(error_line([] { (void)parse_fusion("rank 2\nunit 0\nlabel 0 a\nlabel 1 a\n"); }) == 4);
}

TEST_CASE("algebra parsing errors")
{
    CHECK(error_message([] { (void)parse_algebra(""); }) == "missing dim");
    CHECK(error_line([] { (void)parse_algebra("dim 1\nmult 0 0 0 x\n"); }) == 2);
    CHECK(error_line([] { (void)parse_algebra("dim 1\nunit 0 1\nunit 0 1\n"); }) == 3);
    CHECK(error_line([] { (void)parse_algebra("dim 1\ncounit 3 1\n"); }) == 2);
}

TEST_CASE("category parsing: expressions, zero and errors")
{
    const auto c = parse_category("object x\nhom x x a\nhom x x b\ncompose a a = a\ncompose a b = 1/2*b + -1*a\n"
                                  "compose b a = 0\nidentity x = 1*a\n");
    CHECK(c.composition(0, 0, 0)(1, 0, 0) == Rational(0));
    CHECK(c.composition(0, 0, 0)(0, 1, 1) == Rational(1, 2));
    CHECK(c.composition(0, 0, 0)(0, 1, 0) == Rational(-1));
    CHECK(error_line([] { (void)parse_category("object x\nhom x y f\n"); }) == 2);
    CHECK(error_line([] { (void)parse_category("object x\nhom x x f\ncompose f f = 2*g\n"); }) == 3);
    CHECK(error_line([] { (void)parse_category("object x\nhom x x f\ncompose f f 1*f\n"); }) == 3);
    CHECK(error_message([] { (void)parse_category("object x\nhom x x f\n"); }).find("missing identity") == 0);
}

TEST_CASE("surface, twist and word parsing errors")
{
    const auto r = test::corpus_fusion("fib");
    CHECK(parse_surfaces("surface torus: genus 1\n", r)[0].surface == ColouredSurface{1, {}});
    CHECK(error_line([&] { (void)parse_surfaces("surface a: genus 0 boundary sigma\n", r); }) == 1);
    CHECK(error_line([&] { (void)parse_surfaces("surface a genus 0\n", r); }) == 1);
    CHECK(error_line([&] { (void)parse_surfaces("surface a: genus 0\nsurface a: genus 1\n", r); }) == 2);
    CHECK(error_line([&] { (void)parse_twists("twist tau = zeta(0,1)\n", r); }) == 1);
    CHECK(error_line([&] { (void)parse_twists("twist tau = 0\n", r); }) == 1);
    CHECK(error_line([&] { (void)parse_twists("twist tau = 1\ntwist tau = 1\n", r); }) == 2);
    CHECK(parse_twists("twist tau = 2/3\n", r).h[1] == TwistValue::rational(Rational(2, 3)));
    CHECK(!parse_twists("twist tau = 2/3\n", r).h[0].has_value());
    CHECK(error_line([] { (void)parse_word("unit\ncomult\nglue\n"); }) == 3);
}

TEST_CASE("corpus lookup falls back to the corpus directory")
{
    setenv("MODFUN_CORPUS", test::corpus_dir().c_str(), 1);
    CHECK(resolve_input("fib.fusion") == test::corpus_dir() / "fusion" / "fib.fusion");
    CHECK(resolve_input("fusion/z2.fusion") == test::corpus_dir() / "fusion" / "z2.fusion");
    CHECK(resolve_input("no_such_file") == std::filesystem::path("no_such_file"));
    CHECK_THROWS_AS((void)read_text_file("no_such_file"), std::runtime_error);
}

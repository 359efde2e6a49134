#include "modfun/tqft.hpp"

#include <array>
#include <random>

namespace modfun {

namespace {

std::size_t ipow(std::size_t base, std::size_t e)
{
    std::size_t r = 1;
    while (e--) r *= base;
    return r;
}

// Replaces wires [offset, offset + in) of `state` (rows = d^wires) with the
// outputs of `local` (d^out x d^in).
Matrix apply_local(const Matrix& state, std::size_t d, std::size_t wires, std::size_t offset, std::size_t in,
                   std::size_t out, const Matrix& local)
{
    const std::size_t left = ipow(d, offset);
    const std::size_t mid_in = ipow(d, in);
    const std::size_t mid_out = ipow(d, out);
    const std::size_t right = ipow(d, wires - offset - in);
    Matrix next(left * mid_out * right, state.cols());
    for (std::size_t l = 0; l < left; ++l)
        for (std::size_t mi = 0; mi < mid_in; ++mi)
            for (std::size_t rt = 0; rt < right; ++rt) {
                const std::size_t src = (l * mid_in + mi) * right + rt;
                for (std::size_t c = 0; c < state.cols(); ++c) {
                    const Rational& v = state(src, c);
                    if (v.is_zero()) continue;
                    for (std::size_t mo = 0; mo < mid_out; ++mo) {
                        const Rational& coef = local(mo, mi);
                        if (!coef.is_zero()) next((l * mid_out + mo) * right + rt, c) += coef * v;
                    }
                }
            }
    return next;
}

Matrix random_invertible(std::size_t n, std::mt19937_64& rng)
{
    static const std::array<Rational, 8> entries = {Rational(0), Rational(1),     Rational(-1),   Rational(2),
                                                     Rational(0), Rational(1, 2), Rational(-1, 3), Rational(3)};
    std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
    while (true) {
        Matrix p(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p(i, j) = entries[pick(rng)];
        if (rank(p) == n) return p;
    }
}

CobordismWord word(std::initializer_list<std::vector<Generator>> layers) { return CobordismWord{layers}; }

}  // namespace

FrobeniusAlgebra::FrobeniusAlgebra(std::vector<std::string> basis, Tensor3<Rational> mult, Vector unit,
                                   Vector counit)
    : names_(std::move(basis)), mult_(std::move(mult)), unit_(std::move(unit)), counit_(std::move(counit))
{
    const std::size_t n = names_.size();
    const auto& d = mult_.dims();
    if (d[0] != n || d[1] != n || d[2] != n)
        throw DimensionMismatch("multiplication table shape does not match dimension " + std::to_string(n));
    if (unit_.size() != n || counit_.size() != n)
        throw DimensionMismatch("unit or counit length does not match dimension " + std::to_string(n));
}

Vector FrobeniusAlgebra::multiply(const Vector& a, const Vector& b) const
{
    const std::size_t n = dim();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            const Rational w = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!mult_(i, j, k).is_zero()) out[k] += w * mult_(i, j, k);
        }
    }
    return out;
}

Rational FrobeniusAlgebra::apply_counit(const Vector& a) const
{
    Rational s;
    for (std::size_t i = 0; i < dim(); ++i) s += a[i] * counit_[i];
    return s;
}

Matrix FrobeniusAlgebra::pairing() const
{
    Matrix g(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t k = 0; k < dim(); ++k) g(i, j) += mult_(i, j, k) * counit_[k];
    return g;
}

Matrix FrobeniusAlgebra::copairing() const
{
    try {
        return invert(pairing());
    } catch (const SingularMatrix& e) {
        throw DegeneratePairing("pairing eps(e_i e_j) is degenerate: rank " + std::to_string(e.rank()) + " < " +
                                std::to_string(dim()));
    }
}

bool FrobeniusAlgebra::is_commutative() const
{
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            for (std::size_t k = 0; k < dim(); ++k)
                if (mult_(i, j, k) != mult_(j, i, k)) return false;
    return true;
}

FrobeniusAlgebra FrobeniusAlgebra::with_mult(std::size_t i, std::size_t j, std::size_t k, Rational value) const
{
    FrobeniusAlgebra copy = *this;
    copy.mult_.at(i, j, k) = std::move(value);
    return copy;
}

Report validate_frobenius(const FrobeniusAlgebra& a)
{
    Report rep{"frobenius algebra", {}};
    const std::size_t n = a.dim();
    auto e = [n](std::size_t i) {
        Vector v(n);
        v[i] = 1;
        return v;
    };
    const auto& names = a.basis_names();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vector lhs = a.multiply(a.multiply(e(i), e(j)), e(k));
                const Vector rhs = a.multiply(e(i), a.multiply(e(j), e(k)));
                if (lhs != rhs)
                    rep.add("assoc", {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                                      static_cast<std::int64_t>(k)},
                            "(" + names[i] + " " + names[j] + ") " + names[k] + " != " + names[i] + " (" + names[j] +
                                " " + names[k] + ")");
                if (a.apply_counit(lhs) != a.apply_counit(rhs))
                    rep.add("invariance", {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                                           static_cast<std::int64_t>(k)},
                            "<" + names[i] + " " + names[j] + ", " + names[k] + "> != <" + names[i] + ", " +
                                names[j] + " " + names[k] + ">");
            }
    for (std::size_t i = 0; i < n; ++i) {
        if (a.multiply(a.unit(), e(i)) != e(i))
            rep.add("unit", {static_cast<std::int64_t>(i)}, "1 " + names[i] + " != " + names[i]);
        if (a.multiply(e(i), a.unit()) != e(i))
            rep.add("unit", {static_cast<std::int64_t>(i)}, names[i] + " 1 != " + names[i]);
    }
    const std::size_t rk = rank(a.pairing());
    if (rk != n)
        rep.add("degenerate", {static_cast<std::int64_t>(rk)},
                "pairing has rank " + std::to_string(rk) + " < dimension " + std::to_string(n));
    return rep;
}

std::string_view generator_name(Generator g)
{
    switch (g) {
    case Generator::Id: return "id";
    case Generator::Swap: return "swap";
    case Generator::Mult: return "mult";
    case Generator::Comult: return "comult";
    case Generator::Unit: return "unit";
    case Generator::Counit: return "counit";
    case Generator::Cup: return "cup";
    case Generator::Cap: return "cap";
    }
    return "?";
}

std::optional<Generator> parse_generator(std::string_view name)
{
    for (auto g : {Generator::Id, Generator::Swap, Generator::Mult, Generator::Comult, Generator::Unit,
                   Generator::Counit, Generator::Cup, Generator::Cap})
        if (generator_name(g) == name) return g;
    return std::nullopt;
}

std::pair<std::size_t, std::size_t> arity(Generator g)
{
    switch (g) {
    case Generator::Id: return {1, 1};
    case Generator::Swap: return {2, 2};
    case Generator::Mult: return {2, 1};
    case Generator::Comult: return {1, 2};
    case Generator::Unit: return {0, 1};
    case Generator::Counit: return {1, 0};
    case Generator::Cup: return {0, 2};
    case Generator::Cap: return {2, 0};
    }
    return {0, 0};
}

WordTypeError::WordTypeError(std::size_t layer, const std::string& what) : std::invalid_argument(what), layer_(layer)
{
}

std::pair<std::size_t, std::size_t> check_word(const CobordismWord& w)
{
    std::size_t in = 0;
    std::size_t wires = 0;
    for (std::size_t t = 0; t < w.layers.size(); ++t) {
        std::size_t layer_in = 0;
        std::size_t layer_out = 0;
        for (auto g : w.layers[t]) {
            layer_in += arity(g).first;
            layer_out += arity(g).second;
        }
        if (t == 0)
            in = layer_in;
        else if (layer_in != wires)
            throw WordTypeError(t, "layer " + std::to_string(t + 1) + " consumes " + std::to_string(layer_in) +
                                       " wires but the previous layer produces " + std::to_string(wires));
        wires = layer_out;
    }
    return {in, wires};
}

Matrix generator_matrix(const FrobeniusAlgebra& a, Generator g)
{
    const std::size_t d = a.dim();
    switch (g) {
    case Generator::Id: return Matrix::identity(d);
    case Generator::Swap: {
        Matrix m(d * d, d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m(j * d + i, i * d + j) = 1;
        return m;
    }
    case Generator::Mult: {
        Matrix m(d, d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) m(k, i * d + j) = a.mult(i, j, k);
        return m;
    }
    case Generator::Comult: {
        // (id x mult) o (cup x id): e_k -> sum g^{ij} e_i x e_j e_k
        const Matrix ginv = a.copairing();
        Matrix m(d * d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (ginv(i, j).is_zero()) continue;
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t l = 0; l < d; ++l)
                        if (!a.mult(j, k, l).is_zero()) m(i * d + l, k) += ginv(i, j) * a.mult(j, k, l);
            }
        return m;
    }
    case Generator::Unit: {
        Matrix m(d, 1);
        for (std::size_t k = 0; k < d; ++k) m(k, 0) = a.unit()[k];
        return m;
    }
    case Generator::Counit: {
        Matrix m(1, d);
        for (std::size_t k = 0; k < d; ++k) m(0, k) = a.counit()[k];
        return m;
    }
    case Generator::Cup: {
        const Matrix ginv = a.copairing();
        Matrix m(d * d, 1);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m(i * d + j, 0) = ginv(i, j);
        return m;
    }
    case Generator::Cap: {
        const Matrix g0 = a.pairing();
        Matrix m(1, d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m(0, i * d + j) = g0(i, j);
        return m;
    }
    }
    return {};
}

LinearMap evaluate_word(const FrobeniusAlgebra& a, const CobordismWord& w)
{
    const auto [in, out] = check_word(w);
    const std::size_t d = a.dim();
    Matrix state = Matrix::identity(ipow(d, in));
    std::size_t wires = in;
    for (const auto& layer : w.layers) {
        std::size_t offset = 0;
        for (auto g : layer) {
            const auto [gi, go] = arity(g);
            state = apply_local(state, d, wires, offset, gi, go, generator_matrix(a, g));
            wires = wires - gi + go;
            offset += go;
        }
    }
    return LinearMap{in, out, std::move(state)};
}

Rational evaluate_closed(const FrobeniusAlgebra& a, const CobordismWord& w)
{
    const auto [in, out] = check_word(w);
    if (in != 0 || out != 0)
        throw WordTypeError(0, "word is not closed: " + std::to_string(in) + " -> " + std::to_string(out));
    return evaluate_word(a, w).matrix(0, 0);
}

Vector handle_element(const FrobeniusAlgebra& a)
{
    const Matrix ginv = a.copairing();
    const std::size_t d = a.dim();
    Vector omega(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (ginv(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < d; ++k) omega[k] += ginv(i, j) * a.mult(i, j, k);
        }
    return omega;
}

Rational genus_invariant(const FrobeniusAlgebra& a, std::size_t genus)
{
    const Vector omega = handle_element(a);
    Vector power = a.unit();
    for (std::size_t g = 0; g < genus; ++g) power = a.multiply(omega, power);
    return a.apply_counit(power);
}

CobordismWord canonical_genus_word(std::size_t genus)
{
    CobordismWord w;
    w.layers.push_back({Generator::Unit});
    for (std::size_t g = 0; g < genus; ++g) {
        w.layers.push_back({Generator::Comult});
        w.layers.push_back({Generator::Mult});
    }
    w.layers.push_back({Generator::Counit});
    return w;
}

std::vector<CobordismWord> genus_words(std::size_t genus, bool commutative)
{
    using G = Generator;
    std::vector<CobordismWord> out{canonical_genus_word(genus)};
    if (genus >= 1) {
        CobordismWord cup_first = word({{G::Cup}, {G::Mult}});
        for (std::size_t g = 1; g < genus; ++g) {
            cup_first.layers.push_back({G::Comult});
            cup_first.layers.push_back({G::Mult});
        }
        cup_first.layers.push_back({G::Counit});
        out.push_back(cup_first);

        CobordismWord cap_last = word({{G::Unit}});
        for (std::size_t g = 1; g < genus; ++g) {
            cap_last.layers.push_back({G::Comult});
            cap_last.layers.push_back({G::Mult});
        }
        cap_last.layers.push_back({G::Comult});
        cap_last.layers.push_back({G::Cap});
        out.push_back(cap_last);
    }
    if (genus == 1) out.push_back(word({{G::Cup}, {G::Cap}}));
    if (genus >= 2) {
        CobordismWord side = word({{G::Unit}, {G::Comult}});
        for (std::size_t g = 1; g < genus; ++g) {
            side.layers.push_back({G::Comult, G::Id});
            side.layers.push_back({G::Mult, G::Id});
        }
        side.layers.push_back({G::Mult});
        side.layers.push_back({G::Counit});
        out.push_back(side);
    }
    if (commutative && genus >= 1) {
        CobordismWord swapped = word({{G::Unit}});
        for (std::size_t g = 0; g < genus; ++g) {
            swapped.layers.push_back({G::Comult});
            swapped.layers.push_back({G::Swap});
            swapped.layers.push_back({G::Mult});
        }
        swapped.layers.push_back({G::Counit});
        out.push_back(swapped);
    }
    return out;
}

FrobeniusAlgebra change_basis(const FrobeniusAlgebra& a, const Matrix& p)
{
    const std::size_t n = a.dim();
    if (p.rows() != n || !p.is_square()) throw DimensionMismatch("basis change matrix does not match dimension");
    const Matrix q = invert(p);
    // Contract one index at a time: t1(a,j,k) = sum_i P(i,a) c(i,j,k), etc.
    Tensor3<Rational> t1(n, n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t i = 0; i < n; ++i) {
            if (p(i, x).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!a.mult(i, j, k).is_zero()) t1(x, j, k) += p(i, x) * a.mult(i, j, k);
        }
    Tensor3<Rational> t2(n, n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t j = 0; j < n; ++j) {
                if (p(j, y).is_zero()) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (!t1(x, j, k).is_zero()) t2(x, y, k) += p(j, y) * t1(x, j, k);
            }
    Tensor3<Rational> c(n, n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t k = 0; k < n; ++k) {
                if (t2(x, y, k).is_zero()) continue;
                for (std::size_t z = 0; z < n; ++z)
                    if (!q(z, k).is_zero()) c(x, y, z) += q(z, k) * t2(x, y, k);
            }
    Vector unit = q * a.unit();
    Vector counit(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t i = 0; i < n; ++i) counit[x] += p(i, x) * a.counit()[i];
    std::vector<std::string> names;
    for (std::size_t x = 0; x < n; ++x) names.push_back("f" + std::to_string(x));
    return FrobeniusAlgebra(std::move(names), std::move(c), std::move(unit), std::move(counit));
}

FrobeniusAlgebra direct_sum(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b)
{
    const std::size_t na = a.dim();
    const std::size_t n = na + b.dim();
    std::vector<std::string> names = a.basis_names();
    for (const auto& s : b.basis_names()) names.push_back(s + "'");
    Tensor3<Rational> c(n, n, n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) c(i, j, k) = a.mult(i, j, k);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k) c(na + i, na + j, na + k) = b.mult(i, j, k);
    Vector unit = a.unit();
    unit.insert(unit.end(), b.unit().begin(), b.unit().end());
    Vector counit = a.counit();
    counit.insert(counit.end(), b.counit().begin(), b.counit().end());
    return FrobeniusAlgebra(std::move(names), std::move(c), std::move(unit), std::move(counit));
}

Report invariance_suite(const FrobeniusAlgebra& a, std::size_t trials, std::size_t max_genus, std::uint64_t seed)
{
    Report rep{"tqft invariance", {}};
    if (rank(a.pairing()) != a.dim()) {
        rep.add("degenerate", {}, "pairing is degenerate; no invariants defined");
        return rep;
    }
    std::vector<Rational> reference;
    for (std::size_t g = 0; g <= max_genus; ++g) reference.push_back(genus_invariant(a, g));

    const bool commutative = a.is_commutative();
    for (std::size_t g = 0; g <= max_genus; ++g) {
        const auto words = genus_words(g, commutative);
        for (std::size_t w = 0; w < words.size(); ++w) {
            const Rational v = evaluate_closed(a, words[w]);
            if (v != reference[g])
                rep.add(w == 0 ? "handle" : "word", {static_cast<std::int64_t>(g), static_cast<std::int64_t>(w)},
                        "genus " + std::to_string(g) + " word #" + std::to_string(w) + " evaluates to " + v.str() +
                            ", eps(omega^g) = " + reference[g].str());
        }
    }

    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const Matrix p = random_invertible(a.dim(), rng);
        const FrobeniusAlgebra b = change_basis(a, p);
        for (std::size_t g = 0; g <= max_genus; ++g) {
            const Rational v = genus_invariant(b, g);
            if (v != reference[g])
                rep.add("basis", {static_cast<std::int64_t>(t), static_cast<std::int64_t>(g)},
                        "basis change " + to_string(p) + " moves genus " + std::to_string(g) + " invariant from " +
                            reference[g].str() + " to " + v.str());
        }
    }
    return rep;
}

Report verify_tensor_identities(const FrobeniusAlgebra& a)
{
    using G = Generator;
    Report rep{"frobenius tensor identities", {}};
    const Matrix id = Matrix::identity(a.dim());
    const Matrix snake_left = evaluate_word(a, word({{G::Id, G::Cup}, {G::Cap, G::Id}})).matrix;
    const Matrix snake_right = evaluate_word(a, word({{G::Cup, G::Id}, {G::Id, G::Cap}})).matrix;
    if (snake_left != id) rep.add("snake", {0}, "(cap x id)(id x cup) = " + to_string(snake_left) + " != id");
    if (snake_right != id) rep.add("snake", {1}, "(id x cap)(cup x id) = " + to_string(snake_right) + " != id");
    const Rational trace = evaluate_closed(a, word({{G::Cup}, {G::Cap}}));
    if (trace != Rational(static_cast<std::int64_t>(a.dim())))
        rep.add("trace", {}, "cap o cup = " + trace.str() + " != dim " + std::to_string(a.dim()));
    const Matrix left = evaluate_word(a, word({{G::Id, G::Comult}, {G::Mult, G::Id}})).matrix;
    const Matrix middle = evaluate_word(a, word({{G::Mult}, {G::Comult}})).matrix;
    const Matrix right = evaluate_word(a, word({{G::Comult, G::Id}, {G::Id, G::Mult}})).matrix;
    if (left != middle) rep.add("frobenius", {0}, "(mult x id)(id x comult) != comult o mult");
    if (right != middle) rep.add("frobenius", {1}, "(id x mult)(comult x id) != comult o mult");
    return rep;
}

FrobeniusAlgebra frobenius_from_fusion(const FusionRing& r)
{
    const std::size_t n = r.rank();
    Tensor3<Rational> c(n, n, n);
    for (Label a = 0; a < n; ++a)
        for (Label b = 0; b < n; ++b)
            for (Label g = 0; g < n; ++g) c(a, b, g) = r.n(a, b, g);
    Vector unit(n);
    Vector counit(n);
    for (auto u : r.unit_components()) {
        unit[u] = 1;
        counit[u] = 1;
    }
    FrobeniusAlgebra alg(r.names(), std::move(c), std::move(unit), std::move(counit));
    const std::size_t rk = rank(alg.pairing());
    if (rk != n)
        throw DegeneratePairing("fusion pairing has rank " + std::to_string(rk) + " < " + std::to_string(n) +
                                "; the fusion axioms fail");
    return alg;
}

}  // namespace modfun

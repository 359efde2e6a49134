#include "modfun/lincat.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace modfun {

namespace {

std::string expr(const Vector& v, const std::vector<std::string>& names)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!s.empty()) s += "+";
        s += v[i].str() + "*" + names[i];
    }
    return s.empty() ? "0" : s;
}

void add_scaled(Vector& into, const Rational& s, const Vector& v)
{
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) into[i] += s * v[i];
}

}  // namespace

// --- PresentedCategory -----------------------------------------------------

std::optional<std::size_t> PresentedCategory::find_object(const std::string& name) const
{
    auto it = std::find(objects_.begin(), objects_.end(), name);
    if (it == objects_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - objects_.begin());
}

const Tensor3<Rational>& PresentedCategory::composition(std::size_t p, std::size_t q, std::size_t r) const
{
    const std::size_t n = objects_.size();
    if (p >= n || q >= n || r >= n) throw CategoryLoadError("object index out of range");
    return composition_[(p * n + q) * n + r];
}

Morphism PresentedCategory::basis_morphism(std::size_t p, std::size_t q, std::size_t i) const
{
    Morphism m = zero(p, q);
    m.coeffs.at(i) = 1;
    return m;
}

Morphism PresentedCategory::zero(std::size_t p, std::size_t q) const { return Morphism{p, q, Vector(hom_dim(p, q))}; }

Morphism PresentedCategory::compose(const Morphism& g, const Morphism& f) const
{
    if (f.dst != g.src)
        throw DimensionMismatch("cannot compose " + object_name(g.src) + "->" + object_name(g.dst) + " after " +
                                object_name(f.src) + "->" + object_name(f.dst));
    const auto& t = composition(f.src, f.dst, g.dst);
    Morphism out = zero(f.src, g.dst);
    for (std::size_t a = 0; a < g.coeffs.size(); ++a) {
        if (g.coeffs[a].is_zero()) continue;
        for (std::size_t b = 0; b < f.coeffs.size(); ++b) {
            if (f.coeffs[b].is_zero()) continue;
            const Rational w = g.coeffs[a] * f.coeffs[b];
            for (std::size_t h = 0; h < out.coeffs.size(); ++h)
                if (!t(a, b, h).is_zero()) out.coeffs[h] += w * t(a, b, h);
        }
    }
    return out;
}

// --- CategoryBuilder -------------------------------------------------------

std::size_t CategoryBuilder::add_object(const std::string& name)
{
    if (find_object(name)) throw CategoryLoadError("duplicate object '" + name + "'");
    objects_.push_back(name);
    return objects_.size() - 1;
}

std::optional<std::size_t> CategoryBuilder::find_object(const std::string& name) const
{
    auto it = std::find(objects_.begin(), objects_.end(), name);
    if (it == objects_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - objects_.begin());
}

std::size_t CategoryBuilder::add_hom(std::size_t p, std::size_t q, const std::string& basis_name)
{
    if (p >= objects_.size() || q >= objects_.size()) throw CategoryLoadError("hom between unknown objects");
    if (basis_.count(basis_name)) throw CategoryLoadError("duplicate basis morphism '" + basis_name + "'");
    auto& names = homs_[{p, q}];
    names.push_back(basis_name);
    basis_.emplace(basis_name, BasisRef{p, q, names.size() - 1});
    return names.size() - 1;
}

const CategoryBuilder::BasisRef& CategoryBuilder::lookup(const std::string& basis) const
{
    auto it = basis_.find(basis);
    if (it == basis_.end()) throw CategoryLoadError("unknown basis morphism '" + basis + "'");
    return it->second;
}

Vector CategoryBuilder::combination(std::size_t p, std::size_t q,
                                    const std::vector<std::pair<Rational, std::string>>& terms) const
{
    auto it = homs_.find({p, q});
    Vector v(it == homs_.end() ? 0 : it->second.size());
    for (const auto& [c, name] : terms) {
        const auto& ref = lookup(name);
        if (ref.p != p || ref.q != q)
            throw CategoryLoadError("'" + name + "' is in hom(" + objects_[ref.p] + "," + objects_[ref.q] +
                                    "), expected hom(" + objects_[p] + "," + objects_[q] + ")");
        v[ref.i] += c;
    }
    return v;
}

void CategoryBuilder::set_composition(const std::string& g, const std::string& f,
                                      const std::vector<std::pair<Rational, std::string>>& terms)
{
    const auto gr = lookup(g);
    const auto fr = lookup(f);
    if (fr.q != gr.p)
        throw CategoryLoadError("cannot compose '" + g + "' after '" + f + "': " + objects_[fr.q] +
                                " != " + objects_[gr.p]);
    set_composition(fr.p, fr.q, gr.q, gr.i, fr.i, combination(fr.p, gr.q, terms));
}

void CategoryBuilder::set_composition(std::size_t p, std::size_t q, std::size_t r, std::size_t g, std::size_t f,
                                      Vector value)
{
    auto dim = [&](std::size_t a, std::size_t b) {
        auto it = homs_.find({a, b});
        return it == homs_.end() ? std::size_t{0} : it->second.size();
    };
    if (g >= dim(q, r) || f >= dim(p, q) || value.size() != dim(p, r))
        throw CategoryLoadError("composition entry out of range");
    comps_[{p, q, r, g, f}] = std::move(value);
}

void CategoryBuilder::set_identity(std::size_t p, const std::vector<std::pair<Rational, std::string>>& terms)
{
    set_identity(p, combination(p, p, terms));
}

void CategoryBuilder::set_identity(std::size_t p, Vector value)
{
    if (p >= objects_.size()) throw CategoryLoadError("identity for unknown object");
    auto it = homs_.find({p, p});
    if (value.size() != (it == homs_.end() ? 0 : it->second.size()))
        throw CategoryLoadError("identity of " + objects_[p] + " has wrong length");
    if (identities_.count(p)) throw CategoryLoadError("identity of " + objects_[p] + " given twice");
    identities_[p] = std::move(value);
}

PresentedCategory CategoryBuilder::build() const
{
    PresentedCategory c;
    const std::size_t n = objects_.size();
    c.objects_ = objects_;
    c.hom_names_.resize(n * n);
    for (const auto& [pq, names] : homs_) c.hom_names_[pq.first * n + pq.second] = names;
    c.composition_.reserve(n * n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r)
                c.composition_.emplace_back(c.hom_dim(q, r), c.hom_dim(p, q), c.hom_dim(p, r));
    for (const auto& [key, value] : comps_) {
        auto& t = c.composition_[(key[0] * n + key[1]) * n + key[2]];
        for (std::size_t h = 0; h < value.size(); ++h) t(key[3], key[4], h) = value[h];
    }
    for (std::size_t p = 0; p < n; ++p) {
        auto it = identities_.find(p);
        if (it == identities_.end()) {
            if (c.hom_dim(p, p) != 0) throw CategoryLoadError("missing identity for object '" + objects_[p] + "'");
            c.identities_.push_back(Morphism{p, p, {}});
        } else {
            c.identities_.push_back(Morphism{p, p, it->second});
        }
    }
    return c;
}

// --- validation ------------------------------------------------------------

Report validate_category(const PresentedCategory& c)
{
    Report rep{"category axioms", {}};
    const std::size_t n = c.num_objects();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s)
                    for (std::size_t f = 0; f < c.hom_dim(p, q); ++f)
                        for (std::size_t g = 0; g < c.hom_dim(q, r); ++g)
                            for (std::size_t h = 0; h < c.hom_dim(r, s); ++h) {
                                const Morphism fm = c.basis_morphism(p, q, f);
                                const Morphism gm = c.basis_morphism(q, r, g);
                                const Morphism hm = c.basis_morphism(r, s, h);
                                if (c.compose(c.compose(hm, gm), fm) != c.compose(hm, c.compose(gm, fm)))
                                    rep.add("assoc",
                                            {static_cast<std::int64_t>(h), static_cast<std::int64_t>(g),
                                             static_cast<std::int64_t>(f)},
                                            "(" + c.hom_basis(r, s)[h] + " o " + c.hom_basis(q, r)[g] + ") o " +
                                                c.hom_basis(p, q)[f] + " != " + c.hom_basis(r, s)[h] + " o (" +
                                                c.hom_basis(q, r)[g] + " o " + c.hom_basis(p, q)[f] + ")");
                            }
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t f = 0; f < c.hom_dim(p, q); ++f) {
                const Morphism fm = c.basis_morphism(p, q, f);
                if (c.compose(c.identity(q), fm) != fm)
                    rep.add("identity", {static_cast<std::int64_t>(q), static_cast<std::int64_t>(f)},
                            "id_" + c.object_name(q) + " o " + c.hom_basis(p, q)[f] + " != " + c.hom_basis(p, q)[f]);
                if (c.compose(fm, c.identity(p)) != fm)
                    rep.add("identity", {static_cast<std::int64_t>(p), static_cast<std::int64_t>(f)},
                            c.hom_basis(p, q)[f] + " o id_" + c.object_name(p) + " != " + c.hom_basis(p, q)[f]);
            }
    return rep;
}

// --- additive completion ---------------------------------------------------

PresentedCategory mat_completion(const PresentedCategory& c, std::size_t bound, bool with_zero_object)
{
    if (bound < 1) throw std::invalid_argument("mat completion bound must be at least 1");
    std::vector<std::vector<std::size_t>> seqs;
    if (with_zero_object) seqs.emplace_back();
    std::vector<std::vector<std::size_t>> layer{{}};
    for (std::size_t len = 1; len <= bound; ++len) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& s : layer)
            for (std::size_t p = 0; p < c.num_objects(); ++p) {
                auto t = s;
                t.push_back(p);
                next.push_back(std::move(t));
            }
        seqs.insert(seqs.end(), next.begin(), next.end());
        layer = std::move(next);
    }

    CategoryBuilder b;
    for (std::size_t x = 0; x < seqs.size(); ++x) {
        std::string name = "[";
        for (std::size_t i = 0; i < seqs[x].size(); ++i) name += (i ? "," : "") + c.object_name(seqs[x][i]);
        b.add_object(name + "]");
    }
    // slot[x][y][(row, col)] = offset of entry (row, col) in hom(x, y)'s basis.
    const std::size_t m = seqs.size();
    std::vector<std::vector<std::vector<std::size_t>>> offset(m, std::vector<std::vector<std::size_t>>(m));
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            std::size_t next = 0;
            for (std::size_t row = 0; row < seqs[y].size(); ++row)
                for (std::size_t col = 0; col < seqs[x].size(); ++col) {
                    offset[x][y].push_back(next);
                    const auto p = seqs[x][col];
                    const auto q = seqs[y][row];
                    for (const auto& bn : c.hom_basis(p, q))
                        b.add_hom(x, y,
                                  bn + "@" + std::to_string(x) + ">" + std::to_string(y) + "(" + std::to_string(row) +
                                      "," + std::to_string(col) + ")");
                    next += c.hom_dim(p, q);
                }
        }
    auto dim = [&](std::size_t x, std::size_t y) {
        std::size_t d = 0;
        for (auto q : seqs[y])
            for (auto p : seqs[x]) d += c.hom_dim(p, q);
        return d;
    };
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t z = 0; z < m; ++z) {
                const std::size_t dxz = dim(x, z);
                // g: entry (k, j) of hom(y, z); f: entry (j, i) of hom(x, y).
                for (std::size_t k = 0; k < seqs[z].size(); ++k)
                    for (std::size_t j = 0; j < seqs[y].size(); ++j)
                        for (std::size_t i = 0; i < seqs[x].size(); ++i) {
                            const auto p = seqs[x][i];
                            const auto q = seqs[y][j];
                            const auto r = seqs[z][k];
                            const auto& t = c.composition(p, q, r);
                            const std::size_t g0 = offset[y][z][k * seqs[y].size() + j];
                            const std::size_t f0 = offset[x][y][j * seqs[x].size() + i];
                            const std::size_t h0 = offset[x][z][k * seqs[x].size() + i];
                            for (std::size_t g = 0; g < c.hom_dim(q, r); ++g)
                                for (std::size_t f = 0; f < c.hom_dim(p, q); ++f) {
                                    Vector v(dxz);
                                    bool any = false;
                                    for (std::size_t h = 0; h < c.hom_dim(p, r); ++h)
                                        if (!t(g, f, h).is_zero()) {
                                            v[h0 + h] = t(g, f, h);
                                            any = true;
                                        }
                                    if (any) b.set_composition(x, y, z, g0 + g, f0 + f, std::move(v));
                                }
                        }
            }
    for (std::size_t x = 0; x < m; ++x) {
        Vector id(dim(x, x));
        for (std::size_t i = 0; i < seqs[x].size(); ++i) {
            const auto& base = c.identity(seqs[x][i]).coeffs;
            const std::size_t o = offset[x][x][i * seqs[x].size() + i];
            for (std::size_t h = 0; h < base.size(); ++h) id[o + h] = base[h];
        }
        b.set_identity(x, std::move(id));
    }
    return b.build();
}

// --- idempotent completion -------------------------------------------------

std::vector<Rational> default_idempotent_grid() { return {Rational(0), Rational(1), Rational(-1), Rational(1, 2)}; }

std::vector<IdempotentCandidate> grid_idempotents(const PresentedCategory& c, const std::vector<Rational>& grid)
{
    std::vector<Rational> values;
    for (const auto& g : grid)
        if (std::find(values.begin(), values.end(), g) == values.end()) values.push_back(g);
    std::vector<IdempotentCandidate> out;
    if (values.empty()) return out;
    for (std::size_t p = 0; p < c.num_objects(); ++p) {
        const std::size_t d = c.hom_dim(p, p);
        double combos = 1;
        for (std::size_t i = 0; i < d; ++i) combos *= static_cast<double>(values.size());
        if (combos > 1e7)
            throw std::invalid_argument("idempotent grid too large for " + c.object_name(p) + ": " +
                                        std::to_string(values.size()) + "^" + std::to_string(d));
        std::vector<std::size_t> digit(d, 0);
        while (true) {
            Morphism e{p, p, Vector(d)};
            for (std::size_t i = 0; i < d; ++i) e.coeffs[i] = values[digit[i]];
            if (c.compose(e, e) == e) out.push_back(IdempotentCandidate{p, e.coeffs});
            std::size_t pos = d;
            while (pos > 0 && digit[pos - 1] + 1 == values.size()) digit[--pos] = 0;
            if (pos == 0) break;
            ++digit[pos - 1];
        }
    }
    return out;
}

PresentedCategory karoubi_completion(const PresentedCategory& c, const std::vector<IdempotentCandidate>& idempotents)
{
    const std::size_t m = idempotents.size();
    std::vector<Morphism> es;
    for (const auto& cand : idempotents) {
        if (cand.object >= c.num_objects()) throw KaroubiError("idempotent on unknown object");
        if (cand.e.size() != c.hom_dim(cand.object, cand.object))
            throw KaroubiError("idempotent on " + c.object_name(cand.object) + " has wrong length");
        Morphism e{cand.object, cand.object, cand.e};
        const Morphism sq = c.compose(e, e);
        if (sq != e) {
            Vector residual = sq.coeffs;
            for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= e.coeffs[i];
            throw KaroubiError("not idempotent on " + c.object_name(cand.object) + ": e o e - e = " +
                               expr(residual, c.hom_basis(cand.object, cand.object)));
        }
        es.push_back(std::move(e));
    }

    // Hom((p,e),(q,e')) = {f : e' f = f = f e}, as the nullspace of f -> (e'f - f, fe - f).
    struct Sub {
        std::vector<Vector> basis;
        std::vector<std::size_t> coords;  // coordinate k of a member v is v[coords[k]]
    };
    std::vector<Sub> sub(m * m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            const std::size_t p = es[x].src;
            const std::size_t q = es[y].src;
            const std::size_t d = c.hom_dim(p, q);
            Matrix constraint(2 * d, d);
            for (std::size_t k = 0; k < d; ++k) {
                const Morphism f = c.basis_morphism(p, q, k);
                const Morphism post = c.compose(es[y], f);
                const Morphism pre = c.compose(f, es[x]);
                for (std::size_t i = 0; i < d; ++i) {
                    constraint(i, k) = post.coeffs[i] - f.coeffs[i];
                    constraint(d + i, k) = pre.coeffs[i] - f.coeffs[i];
                }
            }
            std::vector<std::size_t> piv;
            (void)rref(constraint, &piv);
            Sub s;
            s.basis = nullspace(constraint);
            for (std::size_t k = 0; k < d; ++k)
                if (std::find(piv.begin(), piv.end(), k) == piv.end()) s.coords.push_back(k);
            sub[x * m + y] = std::move(s);
        }

    CategoryBuilder b;
    for (std::size_t x = 0; x < m; ++x)
        b.add_object("(" + c.object_name(es[x].src) + "," + expr(es[x].coeffs, c.hom_basis(es[x].src, es[x].src)) +
                     ")");
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t k = 0; k < sub[x * m + y].basis.size(); ++k)
                b.add_hom(x, y, "t" + std::to_string(x) + ">" + std::to_string(y) + "." + std::to_string(k));

    auto coords = [&](const Sub& s, const Vector& v) {
        Vector out(s.coords.size());
        for (std::size_t k = 0; k < s.coords.size(); ++k) out[k] = v[s.coords[k]];
        return out;
    };
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t z = 0; z < m; ++z) {
                const Sub& sxy = sub[x * m + y];
                const Sub& syz = sub[y * m + z];
                const Sub& sxz = sub[x * m + z];
                for (std::size_t g = 0; g < syz.basis.size(); ++g)
                    for (std::size_t f = 0; f < sxy.basis.size(); ++f) {
                        // (e'', g, e') o (e', f, e) = (e'', g f, e)
                        const Morphism gf = c.compose(Morphism{es[y].src, es[z].src, syz.basis[g]},
                                                      Morphism{es[x].src, es[y].src, sxy.basis[f]});
                        Vector v = coords(sxz, gf.coeffs);
                        if (std::any_of(v.begin(), v.end(), [](const Rational& r) { return !r.is_zero(); }))
                            b.set_composition(x, y, z, g, f, std::move(v));
                    }
            }
    for (std::size_t x = 0; x < m; ++x) b.set_identity(x, coords(sub[x * m + x], es[x].coeffs));
    return b.build();
}

PresentedCategory karoubi_completion_from_grid(const PresentedCategory& c, const std::vector<Rational>& grid)
{
    return karoubi_completion(c, grid_idempotents(c, grid));
}

// --- tensor product --------------------------------------------------------

PresentedCategory tensor_product(const PresentedCategory& a, const PresentedCategory& b)
{
    const std::size_t na = a.num_objects();
    const std::size_t nb = b.num_objects();
    auto obj = [nb](std::size_t p, std::size_t q) { return p * nb + q; };
    CategoryBuilder out;
    for (std::size_t p = 0; p < na; ++p)
        for (std::size_t q = 0; q < nb; ++q) out.add_object("(" + a.object_name(p) + "," + b.object_name(q) + ")");
    for (std::size_t p = 0; p < na; ++p)
        for (std::size_t q = 0; q < nb; ++q)
            for (std::size_t r = 0; r < na; ++r)
                for (std::size_t s = 0; s < nb; ++s)
                    for (const auto& f : a.hom_basis(p, r))
                        for (const auto& g : b.hom_basis(q, s)) out.add_hom(obj(p, q), obj(r, s), f + "⊗" + g);

    for (std::size_t p1 = 0; p1 < na; ++p1)
        for (std::size_t p2 = 0; p2 < na; ++p2)
            for (std::size_t p3 = 0; p3 < na; ++p3) {
                const auto& ta = a.composition(p1, p2, p3);
                for (std::size_t q1 = 0; q1 < nb; ++q1)
                    for (std::size_t q2 = 0; q2 < nb; ++q2)
                        for (std::size_t q3 = 0; q3 < nb; ++q3) {
                            const auto& tb = b.composition(q1, q2, q3);
                            const std::size_t db23 = b.hom_dim(q2, q3);
                            const std::size_t db12 = b.hom_dim(q1, q2);
                            const std::size_t db13 = b.hom_dim(q1, q3);
                            for (std::size_t ga = 0; ga < a.hom_dim(p2, p3); ++ga)
                                for (std::size_t gb = 0; gb < db23; ++gb)
                                    for (std::size_t fa = 0; fa < a.hom_dim(p1, p2); ++fa)
                                        for (std::size_t fb = 0; fb < db12; ++fb) {
                                            Vector v(a.hom_dim(p1, p3) * db13);
                                            bool any = false;
                                            for (std::size_t ha = 0; ha < a.hom_dim(p1, p3); ++ha) {
                                                if (ta(ga, fa, ha).is_zero()) continue;
                                                for (std::size_t hb = 0; hb < db13; ++hb)
                                                    if (!tb(gb, fb, hb).is_zero()) {
                                                        v[ha * db13 + hb] = ta(ga, fa, ha) * tb(gb, fb, hb);
                                                        any = true;
                                                    }
                                            }
                                            if (any)
                                                out.set_composition(obj(p1, q1), obj(p2, q2), obj(p3, q3),
                                                                    ga * db23 + gb, fa * db12 + fb, std::move(v));
                                        }
                        }
            }
    for (std::size_t p = 0; p < na; ++p)
        for (std::size_t q = 0; q < nb; ++q) {
            const auto& ia = a.identity(p).coeffs;
            const auto& ib = b.identity(q).coeffs;
            Vector v(ia.size() * ib.size());
            for (std::size_t i = 0; i < ia.size(); ++i)
                for (std::size_t j = 0; j < ib.size(); ++j) v[i * ib.size() + j] = ia[i] * ib[j];
            out.set_identity(obj(p, q), std::move(v));
        }
    return out.build();
}

std::vector<std::vector<std::size_t>> simple_object_classes(const PresentedCategory& c)
{
    std::vector<std::size_t> simple;
    for (std::size_t p = 0; p < c.num_objects(); ++p)
        if (c.hom_dim(p, p) == 1 && !c.identity(p).coeffs[0].is_zero()) simple.push_back(p);
    auto iso = [&](std::size_t x, std::size_t y) {
        for (std::size_t f = 0; f < c.hom_dim(x, y); ++f)
            for (std::size_t g = 0; g < c.hom_dim(y, x); ++g) {
                const Morphism gf = c.compose(c.basis_morphism(y, x, g), c.basis_morphism(x, y, f));
                if (!gf.coeffs[0].is_zero()) return true;
            }
        return false;
    };
    std::vector<std::vector<std::size_t>> classes;
    for (auto x : simple) {
        bool placed = false;
        for (auto& cls : classes)
            if (iso(cls.front(), x)) {
                cls.push_back(x);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({x});
    }
    return classes;
}

// --- algebras ----------------------------------------------------------------

Vector Algebra::multiply(const Vector& a, const Vector& b) const
{
    Vector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            const Rational w = a[i] * b[j];
            for (std::size_t k = 0; k < dim(); ++k)
                if (!mult(i, j, k).is_zero()) out[k] += w * mult(i, j, k);
        }
    }
    return out;
}

PresentedCategory Algebra::as_category(const std::string& object) const
{
    CategoryBuilder b;
    b.add_object(object);
    for (const auto& name : basis) b.add_hom(0, 0, name);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) {
            Vector v(dim());
            bool any = false;
            for (std::size_t k = 0; k < dim(); ++k) {
                v[k] = mult(i, j, k);
                any = any || !v[k].is_zero();
            }
            if (any) b.set_composition(0, 0, 0, i, j, std::move(v));
        }
    b.set_identity(0, unit);
    return b.build();
}

Algebra Algebra::from_category(const PresentedCategory& c)
{
    if (c.num_objects() != 1)
        throw CategoryLoadError("an algebra is a category with exactly one object, got " +
                                std::to_string(c.num_objects()));
    Algebra a;
    a.basis = c.hom_basis(0, 0);
    const auto& t = c.composition(0, 0, 0);
    a.mult = t;
    a.unit = c.identity(0).coeffs;
    return a;
}

TraceForm trace_form_semisimple(const Algebra& a)
{
    const std::size_t n = a.dim();
    TraceForm tf;
    tf.gram = Matrix(n, n);
    // (L_i)_{kj} = mult(i, j, k); trace(L_i L_j) = sum_{k,m} mult(i, m, k) mult(j, k, m).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m)
                    if (!a.mult(i, m, k).is_zero() && !a.mult(j, k, m).is_zero())
                        tf.gram(i, j) += a.mult(i, m, k) * a.mult(j, k, m);
    tf.semisimple = rank(tf.gram) == n;
    return tf;
}

Report verify_separability_idempotent(const Algebra& a, const Matrix& e)
{
    Report rep{"separability idempotent", {}};
    const std::size_t n = a.dim();
    if (e.rows() != n || e.cols() != n) throw DimensionMismatch("separability element must be dim x dim");
    auto basis = [n](std::size_t i) {
        Vector v(n);
        v[i] = 1;
        return v;
    };

    Vector mu(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) add_scaled(mu, e(i, j), a.multiply(basis(i), basis(j)));
    if (mu != a.unit)
        rep.add("multiplication", {}, "mult(e) = " + expr(mu, a.basis) + ", expected " + expr(a.unit, a.basis));

    for (std::size_t r = 0; r < n; ++r) {
        Matrix left(n, n);
        Matrix right(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (e(i, j).is_zero()) continue;
                const Vector ri = a.multiply(basis(r), basis(i));
                const Vector jr = a.multiply(basis(j), basis(r));
                for (std::size_t k = 0; k < n; ++k) {
                    if (!ri[k].is_zero()) left(k, j) += e(i, j) * ri[k];
                    if (!jr[k].is_zero()) right(i, k) += e(i, j) * jr[k];
                }
            }
        if (left != right)
            rep.add("central", {static_cast<std::int64_t>(r)}, a.basis[r] + " e != e " + a.basis[r]);
    }

    // In A (x) A^op: (a (x) b)(c (x) d) = ac (x) db.
    Matrix sq(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (e(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    if (e(k, l).is_zero()) continue;
                    const Rational w = e(i, j) * e(k, l);
                    const Vector ac = a.multiply(basis(i), basis(k));
                    const Vector db = a.multiply(basis(l), basis(j));
                    for (std::size_t x = 0; x < n; ++x) {
                        if (ac[x].is_zero()) continue;
                        for (std::size_t y = 0; y < n; ++y)
                            if (!db[y].is_zero()) sq(x, y) += w * ac[x] * db[y];
                    }
                }
        }
    if (sq != e) rep.add("idempotent", {}, "e^2 = " + to_string(sq) + " != e = " + to_string(e));
    return rep;
}

}  // namespace modfun

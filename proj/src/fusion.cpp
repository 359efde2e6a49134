#include "modfun/fusion.hpp"

#include <algorithm>
#include <set>

namespace modfun {

namespace {

std::string tuple_str(const FusionRing& r, std::initializer_list<Label> ls)
{
    std::string s = "(";
    bool first = true;
    for (auto l : ls) {
        s += (first ? "" : ",") + r.name(l);
        first = false;
    }
    return s + ")";
}

std::vector<std::int64_t> idx(std::initializer_list<Label> ls)
{
    std::vector<std::int64_t> v;
    for (auto l : ls) v.push_back(static_cast<std::int64_t>(l));
    return v;
}

}  // namespace

bool ObjectVector::is_zero() const
{
    return std::all_of(m.begin(), m.end(), [](std::int64_t x) { return x == 0; });
}

ObjectVector operator+(const ObjectVector& a, const ObjectVector& b)
{
    if (a.size() != b.size()) throw DimensionMismatch("object vectors of different rank");
    ObjectVector out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out.m[i] += b.m[i];
    return out;
}

AxiomInconsistency::AxiomInconsistency(Label label, const std::string& what)
    : std::runtime_error(what), label_(label)
{
}

FusionRing::FusionRing(std::vector<std::string> names, std::vector<Label> dual, std::vector<Label> unit_components,
                       Tensor3<std::int64_t> coefficients)
    : names_(std::move(names)), dual_(std::move(dual)), unit_(std::move(unit_components)),
      coeff_(std::move(coefficients))
{
    const std::size_t n = names_.size();
    if (n == 0) throw FusionDataError("fusion ring needs at least one label");
    if (dual_.size() != n) throw FusionDataError("dual table has wrong length");
    for (auto d : dual_)
        if (d >= n) throw FusionDataError("dual label " + std::to_string(d) + " out of range");
    if (unit_.empty()) throw FusionDataError("no unit components");
    std::set<Label> seen;
    for (auto u : unit_) {
        if (u >= n) throw FusionDataError("unit component " + std::to_string(u) + " out of range");
        if (!seen.insert(u).second) throw FusionDataError("unit component " + std::to_string(u) + " repeated");
    }
    std::sort(unit_.begin(), unit_.end());
    const auto& d = coeff_.dims();
    if (d[0] != n || d[1] != n || d[2] != n) throw FusionDataError("coefficient tensor shape does not match rank");
    for (auto x : coeff_.flat())
        if (x < 0) throw FusionDataError("negative coefficient");
}

std::optional<Label> FusionRing::find(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Label>(it - names_.begin());
}

bool FusionRing::is_unit_component(Label a) const { return std::binary_search(unit_.begin(), unit_.end(), a); }

ObjectVector FusionRing::basis(Label a) const
{
    ObjectVector v(rank());
    v.m.at(a) = 1;
    return v;
}

ObjectVector FusionRing::unit_vector() const
{
    ObjectVector v(rank());
    for (auto u : unit_) v[u] = 1;
    return v;
}

FusionRing FusionRing::with_coefficient(Label a, Label b, Label c, std::int64_t value) const
{
    Tensor3<std::int64_t> t = coeff_;
    t.at(a, b, c) = value;
    return FusionRing(names_, dual_, unit_, std::move(t));
}

FusionRing FusionRing::with_duals(std::vector<Label> dual) const
{
    return FusionRing(names_, std::move(dual), unit_, coeff_);
}

ObjectVector multiply(const FusionRing& r, const ObjectVector& x, const ObjectVector& y)
{
    const std::size_t n = r.rank();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("object vector rank differs from ring rank");
    ObjectVector z(n);
    for (Label a = 0; a < n; ++a) {
        if (x[a] == 0) continue;
        for (Label b = 0; b < n; ++b) {
            if (y[b] == 0) continue;
            const std::int64_t w = x[a] * y[b];
            for (Label c = 0; c < n; ++c) z[c] += w * r.n(a, b, c);
        }
    }
    return z;
}

Report verify_axioms(const FusionRing& r)
{
    Report rep{"fusion axioms", {}};
    const std::size_t n = r.rank();

    for (Label a = 0; a < n; ++a)
        if (r.dual(r.dual(a)) != a)
            rep.add("involution", idx({a}),
                    "dual(dual(" + r.name(a) + ")) = " + r.name(r.dual(r.dual(a))) + " != " + r.name(a));

    for (Label a = 0; a < n; ++a)
        for (Label b = 0; b < n; ++b)
            for (Label c = 0; c < n; ++c)
                for (Label e = 0; e < n; ++e) {
                    std::int64_t lhs = 0;
                    std::int64_t rhs = 0;
                    for (Label d = 0; d < n; ++d) {
                        lhs += r.n(a, b, d) * r.n(d, c, e);
                        rhs += r.n(b, c, d) * r.n(a, d, e);
                    }
                    if (lhs != rhs)
                        rep.add("assoc", idx({a, b, c, e}),
                                "associativity fails at " + tuple_str(r, {a, b, c, e}) + ": (ab)c gives " +
                                    std::to_string(lhs) + ", a(bc) gives " + std::to_string(rhs));
                }

    for (Label a = 0; a < n; ++a)
        for (Label b = 0; b < n; ++b)
            for (Label c = 0; c < n; ++c) {
                if (a < b && r.n(a, b, c) != r.n(b, a, c))
                    rep.add("commute", idx({a, b, c}),
                            "n^" + r.name(c) + "_{" + r.name(a) + "," + r.name(b) + "} = " +
                                std::to_string(r.n(a, b, c)) + " but n^" + r.name(c) + "_{" + r.name(b) + "," +
                                r.name(a) + "} = " + std::to_string(r.n(b, a, c)));
                const Label cb = r.dual(c);
                const Label bb = r.dual(b);
                if (r.n(a, b, c) != r.n(cb, a, bb))
                    rep.add("frobenius", idx({a, b, c}),
                            "n^" + r.name(c) + "_{" + r.name(a) + "," + r.name(b) + "} = " +
                                std::to_string(r.n(a, b, c)) + " but n^" + r.name(bb) + "_{" + r.name(cb) + "," +
                                r.name(a) + "} = " + std::to_string(r.n(cb, a, bb)));
            }

    for (Label a = 0; a < n; ++a)
        for (Label c = 0; c < n; ++c) {
            std::int64_t right = 0;
            std::int64_t left = 0;
            for (auto u : r.unit_components()) {
                right += r.n(a, u, c);
                left += r.n(u, a, c);
            }
            const std::int64_t want = a == c ? 1 : 0;
            if (right != want)
                rep.add("unit", idx({a, c}),
                        "sum_i n^" + r.name(c) + "_{" + r.name(a) + ",beta_i} = " + std::to_string(right) +
                            ", expected " + std::to_string(want));
            if (left != want)
                rep.add("unit-left", idx({a, c}),
                        "sum_i n^" + r.name(c) + "_{beta_i," + r.name(a) + "} = " + std::to_string(left) +
                            ", expected " + std::to_string(want));
        }
    return rep;
}

BlockDecomposition block_decomposition(const FusionRing& r)
{
    const std::size_t n = r.rank();
    BlockDecomposition bd;
    bd.units = r.unit_components();
    bd.blocks.resize(bd.units.size());
    bd.block_of.assign(n, 0);
    for (Label a = 0; a < n; ++a) {
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < bd.units.size(); ++i)
            if (r.n(a, bd.units[i], a) == 1) hits.push_back(i);
        if (hits.size() != 1)
            throw AxiomInconsistency(a, "label " + r.name(a) + " lies in " + std::to_string(hits.size()) +
                                            " unit blocks, expected exactly one");
        bd.block_of[a] = hits.front();
        bd.blocks[hits.front()].push_back(a);
    }
    for (Label a = 0; a < n; ++a) {
        if (bd.block_of[r.dual(a)] != bd.block_of[a])
            throw AxiomInconsistency(a, "label " + r.name(a) + " and its dual " + r.name(r.dual(a)) +
                                            " lie in different blocks");
        for (Label b = 0; b < n; ++b)
            for (Label c = 0; c < n; ++c) {
                if (r.n(a, b, c) == 0) continue;
                if (bd.block_of[a] != bd.block_of[b])
                    throw AxiomInconsistency(a, "cross-block product " + r.name(a) + "*" + r.name(b) +
                                                    " contains " + r.name(c));
                if (bd.block_of[c] != bd.block_of[a])
                    throw AxiomInconsistency(a, "product " + r.name(a) + "*" + r.name(b) + " leaves the block via " +
                                                    r.name(c));
            }
    }
    return bd;
}

FusionRing restrict_to_block(const FusionRing& r, const std::vector<Label>& block)
{
    const std::size_t k = block.size();
    std::vector<std::size_t> local(r.rank(), k);
    for (std::size_t i = 0; i < k; ++i) local.at(block[i]) = i;
    std::vector<std::string> names;
    std::vector<Label> dual;
    std::vector<Label> units;
    for (std::size_t i = 0; i < k; ++i) {
        names.push_back(r.name(block[i]));
        const std::size_t d = local[r.dual(block[i])];
        if (d == k) throw AxiomInconsistency(block[i], "block is not closed under dual at " + r.name(block[i]));
        dual.push_back(d);
        if (r.is_unit_component(block[i])) units.push_back(i);
    }
    Tensor3<std::int64_t> t(k, k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c) t(a, b, c) = r.n(block[a], block[b], block[c]);
    return FusionRing(std::move(names), std::move(dual), std::move(units), std::move(t));
}

FusionRing direct_product(const FusionRing& a, const FusionRing& b)
{
    const std::size_t na = a.rank();
    const std::size_t n = na + b.rank();
    std::vector<std::string> names;
    for (Label i = 0; i < na; ++i)
        names.push_back(b.find(a.name(i)) ? a.name(i) + "#1" : a.name(i));
    for (Label i = 0; i < b.rank(); ++i)
        names.push_back(a.find(b.name(i)) ? b.name(i) + "#2" : b.name(i));
    std::vector<Label> dual;
    for (Label i = 0; i < na; ++i) dual.push_back(a.dual(i));
    for (Label i = 0; i < b.rank(); ++i) dual.push_back(na + b.dual(i));
    std::vector<Label> units = a.unit_components();
    for (auto u : b.unit_components()) units.push_back(na + u);
    Tensor3<std::int64_t> t(n, n, n);
    for (Label i = 0; i < na; ++i)
        for (Label j = 0; j < na; ++j)
            for (Label k = 0; k < na; ++k) t(i, j, k) = a.n(i, j, k);
    for (Label i = 0; i < b.rank(); ++i)
        for (Label j = 0; j < b.rank(); ++j)
            for (Label k = 0; k < b.rank(); ++k) t(na + i, na + j, na + k) = b.n(i, j, k);
    return FusionRing(std::move(names), std::move(dual), std::move(units), std::move(t));
}

ObjectVector dual_object(const FusionRing& r, const ObjectVector& x)
{
    if (x.size() != r.rank()) throw DimensionMismatch("object vector rank differs from ring rank");
    ObjectVector out(r.rank());
    for (Label a = 0; a < r.rank(); ++a) out[a] = x[r.dual(a)];
    return out;
}

std::int64_t inner_product(const FusionRing& r, const ObjectVector& x, const ObjectVector& y)
{
    if (x.size() != r.rank() || y.size() != r.rank())
        throw DimensionMismatch("object vector rank differs from ring rank");
    std::int64_t s = 0;
    for (Label a = 0; a < r.rank(); ++a) s += x[r.dual(a)] * y[a];
    return s;
}

Matrix pairing_matrix(const FusionRing& r)
{
    Matrix m(r.rank(), r.rank());
    for (Label a = 0; a < r.rank(); ++a)
        for (Label b = 0; b < r.rank(); ++b) m(a, b) = inner_product(r, r.basis(a), r.basis(b));
    return m;
}

Report verify_frobenius_pairing(const FusionRing& r)
{
    Report rep{"frobenius pairing", {}};
    const std::size_t n = r.rank();
    for (Label a = 0; a < n; ++a)
        for (Label b = 0; b < n; ++b)
            for (Label c = 0; c < n; ++c) {
                const std::int64_t lhs = inner_product(r, r.basis(a), multiply(r, r.basis(b), r.basis(c)));
                const std::int64_t rhs = inner_product(r, multiply(r, r.basis(a), r.basis(b)), r.basis(c));
                if (lhs == rhs) continue;
                // lhs = n^{dual a}_{bc}, rhs = n^{dual c}_{ab}; the Frobenius symmetry
                // relates n^{dual c}_{ab} to n^{dual b}_{c,a}.
                rep.add("pairing", idx({a, b, c}),
                        "<" + r.name(a) + ", " + r.name(b) + "*" + r.name(c) + "> = " + std::to_string(lhs) + " but <" +
                            r.name(a) + "*" + r.name(b) + ", " + r.name(c) + "> = " + std::to_string(rhs) +
                            " (frobenius symmetry at n^" + r.name(r.dual(c)) + "_{" + r.name(a) + "," + r.name(b) +
                            "})");
            }
    return rep;
}

}  // namespace modfun

#include "modfun/modular.hpp"

#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace modfun {

namespace {

std::vector<std::int64_t> unit_multiplicities(const FusionRing& r, const ObjectVector& x)
{
    std::vector<std::int64_t> out;
    for (auto u : r.unit_components()) out.push_back(x[u]);
    return out;
}

void accumulate(std::vector<std::int64_t>& into, const std::vector<std::int64_t>& v)
{
    for (std::size_t i = 0; i < into.size(); ++i) into[i] += v[i];
}

void check_labels(const FusionRing& r, const ColouredSurface& s)
{
    for (auto l : s.boundary)
        if (l >= r.rank())
            throw FusionDataError("boundary colour " + std::to_string(l) + " outside ring of rank " +
                                  std::to_string(r.rank()));
}

// Handles are cut one at a time; the running product is carried instead of the
// colour sequence, which is exact for append-then-left-fold evaluation.
class CachedEvaluator {
public:
    explicit CachedEvaluator(const FusionRing& r) : r_(r) {}

    std::vector<std::int64_t> eval(std::size_t genus, const ObjectVector& x)
    {
        if (genus == 0) return unit_multiplicities(r_, x);
        auto key = std::make_pair(genus, x.m);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<std::int64_t> total(r_.unit_components().size(), 0);
        for (Label a = 0; a < r_.rank(); ++a) {
            ObjectVector y = multiply(r_, multiply(r_, x, r_.basis(r_.dual(a))), r_.basis(a));
            accumulate(total, eval(genus - 1, y));
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    const FusionRing& r_;
    std::map<std::pair<std::size_t, std::vector<std::int64_t>>, std::vector<std::int64_t>> memo_;
};

class ScheduledEvaluator {
public:
    ScheduledEvaluator(const FusionRing& r, const GluingSchedule& s) : r_(r), s_(s), rng_(s.seed) {}

    std::vector<std::int64_t> eval(std::size_t genus, const std::vector<Label>& seq)
    {
        if (genus == 0) return unit_multiplicities(r_, fold(seq, 0, seq.size()));
        std::vector<std::int64_t> total(r_.unit_components().size(), 0);
        for (Label a = 0; a < r_.rank(); ++a) {
            std::vector<Label> next = seq;
            const std::size_t pos = insert_position(seq.size());
            next.insert(next.begin() + static_cast<std::ptrdiff_t>(pos), {r_.dual(a), a});
            accumulate(total, eval(genus - 1, next));
        }
        return total;
    }

private:
    std::size_t insert_position(std::size_t len)
    {
        switch (s_.insert) {
        case GluingSchedule::Insert::Append: return len;
        case GluingSchedule::Insert::Prepend: return 0;
        case GluingSchedule::Insert::Middle: return len / 2;
        case GluingSchedule::Insert::Random: return std::uniform_int_distribution<std::size_t>(0, len)(rng_);
        }
        return len;
    }

    ObjectVector fold(const std::vector<Label>& seq, std::size_t lo, std::size_t hi)
    {
        if (hi == lo) return r_.unit_vector();
        if (hi - lo == 1) return r_.basis(seq[lo]);
        std::size_t split = hi - 1;
        switch (s_.fold) {
        case GluingSchedule::Fold::Left: split = hi - 1; break;
        case GluingSchedule::Fold::Right: split = lo + 1; break;
        case GluingSchedule::Fold::Balanced: split = lo + (hi - lo) / 2; break;
        case GluingSchedule::Fold::Random:
            split = std::uniform_int_distribution<std::size_t>(lo + 1, hi - 1)(rng_);
            break;
        }
        return multiply(r_, fold(seq, lo, split), fold(seq, split, hi));
    }

    const FusionRing& r_;
    GluingSchedule s_;
    std::mt19937_64 rng_;
};

std::string vec_str(const std::vector<std::int64_t>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

std::string surface_str(const FusionRing& r, const ColouredSurface& s)
{
    std::string out = "genus " + std::to_string(s.genus) + " boundary (";
    for (std::size_t i = 0; i < s.boundary.size(); ++i) out += (i ? " " : "") + r.name(s.boundary[i]);
    return out + ")";
}

std::vector<std::int64_t> times(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b)
{
    std::vector<std::int64_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace

std::string describe(const GluingSchedule& s)
{
    static const char* inserts[] = {"append", "prepend", "middle", "random"};
    static const char* folds[] = {"left", "right", "balanced", "random"};
    std::string out = std::string("insert=") + inserts[static_cast<int>(s.insert)] +
                      " fold=" + folds[static_cast<int>(s.fold)];
    if (s.insert == GluingSchedule::Insert::Random || s.fold == GluingSchedule::Fold::Random)
        out += " seed=" + std::to_string(s.seed);
    return out;
}

std::vector<std::int64_t> dim_V_per_block(const FusionRing& r, const ColouredSurface& s)
{
    check_labels(r, s);
    ObjectVector x = r.unit_vector();
    for (auto l : s.boundary) x = multiply(r, x, r.basis(l));
    CachedEvaluator ev(r);
    return ev.eval(s.genus, x);
}

std::vector<std::int64_t> dim_V_per_block(const FusionRing& r, const ColouredSurface& s,
                                          const GluingSchedule& schedule)
{
    check_labels(r, s);
    ScheduledEvaluator ev(r, schedule);
    return ev.eval(s.genus, s.boundary);
}

std::int64_t dim_V(const FusionRing& r, const ColouredSurface& s)
{
    auto v = dim_V_per_block(r, s);
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

std::int64_t dim_V_disjoint(const FusionRing& r, const std::vector<ColouredSurface>& components)
{
    std::int64_t d = 1;
    for (const auto& c : components) d *= dim_V(r, c);
    return d;
}

Report verify_gluing_consistency(const FusionRing& r, const ColouredSurface& s, std::size_t trials,
                                 std::uint64_t seed)
{
    using I = GluingSchedule::Insert;
    using F = GluingSchedule::Fold;
    Report rep{"gluing consistency", {}};
    check_labels(r, s);

    const auto reference = dim_V_per_block(r, s);
    std::vector<GluingSchedule> schedules = {
        {I::Append, F::Left, 0},    {I::Prepend, F::Right, 0}, {I::Middle, F::Balanced, 0},
        {I::Append, F::Right, 0},   {I::Prepend, F::Left, 0},
    };
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) schedules.push_back({I::Random, F::Random, rng()});
    for (const auto& sch : schedules) {
        auto v = dim_V_per_block(r, s, sch);
        if (v != reference)
            rep.add("order", {},
                    surface_str(r, s) + ": cached evaluation gives " + vec_str(reference) + " but " +
                        describe(sch) + " gives " + vec_str(v));
    }

    // Separating circle: every genus split and every prefix/suffix split of the colours.
    for (std::size_t g1 = 0; g1 <= s.genus; ++g1)
        for (std::size_t cut = 0; cut <= s.boundary.size(); ++cut) {
            std::vector<std::int64_t> sum(reference.size(), 0);
            for (Label a = 0; a < r.rank(); ++a) {
                ColouredSurface left{g1, {s.boundary.begin(), s.boundary.begin() + static_cast<std::ptrdiff_t>(cut)}};
                left.boundary.push_back(r.dual(a));
                ColouredSurface right{s.genus - g1, {a}};
                right.boundary.insert(right.boundary.end(), s.boundary.begin() + static_cast<std::ptrdiff_t>(cut),
                                      s.boundary.end());
                accumulate(sum, times(dim_V_per_block(r, left), dim_V_per_block(r, right)));
            }
            if (sum != reference)
                rep.add("separating", {static_cast<std::int64_t>(g1), static_cast<std::int64_t>(cut)},
                        surface_str(r, s) + " cut into genus " + std::to_string(g1) + "+" +
                            std::to_string(s.genus - g1) + " after " + std::to_string(cut) + " colours: sum gives " +
                            vec_str(sum) + ", direct gives " + vec_str(reference));
        }

    ColouredSurface conj = s;
    for (auto& l : conj.boundary) l = r.dual(l);
    if (auto v = dim_V_per_block(r, conj); v != reference)
        rep.add("conjugate", {}, surface_str(r, s) + ": conjugate colouring gives " + vec_str(v) + ", original " +
                                     vec_str(reference));

    for (std::size_t i = 0; i < r.unit_components().size(); ++i) {
        ColouredSurface with_unit = s;
        with_unit.boundary.push_back(r.unit_components()[i]);
        auto v = dim_V_per_block(r, with_unit);
        if (v[i] != reference[i])
            rep.add("vacuum", {static_cast<std::int64_t>(i)},
                    surface_str(r, s) + ": adding colour " + r.name(r.unit_components()[i]) + " changes block " +
                        std::to_string(i) + " from " + std::to_string(reference[i]) + " to " + std::to_string(v[i]));
    }
    return rep;
}

bool check_nontriviality(const FusionRing& r)
{
    std::int64_t s = 0;
    for (auto bi : r.unit_components())
        for (auto bj : r.unit_components())
            if (r.dual(bi) == bj) ++s;
    return s != 0;
}

TwistValue TwistValue::rational(const Rational& q)
{
    if (q.is_zero()) throw TwistFormatError("twist value must be nonzero");
    TwistValue t;
    t.v_ = q;
    return t;
}

TwistValue TwistValue::root_of_unity(std::int64_t order, std::int64_t exponent)
{
    if (order < 1) throw TwistFormatError("root of unity needs order >= 1, got " + std::to_string(order));
    std::int64_t e = ((exponent % order) + order) % order;
    const std::int64_t g = gcd64(e, order);
    const std::int64_t o = order / g;
    e /= g;
    TwistValue t;
    if (o == 1)
        t.v_ = Rational(1);
    else if (o == 2)
        t.v_ = Rational(-1);
    else
        t.v_ = RootOfUnity{o, e};
    return t;
}

std::string TwistValue::str() const
{
    if (is_rational()) return as_rational().str();
    return "zeta(" + std::to_string(as_root().order) + "," + std::to_string(as_root().exponent) + ")";
}

Report validate_twists(const FusionRing& r, const TwistData& t)
{
    Report rep{"twists", {}};
    if (t.h.size() != r.rank()) throw FusionDataError("twist table does not match ring rank");
    for (Label a = 0; a < r.rank(); ++a) {
        const auto& h = t.h[a];
        if (!h) {
            rep.add("missing", {static_cast<std::int64_t>(a)}, "no twist given for " + r.name(a));
            continue;
        }
        if (r.is_unit_component(a) && !h->is_one())
            rep.add("unit-twist", {static_cast<std::int64_t>(a)},
                    "unit component " + r.name(a) + " has twist " + h->str() + ", expected 1");
        const Label d = r.dual(a);
        if (a < d && t.h[d] && !(*t.h[d] == *h))
            rep.add("dual-twist", {static_cast<std::int64_t>(a), static_cast<std::int64_t>(d)},
                    "h_" + r.name(a) + " = " + h->str() + " but h_" + r.name(d) + " = " + t.h[d]->str());
    }
    return rep;
}

ModularReport modular_report(const FusionRing& r, const std::optional<TwistData>& twists,
                             const std::vector<NamedSurface>& surfaces)
{
    ModularReport m;
    m.rank = r.rank();
    m.label_names = r.names();
    m.axioms = verify_axioms(r);
    m.surfaces = surfaces;
    m.unit_components = r.unit_components().size();
    if (!m.axioms.ok()) return m;

    m.nontrivial = check_nontriviality(r);
    const auto bd = block_decomposition(r);
    const auto torus = dim_V_per_block(r, ColouredSurface{1, {}});
    std::vector<std::vector<std::int64_t>> per_surface;
    for (const auto& ns : surfaces) per_surface.push_back(dim_V_per_block(r, ns.surface));

    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        BlockSummary b;
        b.unit = bd.units[i];
        b.labels = bd.blocks[i];
        b.nontrivial = check_nontriviality(restrict_to_block(r, bd.blocks[i]));
        b.torus_dim = torus[i];
        for (const auto& d : per_surface) b.surface_dims.push_back(d[i]);
        if (b.nontrivial) ++m.modular_functors;
        m.blocks.push_back(std::move(b));
    }
    m.torus_dim = std::accumulate(torus.begin(), torus.end(), std::int64_t{0});
    for (const auto& d : per_surface) m.total_dims.push_back(std::accumulate(d.begin(), d.end(), std::int64_t{0}));
    if (twists) m.twists = validate_twists(r, *twists);
    return m;
}

std::string render_text(const ModularReport& m)
{
    std::ostringstream os;
    os << "rank: " << m.rank << "\nlabels:";
    for (const auto& n : m.label_names) os << ' ' << n;
    os << '\n' << render(m.axioms);
    if (!m.axioms.ok()) return os.str();
    os << "unit components: " << m.unit_components << '\n';
    os << "non-trivial: " << (m.nontrivial ? "yes" : "no") << '\n';
    for (std::size_t i = 0; i < m.blocks.size(); ++i) {
        const auto& b = m.blocks[i];
        os << "block " << i << ": unit " << m.label_names[b.unit] << ", labels {";
        for (std::size_t j = 0; j < b.labels.size(); ++j) os << (j ? ", " : "") << m.label_names[b.labels[j]];
        os << "}, non-trivial " << (b.nontrivial ? "yes" : "no") << ", torus dim " << b.torus_dim << '\n';
    }
    os << "torus dim (sum over blocks): " << m.torus_dim << '\n';
    if (!m.surfaces.empty()) {
        os << "surface dims (sum over blocks; per block in brackets):\n";
        for (std::size_t s = 0; s < m.surfaces.size(); ++s) {
            os << "  " << m.surfaces[s].name << ": " << m.total_dims[s] << " [";
            for (std::size_t i = 0; i < m.blocks.size(); ++i) os << (i ? ", " : "") << m.blocks[i].surface_dims[s];
            os << "]\n";
        }
    }
    if (m.twists) os << render(*m.twists);
    os << "modular functors: " << m.modular_functors << '\n';
    return os.str();
}

std::string render_machine(const ModularReport& m)
{
    std::ostringstream os;
    os << "rank = " << m.rank << '\n';
    os << "labels = ";
    for (std::size_t i = 0; i < m.label_names.size(); ++i) os << (i ? "," : "") << m.label_names[i];
    os << "\naxioms.ok = " << (m.axioms.ok() ? "true" : "false") << '\n';
    os << "axioms.violations = " << m.axioms.issues.size() << '\n';
    if (!m.axioms.ok()) return os.str();
    os << "unit_components = " << m.unit_components << '\n';
    os << "nontrivial = " << (m.nontrivial ? "true" : "false") << '\n';
    os << "blocks = " << m.blocks.size() << '\n';
    for (std::size_t i = 0; i < m.blocks.size(); ++i) {
        const auto& b = m.blocks[i];
        const std::string k = "block." + std::to_string(i) + ".";
        os << k << "unit = " << m.label_names[b.unit] << '\n';
        os << k << "labels = ";
        for (std::size_t j = 0; j < b.labels.size(); ++j) os << (j ? "," : "") << m.label_names[b.labels[j]];
        os << '\n' << k << "nontrivial = " << (b.nontrivial ? "true" : "false") << '\n';
        os << k << "torus_dim = " << b.torus_dim << '\n';
        for (std::size_t s = 0; s < m.surfaces.size(); ++s)
            os << k << "dim." << m.surfaces[s].name << " = " << b.surface_dims[s] << '\n';
    }
    os << "torus_dim = " << m.torus_dim << '\n';
    for (std::size_t s = 0; s < m.surfaces.size(); ++s)
        os << "dim." << m.surfaces[s].name << " = " << m.total_dims[s] << '\n';
    if (m.twists) {
        os << "twists.ok = " << (m.twists->ok() ? "true" : "false") << '\n';
        os << "twists.violations = " << m.twists->issues.size() << '\n';
    }
    os << "modular_functors = " << m.modular_functors << '\n';
    return os.str();
}

}  // namespace modfun

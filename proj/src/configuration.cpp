#include "containlab/configuration.hpp"

#include "containlab/numeric.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace containlab {

// ---------------------------------------------------------------------------
// FatPointConfiguration / LineArrangement members
// ---------------------------------------------------------------------------

Ideal FatPointConfiguration::ideal(const Budget& budget) const {
    return symbolic_power(ring, points, 1, budget);
}

Ideal FatPointConfiguration::symbolic(unsigned m, const Budget& budget) const {
    return symbolic_power(ring, points, m, budget);
}

std::string FatPointConfiguration::to_text() const {
    std::ostringstream os;
    for (const auto& fp : points) {
        os << '(';
        for (std::size_t i = 0; i < fp.point.size(); ++i) {
            if (i) os << " : ";
            os << fp.point[i].to_string();
        }
        os << ") ^ " << fp.multiplicity << '\n';
    }
    return os.str();
}

Polynomial LineArrangement::product() const {
    Polynomial p = Polynomial::constant(ring, 1);
    for (const auto& l : lines) p = p * l;
    return p;
}

unsigned LineArrangement::lines_through(const std::vector<FieldElement>& point) const {
    unsigned n = 0;
    for (const auto& l : lines)
        if (l.evaluate(point).is_zero()) ++n;
    return n;
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

std::vector<FieldElement> normalize_point(std::vector<FieldElement> point) {
    for (const auto& c : point) {
        if (c.is_zero()) continue;
        if (!c.is_one()) {
            FieldElement inv = c.inverse();
            for (auto& v : point) v *= inv;
        }
        return point;
    }
    throw ConfigError("projective point must have a nonzero coordinate");
}

namespace {

std::string point_key(const std::vector<FieldElement>& p) {
    std::string key;
    for (const auto& c : p) {
        key += c.to_string();
        key += '|';
    }
    return key;
}

std::vector<FieldElement> int_point(const FieldDescriptor* f, std::initializer_list<long> cs) {
    std::vector<FieldElement> v;
    for (long c : cs) v.push_back(FieldElement::from_integer(f, c));
    return v;
}

// Coefficient triple of a linear form in 3 variables.
std::vector<FieldElement> linear_coefficients(const Polynomial& l) {
    const RingPtr& ring = l.ring();
    std::vector<FieldElement> co(ring->num_vars(), FieldElement::zero(ring->field()));
    for (const auto& t : l.terms()) {
        if (t.mono.degree() != 1) throw ConfigError("line form must be linear");
        for (unsigned i = 0; i < ring->num_vars(); ++i)
            if (t.mono.exponent(i) == 1) co[i] = t.coef;
    }
    return co;
}

Polynomial form_from_coefficients(const RingPtr& ring, const std::vector<FieldElement>& co) {
    Polynomial f = Polynomial::zero(ring);
    for (unsigned i = 0; i < co.size(); ++i)
        if (!co[i].is_zero()) f = f + Polynomial::variable(ring, i).scaled(co[i]);
    return f;
}

std::vector<FieldElement> cross(const std::vector<FieldElement>& a,
                                const std::vector<FieldElement>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

bool all_zero(const std::vector<FieldElement>& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

FatPointConfiguration make_config(RingPtr ring, std::vector<std::vector<FieldElement>> pts,
                                  std::string name) {
    FatPointConfiguration cfg;
    cfg.ring = std::move(ring);
    cfg.name = std::move(name);
    std::map<std::string, unsigned> seen;
    for (auto& p : pts) {
        if (p.size() != cfg.ring->num_vars())
            throw ConfigError("point arity does not match the ring");
        auto q = normalize_point(std::move(p));
        if (!seen.emplace(point_key(q), 0).second)
            throw ConfigError("configuration points must be projectively distinct");
        cfg.points.push_back({std::move(q), 1});
    }
    return cfg;
}

// Determinant by Gaussian elimination, exact in any field.
FieldElement determinant(std::vector<std::vector<FieldElement>> m,
                         const FieldDescriptor* f) {
    const std::size_t n = m.size();
    FieldElement det = FieldElement::one(f);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return FieldElement::zero(f);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        FieldElement inv = m[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            FieldElement fct = m[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) m[r][k] -= fct * m[c][k];
        }
    }
    return det;
}

}  // namespace

LineArrangement make_arrangement(const RingPtr& ring, std::vector<Polynomial> lines) {
    if (ring->num_vars() != 3) throw ConfigError("line arrangements live in P^2");
    LineArrangement arr;
    arr.ring = ring;
    std::map<std::string, unsigned> line_keys;
    for (auto& l : lines) {
        if (l.is_zero() || l.total_degree() != 1u || !l.is_homogeneous())
            throw ConfigError("arrangement entries must be nonzero linear forms");
        Polynomial norm = form_from_coefficients(
            ring, normalize_point(linear_coefficients(l)));
        if (!line_keys.emplace(norm.to_string(), 0).second)
            throw ConfigError("arrangement lines must be projectively distinct");
        arr.lines.push_back(std::move(norm));
    }
    // All pairwise intersections, then the exact incidence count at each.
    std::map<std::string, std::vector<FieldElement>> pts;
    for (std::size_t i = 0; i < arr.lines.size(); ++i) {
        auto ci = linear_coefficients(arr.lines[i]);
        for (std::size_t j = i + 1; j < arr.lines.size(); ++j) {
            auto x = cross(ci, linear_coefficients(arr.lines[j]));
            if (all_zero(x)) throw ConfigError("arrangement lines must be projectively distinct");
            auto q = normalize_point(std::move(x));
            pts.emplace(point_key(q), std::move(q));
        }
    }
    for (auto& [key, p] : pts) {
        LineArrangement::IncidencePoint ip;
        ip.point = std::move(p);
        for (unsigned li = 0; li < arr.lines.size(); ++li)
            if (arr.lines[li].evaluate(ip.point).is_zero()) ip.line_indices.push_back(li);
        arr.incidence.push_back(std::move(ip));
    }
    return arr;
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

std::pair<FatPointConfiguration, LineArrangement> dual_hesse() {
    const FieldDescriptor* f = FieldDescriptor::cyclotomic(3);
    RingPtr ring = PolynomialRing::create(f, 3);
    FieldElement e = FieldElement::zeta(f);
    FieldElement e2 = e * e;
    FieldElement o = FieldElement::one(f);
    FieldElement z = FieldElement::zero(f);

    std::vector<std::vector<FieldElement>> pts = {
        {o, z, z}, {z, o, z}, {z, z, o},
        {o, o, o}, {o, e, e2}, {o, e2, e},
        {e, o, o}, {o, e, o},  {o, o, e},
        {e2, o, o}, {o, e2, o}, {o, o, e2},
    };

    std::vector<Polynomial> lines;
    for (unsigned k = 0; k < 3; ++k) {
        FieldElement ek = e.pow(k);
        for (unsigned a = 0; a < 3; ++a) {
            unsigned b = (a + 1) % 3;
            lines.push_back(Polynomial::variable(ring, a) -
                            Polynomial::variable(ring, b).scaled(ek));
        }
    }
    return {make_config(ring, std::move(pts), "dual-hesse"),
            make_arrangement(ring, std::move(lines))};
}

std::pair<FatPointConfiguration, LineArrangement> fermat(unsigned n,
                                                         const FieldDescriptor* field) {
    if (n < 3) throw ConfigError("fermat configurations need n >= 3");
    if (field->is_char2()) throw ConfigError("fermat configurations need characteristic != 2");
    FieldElement eta = primitive_root_of_unity(field, n);
    RingPtr ring = PolynomialRing::create(field, 3);

    std::vector<std::vector<FieldElement>> pts = {
        int_point(field, {1, 0, 0}), int_point(field, {0, 1, 0}), int_point(field, {0, 0, 1})};
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            pts.push_back({FieldElement::one(field), eta.pow(a), eta.pow(b)});

    std::vector<Polynomial> lines;
    for (unsigned k = 0; k < n; ++k) {
        FieldElement ek = eta.pow(k);
        for (unsigned a = 0; a < 3; ++a) {
            unsigned b = (a + 1) % 3;
            lines.push_back(Polynomial::variable(ring, a) -
                            Polynomial::variable(ring, b).scaled(ek));
        }
    }

    std::string name = "fermat:" + std::to_string(n);
    bool default_field = field->kind() == FieldDescriptor::Kind::Cyclotomic &&
                         field->cyclotomic_index() == n;
    if (!default_field) name += ":" + field->to_string();
    return {make_config(ring, std::move(pts), std::move(name)),
            make_arrangement(ring, std::move(lines))};
}

FatPointConfiguration star(unsigned d, unsigned N, std::vector<FieldElement> ts) {
    if (N < 2 || d < N) throw ConfigError("star configurations need d >= N >= 2");
    if (N + 1 > Monomial::MAX_VARS) throw ConfigError("star dimension too large");
    bool default_ts = ts.empty();
    if (default_ts) {
        const FieldDescriptor* q = FieldDescriptor::rationals();
        for (unsigned i = 1; i <= d; ++i) ts.push_back(FieldElement::from_integer(q, i));
    }
    if (ts.size() != d) throw ConfigError("star needs exactly d parameters");
    const FieldDescriptor* f = ts[0].field();
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            if (ts[i] == ts[j]) throw ConfigError("star parameters must be distinct");

    RingPtr ring = PolynomialRing::create(f, N + 1);
    std::vector<Polynomial> hyperplanes;
    for (unsigned i = 0; i < d; ++i) {
        Polynomial h = Polynomial::zero(ring);
        for (unsigned j = 0; j <= N; ++j)
            h = h + Polynomial::variable(ring, j).scaled(ts[i].pow(j));
        hyperplanes.push_back(h);
    }

    // The point dual to a choice S of N hyperplanes has coordinates
    // x_j = (-1)^(N-j) e_{N-j}(t_S), the coefficients of prod (t - t_s).
    std::vector<std::vector<FieldElement>> pts;
    std::vector<unsigned> sel(N);
    for (unsigned i = 0; i < N; ++i) sel[i] = i;
    while (true) {
        std::vector<FieldElement> e(N + 1, FieldElement::zero(f));
        e[0] = FieldElement::one(f);
        for (unsigned idx : sel)
            for (unsigned k = N; k >= 1; --k) e[k] = e[k] + e[k - 1] * ts[idx];
        std::vector<FieldElement> p(N + 1, FieldElement::zero(f));
        for (unsigned j = 0; j <= N; ++j) {
            p[j] = e[N - j];
            if ((N - j) % 2) p[j] = -p[j];
        }
        pts.push_back(std::move(p));

        int pos = static_cast<int>(N) - 1;
        while (pos >= 0 && sel[pos] == d - N + pos) --pos;
        if (pos < 0) break;
        ++sel[pos];
        for (unsigned k = pos + 1; k < N; ++k) sel[k] = sel[k - 1] + 1;
    }

    std::string name = "star:" + std::to_string(d) + ":" + std::to_string(N);
    if (!default_ts) {
        name += ":";
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (i) name += ",";
            name += ts[i].to_string();
        }
    }
    FatPointConfiguration cfg = make_config(ring, std::move(pts), std::move(name));
    for (const auto& fp : cfg.points) {
        unsigned through = 0;
        for (const auto& h : hyperplanes)
            if (h.evaluate(fp.point).is_zero()) ++through;
        if (through != N)
            throw ConfigError("degenerate star parameters: a point lies on " +
                              std::to_string(through) + " hyperplanes");
    }
    if (cfg.points.size() != binomial(d, N))
        throw ConfigError("degenerate star parameters: intersection points collide");
    return cfg;
}

std::pair<FatPointConfiguration, LineArrangement> boroczky12() {
    const FieldDescriptor* f = FieldDescriptor::cyclotomic(12);
    RingPtr ring = PolynomialRing::create(f, 3);
    FieldElement xi = FieldElement::zeta(f);
    FieldElement half = FieldElement::from_rational(f, Rational(1, 2));
    FieldElement i_unit = xi.pow(3);

    // Vertices of the regular 12-gon, exactly: cos = (xi^k + xi^-k)/2,
    // sin = (xi^k - xi^-k)/(2 xi^3).
    std::vector<FieldElement> cosv, sinv;
    for (unsigned k = 0; k < 12; ++k) {
        FieldElement zk = xi.pow(k), zmk = xi.pow(-static_cast<long>(k));
        cosv.push_back((zk + zmk) * half);
        sinv.push_back((zk - zmk) * half / i_unit);
    }

    std::vector<Polynomial> lines;
    for (unsigned i = 0; i < 12; ++i) {
        unsigned j = (6 + 2 * (12 - i)) % 12;  // (6 - 2i) mod 12
        std::vector<FieldElement> co;
        if (i == j) {
            co = {cosv[i], sinv[i], -FieldElement::one(f)};  // tangent at P_i
        } else {
            co = {sinv[i] - sinv[j], cosv[j] - cosv[i],
                  cosv[i] * sinv[j] - cosv[j] * sinv[i]};
        }
        lines.push_back(form_from_coefficients(ring, co));
    }
    LineArrangement arr = make_arrangement(ring, std::move(lines));

    std::vector<std::vector<FieldElement>> triples;
    for (const auto& ip : arr.incidence) {
        if (ip.line_indices.size() < 3) continue;
        if (ip.line_indices.size() != 3)
            throw ConfigError("internal consistency: 12-gon line configuration "
                              "acquired a point of multiplicity > 3");
        triples.push_back(ip.point);
    }
    if (triples.size() != 19)
        throw ConfigError("internal consistency: expected 19 triple points, found " +
                          std::to_string(triples.size()));
    return {make_config(ring, std::move(triples), "boroczky12"), std::move(arr)};
}

namespace {

// Normalized representatives of the points of P^2(F_p).
std::vector<std::vector<FieldElement>> projective_plane_points(const FieldDescriptor* f) {
    std::uint32_t p = f->prime();
    std::vector<std::vector<FieldElement>> pts;
    FieldElement one = FieldElement::one(f), zero = FieldElement::zero(f);
    for (std::uint32_t y = 0; y < p; ++y)
        for (std::uint32_t z = 0; z < p; ++z)
            pts.push_back({one, FieldElement::from_integer(f, y),
                           FieldElement::from_integer(f, z)});
    for (std::uint32_t z = 0; z < p; ++z)
        pts.push_back({zero, one, FieldElement::from_integer(f, z)});
    pts.push_back({zero, zero, one});
    return pts;
}

}  // namespace

FatPointConfiguration punctured_plane(std::uint32_t p) {
    if (p == 2) throw ConfigError("punctured plane needs an odd prime");
    const FieldDescriptor* f = FieldDescriptor::prime_field(p);
    RingPtr ring = PolynomialRing::create(f, 3);
    std::vector<std::vector<FieldElement>> pts;
    for (auto& q : projective_plane_points(f)) {
        if (q[0].is_zero() && q[1].is_zero()) continue;  // removed point (0:0:1)
        pts.push_back(std::move(q));
    }
    return make_config(ring, std::move(pts), "punctured:" + std::to_string(p));
}

std::pair<FatPointConfiguration, LineArrangement> klein_f7() {
    const FieldDescriptor* f = FieldDescriptor::prime_field(7);
    RingPtr ring = PolynomialRing::create(f, 3);
    // Canonical smooth conic; all smooth conics of P^2(F_7) are
    // projectively equivalent, so the external-line configuration is too.
    Polynomial conic = Polynomial::parse(ring, "x0^2 + x1^2 + x2^2");

    auto pts = projective_plane_points(f);
    std::vector<std::vector<FieldElement>> conic_pts;
    for (const auto& q : pts)
        if (conic.evaluate(q).is_zero()) conic_pts.push_back(q);
    if (conic_pts.size() != 8)
        throw ConfigError("internal consistency: smooth conic must have 8 points");

    unsigned tangents = 0, secants = 0;
    std::vector<Polynomial> external;
    for (const auto& co : pts) {  // lines share the representative space
        Polynomial l = form_from_coefficients(ring, co);
        unsigned meets = 0;
        for (const auto& q : conic_pts)
            if (l.evaluate(q).is_zero()) ++meets;
        if (meets == 0) external.push_back(l);
        else if (meets == 1) ++tangents;
        else ++secants;
    }
    if (external.size() != 21 || tangents != 8 || secants != 28)
        throw ConfigError("internal consistency: external/tangent/secant split must be 21/8/28");

    LineArrangement arr = make_arrangement(ring, std::move(external));
    unsigned quadruple = 0, triple = 0;
    std::vector<std::vector<FieldElement>> cfg_pts;
    for (const auto& ip : arr.incidence) {
        if (ip.line_indices.size() == 4) ++quadruple;
        else if (ip.line_indices.size() == 3) ++triple;
        else
            throw ConfigError("internal consistency: external lines must meet 3 or 4 at a time");
        cfg_pts.push_back(ip.point);
    }
    if (quadruple != 21 || triple != 28)
        throw ConfigError("internal consistency: expected 21 quadruple and 28 triple points");
    return {make_config(ring, std::move(cfg_pts), "klein-f7"), std::move(arr)};
}

FatPointConfiguration general_points(unsigned s, unsigned N, std::uint64_t seed) {
    if (s < 1) throw ConfigError("general_points needs s >= 1");
    if (N < 1 || N + 1 > Monomial::MAX_VARS) throw ConfigError("unsupported dimension");
    const FieldDescriptor* f = FieldDescriptor::rationals();
    RingPtr ring = PolynomialRing::create(f, N + 1);
    std::mt19937_64 rng(seed);
    // Raw engine output, not a distribution: identical draws on every
    // platform for the same seed.
    auto draw = [&]() { return static_cast<long>(rng() % 19) - 9; };

    std::vector<std::vector<FieldElement>> accepted;
    std::vector<std::string> keys;
    unsigned attempts = 0;
    while (accepted.size() < s) {
        if (++attempts > 10000) throw ConfigError("generality unreachable for this seed");
        std::vector<FieldElement> cand(N + 1);
        bool nonzero = false;
        for (unsigned i = 0; i <= N; ++i) {
            long v = draw();
            if (v != 0) nonzero = true;
            cand[i] = FieldElement::from_integer(f, v);
        }
        if (!nonzero) continue;
        cand = normalize_point(std::move(cand));
        std::string key = point_key(cand);
        if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;

        // No N+1 of the points may lie on a hyperplane: check every
        // N-subset of the accepted points together with the candidate.
        bool ok = true;
        if (accepted.size() >= N) {
            std::vector<unsigned> sel(N);
            for (unsigned i = 0; i < N; ++i) sel[i] = i;
            while (ok) {
                std::vector<std::vector<FieldElement>> mat;
                for (unsigned idx : sel) mat.push_back(accepted[idx]);
                mat.push_back(cand);
                if (determinant(std::move(mat), f).is_zero()) ok = false;
                int pos = static_cast<int>(N) - 1;
                while (pos >= 0 && sel[pos] == accepted.size() - N + pos) --pos;
                if (pos < 0) break;
                ++sel[pos];
                for (unsigned k = pos + 1; k < N; ++k) sel[k] = sel[k - 1] + 1;
            }
        }
        if (!ok) continue;
        accepted.push_back(std::move(cand));
        keys.push_back(std::move(key));
    }
    return make_config(ring, std::move(accepted),
                       "general:" + std::to_string(s) + ":" + std::to_string(N) + ":" +
                           std::to_string(seed));
}

FatPointConfiguration coordinate_points(unsigned N, const std::vector<unsigned>& subset) {
    if (N < 1 || N + 1 > Monomial::MAX_VARS) throw ConfigError("unsupported dimension");
    if (subset.empty()) throw ConfigError("coordinate_points needs a nonempty subset");
    std::vector<unsigned> idx = subset;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    if (idx.back() > N) throw ConfigError("coordinate index out of range");
    const FieldDescriptor* f = FieldDescriptor::rationals();
    RingPtr ring = PolynomialRing::create(f, N + 1);
    std::vector<std::vector<FieldElement>> pts;
    for (unsigned i : idx) {
        std::vector<FieldElement> p(N + 1, FieldElement::zero(f));
        p[i] = FieldElement::one(f);
        pts.push_back(std::move(p));
    }
    std::string name = "coordpts:" + std::to_string(N);
    if (idx.size() != N + 1) {
        name += ":";
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) name += ",";
            name += std::to_string(idx[i]);
        }
    }
    return make_config(ring, std::move(pts), std::move(name));
}

FatPointConfiguration coordinate_points(unsigned N) {
    std::vector<unsigned> all;
    for (unsigned i = 0; i <= N; ++i) all.push_back(i);
    return coordinate_points(N, all);
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

unsigned parse_uint(const std::string& s, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ConfigError(std::string("bad ") + what + ": '" + s + "'");
    unsigned long v = std::stoul(s);
    if (v > 1000000) throw ConfigError(std::string(what) + " out of range: " + s);
    return static_cast<unsigned>(v);
}

}  // namespace

NamedConfiguration make_configuration(const std::string& name) {
    std::vector<std::string> p = split(name, ':');
    const std::string& kind = p[0];
    auto arity = [&](std::size_t lo, std::size_t hi) {
        if (p.size() < lo + 1 || p.size() > hi + 1)
            throw ConfigError("bad configuration name: '" + name + "'");
    };

    if (kind == "dual-hesse") {
        arity(0, 0);
        auto [cfg, arr] = dual_hesse();
        return {std::move(cfg), std::move(arr)};
    }
    if (kind == "fermat") {
        arity(1, 2);
        unsigned n = parse_uint(p[1], "fermat order");
        const FieldDescriptor* f =
            p.size() == 3 ? FieldDescriptor::parse(p[2]) : FieldDescriptor::cyclotomic(n);
        auto [cfg, arr] = fermat(n, f);
        return {std::move(cfg), std::move(arr)};
    }
    if (kind == "star") {
        arity(2, 3);
        unsigned d = parse_uint(p[1], "star line count");
        unsigned N = parse_uint(p[2], "star dimension");
        std::vector<FieldElement> ts;
        if (p.size() == 4) {
            const FieldDescriptor* q = FieldDescriptor::rationals();
            for (const auto& tok : split(p[3], ','))
                ts.push_back(FieldElement::parse(q, tok));
        }
        return {star(d, N, std::move(ts)), std::nullopt};
    }
    if (kind == "boroczky12") {
        arity(0, 0);
        auto [cfg, arr] = boroczky12();
        return {std::move(cfg), std::move(arr)};
    }
    if (kind == "punctured") {
        arity(1, 1);
        return {punctured_plane(parse_uint(p[1], "prime")), std::nullopt};
    }
    if (kind == "klein-f7") {
        arity(0, 0);
        auto [cfg, arr] = klein_f7();
        return {std::move(cfg), std::move(arr)};
    }
    if (kind == "general") {
        arity(3, 3);
        return {general_points(parse_uint(p[1], "point count"), parse_uint(p[2], "dimension"),
                               parse_uint(p[3], "seed")),
                std::nullopt};
    }
    if (kind == "coordpts") {
        arity(1, 2);
        unsigned N = parse_uint(p[1], "dimension");
        if (p.size() == 3) {
            std::vector<unsigned> subset;
            for (const auto& tok : split(p[2], ','))
                subset.push_back(parse_uint(tok, "coordinate index"));
            return {coordinate_points(N, subset), std::nullopt};
        }
        return {coordinate_points(N), std::nullopt};
    }
    throw ConfigError("unknown configuration: '" + name + "'");
}

std::vector<std::string> registry_roster() {
    return {
        "dual-hesse",    "fermat:3",       "fermat:4",       "fermat:3:Fp(7)",
        "star:3:2",      "star:4:2",       "star:5:2",       "star:4:3",
        "boroczky12",    "punctured:3",    "klein-f7",       "coordpts:2",
        "coordpts:3",    "general:3:2:1",  "general:6:2:1",  "general:4:3:1",
    };
}

}  // namespace containlab

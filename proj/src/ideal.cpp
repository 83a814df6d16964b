#include "containlab/ideal.hpp"

#include "containlab/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <sstream>

namespace containlab {

// ---------------------------------------------------------------------------
// Representation and Groebner cache
// ---------------------------------------------------------------------------

struct Ideal::Impl {
    RingPtr ring;
    std::vector<Polynomial> gens;
    std::mutex mutex;
    std::map<std::pair<int, unsigned>,
             std::shared_future<std::shared_ptr<const GroebnerBasis>>>
        cache;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : impl_(new Impl) {
    if (!ring) throw RingMismatchError("ideal needs a ring");
    impl_->ring = std::move(ring);
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        if (!g.ring()) throw RingMismatchError("generator without a ring");
        if (g.ring() != impl_->ring) {
            if (!g.ring()->same_structure(*impl_->ring))
                throw RingMismatchError("generator ring mismatch");
            g = Polynomial::from_terms(impl_->ring, g.terms());
        }
        if (!g.is_homogeneous())
            throw ContainLabError("non-homogeneous generator: " + g.to_string());
        if (std::find(impl_->gens.begin(), impl_->gens.end(), g) == impl_->gens.end())
            impl_->gens.push_back(std::move(g));
    }
}

const RingPtr& Ideal::ring() const {
    if (!impl_) throw RingMismatchError("uninitialized ideal");
    return impl_->ring;
}

const std::vector<Polynomial>& Ideal::generators() const {
    if (!impl_) throw RingMismatchError("uninitialized ideal");
    return impl_->gens;
}

bool Ideal::is_zero_ideal() const {
    return !impl_ || impl_->gens.empty();
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner(MonomialOrder order,
                                                     const Budget& budget) const {
    if (!impl_) throw RingMismatchError("uninitialized ideal");
    auto key = std::make_pair(static_cast<int>(order.kind()), order.block_boundary());

    std::promise<std::shared_ptr<const GroebnerBasis>> promise;
    bool computing = false;
    std::shared_future<std::shared_ptr<const GroebnerBasis>> fut;
    {
        std::lock_guard<std::mutex> lock(impl_->mutex);
        auto it = impl_->cache.find(key);
        if (it != impl_->cache.end()) {
            fut = it->second;
        } else {
            fut = promise.get_future().share();
            impl_->cache.emplace(key, fut);
            computing = true;
        }
    }
    if (!computing) return fut.get();

    try {
        std::shared_ptr<const GroebnerBasis> basis;
        if (impl_->gens.empty()) {
            RingPtr r = (impl_->ring->order() == order) ? impl_->ring
                                                        : impl_->ring->with_order(order);
            basis = std::make_shared<const GroebnerBasis>(r, std::vector<Polynomial>{});
        } else {
            basis = std::make_shared<const GroebnerBasis>(
                buchberger(impl_->gens, order, budget));
        }
        promise.set_value(basis);
        return basis;
    } catch (...) {
        // Leave no poisoned entry behind; a later call may retry with a
        // larger budget.
        {
            std::lock_guard<std::mutex> lock(impl_->mutex);
            impl_->cache.erase(key);
        }
        promise.set_exception(std::current_exception());
        throw;
    }
}

// Internal constructor used when a reduced basis is already in hand.
Ideal with_cached_basis(RingPtr ring, std::shared_ptr<const GroebnerBasis> basis) {
    std::vector<Polynomial> gens;
    for (const auto& g : basis->elements())
        gens.push_back(Polynomial::from_terms(ring, g.terms()));
    Ideal I(std::move(ring), std::move(gens));
    const MonomialOrder& ord = basis->order();
    auto key = std::make_pair(static_cast<int>(ord.kind()), ord.block_boundary());
    std::promise<std::shared_ptr<const GroebnerBasis>> promise;
    promise.set_value(std::move(basis));
    std::lock_guard<std::mutex> lock(I.impl_->mutex);
    I.impl_->cache.emplace(key, promise.get_future().share());
    return I;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

Ideal point_ideal(const RingPtr& ring, const std::vector<FieldElement>& point) {
    if (point.size() != ring->num_vars())
        throw RingMismatchError("point length does not match ring arity");
    int pivot = -1;
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (point[i].field() != ring->field())
            throw FieldMismatchError("point coordinate field mismatch");
        if (pivot < 0 && !point[i].is_zero()) pivot = static_cast<int>(i);
    }
    if (pivot < 0) throw ContainLabError("zero tuple is not a projective point");

    std::vector<Polynomial> gens;
    for (unsigned j = 0; j < ring->num_vars(); ++j) {
        if (static_cast<int>(j) == pivot) continue;
        Polynomial form =
            Polynomial::variable(ring, j).scaled(point[pivot]) -
            Polynomial::variable(ring, pivot).scaled(point[j]);
        gens.push_back(form.monic());
    }
    return Ideal(ring, std::move(gens));
}

Ideal ideal_power(const Ideal& I, unsigned r) {
    const RingPtr& ring = I.ring();
    if (r == 0) return Ideal(ring, {Polynomial::constant(ring, 1)});
    if (I.is_zero_ideal()) return Ideal(ring, {});
    const auto& gens = I.generators();

    std::vector<Polynomial> out;
    // Multisets i1 <= i2 <= ... <= ir, product built along the recursion.
    auto rec = [&](auto&& self, unsigned start, const Polynomial& acc, unsigned left) -> void {
        if (left == 0) {
            if (std::find(out.begin(), out.end(), acc) == out.end()) out.push_back(acc);
            return;
        }
        for (unsigned i = start; i < gens.size(); ++i) self(self, i, acc * gens[i], left - 1);
    };
    rec(rec, 0, Polynomial::constant(ring, 1), r);
    return Ideal(ring, std::move(out));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    const RingPtr& ring = I.ring();
    if (J.ring() != ring && !J.ring()->same_structure(*ring))
        throw RingMismatchError("ideal product across different rings");
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal(ring, {});
    std::vector<Polynomial> out;
    for (const auto& f : I.generators())
        for (const auto& g : J.generators()) {
            Polynomial p = f * g;
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        }
    return Ideal(ring, std::move(out));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J, const Budget& budget) {
    const RingPtr& ring = I.ring();
    if (J.ring() != ring && !J.ring()->same_structure(*ring))
        throw RingMismatchError("ideal intersection across different rings");
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal(ring, {});

    unsigned n = ring->num_vars();
    if (n + 1 > Monomial::MAX_VARS)
        throw OverflowError("no room for the auxiliary elimination variable");

    std::string aux = "t";
    while (ring->var_index(aux) >= 0) aux += "_";
    std::vector<std::string> names{aux};
    for (const auto& nm : ring->names()) names.push_back(nm);
    RingPtr ext = PolynomialRing::create(ring->field(), n + 1,
                                         MonomialOrder::block_elimination(1), names);

    std::vector<unsigned> up(n);
    for (unsigned i = 0; i < n; ++i) up[i] = i + 1;
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;

    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(t * g.map_variables(ext, up));
    for (const auto& h : J.generators()) gens.push_back(one_minus_t * h.map_variables(ext, up));

    GroebnerBasis B = buchberger(gens, MonomialOrder::block_elimination(1), budget);

    std::vector<unsigned> down(n + 1, 0);
    for (unsigned i = 1; i <= n; ++i) down[i] = i - 1;
    std::vector<Polynomial> kept;
    for (const auto& g : B.elements()) {
        bool uses_aux = false;
        for (const auto& term : g.terms())
            if (term.mono.exponent(0)) {
                uses_aux = true;
                break;
            }
        if (!uses_aux) kept.push_back(g.map_variables(ring, down));
    }

    // Under a grevlex ambient order the kept elements are already the
    // reduced basis of the intersection; prime the cache with them.
    if (ring->order() == MonomialOrder::grevlex()) {
        auto basis = std::make_shared<const GroebnerBasis>(ring, kept);
        return with_cached_basis(ring, std::move(basis));
    }
    return Ideal(ring, std::move(kept));
}

Ideal irrelevant_power(const RingPtr& ring, unsigned j) {
    if (j == 0) return Ideal(ring, {Polynomial::constant(ring, 1)});
    std::vector<Monomial> monos = graded_monomial_basis(ring, j);
    std::vector<Polynomial> gens;
    FieldElement one = FieldElement::one(ring->field());
    for (const auto& m : monos) gens.push_back(Polynomial::term(ring, m, one));
    return Ideal(ring, std::move(gens));
}

Ideal symbolic_power(const RingPtr& ring, const std::vector<FatPoint>& points, unsigned m,
                     const Budget& budget) {
    if (m == 0) throw ContainLabError("symbolic power exponent must be at least 1");
    if (points.empty()) throw ContainLabError("symbolic power of an empty point set");
    Ideal acc;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].multiplicity == 0)
            throw ContainLabError("point multiplicity must be at least 1");
        Ideal piece = ideal_power(point_ideal(ring, points[i].point),
                                  m * points[i].multiplicity);
        acc = (i == 0) ? piece : ideal_intersect(acc, piece, budget);
    }
    if (points.size() == 1) {
        // Canonicalize the generator presentation like the folded cases.
        auto basis = acc.groebner(MonomialOrder::grevlex(), budget);
        return with_cached_basis(ring, basis);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Containment
// ---------------------------------------------------------------------------

ContainmentWitness ideal_contains(const Ideal& I, const Ideal& J, const Budget& budget) {
    if (J.is_zero_ideal()) return {true, std::nullopt};
    if (I.is_zero_ideal()) return {false, J.generators().front()};
    auto basis = I.groebner(MonomialOrder::grevlex(), budget);
    for (const auto& g : J.generators()) {
        if (!is_member(g, *basis)) return {false, g};
    }
    return {true, std::nullopt};
}

bool same_ideal(const Ideal& I, const Ideal& J, const Budget& budget) {
    return ideal_contains(I, J, budget).contains && ideal_contains(J, I, budget).contains;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

std::string Ideal::to_text() const {
    std::ostringstream out;
    out << ring()->to_string() << "\n";
    for (const auto& g : generators()) out << g.to_string() << "\n";
    return out.str();
}

Ideal Ideal::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    while (std::getline(in, header)) {
        if (header.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    auto lb = header.find('[');
    auto rb = header.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw ParseError("bad ideal header: " + header);
    const FieldDescriptor* field = FieldDescriptor::parse(header.substr(0, lb));

    std::vector<std::string> names;
    std::string inner = header.substr(lb + 1, rb - lb - 1);
    std::string cur;
    for (char c : inner + ",") {
        if (c == ',') {
            std::string trimmed;
            for (char d : cur)
                if (!std::isspace(static_cast<unsigned char>(d))) trimmed.push_back(d);
            if (trimmed.empty()) throw ParseError("bad ideal header: " + header);
            names.push_back(trimmed);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }

    std::string ordtext;
    for (char c : header.substr(rb + 1))
        if (!std::isspace(static_cast<unsigned char>(c))) ordtext.push_back(c);
    MonomialOrder order = MonomialOrder::grevlex();
    if (ordtext == "grevlex" || ordtext.empty()) {
        order = MonomialOrder::grevlex();
    } else if (ordtext == "lex") {
        order = MonomialOrder::lex();
    } else if (ordtext.rfind("block(", 0) == 0 && ordtext.back() == ')') {
        std::string num = ordtext.substr(6, ordtext.size() - 7);
        for (char c : num)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad order: " + ordtext);
        order = MonomialOrder::block_elimination(static_cast<unsigned>(std::stoul(num)));
    } else {
        throw ParseError("bad order: " + ordtext);
    }

    unsigned arity = static_cast<unsigned>(names.size());
    RingPtr ring = PolynomialRing::create(field, arity, order, std::move(names));
    std::vector<Polynomial> gens;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        gens.push_back(Polynomial::parse(ring, line));
    }
    return Ideal(std::move(ring), std::move(gens));
}

}  // namespace containlab

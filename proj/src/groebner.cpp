#include "containlab/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

namespace containlab {

// ---------------------------------------------------------------------------
// Budget
// ---------------------------------------------------------------------------

namespace {

double env_double(const char* name, double fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    double d = std::strtod(v, &end);
    return (end && *end == '\0' && d > 0) ? d : fallback;
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    unsigned long long u = std::strtoull(v, &end, 10);
    return (end && *end == '\0' && u > 0) ? u : fallback;
}

}  // namespace

Budget Budget::defaults() {
    return with(env_double("CONTAINLAB_TIMEOUT_SECS", 600.0),
                env_u64("CONTAINLAB_MAX_PAIRS", 200000));
}

Budget Budget::with(double seconds, std::uint64_t max_pairs) {
    Budget b;
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(seconds));
    b.max_pairs = max_pairs;
    return b;
}

double Budget::seconds_left() const {
    auto d = std::chrono::duration<double>(deadline - std::chrono::steady_clock::now());
    return d.count() > 0 ? d.count() : 0.0;
}

// ---------------------------------------------------------------------------
// Reduction
// ---------------------------------------------------------------------------

namespace {

void check_deadline(const Budget& budget) {
    if (std::chrono::steady_clock::now() >= budget.deadline)
        throw BudgetExceededError(BudgetExceededError::Reason::Deadline,
                                  "Groebner deadline exceeded");
}

// Full reduction of p against basis by exact division.  The tail is kept
// as a descending term vector with a logical head index, so skipping an
// irreducible term is O(1) and a reduction step is one linear merge of
// the shifted reducer tail; nothing before the head is ever touched.
Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& basis,
                       const Budget* budget) {
    const RingPtr& ring = p.ring();
    const MonomialOrder& ord = ring->order();
    std::vector<Term> tail(p.terms().begin(), p.terms().end());
    std::vector<Term> remainder;
    std::size_t pos = 0;
    int steps = 0;
    while (pos < tail.size()) {
        if (budget && ++steps % 256 == 0) check_deadline(*budget);
        const Term& lt = tail[pos];
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis) {
            if (g.leading_monomial().divides(lt.mono)) {
                reducer = &g;
                break;
            }
        }
        if (!reducer) {
            remainder.push_back(lt);
            ++pos;
            continue;
        }
        Monomial shift = lt.mono.divide_by(reducer->leading_monomial());
        const FieldElement& gl = reducer->leading_coefficient();
        FieldElement c = gl.is_one() ? lt.coef : lt.coef / gl;
        const auto& gt = reducer->terms();

        // Merge -c * shift * tail(reducer) into the strict tail of p.
        std::vector<Term> merged;
        merged.reserve(tail.size() - pos - 1 + gt.size() - 1);
        std::size_t i = pos + 1, j = 1;
        if (j < gt.size()) {
            Monomial gm = gt[j].mono * shift;
            while (i < tail.size()) {
                int cmp = ord.compare(tail[i].mono, gm);
                if (cmp > 0) {
                    merged.push_back(std::move(tail[i++]));
                } else if (cmp < 0) {
                    merged.push_back({gm, -(gt[j].coef * c)});
                    if (++j == gt.size()) break;
                    gm = gt[j].mono * shift;
                } else {
                    FieldElement s = tail[i].coef - gt[j].coef * c;
                    if (!s.is_zero()) merged.push_back({tail[i].mono, std::move(s)});
                    ++i;
                    if (++j == gt.size()) break;
                    gm = gt[j].mono * shift;
                }
            }
            for (; j < gt.size(); ++j) merged.push_back({gt[j].mono * shift, -(gt[j].coef * c)});
        }
        for (; i < tail.size(); ++i) merged.push_back(std::move(tail[i]));
        tail = std::move(merged);
        pos = 0;
    }
    return Polynomial::from_terms(ring, std::move(remainder));
}

// Exact full reduction without a deadline, for inter-reduction and
// normal forms against a finished basis.
Polynomial reduce_exact(Polynomial p, const std::vector<Polynomial>& basis) {
    return reduce_full(std::move(p), basis, nullptr);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    // Cross-multiplied form keeps characteristic-0 intermediates integral.
    Polynomial a = f.times_term(l.divide_by(f.leading_monomial()), g.leading_coefficient());
    Polynomial b = g.times_term(l.divide_by(g.leading_monomial()), f.leading_coefficient());
    return a - b;
}

struct Pair {
    unsigned i, j;
    Monomial lcm;
};

}  // namespace

// ---------------------------------------------------------------------------
// Buchberger
// ---------------------------------------------------------------------------

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, MonomialOrder order,
                         const Budget& budget) {
    if (generators.empty()) throw ContainLabError("buchberger needs at least one generator");
    RingPtr base_ring = generators.front().ring();
    if (!base_ring) throw RingMismatchError("generator without a ring");
    RingPtr ring = (base_ring->order() == order) ? base_ring : base_ring->with_order(order);

    // Monic intermediates make every reduction step division-free for the
    // head coefficient and keep the pair flow identical across fields.
    auto tidy = [&](const Polynomial& f) { return f.monic(); };

    std::vector<Polynomial> G;
    for (const auto& g : generators) {
        if (!g.ring() || (g.ring() != base_ring && !g.ring()->same_structure(*base_ring)))
            throw RingMismatchError("generators live in different rings");
        if (g.is_zero()) continue;
        Polynomial h = (ring == base_ring) ? g : g.with_ring(ring);
        h = tidy(h);
        if (std::find(G.begin(), G.end(), h) == G.end()) G.push_back(h);
    }
    if (G.empty()) throw ContainLabError("buchberger needs a nonzero generator");

    const MonomialOrder& ord = ring->order();

    // Pending S-pairs keyed for the normal strategy: smallest lcm degree
    // first, ties broken by the order on lcms and then by index, so runs
    // are deterministic.
    std::vector<Pair> pending;
    std::set<std::pair<unsigned, unsigned>> pending_keys;
    auto push_pairs_for = [&](unsigned j) {
        for (unsigned i = 0; i < j; ++i) {
            pending.push_back({i, j, Monomial::lcm(G[i].leading_monomial(),
                                                   G[j].leading_monomial())});
            pending_keys.insert({i, j});
        }
    };
    for (unsigned j = 1; j < G.size(); ++j) push_pairs_for(j);

    std::uint64_t reductions = 0;
    while (!pending.empty()) {
        check_deadline(budget);

        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            const Pair &a = pending[k], &b = pending[best];
            if (a.lcm.degree() != b.lcm.degree()) {
                if (a.lcm.degree() < b.lcm.degree()) best = k;
                continue;
            }
            int c = ord.compare(a.lcm, b.lcm);
            if (c < 0 || (c == 0 && std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j)))
                best = k;
        }
        Pair pair = pending[best];
        pending.erase(pending.begin() + best);
        pending_keys.erase({pair.i, pair.j});

        const Monomial& li = G[pair.i].leading_monomial();
        const Monomial& lj = G[pair.j].leading_monomial();

        // Product criterion: coprime leading monomials reduce to zero.
        if (li.coprime_with(lj)) continue;

        // Chain criterion: some other leading monomial divides the lcm and
        // both companion pairs are already treated.
        bool skip = false;
        for (unsigned k = 0; k < G.size() && !skip; ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!G[k].leading_monomial().divides(pair.lcm)) continue;
            auto key1 = std::minmax(pair.i, k);
            auto key2 = std::minmax(pair.j, k);
            if (!pending_keys.count({key1.first, key1.second}) &&
                !pending_keys.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        if (++reductions > budget.max_pairs)
            throw BudgetExceededError(BudgetExceededError::Reason::PairCap,
                                      "Groebner S-pair cap exceeded");

        Polynomial h = reduce_full(s_polynomial(G[pair.i], G[pair.j]), G, &budget);
        if (h.is_zero()) continue;
        h = tidy(h);
        G.push_back(h);
        push_pairs_for(static_cast<unsigned>(G.size() - 1));
    }

    // Minimalize: keep only elements whose leading monomial no other kept
    // element's leading monomial divides.
    std::vector<Polynomial> minimal;
    for (const auto& g : G) {
        bool redundant = false;
        for (const auto& h : G) {
            if (&h == &g) continue;
            const Monomial &lg = g.leading_monomial(), &lh = h.leading_monomial();
            if (lh.divides(lg) && (lg != lh || &h < &g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g.monic());
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });

    // Inter-reduce to the canonical reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t t = 0; t < minimal.size(); ++t)
                if (t != k) others.push_back(minimal[t]);
            Polynomial r = reduce_exact(minimal[k], others);
            if (r.is_zero()) {
                minimal.erase(minimal.begin() + k);
                changed = true;
                break;
            }
            r = r.monic();
            if (r != minimal[k]) {
                minimal[k] = r;
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });

    return GroebnerBasis(ring, std::move(minimal));
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {}

std::optional<unsigned> GroebnerBasis::min_degree() const {
    std::optional<unsigned> best;
    for (const auto& g : elements_) {
        auto d = g.total_degree();
        if (d && (!best || *d < *best)) best = d;
    }
    return best;
}

bool GroebnerBasis::contains_one() const {
    for (const auto& g : elements_)
        if (!g.is_zero() && g.leading_monomial().is_one()) return true;
    return false;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    if (!f.ring()) throw RingMismatchError("polynomial without a ring");
    Polynomial p = f;
    if (f.ring() != basis.ring()) {
        if (!f.ring()->same_structure(*basis.ring())) {
            if (f.ring()->field() != basis.ring()->field() ||
                f.ring()->names() != basis.ring()->names())
                throw RingMismatchError("normal_form across incompatible rings");
            p = f.with_ring(basis.ring());
        }
    }
    return reduce_exact(std::move(p), basis.elements());
}

bool is_member(const Polynomial& f, const GroebnerBasis& basis) {
    return normal_form(f, basis).is_zero();
}

}  // namespace containlab

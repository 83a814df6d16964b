#pragma once

#include <random>

#include "containlab/polynomial.hpp"

namespace containlab::testutil {

inline FieldElement random_element(const FieldDescriptor* f, std::mt19937& rng) {
    switch (f->kind()) {
        case FieldDescriptor::Kind::Rationals: {
            std::uniform_int_distribution<int> num(-20, 20), den(1, 10);
            return FieldElement::from_rational(f, rat(num(rng), den(rng)));
        }
        case FieldDescriptor::Kind::PrimeField: {
            std::uniform_int_distribution<long> v(0, f->prime() - 1);
            return FieldElement::from_integer(f, v(rng));
        }
        case FieldDescriptor::Kind::Cyclotomic: {
            std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
            FieldElement z = FieldElement::zeta(f);
            FieldElement acc = FieldElement::zero(f);
            FieldElement zp = FieldElement::one(f);
            for (unsigned i = 0; i < f->extension_degree(); ++i) {
                acc += FieldElement::from_rational(f, rat(num(rng), den(rng))) * zp;
                zp = zp * z;
            }
            return acc;
        }
    }
    return FieldElement();
}

inline Polynomial random_polynomial(const RingPtr& ring, std::mt19937& rng,
                                    unsigned max_terms = 5, unsigned max_exp = 3) {
    std::uniform_int_distribution<unsigned> nterms(0, max_terms), expd(0, max_exp);
    std::vector<Term> terms;
    unsigned count = nterms(rng);
    for (unsigned t = 0; t < count; ++t) {
        std::vector<unsigned> exps(ring->num_vars());
        for (auto& e : exps) e = expd(rng);
        terms.push_back({Monomial::from_exponents(exps), random_element(ring->field(), rng)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace containlab::testutil

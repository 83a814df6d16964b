#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "containlab/ideal.hpp"

namespace containlab {

// A named finite set of fat points in P^N with exact coordinates.
// Points are pairwise distinct projectively and normalized so the first
// nonzero coordinate is 1.
struct FatPointConfiguration {
    RingPtr ring;
    std::vector<FatPoint> points;
    std::string name;

    unsigned projective_dimension() const { return ring->num_vars() - 1; }

    // Defining ideal I(Z) = intersection of I(P_i)^{m_i}.
    Ideal ideal(const Budget& budget = Budget::defaults()) const;
    // m-th symbolic power of the scheme.
    Ideal symbolic(unsigned m, const Budget& budget = Budget::defaults()) const;

    // One point per line: "(c0 : c1 : ... : cN) ^ multiplicity".
    std::string to_text() const;
};

// A finite set of distinct lines in P^2 together with its exact
// incidence table (every point where at least two lines meet, with the
// full set of lines through it).
struct LineArrangement {
    struct IncidencePoint {
        std::vector<FieldElement> point;
        std::vector<unsigned> line_indices;  // sorted
    };

    RingPtr ring;
    std::vector<Polynomial> lines;  // linear forms, normalized leading coefficient 1
    std::vector<IncidencePoint> incidence;

    // Product of all line forms.
    Polynomial product() const;
    // Number of lines vanishing at the point (exact evaluation).
    unsigned lines_through(const std::vector<FieldElement>& point) const;
};

// Builds the incidence table; validates the lines are linear, nonzero
// and pairwise distinct projectively.
LineArrangement make_arrangement(const RingPtr& ring, std::vector<Polynomial> lines);

// Scale a projective tuple so its first nonzero coordinate is 1.
std::vector<FieldElement> normalize_point(std::vector<FieldElement> point);

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

// 12 points / 9 lines over Q(zeta_3); every point on exactly 3 lines.
std::pair<FatPointConfiguration, LineArrangement> dual_hesse();

// The n^2 + 3 intersection points of the 3n lines splitting
// (x^n - y^n)(y^n - z^n)(z^n - x^n), over any field of characteristic
// != 2 with a primitive n-th root of unity.
std::pair<FatPointConfiguration, LineArrangement> fermat(unsigned n,
                                                         const FieldDescriptor* field);

// All C(d, N) points where exactly N of the d moment-curve hyperplanes
// sum_j t_i^j x_j meet.  Empty ts means t_i = 1..d over Q.
FatPointConfiguration star(unsigned d, unsigned N,
                           std::vector<FieldElement> ts = {});

// 12 lines tangent/secant to the regular 12-gon on the unit circle,
// realized exactly over Q(zeta_12); the configuration is the 19 triple
// points.
std::pair<FatPointConfiguration, LineArrangement> boroczky12();

// All p^2 + p points of P^2(F_p) except (0:0:1).
FatPointConfiguration punctured_plane(std::uint32_t p);

// The 49 intersection points (21 quadruple, 28 triple) of the 21 lines
// of P^2(F_7) disjoint from a smooth conic.
std::pair<FatPointConfiguration, LineArrangement> klein_f7();

// s pseudo-random points in P^N with small integer coordinates; redraws
// until no N+1 of them lie on a hyperplane.
FatPointConfiguration general_points(unsigned s, unsigned N, std::uint64_t seed);

// The chosen standard coordinate points of P^N (monomial ideal).
FatPointConfiguration coordinate_points(unsigned N, const std::vector<unsigned>& subset);
FatPointConfiguration coordinate_points(unsigned N);  // all of them

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

struct NamedConfiguration {
    FatPointConfiguration config;
    std::optional<LineArrangement> lines;
};

// Registry grammar:
//   dual-hesse | fermat:<n>[:<field>] | star:<d>:<N>[:t1,...] |
//   boroczky12 | punctured:<p> | klein-f7 | general:<s>:<N>:<seed> |
//   coordpts:<N>[:i1,...]
NamedConfiguration make_configuration(const std::string& name);

// Canonical sweep list covering every constructor family.
std::vector<std::string> registry_roster();

}  // namespace containlab

#ifndef VDELTA_INVARIANTS_HPP
#define VDELTA_INVARIANTS_HPP

#include <map>
#include <vector>

#include "vdelta/gauss_diagram.hpp"
#include "vdelta/laurent.hpp"

namespace vdelta {

// Map n -> J_n restricted to nonzero entries; n = 0 is never present.
using WritheTable = std::map<int, int>;

// Per-component parities (p_1, ..., p_n), each 0 or 1.
using ParityVector = std::vector<int>;

// Index of a chord of a knot diagram: signed count of the other chords' endpoints
// on the arc from the chord's initial (Over) endpoint to its terminal (Under)
// endpoint, where a chord of sign e contributes +e at its terminal and -e at its
// initial endpoint. Throws std::domain_error on multi-component diagrams.
int index(const GaussDiagram& d, int chord);

// Sum of chord signs.
int writhe(const GaussDiagram& d);

WritheTable n_writhe(const GaussDiagram& d);

// Odd writhe J = sum of J_n over odd n; always even for knots.
int odd_writhe(const GaussDiagram& d);

ParityVector parity_vector(const GaussDiagram& d);

inline constexpr int kDefaultStateSumBudget = 24;

// Kauffman bracket by the combinatorial state sum: every chord is smoothed either
// way, loops of the resulting abstract curve collection are counted by re-gluing
// arcs, and each state contributes A^(#A - #B) * (-A^2 - A^-2)^(loops - 1).
// For a positive chord the A-smoothing is the orientation-respecting reconnection;
// for a negative chord the B-smoothing is. Throws resource_error if the diagram
// has more chords than `budget`.
LaurentPolynomial kauffman_bracket(const GaussDiagram& d, int budget = kDefaultStateSumBudget);

// f-polynomial (Jones polynomial of the virtual link): (-A^3)^(-writhe) * bracket.
LaurentPolynomial f_polynomial(const GaussDiagram& d, int budget = kDefaultStateSumBudget);

} // namespace vdelta

#endif

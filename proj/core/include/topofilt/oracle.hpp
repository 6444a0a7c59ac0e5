#pragma once

#include <utility>
#include <vector>

#include "topofilt/diagram.hpp"
#include "topofilt/faces.hpp"

namespace topofilt {

// Ground-truth persistence computation, intentionally simple and slow, used
// to cross-check the production paths. Two independent routes: a direct
// component sweep for dimension 0 and a full F2 boundary-matrix reduction.

// F2 boundary matrix in filtration order; column j lists the row positions of
// the boundary of cell j, all strictly below j. Faces contribute only their
// odd-multiplicity edges (repeated edges cancel over F2).
struct FiltrationMatrix {
    std::vector<Cell> cells;
    std::vector<ExtendedValue> values;
    std::vector<std::vector<int>> columns;
};

FiltrationMatrix filtration_matrix(const Signal& signal, const TotalOrder& order);
FiltrationMatrix filtration_matrix(const GraphWithFaces& gwf, const Signal& signal,
                                   const TotalOrder& order);

// Sweeps cells in order keeping explicit components as vertex sets; records
// [f(order-min of the dying component), f(edge)) on every merge and one
// permanent interval per surviving component.
Diagram oracle_pd0(const Signal& signal, const TotalOrder& order);

// Standard left-to-right column reduction; returns the dimension-0 and
// dimension-1 diagrams (2-dimensional classes are not reported).
std::pair<Diagram, Diagram> oracle_pd(const GraphWithFaces& gwf, const Signal& signal,
                                      const TotalOrder& order);
std::pair<Diagram, Diagram> oracle_pd(const Signal& signal, const TotalOrder& order);

}  // namespace topofilt

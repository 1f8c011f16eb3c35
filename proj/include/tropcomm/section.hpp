#pragma once

#include <array>
#include <vector>

#include "tropcomm/ext_real.hpp"
#include "tropcomm/matrix.hpp"
#include "tropcomm/sampling.hpp"

namespace tropcomm {

// Exact planar point used for the {x3 = 0} section of a 3x3 span.
struct Point2 {
    Rational x;
    Rational y;
};

bool operator==(const Point2& a, const Point2& b);
bool operator!=(const Point2& a, const Point2& b);
bool operator<(const Point2& a, const Point2& b);  // lexicographic

// One cell of the section complex.  dim 2 cells carry their boundary
// vertices counterclockwise starting at the lexicographically least one;
// dim 1 cells carry their two endpoints sorted; dim 0 cells a single point.
struct SectionCell {
    int dim = 0;
    std::vector<Point2> vertices;
};

// The planar complex {x3 = 0} ∩ span(A) for a real 3x3 matrix, together
// with the generators (the columns of A0 dropped to the plane).  Cells are
// the inclusion-maximal cells of the covering-type decomposition, sorted by
// dimension (descending) and then lexicographically by vertex list.
struct SpanSection {
    std::array<Point2, 3> generators;
    std::vector<SectionCell> cells;
};

// Build the section complex of a real 3x3 matrix.
SpanSection section_complex(const TropMatrix& a);

// Membership of the planar point (p.x, p.y, 0) in span(A), by residuation.
bool section_member(const TropMatrix& a, const Point2& p);

// True iff column j of A0 lies in sector S_j, where
//   S1 = {x >= 0, x >= y},  S2 = {x <= y, y >= 0},  S3 = {x <= 0, y <= 0}.
// Holds for every real normal 3x3 matrix.
bool sector_check(const TropMatrix& a);

// Graph connectivity of the complex: cells are adjacent when they share a
// vertex (maximal cells of a polyhedral complex meet in common faces).
bool section_connected(const SpanSection& s);

// Random point of the complex: uniform cell choice, then a random rational
// convex combination of its vertices.  Deterministic for a fixed rng state.
Point2 sample_section_point(const SpanSection& s, SplitMix64& rng);

}  // namespace tropcomm

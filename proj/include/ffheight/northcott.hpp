#pragma once

#include <functional>

#include "ffheight/heights.hpp"

namespace ffheight {

// Enumeration of the (finite) set of elements of degree <= d over F_q(t)
// with Weil height <= B. Degree-1 elements are rational functions; degrees 2
// and 3 are conjugacy classes given by their normalized minimal polynomials
// (coefficient degrees are bounded by floor(B * degree)). Reducibility over
// F_q(t) in degrees 2 and 3 is exactly the existence of a rational root;
// big boxes are handled by sieving out all (linear) x (cofactor) products,
// which is complete because the maximum coefficient degree is additive on
// products. Degrees >= 4 would need genuine bivariate factorization and are
// rejected as unsupported.
//
// budget caps the number of candidate tuples examined (throws Budget).

// Materialized listing, sorted by (degree, height, coefficient order):
// rationals by (num, den), classes by (a_d, ..., a_0), all via poly_less.
std::vector<Coordinate> northcott_enumerate(const FqCtx& F, const Rat& B, int d,
                                            long long budget);

// Streaming census for large boxes: visit(degree, max_coeff_degree) per
// element, in generation order; the height of an item is
// max_coeff_degree / degree and it is constant iff max_coeff_degree == 0.
void northcott_scan(const FqCtx& F, const Rat& B, int d, long long budget,
                    const std::function<void(int, int)>& visit);

long long northcott_count(const FqCtx& F, const Rat& B, int d, long long budget);

}  // namespace ffheight

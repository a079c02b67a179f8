#pragma once

#include <vector>

#include "salem/polynomial.hpp"

namespace salem {

unsigned euler_phi(unsigned n);

/// The n-th cyclotomic polynomial, exact.  Requires n >= 1.
IntPoly cyclotomic(unsigned n);

/// Ascending indices n with phi(n) <= max_totient, always including 1 and 2.
std::vector<unsigned> cyclotomic_candidate_indices(unsigned max_totient);

}  // namespace salem

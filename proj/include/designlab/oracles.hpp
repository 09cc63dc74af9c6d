#pragma once

// Brute-force reference computations. None of these call into the exact
// algebra kernels or the DFS enumerators they are used to check.

#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "designlab/exact_matrix.hpp"
#include "designlab/incidence.hpp"

namespace designlab::oracle {

/// Blocks sorted lexicographically; families compare as sets this way.
using CanonicalFamily = std::vector<std::vector<std::size_t>>;

/// Laplace expansion along the first row. Exponential; keep n <= 8.
mpz_class cofactor_det(const std::vector<std::vector<mpz_class>>& m);

/// Integer N N^T from direct dot products of membership rows.
std::vector<std::vector<long>> gram_by_dot_products(const IncidenceSystem& s);

/// Number of blocks containing both x and y, by scanning every block.
std::size_t pair_count(const IncidenceSystem& s, std::size_t x, std::size_t y);

CanonicalFamily canonical(const IncidenceSystem& s);

/// Filters every subset of the nonempty powerset of {0..v-1}; v <= 4.
std::set<CanonicalFamily> naive_odd_town(std::size_t v);
std::set<CanonicalFamily> naive_const_intersect(std::size_t v);

/// Steiner triple system on 9 points from the affine plane AG(2,3): lines of
/// the 3x3 grid (rows, columns and both diagonal classes).
IncidenceSystem affine_plane_3();

IncidenceSystem fano_plane();

/// v in [0, max_v], b in [0, max_b], each block a uniform random subset.
IncidenceSystem random_system(std::mt19937_64& rng, std::size_t max_v, std::size_t max_b);

/// Entries drawn from lo..hi (numerators over 1..4 for QQ, reduced mod p
/// for GF(p)); each entry is zeroed with probability `zero_bias` so low ranks
/// show up often.
ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, Domain domain, long lo = -9,
                          long hi = 9, double zero_bias = 0.0);

}  // namespace designlab::oracle

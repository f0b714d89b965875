#pragma once

// Brute-force reference computations. These deliberately avoid the engines they
// are used to check: no coset-leader tables, no echelon enumeration, no rewriting.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sgb/linear_code.hpp"
#include "sgb/schubert.hpp"

namespace sgb::oracle {

/// Every codeword as a bit mask, by summing subsets of generator rows.
[[nodiscard]] std::vector<std::uint64_t> codewords(const LinearCode& code);

/// Degrevlex-minimal element of u + C.
[[nodiscard]] std::uint64_t coset_minimum(std::uint64_t u, const std::vector<std::uint64_t>& codewords);

/// Number of squarefree monomials that are not coset minima while all their
/// maximal proper divisors are (scan over all 2^n supports).
[[nodiscard]] std::size_t count_minimal_nonstandard(const LinearCode& code);

/// All l-dimensional subspaces of GF(q)^m as sorted lists of vectors, each vector
/// encoded base q with coordinate 1 least significant. Built from spans of vector
/// tuples and deduplicated.
[[nodiscard]] std::vector<std::vector<std::uint32_t>> subspaces(int l, int m, std::uint32_t q);

/// dim(W cap span(e_1..e_{alpha_i})) >= i for all i, by counting vectors.
[[nodiscard]] bool meets_schubert_conditions(const std::vector<std::uint32_t>& subspace, const IndexTuple& alpha,
                                             std::uint32_t q);

}  // namespace sgb::oracle

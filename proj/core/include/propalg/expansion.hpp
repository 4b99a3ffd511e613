#pragma once

#include "propalg/dimacs.hpp"
#include "propalg/primes.hpp"

namespace propalg {

/// Blows a clause up over every variable it lacks, doubling once per
/// missing variable, until each factor is a full clause; returns the prime
/// indices of those factors. A k-literal clause yields 2^(n-k) indices.
PrimeSet clause_blowup(const Clause& clause, unsigned n);

/// Prime index of a full clause (its unique falsifying assignment).
std::uint64_t full_clause_index(const Clause& clause, unsigned n);

/// Standard prime form of a CNF: the union of the blown-up clauses.
PrimeSet cnf_to_primes(const CnfDoc& doc);

/// The full clause for each prime index, in ascending index order with
/// literals ordered by variable.
CnfDoc primes_to_cnf(const PrimeSet& primes);

}  // namespace propalg

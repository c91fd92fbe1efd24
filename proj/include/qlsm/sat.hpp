#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qlsm {

struct Literal {
    int var = 0;           // 0-based variable index
    bool negated = false;  // true for a negative literal
};

/// CNF instance. Assignment x is encoded as a basis index with bit v
/// (least significant = variable 0) giving the value of variable v.
struct SatInstance {
    int num_vars = 0;
    std::vector<std::vector<Literal>> clauses;

    /// True iff the clause has at least one literal satisfied under x.
    bool clause_satisfied(std::size_t clause_idx, std::uint64_t assignment) const;

    /// Number of clauses violated by the assignment.
    int violated_count(std::uint64_t assignment) const;

    /// True iff every clause is satisfied.
    bool satisfied(std::uint64_t assignment) const;
};

/// Parse DIMACS CNF ("p cnf <vars> <clauses>" header, clauses terminated by
/// 0, 'c' comment lines). Literal v > 0 maps to variable v-1. The clause
/// count must match the header and clauses must be non-empty.
SatInstance parse_dimacs(std::istream& in);
SatInstance parse_dimacs_file(const std::string& path);

/// Parse an explicit truth table: one 0/1 per line, 2^n lines total.
/// Returns the table; n is inferred and must make the line count a power
/// of two.
std::vector<bool> parse_truth_table(std::istream& in);
std::vector<bool> parse_truth_table_file(const std::string& path);

}  // namespace qlsm

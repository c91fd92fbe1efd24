#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qlsm/sat.hpp"

namespace qlsm {

/// Boolean function on n-bit inputs, given as an explicit table.
struct OracleFunction {
    int n = 0;
    std::vector<bool> table;  // length 2^n

    static OracleFunction from_table(std::vector<bool> table);
    /// f(x) = 1 iff the assignment x satisfies every clause.
    static OracleFunction from_instance(const SatInstance& inst);
};

// The flag rewrite is simulated over all 2^n basis components; 16 index
// qubits is the ceiling for that table. Plain exhaustive evaluation goes a
// little further.
inline constexpr int kMaxOracleQubits = 16;
inline constexpr int kMaxBruteForceQubits = 20;

/// Uniform superposition over all index values, each carrying an integer
/// flag register. flag_width is 1 for the decision algorithm and n+1 for
/// the counting variant (wide enough to hold counts up to 2^n). Amplitudes
/// are uniformly 2^(-n/2) and are not stored per component.
struct FlaggedSuperposition {
    int n = 0;
    int flag_width = 1;
    std::vector<std::uint32_t> flags;  // flags[i] pairs with index i

    double amplitude() const;
    std::size_t true_count() const;  // components with nonzero flag
};

/// One pair rewrite: before/after flag values of the two components whose
/// indices differ only in the iteration bit.
struct PairRecord {
    std::uint32_t index_a = 0, index_b = 0;
    std::uint32_t before_a = 0, before_b = 0;
    std::uint32_t after_a = 0, after_b = 0;
};

struct IterationTrace {
    int k = 0;
    std::size_t true_before = 0;
    std::size_t true_after = 0;
    std::vector<PairRecord> pairs;
};

struct RunTrace {
    std::vector<IterationTrace> iterations;
    std::uint64_t hash() const;
};

/// Decision-mode state: component (i, f(i)) for every index i.
FlaggedSuperposition prepare_flagged_state(const OracleFunction& f);

/// Counting-mode state: same flags, register widened to n+1 bits.
FlaggedSuperposition prepare_counting_state(const OracleFunction& f);

/// The nonlinear rewrite on a pair of single-bit flags: both become the OR.
/// (0,0) is the only fixed-zero case; any 1 spreads to the partner.
std::pair<int, int> nonlinear_pair_map(int flag_a, int flag_b);

/// One pass over the pairing by bit k: components whose indices differ only
/// in bit k exchange flags through the nonlinear rule. Single-bit registers
/// use the OR rule; wider (counting) registers replace both flags by the
/// pair sum. Component count and amplitudes are unchanged.
FlaggedSuperposition filter_iteration(const FlaggedSuperposition& state, int k,
                                      IterationTrace* trace = nullptr);

/// Runs iterations k = 0..n-1 and reads the flag, which by then is common
/// to every component. Returns true iff some input satisfies f.
bool run_np_decision(const OracleFunction& f, RunTrace* trace = nullptr);

/// Counting variant: flags start at f(i) and pairs are summed, so the final
/// common flag equals the number of satisfying inputs.
std::uint64_t run_sharp_p_count(const OracleFunction& f, RunTrace* trace = nullptr);

struct BruteForceResult {
    bool any = false;
    std::uint64_t count = 0;
};

/// Exhaustive evaluation, the verification oracle for both algorithms.
BruteForceResult brute_force(const OracleFunction& f);

}  // namespace qlsm

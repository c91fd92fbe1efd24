#include "qlsm/oracle.hpp"

#include <cmath>
#include <string>

#include "qlsm/errors.hpp"
#include "qlsm/rng.hpp"

namespace qlsm {

namespace {

int table_qubits(std::size_t table_size) {
    if (table_size < 2 || (table_size & (table_size - 1)) != 0)
        throw SizeError("oracle table length " + std::to_string(table_size) +
                        " is not a power of two >= 2");
    int n = 0;
    while ((std::size_t{1} << n) < table_size) ++n;
    return n;
}

void check_prepare_cap(int n) {
    if (n < 1 || n > kMaxOracleQubits)
        throw SizeError("oracle index register of " + std::to_string(n) +
                        " qubits outside [1, " + std::to_string(kMaxOracleQubits) + "]");
}

FlaggedSuperposition prepare(const OracleFunction& f, int flag_width) {
    check_prepare_cap(f.n);
    FlaggedSuperposition state;
    state.n = f.n;
    state.flag_width = flag_width;
    state.flags.resize(f.table.size());
    for (std::size_t i = 0; i < f.table.size(); ++i) state.flags[i] = f.table[i] ? 1u : 0u;
    return state;
}

}  // namespace

OracleFunction OracleFunction::from_table(std::vector<bool> table) {
    OracleFunction f;
    f.n = table_qubits(table.size());
    f.table = std::move(table);
    return f;
}

OracleFunction OracleFunction::from_instance(const SatInstance& inst) {
    if (inst.num_vars < 1 || inst.num_vars > kMaxBruteForceQubits)
        throw SizeError("oracle from instance: variable count out of range");
    OracleFunction f;
    f.n = inst.num_vars;
    f.table.resize(std::size_t{1} << inst.num_vars);
    for (std::size_t x = 0; x < f.table.size(); ++x) f.table[x] = inst.satisfied(x);
    return f;
}

double FlaggedSuperposition::amplitude() const { return std::pow(2.0, -0.5 * n); }

std::size_t FlaggedSuperposition::true_count() const {
    std::size_t c = 0;
    for (std::uint32_t v : flags)
        if (v != 0) ++c;
    return c;
}

std::uint64_t RunTrace::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const IterationTrace& it : iterations) {
        h = fnv1a64_u64(static_cast<std::uint64_t>(it.k), h);
        h = fnv1a64_u64(it.true_after, h);
        for (const PairRecord& p : it.pairs) {
            h = fnv1a64_u64((std::uint64_t{p.index_a} << 32) | p.index_b, h);
            h = fnv1a64_u64((std::uint64_t{p.after_a} << 32) | p.after_b, h);
        }
    }
    return h;
}

FlaggedSuperposition prepare_flagged_state(const OracleFunction& f) { return prepare(f, 1); }

FlaggedSuperposition prepare_counting_state(const OracleFunction& f) {
    return prepare(f, f.n + 1);
}

std::pair<int, int> nonlinear_pair_map(int flag_a, int flag_b) {
    if ((flag_a & ~1) || (flag_b & ~1))
        throw DomainError("nonlinear_pair_map: flags must be bits");
    const int both = flag_a | flag_b;
    return {both, both};
}

FlaggedSuperposition filter_iteration(const FlaggedSuperposition& state, int k,
                                      IterationTrace* trace) {
    if (k < 0 || k >= state.n)
        throw IndexError("filter_iteration: bit " + std::to_string(k) + " out of range");
    FlaggedSuperposition out = state;
    const std::size_t mask = std::size_t{1} << k;
    if (trace) {
        trace->k = k;
        trace->true_before = state.true_count();
        trace->pairs.clear();
        trace->pairs.reserve(state.flags.size() / 2);
    }
    for (std::size_t i = 0; i < state.flags.size(); ++i) {
        if (i & mask) continue;  // visit each pair once, from its low member
        const std::size_t j = i | mask;
        const std::uint32_t a = state.flags[i];
        const std::uint32_t b = state.flags[j];
        // OR for single-bit flag registers, pair sum for counting registers.
        const std::uint32_t merged = state.flag_width == 1 ? (a | b) : (a + b);
        out.flags[i] = merged;
        out.flags[j] = merged;
        if (trace)
            trace->pairs.push_back(PairRecord{static_cast<std::uint32_t>(i),
                                              static_cast<std::uint32_t>(j), a, b, merged,
                                              merged});
    }
    if (trace) trace->true_after = out.true_count();
    return out;
}

namespace {

std::uint32_t run_common_flag(FlaggedSuperposition state, RunTrace* trace) {
    if (trace) trace->iterations.resize(state.n);
    for (int k = 0; k < state.n; ++k)
        state = filter_iteration(state, k, trace ? &trace->iterations[k] : nullptr);
    const std::uint32_t flag = state.flags.front();
    for (std::uint32_t v : state.flags)
        if (v != flag)
            throw InternalError("flag register still varies across components after the final "
                                "iteration");
    return flag;
}

}  // namespace

bool run_np_decision(const OracleFunction& f, RunTrace* trace) {
    return run_common_flag(prepare_flagged_state(f), trace) != 0;
}

std::uint64_t run_sharp_p_count(const OracleFunction& f, RunTrace* trace) {
    return run_common_flag(prepare_counting_state(f), trace);
}

BruteForceResult brute_force(const OracleFunction& f) {
    if (f.n > kMaxBruteForceQubits)
        throw SizeError("brute_force: table too large");
    BruteForceResult r;
    for (bool v : f.table)
        if (v) {
            r.any = true;
            ++r.count;
        }
    return r;
}

}  // namespace qlsm

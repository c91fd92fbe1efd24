#include "qlsm/sat.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "qlsm/errors.hpp"

namespace qlsm {

bool SatInstance::clause_satisfied(std::size_t clause_idx, std::uint64_t assignment) const {
    for (const Literal& lit : clauses[clause_idx]) {
        const bool value = (assignment >> lit.var) & 1u;
        if (value != lit.negated) return true;
    }
    return false;
}

int SatInstance::violated_count(std::uint64_t assignment) const {
    int violated = 0;
    for (std::size_t c = 0; c < clauses.size(); ++c)
        if (!clause_satisfied(c, assignment)) ++violated;
    return violated;
}

bool SatInstance::satisfied(std::uint64_t assignment) const {
    return violated_count(assignment) == 0;
}

SatInstance parse_dimacs(std::istream& in) {
    SatInstance inst;
    int declared_clauses = -1;
    std::string line;
    int line_no = 0;
    std::vector<Literal> current;
    bool in_clause = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == 'c') continue;
        if (line[0] == '%') break;  // some benchmark files end with a % marker
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, fmt;
            int nv = 0, nc = 0;
            if (!(hs >> p >> fmt >> nv >> nc) || fmt != "cnf")
                throw IngestError("DIMACS line " + std::to_string(line_no) +
                                  ": malformed problem line '" + line + "'");
            if (nv < 1) throw IngestError("DIMACS: variable count must be >= 1");
            inst.num_vars = nv;
            declared_clauses = nc;
            continue;
        }
        if (declared_clauses < 0)
            throw IngestError("DIMACS line " + std::to_string(line_no) +
                              ": clause data before 'p cnf' header");
        std::istringstream ls(line);
        long long v;
        while (ls >> v) {
            if (v == 0) {
                if (current.empty())
                    throw IngestError("DIMACS line " + std::to_string(line_no) +
                                      ": empty clause");
                inst.clauses.push_back(current);
                current.clear();
                in_clause = false;
                continue;
            }
            const long long var = (v > 0 ? v : -v) - 1;
            if (var >= inst.num_vars)
                throw IngestError("DIMACS line " + std::to_string(line_no) + ": literal " +
                                  std::to_string(v) + " exceeds declared variable count " +
                                  std::to_string(inst.num_vars));
            current.push_back(Literal{static_cast<int>(var), v < 0});
            in_clause = true;
        }
        if (!ls.eof() && ls.fail()) {
            std::string tok;
            ls.clear();
            ls >> tok;
            throw IngestError("DIMACS line " + std::to_string(line_no) + ": bad token '" + tok + "'");
        }
    }
    if (declared_clauses < 0) throw IngestError("DIMACS: missing 'p cnf' header");
    if (in_clause) throw IngestError("DIMACS: last clause not terminated by 0");
    if (static_cast<int>(inst.clauses.size()) != declared_clauses)
        throw IngestError("DIMACS: header declares " + std::to_string(declared_clauses) +
                          " clauses, file contains " + std::to_string(inst.clauses.size()));
    if (inst.clauses.empty()) throw IngestError("DIMACS: instance has no clauses");
    return inst;
}

SatInstance parse_dimacs_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IngestError("cannot open CNF file: " + path);
    return parse_dimacs(f);
}

std::vector<bool> parse_truth_table(std::istream& in) {
    std::vector<bool> table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        if (tok == "0")
            table.push_back(false);
        else if (tok == "1")
            table.push_back(true);
        else
            throw IngestError("truth table line " + std::to_string(line_no) +
                              ": expected 0 or 1, got '" + tok + "'");
        if (ls >> tok)
            throw IngestError("truth table line " + std::to_string(line_no) +
                              ": more than one value on a line");
    }
    if (table.size() < 2 || (table.size() & (table.size() - 1)) != 0)
        throw IngestError("truth table: line count " + std::to_string(table.size()) +
                          " is not a power of two >= 2");
    return table;
}

std::vector<bool> parse_truth_table_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IngestError("cannot open truth table file: " + path);
    return parse_truth_table(f);
}

}  // namespace qlsm

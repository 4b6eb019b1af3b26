#pragma once

#include "skolem/lrs.hpp"

#include <string>

namespace skolem {

enum class RunMode { Certify, Report };

// One decision problem: the sequence plus run options.  Structured text with
// one `key = value` pair per line; lists are comma-separated, rationals are
// written "p/q", comments start with '#'.
struct ProblemFile {
    std::vector<Rat> recurrence;
    std::vector<Rat> initial;
    std::vector<Int> field;  // optional minimal polynomial, ascending degree;
                             // validated irreducible, recorded in the report
    RunMode mode = RunMode::Certify;
    Int cap = Int(1000000);
    unsigned long sieve_budget = 1ul << 20;
    long precision = 192;

    bool operator==(const ProblemFile&) const = default;
};

// Throws skolem::error with a line-numbered message on malformed input.
ProblemFile parse_problem(const std::string& text);

// Canonical text form; parse_problem(serialize_problem(p)) == p.
std::string serialize_problem(const ProblemFile& p);

LRS problem_lrs(const ProblemFile& p);

}  // namespace skolem

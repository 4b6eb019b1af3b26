#pragma once

#include "skolem/engine.hpp"
#include "skolem/problem_io.hpp"

namespace skolem {

// Everything the renderers need, computed once per problem.
struct RunArtifacts {
    ProblemFile problem;
    bool zero_sequence = false;
    int minimal_order = 0;
    long transient = 0;
    bool zero_tail = false;
    std::vector<BinetRoot> roots;  // of the minimized sequence
    unsigned long degeneracy = 1;
    EngineResult result;
};

RunArtifacts analyze(const ProblemFile& p, int threads);

// Re-derives each branch bound from the constants stored in its certificate
// and checks the reported cutoff still follows; certify mode runs this
// before emitting anything.
bool replay(const RunArtifacts& ra);

// Deterministic plain-text rendering.  Timing deliberately lives outside the
// report (the driver prints it to stderr) so repeated runs are byte-identical.
std::string human_report(const RunArtifacts& ra);

// Deterministic structured rendering; schema shipped in docs/report-schema.json.
std::string machine_report(const RunArtifacts& ra);

}  // namespace skolem

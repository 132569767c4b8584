#pragma once

#include <stdexcept>
#include <string>

namespace wojda {

// Base class for all contract violations raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input-shaped problems (bad files, bad argument ranges, misuse of maps).
struct ParseError : Error {
    ParseError(int line, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};
struct RangeError : Error {
    using Error::Error;
};
struct ShapeError : Error {
    using Error::Error;
};
struct ScaleError : Error {
    using Error::Error;
};
struct PartialMapError : Error {
    using Error::Error;
};
struct OverlapError : Error {
    using Error::Error;
};
struct InjectivityError : Error {
    using Error::Error;
};

// A stated mathematical hypothesis does not hold for the given input.
struct HypothesisError : Error {
    using Error::Error;
};
struct RegimeError : Error {
    using Error::Error;
};
struct DecompositionError : Error {
    using Error::Error;
};
struct NotEnoughLowDegree : Error {
    using Error::Error;
};

// One of the greedy stages ran out of feasible targets. Carries the stage
// and the vertex that could not be placed; never retried silently.
struct StageExhausted : Error {
    StageExhausted(int stage, int vertex)
        : Error("stage " + std::to_string(stage) + " found no available target for vertex " +
                std::to_string(vertex)),
          stage(stage), vertex(vertex) {}
    int stage;
    int vertex;
};

// An invariant that must hold by theorem failed at runtime: a bug surface,
// not an input error.
struct InternalInvariantError : Error {
    using Error::Error;
};
struct StructureError : Error {
    using Error::Error;
};

} // namespace wojda

#pragma once

#include <stdexcept>
#include <string>

namespace qonstell {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// stations
struct MalformedRow : Error {
    explicit MalformedRow(int line, const std::string& what)
        : Error("malformed row at line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};
struct DuplicateId : Error {
    explicit DuplicateId(const std::string& id) : Error("duplicate station id: " + id), id(id) {}
    std::string id;
};
struct OutOfRangeCoordinate : Error {
    explicit OutOfRangeCoordinate(int line, const std::string& what)
        : Error("out-of-range coordinate at line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};
struct ExhaustedSampling : Error {
    ExhaustedSampling() : Error("rejection sampling exhausted (degenerate land mask?)") {}
};

// orbits
struct NonFiniteInput : Error {
    NonFiniteInput() : Error("non-finite input coordinate") {}
};
struct ZeroComponent : Error {
    ZeroComponent() : Error("allocation fraction must be strictly positive") {}
};
struct InfeasibleSpec : Error {
    InfeasibleSpec() : Error("constellation spec is infeasible (counts do not sum to N)") {}
};

// link model
struct NotVisible : Error {
    NotVisible() : Error("link geometry is below the minimum elevation angle") {}
};

// evaluator / config
struct ConfigError : Error {
    using Error::Error;
};

// optimizers
struct SingularKernel : Error {
    SingularKernel() : Error("kernel matrix not positive definite after jitter escalation") {}
};
struct PoolTooLarge : Error {
    PoolTooLarge() : Error("parent pool exceeds population size") {}
};
struct GeneLengthMismatch : Error {
    GeneLengthMismatch() : Error("crossover parents have different gene lengths") {}
};

} // namespace qonstell

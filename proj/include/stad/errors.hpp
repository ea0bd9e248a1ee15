#pragma once

#include <stdexcept>
#include <string>

namespace stad {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Component vectors disagree on length, anomaly intervals overlap, etc.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Too few observations for the requested operation.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Weighted normal equations are singular; the candidate fit is unusable.
class DegenerateFitError : public Error {
public:
    using Error::Error;
};

/// sigma_hat = 0, i.e. the series consists of exactly repeated values.
class ZeroScaleError : public Error {
public:
    using Error::Error;
};

/// A (B, Q) grid cell cannot be sampled (n < V or too few rows).
class InfeasibleGridError : public Error {
public:
    using Error::Error;
};

/// A seasonal phase has no usable observations.
class InsufficientSeasonsError : public Error {
public:
    using Error::Error;
};

/// Simulation scenario is invalid or anomaly placement failed.
class ScenarioError : public Error {
public:
    using Error::Error;
};

/// Wraps an error from one of the pipeline steps; names the failing step.
class PipelineError : public Error {
public:
    PipelineError(std::string step, const std::string& what)
        : Error("step " + step + ": " + what), step_(std::move(step)) {}

    const std::string& step() const { return step_; }

private:
    std::string step_;
};

}  // namespace stad

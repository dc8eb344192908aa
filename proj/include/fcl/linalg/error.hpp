// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace fcl {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// Non-finite entries, non-normal input where normality is required, bad parameters.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// Iterative kernel hit its iteration cap. Carries the last residual.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Logarithm requested at an eigenvalue on (or too near) the branch cut or at zero.
class BranchCutError : public Error {
public:
    using Error::Error;
};

/// An eigenvalue sits on the boundary of a spectral region within tolerance.
class AmbiguousSpectrumError : public Error {
public:
    using Error::Error;
};

/// A compression schedule reaches past half of the ambient dimension.
class TwoScaleViolation : public Error {
public:
    using Error::Error;
};

}  // namespace fcl

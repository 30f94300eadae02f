// Copyright 2026 The trapion Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace trapion {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The Fock truncation is too small for the requested displacement, or an
/// index falls outside it.
class TruncationError : public Error {
  public:
    using Error::Error;
};

class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A requested parameter combination has no real solution, hits a pole, or
/// lies outside the domain where an operation is defined.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// The ratio m = d1/d0 is not purely imaginary.
class InvalidRatioError : public Error {
  public:
    using Error::Error;
};

/// Raised by prepare() when a validity condition fails. Carries the name
/// and magnitude of the first failing residual.
class PreparationError : public Error {
  public:
    PreparationError(std::string residual_name, double residual,
                     const std::string &message)
        : Error(message), residual_name_(std::move(residual_name)),
          residual_(residual) {}

    [[nodiscard]] const std::string &residual_name() const noexcept {
        return residual_name_;
    }
    [[nodiscard]] double residual() const noexcept { return residual_; }

  private:
    std::string residual_name_;
    double residual_;
};

/// The signal handed to dominant_frequency() is constant.
class NoOscillationError : public Error {
  public:
    using Error::Error;
};

class EigensolverError : public Error {
  public:
    using Error::Error;
};

} // namespace trapion

// SPDX-License-Identifier: Apache-2.0
//
// hcrb: hybrid Cramer-Rao bound analysis for coherent distributed MIMO radar
// Copyright (C) 2026 the hcrb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hcrb {

/// Base class of every failure the library reports. `code()` is a stable,
/// machine-readable tag; the CLI maps it to status columns and exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& what) : Error("ShapeMismatch", what) {}
};

class NotSymmetric : public Error {
 public:
  explicit NotSymmetric(const std::string& what) : Error("NotSymmetric", what) {}
};

class IllConditioned : public Error {
 public:
  IllConditioned(const std::string& what, double condition_estimate)
      : Error("IllConditioned", what), condition_estimate_(condition_estimate) {}

  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error("ValidationError", what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A positive phase-error variance was required but zero was supplied.
class DegenerateSigma : public Error {
 public:
  explicit DegenerateSigma(const std::string& what) : Error("DegenerateSigma", what) {}
};

/// The sensor layout carries no usable information about one of the target
/// coordinates (e.g. every station collinear with the target).
class SingularGeometry : public Error {
 public:
  SingularGeometry(const std::string& what, double condition_estimate)
      : Error("SingularGeometry", what), condition_estimate_(condition_estimate) {}

  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

class PoleHit : public Error {
 public:
  explicit PoleHit(const std::string& what) : Error("PoleHit", what) {}
};

class NonMonotoneDetected : public Error {
 public:
  explicit NonMonotoneDetected(const std::string& what)
      : Error("NonMonotoneDetected", what) {}
};

}  // namespace hcrb

// Copyright 2026 The dsphere Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace dsphere {

/// Malformed input: out-of-range vertices, unparseable files, unknown names.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is well formed but violates a mathematical precondition of the
/// operation, e.g. asking for the curvature sign of something that is not a
/// d-graph.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// A constructive procedure (circle completion, surface growth) could not
/// finish. Not a bug on hosts outside the procedure's hypotheses.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dsphere

// Copyright 2026 The hullfilter Authors.
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

namespace hullfilter {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that needs at least one point received none.
class EmptySet : public Error {
 public:
  explicit EmptySet(const std::string& where)
      : Error(where + ": point set is empty") {}
};

/// A coordinate was NaN or infinite.
class NonFiniteCoordinate : public Error {
 public:
  using Error::Error;
};

/// Fewer than three non-collinear support points; the caller should skip
/// filtering and keep every point.
class DegeneratePolygon : public Error {
 public:
  using Error::Error;
};

class InvalidSegmentSize : public Error {
 public:
  using Error::Error;
};

/// A DistributionSpec or BenchConfig violated its invariants.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// Malformed point file (bad magic, unknown precision tag, truncation).
class FormatError : public Error {
 public:
  using Error::Error;
};

class PrecisionMismatch : public Error {
 public:
  using Error::Error;
};

/// The filtered hull differs from the unfiltered hull.
class CorrectnessFailure : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace hullfilter

// Copyright (c) 2026 timesift contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace timesift {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define TIMESIFT_DEFINE_ERROR(name)                               \
  class name : public Error {                                     \
   public:                                                        \
    explicit name(const std::string& msg) : Error(msg) {}         \
  };

// Contract violations on plain arguments (sizes, ranges, fractions).
TIMESIFT_DEFINE_ERROR(InvalidArgumentError)
// File parsing / IO failures.
TIMESIFT_DEFINE_ERROR(IoError)

// raster
TIMESIFT_DEFINE_ERROR(GridMismatchError)

// camera
TIMESIFT_DEFINE_ERROR(BehindCameraError)
TIMESIFT_DEFINE_ERROR(DistortionInversionError)
TIMESIFT_DEFINE_ERROR(DegenerateGeometryError)

// preprocess
TIMESIFT_DEFINE_ERROR(FiducialNotFoundError)
TIMESIFT_DEFINE_ERROR(InvalidFiducialsError)

// features
TIMESIFT_DEFINE_ERROR(InsufficientMatchesError)

// blockgraph
TIMESIFT_DEFINE_ERROR(InsufficientCoverageError)
TIMESIFT_DEFINE_ERROR(InsufficientMarksError)

// sfm
TIMESIFT_DEFINE_ERROR(GaugeDeficiencyError)
TIMESIFT_DEFINE_ERROR(DegenerateConfigurationError)

// densify
TIMESIFT_DEFINE_ERROR(EmptyEpochError)

// metrics
TIMESIFT_DEFINE_ERROR(NoOverlapError)
TIMESIFT_DEFINE_ERROR(NoDataError)
TIMESIFT_DEFINE_ERROR(UndefinedStatisticError)
TIMESIFT_DEFINE_ERROR(DegenerateAxisError)

// pipeline
TIMESIFT_DEFINE_ERROR(EmptyCampaignError)

#undef TIMESIFT_DEFINE_ERROR

}  // namespace timesift

//
// Copyright 2026 The hsel Authors
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
//

#ifndef HSEL_BASE_STATUS_MACROS_H_
#define HSEL_BASE_STATUS_MACROS_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define HSEL_STATUS_CONCAT_INNER_(x, y) x##y
#define HSEL_STATUS_CONCAT_(x, y) HSEL_STATUS_CONCAT_INNER_(x, y)

// Evaluates an expression producing an absl::Status and returns it from the
// enclosing function when it is not OK.
#define RETURN_IF_ERROR(expr)                  \
  do {                                         \
    const absl::Status _hsel_status = (expr);  \
    if (!_hsel_status.ok()) return _hsel_status; \
  } while (0)

#define HSEL_ASSIGN_OR_RETURN_IMPL_(statusor, lhs, rexpr) \
  auto statusor = (rexpr);                                \
  if (!statusor.ok()) return statusor.status();           \
  lhs = std::move(statusor).value()

// Evaluates an expression producing an absl::StatusOr<T>. On success the value
// is moved into `lhs`; otherwise the status is returned.
#define ASSIGN_OR_RETURN(lhs, rexpr) \
  HSEL_ASSIGN_OR_RETURN_IMPL_(       \
      HSEL_STATUS_CONCAT_(_hsel_statusor_, __LINE__), lhs, rexpr)

#endif  // HSEL_BASE_STATUS_MACROS_H_

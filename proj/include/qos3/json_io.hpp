// Copyright 2026 The QOS3 Authors
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

#ifndef QOS3_JSON_IO_HPP
#define QOS3_JSON_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qos3/protocol.hpp"
#include "qos3/report.hpp"

namespace qos3 {

/// Structured (JSON) document for a full enumeration. Keys are emitted
/// sorted, so parse -> dump round-trips byte-identically.
std::string enumeration_to_json(const BranchEnumeration &e, std::uint64_t seed);

std::string classify_to_json(const ClassifyReport &r);

std::string table_to_json(const std::vector<TableRow> &rows, std::uint64_t seed);

}  // namespace qos3

#endif

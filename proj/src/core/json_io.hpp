// Copyright 2025-2026 The compatrad developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * UTF-8 JSON (de)serialization of the library's file formats. Doubles are
 * emitted with full round-trip precision.
 *
 * POVM:       {"effects":[{"alpha":a,"eta":e,"n":[x,y,z]},...],"planar":bool}
 * Assemblage: {"settings":[[x,y,z],...],
 *              "entries":[{"outcome":"+","setting":0,"weight":w,"bloch":[..]},..]}
 * LHS model:  {"p":[...],"hidden_bloch":[[..],..],"settings":[[..],..],
 *              "response_plus":[[..],..],"response_minus":[[..],..]}
 */

#pragma once

#include <string>
#include <vector>

#include "core/lhs.hpp"
#include "core/povm.hpp"
#include "core/radius.hpp"
#include "core/search.hpp"

namespace compatrad {

std::string povm_to_json(const QubitPOVM &povm);
QubitPOVM povm_from_json(const std::string &text);

std::string assemblage_to_json(const Assemblage &assemblage);
Assemblage assemblage_from_json(const std::string &text);

std::string lhs_model_to_json(const LHSModel &model);
LHSModel lhs_model_from_json(const std::string &text);

std::string radius_result_to_json(const RadiusResult &result);

std::string search_result_to_json(const SearchResult &result, int n, bool planar);

std::string settings_to_json(const std::vector<Vec3> &settings);
std::vector<Vec3> settings_from_json(const std::string &text);

std::string validation_report_to_json(const ValidationReport &report);

/// Reads a whole file as UTF-8 text; throws on I/O failure.
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &content);

} // namespace compatrad

// Copyright 2026 The elwq authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ELWQ_JSON_IO_H_
#define ELWQ_JSON_IO_H_

#include <string>
#include <vector>

#include "elwq/classifier.h"
#include "elwq/nash.h"

namespace elwq {

// --- canonical printers -------------------------------------------------

// "c0,c1,c2,c3" at full precision.
std::string quaternion_to_string(const Quaternion& q);
std::string complex_to_string(const Complex& z);
// Four comma-separated complex entries, row-major.
std::string su2_to_string(const CMat2& u);

// --- strategy (de)serialization -----------------------------------------

// {"atoms":[{"w":0.5,"q":[0,1,0,0]}, ...]}; canonical output additionally
// carries "canonical":true.
std::string strategy_to_json(const MixedStrategy& mu, int indent = -1);
std::string canonical_to_json(const CanonicalStrategy& c, int indent = -1);
// Throws std::invalid_argument on schema violations.
MixedStrategy strategy_from_json(const std::string& text);

// --- report serialization ------------------------------------------------

// {"verdict":bool,"type":[M,N],"payoffs":[a,b],"residuals":[rA,rB],
//  "top_gap":g}; non-finite gaps serialize as null. When `oracle` is
// non-null an "oracle" object is appended.
std::string nash_report_to_json(const NashReport& rep,
                                const OracleResult* oracle = nullptr,
                                int indent = -1);
std::string nash_report_to_human(const NashReport& rep);

// Header `case,params,gap,residual_a,residual_b,verdict`; params quoted.
std::string scan_to_csv(const std::vector<ScanRow>& rows);

std::string catalogue_to_json(const std::vector<CatalogueEntry>& entries,
                              int indent = -1);
std::string classification_to_json(const ClassificationReport& report,
                                   int indent = -1);

// --- literal parsing (throws std::invalid_argument) ----------------------

// Accepts basis names ("e0".."e3", optional sign), four comma-separated
// reals, or a JSON array of four numbers.
Quaternion parse_quaternion_literal(const std::string& text);
// "a", "bi", "a+bi", "a-bi" with decimal or scientific coefficients.
Complex parse_complex_literal(const std::string& text);
// Four comma-separated complex entries, row-major 2x2.
CMat2 parse_su2_entries(const std::string& text);
// JSON object with "atoms" (a full measure) or a bare quaternion literal
// (interpreted as a point measure).
MixedStrategy parse_strategy_text(const std::string& text);

}  // namespace elwq

#endif  // ELWQ_JSON_IO_H_

// Copyright 2026 The selfrecip Authors.
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

#ifndef SELFRECIP_REPORT_IO_H_
#define SELFRECIP_REPORT_IO_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "selfrecip/census.h"
#include "selfrecip/index2.h"
#include "selfrecip/recip.h"

namespace selfrecip {

// Counts are emitted as decimal strings so that values past 2^64 survive any
// JSON reader unchanged.
std::string ToDecimal(const BigInt& value);

nlohmann::json ToJson(const CensusRow& row);
// Header "q,n,j,count", one line per row.
std::string ToCsv(const std::vector<CensusRow>& rows);

// Wall-clock timings are left out so that reports are reproducible byte for
// byte.
nlohmann::json ToJson(const DegreeCheck& check);
nlohmann::json ToJson(const VerificationReport& report);

nlohmann::json ToJson(const Factorization& factorization);
// {input, max_factor, max_factor_degree, cofactor, class_breakdown, ...}
nlohmann::json ToJson(const ReciprocalReport& report);

// {k, prefix, period, preperiod, purely_periodic_flags, ...}
nlohmann::json ToJson(const KVector& k, const IndexTwoSolution& solution,
                      const PeriodicityReport& periodicity);

}  // namespace selfrecip

#endif  // SELFRECIP_REPORT_IO_H_

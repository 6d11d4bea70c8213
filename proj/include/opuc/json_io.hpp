/*
   Copyright 2026 The opuc-zeros Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "opuc/constructions.hpp"
#include "opuc/measure.hpp"
#include "opuc/prescriber.hpp"
#include "opuc/toeplitz.hpp"
#include "opuc/zerodist.hpp"

namespace opuc::io {

using json = nlohmann::json;

// Complex numbers are [re, im]; point lists are arrays of those. Decoders
// throw InvalidInput with the JSON path of the offending element.

json encode(cplx z);
json encode_points(std::span<const cplx> pts);
json encode(const MonicPoly& p);
json encode(const AlphaSeq& a);
json encode(const MomentSeq& m);
json encode(const MeasureSpec& mu);
json encode(const OrthogonalityReport& r);
json encode(const PrescriptionProblem& p);
json encode(const PrescriptionSolution& s, const PrescriptionProblem& p);
json encode(const VerifyReport& r);
json encode(const ChainPlan& plan);
json encode(const ZeroTarget& t);
json encode(const LimitSetResult& r);

cplx decode_complex(const json& j, const std::string& path = "");
std::vector<cplx> decode_points(const json& j, const std::string& path = "");
MonicPoly decode_poly(const json& j, const std::string& path = "");
AlphaSeq decode_alphas(const json& j, const std::string& path = "");
MomentSeq decode_moments(const json& j, const std::string& path = "");
MeasureSpec decode_measure(const json& j, const std::string& path = "");
ChainPlan decode_chain_plan(const json& j, const std::string& path = "");
ZeroTarget decode_target(const json& j, const std::string& path = "");
/// Problem and solution stored by `encode(solution, problem)`.
std::pair<PrescriptionProblem, PrescriptionSolution> decode_solution(const json& j, const std::string& path = "");

/// Parses inline JSON text (starting with '[' or '{') or reads a file.
json load(const std::string& text_or_path);

/// CSV with header re,im,stage,degree; 17 significant digits.
void write_clouds_csv(std::ostream& os, std::span<const ZeroCloud> clouds);
std::vector<ZeroCloud> read_clouds_csv(std::istream& is, const std::string& source = "<csv>");

}  // namespace opuc::io

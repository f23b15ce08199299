// Copyright 2023 The Authors.
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

#ifndef TROPHILB_REPORT_HPP_
#define TROPHILB_REPORT_HPP_

#include <json.hpp>

#include "trophilb/picture.hpp"
#include "trophilb/tgraph.hpp"

namespace trophilb {

inline constexpr const char* kReportSchema = "trop-hilb/1";

nlohmann::json to_json(const Matroid& m);  // {"ground", "rank", "circuits"}
nlohmann::json to_json(const std::vector<Monomial>& monomials);
nlohmann::json to_json(const Necklace& gamma);
nlohmann::json to_json(const EdgePoint& p);
nlohmann::json to_json(const TheoremCheck& c);

/// Report for one tropicalized ideal: Hilbert function, per-degree circuits
/// (drawn and omitted), both initial ideals and the cell colors.
nlohmann::json trop_report(const GradedIdeal& ideal, const Picture& picture, const TruncatedTropIdeal& t);

}  // namespace trophilb

#endif  // TROPHILB_REPORT_HPP_

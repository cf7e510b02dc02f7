/*
 *   Copyright 2026 The semirings authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Report rendering.  Two formats, both deterministic byte-for-byte:
//   lines      one key per line, nesting by two-space indentation
//   json-like  a JSON document with insertion-ordered keys
// The exact grammar is documented in the README.

#ifndef SEMIRINGS_REPORT_HPP_
#define SEMIRINGS_REPORT_HPP_

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "verify.hpp"

namespace semirings {

enum class ReportFormat { lines, json_like };

inline std::optional<ReportFormat> parse_report_format(std::string const& f) {
  if (f == "lines") {
    return ReportFormat::lines;
  }
  if (f == "json-like") {
    return ReportFormat::json_like;
  }
  return std::nullopt;
}

namespace detail {

inline char const* verdict_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::holds: return "holds";
    case Verdict::Kind::fails: return "fails";
    default: return "notApplicable";
  }
}

}  // namespace detail

inline std::string render_lines(std::vector<TheoremReport> const& reports) {
  std::ostringstream os;
  os << "report\n";
  int holds = 0, fails = 0, na = 0;
  for (auto const& rep : reports) {
    os << "instance " << rep.instance_id << '\n';
    os << "  order " << rep.order << '\n';
    os << "  quasiCompletelyRegular "
       << (rep.quasi_completely_regular ? "true" : "false") << '\n';
    os << "  quasiOrthodox " << (rep.quasi_orthodox ? "true" : "false")
       << '\n';
    os << "  completelyArchimedean "
       << (rep.completely_archimedean ? "true" : "false") << '\n';
    os << "  components " << rep.components << '\n';
    for (auto const& [t, v] : rep.results) {
      os << "  theorem " << to_string(t) << '\n';
      os << "    verdict " << detail::verdict_name(v.kind) << '\n';
      if (v.kind == Verdict::Kind::fails && !v.detail.empty()) {
        os << "    witness " << v.detail << '\n';
      } else if (v.kind == Verdict::Kind::not_applicable
                 && !v.detail.empty()) {
        os << "    reason " << v.detail << '\n';
      } else if (!v.detail.empty()) {
        os << "    note " << v.detail << '\n';
      }
    }
    for (auto const& f : rep.findings) {
      os << "  finding " << f << '\n';
    }
    holds += rep.count(Verdict::Kind::holds);
    fails += rep.count(Verdict::Kind::fails);
    na += rep.count(Verdict::Kind::not_applicable);
  }
  os << "summary\n";
  os << "  instances " << reports.size() << '\n';
  os << "  holds " << holds << '\n';
  os << "  fails " << fails << '\n';
  os << "  notApplicable " << na << '\n';
  return os.str();
}

inline std::string render_json(std::vector<TheoremReport> const& reports) {
  nlohmann::ordered_json doc;
  doc["instances"] = nlohmann::ordered_json::array();
  int holds = 0, fails = 0, na = 0;
  for (auto const& rep : reports) {
    nlohmann::ordered_json inst;
    inst["id"]    = rep.instance_id;
    inst["order"] = rep.order;
    inst["profile"] = {
        {"quasiCompletelyRegular", rep.quasi_completely_regular},
        {"quasiOrthodox", rep.quasi_orthodox},
        {"completelyArchimedean", rep.completely_archimedean},
        {"components", rep.components}};
    inst["theorems"] = nlohmann::ordered_json::array();
    for (auto const& [t, v] : rep.results) {
      nlohmann::ordered_json tv;
      tv["tag"]     = to_string(t);
      tv["verdict"] = detail::verdict_name(v.kind);
      if (v.kind == Verdict::Kind::fails && !v.detail.empty()) {
        tv["witness"] = v.detail;
      } else if (v.kind == Verdict::Kind::not_applicable
                 && !v.detail.empty()) {
        tv["reason"] = v.detail;
      } else if (!v.detail.empty()) {
        tv["note"] = v.detail;
      }
      inst["theorems"].push_back(std::move(tv));
    }
    inst["findings"] = rep.findings;
    doc["instances"].push_back(std::move(inst));
    holds += rep.count(Verdict::Kind::holds);
    fails += rep.count(Verdict::Kind::fails);
    na += rep.count(Verdict::Kind::not_applicable);
  }
  doc["summary"] = {{"instances", reports.size()},
                    {"holds", holds},
                    {"fails", fails},
                    {"notApplicable", na}};
  return doc.dump(2) + "\n";
}

inline std::string render(std::vector<TheoremReport> const& reports,
                          ReportFormat format) {
  return format == ReportFormat::lines ? render_lines(reports)
                                       : render_json(reports);
}

}  // namespace semirings

#endif  // SEMIRINGS_REPORT_HPP_

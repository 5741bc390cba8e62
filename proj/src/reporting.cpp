// Copyright 2026 The dlperf Authors
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

#include "dlperf/reporting.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"

namespace dlperf {

std::string_view to_string(Severity s) { return s == Severity::Error ? "error" : "warning"; }

std::optional<Severity> parse_severity(std::string_view s) {
  if (s == "warning") return Severity::Warning;
  if (s == "error") return Severity::Error;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Suppression markers

namespace {

constexpr std::string_view kDirective = "dlperf:";

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::vector<SuppressionMarker> parse_suppressions(const SourceUnit& unit, std::vector<Notice>& notices) {
  std::vector<SuppressionMarker> out;
  for (const Comment& c : unit.comments()) {
    std::string_view text = c.text;
    std::size_t pos = 0;
    while ((pos = text.find(kDirective, pos)) != std::string_view::npos) {
      // Must open a comment segment: `#`, optional blanks, then the directive.
      std::size_t back = pos;
      while (back > 0 && is_space(text[back - 1])) --back;
      bool anchored = back > 0 && text[back - 1] == '#';
      std::size_t start = pos;
      pos += kDirective.size();
      if (!anchored) continue;
      auto notice = [&](const std::string& msg) {
        notices.push_back({unit.display_path(), c.line, c.col + static_cast<int>(start), msg});
      };
      std::size_t p = pos;
      while (p < text.size() && is_space(text[p])) ++p;
      constexpr std::string_view kIgnore = "ignore";
      if (text.substr(p, kIgnore.size()) != kIgnore) {
        notice("unrecognized dlperf directive; expected 'dlperf: ignore' or 'dlperf: ignore[CODE,...]'");
        continue;
      }
      p += kIgnore.size();
      SuppressionMarker m;
      m.line = c.line;
      if (p < text.size() && text[p] == '[') {
        std::size_t close = text.find(']', p);
        if (close == std::string_view::npos) {
          notice("malformed suppression marker: missing ']'");
          continue;
        }
        std::string_view body = text.substr(p + 1, close - p - 1);
        bool ok = true;
        std::size_t s = 0;
        while (true) {
          std::size_t comma = body.find(',', s);
          std::string code = trim(body.substr(s, comma == std::string_view::npos ? body.npos : comma - s));
          if (code.empty()) {
            notice("malformed suppression marker: empty rule code");
            ok = false;
            break;
          }
          if (!parse_rule_code(code)) {
            notice("unknown rule code '" + code + "' in suppression marker");
            ok = false;
            break;
          }
          m.codes.insert(code);
          if (comma == std::string_view::npos) break;
          s = comma + 1;
        }
        p = close + 1;
        if (!ok) continue;
      }
      if (p < text.size() && !is_space(text[p]) && text[p] != '#') {
        // `dlperf: ignored`, `dlperf: ignore-this`: not the marker token.
        notice("unrecognized dlperf directive; expected 'dlperf: ignore' or 'dlperf: ignore[CODE,...]'");
        continue;
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Messages

std::string render_message(const RawFinding& f) {
  switch (f.rule) {
    case Rule::RNC001: {
      std::string msg = "'" + f.subject + "' is called with loop-invariant arguments inside a loop";
      if (f.loop_span) {
        msg += " (line ";
        if (!f.loop_path.empty() && f.loop_path != f.path) msg += f.loop_path + ":";
        msg += std::to_string(f.loop_span->start_line) + ")";
      }
      if (!f.via.empty()) {
        msg += " through ";
        for (std::size_t i = 0; i < f.via.size(); ++i) {
          if (i) msg += " -> ";
          msg += "'" + f.via[i] + "'";
        }
      }
      msg += "; it adds the same graph nodes on every iteration";
      return msg;
    }
    case Rule::MOB001: {
      std::string msg = "'map' is applied before '" + (f.related_method.empty() ? std::string("batch") : f.related_method) + "'";
      if (f.related_span) msg += " (line " + std::to_string(f.related_span->start_line) + ")";
      msg += ", so the mapped function runs once per element instead of once per batch";
      return msg;
    }
    case Rule::DPM001:
      return "'" + f.subject + "' is called without '" +
             (f.parallel_keyword.empty() ? std::string("num_parallel_calls") : f.parallel_keyword) +
             "', so it runs sequentially";
  }
  return {};
}

std::string render_fix_hint(const RawFinding& f) {
  switch (f.rule) {
    case Rule::RNC001:
      return "hoist the '" + f.subject + "' call out of the loop and reuse its result";
    case Rule::MOB001:
      return "call 'batch' before 'map' and make the mapped function work on whole batches";
    case Rule::DPM001:
      return "pass num_parallel_calls (for example tf.data.AUTOTUNE) to '" + f.subject + "'";
  }
  return {};
}

std::vector<Diagnostic> apply_suppressions(const std::vector<RawFinding>& findings,
                                           const std::map<std::string, const SourceUnit*>& units,
                                           std::vector<Notice>& notices,
                                           const std::map<std::string, Severity>& severities) {
  std::map<std::string, std::vector<SuppressionMarker>> markers;
  for (const auto& [path, unit] : units) markers[path] = parse_suppressions(*unit, notices);
  std::vector<Diagnostic> out;
  out.reserve(findings.size());
  for (const RawFinding& f : findings) {
    const RuleId& info = rule_info(f.rule);
    Diagnostic d;
    d.code = std::string(info.code);
    auto sev = severities.find(d.code);
    d.severity = sev == severities.end() ? Severity::Warning : sev->second;
    d.path = f.path;
    d.span = f.span;
    d.subject = f.subject;
    d.message = render_message(f);
    d.fix_hint = render_fix_hint(f);
    d.taxonomy_tag = std::string(info.taxonomy_tag);
    if (auto it = markers.find(f.path); it != markers.end()) {
      for (const auto& m : it->second) {
        bool line_ok = m.line == f.span.start_line || m.line == f.span.start_line - 1;
        if (line_ok && (m.codes.empty() || m.codes.count(d.code))) d.suppressed = true;
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

RunSummary summarize(std::vector<Diagnostic>& diags, int files_scanned, const std::vector<Notice>& notices,
                     bool show_suppressed, bool tool_error) {
  RunSummary s;
  s.files_scanned = files_scanned;
  std::set<std::string> noticed;
  for (const auto& n : notices) noticed.insert(n.path);
  s.files_with_notices = static_cast<int>(noticed.size());
  for (const auto& r : all_rules()) s.findings_per_rule[std::string(r.code)] = 0;
  s.suppressed = static_cast<int>(std::count_if(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.suppressed; }));
  if (!show_suppressed) {
    std::erase_if(diags, [](const Diagnostic& d) { return d.suppressed; });
  }
  for (const auto& d : diags) ++s.findings_per_rule[d.code];
  s.unsuppressed = static_cast<int>(diags.size()) - (show_suppressed ? s.suppressed : 0);
  s.tool_error = tool_error;
  s.exit_code = exit_code(s);
  return s;
}

int exit_code(const RunSummary& summary) {
  if (summary.tool_error) return 2;
  return summary.unsuppressed > 0 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Renderers

std::string render_text(const std::vector<Diagnostic>& diags, const RunSummary& summary,
                        const std::vector<Notice>& notices) {
  std::string out;
  for (const auto& d : diags) {
    out += d.path + ":" + std::to_string(d.span.start_line) + ":" + std::to_string(d.span.start_col) + ": " + d.code +
           " " + d.message;
    if (d.suppressed) out += " [suppressed]";
    out += "\n    hint: " + d.fix_hint + "\n";
  }
  for (const auto& n : notices) {
    out += n.path + ":" + std::to_string(n.line) + ":" + std::to_string(n.col) + ": notice: " + n.message + "\n";
  }
  int total = 0;
  for (const auto& [code, n] : summary.findings_per_rule) total += n;
  out += "\nfiles scanned: " + std::to_string(summary.files_scanned) + "\n";
  out += "files with notices: " + std::to_string(summary.files_with_notices) + "\n";
  for (const auto& [code, n] : summary.findings_per_rule) out += code + ": " + std::to_string(n) + "\n";
  out += "total: " + std::to_string(total) + "\n";
  out += "unsuppressed: " + std::to_string(summary.unsuppressed) + "\n";
  out += "suppressed: " + std::to_string(summary.suppressed) + "\n";
  return out;
}

std::string render_json(const std::vector<Diagnostic>& diags, const RunSummary& summary,
                        const std::vector<Notice>& notices) {
  using nlohmann::json;
  json list = json::array();
  for (const auto& d : diags) {
    list.push_back({
        {"code", d.code},
        {"severity", std::string(to_string(d.severity))},
        {"path", d.path},
        {"span",
         {{"start_line", d.span.start_line},
          {"start_col", d.span.start_col},
          {"end_line", d.span.end_line},
          {"end_col", d.span.end_col}}},
        {"subject", d.subject},
        {"message", d.message},
        {"fix_hint", d.fix_hint},
        {"taxonomy_tag", d.taxonomy_tag},
        {"suppressed", d.suppressed},
    });
  }
  json notes = json::array();
  for (const auto& n : notices) {
    notes.push_back({{"path", n.path}, {"line", n.line}, {"col", n.col}, {"message", n.message}});
  }
  json doc = {
      {"version", "1"},
      {"diagnostics", list},
      {"notices", notes},
      {"summary",
       {{"files_scanned", summary.files_scanned},
        {"files_with_notices", summary.files_with_notices},
        {"findings_per_rule", summary.findings_per_rule},
        {"suppressed", summary.suppressed},
        {"unsuppressed", summary.unsuppressed},
        {"exit_code", summary.exit_code}}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace dlperf

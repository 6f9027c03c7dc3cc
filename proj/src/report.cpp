#include "hemicert/report.hpp"

#include <cstdio>

namespace hemicert {

std::string real_str(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json json_verdict(Verdict v) { return Json(verdict_name(v)); }

Report::Report() {
  doc["schema_version"] = 1;
  doc["tool"] = "hemicert";
}

void Report::set_overall(Verdict v) { doc["overall_verdict"] = verdict_name(v); }

std::string Report::to_json() const { return doc.dump(2) + "\n"; }

Report Report::from_json(const std::string& text) {
  Report r;
  r.doc = Json::parse(text);
  return r;
}

namespace {

void render(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, val] : j.items()) {
      if (val.is_object() || val.is_array()) {
        out += "\n### " + (prefix.empty() ? key : prefix + "." + key) + "\n\n";
        render(val, prefix.empty() ? key : prefix + "." + key, out);
      } else {
        out += "- **" + key + "**: " + (val.is_string() ? val.get<std::string>() : val.dump()) + "\n";
      }
    }
  } else if (j.is_array()) {
    int idx = 0;
    for (const auto& val : j) {
      out += "\n#### " + prefix + "[" + std::to_string(idx++) + "]\n\n";
      render(val, prefix, out);
    }
  }
}

}  // namespace

std::string Report::to_markdown() const {
  std::string out = "# hemicert report\n";
  render(doc, "", out);
  return out;
}

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::Certified: return 0;
    case Verdict::Falsified: return 1;
    case Verdict::Inconclusive: return 2;
  }
  return 2;
}

}  // namespace hemicert

#pragma once

#include <string>

#include <json.hpp>

#include "hemicert/verdict.hpp"

namespace hemicert {

using Json = nlohmann::ordered_json;

/// Reals in reports are serialized as decimal strings with 17 significant
/// digits so that parse -> re-emit round-trips byte-identically.
std::string real_str(double v);

Json json_verdict(Verdict v);

struct Report {
  Json doc;
  Report();
  void set_overall(Verdict v);
  std::string to_json() const;          // pretty, stable field order
  std::string to_markdown() const;      // human rendering
  static Report from_json(const std::string& text);
};

/// 0 certified, 1 falsified, 2 inconclusive (3 = I/O error at call sites).
int exit_code_for(Verdict v);

}  // namespace hemicert

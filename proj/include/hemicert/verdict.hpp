#pragma once

namespace hemicert {

enum class Verdict { Certified, Falsified, Inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "CERTIFIED";
    case Verdict::Falsified: return "FALSIFIED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

}  // namespace hemicert

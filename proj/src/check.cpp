#include "associoid/check.hpp"

namespace associoid {

const char* law_name(LawKind law) {
  switch (law) {
    case LawKind::kParaAssociativity: return "PA";
    case LawKind::kIdempotent: return "IP";
    case LawKind::kChaslesLeft: return "Chasles-left";
    case LawKind::kChaslesRight: return "Chasles-right";
    case LawKind::kSymmetry: return "Symmetry";
    case LawKind::kConditionC: return "ConditionC";
  }
  return "?";
}

std::string TernaryLawReport::summary() const {
  std::string s = law_name(law);
  s += holds ? ": ok" : ": FAIL";
  s += exhaustive ? " (exhaustive, " : " (sampled, ";
  s += std::to_string(checked) + " instances";
  if (!exhaustive) s += ", seed " + std::to_string(seed);
  s += ")";
  if (!holds && witness) s += " witness: " + witness->text;
  return s;
}

}  // namespace associoid

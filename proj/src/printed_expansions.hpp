#pragma once

// Expansions as printed in the source derivation, transcribed verbatim.
// They are expectations for spot checks only; every certificate is rebuilt
// from its defining formulas before being compared against these.

#include <span>

namespace gammaext::printed {

struct Term {
  unsigned power;
  const char* coefficient;
};

extern const std::span<const Term> kSmallAlphaI;
extern const std::span<const Term> kSmallAlphaQ;
extern const std::span<const Term> kCase2JNumerator;
extern const std::span<const Term> kFPlusOver2w;
extern const std::span<const Term> kGPlus;
extern const std::span<const Term> kHPlusOverW;
extern const std::span<const Term> kIPlus;
extern const std::span<const Term> kFMinusOverMinus2w;
extern const std::span<const Term> kGMinus;
extern const std::span<const Term> kHMinusOverW;
extern const std::span<const Term> kIMinus;
extern const std::span<const Term> kVPlus;
extern const std::span<const Term> kVMinus;

}  // namespace gammaext::printed

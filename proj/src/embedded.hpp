// Data files compiled into the library (generated at configure time).
#pragma once

#include <string_view>

namespace owlverb::embedded {

extern const std::string_view kIrregularVerbs;
extern const std::string_view kIrregularNouns;

extern const std::string_view kSimpleFragmentOmn;
extern const std::string_view kSimpleFragmentLex;
extern const std::string_view kSimpleFragmentGolden;
extern const std::string_view kSimpleFragmentProvenance;
extern const std::string_view kMiniUniversityOmn;
extern const std::string_view kMiniUniversityLex;
extern const std::string_view kMiniUniversityGolden;
extern const std::string_view kMiniUniversityProvenance;

}  // namespace owlverb::embedded

// Copyright 2026 The kindc Authors
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

// Names of the base kinds that kinded components are built from.

#ifndef KINDC_VOCABULARY_H_
#define KINDC_VOCABULARY_H_

#include <string_view>

namespace kindc::vocab {

inline constexpr std::string_view kSemanticComponent = "SemanticComponent";
inline constexpr std::string_view kProvides = "Provides";
inline constexpr std::string_view kRequires = "Requires";
// Canonical kind of both Provides and Requires.
inline constexpr std::string_view kInterface = "Interface";
inline constexpr std::string_view kMethod = "Method";
inline constexpr std::string_view kParameterSet = "ParameterSet";
inline constexpr std::string_view kParameter = "Parameter";
inline constexpr std::string_view kTypeName = "TypeName";
inline constexpr std::string_view kIdentifier = "Identifier";
inline constexpr std::string_view kReturnType = "ReturnType";

// Annotation kinds: encoded in the context but left out of canonical forms.
inline constexpr std::string_view kPrecondition = "Precondition";
inline constexpr std::string_view kCallGuarantee = "CallGuarantee";
inline constexpr std::string_view kPostcondition = "Postcondition";
inline constexpr std::string_view kConcurrencySemantics =
    "ConcurrencySemantics";
inline constexpr std::string_view kSemanticProperty = "SemanticProperty";

inline constexpr std::string_view kVoid = "void";

inline bool IsAnnotationKind(std::string_view kind) {
  return kind == kPrecondition || kind == kCallGuarantee ||
         kind == kPostcondition || kind == kConcurrencySemantics ||
         kind == kSemanticProperty;
}

// Kinds whose parts must all be accounted for when one asset is matched
// inside another: a call has to supply every parameter.
inline bool IsClosedKind(std::string_view kind) {
  return kind == kParameterSet;
}

}  // namespace kindc::vocab

#endif  // KINDC_VOCABULARY_H_

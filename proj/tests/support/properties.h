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

// Property checks shared by the unit tests and the acceptance binary.

#ifndef KINDC_TESTS_SUPPORT_PROPERTIES_H_
#define KINDC_TESTS_SUPPORT_PROPERTIES_H_

#include <cstdint>
#include <string>
#include <vector>

namespace kindc::testing {

struct PropertyReport {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> counterexamples;  // first few only
  // Cases where the relation under test held non-trivially.
  int positives = 0;

  void Pass() { ++cases; }
  void Fail(const std::string& what);
  bool ok() const { return cases > 0 && failures == 0; }
  std::string Summary() const;
};

// Containment agrees with exhaustive search and always yields a bridge.
PropertyReport CheckTheoremWitness(std::uint32_t seed, int cases);

// Decidable pairs agree with exhaustive evaluation; out-of-fragment pairs
// are undecidable.
PropertyReport CheckImplicationAgreement(std::uint32_t seed, int cases);
PropertyReport CheckImplicationOutOfFragment(std::uint32_t seed, int cases);
// Reflexivity and transitivity over random triples.
PropertyReport CheckImplicationLaws(std::uint32_t seed, int cases);

PropertyReport CheckClosureIdempotence(std::uint32_t seed, int cases);
PropertyReport CheckClosureMonotonicity(std::uint32_t seed, int cases);
PropertyReport CheckCanonicalIdempotence(std::uint32_t seed, int cases);
PropertyReport CheckFullEquivalenceRelation(std::uint32_t seed, int cases);
PropertyReport CheckPartialEquivalenceTransitivity(std::uint32_t seed,
                                                   int cases);
PropertyReport CheckInheritanceAsymmetry(std::uint32_t seed, int cases);

PropertyReport CheckSidlRoundTrip(std::uint32_t seed, int cases);
PropertyReport CheckKbRoundTrip(std::uint32_t seed, int cases);

}  // namespace kindc::testing

#endif  // KINDC_TESTS_SUPPORT_PROPERTIES_H_

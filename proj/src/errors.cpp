/*
   Copyright 2026 the ffdp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ffdp/errors.hpp"

namespace ffdp {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::MixedFieldContexts: return "MixedFieldContexts";
        case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case Errc::ConstantPolynomial: return "ConstantPolynomial";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
        case Errc::RamifiedRing: return "RamifiedRing";
        case Errc::ComponentDegreeOverflow: return "ComponentDegreeOverflow";
        case Errc::ZeroInField: return "ZeroInField";
        case Errc::ZeroConductor: return "ZeroConductor";
        case Errc::NonMonicConductor: return "NonMonicConductor";
        case Errc::InexactDivision: return "InexactDivision";
        case Errc::RamifiedModulus: return "RamifiedModulus";
        case Errc::UnsupportedModulusDegree: return "UnsupportedModulusDegree";
        case Errc::NotAUnit: return "NotAUnit";
        case Errc::NotASubgroup: return "NotASubgroup";
        case Errc::InvalidNoiseRate: return "InvalidNoiseRate";
        case Errc::WeightOutOfRange: return "WeightOutOfRange";
        case Errc::MaxTriesExceeded: return "MaxTriesExceeded";
        case Errc::NonCoprimeOrder: return "NonCoprimeOrder";
        case Errc::InvalidParameters: return "InvalidParameters";
        case Errc::NoGuessAccepted: return "NoGuessAccepted";
        case Errc::MultipleGuessesAccepted: return "MultipleGuessesAccepted";
        case Errc::SecretNotFound: return "SecretNotFound";
        case Errc::RingTooLarge: return "RingTooLarge";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace ffdp

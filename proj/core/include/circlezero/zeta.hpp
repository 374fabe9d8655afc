/*
   Copyright 2026 The circlezero Authors

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


#ifndef CIRCLEZERO_ZETA_HPP
#define CIRCLEZERO_ZETA_HPP

#include "circlezero/enclosure.hpp"

namespace circlezero::precision {

/// zeta(s) for an integer s >= 2.
RealEnclosure zeta_value(long s, Bits bits);
/// zeta(s) for odd s >= 3; throws std::domain_error otherwise.
RealEnclosure zeta_odd(long s, Bits bits);
/// lambda_k = zeta(2k-1) / pi^{2k-1}, k >= 2.
RealEnclosure lambda_k(long k, Bits bits);

}  // namespace circlezero::precision

#endif  // CIRCLEZERO_ZETA_HPP

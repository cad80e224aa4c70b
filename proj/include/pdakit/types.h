/*
 * Copyright 2026 The pdakit Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PDAKIT_TYPES_H_
#define PDAKIT_TYPES_H_

#include <vector>

namespace pdakit {

// Public participant identifier. Real users are 1..n.
using PartyId = int;
using PartySet = std::vector<PartyId>;

}  // namespace pdakit

#endif  // PDAKIT_TYPES_H_

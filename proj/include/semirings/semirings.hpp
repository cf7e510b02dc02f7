/*
 *   Copyright 2026 The semirings authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEMIRINGS_SEMIRINGS_HPP_
#define SEMIRINGS_SEMIRINGS_HPP_

#include "congruences.hpp"
#include "core.hpp"
#include "elements.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "io.hpp"
#include "relations.hpp"
#include "report.hpp"
#include "structures.hpp"
#include "verify.hpp"

#endif  // SEMIRINGS_SEMIRINGS_HPP_

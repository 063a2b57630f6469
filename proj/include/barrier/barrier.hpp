// Copyright 2026 The Barrier Coverage Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header for the barrier coverage library.

#ifndef BARRIER_BARRIER_HPP_
#define BARRIER_BARRIER_HPP_

#include "barrier/errors.hpp"
#include "barrier/exact.hpp"
#include "barrier/generators.hpp"
#include "barrier/harness.hpp"
#include "barrier/io.hpp"
#include "barrier/model.hpp"
#include "barrier/order_dp.hpp"
#include "barrier/rational.hpp"
#include "barrier/untangle.hpp"

#endif  // BARRIER_BARRIER_HPP_

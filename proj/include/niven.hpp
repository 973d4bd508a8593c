// Copyright 2026 The niven Authors
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

// Umbrella header.

#pragma once

#include "niven/arith.hpp"
#include "niven/cheb.hpp"
#include "niven/classification.hpp"
#include "niven/cyclotomic.hpp"
#include "niven/numeric.hpp"
#include "niven/poly.hpp"
#include "niven/radical.hpp"
#include "niven/survey.hpp"
#include "niven/tangent.hpp"
#include "niven/trig_minpoly.hpp"
#include "niven/verify.hpp"

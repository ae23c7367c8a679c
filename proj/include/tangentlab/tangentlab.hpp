// Copyright 2026 The tangentlab Authors
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

#pragma once

/// @file tangentlab.hpp
/// @brief Umbrella header for the library (the CLI front end is cli.hpp).

#include "tangentlab/functor_core.hpp"
#include "tangentlab/orbit_space.hpp"
#include "tangentlab/polynomial.hpp"
#include "tangentlab/quad_field.hpp"
#include "tangentlab/report.hpp"
#include "tangentlab/torus.hpp"

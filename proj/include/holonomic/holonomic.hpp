// Copyright 2026 The Holonomic Authors
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

// Umbrella header for the library. Configuration and JSON reports live in
// config.hpp and reports.hpp.

#pragma once

#include "holonomic/errors.hpp"
#include "holonomic/graph.hpp"
#include "holonomic/mane.hpp"
#include "holonomic/node_function.hpp"
#include "holonomic/optimization.hpp"
#include "holonomic/oracle.hpp"
#include "holonomic/potential.hpp"
#include "holonomic/rational.hpp"
#include "holonomic/simplex.hpp"
#include "holonomic/subaction.hpp"
#include "holonomic/symbolic.hpp"

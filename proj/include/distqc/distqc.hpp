// Copyright 2026 The distqc Authors
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

#ifndef DISTQC_DISTQC_HPP
#define DISTQC_DISTQC_HPP

#include "distqc/bench.hpp"
#include "distqc/circuit.hpp"
#include "distqc/commodity.hpp"
#include "distqc/common.hpp"
#include "distqc/compile.hpp"
#include "distqc/flow_compiler.hpp"
#include "distqc/json_io.hpp"
#include "distqc/netmodel.hpp"
#include "distqc/pauli.hpp"
#include "distqc/pauli_pushing.hpp"
#include "distqc/stab_sim.hpp"
#include "distqc/steiner.hpp"
#include "distqc/telegate.hpp"
#include "distqc/verify.hpp"

#endif  // DISTQC_DISTQC_HPP

// Copyright 2026 The listcap Authors
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

#pragma once

// Umbrella header for the whole library.

#include "listcap/capacity.hpp"
#include "listcap/channel.hpp"
#include "listcap/cli.hpp"
#include "listcap/code.hpp"
#include "listcap/code_eval.hpp"
#include "listcap/density.hpp"
#include "listcap/divergence.hpp"
#include "listcap/errors.hpp"
#include "listcap/exact_mean.hpp"
#include "listcap/io.hpp"
#include "listcap/mc.hpp"
#include "listcap/prob.hpp"
#include "listcap/renyi.hpp"
#include "listcap/rng.hpp"
#include "listcap/rst.hpp"
#include "listcap/state.hpp"
#include "listcap/sweep.hpp"
#include "listcap/words.hpp"

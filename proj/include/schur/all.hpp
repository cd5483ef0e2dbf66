// Copyright 2026 The schurkit Authors
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

#include "schur/classify.hpp"
#include "schur/constructions.hpp"
#include "schur/enumerate.hpp"
#include "schur/error.hpp"
#include "schur/finite_group.hpp"
#include "schur/group.hpp"
#include "schur/group_ring.hpp"
#include "schur/json.hpp"
#include "schur/lemmas.hpp"
#include "schur/presentation.hpp"
#include "schur/rational.hpp"
#include "schur/schur.hpp"
#include "schur/verify.hpp"

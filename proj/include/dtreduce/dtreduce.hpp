// Copyright 2026 The dtreduce Authors
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

#include "dtreduce/canonical.hpp"
#include "dtreduce/conformance.hpp"
#include "dtreduce/enumerator.hpp"
#include "dtreduce/graph.hpp"
#include "dtreduce/graph6.hpp"
#include "dtreduce/isomorphism.hpp"
#include "dtreduce/levels.hpp"
#include "dtreduce/pixels.hpp"
#include "dtreduce/reducer.hpp"
#include "dtreduce/solutions.hpp"

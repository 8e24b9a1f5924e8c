// Copyright 2026 The timedh Authors
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

#ifndef TIMEDH_HPP
#define TIMEDH_HPP

#include "timedh/aging.hpp"
#include "timedh/error.hpp"
#include "timedh/indices.hpp"
#include "timedh/ingest.hpp"
#include "timedh/model.hpp"
#include "timedh/rational.hpp"
#include "timedh/table.hpp"

#endif  // TIMEDH_HPP

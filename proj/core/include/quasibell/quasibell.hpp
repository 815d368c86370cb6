// Copyright 2026 The quasibell Authors
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

#ifndef QUASIBELL_QUASIBELL_HPP_
#define QUASIBELL_QUASIBELL_HPP_

#include "quasibell/constructions.hpp"
#include "quasibell/errors.hpp"
#include "quasibell/inequalities.hpp"
#include "quasibell/io.hpp"
#include "quasibell/model.hpp"
#include "quasibell/oracle/enumeration.hpp"
#include "quasibell/oracle/lp.hpp"
#include "quasibell/oracle/quantum.hpp"
#include "quasibell/oracle/sampling.hpp"
#include "quasibell/oracle/simplex.hpp"
#include "quasibell/witnesses.hpp"

#endif  // QUASIBELL_QUASIBELL_HPP_

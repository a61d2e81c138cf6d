/*
   Copyright 2026 The unf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "unf/check_report.hpp"
#include "unf/corpus.hpp"
#include "unf/io.hpp"
#include "unf/jordan_chevalley.hpp"
#include "unf/matrix.hpp"
#include "unf/poly.hpp"
#include "unf/rational.hpp"
#include "unf/semisimple.hpp"
#include "unf/subspace.hpp"
#include "unf/uniform.hpp"
#include "unf/young.hpp"

/*
   Copyright 2026 The pideal Authors

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

#ifndef PIDEAL_PIDEAL_HPP
#define PIDEAL_PIDEAL_HPP

#include "bigint.hpp"
#include "factor.hpp"
#include "frobenius.hpp"
#include "ideals.hpp"
#include "lifting.hpp"
#include "matrix.hpp"
#include "pminpoly.hpp"
#include "poly.hpp"
#include "snf.hpp"

#endif  // PIDEAL_PIDEAL_HPP

// Copyright (c) 2026 qlambert contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

// Umbrella header.

#include "series.hpp"    // IWYU pragma: export
#include "divisor.hpp"   // IWYU pragma: export
#include "builders.hpp"  // IWYU pragma: export
#include "verify.hpp"    // IWYU pragma: export
#include "io.hpp"        // IWYU pragma: export

// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include "conicmod/conic.hpp"
#include "conicmod/error.hpp"
#include "conicmod/gausssum.hpp"
#include "conicmod/group.hpp"
#include "conicmod/indexmap.hpp"
#include "conicmod/modarith.hpp"
#include "conicmod/symbols.hpp"

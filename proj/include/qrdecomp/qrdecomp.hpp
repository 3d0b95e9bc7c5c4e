// Copyright 2026 The qrdecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qrdecomp/bounds.hpp"
#include "qrdecomp/certificate_io.hpp"
#include "qrdecomp/char_analysis.hpp"
#include "qrdecomp/decomp_search.hpp"
#include "qrdecomp/element_set.hpp"
#include "qrdecomp/error.hpp"
#include "qrdecomp/field.hpp"
#include "qrdecomp/field_cache.hpp"
#include "qrdecomp/rng.hpp"
#include "qrdecomp/set_kernel.hpp"

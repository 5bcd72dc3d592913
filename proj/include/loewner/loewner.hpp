// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef LOEWNER_LOEWNER_HPP
#define LOEWNER_LOEWNER_HPP

#include "loewner/analysis.hpp"
#include "loewner/dataset.hpp"
#include "loewner/descriptor_system.hpp"
#include "loewner/errors.hpp"
#include "loewner/kernels.hpp"
#include "loewner/partition.hpp"
#include "loewner/pencil.hpp"

#endif  // LOEWNER_LOEWNER_HPP

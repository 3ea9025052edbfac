// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qfrac/context.hpp"
#include "qfrac/exprparse.hpp"
#include "qfrac/identities.hpp"
#include "qfrac/jackson.hpp"
#include "qfrac/operators.hpp"
#include "qfrac/qcore.hpp"
#include "qfrac/truncation.hpp"

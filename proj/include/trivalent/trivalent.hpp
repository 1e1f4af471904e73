#pragma once

#include "trivalent/error.hpp"
#include "trivalent/diagram.hpp"
#include "trivalent/canonical.hpp"
#include "trivalent/masked_stack.hpp"
#include "trivalent/generator.hpp"
#include "trivalent/quotient.hpp"
#include "trivalent/series.hpp"

#pragma once

#include "freegroup/error.hpp"
#include "freegroup/expression.hpp"
#include "freegroup/random.hpp"
#include "freegroup/text_io.hpp"
#include "freegroup/vectorized.hpp"
#include "freegroup/word.hpp"

#pragma once

#include "cycode/code.hpp"
#include "cycode/code_io.hpp"
#include "cycode/cycle_index.hpp"
#include "cycode/enumerators.hpp"
#include "cycode/errors.hpp"
#include "cycode/integer.hpp"
#include "cycode/polynomial.hpp"
#include "cycode/ring.hpp"
#include "cycode/verify.hpp"

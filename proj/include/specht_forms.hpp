#pragma once

#include "specht/integer.hpp"
#include "specht/matrix.hpp"
#include "specht/combinatorics.hpp"
#include "specht/linalg.hpp"
#include "specht/fp.hpp"
#include "specht/specht.hpp"
#include "specht/modrep.hpp"
#include "specht/forms.hpp"
#include "specht/verify.hpp"

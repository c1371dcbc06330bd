#pragma once

#include "hlcbs/exact/bigfloat.hpp"
#include "hlcbs/exact/bipoly.hpp"
#include "hlcbs/exact/piext.hpp"
#include "hlcbs/exact/rational.hpp"
#include "hlcbs/exact/unipoly.hpp"

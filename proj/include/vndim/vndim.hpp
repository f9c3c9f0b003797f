#pragma once

#include "vndim/error.hpp"
#include "vndim/rational.hpp"
#include "vndim/pi_rational.hpp"
#include "vndim/fuchsian.hpp"
#include "vndim/factor.hpp"
#include "vndim/finite_field.hpp"
#include "vndim/padic.hpp"
#include "vndim/format.hpp"
#include "vndim/tables.hpp"

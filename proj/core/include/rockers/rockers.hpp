#pragma once

#include "rockers/asymptotics.hpp"
#include "rockers/bounds.hpp"
#include "rockers/core.hpp"
#include "rockers/errors.hpp"
#include "rockers/log_value.hpp"
#include "rockers/natural.hpp"
#include "rockers/precision.hpp"
#include "rockers/rational.hpp"
#include "rockers/summation.hpp"

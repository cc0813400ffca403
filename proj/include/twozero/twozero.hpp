#pragma once

#include "twozero/bigint.hpp"
#include "twozero/codes.hpp"
#include "twozero/errors.hpp"
#include "twozero/gf.hpp"
#include "twozero/params.hpp"
#include "twozero/report.hpp"
#include "twozero/sw.hpp"
#include "twozero/verify.hpp"
#include "twozero/weights.hpp"

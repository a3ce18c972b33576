#pragma once

#include "sgame/coalition.hpp"
#include "sgame/convert.hpp"
#include "sgame/cross_validate.hpp"
#include "sgame/error.hpp"
#include "sgame/json_io.hpp"
#include "sgame/lp.hpp"
#include "sgame/oracle.hpp"
#include "sgame/realization.hpp"
#include "sgame/recognize.hpp"
#include "sgame/reductions.hpp"
#include "sgame/succinct.hpp"
#include "sgame/verdict.hpp"
#include "sgame/weighted.hpp"

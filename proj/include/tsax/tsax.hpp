#pragma once

#include "tsax/breakpoints.hpp"
#include "tsax/classify.hpp"
#include "tsax/distance.hpp"
#include "tsax/errors.hpp"
#include "tsax/normal.hpp"
#include "tsax/paa.hpp"
#include "tsax/representation.hpp"
#include "tsax/rle.hpp"
#include "tsax/sax.hpp"
#include "tsax/serialize.hpp"
#include "tsax/series.hpp"
#include "tsax/synthetic.hpp"
#include "tsax/trend.hpp"
#include "tsax/ucr.hpp"

#pragma once

#include "subsetconv/combi.hpp"
#include "subsetconv/counting.hpp"
#include "subsetconv/error.hpp"
#include "subsetconv/hyper.hpp"
#include "subsetconv/io.hpp"
#include "subsetconv/mask.hpp"
#include "subsetconv/optimize.hpp"
#include "subsetconv/oracle.hpp"
#include "subsetconv/products.hpp"
#include "subsetconv/ring.hpp"
#include "subsetconv/set_function.hpp"
#include "subsetconv/steiner.hpp"
#include "subsetconv/transform.hpp"
